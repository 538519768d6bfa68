from __future__ import annotations

import pytest
from hypothesis import settings

from subembed import PermGroup
from subembed.catalog import construct

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def S4() -> PermGroup:
    return construct("S4")


@pytest.fixture(scope="session")
def A4() -> PermGroup:
    return construct("A4")


@pytest.fixture(scope="session")
def A5() -> PermGroup:
    return construct("A5")


@pytest.fixture(scope="session")
def X54() -> PermGroup:
    return construct("X54")
