"""Exception types and resource bounds shared by the whole package."""

from __future__ import annotations

import os

ELEMENT_BOUND_ENV = "SUBEMBED_ELEMENT_BOUND"
SUBGROUP_BOUND_ENV = "SUBEMBED_SUBGROUP_BOUND"

DEFAULT_ELEMENT_BOUND = 1_000_000
DEFAULT_SUBGROUP_BOUND = 2000


class SubembedError(Exception):
    """Base class for every error raised by this package."""


class InputError(SubembedError, ValueError):
    """Malformed or inconsistent input (degree mismatch, non-prime, ...)."""


class ResourceError(SubembedError, RuntimeError):
    """A configured enumeration bound would be exceeded."""

    def __init__(self, what: str, size: int, bound: int, knob: str | None = None):
        self.what = what
        self.size = size
        self.bound = bound
        self.knob = knob
        hint = f" (raise it via {knob})" if knob else " (fixed limit)"
        super().__init__(f"{what}: size {size} exceeds bound {bound}{hint}")


class DataError(SubembedError, RuntimeError):
    """Bundled data failed an integrity check (checksum or order assertion)."""


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{name} must be positive, got {value}")
    return value


def element_bound(bound: int | None = None) -> int:
    """Largest group order that may be enumerated element by element."""
    if bound is not None:
        return bound
    return _env_int(ELEMENT_BOUND_ENV, DEFAULT_ELEMENT_BOUND)


def subgroup_bound(bound: int | None = None) -> int:
    """Largest group order whose full subgroup lattice may be built."""
    if bound is not None:
        return bound
    return _env_int(SUBGROUP_BOUND_ENV, DEFAULT_SUBGROUP_BOUND)


def check_element_bound(size: int, what: str, bound: int | None = None) -> None:
    limit = element_bound(bound)
    if size > limit:
        raise ResourceError(what, size, limit, ELEMENT_BOUND_ENV)


def check_subgroup_bound(size: int, what: str, bound: int | None = None) -> None:
    limit = subgroup_bound(bound)
    if size > limit:
        raise ResourceError(what, size, limit, SUBGROUP_BOUND_ENV)
