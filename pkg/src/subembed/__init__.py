"""Subgroup embedding predicates on finite permutation groups."""

from .errors import DataError, InputError, ResourceError, SubembedError
from .group import PermGroup, classify_flags, contains, elements, group_from_generators, order
from .perm import Permutation

__all__ = [
    "DataError",
    "InputError",
    "PermGroup",
    "Permutation",
    "ResourceError",
    "SubembedError",
    "classify_flags",
    "contains",
    "elements",
    "group_from_generators",
    "order",
]

__version__ = "0.1.0"
