from __future__ import annotations

from hypothesis import strategies as st

from subembed import PermGroup, Permutation


def perm(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


def group(degree: int, *gens: str) -> PermGroup:
    return PermGroup(degree, [Permutation.parse(g, degree) for g in gens])


def permutations(degree: int):
    return st.permutations(list(range(degree))).map(lambda xs: Permutation(xs))


def generator_lists(degree: int, max_size: int = 3):
    return st.lists(permutations(degree), min_size=0, max_size=max_size)
