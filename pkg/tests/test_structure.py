from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subembed import InputError, PermGroup, Permutation
from subembed import oracles as O
from subembed.catalog import construct, x54_named_elements
from subembed.numtheory import p_part, prime_factors
from subembed.structure import (
    StructureCache,
    fitting,
    frobenius_complement,
    induces_frobenius_automorphism,
    is_frobenius_group,
    is_frobenius_with_complement,
    is_p_nilpotent,
    is_p_solvable,
    is_solvable,
    o_p,
    o_p_prime,
    solvable_radical,
    sylow_subgroup,
)
from subembed.subgroups import coset_action, is_normal, normalizer

from .helpers import group, perm


def elems(H: PermGroup) -> frozenset:
    return frozenset(g.images for g in H.elements())


def sl23() -> PermGroup:
    """SL(2,3) acting on the eight nonzero vectors of GF(3)^2."""
    vectors = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]

    def act(m):
        (a, b), (c, d) = m
        return Permutation([vectors.index(((a * x + b * y) % 3, (c * x + d * y) % 3)) for x, y in vectors])

    return PermGroup(8, [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))])


@pytest.mark.parametrize("name", ["S4", "A5", "X54", "F21", "L2_17", "S4xA5"])
def test_sylow_orders(name):
    G = construct(name)
    for p in prime_factors(G.order):
        P = sylow_subgroup(G, p)
        assert P.order == p_part(G.order, p)
        assert P.is_subgroup_of(G)


def test_sylow_from_start(S4):
    start = group(4, "(1,2)(3,4)")
    P = sylow_subgroup(S4, 2, start=start)
    assert P.order == 8 and start.is_subgroup_of(P)
    assert sylow_subgroup(S4, 5).order == 1
    with pytest.raises(InputError):
        sylow_subgroup(S4, 2, start=group(4, "(1,2,3)"))
    with pytest.raises(InputError):
        sylow_subgroup(S4, 4)


def test_o_p_examples(S4, A4, A5, X54):
    V4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    assert o_p(S4, 2) == V4
    assert o_p(S4, 3).order == 1
    assert o_p(A5, 2).order == 1
    assert o_p_prime(S4, 2).order == 1
    assert o_p_prime(S4, 3) == V4
    assert o_p_prime(A4, 5) == A4
    assert o_p(X54, 3).order == 27
    assert o_p_prime(construct("F21"), 3).order == 7


def test_radical_and_fitting(S4, A5):
    assert solvable_radical(S4) == S4
    assert solvable_radical(A5).order == 1
    assert solvable_radical(construct("S4xA5")).order == 24
    assert fitting(S4).order == 4
    assert fitting(construct("X54")).order == 27
    assert fitting(construct("F21")).order == 7


def test_solvability(S4, A5):
    assert is_solvable(S4) and not is_solvable(A5)
    assert is_p_solvable(A5, 7)
    assert not is_p_solvable(A5, 5)
    assert is_p_solvable(construct("S4xA5"), 7)
    assert not is_p_solvable(construct("S4xA5"), 2)
    assert is_p_solvable(construct("U3_3"), 5)
    assert not is_p_solvable(construct("U3_3"), 3)


def test_p_nilpotent(S4):
    assert not is_p_nilpotent(S4, 2)
    assert not is_p_nilpotent(S4, 3)
    assert is_p_nilpotent(construct("A4"), 3)
    assert is_p_nilpotent(construct("F21"), 3)
    assert is_p_nilpotent(sl23(), 3)
    assert not is_p_nilpotent(sl23(), 2)


def test_frobenius_examples(S4):
    assert is_frobenius_group(construct("S3"))
    assert is_frobenius_group(construct("A4"))
    assert is_frobenius_group(construct("F21"))
    assert not is_frobenius_group(S4)
    assert not is_frobenius_group(construct("V4"))
    assert not is_frobenius_group(sl23())
    C = frobenius_complement(construct("F21"))
    assert C.order == 3
    assert is_frobenius_with_complement(construct("A4"), group(4, "(1,2,3)"))
    assert not is_frobenius_with_complement(S4, group(4, "(1,2)", "(1,2,3)"))
    with pytest.raises(InputError):
        is_frobenius_with_complement(construct("A4"), group(4, "(1,2)"))


def test_x54_pair_subgroups_are_frobenius(X54):
    named = x54_named_elements()
    a = named["a"]
    H = PermGroup(54, [a])
    for g in X54.elements():
        K = PermGroup(54, [a, a.conjugate(g)])
        if K.order == 6:
            assert is_frobenius_with_complement(K, H)


def test_induces_frobenius_automorphism(S4, A4):
    V4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    assert induces_frobenius_automorphism(A4, perm("(1,2,3)", 4), V4)
    assert not induces_frobenius_automorphism(S4, perm("(1,2)", 4), V4)
    assert induces_frobenius_automorphism(S4, perm("(1,2)(3,4)", 4), PermGroup.trivial(4))
    assert not induces_frobenius_automorphism(S4, perm("(1,2,3,4)", 4), V4)
    with pytest.raises(InputError):
        induces_frobenius_automorphism(S4, perm("(1,2)", 4), group(4, "(1,3)"))


def test_structure_cache(S4):
    cache = StructureCache(S4)
    assert cache.sylow(2) is cache.sylow(2)
    assert cache.o_p(2) == o_p(S4, 2)
    assert cache.o_p_prime(3) == o_p_prime(S4, 3)
    assert cache.radical() == S4
    assert cache.fitting() == fitting(S4)
    assert [H.order for H in cache.derived_series()] == [24, 12, 4, 1]


# X54 is covered by the acceptance suite; its oracle run takes about 30 s.
ORACLE_GROUPS = ["S3", "S4", "A4", "D8", "F21", "A5", "C9"]


@pytest.mark.parametrize("name", ORACLE_GROUPS)
def test_structure_matches_oracles(name):
    G = construct(name)
    eg = elems(G)
    assert is_solvable(G) == O.is_solvable(eg, G.degree)
    assert elems(solvable_radical(G)) == O.solvable_radical(eg, G.degree)
    for p in (2, 3, 5, 7):
        assert elems(o_p_prime(G, p)) == O.o_p_prime(eg, G.degree, p)
        assert is_p_solvable(G, p) == O.is_p_solvable(eg, G.degree, p)


@given(st.sampled_from(["S4", "X54", "F21", "A4", "S4xA5", "D8"]), st.sampled_from([2, 3, 5, 7]))
def test_characteristic_subgroup_laws(name, p):
    G = construct(name)
    Op, Opp = o_p(G, p), o_p_prime(G, p)
    assert is_normal(G, Op) and is_normal(G, Opp)
    assert Opp.order % p != 0 and Op.order == p_part(Op.order, p)
    assert Op.is_subgroup_of(sylow_subgroup(G, p)) or Op.order == 1
    # O_p'(G / O_p'(G)) is trivial
    assert o_p_prime(coset_action(G, Opp), p).order == 1
    R = solvable_radical(G)
    assert solvable_radical(coset_action(G, R)).order == 1
    assert fitting(G).is_subgroup_of(R)


@given(st.sampled_from(["S4", "A5", "X54", "F21", "L2_17"]), st.sampled_from([2, 3, 5, 7, 17]))
def test_sylow_is_self_normalizing_or_normalizer_grows(name, p):
    G = construct(name)
    P = sylow_subgroup(G, p)
    N = normalizer(G, P)
    assert sylow_subgroup(N, p) == P or P.order == 1
    assert (G.order // N.order) % p == 1 % p if P.order > 1 else True
