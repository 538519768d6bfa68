from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subembed import InputError, PermGroup, Permutation
from subembed import oracles as O
from subembed.catalog import alternating, construct, x54_named_elements
from subembed.lattice import SubgroupLattice
from subembed.structure import sylow_subgroup
from subembed.subgroups import (
    center,
    centralizer,
    conjugacy_classes,
    conjugate_subgroup,
    conjugates,
    coset_action,
    derived_series,
    intersection,
    is_normal,
    join,
    normal_closure,
    normal_core,
    normal_subgroups,
    normalizer,
    product_order,
    quotient,
)

from .helpers import generator_lists, group, perm


def elems(H: PermGroup) -> frozenset:
    return frozenset(g.images for g in H.elements())


def test_conjugate_subgroup(S4):
    H = group(4, "(1,2,3)")
    assert conjugate_subgroup(H, Permutation.identity(4)) == H
    K = conjugate_subgroup(H, perm("(1,3,2,4)", 4))
    assert K.order == 3 and K != H
    assert K == group(4, "(1,2,3)".replace("(1,2,3)", str(perm("(1,2,3)", 4).conjugate(perm("(1,3,2,4)", 4)))))
    for g in normalizer(S4, H).elements():
        assert conjugate_subgroup(H, g) == H


def test_join():
    H = group(4, "(1,2,3)")
    assert join(H, H) == H
    assert join(H, group(4, "(1,2,4)")) == alternating(4)
    with pytest.raises(InputError):
        join(H, group(5, "(1,2)"))


def test_intersection(S4):
    A4 = alternating(4)
    S3 = group(4, "(1,2)", "(1,2,3)")
    assert intersection(S4, S4) == S4
    assert intersection(A4, S3) == group(4, "(1,2,3)")


def test_normalizer_examples(S4):
    assert normalizer(S4, alternating(4)) == S4
    assert normalizer(S4, group(4, "(1,2,3)")).order == 6
    L = construct("L2_17")
    P = sylow_subgroup(L, 2)
    assert normalizer(L, P).order == 16


def test_centralizer_examples(S4, X54):
    assert centralizer(S4, Permutation.identity(4)) == S4
    assert centralizer(S4, perm("(1,2,3,4)", 4)) == group(4, "(1,2,3,4)")
    named = x54_named_elements()
    H = PermGroup(54, [named["a"]])
    C = centralizer(X54, H)
    assert C.order == 6 and C == join(H, PermGroup(54, [named["z"]]))
    with pytest.raises(InputError):
        centralizer(S4, "x")


def test_normal_closure_examples(S4, X54):
    A4 = alternating(4)
    assert normal_closure(S4, A4) == A4
    assert normal_closure(S4, group(4, "(1,2,3)")) == A4
    assert normal_closure(X54, PermGroup(54, [x54_named_elements()["a"]])).order == 54


def test_derived_series(S4, A5):
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    assert [H.order for H in derived_series(A5)] == [60]
    V4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    assert [H.order for H in derived_series(V4)] == [4, 1]


def test_center(S4):
    V4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    assert center(V4) == V4
    assert center(S4).order == 1


def test_normal_core(S4):
    assert normal_core(S4, alternating(4)) == alternating(4)
    assert normal_core(S4, group(4, "(1,2)", "(1,2,3)")).order == 1
    D8 = sylow_subgroup(S4, 2)
    assert normal_core(S4, D8) == group(4, "(1,2)(3,4)", "(1,3)(2,4)")


def test_coset_action(S4, A4):
    V4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    assert coset_action(S4, S4).order == 1
    Q = coset_action(S4, V4)
    assert Q.order == 6 and not Q.is_abelian()
    assert coset_action(A4, V4).order == 3
    with pytest.raises(InputError):
        coset_action(S4, group(4, "(1,2)"))


def test_quotient_preimage(S4):
    V4 = group(4, "(1,2)(3,4)", "(1,3)(2,4)")
    Q = quotient(S4, V4)
    assert Q.preimage(Q.group) == S4
    assert Q.preimage(PermGroup.trivial(Q.group.degree)) == V4
    assert Q.image_group(alternating(4)).order == 3


def test_conjugacy_classes(S4):
    classes = conjugacy_classes(S4)
    assert sorted(c.size for c in classes) == sorted([1, 6, 3, 8, 6])
    assert len(conjugacy_classes(group(4, "(1,2,3,4)"))) == 4
    for c in classes:
        assert 24 % c.size == 0
        assert c.size == 24 // centralizer(S4, c.representative).order
    U = construct("U3_3")
    sizes = [c.size for c in conjugacy_classes(U) if c.element_order == 3]
    assert 56 in sizes and sum(c.size for c in conjugacy_classes(U)) == 6048


def test_normal_subgroups_of_S4(S4):
    assert sorted(N.order for N in normal_subgroups(S4)) == [1, 4, 12, 24]


def test_product_order_rule_on_S4_pairs(S4):
    lat = SubgroupLattice(S4)
    subs = [lat.to_group(s) for s in lat.subgroups]
    for A in subs:
        for B in subs:
            ea, eb = elems(A), elems(B)
            product = {O.mul(a, b) for a in ea for b in eb}
            assert product_order(A, B) == len(product)
            if len(product) == len(O.closure(product, 4)):
                assert join(A, B).order * intersection(A, B).order == A.order * B.order


subgroup_of_S5 = generator_lists(5, 2).map(lambda gs: PermGroup(5, gs))


@given(subgroup_of_S5, subgroup_of_S5)
def test_operators_match_oracles(H, K):
    G = construct("S5")
    eg, eh = elems(G), elems(H)
    assert elems(normalizer(G, H)) == O.normalizer(eg, eh)
    assert elems(normal_closure(G, H)) == O.normal_closure(eg, eh, 5)
    assert elems(intersection(H, K)) == eh & elems(K)
    assert elems(join(H, K)) == O.generated(eh, elems(K), 5)
    assert is_normal(G, H) == O.is_normal(eg, eh)
    C = centralizer(G, H)
    assert H.is_subgroup_of(normalizer(G, H)) and C.is_subgroup_of(normalizer(G, H))


@given(subgroup_of_S5)
def test_normal_closure_is_join_of_conjugates(H):
    G = construct("S5")
    L = normal_closure(G, H)
    assert is_normal(G, L) and H.is_subgroup_of(L)
    J = PermGroup.trivial(5)
    for _, K in conjugates(G, H):
        J = join(J, K)
    assert J == L


@given(st.sampled_from(["S4", "A4", "D8", "X54", "S3"]))
def test_coset_action_order(name):
    G = construct(name)
    for N in normal_subgroups(G):
        assert coset_action(G, N).order == G.order // N.order


@given(subgroup_of_S5)
def test_conjugates_are_distinct_and_complete(H):
    G = construct("S5")
    conj = conjugates(G, H)
    keys = {K.element_key() for _, K in conj}
    assert len(keys) == len(conj) == G.order // normalizer(G, H).order
    for t, K in conj:
        assert K == conjugate_subgroup(H, t)
