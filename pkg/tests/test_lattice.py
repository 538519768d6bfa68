from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subembed import PermGroup, ResourceError
from subembed import oracles as O
from subembed.catalog import construct, cyclic
from subembed.lattice import (
    SubgroupLattice,
    all_subgroups,
    frattini,
    frattini_by_lattice,
    frattini_p_group,
    maximal_subgroups,
)
from subembed.structure import sylow_subgroup
from subembed.subgroups import is_normal, normalizer

from .helpers import group


def elems(H: PermGroup) -> frozenset:
    return frozenset(g.images for g in H.elements())


@pytest.mark.parametrize(
    "name,total,classes",
    [("S3", 6, 4), ("S4", 30, 11), ("V4", 5, 5), ("C5", 2, 2), ("A4", 10, 5), ("D8", 10, 8)],
)
def test_subgroup_counts(name, total, classes):
    G = construct(name)
    assert len(all_subgroups(G)) == total
    assert len(all_subgroups(G, up_to_conjugacy=True)) == classes


def test_a5_lattice():
    lat = SubgroupLattice(construct("A5"))
    assert len(lat.subgroups) == 59
    assert len(lat.class_representatives()) == 9
    assert sorted(H.order for H in maximal_subgroups(construct("A5"))) == [6] * 10 + [10] * 6 + [12] * 5


def test_lattice_matches_oracle_on_S4(S4):
    got = {elems(H) for H in all_subgroups(S4)}
    assert got == set(O.all_subgroups(elems(S4), 4))


def test_lattice_structure(S4):
    lat = SubgroupLattice(S4)
    top = lat.subgroups[-1]
    assert top.order == 24 and lat.subgroups[0].order == 1
    assert sorted(s.order for s in lat.maximal_in(top)) == [6, 6, 6, 6, 8, 8, 8, 12]
    for s in lat.subgroups:
        H = lat.to_group(s)
        assert lat.find(H) is s
        assert s.normal == is_normal(S4, H)
        assert len(lat.class_of(s)) == 24 // normalizer(S4, H).order
        for t in lat.subgroups_of(s):
            assert SubgroupLattice.contains(s, t)
            assert lat.to_group(t).is_subgroup_of(H)


def test_class_sizes_divide_order(S4):
    lat = SubgroupLattice(S4)
    for rep in lat.class_representatives():
        assert 24 % len(lat.class_of(rep)) == 0
        assert sum(1 for s in lat.subgroups if s.conj_class == rep.conj_class) == len(lat.class_of(rep))


def test_is_normal_in(S4):
    lat = SubgroupLattice(S4)
    A4 = lat.find(construct("A4"))
    V4 = lat.find(group(4, "(1,2)(3,4)", "(1,3)(2,4)"))
    C2 = lat.find(group(4, "(1,2)(3,4)"))
    assert lat.is_normal_in(A4, V4)
    assert lat.is_normal_in(V4, C2)
    assert not lat.is_normal_in(A4, C2)


def test_frattini_examples(S4):
    assert frattini(cyclic(4)) == group(4, "(1,3)(2,4)")
    assert frattini(construct("V4")).order == 1
    assert frattini(S4).order == 1
    assert frattini(cyclic(9)).order == 3
    assert frattini(construct("D8")).order == 2
    assert frattini(cyclic(5)).order == 1


@pytest.mark.parametrize("name,p", [("D8", 2), ("C4", 2), ("V4", 2), ("C9", 3), ("S6", 2), ("S6", 3), ("X54", 3)])
def test_frattini_fast_path_matches_lattice(name, p):
    G = construct(name)
    P = G if G.order in (4, 8, 9) else sylow_subgroup(G, p)
    assert frattini_p_group(P, p) == frattini_by_lattice(P)


def test_subgroup_bound():
    with pytest.raises(ResourceError):
        SubgroupLattice(construct("S7"))
    with pytest.raises(ResourceError):
        SubgroupLattice(construct("S4"), bound=10)


@given(st.sampled_from(["S3", "D8", "A4", "C4", "V4", "F21"]))
def test_maximal_subgroups_are_maximal(name):
    G = construct(name)
    subs = all_subgroups(G)
    for M in maximal_subgroups(G):
        assert M.order < G.order
        between = [K for K in subs if M.is_subgroup_of(K) and K.order not in (M.order, G.order)]
        assert not between
