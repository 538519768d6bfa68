from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subembed import InputError, PermGroup
from subembed.catalog import construct, x54_named_elements
from subembed.embedding import (
    check_witness,
    classify_triple,
    is_abnormal,
    is_closed,
    is_extremely_closed_in_G,
    is_gamma_triple,
    is_isolated,
    is_ne_subgroup,
    is_pronormal,
    is_special_triple,
    is_w_triple,
)
from subembed.lattice import SubgroupLattice
from subembed.structure import sylow_subgroup
from subembed.subgroups import (
    center,
    conjugacy_classes,
    conjugate_subgroup,
    is_normal,
    normalizer,
)

from .helpers import group, perm


def lattice_groups(name: str) -> list[PermGroup]:
    lat = SubgroupLattice(construct(name))
    return [lat.to_group(s) for s in lat.subgroups]


S4_SUBS = lattice_groups("S4")


def test_example1_predicates(S4):
    H = group(4, "(1,2,3)")
    M = normalizer(S4, H)
    assert M.order == 6
    assert is_closed("extreme", H, M, S4).holds
    assert is_extremely_closed_in_G(H, S4).holds
    cls = classify_triple(S4, M, H)
    assert cls.special and cls.h_normal_in_m and not cls.gamma
    gamma = cls.reports["gamma"]
    assert check_witness(gamma, H, M, S4)
    assert str(gamma.witness_element) == "(3,4)"
    # the worked witness is also genuine
    g = perm("(1,3,2,4)", 4)
    assert not M.contains(g) and H._extended([g]) == S4


def test_example2_predicates(X54):
    named = x54_named_elements()
    H = PermGroup(54, [named["a"]])
    M = normalizer(X54, H)
    assert M.order == 6
    assert is_extremely_closed_in_G(H, X54).holds
    special = is_special_triple(X54, M, H)
    assert not special.holds and special.details["meet_order"] == 6
    assert not is_ne_subgroup(H, X54).holds


def test_example3_predicates():
    G = construct("U3_4")
    P = sylow_subgroup(G, 2)
    H = center(P)
    N = normalizer(G, H)
    assert is_closed("strong", H, N, G).holds
    report = is_extremely_closed_in_G(H, G)
    assert not report.holds
    assert report.witness_element.order() == 15
    assert report.witness_subgroup.order == 60
    assert report.details["meet_order"] == 12
    assert check_witness(report, H, N, G)


def test_l217_sylow_is_extremely_closed():
    G = construct("L2_17")
    P = sylow_subgroup(G, 2)
    assert normalizer(G, P) == P and not P.is_abelian()
    assert is_extremely_closed_in_G(P, G).holds


def test_pronormal_examples(S4, A4):
    assert is_pronormal(sylow_subgroup(S4, 2), S4).holds
    assert is_pronormal(group(4, "(1,2,3)"), S4).holds
    report = is_pronormal(group(4, "(1,2)(3,4)"), A4)
    assert not report.holds and report.witness_subgroup.order == 4


def test_abnormal_examples(S4):
    assert is_abnormal(S4, S4).holds
    H = group(4, "(1,2,3)")
    assert is_abnormal(normalizer(S4, H), S4).holds
    report = is_abnormal(H, S4)
    assert not report.holds
    g = report.witness_element
    assert not H._extended([H.generators[0].conjugate(g)]).contains(g)


def test_isolated_examples(S4):
    P = sylow_subgroup(S4, 2)
    x = perm("(1,2)(3,4)", 4)
    report = is_isolated(x, P, S4)
    assert not report.holds and report.details["class_in_subgroup"] == 3
    C = construct("C4")
    assert is_isolated(C.generators[0], C, C).holds
    with pytest.raises(InputError):
        is_isolated(perm("(1,2,3)", 4), P, S4)
    with pytest.raises(InputError):
        is_isolated(perm("(1,2,3)", 4), S4, S4)


def test_l217_central_involution_is_isolated():
    G = construct("L2_17")
    P = sylow_subgroup(G, 2)
    (z,) = [g for g in center(P).elements() if g.order() == 2]
    report = is_isolated(z, P, G)
    # one class of 2448/16 involutions; the dihedral Sylow holds 9 of them
    assert report.details == {"class_size": 153, "class_in_subgroup": 9}
    assert not report.holds
    assert sum(1 for y in P.elements() if y.order() == 2) == 9


def test_containment_errors(S4):
    H = group(4, "(1,2)")
    M = group(4, "(1,2,3)")
    with pytest.raises(InputError):
        is_closed("strong", H, M, S4)
    with pytest.raises(InputError):
        is_closed("mild", H, S4, S4)
    with pytest.raises(InputError):
        is_closed("weak", group(5, "(1,2)"), S4, S4)
    with pytest.raises(InputError):
        classify_triple(S4, M, H)


def test_gamma_needs_strict_chain(S4):
    H = group(4, "(1,2,3)")
    assert not is_gamma_triple(S4, S4, H).holds
    assert not is_gamma_triple(S4, H, H).holds


def test_w_triple_examples(S4):
    # Frobenius complement with trivial kernel part: (A4, C3, 1) is a W-triple
    A4 = construct("A4")
    C3 = group(4, "(1,2,3)")
    assert is_w_triple(A4, C3, PermGroup.trivial(4)).holds
    assert not is_w_triple(S4, group(4, "(1,2)", "(1,2,3)"), PermGroup.trivial(4)).holds
    assert not is_w_triple(S4, S4, group(4, "(1,2)")).holds


@pytest.mark.parametrize("H", [H for H in S4_SUBS if H.order in (1, 24) or H.order == 12])
def test_normal_subgroups_are_closed_in_every_kind(S4, H):
    for M in S4_SUBS:
        if H.is_subgroup_of(M):
            for kind in ("weak", "strong", "extreme"):
                assert is_closed(kind, H, M, S4).holds


@pytest.mark.parametrize("name", ["S4", "A4", "D8", "S3", "F21"])
def test_normal_or_self_normalizing_is_extremely_closed(name):
    G = construct(name)
    for H in lattice_groups(name):
        if is_normal(G, H) or normalizer(G, H) == H:
            assert is_extremely_closed_in_G(H, G).holds


@pytest.mark.parametrize("name", ["S4", "A4", "D8", "S3", "F21", "X54"])
def test_implication_chain(name):
    G = construct(name)
    lat = SubgroupLattice(G)
    for sub in lat.class_representatives():
        H = lat.to_group(sub)
        N = normalizer(G, H)
        special = is_special_triple(G, N, H).holds
        extreme = is_closed("extreme", H, N, G).holds
        strong = is_closed("strong", H, N, G).holds
        weak = is_closed("weak", H, N, G).holds
        assert (not special or extreme) and (not extreme or strong) and (not strong or weak)


def test_gamma_implies_extreme_in_M(S4):
    seen = 0
    for M in S4_SUBS:
        for H in S4_SUBS:
            if H.is_subgroup_of(M) and is_gamma_triple(S4, M, H).holds:
                seen += 1
                assert is_closed("extreme", H, M, S4).holds
    assert seen > 0


@pytest.mark.parametrize("name", ["S4", "A5", "D8", "X54", "L2_17"])
def test_order_two_strong_iff_isolated(name):
    G = construct(name)
    for cls in conjugacy_classes(G):
        if cls.element_order != 2:
            continue
        x = cls.representative
        H = PermGroup(G.degree, [x])
        P = sylow_subgroup(G, 2, start=H)
        assert is_closed("strong", H, P, G).holds == is_isolated(x, P, G).holds


subgroup_of_S4 = st.sampled_from(S4_SUBS)


@given(subgroup_of_S4, subgroup_of_S4, st.sampled_from(["weak", "strong", "extreme"]), st.booleans())
def test_failures_carry_rechecked_witnesses(H, M, kind, all_g):
    G = construct("S4")
    if not H.is_subgroup_of(M):
        return
    report = is_closed(kind, H, M, G, all_g=all_g)
    if not report.holds:
        assert report.witness_element is not None and report.witness_subgroup is not None
        assert check_witness(report, H, M, G)
        if kind == "extreme" and not all_g:
            assert not M.contains(report.witness_element)


@given(subgroup_of_S4, subgroup_of_S4, st.sampled_from(list(S4_SUBS[-1].elements())))
def test_predicates_are_conjugation_invariant(H, M, g):
    G = construct("S4")
    if not H.is_subgroup_of(M):
        return
    Hg, Mg = conjugate_subgroup(H, g), conjugate_subgroup(M, g)
    for kind in ("weak", "strong", "extreme"):
        assert is_closed(kind, H, M, G).holds == is_closed(kind, Hg, Mg, G).holds
    a, b = classify_triple(G, M, H), classify_triple(G, Mg, Hg)
    assert (a.special, a.ne, a.w_triple, a.gamma) == (b.special, b.ne, b.w_triple, b.gamma)
    assert is_pronormal(H, G).holds == is_pronormal(Hg, G).holds
    assert is_abnormal(H, G).holds == is_abnormal(Hg, G).holds


@given(subgroup_of_S4)
def test_report_record_shape(H):
    G = construct("S4")
    rec = is_extremely_closed_in_G(H, G).to_record()
    assert set(rec) == {"predicate", "holds", "witness_element", "witness_subgroup_order", "details", "millis"}
    assert rec["holds"] == (rec["witness_element"] is None)
