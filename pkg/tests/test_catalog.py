from __future__ import annotations

import pytest

from subembed import DataError, InputError, PermGroup, ResourceError
from subembed import catalog
from subembed import oracles as O
from subembed.catalog import construct, corpus, entry, names, x54_named_elements
from subembed.structure import solvable_radical, sylow_subgroup
from subembed.subgroups import center, conjugacy_classes, normal_closure, normal_subgroups



@pytest.mark.parametrize(
    "name,order,degree",
    [
        ("S4", 24, 4), ("A5", 60, 5), ("C7", 7, 7), ("D10", 10, 5), ("V4", 4, 4),
        ("X54", 54, 54), ("F21", 21, 7), ("S4xA5", 1440, 9), ("L2_17", 2448, 18),
        ("U3_3", 6048, 28), ("U3_4", 62400, 65),
    ],
)
def test_orders(name, order, degree):
    G = construct(name)
    assert G.order == order and G.degree == degree
    assert entry(name).expected_order == order


def test_names_and_unknowns():
    assert {"X54", "U3_4", "Sn"} <= set(names())
    for bad in ("Q8", "D7", "D2", "S0", "foo"):
        with pytest.raises(InputError):
            construct(bad)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 19)])
def test_subgroup_corpus_sizes(n, count):
    reps = corpus(f"subgroups-of:S{n}")
    assert len(reps) == count
    assert reps[-1][1].order == catalog._factorial(n)


def test_S4_corpus_matches_oracle_classes():
    G = construct("S4")
    eg = frozenset(g.images for g in G.elements())
    classes = set()
    for H in O.all_subgroups(eg, 4):
        classes.add(min(tuple(sorted(O.conj_set(H, g))) for g in eg))
    got = sorted(H.order for _, H in corpus("subgroups-of:S4"))
    assert len(classes) == len(got) == 11


def test_corpus_errors():
    with pytest.raises(ResourceError):
        corpus("subgroups-of:S7")
    for bad in ("subgroups-of:A4", "catalog:", "nonsense", "subgroups-of:S0"):
        with pytest.raises(InputError):
            corpus(bad)


def test_combined_corpus():
    parts = corpus("subgroups-of:S3+catalog:A5,X54")
    assert [n for n, _ in parts][-2:] == ["A5", "X54"]
    assert len(parts) == 6


def test_checksum_tamper(monkeypatch):
    original = catalog._data_text

    def tampered(filename):
        raw = original(filename)
        return raw.replace(b"21", b"22", 1) if filename == "F21.json" else raw

    monkeypatch.setattr(catalog, "_data_text", tampered)
    with pytest.raises(DataError):
        catalog.load_generator_file("F21")


def test_missing_file(monkeypatch):
    monkeypatch.setattr(catalog, "_checksums", lambda: {})
    with pytest.raises(DataError):
        catalog.load_generator_file("F21")


def test_x54_invariants(X54):
    named = x54_named_elements()
    P = sylow_subgroup(X54, 3)
    assert P.order == 27 and not P.is_abelian()
    assert all(g.order() in (1, 3) for g in P.elements())
    assert [N.order for N in normal_subgroups(X54) if N.order == 27] == [27]
    assert center(P) == PermGroup(54, [named["z"]])
    assert named["a"].order() == 2 and not P.contains(named["a"])


@pytest.mark.parametrize("name", ["A5", "L2_17", "U3_3"])
def test_simple_catalog_groups(name):
    G = construct(name)
    assert solvable_radical(G).order == 1
    for cls in conjugacy_classes(G)[1:]:
        assert normal_closure(G, PermGroup(G.degree, [cls.representative])) == G
