"""Exact reproduction of the worked examples and remarks on named groups."""

from __future__ import annotations

from typing import Any, Callable

from ..catalog import alternating, construct, x54_named_elements
from ..embedding import check_witness, is_closed, is_extremely_closed_in_G, is_gamma_triple, is_ne_subgroup
from ..errors import InputError
from ..group import PermGroup
from ..lattice import SubgroupLattice, frattini
from ..perm import Permutation
from ..structure import (
    is_frobenius_with_complement,
    is_p_nilpotent,
    is_p_solvable,
    o_p,
    o_p_prime,
    sylow_subgroup,
)
from ..subgroups import (
    center,
    centralizer,
    conjugacy_class,
    conjugacy_classes,
    conjugates,
    intersection,
    is_normal,
    join,
    normal_closure,
    normalizer,
    product_order,
)
from .report import VerificationReport, perm_str, timed

Block = Callable[[], tuple[dict[str, Any], dict[str, bool]]]


def _same(A: PermGroup, B: PermGroup) -> bool:
    return A.order == B.order and A.is_subgroup_of(B)


def example1() -> tuple[dict[str, Any], dict[str, bool]]:
    """``S4`` with ``H = <(1,2,3)>`` and ``M = N_G(H)``."""
    G = construct("S4")
    H = PermGroup(4, [Permutation.parse("(1,2,3)", 4)])
    M = normalizer(G, H)
    L = normal_closure(G, H)
    ext = is_closed("extreme", H, M, G, all_g=True)
    gamma = is_gamma_triple(G, M, H)
    g = Permutation.parse("(1,3,2,4)", 4)
    facts = {
        "normalizer_order": M.order,
        "closure_order": L.order,
        "closure_meet_M": intersection(L, M).order,
        "gamma_witness": perm_str(gamma.witness_element),
    }
    checks = {
        "normalizer_order_6": M.order == 6,
        "closure_is_A4": _same(L, alternating(4)),
        "closure_meet_M_is_H": intersection(L, M).order == H.order,
        "extremely_closed": ext.holds,
        "gamma_fails": not gamma.holds,
        "gamma_witness_rechecks": check_witness(gamma, H, M, G),
        "given_g_outside_M": not M.contains(g),
        "given_g_generates_with_H": join(H, PermGroup(4, [g])).order == G.order,
    }
    return facts, checks


def example2() -> tuple[dict[str, Any], dict[str, bool]]:
    """``3^(1+2):2`` of order 54 with ``H = <a>``."""
    G = construct("X54")
    named = x54_named_elements()
    H = PermGroup(54, [named["a"]])
    Z = PermGroup(54, [named["z"]])
    N = normalizer(G, H)
    C = centralizer(G, H)
    L = normal_closure(G, H)
    ext = is_extremely_closed_in_G(H, G)
    ne = is_ne_subgroup(H, G)
    pair_orders = set()
    frobenius = True
    for _, K in conjugates(G, H):
        if K.element_key() == H.element_key():
            continue
        T = join(H, K)
        pair_orders.add(T.order)
        frobenius &= is_frobenius_with_complement(T, H)
    P = o_p_prime(G, 2)
    facts = {
        "order": G.order,
        "normalizer_order": N.order,
        "closure_order": L.order,
        "closure_meet_normalizer": ne.details["meet_order"],
        "pair_orders": sorted(pair_orders),
    }
    checks = {
        "order_54": G.order == 54,
        "normalizer_is_centralizer": _same(N, C),
        "normalizer_is_H_z": N.order == 6 and _same(N, join(H, Z)),
        "closure_is_G": L.order == G.order,
        "extremely_closed": ext.holds,
        "special_fails": not ne.holds,
        "closure_meet_normalizer_6": ne.details["meet_order"] == 6,
        "pairs_order_6": pair_orders == {6},
        "pairs_frobenius": frobenius,
        "index2_center_is_z": P.order == 27 and _same(center(P), Z),
        "index2_exponent_3": all(x.order() in (1, 3) for x in P.elements()),
    }
    return facts, checks


def example3() -> tuple[dict[str, Any], dict[str, bool]]:
    """``U3(4)`` with ``H = Z(P)`` for a Sylow 2-subgroup ``P``."""
    G = construct("U3_4")
    P = sylow_subgroup(G, 2)
    H = center(P)
    N = normalizer(G, H)
    strong = is_closed("strong", H, N, G, N=N)
    ext = is_extremely_closed_in_G(H, G)
    g = ext.witness_element
    T = ext.witness_subgroup
    meet = ext.details.get("meet_order")
    facts = {
        "order": G.order,
        "sylow_order": P.order,
        "H_order": H.order,
        "normalizer_order": N.order,
        "witness": perm_str(g),
        "witness_order": None if g is None else g.order(),
        "generated_order": None if T is None else T.order,
        "meet_order": meet,
    }
    checks = {
        "order_62400": G.order == 62400,
        "H_is_frattini": _same(H, frattini(P)),
        "strongly_closed": strong.holds,
        "extremely_closed_fails": not ext.holds,
        "witness_order_15": g is not None and g.order() == 15,
        "generated_order_60": T is not None and T.order == 60,
        "meet_order_12": meet == 12,
        "sylow_normal_in_normalizer": is_normal(N, P),
    }
    return facts, checks


def transvection_class(G: PermGroup) -> Permutation:
    """Representative of the unique class of order-3 elements of size 56."""
    hits = [c.representative for c in conjugacy_classes(G) if c.element_order == 3 and c.size == 56]
    if len(hits) != 1:
        raise ValueError(f"expected one class of order-3 elements of size 56, found {len(hits)}")
    return hits[0]


def u33_remark() -> tuple[dict[str, Any], dict[str, bool]]:
    """Pairs of transvections in ``U3(3)``."""
    G = construct("U3_3")
    x = transvection_class(G)
    D = [Permutation(r, check=False) for r in conjugacy_class(G, x).tolist()]
    memo: dict[bytes, tuple[int, int, bool, bool]] = {}
    counts: dict[int, int] = {}
    shape_ok = True
    for u in D:
        for v in D:
            T = PermGroup(G.degree, [u, v])
            key = T.element_key()
            if key not in memo:
                S2 = o_p(T, 2)
                memo[key] = (T.order, S2.order, is_p_nilpotent(T, 3), is_p_solvable(T, 3))
            order, s2, nil3, sol3 = memo[key]
            counts[order] = counts.get(order, 0) + 1
            if order == 24 and s2 != 8:
                shape_ok = False
            if not (nil3 and sol3):
                shape_ok = False
    facts = {
        "order": G.order,
        "class_size": len(D),
        "pair_order_counts": {str(k): v for k, v in sorted(counts.items())},
        "distinct_subgroups": len(memo),
    }
    checks = {
        "order_6048": G.order == 6048,
        "class_size_56": len(D) == 56,
        "pairs_exhaustive": sum(counts.values()) == len(D) ** 2,
        "orders_3_or_24": set(counts) <= {3, 24} and 24 in counts,
        "order24_normal_sylow2_and_3_nilpotent": shape_ok,
    }
    return facts, checks


def l217_remark() -> tuple[dict[str, Any], dict[str, bool]]:
    """Self-normalizing nonabelian Sylow 2-subgroup of ``L2(17)``."""
    G = construct("L2_17")
    P = sylow_subgroup(G, 2)
    N = normalizer(G, P)
    ext = is_extremely_closed_in_G(P, G)
    factor = product_order(N, o_p_prime(G, 2))
    facts = {"order": G.order, "sylow_order": P.order, "normalizer_order": N.order, "product_order": factor}
    checks = {
        "sylow_order_16": P.order == 16,
        "self_normalizing": N.order == P.order,
        "nonabelian": not P.is_abelian(),
        "extremely_closed": ext.holds,
        "factorization_fails": factor != G.order,
    }
    return facts, checks


def a5_caveat() -> tuple[dict[str, Any], dict[str, bool]]:
    """``M = S3`` maximal in ``A5`` and ``H`` of order 2 in ``M``: no two conjugates generate."""
    G = construct("A5")
    M = PermGroup(5, [Permutation.parse("(1,2,3)", 5), Permutation.parse("(1,2)(4,5)", 5)])
    H = PermGroup(5, [Permutation.parse("(1,2)(4,5)", 5)])
    lat = SubgroupLattice(G)
    maximal = lat.find(M) in lat.maximal_in(lat.subgroups[-1])
    conj = [K for _, K in conjugates(G, H)]
    pairs = 0
    generating = 0
    for i in range(len(conj)):
        for j in range(i + 1, len(conj)):
            pairs += 1
            generating += join(conj[i], conj[j]).order == G.order
    facts = {"conjugates": len(conj), "pairs": pairs, "generating_pairs": generating}
    checks = {
        "M_maximal": maximal,
        "index_3": M.order // H.order == 3,
        "H_not_normal_in_M": not is_normal(M, H),
        "no_generating_pair": generating == 0,
    }
    return facts, checks


BLOCKS: dict[str, Block] = {
    "example1": example1,
    "example2": example2,
    "example3": example3,
    "u33_remark": u33_remark,
    "l217_remark": l217_remark,
    "a5_caveat": a5_caveat,
}


def run_block(name: str) -> dict[str, Any]:
    facts, checks = BLOCKS[name]()
    return {"facts": facts, "checks": checks, "passed": all(checks.values())}


def reproduce_examples(blocks: tuple[str, ...] | None = None) -> VerificationReport:
    """Run the example blocks in order; the report fails at the first failed check."""
    names = tuple(BLOCKS) if blocks is None else blocks
    unknown = [b for b in names if b not in BLOCKS]
    if unknown:
        raise InputError(f"unknown example blocks: {unknown}")
    report = VerificationReport("examples", "catalog")
    with timed(report):
        for name in names:
            result = run_block(name)
            report.instances_checked += 1
            report.details[name] = result
            for check, ok in result["checks"].items():
                if not ok:
                    report.fail({"block": name, "check": check})
    return report


__all__ = ["BLOCKS", "reproduce_examples", "run_block", "transvection_class"]
