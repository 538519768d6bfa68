"""Statement-level checks of the factorization and generation theorems."""

from __future__ import annotations

from ..embedding import is_closed, is_extremely_closed_in_G
from ..errors import InputError
from ..group import PermGroup
from ..lattice import SubgroupLattice
from ..numtheory import is_prime, require_prime
from ..structure import StructureCache, is_frobenius_with_complement, is_p_solvable, sylow_subgroup
from ..subgroups import (
    conjugacy_classes,
    conjugates,
    intersection,
    join,
    normal_closure,
    product_order,
)
from .instances import order_p_subgroups, p_subgroups
from .report import VerificationReport, describe, perm_str, timed


def is_simple_nonabelian(G: PermGroup) -> bool:
    """No proper nontrivial normal closure of a conjugacy class, and not abelian."""
    if G.order == 1 or G.is_abelian():
        return False
    for cls in conjugacy_classes(G)[1:]:
        if normal_closure(G, PermGroup(G.degree, [cls.representative])).order != G.order:
            return False
    return True


# ---------------------------------------------------------------- Theorem 1
def verify_th1(G: PermGroup, name: str = "G", bound: int | None = None) -> VerificationReport:
    """Maximal ``H < M < G`` with ``<H, H^g> ∩ M = H`` for all ``g`` force ``<H^G> ∩ M = H``."""
    report = VerificationReport("th1", name)
    with timed(report):
        lat = SubgroupLattice(G, bound)
        top = lat.subgroups[-1]
        pairs = 0
        for Ms in lat.maximal_in(top):
            M = lat.to_group(Ms)
            for Hs in lat.maximal_in(Ms):
                H = lat.to_group(Hs)
                pairs += 1
                if not is_closed("extreme", H, M, G, all_g=True).holds:
                    continue
                report.instances_checked += 1
                meet = intersection(normal_closure(G, H), M)
                if meet.order != H.order:
                    report.fail({"H": describe(H), "M": describe(M), "meet_order": meet.order})
        report.details["chains_examined"] = pairs
    return report


# ------------------------------------------------------ generation corollary
def conjugate_pair_generation(G: PermGroup, H: PermGroup) -> tuple[int, tuple[int, int] | None]:
    """Search all pairs of distinct conjugates of ``H`` for one generating ``G``.

    Returns the number of pairs tried and the indices of the first generating
    pair (in conjugate-list order), or ``None``.
    """
    conj = [K for _, K in conjugates(G, H)]
    tried = 0
    for i in range(len(conj)):
        for j in range(i + 1, len(conj)):
            tried += 1
            if join(conj[i], conj[j]).order == G.order:
                return tried, (i, j)
    return tried, None


def verify_cor_generation(G: PermGroup, name: str = "G", bound: int | None = None) -> VerificationReport:
    """In a simple group, ``H`` normal of prime index in a maximal ``M`` has ``G = <H, H^g>``.

    ``M`` runs over one maximal subgroup per conjugacy class.  Non-normal
    prime-index ``H`` are recorded with an exhaustive pair search.
    """
    report = VerificationReport("cor_generation", name)
    with timed(report):
        if not is_simple_nonabelian(G):
            report.notes.append("hypothesis not met: group is not nonabelian simple")
            return report
        lat = SubgroupLattice(G, bound)
        top = lat.subgroups[-1]
        exhibits = []
        covered: set[bytes] = set()
        reps = {s.index for s in lat.class_representatives()}
        for Ms in lat.maximal_in(top):
            if Ms.index not in reps:
                continue
            M = lat.to_group(Ms)
            for Hs in lat.maximal_in(Ms):
                index = Ms.order // Hs.order
                if not is_prime(index):
                    continue
                H = lat.to_group(Hs)
                if lat.is_normal_in(Ms, Hs):
                    report.instances_checked += 1
                    found = next((t for t, K in conjugates(G, H) if join(H, K).order == G.order), None)
                    if found is None:
                        report.fail({"H": describe(H), "M": describe(M), "index": index})
                    report.details.setdefault("witnesses", []).append(
                        {"M_order": M.order, "H_order": H.order, "g": perm_str(found)}
                    )
                elif H.element_key() not in covered:
                    covered.update(K.element_key() for _, K in conjugates(G, H))
                    tried, pair = conjugate_pair_generation(G, H)
                    exhibits.append(
                        {"M": describe(M), "H": describe(H), "index": index,
                         "pairs_tried": tried, "generating_pair_found": pair is not None}
                    )
        report.details["non_normal_prime_index"] = exhibits
    return report


# ---------------------------------------------------------------- Theorem 2
def verify_th2(G: PermGroup, p: int, name: str = "G") -> VerificationReport:
    """Extremely closed ``H`` of odd prime order ``p``: ``<H^G> ∩ N_G(H) = H`` and ``G = N_G(H) O_p'(G)``."""
    require_prime(p)
    if p == 2:
        raise InputError("th2 needs an odd prime")
    report = VerificationReport("th2", name, p)
    with timed(report):
        cache = StructureCache(G)
        skipped = []
        frobenius = {"pairs": 0, "frobenius": 0}
        for H in order_p_subgroups(G, p):
            ext = is_extremely_closed_in_G(H, G)
            if not ext.holds:
                skipped.append({"H": describe(H), "witness": perm_str(ext.witness_element),
                                "offending_order": ext.witness_subgroup.order})
                continue
            report.instances_checked += 1
            N = cache.normalizer(H)
            meet = intersection(normal_closure(G, H), N)
            factor = product_order(N, cache.o_p_prime(p))
            if meet.order != H.order or factor != G.order:
                report.fail({"H": describe(H), "normalizer_order": N.order,
                             "meet_order": meet.order, "product_order": factor})
            for _, K in conjugates(G, H)[1:]:
                T = join(H, K)
                frobenius["pairs"] += 1
                frobenius["frobenius"] += is_frobenius_with_complement(T, H)
        report.details["skipped"] = skipped
        report.details["frobenius_side_check"] = frobenius
    return report


# ------------------------------------------- Theorem 3 and its corollaries
def _abelian_instances(G: PermGroup, p: int, subgroups, require_abelian: bool):
    candidates = subgroups if subgroups is not None else p_subgroups(G, p, abelian_only=require_abelian)
    for H in candidates:
        if H.order == 1:
            continue
        if require_abelian and not H.is_abelian():
            continue
        ext = is_extremely_closed_in_G(H, G)
        yield H, ext


def verify_th3(
    G: PermGroup,
    p: int,
    name: str = "G",
    subgroups: list[PermGroup] | None = None,
    require_abelian: bool = True,
) -> VerificationReport:
    """Extremely closed abelian ``p``-subgroups give ``G = N_G(H) O_p'(G)``.

    For odd ``p`` the check also covers ``<H^G> ∩ N_G(H) = H`` and ``H <= R(G)``.
    ``require_abelian=False`` drops the abelian hypothesis (used to exhibit
    that it cannot be dropped).
    """
    require_prime(p)
    report = VerificationReport("th3", name, p)
    with timed(report):
        cache = StructureCache(G)
        nonabelian = []
        for H, ext in _abelian_instances(G, p, subgroups, require_abelian):
            if not ext.holds:
                continue
            report.instances_checked += 1
            N = cache.normalizer(H)
            factor = product_order(N, cache.o_p_prime(p))
            record = {"H": describe(H), "abelian": H.is_abelian(), "normalizer_order": N.order,
                      "product_order": factor}
            if not H.is_abelian():
                nonabelian.append(record)
            if factor != G.order:
                report.fail(dict(record, failed="factorization"))
                continue
            if p != 2:
                meet = intersection(normal_closure(G, H), N)
                if meet.order != H.order:
                    report.fail(dict(record, failed="special", meet_order=meet.order))
                if not H.is_subgroup_of(cache.radical()):
                    report.fail(dict(record, failed="radical", radical_order=cache.radical().order))
        if nonabelian:
            report.details["nonabelian_instances"] = nonabelian
        if require_abelian and subgroups is None:
            excluded = [
                {"H": describe(H), "normalizer_order": cache.normalizer(H).order,
                 "product_order": product_order(cache.normalizer(H), cache.o_p_prime(p))}
                for H in p_subgroups(G, p, abelian_only=False)
                if not H.is_abelian() and is_extremely_closed_in_G(H, G).holds
            ]
            if excluded:
                report.details["excluded_nonabelian"] = excluded
    return report


def verify_cor_special(G: PermGroup, p: int, name: str = "G", subgroups=None) -> VerificationReport:
    """Odd ``p``: extremely closed abelian ``p``-subgroups satisfy ``<H^G> ∩ N_G(H) = H``."""
    require_prime(p)
    if p == 2:
        raise InputError("cor_special needs an odd prime")
    report = VerificationReport("cor_special", name, p)
    with timed(report):
        cache = StructureCache(G)
        for H, ext in _abelian_instances(G, p, subgroups, True):
            if not ext.holds:
                continue
            report.instances_checked += 1
            N = cache.normalizer(H)
            meet = intersection(normal_closure(G, H), N)
            if meet.order != H.order:
                report.fail({"H": describe(H), "normalizer_order": N.order, "meet_order": meet.order})
    return report


def verify_cor_radical(G: PermGroup, p: int, name: str = "G", subgroups=None) -> VerificationReport:
    """Extremely closed abelian ``p``-subgroups lie in the solvable radical."""
    require_prime(p)
    report = VerificationReport("cor_radical", name, p)
    with timed(report):
        cache = StructureCache(G)
        for H, ext in _abelian_instances(G, p, subgroups, True):
            if not ext.holds:
                continue
            report.instances_checked += 1
            R = cache.radical()
            if not H.is_subgroup_of(R):
                report.fail({"H": describe(H), "radical_order": R.order})
    return report


# ---------------------------------------------------------------- Theorem 5
def verify_th5(G: PermGroup, p: int, name: str = "G") -> VerificationReport:
    """``G`` is ``p``-solvable iff every ``<P, P^g>`` is (``P`` a Sylow ``p``-subgroup)."""
    require_prime(p)
    report = VerificationReport("th5", name, p)
    with timed(report):
        if G.order % p:
            report.notes.append(f"{p} does not divide the group order; both sides hold trivially")
            return report
        report.instances_checked = 1
        lhs = is_p_solvable(G, p)
        P = sylow_subgroup(G, p)
        memo: dict[bytes, bool] = {}
        rhs = True
        witness = None
        pairs = 0
        for t, K in conjugates(G, P)[1:]:
            pairs += 1
            T = join(P, K)
            if T.order == G.order:
                ok = lhs
            else:
                key = T.element_key()
                if key not in memo:
                    memo[key] = is_p_solvable(T, p)
                ok = memo[key]
            if not ok:
                rhs = False
                witness = (t, T)
                break
        report.details.update({"p_solvable": lhs, "pairs_p_solvable": rhs, "pairs_checked": pairs,
                               "sylow_order": P.order})
        if witness is not None:
            report.details["witness"] = {"g": str(witness[0]), "generated_order": witness[1].order}
        if lhs != rhs:
            report.fail({"p_solvable": lhs, "pairs_p_solvable": rhs, "P": describe(P),
                         "g": None if witness is None else str(witness[0])})
    return report


__all__ = [
    "conjugate_pair_generation",
    "is_simple_nonabelian",
    "verify_cor_generation",
    "verify_cor_radical",
    "verify_cor_special",
    "verify_th1",
    "verify_th2",
    "verify_th3",
    "verify_th5",
]
