"""Checks of the auxiliary lemmas on concrete groups."""

from __future__ import annotations

from ..embedding import is_closed, is_extremely_closed_in_G, is_pronormal, is_w_triple
from ..errors import InputError
from ..group import PermGroup
from ..lattice import SubgroupLattice
from ..numtheory import p_part, require_prime
from ..perm import Permutation
from ..structure import (
    StructureCache,
    induces_frobenius_automorphism,
    is_frobenius_group,
    is_solvable,
    o_p_prime,
    sylow_subgroup,
)
from ..subgroups import (
    centralizer,
    conjugacy_class,
    conjugates,
    derived_subgroup,
    intersection,
    is_normal,
    join,
    normal_closure,
    normal_subgroups,
    normalizer,
    product_order,
    quotient,
)
from .instances import p_subgroups
from .report import VerificationReport, describe, timed

LEMMA_IDS = ("lemma22", "lemma23", "lemma29", "lemma211")


def _extremely_closed_p_subgroups(G: PermGroup, p: int) -> list[PermGroup]:
    return [H for H in p_subgroups(G, p, abelian_only=False) if is_extremely_closed_in_G(H, G).holds]


def _commutator_group(K: PermGroup, A: PermGroup, degree: int) -> PermGroup:
    """``[K, A]``, generated by all ``[k, a]`` with ``k`` in ``K`` and ``a`` in ``A``."""
    gens = []
    for k in K.elements():
        for a in A.elements():
            c = k.commutator(a)
            if not c.is_identity():
                gens.append(c)
    return PermGroup.from_rows([c.images for c in gens], degree) if gens else PermGroup.trivial(degree)


def flavell_generation_holds(K: PermGroup, A: PermGroup) -> bool:
    """``C_[K,A](A) = < C_[k,A](A) : k in K >`` with ``[k, A] = < [k, a] : a in A >``."""
    degree = K.degree
    left = centralizer(_commutator_group(K, A, degree), A)
    right = PermGroup.trivial(degree)
    for k in K.elements():
        gens = [k.commutator(a) for a in A.elements()]
        single = PermGroup(degree, [c for c in gens if not c.is_identity()])
        right = join(right, centralizer(single, A))
    return left.order == right.order and left.is_subgroup_of(right)


def _lemma22(report: VerificationReport, G: PermGroup, p: int, H: PermGroup, cache: StructureCache) -> None:
    N = cache.normalizer(H)
    for t, K in conjugates(G, H):
        T = join(H, K)
        # (i) H is self-normalizing in T and Sylow in T
        if normalizer(T, H).order != H.order or p_part(T.order, p) != H.order:
            report.fail({"item": "i", "H": describe(H), "g": str(t), "T_order": T.order})
            return
        # (v) abelian H: T = H O_p'(T)
        if H.is_abelian() and product_order(H, o_p_prime(T, p)) != T.order:
            report.fail({"item": "v", "H": describe(H), "g": str(t), "T_order": T.order})
            return
        # abelian H: every <H, H^g> is solvable
        if H.is_abelian() and not is_solvable(T):
            report.fail({"item": "solvable_pairs", "H": describe(H), "g": str(t), "T_order": T.order})
            return
    # (ii) pronormal
    if not is_pronormal(H, G).holds:
        report.fail({"item": "ii", "H": describe(H)})
        return
    # (iii) extremely closed in overgroups
    P = sylow_subgroup(G, p, start=H)
    for L in (P, normal_closure(G, H), N):
        if not is_extremely_closed_in_G(H, L).holds:
            report.fail({"item": "iii", "H": describe(H), "L_order": L.order})
            return
    # (vii) the Sylow overgroup normalizes H
    if not P.is_subgroup_of(N):
        report.fail({"item": "vii", "H": describe(H), "sylow_order": P.order})
        return
    # (iv), (vi) in quotients
    for Nn in normal_subgroups(G):
        if Nn.order in (1, G.order):
            continue
        # pronormal H inside a normal subgroup: G = N_G(H) N
        if H.is_subgroup_of(Nn) and product_order(N, Nn) != G.order:
            report.fail({"item": "pronormal_frattini", "H": describe(H), "N": describe(Nn)})
            return
        Q = quotient(G, Nn)
        Hbar = Q.image_group(H)
        if normalizer(Q.group, Hbar).order != Q.image_group(N).order:
            report.fail({"item": "iv", "H": describe(H), "N": describe(Nn)})
            return
        if not is_extremely_closed_in_G(Hbar, Q.group).holds:
            report.fail({"item": "vi", "H": describe(H), "N": describe(Nn)})
            return


def _lemma23(report: VerificationReport, G: PermGroup, p: int, H: PermGroup, cache: StructureCache) -> None:
    P = sylow_subgroup(G, p, start=H)
    N_H = cache.normalizer(H)
    if not is_closed("strong", H, P, G).holds:
        report.fail({"item": "i", "H": describe(H)})
        return
    for Nn in normal_subgroups(G):
        Q = intersection(H, Nn)
        R = intersection(P, Nn)
        if not is_closed("strong", Q, R, Nn).holds:
            report.fail({"item": "ii", "H": describe(H), "N": describe(Nn)})
            return
        if Nn.is_subgroup_of(N_H) and not is_normal(G, Q):
            report.fail({"item": "iii", "H": describe(H), "N": describe(Nn)})
            return


def _lemma211(report: VerificationReport, G: PermGroup, p: int, H: PermGroup, cache: StructureCache) -> bool:
    """Returns whether the lemma's hypothesis applied."""
    if not H.is_abelian():
        return False
    N = cache.normalizer(H)
    L = normal_closure(G, H)
    if intersection(L, N).order != H.order:
        return False
    K = o_p_prime(L, p)
    ok = (
        is_normal(G, K)
        and intersection(K, N).order == 1
        and product_order(N, K) == G.order
        and is_solvable(L)
    )
    if not ok:
        report.fail({"H": describe(H), "closure_order": L.order, "complement_order": K.order})
    return True


def _lemma29(report: VerificationReport, G: PermGroup, p: int, H: PermGroup, cache: StructureCache) -> int:
    """Flavell's generation identity for ``H`` (and its cyclic subgroups) acting on solvable ``p'``-groups."""
    if p == 2:
        return 0
    targets = []
    Op = cache.o_p_prime(p)
    if Op.order > 1 and is_solvable(Op):
        targets.append(Op)
    if H.is_abelian():
        for _, K in conjugates(G, H)[1:]:
            R = o_p_prime(join(H, K), p)
            if R.order > 1 and is_solvable(R):
                targets.append(R)
    actors = [H] + [PermGroup(G.degree, [h]) for h in H.generators if len(H.generators) > 1]
    checked = 0
    seen = set()
    for R in targets:
        for A in actors:
            key = (R.element_key(), A.element_key())
            if key in seen:
                continue
            seen.add(key)
            checked += 1
            if not flavell_generation_holds(R, A):
                report.fail({"H": describe(H), "acting": describe(A), "K": describe(R)})
                return checked
    return checked


def verify_lemma_suite(G: PermGroup, p: int, name: str = "G", lemmas=LEMMA_IDS) -> list[VerificationReport]:
    """One report per lemma id, over all extremely closed ``p``-subgroups of ``G``."""
    require_prime(p)
    unknown = set(lemmas) - set(LEMMA_IDS)
    if unknown:
        raise InputError(f"unknown lemma ids: {sorted(unknown)}")
    reports = {lid: VerificationReport(lid, name, p) for lid in lemmas}
    cache = StructureCache(G)
    subjects = _extremely_closed_p_subgroups(G, p)
    for lid in lemmas:
        report = reports[lid]
        with timed(report):
            for H in subjects:
                if lid == "lemma22":
                    report.instances_checked += 1
                    _lemma22(report, G, p, H, cache)
                elif lid == "lemma23":
                    report.instances_checked += 1
                    _lemma23(report, G, p, H, cache)
                elif lid == "lemma211":
                    report.instances_checked += _lemma211(report, G, p, H, cache)
                else:
                    report.instances_checked += _lemma29(report, G, p, H, cache)
    return [reports[lid] for lid in lemmas]


# ------------------------------------------------------------------ Fischer
def verify_fischer(G: PermGroup, class_rep: Permutation, name: str = "G") -> VerificationReport:
    """Some element of the class is a Frobenius automorphism of ``G'`` iff every
    pair of distinct class members generates a Frobenius group."""
    if not G.contains(class_rep):
        raise InputError(f"{class_rep} is not in the group")
    if class_rep.order() <= 2:
        raise InputError("hypothesis violated: class elements must have order greater than 2")
    if normal_closure(G, PermGroup(G.degree, [class_rep])).order != G.order:
        raise InputError("hypothesis violated: the class does not generate the group")
    report = VerificationReport("fischer", name)
    with timed(report):
        report.instances_checked = 1
        rows = conjugacy_class(G, class_rep)
        D = [Permutation(r, check=False) for r in rows.tolist()]
        Gd = derived_subgroup(G)
        lhs_element = next((d for d in D if induces_frobenius_automorphism(G, d, Gd)), None)
        lhs = lhs_element is not None
        memo: dict[bytes, bool] = {}
        rhs = True
        bad_pair = None
        for i in range(len(D)):
            for j in range(i + 1, len(D)):
                T = PermGroup(G.degree, [D[i], D[j]])
                key = T.element_key()
                if key not in memo:
                    memo[key] = is_frobenius_group(T)
                if not memo[key]:
                    rhs = False
                    bad_pair = (D[i], D[j], T.order)
                    break
            if not rhs:
                break
        report.details.update({
            "class_size": len(D),
            "derived_order": Gd.order,
            "frobenius_automorphism": lhs,
            "pairs_frobenius": rhs,
            "frobenius_element": None if lhs_element is None else str(lhs_element),
        })
        if bad_pair is not None:
            report.details["non_frobenius_pair"] = [str(bad_pair[0]), str(bad_pair[1]), bad_pair[2]]
        if lhs != rhs:
            report.fail({"frobenius_automorphism": lhs, "pairs_frobenius": rhs})
    return report


def verify_fischer_all(G: PermGroup, name: str = "G") -> VerificationReport:
    """Fischer's equivalence for every class satisfying its hypotheses."""
    from ..subgroups import conjugacy_classes

    report = VerificationReport("fischer", name)
    with timed(report):
        for cls in conjugacy_classes(G):
            x = cls.representative
            if x.order() <= 2:
                continue
            if normal_closure(G, PermGroup(G.degree, [x])).order != G.order:
                continue
            sub = verify_fischer(G, x, name)
            report.instances_checked += 1
            report.details.setdefault("classes", []).append(dict(sub.details, representative=str(x)))
            if not sub.holds:
                report.fail(dict(sub.counterexample, representative=str(x)))
    return report


# ------------------------------------------------------------ Wielandt pack
def verify_wielandt_pack(G: PermGroup, name: str = "G", bound: int | None = None) -> VerificationReport:
    """W-triple criterion via normalizers, Wielandt's complement, and specialness."""
    report = VerificationReport("wielandt_pack", name)
    with timed(report):
        lat = SubgroupLattice(G, bound)
        normalizer_sub = {}

        def norm_of(s):
            if s.index not in normalizer_sub:
                normalizer_sub[s.index] = lat.find(normalizer(G, lat.to_group(s)))
            return normalizer_sub[s.index]

        normals = normal_subgroups(G)
        equivalence_checks = 0
        for Ms in lat.subgroups:
            M = lat.to_group(Ms)
            below = lat.subgroups_of(Ms)
            for Hs in below:
                if not lat.is_normal_in(Ms, Hs):
                    continue
                H = lat.to_group(Hs)
                w = is_w_triple(G, M, H).holds
                criterion = all(
                    lat.contains(Ms, norm_of(D)) for D in below if not lat.contains(Hs, D)
                )
                equivalence_checks += 1
                if w != criterion:
                    report.fail({"item": "equivalence", "M": describe(M), "H": describe(H),
                                 "w_triple": w, "criterion": criterion})
                if not w:
                    continue
                report.instances_checked += 1
                K = next(
                    (K for K in normals if product_order(M, K) == G.order
                     and intersection(M, K).order == H.order and H.is_subgroup_of(K)),
                    None,
                )
                if K is None:
                    report.fail({"item": "complement", "M": describe(M), "H": describe(H)})
                    continue
                if intersection(normal_closure(G, H), M).order != H.order:
                    report.fail({"item": "special", "M": describe(M), "H": describe(H)})
        report.details["equivalence_checks"] = equivalence_checks
    return report


__all__ = [
    "LEMMA_IDS",
    "flavell_generation_holds",
    "verify_fischer",
    "verify_fischer_all",
    "verify_lemma_suite",
    "verify_wielandt_pack",
]
