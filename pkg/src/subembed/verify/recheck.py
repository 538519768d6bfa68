"""Independent re-verification of reported counterexamples with the brute-force oracles."""

from __future__ import annotations

from .. import oracles as O
from ..errors import InputError
from ..group import PermGroup
from ..numtheory import p_part
from ..perm import Permutation
from .report import VerificationReport


def subgroup_from_description(desc: dict, degree: int) -> PermGroup:
    """Inverse of :func:`describe`."""
    text = desc["gens"]
    gens = [] if text == "()" else [Permutation.parse(t, degree) for t in text.split(";")]
    return PermGroup(degree, gens)


RECHECKABLE = ("th1", "th2", "th3", "th5", "cor_generation", "cor_special", "cor_radical")


def _elements(G: PermGroup) -> frozenset:
    return O.closure([g.images for g in G.generators], G.degree)


def _factorization_fails(Gs: frozenset, Hs: frozenset, degree: int, p: int) -> bool:
    N = O.normalizer(Gs, Hs)
    K = O.o_p_prime(Gs, degree, p)
    return len(N) * len(K) // len(N & K) != len(Gs)


def _th5_confirmed(ce: dict, Gs: frozenset, degree: int, p: int) -> bool:
    """Both sides recomputed: ``G`` p-solvable vs every ``<P, P^g>`` p-solvable."""
    if "P" not in ce:
        return False
    P = _elements(subgroup_from_description(ce["P"], degree))
    if not P <= Gs or len(P) != p_part(len(Gs), p) or len(P) == 1:
        return False
    lhs = O.is_p_solvable(Gs, degree, p)
    pairs = {O.generated(P, O.conj_set(P, g), degree) for g in Gs}
    rhs = all(O.is_p_solvable(T, degree, p) for T in pairs)
    return lhs != rhs and (lhs, rhs) == (ce["p_solvable"], ce["pairs_p_solvable"])


def recheck(report: VerificationReport, G: PermGroup) -> bool:
    """Whether the oracles confirm the report's counterexample against ``G``.

    Hypothesis and conclusion are recomputed from scratch on element sets.
    """
    if report.holds or report.counterexample is None:
        raise InputError("report has no counterexample to recheck")
    if report.statement_id not in RECHECKABLE:
        raise InputError(f"no oracle recheck for statement {report.statement_id!r}")
    ce = report.counterexample
    d = G.degree
    Gs = _elements(G)
    sid = report.statement_id
    p = report.prime
    if sid == "th5":
        return _th5_confirmed(ce, Gs, d, p)
    if sid == "cor_generation":
        H = _elements(subgroup_from_description(ce["H"], d))
        return all(O.generated(H, O.conj_set(H, g), d) != Gs for g in Gs)
    H = _elements(subgroup_from_description(ce["H"], d))
    if sid == "th1":
        M = _elements(subgroup_from_description(ce["M"], d))
        hyp = O.closed("extreme", H, M, Gs, d, all_g=True)
        return hyp and O.normal_closure(Gs, H, d) & M != H
    N = O.normalizer(Gs, H)
    if not O.closed("extreme", H, N, Gs, d):
        return False
    special_fails = O.normal_closure(Gs, H, d) & N != H
    if sid == "th2":
        return special_fails or _factorization_fails(Gs, H, d, p)
    if sid == "th3":
        failed = ce.get("failed", "factorization")
        if failed == "factorization":
            return _factorization_fails(Gs, H, d, p)
        if failed == "special":
            return special_fails
        return not H <= O.solvable_radical(Gs, d)
    if sid == "cor_special":
        return special_fails
    return not H <= O.solvable_radical(Gs, d)


__all__ = ["RECHECKABLE", "recheck", "subgroup_from_description"]
