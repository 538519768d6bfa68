"""Subgroup-embedding predicates with constructive witnesses.

Conditions that only depend on the conjugate ``H^g`` are evaluated once per
conjugate, with ``g`` running over a right transversal of ``N_G(H)``.  On
failure the reported element is the one of largest order in the offending
coset ``N_G(H) t`` (restricted to ``G - M`` where the quantifier requires
it), ties broken by traversal order of ``N_G(H)``.  This makes the witness
independent of which transversal was used.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import InputError
from .group import PermGroup, compose_rows, row_orders
from .numtheory import prime_factors
from .perm import Permutation
from .subgroups import (
    conjugacy_class,
    conjugate_subgroup,
    conjugates,
    intersection,
    join,
    normal_closure,
    normalizer,
)

CLOSURE_KINDS = ("weak", "strong", "extreme")


@dataclass
class EmbeddingReport:
    predicate: str
    holds: bool
    witness_element: Permutation | None = None
    witness_subgroup: PermGroup | None = None
    elapsed: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def to_record(self) -> dict[str, Any]:
        return {
            "predicate": self.predicate,
            "holds": self.holds,
            "witness_element": None if self.witness_element is None else str(self.witness_element),
            "witness_subgroup_order": None if self.witness_subgroup is None else self.witness_subgroup.order,
            "details": self.details,
            "millis": round(self.elapsed * 1000, 3),
        }


def _require_chain(*groups: PermGroup) -> None:
    """``groups[0] <= groups[1] <= ...`` with a common degree."""
    for small, big in zip(groups, groups[1:]):
        if small.degree != big.degree:
            raise InputError(f"degree mismatch: {small.degree} vs {big.degree}")
        if not small.is_subgroup_of(big):
            raise InputError(f"subgroup of order {small.order} is not contained in the group of order {big.order}")


def coset_witness(N: PermGroup, t: Permutation, exclude: PermGroup | None = None) -> Permutation:
    """Element of largest order in ``N t`` (minus ``exclude``), first in traversal order."""
    rows = compose_rows(N.element_array(), t.images)
    if exclude is not None:
        rows = rows[~exclude.contains_rows(rows)]
    best = int(np.argmax(row_orders(rows)))
    return Permutation(rows[best].tolist(), check=False)


def _same_set(A: PermGroup, B: PermGroup) -> bool:
    return A.order == B.order and A.is_subgroup_of(B)


def _non_normalizing(M: PermGroup, H: PermGroup) -> Permutation | None:
    """First generator of ``M`` that moves ``H`` under conjugation."""
    for m in M.generators:
        if not all(H.contains(h.conjugate(m)) for h in H.generators):
            return m
    return None


def _timed(report: EmbeddingReport, start: float) -> EmbeddingReport:
    report.elapsed = time.perf_counter() - start
    return report


def is_closed(
    kind: str,
    H: PermGroup,
    M: PermGroup,
    G: PermGroup,
    all_g: bool = False,
    N: PermGroup | None = None,
) -> EmbeddingReport:
    """Weak, strong or extreme closure of ``H`` in ``M`` with respect to ``G``.

    * weak: ``H^g <= M`` forces ``H^g = H``;
    * strong: ``M ∩ H^g <= H``;
    * extreme: ``<H, H^g> ∩ M = H`` for ``g`` in ``G - M`` (every ``g`` with ``all_g``).

    ``N`` may supply a precomputed ``N_G(H)``.
    """
    if kind not in CLOSURE_KINDS:
        raise InputError(f"unknown closure kind {kind!r}; expected one of {', '.join(CLOSURE_KINDS)}")
    start = time.perf_counter()
    _require_chain(H, M, G)
    name = f"{kind}ly-closed" if kind != "extreme" else "extremely-closed"
    if N is None:
        N = normalizer(G, H)
    outside_only = kind == "extreme" and not all_g
    n_inside_m = N.is_subgroup_of(M)
    checked = 0
    for t, K in conjugates(G, H):
        if outside_only and n_inside_m and M.contains(t):
            # the whole coset N t lies in M
            continue
        checked += 1
        if kind == "weak":
            bad = K.is_subgroup_of(M) and not _same_set(K, H)
            offending = K
        elif kind == "strong":
            offending = intersection(M, K)
            bad = not offending.is_subgroup_of(H)
        else:
            T = join(H, K)
            meet = intersection(T, M)
            bad = meet.order != H.order
            offending = T
        if bad:
            exclude = M if outside_only else None
            g = coset_witness(N, t, exclude)
            details = {"conjugates_checked": checked, "offending_order": offending.order}
            if kind == "extreme":
                details["meet_order"] = meet.order
            return _timed(EmbeddingReport(name, False, g, offending, details=details), start)
    return _timed(EmbeddingReport(name, True, details={"conjugates_checked": checked}), start)


def is_extremely_closed_in_G(H: PermGroup, G: PermGroup) -> EmbeddingReport:
    """``<H, H^g> ∩ N_G(H) = H`` for every ``g`` in ``G``."""
    _require_chain(H, G)
    N = normalizer(G, H)
    report = is_closed("extreme", H, N, G, N=N)
    report.predicate = "extremely-closed-in-G"
    report.details["normalizer_order"] = N.order
    return report


def is_pronormal(H: PermGroup, G: PermGroup) -> EmbeddingReport:
    """``H`` and ``H^g`` are conjugate in ``<H, H^g>`` for every ``g``."""
    start = time.perf_counter()
    _require_chain(H, G)
    N = normalizer(G, H)
    for t, K in conjugates(G, H)[1:]:
        T = join(H, K)
        if not any(_same_set(K, L) for _, L in conjugates(T, H)):
            g = coset_witness(N, t)
            return _timed(EmbeddingReport("pronormal", False, g, T), start)
    return _timed(EmbeddingReport("pronormal", True), start)


def is_abnormal(H: PermGroup, G: PermGroup) -> EmbeddingReport:
    """``g`` lies in ``<H, H^g>`` for every ``g`` in ``G``.

    For ``g = n t`` with ``n`` in ``N_G(H)`` the group ``T = <H, H^t>`` does
    not depend on ``n``, so the whole coset ``N_G(H) t`` lies in ``T`` iff
    ``t`` and ``N_G(H)`` both do.
    """
    start = time.perf_counter()
    _require_chain(H, G)
    N = normalizer(G, H)
    for t, K in conjugates(G, H):
        T = join(H, K)
        if not (T.contains(t) and N.is_subgroup_of(T)):
            g = coset_witness(N, t, exclude=T)
            return _timed(EmbeddingReport("abnormal", False, g, T), start)
    return _timed(EmbeddingReport("abnormal", True), start)


def is_isolated(x: Permutation, P: PermGroup, G: PermGroup) -> EmbeddingReport:
    """``x^G ∩ P = {x}``."""
    start = time.perf_counter()
    _require_chain(P, G)
    if not P.contains(x):
        raise InputError(f"{x} is not in the subgroup")
    primes = set(prime_factors(x.order())) | set(prime_factors(P.order))
    if len(primes) > 1:
        raise InputError("isolation needs a p-element inside a p-subgroup")
    rows = conjugacy_class(G, x)
    inside = rows[P.contains_rows(rows)]
    others = [r for r in inside.tolist() if tuple(r) != x.images]
    details = {"class_size": len(rows), "class_in_subgroup": len(inside)}
    if others:
        w = Permutation(others[0], check=False)
        return _timed(EmbeddingReport("isolated", False, w, details=details), start)
    return _timed(EmbeddingReport("isolated", True, details=details), start)


def is_special_triple(G: PermGroup, M: PermGroup, H: PermGroup) -> EmbeddingReport:
    """``H`` normal in ``M`` and ``<H^G> ∩ M = H``."""
    start = time.perf_counter()
    _require_chain(H, M, G)
    C = normal_closure(G, H)
    meet = intersection(C, M)
    mover = _non_normalizing(M, H)
    details = {"h_normal_in_m": mover is None, "closure_order": C.order, "meet_order": meet.order}
    holds = mover is None and meet.order == H.order
    witness = None if holds else meet
    return _timed(EmbeddingReport("special", holds, mover, witness, details=details), start)


def is_ne_subgroup(H: PermGroup, G: PermGroup) -> EmbeddingReport:
    """``<H^G> ∩ N_G(H) = H``."""
    report = is_special_triple(G, normalizer(G, H), H)
    report.predicate = "ne"
    return report


def is_w_triple(G: PermGroup, M: PermGroup, H: PermGroup) -> EmbeddingReport:
    """``H`` normal in ``M`` and ``M ∩ M^g <= H`` for every ``g`` in ``G - M``.

    Iterates the conjugates ``M^t``; the coset ``N_G(M) t`` misses ``G - M``
    only when it lies inside ``M``.
    """
    start = time.perf_counter()
    _require_chain(H, M, G)
    mover = _non_normalizing(M, H)
    details: dict[str, Any] = {"h_normal_in_m": mover is None}
    if mover is not None:
        return _timed(EmbeddingReport("w-triple", False, mover, details=details), start)
    NM = normalizer(G, M)
    self_normalizing = NM.order == M.order
    for t, L in conjugates(G, M):
        if self_normalizing and M.contains(t):
            continue
        meet = intersection(M, L)
        if not meet.is_subgroup_of(H):
            g = coset_witness(NM, t, exclude=M)
            details["meet_order"] = meet.order
            return _timed(EmbeddingReport("w-triple", False, g, meet, details=details), start)
    return _timed(EmbeddingReport("w-triple", True, details=details), start)


def is_gamma_triple(G: PermGroup, M: PermGroup, H: PermGroup) -> EmbeddingReport:
    """``H < M < G`` and ``<H, g> ∩ M = H`` for every ``g`` in ``G - M``.

    Elements are scanned in traversal order; ``<H, g>`` only depends on the
    right coset ``Hg``, so each coset is tested once.
    """
    start = time.perf_counter()
    _require_chain(H, M, G)
    if not (H.order < M.order < G.order):
        return _timed(EmbeddingReport("gamma", False, None, M, details={"strict_chain": False}), start)
    idx = G.element_index()
    E = idx.rows
    Hrows = H.element_array()
    seen = M.contains_rows(E)
    tested = 0
    for k in range(len(E)):
        if seen[k]:
            continue
        seen[idx.lookup(compose_rows(Hrows, E[k]))] = True
        g = Permutation(E[k].tolist(), check=False)
        T = H._extended([g])
        meet = intersection(T, M)
        tested += 1
        if meet.order != H.order:
            details = {"cosets_tested": tested, "meet_order": meet.order, "generated_order": T.order}
            return _timed(EmbeddingReport("gamma", False, g, T, details=details), start)
    return _timed(EmbeddingReport("gamma", True, details={"cosets_tested": tested}), start)


@dataclass
class TripleClassification:
    special: bool
    ne: bool
    w_triple: bool
    gamma: bool
    h_normal_in_m: bool
    reports: dict[str, EmbeddingReport] = field(default_factory=dict)


def classify_triple(G: PermGroup, M: PermGroup, H: PermGroup) -> TripleClassification:
    _require_chain(H, M, G)
    reports = {
        "special": is_special_triple(G, M, H),
        "ne": is_ne_subgroup(H, G),
        "w_triple": is_w_triple(G, M, H),
        "gamma": is_gamma_triple(G, M, H),
    }
    return TripleClassification(
        special=reports["special"].holds,
        ne=reports["ne"].holds,
        w_triple=reports["w_triple"].holds,
        gamma=reports["gamma"].holds,
        h_normal_in_m=reports["special"].details["h_normal_in_m"],
        reports=reports,
    )


def check_witness(report: EmbeddingReport, H: PermGroup, M: PermGroup, G: PermGroup) -> bool:
    """Re-evaluate a failing closure report at its witness element."""
    g = report.witness_element
    if g is None or not G.contains(g):
        return False
    K = conjugate_subgroup(H, g)
    if report.predicate == "weakly-closed":
        return K.is_subgroup_of(M) and not _same_set(K, H)
    if report.predicate == "strongly-closed":
        return not intersection(M, K).is_subgroup_of(H)
    if report.predicate in ("extremely-closed", "extremely-closed-in-G"):
        return intersection(join(H, K), M).order != H.order
    if report.predicate == "gamma":
        return intersection(H._extended([g]), M).order != H.order
    raise InputError(f"no witness check for {report.predicate!r}")


PREDICATES = (
    "weakly-closed",
    "strongly-closed",
    "extremely-closed",
    "pronormal",
    "abnormal",
    "special",
    "ne",
    "w-triple",
    "gamma",
)

__all__ = [
    "CLOSURE_KINDS",
    "EmbeddingReport",
    "PREDICATES",
    "TripleClassification",
    "check_witness",
    "classify_triple",
    "coset_witness",
    "is_abnormal",
    "is_closed",
    "is_extremely_closed_in_G",
    "is_gamma_triple",
    "is_isolated",
    "is_ne_subgroup",
    "is_pronormal",
    "is_special_triple",
    "is_w_triple",
]
