"""Characteristic subgroups and group-class tests.

``O_{p'}(G)`` and the solvable radical are joins of normal closures of
conjugacy classes: a join of normal p'-subgroups (resp. normal solvable
subgroups) is again one, and every normal subgroup is generated by the
closures of its own elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .group import PermGroup, row_orders
from .lattice import SubgroupLattice
from .numtheory import is_p_power, p_part, prime_factors, require_prime
from .perm import Permutation
from .subgroups import (
    centralizer,
    conjugacy_classes,
    conjugates,
    coset_action,
    derived_series,
    intersection,
    join_all,
    normal_closure,
    normal_core,
    normalizer,
)


def _p_elements_outside(N: PermGroup, H: PermGroup, p: int) -> np.ndarray:
    rows = N.element_array()
    orders = row_orders(rows)
    ppow = np.array([is_p_power(int(o), p) for o in orders])
    return rows[ppow & ~H.contains_rows(rows)]


def sylow_subgroup(G: PermGroup, p: int, start: PermGroup | None = None) -> PermGroup:
    """A Sylow ``p``-subgroup of ``G`` (containing ``start`` if given).

    Starts from a cyclic group generated by a ``p``-element of largest order
    among the class representatives, then repeatedly adjoins the first
    ``p``-element of ``N_G(H)`` outside ``H`` (in traversal order).
    """
    require_prime(p)
    target = p_part(G.order, p)
    if target == 1:
        return PermGroup.trivial(G.degree)
    if start is not None:
        if not is_p_power(start.order, p):
            raise InputError(f"start subgroup of order {start.order} is not a {p}-group")
        H = start
    else:
        best = None
        for cls in conjugacy_classes(G):
            o = cls.element_order
            if o > 1 and is_p_power(o, p) and (best is None or o > best.order()):
                best = cls.representative
        H = PermGroup(G.degree, [best])
    while H.order < target:
        N = normalizer(G, H)
        candidates = _p_elements_outside(N, H, p)
        y = Permutation(candidates[0].tolist(), check=False)
        H = H._extended([y])
    return H


def o_p(G: PermGroup, p: int) -> PermGroup:
    """Largest normal ``p``-subgroup: the core of a Sylow ``p``-subgroup."""
    P = sylow_subgroup(G, p)
    if P.order == 1:
        return P
    return normal_core(G, P)


def _class_closures(G: PermGroup) -> list[PermGroup]:
    return [
        normal_closure(G, PermGroup(G.degree, [cls.representative]))
        for cls in conjugacy_classes(G)[1:]
    ]


def o_p_prime(G: PermGroup, p: int) -> PermGroup:
    """Largest normal subgroup of order coprime to ``p``."""
    require_prime(p)
    if G.order % p:
        return G
    keep = []
    for cls in conjugacy_classes(G)[1:]:
        if cls.element_order % p == 0:
            continue
        C = normal_closure(G, PermGroup(G.degree, [cls.representative]))
        if C.order % p:
            keep.append(C)
    return join_all(keep, G.degree)


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def solvable_radical(G: PermGroup) -> PermGroup:
    """Largest normal solvable subgroup."""
    if is_solvable(G):
        return G
    keep = [C for C in _class_closures(G) if is_solvable(C)]
    return join_all(keep, G.degree)


def fitting(G: PermGroup) -> PermGroup:
    """Largest nilpotent normal subgroup: the join of all ``O_p``."""
    return join_all([o_p(G, p) for p in prime_factors(G.order)], G.degree)


def is_p_solvable(G: PermGroup, p: int) -> bool:
    """Walk the upper ``p``-series ``1 <= O_p' <= O_{p',p} <= ...`` through quotients."""
    require_prime(p)
    Q = G
    while Q.order > 1:
        if Q.order % p:
            return True
        K = o_p_prime(Q, p)
        if K.order == 1:
            K = o_p(Q, p)
            if K.order == 1:
                return False
        if K.order == Q.order:
            return True
        Q = coset_action(Q, K)
    return True


def is_p_nilpotent(G: PermGroup, p: int) -> bool:
    """Whether ``G`` has a normal ``p``-complement."""
    return o_p_prime(G, p).order == G.order // p_part(G.order, p)


def is_frobenius_with_complement(G: PermGroup, H: PermGroup) -> bool:
    """``H`` is self-normalizing in ``G`` and meets each other conjugate trivially."""
    if not H.is_subgroup_of(G):
        raise InputError("complement candidate is not a subgroup of the group")
    if H.order == 1 or H.order == G.order:
        return False
    if normalizer(G, H).order != H.order:
        return False
    return all(intersection(H, K).order == 1 for _, K in conjugates(G, H)[1:])


def frobenius_complement(G: PermGroup, lattice: SubgroupLattice | None = None) -> PermGroup | None:
    """A Frobenius complement of ``G`` if ``G`` is a Frobenius group, else ``None``."""
    n = G.order
    lat = lattice or SubgroupLattice(G)
    for sub in lat.class_representatives():
        h = sub.order
        if h == 1 or h == n or (n // h - 1) % h:
            continue
        H = lat.to_group(sub)
        if is_frobenius_with_complement(G, H):
            return H
    return None


def is_frobenius_group(G: PermGroup) -> bool:
    return frobenius_complement(G) is not None


def induces_frobenius_automorphism(G: PermGroup, x: Permutation, K: PermGroup) -> bool:
    """Whether conjugation by ``x`` is a Frobenius automorphism of ``K``.

    Every power ``x^k`` that acts nontrivially on ``K`` must have
    ``C_K(x^k) = 1``; powers centralizing ``K`` induce the identity
    automorphism and are skipped.
    """
    if not K.is_subgroup_of(G) or not G.contains(x):
        raise InputError("element and subgroup must lie in the group")
    if not all(K.contains(k.conjugate(x)) for k in K.generators):
        raise InputError(f"{x} does not normalize the subgroup")
    if K.order == 1:
        return True
    y = x
    for _ in range(1, x.order()):
        acts = any(k.conjugate(y) != k for k in K.generators)
        if acts and centralizer(K, y).order != 1:
            return False
        y = y * x
    return True


@dataclass
class StructureCache:
    """Memo of structural subgroups of one group, confined to one computation."""

    group: PermGroup
    _sylow: dict[int, PermGroup] = field(default_factory=dict)
    _o_p: dict[int, PermGroup] = field(default_factory=dict)
    _o_p_prime: dict[int, PermGroup] = field(default_factory=dict)
    _radical: PermGroup | None = None
    _fitting: PermGroup | None = None
    _derived: list[PermGroup] | None = None
    _classes: list | None = None
    _normalizers: dict[bytes, PermGroup] = field(default_factory=dict)

    def sylow(self, p: int) -> PermGroup:
        if p not in self._sylow:
            self._sylow[p] = sylow_subgroup(self.group, p)
        return self._sylow[p]

    def o_p(self, p: int) -> PermGroup:
        if p not in self._o_p:
            P = self.sylow(p)
            self._o_p[p] = P if P.order == 1 else normal_core(self.group, P)
        return self._o_p[p]

    def o_p_prime(self, p: int) -> PermGroup:
        if p not in self._o_p_prime:
            self._o_p_prime[p] = o_p_prime(self.group, p)
        return self._o_p_prime[p]

    def radical(self) -> PermGroup:
        if self._radical is None:
            self._radical = solvable_radical(self.group)
        return self._radical

    def fitting(self) -> PermGroup:
        if self._fitting is None:
            self._fitting = join_all(
                [self.o_p(p) for p in prime_factors(self.group.order)], self.group.degree
            )
        return self._fitting

    def derived_series(self) -> list[PermGroup]:
        if self._derived is None:
            self._derived = derived_series(self.group)
        return self._derived

    def classes(self):
        if self._classes is None:
            self._classes = conjugacy_classes(self.group)
        return self._classes

    def normalizer(self, H: PermGroup) -> PermGroup:
        key = H.element_key()
        if key not in self._normalizers:
            self._normalizers[key] = normalizer(self.group, H)
        return self._normalizers[key]


__all__ = [
    "StructureCache",
    "fitting",
    "frobenius_complement",
    "induces_frobenius_automorphism",
    "is_frobenius_group",
    "is_frobenius_with_complement",
    "is_p_nilpotent",
    "is_p_solvable",
    "is_solvable",
    "o_p",
    "o_p_prime",
    "solvable_radical",
    "sylow_subgroup",
]
