"""Discovery of hypothesis instances up to conjugacy."""

from __future__ import annotations

from collections import Counter

import numpy as np

from ..errors import check_subgroup_bound
from ..group import PermGroup, row_orders
from ..lattice import SubgroupLattice
from ..numtheory import is_p_power, require_prime
from ..perm import Permutation
from ..subgroups import class_labels, conjugates
from ..structure import sylow_subgroup


def order_p_subgroups(G: PermGroup, p: int) -> list[PermGroup]:
    """One subgroup of order ``p`` per ``G``-conjugacy class.

    ``<x>`` and ``<y>`` are conjugate iff ``y`` is conjugate to a power of
    ``x``, so classes of elements are merged along powers.
    """
    require_prime(p)
    if G.order % p:
        return []
    labels = class_labels(G)
    idx = G.element_index()
    E = idx.rows
    orders = row_orders(E)
    done: set[int] = set()
    out = []
    for k in np.flatnonzero(orders == p).tolist():
        if int(labels[k]) in done:
            continue
        x = Permutation(E[k].tolist(), check=False)
        y = x
        for _ in range(p - 1):
            done.add(int(labels[idx.lookup(np.array([y.images]))[0]]))
            y = y * x
        out.append(PermGroup(G.degree, [x]))
    return out


def _signature(H: PermGroup) -> tuple:
    """Conjugation invariant: multiset of element cycle types."""
    counts = Counter()
    for row in H.element_array().tolist():
        seen = [False] * len(row)
        lengths = []
        for i in range(len(row)):
            if not seen[i]:
                n, j = 0, i
                while not seen[j]:
                    seen[j] = True
                    j = row[j]
                    n += 1
                if n > 1:
                    lengths.append(n)
        counts[tuple(sorted(lengths))] += 1
    return (H.order, tuple(sorted(counts.items())))


class ConjugacyDeduper:
    """Keeps one subgroup per ``G``-conjugacy class."""

    def __init__(self, G: PermGroup):
        self.G = G
        self.reps: list[PermGroup] = []
        self._by_sig: dict[tuple, list[int]] = {}
        self._orbit_keys: dict[int, set[bytes]] = {}

    def _keys(self, i: int) -> set[bytes]:
        if i not in self._orbit_keys:
            self._orbit_keys[i] = {K.element_key() for _, K in conjugates(self.G, self.reps[i])}
        return self._orbit_keys[i]

    def add(self, H: PermGroup) -> bool:
        sig = _signature(H)
        key = H.element_key()
        for i in self._by_sig.get(sig, []):
            if key in self._keys(i):
                return False
        self._by_sig.setdefault(sig, []).append(len(self.reps))
        self.reps.append(H)
        return True


def p_subgroups(G: PermGroup, p: int, abelian_only: bool = True, bound: int | None = None) -> list[PermGroup]:
    """Nontrivial ``p``-subgroups (abelian ones by default), one per ``G``-class.

    Every ``p``-subgroup is conjugate into a fixed Sylow subgroup, so only the
    Sylow subgroup's lattice is built.
    """
    require_prime(p)
    P = sylow_subgroup(G, p)
    if P.order == 1:
        return []
    check_subgroup_bound(P.order, "Sylow subgroup lattice", bound)
    lat = SubgroupLattice(P, bound)
    dedup = ConjugacyDeduper(G)
    for sub in lat.subgroups:
        if sub.order == 1:
            continue
        H = lat.to_group(sub)
        if abelian_only and not H.is_abelian():
            continue
        dedup.add(H)
    return dedup.reps


def subgroup_classes(G: PermGroup, bound: int | None = None) -> tuple[SubgroupLattice, list]:
    """The lattice of ``G`` and its conjugacy-class representatives."""
    lat = SubgroupLattice(G, bound)
    return lat, lat.class_representatives()


def is_p_group(H: PermGroup, p: int) -> bool:
    return is_p_power(H.order, p)


__all__ = ["ConjugacyDeduper", "is_p_group", "order_p_subgroups", "p_subgroups", "subgroup_classes"]
