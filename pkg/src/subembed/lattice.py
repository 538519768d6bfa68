"""Subgroup lattices of small groups by cyclic closure.

Every subgroup is a join of cyclic subgroups, so the lattice is obtained by
starting from the cyclic subgroups and joining each discovered subgroup with
every cyclic subgroup it does not already contain.  Elements are indexed
once; subgroups are boolean membership vectors over that index, which makes
deduplication exact (no fingerprint collisions are possible).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import check_subgroup_bound
from .group import PermGroup, compose_rows, conjugate_rows
from .numtheory import prime_factors
from .perm import Permutation


@dataclass
class Sub:
    """One subgroup inside a :class:`SubgroupLattice`."""

    index: int
    members: np.ndarray  # bool over the element index of the ambient group
    gens: tuple[int, ...]  # element indices
    order: int
    key: bytes = field(repr=False)
    conj_class: int = -1
    normal: bool = False


class SubgroupLattice:
    """All subgroups of ``G`` (``|G|`` at most the subgroup bound)."""

    def __init__(self, G: PermGroup, bound: int | None = None):
        check_subgroup_bound(G.order, "subgroup lattice", bound)
        self.group = G
        idx = G.element_index()
        self.rows = idx.rows
        n = len(self.rows)
        self.size = n
        # right multiplication by each element: mul[s][x] = index of x*s
        table = np.empty((n, n), dtype=np.int32)
        for s in range(n):
            table[s] = idx.lookup(compose_rows(self.rows, self.rows[s]))
        self._mul = table
        self._conj = [idx.lookup(conjugate_rows(self.rows, g.images)) for g in G.generators]
        self.subgroups: list[Sub] = []
        self._by_key: dict[bytes, Sub] = {}
        self._enumerate()
        self._classify()

    # ------------------------------------------------------------ enumeration
    def _closure(self, start: np.ndarray, gens: tuple[int, ...]) -> np.ndarray:
        members = start.copy()
        frontier = np.flatnonzero(members)
        g = np.asarray(gens)
        while len(frontier):
            prods = self._mul[g][:, frontier].ravel()
            new = np.unique(prods[~members[prods]])
            members[new] = True
            frontier = new
        return members

    def _add(self, members: np.ndarray, gens: tuple[int, ...]) -> Sub | None:
        key = np.packbits(members).tobytes()
        if key in self._by_key:
            return None
        sub = Sub(len(self.subgroups), members, gens, int(members.sum()), key)
        self.subgroups.append(sub)
        self._by_key[key] = sub
        return sub

    def _enumerate(self) -> None:
        n = self.size
        trivial = np.zeros(n, dtype=bool)
        trivial[0] = True
        self._add(trivial, ())
        cyclic: list[tuple[int, np.ndarray]] = []
        for x in range(1, n):
            members = self._closure(trivial, (x,))
            if self._add(members, (x,)) is not None:
                cyclic.append((x, members))
        pos = 1
        while pos < len(self.subgroups):
            S = self.subgroups[pos]
            pos += 1
            for x, _ in cyclic:
                if S.members[x]:
                    continue
                members = self._closure(S.members, S.gens + (x,))
                self._add(members, S.gens + (x,))
        order = sorted(self.subgroups, key=lambda s: (s.order, s.index))
        for i, s in enumerate(order):
            s.index = i
        self.subgroups = order

    def _conjugate_key(self, members: np.ndarray, g: int) -> bytes:
        out = np.zeros_like(members)
        out[self._conj[g][members]] = True
        return np.packbits(out).tobytes()

    def _classify(self) -> None:
        label = 0
        for s in self.subgroups:
            if s.conj_class >= 0:
                continue
            orbit = [s]
            s.conj_class = label
            pos = 0
            while pos < len(orbit):
                t = orbit[pos]
                pos += 1
                for g in range(len(self._conj)):
                    other = self._by_key[self._conjugate_key(t.members, g)]
                    if other.conj_class < 0:
                        other.conj_class = label
                        orbit.append(other)
            s.normal = len(orbit) == 1
            label += 1

    # ------------------------------------------------------------------ views
    def to_group(self, sub: Sub) -> PermGroup:
        gens = [Permutation(self.rows[i].tolist(), check=False) for i in sub.gens]
        return PermGroup(self.group.degree, gens)

    def find(self, H: PermGroup) -> Sub:
        """The lattice entry with the same element set as ``H`` (``H`` must lie in ``G``)."""
        idx = self.group.element_index()
        members = np.zeros(self.size, dtype=bool)
        members[idx.lookup(H.element_array())] = True
        return self._by_key[np.packbits(members).tobytes()]

    def class_representatives(self) -> list[Sub]:
        seen = set()
        reps = []
        for s in self.subgroups:
            if s.conj_class not in seen:
                seen.add(s.conj_class)
                reps.append(s)
        return reps

    def class_of(self, sub: Sub) -> list[Sub]:
        return [s for s in self.subgroups if s.conj_class == sub.conj_class]

    @staticmethod
    def contains(big: Sub, small: Sub) -> bool:
        return small.order <= big.order and not (small.members & ~big.members).any()

    def subgroups_of(self, sub: Sub) -> list[Sub]:
        return [s for s in self.subgroups if self.contains(sub, s)]

    def maximal_in(self, sub: Sub) -> list[Sub]:
        """Maximal subgroups of ``sub`` (as lattice entries)."""
        below = [s for s in self.subgroups_of(sub) if s.order < sub.order]
        out = []
        for s in below:
            if not any(
                t.order > s.order and t.order % s.order == 0 and self.contains(t, s)
                for t in below
            ):
                out.append(s)
        return out

    def is_normal_in(self, big: Sub, small: Sub) -> bool:
        """Whether ``small`` is normalized by every element of ``big``."""
        members = np.flatnonzero(small.members)
        return all(
            small.members[self._conj_by(members, int(g))].all()
            for g in np.flatnonzero(big.members)
        )

    def _inverse(self, g: int) -> int:
        # mul[y][g] = g*y; the inverse is the y with g*y = identity (index 0)
        return int(np.flatnonzero(self._mul[:, g] == 0)[0])

    def _conj_by(self, members: np.ndarray, g: int) -> np.ndarray:
        """Indices of ``g^-1 x g`` for ``x`` in ``members``."""
        left = self._mul[members, self._inverse(g)]
        return self._mul[g][left]


def all_subgroups(G: PermGroup, up_to_conjugacy: bool = False, bound: int | None = None) -> list[PermGroup]:
    lat = SubgroupLattice(G, bound)
    subs = lat.class_representatives() if up_to_conjugacy else lat.subgroups
    return [lat.to_group(s) for s in subs]


def maximal_subgroups(G: PermGroup, bound: int | None = None) -> list[PermGroup]:
    lat = SubgroupLattice(G, bound)
    return [lat.to_group(s) for s in lat.maximal_in(lat.subgroups[-1])]


def frattini(G: PermGroup, bound: int | None = None) -> PermGroup:
    """Intersection of all maximal subgroups (``G`` itself when trivial).

    For a ``p``-group this is ``P' P^p``, which avoids building the lattice.
    """
    primes = prime_factors(G.order)
    if len(primes) == 1:
        return frattini_p_group(G, primes[0], bound)
    return frattini_by_lattice(G, bound)


def frattini_p_group(P: PermGroup, p: int, bound: int | None = None) -> PermGroup:
    """``P' P^p``: the derived subgroup joined with all ``p``-th powers."""
    from .subgroups import derived_subgroup, join

    rows = P.element_array(bound)
    powers = rows
    for _ in range(p - 1):
        powers = np.take_along_axis(rows, powers, axis=1)
    return join(derived_subgroup(P), PermGroup.from_rows(powers, P.degree))


def frattini_by_lattice(G: PermGroup, bound: int | None = None) -> PermGroup:
    lat = SubgroupLattice(G, bound)
    top = lat.subgroups[-1]
    maximal = lat.maximal_in(top)
    if not maximal:
        return G
    members = top.members.copy()
    for s in maximal:
        members &= s.members
    rows = lat.rows[members]
    return PermGroup.from_rows(rows, G.degree)
