"""Subgroup-level operators: conjugates, joins, intersections, normalizers,
closures, quotients by coset action, conjugacy classes and lattices.

Normalizers, centralizers and intersections are computed by scanning the
elements of the relevant group (vectorized).  That is linear in the group
order, which is fine up to a few hundred thousand elements and is the
documented complexity of this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import InputError, check_element_bound
from .group import (
    PermGroup,
    _schreier_sims,
    compose_rows,
    conjugate_by_rows,
    conjugate_rows,
    left_compose_rows,
    row_keys,
)
from .perm import Permutation


def _same_degree(*groups: PermGroup) -> None:
    degrees = {G.degree for G in groups}
    if len(degrees) != 1:
        raise InputError(f"degree mismatch: {sorted(degrees)}")


def trivial_subgroup(G: PermGroup) -> PermGroup:
    return PermGroup.trivial(G.degree)


def conjugate_subgroup(H: PermGroup, g: Permutation) -> PermGroup:
    """``H^g``; the stabilizer chain is transported rather than rebuilt."""
    if g.degree != H.degree:
        raise InputError(f"degree mismatch: {H.degree} vs {g.degree}")
    gens = [h.conjugate(g) for h in H.generators]
    base = [g(b) for b in H.base]
    strong = [s.conjugate(g).images for s in H.strong_generators]
    chain = _schreier_sims(H.degree, [], base, strong)
    return PermGroup(H.degree, gens, _chain=chain)


def join(A: PermGroup, B: PermGroup) -> PermGroup:
    _same_degree(A, B)
    if B.order == 1 or B.is_subgroup_of(A):
        return A
    if A.order == 1 or A.is_subgroup_of(B):
        return B
    return A._extended(B.generators)


def join_all(groups: list[PermGroup], degree: int) -> PermGroup:
    out = PermGroup.trivial(degree)
    for K in groups:
        out = join(out, K)
    return out


def intersection(A: PermGroup, B: PermGroup, bound: int | None = None) -> PermGroup:
    """``A ∩ B`` by scanning the smaller group against the larger."""
    _same_degree(A, B)
    small, large = (A, B) if A.order <= B.order else (B, A)
    if small.is_subgroup_of(large):
        return small
    rows = small.element_array(bound)
    return PermGroup.from_rows(rows[large.contains_rows(rows)], small.degree)


def product_order(A: PermGroup, B: PermGroup) -> int:
    """Size of the set ``AB``, i.e. ``|A||B|/|A ∩ B|``."""
    return A.order * B.order // intersection(A, B).order


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    """Whether ``H`` is normalized by every generator of ``G``."""
    _same_degree(G, H)
    return all(H.contains(h.conjugate(g)) for g in G.generators for h in H.generators)


def normalizer(G: PermGroup, H: PermGroup, bound: int | None = None) -> PermGroup:
    """``N_G(H)``: elements of ``G`` whose conjugates of the generators of ``H`` sift into ``H``."""
    _same_degree(G, H)
    if is_normal(G, H) and H.is_subgroup_of(G):
        return G
    E = G.element_array(bound)
    mask = np.ones(len(E), dtype=bool)
    for h in H.generators:
        sel = np.flatnonzero(mask)
        mask[sel] = H.contains_rows(conjugate_by_rows(h.images, E[sel]))
    return PermGroup.from_rows(E[mask], G.degree)


def centralizer(G: PermGroup, target, bound: int | None = None) -> PermGroup:
    """``C_G(x)`` for a permutation or ``C_G(K)`` for a group ``K``."""
    if isinstance(target, Permutation):
        gens = [target]
    elif isinstance(target, PermGroup):
        gens = list(target.generators)
    else:
        raise InputError(f"cannot centralize {type(target).__name__}")
    for x in gens:
        G._check_degree(x)
    E = G.element_array(bound)
    mask = np.ones(len(E), dtype=bool)
    for x in gens:
        sel = np.flatnonzero(mask)
        conj = conjugate_by_rows(x.images, E[sel])
        mask[sel] = (conj == np.asarray(x.images)).all(axis=1)
    return PermGroup.from_rows(E[mask], G.degree, order=None)


def center(G: PermGroup, bound: int | None = None) -> PermGroup:
    if G.is_abelian():
        return G
    return centralizer(G, G, bound)


def normal_closure(G: PermGroup, H: PermGroup) -> PermGroup:
    """Smallest normal subgroup of ``G`` containing ``H``."""
    _same_degree(G, H)
    N = H
    changed = True
    while changed:
        changed = False
        for x in list(N.generators):
            for g in G.generators:
                y = x.conjugate(g)
                if not N.contains(y):
                    N = N._extended([y])
                    changed = True
    return N


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = [a.commutator(b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    comms = [c for c in comms if not c.is_identity()]
    return normal_closure(G, PermGroup(G.degree, comms))


def derived_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)


def conjugates(G: PermGroup, H: PermGroup, bound: int | None = None) -> list[tuple[Permutation, PermGroup]]:
    """Distinct conjugates ``H^t`` with ``t`` running over a right transversal of ``N_G(H)``.

    Found by breadth-first search over the generators of ``G``, so the list
    (and the transversal) only depends on the generator order.  The first
    entry is ``(identity, H)``.
    """
    _same_degree(G, H)
    rows = H.element_array(bound)
    key = np.sort(row_keys(rows)).tobytes()
    orbit = [(G.identity, rows)]
    seen = {key}
    pos = 0
    while pos < len(orbit):
        t, r = orbit[pos]
        pos += 1
        for s in G.generators:
            r2 = conjugate_rows(r, s.images)
            k2 = np.sort(row_keys(r2)).tobytes()
            if k2 not in seen:
                seen.add(k2)
                orbit.append((t * s, r2))
        check_element_bound(len(orbit) * len(rows), "conjugate orbit storage", bound)
    return [(t, H if t.is_identity() else conjugate_subgroup(H, t)) for t, _ in orbit]


def right_transversal(G: PermGroup, H: PermGroup, bound: int | None = None) -> list[Permutation]:
    """Representatives of the right cosets ``Hg`` of ``H`` in ``G``, in traversal order."""
    E = G.element_array(bound)
    idx = G.element_index(bound)
    covered = np.zeros(len(E), dtype=bool)
    Hrows = H.element_array(bound)
    reps = []
    for k in range(len(E)):
        if covered[k]:
            continue
        reps.append(Permutation(E[k].tolist(), check=False))
        covered[idx.lookup(compose_rows(Hrows, E[k]))] = True
    return reps


def normal_core(G: PermGroup, H: PermGroup, bound: int | None = None) -> PermGroup:
    """Largest normal subgroup of ``G`` inside ``H``: the intersection of all ``H^g``."""
    if is_normal(G, H):
        return H
    rows = H.element_array(bound)
    for _, K in conjugates(G, H, bound)[1:]:
        rows = rows[K.contains_rows(rows)]
        if len(rows) == 1:
            break
    return PermGroup.from_rows(rows, G.degree)


@dataclass(frozen=True)
class Quotient:
    """Concrete image of ``G/N`` acting on the right cosets of ``N``."""

    group: PermGroup
    source: PermGroup
    kernel: PermGroup
    _labels: np.ndarray
    _reps: np.ndarray

    def image(self, g: Permutation) -> Permutation:
        idx = self.source.element_index()
        moved = idx.lookup(compose_rows(self._reps, g.images))
        return Permutation(self._labels[moved].tolist(), check=False)

    def image_group(self, H: PermGroup) -> PermGroup:
        return PermGroup(self.group.degree, [self.image(h) for h in H.generators])

    def preimage(self, K: PermGroup) -> PermGroup:
        """Full preimage in the source group of a subgroup of the quotient."""
        idx = self.source.element_index()
        images = np.array(
            [self._labels[idx.lookup(compose_rows(self._reps, r))] for r in self._reps]
        )
        if self.group.degree == 1:
            keep = np.ones(len(self._reps), dtype=bool)
        else:
            keep = K.contains_rows(images)
        E = idx.rows
        return PermGroup.from_rows(E[keep[self._labels]], self.source.degree)


def quotient(G: PermGroup, N: PermGroup, bound: int | None = None) -> Quotient:
    _same_degree(G, N)
    if not N.is_subgroup_of(G) or not is_normal(G, N):
        raise InputError("coset action needs a normal subgroup")
    index = G.order // N.order
    check_element_bound(index, "quotient degree", bound)
    idx = G.element_index(bound)
    E = idx.rows
    m = len(E)
    if N.order == 1:
        labels = np.arange(m)
    else:
        src, dst = [], []
        for n in N.generators:
            src.append(np.arange(m))
            dst.append(idx.lookup(left_compose_rows(n.images, E)))
        src = np.concatenate(src)
        dst = np.concatenate(dst)
        graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(m, m))
        _, raw = connected_components(graph, directed=True, connection="weak")
        # relabel by first occurrence so the trivial coset is point 0
        _, first = np.unique(raw, return_index=True)
        order = np.argsort(first)
        relabel = np.empty_like(order)
        relabel[order] = np.arange(len(order))
        labels = relabel[raw]
    _, first = np.unique(labels, return_index=True)
    reps = E[first]
    if index == 1:
        Q = PermGroup.trivial(1)
        return Quotient(Q, G, N, labels, reps)
    gens = []
    for g in G.generators:
        moved = idx.lookup(compose_rows(reps, g.images))
        gens.append(Permutation(labels[moved].tolist(), check=False))
    return Quotient(PermGroup(index, gens), G, N, labels, reps)


def coset_action(G: PermGroup, N: PermGroup, bound: int | None = None) -> PermGroup:
    """Permutation group of degree ``|G:N|`` induced on the right cosets of normal ``N``."""
    return quotient(G, N, bound).group


@dataclass(frozen=True)
class ConjClass:
    representative: Permutation
    size: int
    element_order: int


def class_labels(G: PermGroup, bound: int | None = None) -> np.ndarray:
    """Conjugacy-class label of every element, labels ordered by first occurrence."""
    idx = G.element_index(bound)
    E = idx.rows
    m = len(E)
    if not G.generators:
        return np.zeros(1, dtype=np.int64)
    src, dst = [], []
    for g in G.generators:
        src.append(np.arange(m))
        dst.append(idx.lookup(conjugate_rows(E, g.images)))
    graph = coo_matrix(
        (np.ones(m * len(G.generators), dtype=np.int8), (np.concatenate(src), np.concatenate(dst))),
        shape=(m, m),
    )
    _, raw = connected_components(graph, directed=True, connection="weak")
    _, first = np.unique(raw, return_index=True)
    order = np.argsort(first)
    relabel = np.empty_like(order)
    relabel[order] = np.arange(len(order))
    return relabel[raw]


def conjugacy_classes(G: PermGroup, bound: int | None = None) -> list[ConjClass]:
    """Classes in order of their first element in traversal order (identity first)."""
    check_element_bound(G.order, "conjugacy classes", bound)
    labels = class_labels(G, bound)
    E = G.element_array(bound)
    _, first, sizes = np.unique(labels, return_index=True, return_counts=True)
    out = []
    for f, size in sorted(zip(first.tolist(), sizes.tolist())):
        rep = Permutation(E[f].tolist(), check=False)
        out.append(ConjClass(rep, size, rep.order()))
    return out


def conjugacy_class(G: PermGroup, x: Permutation, bound: int | None = None) -> np.ndarray:
    """Rows of the conjugacy class ``x^G`` (unique, in first-occurrence order)."""
    G._check_degree(x)
    E = G.element_array(bound)
    rows = conjugate_by_rows(x.images, E)
    _, first = np.unique(row_keys(rows), return_index=True)
    return rows[np.sort(first)]


def normal_subgroups(G: PermGroup, bound: int | None = None) -> list[PermGroup]:
    """All normal subgroups, as joins of normal closures of conjugacy classes.

    Sorted by order, ties in discovery order.
    """
    closures = []
    for cls in conjugacy_classes(G, bound)[1:]:
        closures.append(normal_closure(G, PermGroup(G.degree, [cls.representative])))
    found = [PermGroup.trivial(G.degree)]
    keys = {found[0].element_key()}
    pos = 0
    while pos < len(found):
        N = found[pos]
        pos += 1
        for C in closures:
            if C.is_subgroup_of(N):
                continue
            J = join(N, C)
            k = J.element_key()
            if k not in keys:
                keys.add(k)
                found.append(J)
    return sorted(found, key=lambda K: K.order)


def iter_elements_outside(G: PermGroup, M: PermGroup, bound: int | None = None) -> Iterator[Permutation]:
    """Elements of ``G - M`` in traversal order."""
    E = G.element_array(bound)
    for row in E[~M.contains_rows(E)].tolist():
        yield Permutation(row, check=False)


# lattice-based operations live in .lattice; re-exported for a flat API
from .lattice import all_subgroups, frattini, maximal_subgroups  # noqa: E402

__all__ = [
    "ConjClass",
    "Quotient",
    "all_subgroups",
    "center",
    "centralizer",
    "class_labels",
    "conjugacy_class",
    "conjugacy_classes",
    "conjugate_subgroup",
    "conjugates",
    "coset_action",
    "derived_series",
    "derived_subgroup",
    "frattini",
    "intersection",
    "is_normal",
    "join",
    "join_all",
    "maximal_subgroups",
    "normal_closure",
    "normal_core",
    "normal_subgroups",
    "normalizer",
    "product_order",
    "quotient",
    "right_transversal",
    "trivial_subgroup",
]
