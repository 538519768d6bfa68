"""Permutation groups backed by a base and strong generating set.

The stabilizer chain is built by a deterministic Schreier-Sims procedure:
base points are taken as the first point moved by a generator that fixes
all current base points, and Schreier generators are examined in a fixed
order.  Rebuilding from the same generator list always yields the same
chain, hence the same element traversal order.

Bulk work (element enumeration, membership of many permutations at once)
is vectorized over numpy arrays whose rows are image arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InputError, check_element_bound
from .numtheory import is_p_power, require_prime
from .perm import Permutation, _inv, _mul

Perm = tuple[int, ...]

_KEY_SEED = 0x5EED_CAFE


def _dtype(degree: int):
    return np.int16 if degree < 2**15 else np.int32


_weights_cache: dict[int, np.ndarray] = {}


def row_keys(rows: np.ndarray) -> np.ndarray:
    """64-bit fingerprints of permutation rows (wrapping weighted sums).

    Fingerprints are only ever trusted inside a set whose keys were checked to
    be pairwise distinct (see :class:`ElementIndex`).
    """
    n = rows.shape[1]
    w = _weights_cache.get(n)
    if w is None:
        rng = np.random.default_rng(_KEY_SEED + n)
        w = rng.integers(1, 2**63, size=n, dtype=np.uint64) | np.uint64(1)
        _weights_cache[n] = w
    with np.errstate(over="ignore"):
        return (rows.astype(np.uint64) * w).sum(axis=1, dtype=np.uint64)


def compose_rows(rows: np.ndarray, perm: Sequence[int] | np.ndarray) -> np.ndarray:
    """Right-multiply every row by ``perm``: ``out[k] = rows[k] * perm``."""
    return np.asarray(perm)[rows]


def left_compose_rows(perm: Sequence[int] | np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Left-multiply every row by ``perm``: ``out[k] = perm * rows[k]``."""
    return rows[:, np.asarray(perm)]


def conjugate_rows(rows: np.ndarray, g: Sequence[int] | np.ndarray) -> np.ndarray:
    """Conjugate every row by the fixed element ``g``: ``g^-1 * row * g``."""
    g = np.asarray(g)
    out = np.empty_like(rows)
    out[:, g] = g[rows]
    return out


def conjugate_by_rows(x: Sequence[int] | np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Conjugate the fixed element ``x`` by every row ``g``: ``g^-1 * x * g``."""
    x = np.asarray(x)
    out = np.empty_like(rows)
    np.put_along_axis(out, rows, rows[:, x], axis=1)
    return out


def inverse_rows(rows: np.ndarray) -> np.ndarray:
    out = np.empty_like(rows)
    idx = np.broadcast_to(np.arange(rows.shape[1], dtype=rows.dtype), rows.shape)
    np.put_along_axis(out, rows, idx, axis=1)
    return out


def row_orders(rows: np.ndarray) -> np.ndarray:
    """Element orders of every row (lcm of cycle lengths)."""
    m, n = rows.shape
    ident = np.arange(n)
    orders = np.ones(m, dtype=np.int64)
    if m == 0:
        return orders
    # cycle length through each point, by iterating the permutation
    cur = np.broadcast_to(ident, rows.shape).copy()
    length = np.zeros(rows.shape, dtype=np.int64)
    done = np.zeros(rows.shape, dtype=bool)
    k = 0
    while not done.all():
        k += 1
        cur = np.take_along_axis(rows, cur, axis=1)
        hit = (cur == ident) & ~done
        length[hit] = k
        done |= hit
    for j in range(n):
        orders = np.lcm(orders, length[:, j])
    return orders


@dataclass
class _Level:
    point: int
    gens: list[Perm]
    transversal: dict[int, Perm]
    inverses: dict[int, Perm]


def _extend_orbit(level: _Level, new_gen: Perm | None) -> None:
    """Grow ``level.transversal`` after ``new_gen`` joined ``level.gens``.

    Existing transversal entries never change, which keeps earlier Schreier
    generator checks valid.
    """
    trans = level.transversal
    known = set(trans)
    fresh = list(trans)
    # BFS over every point with every generator; cheap at desk-scale degrees
    pos = 0
    while pos < len(fresh):
        beta = fresh[pos]
        pos += 1
        u = trans[beta]
        for s in level.gens:
            gamma = s[beta]
            if gamma not in known:
                known.add(gamma)
                trans[gamma] = _mul(u, s)
                fresh.append(gamma)
    for beta, u in trans.items():
        if beta not in level.inverses:
            level.inverses[beta] = _inv(u)


def _schreier_sims(
    degree: int,
    gens: Sequence[Perm],
    base: Sequence[int] = (),
    strong: Sequence[Perm] = (),
) -> tuple[list[int], list[Perm], list[_Level]]:
    ident = tuple(range(degree))
    base = list(base)
    S: list[Perm] = []
    seen: set[Perm] = set()
    for g in list(strong) + list(gens):
        if g != ident and g not in seen:
            seen.add(g)
            S.append(g)
    for g in S:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(degree) if g[i] != i))

    levels: list[_Level] = []
    for i, b in enumerate(base):
        prefix = base[:i]
        lg = [s for s in S if all(s[c] == c for c in prefix)]
        level = _Level(b, lg, {b: ident}, {})
        _extend_orbit(level, None)
        levels.append(level)
    checked: list[set[tuple[int, int]]] = [set() for _ in levels]

    def strip(h: Perm, start: int) -> tuple[Perm, int]:
        for l in range(start, len(levels)):
            lev = levels[l]
            beta = h[lev.point]
            if beta not in lev.transversal:
                return h, l
            if beta != lev.point:
                h = _mul(h, lev.inverses[beta])
        return h, len(levels)

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        chk = checked[i]
        found = None
        for beta in list(lev.transversal):
            u = lev.transversal[beta]
            for xi, x in enumerate(lev.gens):
                if (beta, xi) in chk:
                    continue
                chk.add((beta, xi))
                gamma = x[beta]
                h = _mul(_mul(u, x), lev.inverses[gamma])
                if h == ident:
                    continue
                y, j = strip(h, i + 1)
                if j < len(levels) or y != ident:
                    found = (y, j)
                    break
            if found:
                break
        if found is None:
            i -= 1
            continue
        y, j = found
        if j == len(levels):
            b = next(p for p in range(degree) if y[p] != p)
            base.append(b)
            levels.append(_Level(b, [], {b: ident}, {b: ident}))
            checked.append(set())
        S.append(y)
        for l in range(j + 1):
            levels[l].gens.append(y)
            _extend_orbit(levels[l], y)
        i = j
    return base, S, levels


class ElementIndex:
    """Row array of all elements of a group plus an exact key lookup."""

    def __init__(self, rows: np.ndarray):
        self.rows = rows
        self.keys = row_keys(rows)
        self._order = np.argsort(self.keys, kind="stable")
        self._sorted = self.keys[self._order]
        if len(self._sorted) > 1 and (np.diff(self._sorted) == 0).any():
            raise RuntimeError("element fingerprint collision; change _KEY_SEED")

    def __len__(self) -> int:
        return len(self.rows)

    def lookup(self, rows: np.ndarray, *, verify: bool = False) -> np.ndarray:
        """Indices of ``rows`` (which must be group elements unless ``verify``)."""
        k = row_keys(rows)
        pos = np.searchsorted(self._sorted, k)
        pos = np.minimum(pos, len(self._sorted) - 1)
        idx = self._order[pos]
        if verify:
            bad = (self._sorted[pos] != k) | (self.rows[idx] != rows).any(axis=1)
            idx = np.where(bad, -1, idx)
        return idx


class PermGroup:
    """An immutable permutation group with a cached stabilizer chain."""

    __slots__ = ("degree", "generators", "base", "strong_generators", "order", "_levels", "_cache")

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), *, _chain=None):
        if degree < 1:
            raise InputError("degree must be positive")
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Permutation):
                raise InputError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise InputError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        if _chain is None:
            _chain = _schreier_sims(degree, [g.images for g in self.generators])
        base, strong, levels = _chain
        self.base = tuple(base)
        self.strong_generators = tuple(Permutation(s, check=False) for s in strong)
        self._levels = levels
        self.order = math.prod(len(lev.transversal) for lev in levels)
        self._cache: dict = {}

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree, ())

    def _extended(self, extra: Sequence[Permutation]) -> PermGroup:
        """Group generated by ``self`` and ``extra``, reusing the current chain."""
        extra = [g for g in extra if not g.is_identity()]
        if not extra:
            return self
        chain = _schreier_sims(
            self.degree,
            [g.images for g in extra],
            self.base,
            [s.images for s in self.strong_generators],
        )
        return PermGroup(self.degree, self.generators + tuple(extra), _chain=chain)

    @classmethod
    def from_rows(cls, rows: np.ndarray, degree: int, order: int | None = None) -> PermGroup:
        """Group generated by a set of rows, with generators picked greedily.

        Walks the rows in order and keeps each one not already generated, so
        the generating set is deterministic and short.
        """
        group = cls.trivial(degree)
        rows = np.asarray(rows)
        while len(rows) and (order is None or group.order < order):
            outside = ~group.contains_rows(rows)
            if not outside.any():
                break
            k = int(np.argmax(outside))
            group = group._extended([Permutation(rows[k].tolist(), check=False)])
            rows = rows[k + 1:]
        return group

    # ------------------------------------------------------------------ basics
    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def basic_orbits(self) -> list[tuple[int, dict[int, Permutation]]]:
        return [
            (lev.point, {b: Permutation(u, check=False) for b, u in lev.transversal.items()})
            for lev in self._levels
        ]

    def is_trivial(self) -> bool:
        return self.order == 1

    def _check_degree(self, g: Permutation) -> None:
        if g.degree != self.degree:
            raise InputError(f"degree mismatch: element of degree {g.degree}, group of degree {self.degree}")

    def sift(self, g: Permutation) -> tuple[Permutation, int]:
        h = g.images
        for l, lev in enumerate(self._levels):
            beta = h[lev.point]
            if beta not in lev.transversal:
                return Permutation(h, check=False), l
            h = _mul(h, lev.inverses[beta])
        return Permutation(h, check=False), len(self._levels)

    def contains(self, g: Permutation) -> bool:
        self._check_degree(g)
        h = g.images
        for lev in self._levels:
            beta = h[lev.point]
            if beta not in lev.transversal:
                return False
            h = _mul(h, lev.inverses[beta])
        return all(i == j for i, j in enumerate(h))

    __contains__ = contains

    def _level_arrays(self):
        arrs = self._cache.get("levels")
        if arrs is None:
            n = self.degree
            dt = _dtype(n)
            arrs = []
            for lev in self._levels:
                in_orbit = np.zeros(n, dtype=bool)
                uinv = np.tile(np.arange(n, dtype=dt), (n, 1))
                pts = list(lev.transversal)
                in_orbit[pts] = True
                for b in pts:
                    uinv[b] = lev.inverses[b]
                trans = np.array([lev.transversal[b] for b in pts], dtype=dt)
                arrs.append((lev.point, in_orbit, uinv, trans))
            self._cache["levels"] = arrs
        return arrs

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        """Vectorized membership test for each row of ``rows``."""
        rows = np.asarray(rows)
        if rows.ndim != 2 or rows.shape[1] != self.degree:
            raise InputError(f"rows must have shape (m, {self.degree})")
        ok = np.ones(len(rows), dtype=bool)
        cur = rows
        for point, in_orbit, uinv, _ in self._level_arrays():
            pts = cur[:, point]
            ok &= in_orbit[pts]
            cur = uinv[pts[:, None], cur]
        ok &= (cur == np.arange(self.degree)).all(axis=1)
        return ok

    def element_array(self, bound: int | None = None) -> np.ndarray:
        """All elements as an ``(order, degree)`` array, in traversal order.

        Traversal order: the identity first, then products
        ``u_k * ... * u_1 * u_0`` with the level-0 transversal outermost.
        """
        arr = self._cache.get("elements")
        if arr is None:
            check_element_bound(self.order, "element enumeration", bound)
            dt = _dtype(self.degree)
            arr = np.arange(self.degree, dtype=dt)[None, :]
            for _, _, _, trans in reversed(self._level_arrays()):
                arr = trans[:, arr].reshape(-1, self.degree)
            arr.setflags(write=False)
            self._cache["elements"] = arr
        return arr

    def element_index(self, bound: int | None = None) -> ElementIndex:
        idx = self._cache.get("index")
        if idx is None:
            idx = ElementIndex(self.element_array(bound))
            self._cache["index"] = idx
        return idx

    def elements(self, bound: int | None = None) -> Iterator[Permutation]:
        for row in self.element_array(bound).tolist():
            yield Permutation(row, check=False)

    # -------------------------------------------------------------- relations
    def is_subgroup_of(self, other: PermGroup) -> bool:
        if self.degree != other.degree:
            return False
        if other.order % self.order:
            return False
        return all(other.contains(g) for g in self.generators)

    def __le__(self, other: PermGroup) -> bool:
        return self.is_subgroup_of(other)

    def __lt__(self, other: PermGroup) -> bool:
        return self.order < other.order and self.is_subgroup_of(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.order == other.order
            and self.is_subgroup_of(other)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.order))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def element_key(self) -> bytes:
        """Exact fingerprint of the element set (sorted element fingerprints)."""
        key = self._cache.get("setkey")
        if key is None:
            key = np.sort(row_keys(self.element_array())).tobytes()
            self._cache["setkey"] = key
        return key

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    def __getstate__(self):
        return {
            "degree": self.degree,
            "generators": [g.images for g in self.generators],
            "chain": (list(self.base), [s.images for s in self.strong_generators]),
        }

    def __setstate__(self, state):
        base, strong = state["chain"]
        gens = [Permutation(g, check=False) for g in state["generators"]]
        chain = _schreier_sims(state["degree"], [], base, strong)
        PermGroup.__init__(self, state["degree"], gens, _chain=chain)


# ---------------------------------------------------------------- functions
def group_from_generators(gens: Sequence[Permutation], degree: int) -> PermGroup:
    """Build ``<gens>`` on ``degree`` points; an empty list gives the trivial group."""
    return PermGroup(degree, gens)


def order(G: PermGroup) -> int:
    return G.order


def contains(G: PermGroup, g: Permutation) -> bool:
    return G.contains(g)


def elements(G: PermGroup, bound: int | None = None) -> Iterator[Permutation]:
    return G.elements(bound)


@dataclass(frozen=True)
class GroupFlags:
    is_abelian: bool
    is_p_group: bool
    is_elementary_abelian: bool
    is_cyclic: bool


def is_cyclic(G: PermGroup, bound: int | None = None) -> bool:
    if G.order == 1 or len(G.generators) == 1:
        return True
    if not G.is_abelian():
        return False
    orders = row_orders(G.element_array(bound))
    return bool((orders == G.order).any())


def classify_flags(G: PermGroup, p: int) -> GroupFlags:
    require_prime(p)
    abelian = G.is_abelian()
    p_group = is_p_power(G.order, p)
    elementary = abelian and p_group and all(p % g.order() == 0 for g in G.generators)
    return GroupFlags(abelian, p_group, elementary, is_cyclic(G))
