"""Permutations on ``{0, ..., n-1}`` stored as image tuples.

Products act on the right: ``(p * q)(i) == q(p(i))``, so ``p * q`` means
"first ``p``, then ``q``".  Conjugation follows the same convention,
``x.conjugate(g) == ~g * x * g``.

Cycle notation in text is 1-indexed, e.g. ``"(1,2,3)(4,5)"``.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

from .errors import InputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n == 0:
                raise InputError("a permutation needs a positive degree")
            if sorted(images) != list(range(n)):
                raise InputError(f"not a permutation of 0..{n - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise InputError("degree must be positive")
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> Permutation:
        """Build from 0-indexed cycles; points outside all cycles are fixed."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 0 <= a < degree:
                    raise InputError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise InputError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls(images, check=False)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse 1-indexed cycle notation such as ``"(1,3,2,4)"`` or ``"(1 2)(3 4)"``.

        Cycles are composed left to right, so overlapping cycles are allowed.
        """
        stripped = text.strip()
        if re.sub(_CYCLE_RE, "", stripped).strip():
            raise InputError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                points = [int(t) - 1 for t in tokens]
            except ValueError:
                raise InputError(f"non-integer point in {text!r}") from None
            if any(a < 0 for a in points):
                raise InputError(f"points are 1-indexed in {text!r}")
            if len(set(points)) != len(points):
                raise InputError(f"repeated point inside a cycle of {text!r}")
            if points:
                cycles.append(points)
        top = max((max(c) + 1 for c in cycles), default=1)
        if degree is None:
            degree = top
        elif top > degree:
            raise InputError(f"{text!r} moves point {top} beyond degree {degree}")
        result = cls.identity(degree)
        for c in cycles:
            result = result * cls.from_cycles([c], degree)
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise InputError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(_mul(self.images, other.images), check=False)

    def __invert__(self) -> Permutation:
        return Permutation(_inv(self.images), check=False)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else ~self
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """Return ``g^-1 * self * g``."""
        if g.degree != self.degree:
            raise InputError(f"degree mismatch: {self.degree} vs {g.degree}")
        gi = g.images
        out = [0] * self.degree
        for i, j in enumerate(self.images):
            out[gi[i]] = gi[j]
        return Permutation(out, check=False)

    def commutator(self, other: Permutation) -> Permutation:
        """``[self, other] = self^-1 other^-1 self other``."""
        return ~self * ~other * self * other

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (Permutation, (self.images,))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, degree={self.degree})"


def parse_permutation_list(text: str, degree: int | None = None) -> list[Permutation]:
    """Parse several permutations separated by ``;`` or by ``),(``.

    Adjacent cycles without a separator belong to the same permutation:
    ``"(1,2)(3,4);(1,3)"`` and ``"(1,2)(3,4),(1,3)"`` both give two elements.
    """
    text = text.strip()
    if not text:
        return []
    chunks = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        chunks.extend(p for p in re.split(r"(?<=\))\s*,\s*(?=\()", part) if p.strip())
    perms = [Permutation.parse(c) for c in chunks]
    if degree is None:
        degree = max((p.degree for p in perms), default=1)
    out = []
    for p, chunk in zip(perms, chunks):
        if p.degree > degree:
            raise InputError(f"{chunk!r} moves points beyond degree {degree}")
        out.append(Permutation.parse(chunk, degree))
    return out
