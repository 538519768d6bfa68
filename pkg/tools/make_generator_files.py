"""Regenerate the bundled generator files under src/subembed/data/.

Each group is built from its natural action and then validated by
Schreier-Sims order.  Run from the repository root:

    python tools/make_generator_files.py
"""

from __future__ import annotations

import hashlib
import itertools
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from subembed.group import PermGroup  # noqa: E402
from subembed.perm import Permutation  # noqa: E402

DATA = ROOT / "src" / "subembed" / "data"


class Field:
    """GF(p^n) as polynomials over GF(p) modulo a monic irreducible, encoded base p."""

    def __init__(self, p: int, modulus: list[int]):
        self.p = p
        self.n = len(modulus) - 1
        self.size = p ** self.n
        self.modulus = modulus  # low degree first, monic
        self.add = [[self._add(a, b) for b in range(self.size)] for a in range(self.size)]
        self.mul = [[self._mul(a, b) for b in range(self.size)] for a in range(self.size)]
        self.neg = [next(b for b in range(self.size) if self.add[a][b] == 0) for a in range(self.size)]
        self.inv = [None] + [next(b for b in range(self.size) if self.mul[a][b] == 1) for a in range(1, self.size)]

    def digits(self, a: int) -> list[int]:
        return [(a // self.p ** i) % self.p for i in range(self.n)]

    def encode(self, d: list[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(d))

    def _add(self, a: int, b: int) -> int:
        return self.encode([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def _mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for k in range(len(prod) - 1, self.n - 1, -1):
            c = prod[k]
            if c:
                for i, m in enumerate(self.modulus):
                    prod[k - self.n + i] = (prod[k - self.n + i] - c * m) % self.p
        return self.encode(prod[: self.n])

    def power(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul[out][a]
        return out


def mat_mul(F: Field, A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add[s][F.mul[A[i][k]][B[k][j]]]
            row.append(s)
        out.append(row)
    return out


def det3(F: Field, A) -> int:
    def m(a, b):
        return F.mul[a][b]

    def a(x, y):
        return F.add[x][y]

    terms = []
    for perm, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        t = m(m(A[0][perm[0]], A[1][perm[1]]), A[2][perm[2]])
        terms.append(t if sign > 0 else F.neg[t])
    s = 0
    for t in terms:
        s = a(s, t)
    return s


def unitary_points(q: int, F: Field):
    """Isotropic points of the Hermitian form u1 v3^q + u2 v2^q + u3 v1^q."""

    def bar(x):
        return F.power(x, q)

    def form(u, v):
        s = 0
        for i in range(3):
            s = F.add[s][F.mul[u[i]][bar(v[2 - i])]]
        return s

    def normalize(v):
        lead = next(x for x in v if x)
        li = F.inv[lead]
        return tuple(F.mul[li][x] for x in v)

    points = []
    for v in itertools.product(range(F.size), repeat=3):
        if any(v) and normalize(v) == v and form(v, v) == 0:
            points.append(v)
    index = {v: i for i, v in enumerate(points)}
    J = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]

    def is_special_unitary(A):
        Abar_t = [[bar(A[j][i]) for j in range(3)] for i in range(3)]
        return det3(F, A) == 1 and mat_mul(F, mat_mul(F, A, J), Abar_t) == J

    def action(A):
        out = []
        for v in points:
            w = tuple(
                _dot(F, v, [A[k][j] for k in range(3)]) for j in range(3)
            )
            out.append(index[normalize(w)])
        return Permutation(out)

    return points, is_special_unitary, action


def _dot(F: Field, v, col) -> int:
    s = 0
    for x, y in zip(v, col):
        s = F.add[s][F.mul[x][y]]
    return s


def greedy_generators(degree: int, candidates: list[Permutation], target: int) -> list[Permutation]:
    gens: list[Permutation] = []
    G = PermGroup.trivial(degree)
    for c in candidates:
        if G.order == target:
            break
        if not G.contains(c):
            gens.append(c)
            G = PermGroup(degree, gens)
    if G.order != target:
        raise RuntimeError(f"candidates generate order {G.order}, expected {target}")
    return gens


def build_unitary(q: int, F: Field, expected: int) -> tuple[int, list[Permutation]]:
    points, ok, action = unitary_points(q, F)
    degree = len(points)
    assert degree == q ** 3 + 1, degree
    unipotent = []
    for a, b, c in itertools.product(range(F.size), repeat=3):
        A = [[1, a, b], [0, 1, c], [0, 0, 1]]
        if (a or b or c) and ok(A):
            unipotent.append(action(A))
    assert len(unipotent) == q ** 3 - 1, len(unipotent)
    weyl = None
    for a, b, c in itertools.product(range(1, F.size), repeat=3):
        A = [[0, 0, a], [0, b, 0], [c, 0, 0]]
        if ok(A):
            weyl = action(A)
            break
    diag = []
    for a, b, c in itertools.product(range(1, F.size), repeat=3):
        A = [[a, 0, 0], [0, b, 0], [0, 0, c]]
        if ok(A):
            diag.append(action(A))
    diag.sort(key=lambda d: -d.order())
    gens = greedy_generators(degree, unipotent + [weyl] + diag, expected)
    return degree, gens


def build_l2(p: int) -> tuple[int, list[Permutation]]:
    """PSL(2, p) on the projective line; point ``p`` is infinity."""
    inf = p
    squares = sorted({x * x % p for x in range(1, p)})
    gen_sq = next(s for s in squares if len({pow(s, k, p) for k in range(1, p)}) == len(squares))

    def perm(f):
        return Permutation([f(z) for z in range(p + 1)])

    shift = perm(lambda z: inf if z == inf else (z + 1) % p)
    scale = perm(lambda z: inf if z == inf else gen_sq * z % p)
    invert = perm(lambda z: 0 if z == inf else inf if z == 0 else (-pow(z, p - 2, p)) % p)
    return p + 1, [shift, scale, invert]


def build_frobenius_21() -> tuple[int, list[Permutation]]:
    """Affine maps z -> a z + b on GF(7) with a in the subgroup of order 3."""
    return 7, [Permutation([(z + 1) % 7 for z in range(7)]), Permutation([2 * z % 7 for z in range(7)])]


def write(name: str, degree: int, gens: list[Permutation], expected: int, note: str) -> Path:
    G = PermGroup(degree, gens)
    if G.order != expected:
        raise RuntimeError(f"{name}: order {G.order}, expected {expected}")
    record = {
        "name": name,
        "degree": degree,
        "generators": [[i + 1 for i in g.images] for g in gens],
        "expected_order": expected,
        "source_note": note,
    }
    path = DATA / f"{name}.json"
    path.write_text(json.dumps(record, indent=1) + "\n")
    return path


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    paths = []
    paths.append(write("F21", *build_frobenius_21(), 21,
                       "affine maps z -> 2^k z + b on GF(7); Frobenius group of order 21"))
    paths.append(write("L2_17", *build_l2(17), 2448,
                       "PSL(2,17) on the projective line over GF(17): z+1, 9z, -1/z; point 18 is infinity"))
    F9 = Field(3, [1, 0, 1])  # i^2 + 1
    paths.append(write("U3_3", *build_unitary(3, F9, 6048), 6048,
                       "PSU(3,3) on the 28 isotropic points of the antidiagonal Hermitian form over GF(9)"))
    F16 = Field(2, [1, 1, 0, 0, 1])  # t^4 + t + 1
    paths.append(write("U3_4", *build_unitary(4, F16, 62400), 62400,
                       "PSU(3,4) on the 65 isotropic points of the antidiagonal Hermitian form over GF(16)"))
    sums = {p.name: hashlib.sha256(p.read_bytes()).hexdigest() for p in sorted(paths)}
    (DATA / "checksums.json").write_text(json.dumps(sums, indent=1, sort_keys=True) + "\n")
    for name, digest in sums.items():
        print(name, digest)


if __name__ == "__main__":
    main()
