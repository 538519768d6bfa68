"""Named groups and corpus builders.

Families ``Sn``, ``An``, ``Cn`` and ``Dm`` (dihedral of order ``m``) are
built directly.  Larger simple groups come from bundled JSON generator
files whose checksum and order are verified at load time.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any

from .errors import DataError, InputError, ResourceError
from .group import PermGroup
from .perm import Permutation

MAX_CORPUS_DEGREE = 6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    method: str
    params: dict[str, Any] = field(default_factory=dict)
    expected_order: int = 0
    source_note: str = ""


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# ------------------------------------------------------------ constructors
def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup.trivial(max(n, 1))
    gens = [Permutation.from_cycles([range(n)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([(0, 1)], n))
    return PermGroup(n, gens)


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return PermGroup.trivial(max(n, 1))
    gens = [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)]
    return PermGroup(n, gens)


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup(n, [Permutation.from_cycles([range(n)], n)])


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given (even) order acting on ``order // 2`` points."""
    if order % 2 or order < 4:
        raise InputError(f"dihedral order must be even and at least 4, got {order}")
    n = order // 2
    if n == 2:
        return PermGroup(4, [Permutation.from_cycles([(0, 1), (2, 3)], 4), Permutation.from_cycles([(0, 2), (1, 3)], 4)])
    rot = Permutation.from_cycles([range(n)], n)
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, ref])


def direct_product(*groups: PermGroup) -> PermGroup:
    """Factors act on consecutive disjoint blocks of points."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            images = list(range(degree))
            for i, j in enumerate(g.images):
                images[offset + i] = offset + j
            gens.append(Permutation(images))
        offset += G.degree
    return PermGroup(degree, gens)


def x54_multiply(u: tuple[int, int, int, int], v: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Product in ``P ⋊ <a>`` with ``P = <x, y>`` extraspecial of order 27.

    ``(i, j, k, e)`` stands for ``x^i y^j z^k a^e`` with ``z = [x, y]`` central,
    ``y^j x^i = x^i y^j z^(-ij)``, and ``a`` inverting ``x`` and ``y``.
    """
    i, j, k, e = u
    a, b, c, f = v
    if e:
        a, b = -a, -b
    return ((i + a) % 3, (j + b) % 3, (k + c - j * a) % 3, (e + f) % 2)


def _x54_elements() -> list[tuple[int, int, int, int]]:
    return [(i, j, k, e) for i in range(3) for j in range(3) for k in range(3) for e in range(2)]


def x54_regular_image(u: tuple[int, int, int, int]) -> Permutation:
    """Right multiplication by ``u`` on the 54 elements."""
    elems = _x54_elements()
    index = {w: n for n, w in enumerate(elems)}
    return Permutation([index[x54_multiply(w, u)] for w in elems])


def x54_named_elements() -> dict[str, Permutation]:
    return {
        "x": x54_regular_image((1, 0, 0, 0)),
        "y": x54_regular_image((0, 1, 0, 0)),
        "z": x54_regular_image((0, 0, 1, 0)),
        "a": x54_regular_image((0, 0, 0, 1)),
    }


def x54() -> PermGroup:
    named = x54_named_elements()
    return PermGroup(54, [named["x"], named["y"], named["a"]])


# ----------------------------------------------------------- generator files
def _data_text(filename: str) -> bytes:
    try:
        return resources.files("subembed").joinpath("data", filename).read_bytes()
    except FileNotFoundError as exc:
        raise DataError(f"missing data file {filename}") from exc


@lru_cache(maxsize=None)
def _checksums() -> dict[str, str]:
    return json.loads(_data_text("checksums.json"))


def load_generator_file(name: str) -> tuple[CatalogEntry, PermGroup]:
    filename = f"{name}.json"
    raw = _data_text(filename)
    expected_sum = _checksums().get(filename)
    if expected_sum != hashlib.sha256(raw).hexdigest():
        raise DataError(f"checksum mismatch for {filename}")
    record = json.loads(raw)
    degree = record["degree"]
    gens = [Permutation([i - 1 for i in g]) for g in record["generators"]]
    G = PermGroup(degree, gens)
    if G.order != record["expected_order"]:
        raise DataError(f"{name}: order {G.order}, expected {record['expected_order']}")
    entry = CatalogEntry(name, "generator_file", {"file": filename, "degree": degree},
                         record["expected_order"], record["source_note"])
    return entry, G


FILE_GROUPS = ("F21", "L2_17", "U3_3", "U3_4")

_FIXED: dict[str, CatalogEntry] = {
    "V4": CatalogEntry("V4", "dihedral", {"order": 4}, 4, "Klein four-group"),
    "X54": CatalogEntry("X54", "regular_from_table", {"degree": 54}, 54,
                        "extraspecial 3^(1+2) of exponent 3 extended by an involution inverting x and y"),
    "S4xA5": CatalogEntry("S4xA5", "direct_product", {"factors": ["S4", "A5"]}, 1440,
                          "S4 on points 1-4 times A5 on points 5-9"),
    "F21": CatalogEntry("F21", "generator_file", {"file": "F21.json"}, 21, "Frobenius group C7:C3"),
    "L2_17": CatalogEntry("L2_17", "generator_file", {"file": "L2_17.json"}, 2448, "PSL(2,17), degree 18"),
    "U3_3": CatalogEntry("U3_3", "generator_file", {"file": "U3_3.json"}, 6048, "PSU(3,3), degree 28"),
    "U3_4": CatalogEntry("U3_4", "generator_file", {"file": "U3_4.json"}, 62400, "PSU(3,4), degree 65"),
}

_FAMILY = re.compile(r"^([SACD])(\d+)$")


def entry(name: str) -> CatalogEntry:
    if name in _FIXED:
        return _FIXED[name]
    m = _FAMILY.match(name)
    if not m:
        raise InputError(f"unknown catalog group {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise InputError(f"bad catalog parameter in {name!r}")
    if kind == "S":
        return CatalogEntry(name, "symmetric", {"n": n}, _factorial(n), f"symmetric group on {n} points")
    if kind == "A":
        return CatalogEntry(name, "alternating", {"n": n}, max(_factorial(n) // 2, 1), f"alternating group on {n} points")
    if kind == "C":
        return CatalogEntry(name, "cyclic", {"n": n}, n, f"cyclic group of order {n}")
    if n % 2 or n < 4:
        raise InputError(f"dihedral order must be even and at least 4: {name!r}")
    return CatalogEntry(name, "dihedral", {"order": n}, n, f"dihedral group of order {n}")


def names() -> list[str]:
    return sorted(_FIXED) + ["Sn", "An", "Cn", "Dm"]


@lru_cache(maxsize=64)
def construct(name: str) -> PermGroup:
    e = entry(name)
    if e.method == "generator_file":
        _, G = load_generator_file(name)
    elif e.method == "symmetric":
        G = symmetric(e.params["n"])
    elif e.method == "alternating":
        G = alternating(e.params["n"])
    elif e.method == "cyclic":
        G = cyclic(e.params["n"])
    elif e.method == "dihedral":
        G = dihedral(e.params["order"])
    elif e.method == "direct_product":
        G = direct_product(*(construct(f) for f in e.params["factors"]))
    elif e.method == "regular_from_table":
        G = x54()
    else:  # pragma: no cover
        raise DataError(f"unknown construction method {e.method}")
    if G.order != e.expected_order:
        raise DataError(f"{name}: constructed order {G.order}, expected {e.expected_order}")
    return G


# ------------------------------------------------------------------ corpora
def subgroup_corpus(n: int) -> list[tuple[str, PermGroup]]:
    """Conjugacy-class representatives of subgroups of ``S_n``, each as its own ambient group."""
    if n > MAX_CORPUS_DEGREE:
        raise ResourceError(f"subgroups-of:S{n} degree", n, MAX_CORPUS_DEGREE)
    if n < 1:
        raise InputError(f"bad corpus degree {n}")
    from .lattice import SubgroupLattice

    lat = SubgroupLattice(symmetric(n))
    out = []
    for k, sub in enumerate(lat.class_representatives()):
        out.append((f"S{n}.sub{k:02d}[order {sub.order}]", lat.to_group(sub)))
    return out


def corpus(spec: str) -> list[tuple[str, PermGroup]]:
    """Resolve ``catalog:NAME,NAME`` and ``subgroups-of:Sn`` parts joined by ``+``."""
    out: list[tuple[str, PermGroup]] = []
    for part in spec.split("+"):
        part = part.strip()
        kind, _, arg = part.partition(":")
        if kind == "catalog" and arg:
            for name in arg.split(","):
                out.append((name.strip(), construct(name.strip())))
        elif kind == "subgroups-of":
            m = re.fullmatch(r"S_?(\d+)", arg.strip())
            if not m:
                raise InputError(f"bad corpus part {part!r}; expected subgroups-of:Sn")
            out.extend(subgroup_corpus(int(m.group(1))))
        else:
            raise InputError(f"bad corpus part {part!r}; expected catalog:NAMES or subgroups-of:Sn")
    return out


__all__ = [
    "CatalogEntry",
    "FILE_GROUPS",
    "alternating",
    "construct",
    "corpus",
    "cyclic",
    "dihedral",
    "direct_product",
    "entry",
    "load_generator_file",
    "names",
    "subgroup_corpus",
    "symmetric",
    "x54",
    "x54_multiply",
    "x54_named_elements",
]
