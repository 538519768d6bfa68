"""Command-line interface: group info, predicate checks, verifiers, sweeps and examples.

Exit status: 0 everything holds, 1 a failure was found, 2 input error,
3 a resource bound was hit.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from contextlib import contextmanager
from dataclasses import dataclass, fields
from typing import Any, Iterator

from . import catalog
from .embedding import (
    EmbeddingReport,
    is_abnormal,
    is_closed,
    is_extremely_closed_in_G,
    is_gamma_triple,
    is_isolated,
    is_ne_subgroup,
    is_pronormal,
    is_special_triple,
    is_w_triple,
)
from .errors import (
    ELEMENT_BOUND_ENV,
    SUBGROUP_BOUND_ENV,
    DataError,
    InputError,
    ResourceError,
)
from .group import PermGroup, classify_flags
from .lattice import frattini
from .numtheory import require_prime
from .perm import Permutation
from .structure import (
    is_p_nilpotent,
    is_p_solvable,
    is_solvable,
    o_p,
    o_p_prime,
    solvable_radical,
    sylow_subgroup,
)
from .subgroups import center, conjugacy_classes, derived_subgroup, normalizer

COMMANDS = ("info", "check", "verify", "sweep", "repro")
PROPERTIES = (
    "weakly-closed",
    "strongly-closed",
    "extremely-closed",
    "extremely-closed-in-G",
    "pronormal",
    "abnormal",
    "isolated",
    "special",
    "ne",
    "w-triple",
    "gamma",
)
VERIFY_STATEMENTS = (
    "th1",
    "th2",
    "th3",
    "th5",
    "cor_generation",
    "cor_special",
    "cor_radical",
    "lemma22",
    "lemma23",
    "lemma29",
    "lemma211",
    "fischer",
    "wielandt_pack",
    "examples",
)
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass(frozen=True)
class Invocation:
    command: str
    group_spec: str | None = None
    subgroup_spec: str | None = None
    overgroup_spec: str | None = None
    property: str | None = None
    statement: str | None = None
    prime: int | None = None
    element: str | None = None
    all_g: bool = False
    json: bool = False
    element_bound: int | None = None
    subgroup_bound: int | None = None
    corpus: str | None = None
    statements: tuple[str, ...] = ()
    primes: tuple[int, ...] = ()
    jobs: int = 1
    figures: str | None = None
    blocks: tuple[str, ...] = ()


# ------------------------------------------------------------------ parsing
class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(message)


def _csv(kind):
    def convert(text: str):
        items = [t.strip() for t in text.split(",") if t.strip()]
        try:
            return tuple(kind(t) for t in items)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list {text!r}") from None
    return convert


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per report")
    common.add_argument("--element-bound", type=int, help=f"override {ELEMENT_BOUND_ENV}")
    common.add_argument("--subgroup-bound", type=int, help=f"override {SUBGROUP_BOUND_ENV}")

    parser = _Parser(prog="subembed", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", parents=[common], help="order, classes and structural flags")
    p.add_argument("--group", dest="group_spec", required=True)
    p.add_argument("--prime", type=int)

    p = sub.add_parser("check", parents=[common], help="evaluate one embedding predicate")
    p.add_argument("--group", dest="group_spec", required=True)
    p.add_argument("--subgroup", dest="subgroup_spec", required=True)
    p.add_argument("--overgroup", dest="overgroup_spec", help="M in H <= M <= G (default N_G(H))")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--element", help="element for the isolated predicate, cycle notation")
    p.add_argument("--all-g", dest="all_g", action="store_true", help="quantify extreme closure over all of G")

    p = sub.add_parser("verify", parents=[common], help="run one statement verifier")
    p.add_argument("--group", dest="group_spec")
    p.add_argument("--statement", required=True, choices=VERIFY_STATEMENTS)
    p.add_argument("--prime", type=int)
    p.add_argument("--element", help="class representative for fischer")

    p = sub.add_parser("sweep", parents=[common], help="run verifiers over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--statements", type=_csv(str), required=True)
    p.add_argument("--primes", type=_csv(int), default=())
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--figures", help="write summary figures to this directory")

    p = sub.add_parser("repro", parents=[common], help="reproduce the worked examples")
    p.add_argument("--blocks", type=_csv(str), default=())
    p.add_argument("--figures", help="write a summary figure to this directory")
    return parser


def parse(argv: list[str]) -> Invocation:
    ns = build_parser().parse_args(argv)
    values = {f.name: getattr(ns, f.name) for f in fields(Invocation) if hasattr(ns, f.name)}
    if values.get("jobs", 1) < 1:
        raise InputError("--jobs must be at least 1")
    return Invocation(**values)


def render(inv: Invocation) -> list[str]:
    """Argument vector that parses back to ``inv``."""
    out = [inv.command]
    flag = {
        "group_spec": "--group",
        "subgroup_spec": "--subgroup",
        "overgroup_spec": "--overgroup",
        "all_g": "--all-g",
        "element_bound": "--element-bound",
        "subgroup_bound": "--subgroup-bound",
    }
    defaults = Invocation(inv.command)
    for f in fields(Invocation):
        if f.name == "command":
            continue
        value = getattr(inv, f.name)
        if value == getattr(defaults, f.name):
            continue
        name = flag.get(f.name, "--" + f.name)
        if isinstance(value, bool):
            out.append(name)
        elif isinstance(value, tuple):
            out.append(f"{name}={','.join(str(v) for v in value)}")
        else:
            out.append(f"{name}={value}")
    return out


# --------------------------------------------------------------- resolution
def _parse_gens(text: str, degree: int | None) -> list[Permutation]:
    parts = [t for t in text.split(";") if t.strip()]
    if not parts:
        raise InputError(f"no generators in {text!r}")
    return [Permutation.parse(t, degree) for t in parts]


def resolve_group(spec: str) -> tuple[str, PermGroup]:
    """``catalog:NAME`` or ``gens:P1;P2;...`` in 1-indexed cycle notation."""
    kind, _, arg = spec.partition(":")
    if kind == "catalog" and arg:
        return arg, catalog.construct(arg)
    if kind == "gens" and arg:
        gens = _parse_gens(arg, None)
        degree = max(g.degree for g in gens)
        gens = [Permutation(list(g.images) + list(range(g.degree, degree))) for g in gens]
        return spec, PermGroup(degree, gens)
    raise InputError(f"bad group spec {spec!r}; expected catalog:NAME or gens:...")


_PRIME_SPEC = re.compile(r"^(sylow|center-of-sylow|frattini-of-sylow|normalizer-of-sylow|op|op-prime):(\d+)$")


def resolve_subgroup(G: PermGroup, spec: str) -> PermGroup:
    """Subgroup of ``G`` from generators or a structural shorthand."""
    spec = spec.strip()
    if spec.startswith("gens:"):
        gens = _parse_gens(spec[5:], G.degree)
        for g in gens:
            if not G.contains(g):
                raise InputError(f"generator {g} is not in the group")
        return PermGroup(G.degree, gens)
    if spec.startswith("normalizer:"):
        return normalizer(G, resolve_subgroup(G, spec[len("normalizer:"):]))
    simple = {
        "whole": lambda: G,
        "trivial": lambda: PermGroup.trivial(G.degree),
        "center": lambda: center(G),
        "derived": lambda: derived_subgroup(G),
        "radical": lambda: solvable_radical(G),
    }
    if spec in simple:
        return simple[spec]()
    m = _PRIME_SPEC.match(spec)
    if not m:
        raise InputError(f"bad subgroup spec {spec!r}")
    kind, p = m.group(1), require_prime(int(m.group(2)))
    if kind == "op":
        return o_p(G, p)
    if kind == "op-prime":
        return o_p_prime(G, p)
    P = sylow_subgroup(G, p)
    if kind == "sylow":
        return P
    if kind == "center-of-sylow":
        return center(P)
    if kind == "frattini-of-sylow":
        return frattini(P)
    return normalizer(G, P)


# ------------------------------------------------------------------ running
@contextmanager
def _bounds(inv: Invocation) -> Iterator[None]:
    saved = {k: os.environ.get(k) for k in (ELEMENT_BOUND_ENV, SUBGROUP_BOUND_ENV)}
    try:
        if inv.element_bound is not None:
            os.environ[ELEMENT_BOUND_ENV] = str(inv.element_bound)
        if inv.subgroup_bound is not None:
            os.environ[SUBGROUP_BOUND_ENV] = str(inv.subgroup_bound)
        yield
    finally:
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


def _text(record: dict[str, Any]) -> str:
    lines = []
    for key, value in record.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, default=str)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _emit(records: list[dict[str, Any]], as_json: bool) -> list[str]:
    if as_json:
        return [json.dumps(r, sort_keys=True, default=str) for r in records]
    return [_text(r) + "\n" for r in records]


def _info(inv: Invocation) -> tuple[int, list[dict[str, Any]]]:
    name, G = resolve_group(inv.group_spec)
    record: dict[str, Any] = {
        "group": name,
        "degree": G.degree,
        "order": G.order,
        "classes": len(conjugacy_classes(G)),
        "abelian": G.is_abelian(),
        "solvable": is_solvable(G),
        "center_order": center(G).order,
        "derived_order": derived_subgroup(G).order,
        "radical_order": solvable_radical(G).order,
    }
    if inv.prime is not None:
        p = require_prime(inv.prime)
        flags = classify_flags(G, p)
        record.update({
            "prime": p,
            "sylow_order": sylow_subgroup(G, p).order,
            "o_p_order": o_p(G, p).order,
            "o_p_prime_order": o_p_prime(G, p).order,
            "p_solvable": is_p_solvable(G, p),
            "p_nilpotent": is_p_nilpotent(G, p),
            "flags": vars(flags),
        })
    return EXIT_OK, [record]


def _embedding_record(report: EmbeddingReport, name: str) -> dict[str, Any]:
    return dict(report.to_record(), group=name)


def _check(inv: Invocation) -> tuple[int, list[dict[str, Any]]]:
    name, G = resolve_group(inv.group_spec)
    H = resolve_subgroup(G, inv.subgroup_spec)
    M = resolve_subgroup(G, inv.overgroup_spec) if inv.overgroup_spec else None
    prop = inv.property
    if prop in ("special", "w-triple", "gamma") and M is None:
        raise InputError(f"--property {prop} needs --overgroup")
    if prop == "isolated":
        if inv.element is None:
            raise InputError("--property isolated needs --element")
        x = Permutation.parse(inv.element, G.degree)
        report = is_isolated(x, H, G)
    elif prop.endswith("-closed"):
        kind = {"weakly-closed": "weak", "strongly-closed": "strong", "extremely-closed": "extreme"}.get(prop)
        if prop == "extremely-closed-in-G" or (kind == "extreme" and M is None and not inv.all_g):
            report = is_extremely_closed_in_G(H, G)
        else:
            report = is_closed(kind, H, M if M is not None else normalizer(G, H), G, all_g=inv.all_g)
    elif prop == "pronormal":
        report = is_pronormal(H, G)
    elif prop == "abnormal":
        report = is_abnormal(H, G)
    elif prop == "ne":
        report = is_ne_subgroup(H, G)
    elif prop == "special":
        report = is_special_triple(G, M, H)
    elif prop == "w-triple":
        report = is_w_triple(G, M, H)
    else:
        report = is_gamma_triple(G, M, H)
    return (EXIT_OK if report.holds else EXIT_FAIL), [_embedding_record(report, name)]


def _verify_reports(inv: Invocation):
    from . import verify as V
    from .verify.lemmas import LEMMA_IDS

    sid = inv.statement
    if sid == "examples":
        return [V.reproduce_examples()]
    if inv.group_spec is None:
        raise InputError(f"--statement {sid} needs --group")
    name, G = resolve_group(inv.group_spec)
    needs_prime = sid in ("th2", "th3", "th5", "cor_special", "cor_radical") or sid in LEMMA_IDS
    if needs_prime and inv.prime is None:
        raise InputError(f"--statement {sid} needs --prime")
    p = inv.prime
    if sid == "th1":
        return [V.verify_th1(G, name)]
    if sid == "th2":
        return [V.verify_th2(G, p, name)]
    if sid == "th3":
        return [V.verify_th3(G, p, name)]
    if sid == "th5":
        return [V.verify_th5(G, p, name)]
    if sid == "cor_generation":
        return [V.verify_cor_generation(G, name)]
    if sid == "cor_special":
        return [V.verify_cor_special(G, p, name)]
    if sid == "cor_radical":
        return [V.verify_cor_radical(G, p, name)]
    if sid in LEMMA_IDS:
        return V.verify_lemma_suite(G, p, name, lemmas=(sid,))
    if sid == "fischer":
        if inv.element is None:
            return [V.verify_fischer_all(G, name)]
        return [V.verify_fischer(G, Permutation.parse(inv.element, G.degree), name)]
    return [V.verify_wielandt_pack(G, name)]


def _verify(inv: Invocation) -> tuple[int, list[dict[str, Any]]]:
    reports = _verify_reports(inv)
    failed = any(not r.holds for r in reports)
    return (EXIT_FAIL if failed else EXIT_OK), [r.to_record() for r in reports]


def _sweep(inv: Invocation) -> tuple[int, list[dict[str, Any]]]:
    from .verify.sweep import any_failure, summarize, sweep

    reports = sweep(inv.corpus, list(inv.statements), list(inv.primes), jobs=inv.jobs)
    if inv.figures:
        from .plotting import sweep_figures

        sweep_figures(reports, inv.figures)
    records = [r.to_record() for r in reports]
    records.append({"summary": summarize(reports)})
    return (EXIT_FAIL if any_failure(reports) else EXIT_OK), records


def _repro(inv: Invocation) -> tuple[int, list[dict[str, Any]]]:
    from .verify.examples import reproduce_examples

    report = reproduce_examples(inv.blocks or None)
    if inv.figures:
        from .plotting import repro_figure

        repro_figure(report, inv.figures)
    return (EXIT_OK if report.holds else EXIT_FAIL), [report.to_record()]


_HANDLERS = {"info": _info, "check": _check, "verify": _verify, "sweep": _sweep, "repro": _repro}


def run(inv: Invocation) -> tuple[int, list[str]]:
    """Exit status and output lines for one invocation."""
    try:
        with _bounds(inv):
            status, records = _HANDLERS[inv.command](inv)
    except ResourceError as exc:
        return EXIT_RESOURCE, [f"resource bound: {exc}"]
    except (InputError, DataError) as exc:
        return EXIT_INPUT, [f"input error: {exc}"]
    return status, _emit(records, inv.json)


def main(argv: list[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    try:
        inv = parse(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    status, lines = run(inv)
    stream = sys.stderr if status in (EXIT_INPUT, EXIT_RESOURCE) else sys.stdout
    for line in lines:
        print(line, file=stream)
    return status


__all__ = [
    "COMMANDS",
    "Invocation",
    "PROPERTIES",
    "VERIFY_STATEMENTS",
    "build_parser",
    "main",
    "parse",
    "render",
    "resolve_group",
    "resolve_subgroup",
    "run",
]
