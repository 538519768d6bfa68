"""Corpus sweeps: every requested statement over every corpus group and prime."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from ..catalog import corpus
from ..errors import InputError
from ..group import PermGroup
from ..numtheory import require_prime
from .lemmas import verify_fischer_all, verify_lemma_suite, verify_wielandt_pack
from .report import VerificationReport
from .theorems import (
    verify_cor_generation,
    verify_cor_radical,
    verify_cor_special,
    verify_th1,
    verify_th2,
    verify_th3,
    verify_th5,
)


@dataclass(frozen=True)
class Statement:
    run: Callable[..., VerificationReport | list[VerificationReport]]
    uses_prime: bool
    odd_only: bool = False


STATEMENTS: dict[str, Statement] = {
    "th1": Statement(lambda G, name, p: verify_th1(G, name), False),
    "th2": Statement(lambda G, name, p: verify_th2(G, p, name), True, odd_only=True),
    "th3": Statement(lambda G, name, p: verify_th3(G, p, name), True),
    "th5": Statement(lambda G, name, p: verify_th5(G, p, name), True),
    "cor_generation": Statement(lambda G, name, p: verify_cor_generation(G, name), False),
    "cor_special": Statement(lambda G, name, p: verify_cor_special(G, p, name), True, odd_only=True),
    "cor_radical": Statement(lambda G, name, p: verify_cor_radical(G, p, name), True),
    "lemmas": Statement(lambda G, name, p: verify_lemma_suite(G, p, name), True),
    "fischer": Statement(lambda G, name, p: verify_fischer_all(G, name), False),
    "wielandt_pack": Statement(lambda G, name, p: verify_wielandt_pack(G, name), False),
}


def tasks(
    groups: list[tuple[str, PermGroup]], statements: list[str], primes: list[int]
) -> list[tuple[str, PermGroup, str, int | None]]:
    """Task list in the fixed order group, statement, prime.

    Statements restricted to odd primes skip ``p = 2``; prime-free
    statements run once per group.
    """
    out = []
    for name, G in groups:
        for sid in statements:
            st = STATEMENTS[sid]
            if not st.uses_prime:
                out.append((name, G, sid, None))
                continue
            for p in primes:
                if st.odd_only and p == 2:
                    continue
                out.append((name, G, sid, p))
    return out


def _run_task(task: tuple[str, PermGroup, str, int | None]) -> list[VerificationReport]:
    name, G, sid, p = task
    result = STATEMENTS[sid].run(G, name, p)
    return result if isinstance(result, list) else [result]


def sweep(
    corpus_spec: str,
    statements: list[str],
    primes: list[int] | None = None,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Reports in task order, independent of ``jobs``."""
    unknown = [s for s in statements if s not in STATEMENTS]
    if unknown:
        raise InputError(f"unknown statements {unknown}; expected some of {', '.join(STATEMENTS)}")
    primes = [require_prime(p) for p in (primes or [])]
    if not primes and any(STATEMENTS[s].uses_prime for s in statements):
        raise InputError("at least one prime is needed for the requested statements")
    work = tasks(corpus(corpus_spec), statements, primes)
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_task, work))
    else:
        batches = [_run_task(t) for t in work]
    return [r for batch in batches for r in batch]


def summarize(reports: list[VerificationReport]) -> dict[str, int]:
    counts = {"reports": len(reports), "holds": 0, "vacuous": 0, "fails": 0, "instances": 0}
    for r in reports:
        counts[r.status] += 1
        counts["instances"] += r.instances_checked
    return counts


def any_failure(reports: list[VerificationReport]) -> bool:
    return any(not r.holds for r in reports)


__all__ = ["STATEMENTS", "Statement", "any_failure", "summarize", "sweep", "tasks"]
