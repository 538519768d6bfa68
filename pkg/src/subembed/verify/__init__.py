"""Statement-level verification of the theorems, lemmas and worked examples."""

from .examples import BLOCKS, reproduce_examples, run_block
from .instances import order_p_subgroups, p_subgroups
from .lemmas import verify_fischer, verify_fischer_all, verify_lemma_suite, verify_wielandt_pack
from .recheck import recheck
from .report import VerificationReport
from .sweep import STATEMENTS, any_failure, summarize, sweep
from .theorems import (
    verify_cor_generation,
    verify_cor_radical,
    verify_cor_special,
    verify_th1,
    verify_th2,
    verify_th3,
    verify_th5,
)

__all__ = [
    "BLOCKS",
    "STATEMENTS",
    "VerificationReport",
    "any_failure",
    "order_p_subgroups",
    "p_subgroups",
    "recheck",
    "reproduce_examples",
    "run_block",
    "summarize",
    "sweep",
    "verify_cor_generation",
    "verify_cor_radical",
    "verify_cor_special",
    "verify_fischer",
    "verify_fischer_all",
    "verify_lemma_suite",
    "verify_th1",
    "verify_th2",
    "verify_th3",
    "verify_th5",
    "verify_wielandt_pack",
]
