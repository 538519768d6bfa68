"""Summary figures for sweeps and example reproduction (matplotlib, headless)."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verify.report import VerificationReport  # noqa: E402

STATUS_COLORS = {"holds": "#2b8a3e", "vacuous": "#adb5bd", "fails": "#c92a2a"}


def _finish(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def sweep_status_figure(reports: list[VerificationReport], out_dir: str | Path) -> Path:
    """Stacked bars of report status per statement and prime."""
    counts: dict[str, dict[str, int]] = defaultdict(lambda: {s: 0 for s in STATUS_COLORS})
    for r in reports:
        label = r.statement_id if r.prime is None else f"{r.statement_id} p={r.prime}"
        counts[label][r.status] += 1
    labels = list(counts)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.7 * len(labels) + 2), 3.5))
    bottom = [0] * len(labels)
    for status, color in STATUS_COLORS.items():
        heights = [counts[lab][status] for lab in labels]
        ax.bar(labels, heights, bottom=bottom, color=color, label=status)
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_ylabel("reports")
    ax.set_title("sweep outcomes")
    ax.tick_params(axis="x", rotation=45)
    ax.legend(frameon=False)
    return _finish(fig, Path(out_dir) / "sweep_status.png")


def sweep_instances_figure(reports: list[VerificationReport], out_dir: str | Path) -> Path:
    """Hypothesis-satisfying instances per corpus group."""
    per_group: dict[str, int] = defaultdict(int)
    for r in reports:
        per_group[r.group_name] += r.instances_checked
    names = list(per_group)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * len(names) + 2), 3.5))
    ax.bar(range(len(names)), [per_group[n] for n in names], color="#1c7ed6")
    ax.set_xticks(range(len(names)), names, rotation=90, fontsize=7)
    ax.set_ylabel("instances checked")
    ax.set_title("instances per group")
    return _finish(fig, Path(out_dir) / "sweep_instances.png")


def repro_figure(report: VerificationReport, out_dir: str | Path) -> Path:
    """Passed and failed checks per example block."""
    blocks = [b for b in report.details if isinstance(report.details[b], dict) and "checks" in report.details[b]]
    passed = [sum(report.details[b]["checks"].values()) for b in blocks]
    failed = [len(report.details[b]["checks"]) - k for b, k in zip(blocks, passed)]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.barh(blocks, passed, color=STATUS_COLORS["holds"], label="passed")
    ax.barh(blocks, failed, left=passed, color=STATUS_COLORS["fails"], label="failed")
    ax.set_xlabel("checks")
    ax.invert_yaxis()
    ax.legend(frameon=False)
    return _finish(fig, Path(out_dir) / "repro_checks.png")


def sweep_figures(reports: list[VerificationReport], out_dir: str | Path) -> list[Path]:
    return [sweep_status_figure(reports, out_dir), sweep_instances_figure(reports, out_dir)]


__all__ = ["repro_figure", "sweep_figures", "sweep_instances_figure", "sweep_status_figure"]
