"""Report figures written next to the CLI's delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .generator import CensusRow, FamilyParams, average_degree  # noqa: E402
from .verify import CHECKS, FAIL, NOT_APPLICABLE, PASS, SKIPPED, VerificationReport  # noqa: E402

_STATUS_ORDER = (PASS, FAIL, SKIPPED, NOT_APPLICABLE)
_STATUS_COLORS = ("#4c9a5a", "#c8453a", "#e0b040", "#b8b8b8")
# strip software/date tags so repeated runs give identical bytes
_PNG_METADATA = {"Software": None}


def _save(fig, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=110, bbox_inches="tight", metadata=_PNG_METADATA)
    plt.close(fig)
    return path


def plot_verify_status(report: VerificationReport, path: Path) -> Path:
    """Status grid: one row per (q, g) cell, one column per check."""
    rows = sorted({(c.spec.params.q, c.spec.params.g) for c in report.cells})
    cols = [name for name in CHECKS if any(c.spec.check == name for c in report.cells)]
    grid = [[float("nan")] * len(cols) for _ in rows]
    for c in report.cells:
        r = rows.index((c.spec.params.q, c.spec.params.g))
        grid[r][cols.index(c.spec.check)] = _STATUS_ORDER.index(c.status)

    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * len(cols), 1.2 + 0.4 * len(rows)))
    ax.imshow(grid, cmap=ListedColormap(_STATUS_COLORS), vmin=-0.5, vmax=3.5, aspect="auto")
    ax.set_xticks(range(len(cols)), cols, rotation=60, ha="right", fontsize=8)
    ax.set_yticks(range(len(rows)), [f"q={q} g={g}" for q, g in rows], fontsize=8)
    handles = [plt.Rectangle((0, 0), 1, 1, color=col) for col in _STATUS_COLORS]
    ax.legend(handles, _STATUS_ORDER, loc="upper left", bbox_to_anchor=(1.01, 1.0), fontsize=8, frameon=False)
    ax.set_title(f"{report.count(PASS)} pass, {report.count(FAIL)} fail", fontsize=9)
    return _save(fig, path)


def plot_degree_census(p: FamilyParams, census: list[CensusRow], path: Path) -> Path:
    """Log-log node count against degree, one point per generation cohort."""
    fig, ax = plt.subplots(figsize=(4.2, 3.4))
    degrees = [r.degree for r in census]
    counts = [r.count for r in census]
    ax.loglog(degrees, counts, "o-", color="#3a6ea5")
    for r in census:
        ax.annotate(f"g_v={r.generation}", (r.degree, r.count), fontsize=7, xytext=(3, 3), textcoords="offset points")
    ax.set_xlabel("degree")
    ax.set_ylabel("nodes")
    ax.set_title(f"degree census of G_{p.q}({p.g})", fontsize=9)
    return _save(fig, path)


def plot_average_degree(q_values, g_max: int, path: Path) -> Path:
    """Average degree 2M/N over g with the limiting value q+3 dashed."""
    fig, ax = plt.subplots(figsize=(4.2, 3.4))
    gens = list(range(g_max + 1))
    for q in q_values:
        line, = ax.plot(gens, [float(average_degree(FamilyParams(q, g))) for g in gens], "o-", label=f"q={q}")
        ax.axhline(q + 3, ls="--", lw=0.8, color=line.get_color())
    ax.set_xlabel("g")
    ax.set_ylabel("average degree")
    ax.legend(fontsize=8, frameon=False)
    return _save(fig, path)
