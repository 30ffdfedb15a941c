"""Report figures, rendered off-screen to PNG files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bijection import COLS_SUB, ROWS_ORI, ROWS_SUB, orientation_histograms  # noqa: E402
from .trees import tutte_polynomial  # noqa: E402

_META = {"Software": None}


def plot_census(census, path, title="census"):
    """Heatmap of the 3x3 counts with the Tutte evaluation in each cell."""
    fig, ax = plt.subplots(figsize=(4.2, 3.6))
    ax.imshow(census.subgraphs, cmap="Blues")
    for r in range(3):
        for c in range(3):
            s, o, t = census.subgraphs[r][c], census.orientations[r][c], census.tutte[r][c]
            label = str(t) if s == o == t else f"{s}/{o}/{t}"
            ax.text(c, r, label, ha="center", va="center", color="black" if s == o == t else "red")
    ax.set_xticks(range(3), COLS_SUB)
    ax.set_yticks(range(3), ROWS_SUB)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, metadata=_META)
    plt.close(fig)


def plot_refinements(m, path, title="root-components"):
    """Enumerated histograms (bars) against Tutte coefficients (dots)."""
    poly = tutte_polynomial(m)
    rc, rsc, _ = orientation_histograms(m)
    fig, axes = plt.subplots(2, 3, figsize=(9, 5), sharey="row")
    for col, (j, name) in enumerate(zip((2, 1, 0), ROWS_ORI)):
        for row, (hist, coeffs, lab) in enumerate((
            (rc[name], poly.shifted_in_x(j), f"T(1+x,{j})"),
            (rsc[name], poly.in_x(j), f"T(x,{j})"),
        )):
            ax = axes[row][col]
            n = max(len(hist), len(coeffs))
            hist = list(hist) + [0] * (n - len(hist))
            coeffs = list(coeffs) + [0] * (n - len(coeffs))
            ax.bar(range(n), hist, color="tab:blue", alpha=0.6, label="enumerated")
            ax.plot(range(n), coeffs, "o", color="tab:red", label=lab)
            ax.set_xlabel("blocks - 1")
            ax.set_title(f"{name}: {lab}", fontsize=9)
            ax.legend(fontsize=7)
    fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, metadata=_META)
    plt.close(fig)


def plot_check_summary(report, path):
    """Stacked pass/skip/fail counts per check over all verified maps."""
    names = []
    counts = {}
    for rec in report.records:
        if rec.check not in counts:
            names.append(rec.check)
            counts[rec.check] = {"pass": 0, "skip": 0, "fail": 0}
        counts[rec.check][rec.status] += 1
    fig, ax = plt.subplots(figsize=(8, 4))
    bottom = [0] * len(names)
    for status, color in (("pass", "tab:green"), ("skip", "tab:gray"), ("fail", "tab:red")):
        vals = [counts[n][status] for n in names]
        ax.bar(range(len(names)), vals, bottom=bottom, color=color, label=status)
        bottom = [b + v for b, v in zip(bottom, vals)]
    ax.set_xticks(range(len(names)), names, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("maps")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, metadata=_META)
    plt.close(fig)
