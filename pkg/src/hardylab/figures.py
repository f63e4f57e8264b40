"""Figure rendering for scenario reports.

The run path saves one PNG per plottable table next to the delimited
output.  Figures are a convenience view of the emitted plot data; the
deterministic artifacts are the JSON/CSV files.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def _numeric_columns(table):
    cols = {}
    for j, name in enumerate(table.columns):
        try:
            cols[name] = [float(row[j]) for row in table.rows]
        except (TypeError, ValueError):
            continue
    return cols


def _plot_stability(table, ax):
    cols = _numeric_columns(table)
    x = cols.get("exponent", list(range(1, len(table.rows) + 1)))
    for name in ("metric", "a_error", "b_error"):
        if name in cols:
            ax.loglog(x, cols[name], marker="o", label=name)
    ax.set_xlabel("perturbation exponent n")
    ax.set_ylabel("error")
    ax.legend()


def _plot_probe(table, ax):
    by_symbol = {}
    for row in table.rows:
        by_symbol.setdefault(row[0], []).append((row[1], row[2]))
    for symbol, points in sorted(by_symbol.items()):
        dims, norms = zip(*points)
        ax.loglog(dims, [max(v, 1e-16) for v in norms], marker="o",
                  label=symbol)
    ax.set_xlabel("truncation dim")
    ax.set_ylabel("probe norm")
    ax.legend()


def _plot_certification(table, ax):
    labels, values = [], []
    for row in table.rows:
        labels.append(f"{row[0]}\n{row[1]}")
        values.append(max(float(row[2]), 1e-16))
    ax.bar(range(len(values)), values)
    ax.set_yscale("log")
    ax.set_xticks(range(len(labels)), labels, fontsize=7)
    ax.set_ylabel("preimage Garsia norm")


_PLOTTERS = {
    "convergence": _plot_stability,
    "probe_norms": _plot_probe,
    "certification": _plot_certification,
}


def render_report_figures(report, path):
    """Render figures for the tables that have a plotter; returns paths."""
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    written = []
    for table in report.tables:
        plotter = _PLOTTERS.get(table.name)
        if plotter is None or not table.rows:
            continue
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        plotter(table, ax)
        ax.set_title(f"{report.scenario}: {table.name}")
        fig.tight_layout()
        target = path / f"{report.scenario}__{table.name}.png"
        fig.savefig(target, dpi=120)
        plt.close(fig)
        written.append(target)
    return written
