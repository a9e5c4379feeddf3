"""Render the three experiment figures from ponglab CSV logs.

The CSV schemas are the contract with the experiment harness; they are
restated here (column names and types) and validated before any drawing.
Rendering is read-only and deterministic: the same input rows always produce
the same plotted data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

SCHEMAS = {
    "vuln": (("checkpoint_step", int), ("method", str), ("epsilon", float),
             ("n_samples", int), ("success_rate", float),
             ("mean_linf", float), ("mean_l0", float)),
    "transfer": (("checkpoint_step", int), ("method", str),
                 ("n_successful", int), ("n_transferred", int),
                 ("transfer_rate", float)),
    "attack": (("run_id", str), ("variant", str), ("episode", int),
               ("raw_score", float), ("reward_vs_avg", float),
               ("induced_agreement_rate", float)),
}

SMOOTH_WINDOW = 10   # running-mean window for the attack reward curves


class SchemaMismatchError(ValueError):
    pass


class EmptyDataError(ValueError):
    pass


@dataclass
class FigureSpec:
    kind: str                      # "vuln" | "transfer" | "attack"
    inputs: list = field(default_factory=list)
    out: str = "figure.png"

    def __post_init__(self):
        if self.kind not in SCHEMAS:
            raise SchemaMismatchError(f"unknown figure kind {self.kind!r}")
        if not self.inputs:
            raise SchemaMismatchError("at least one input CSV required")


def read_csv(path, kind: str):
    schema = SCHEMAS[kind]
    expected = ",".join(name for name, _ in schema)
    with open(path, encoding="utf-8", newline="") as fh:   # FileNotFoundError if absent
        header = fh.readline().rstrip("\n")
        if header != expected:
            raise SchemaMismatchError(
                f"{path}: header {header!r} does not match {kind} schema {expected!r}")
        rows = []
        for lineno, line in enumerate(fh, start=2):
            parts = line.rstrip("\n").split(",")
            if len(parts) != len(schema):
                raise SchemaMismatchError(
                    f"{path}:{lineno}: {len(parts)} columns, expected {len(schema)}")
            try:
                rows.append({name: typ(p) for (name, typ), p in zip(schema, parts)})
            except ValueError as err:
                raise SchemaMismatchError(f"{path}:{lineno}: {err}") from None
    return rows


def running_mean(values, window=SMOOTH_WINDOW):
    out = []
    for i in range(len(values)):
        lo = max(0, i - window + 1)
        out.append(sum(values[lo:i + 1]) / (i + 1 - lo))
    return out


def render_figure(spec: FigureSpec) -> dict:
    """Write the figure and return {series_name: n_points} for what was drawn."""
    rows = []
    for path in spec.inputs:
        rows.extend(read_csv(path, spec.kind))
    if not rows:
        raise EmptyDataError(f"no data rows in {', '.join(map(str, spec.inputs))}")

    fig, ax = plt.subplots(figsize=(7, 4.5))
    if spec.kind == "vuln":
        series = _plot_by_group(ax, rows, "method", "checkpoint_step", "success_rate")
        ax.set_xlabel("training steps at checkpoint")
        ax.set_ylabel("targeted crafting success rate")
        ax.set_title("Adversarial example success rate per crafting method")
        ax.set_ylim(-0.02, 1.02)
    elif spec.kind == "transfer":
        series = _plot_by_group(ax, rows, "method", "checkpoint_step", "transfer_rate")
        ax.set_xlabel("training steps at checkpoint")
        ax.set_ylabel("transfer rate on successful examples")
        ax.set_title("Transferability to an independently trained Q-network")
        ax.set_ylim(-0.02, 1.02)
    else:
        series = {}
        for variant in sorted({r["variant"] for r in rows}):
            sub = [r for r in rows if r["variant"] == variant]
            sub.sort(key=lambda r: r["episode"])
            xs = [r["episode"] for r in sub]
            ys = [r["reward_vs_avg"] for r in sub]
            pts = ax.plot(xs, ys, ".", markersize=2.5, alpha=0.35)
            ax.plot(xs, running_mean(ys), "-", linewidth=1.8,
                    color=pts[0].get_color(),
                    label=f"{variant} ({SMOOTH_WINDOW}-episode mean)")
            series[variant] = len(sub)
        ax.set_xlabel("episode")
        ax.set_ylabel("score minus running average")
        ax.set_title("Reward of unperturbed vs attacked training runs")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    out = Path(spec.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return series


def _plot_by_group(ax, rows, group_col, x_col, y_col):
    series = {}
    for key in sorted({r[group_col] for r in rows}):
        sub = [r for r in rows if r[group_col] == key]
        sub.sort(key=lambda r: r[x_col])
        ax.plot([r[x_col] for r in sub], [r[y_col] for r in sub],
                "o-", label=key)
        series[key] = len(sub)
    return series
