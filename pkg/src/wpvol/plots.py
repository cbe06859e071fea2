"""Render report data to figure files alongside the delimited output."""

from __future__ import annotations

from .lab import ContinuityTable
from .records import VolumeRecord


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_scan_figure(records: list[VolumeRecord], path: str) -> None:
    """Heatmap of the volume over the scanned (d1, d2) slice."""
    plt = _pyplot()
    xs = [float(r.weights[0]) for r in records]
    ys = [float(r.weights[1]) for r in records]
    vs = [float(r.approx) for r in records]
    fig, ax = plt.subplots(figsize=(6, 5))
    sc = ax.scatter(xs, ys, c=vs, marker="s", s=36, cmap="viridis")
    wall = [(x, y) for r, x, y in zip(records, xs, ys) if r.on_wall]
    if wall:
        ax.scatter(*zip(*wall), facecolors="none", edgecolors="red",
                   marker="s", s=36, linewidths=0.6, label="on wall")
        ax.legend(loc="upper right", fontsize=8)
    fig.colorbar(sc, ax=ax, label="volume")
    ax.set_xlabel("$d_1$")
    ax.set_ylabel("$d_2$")
    ax.set_title(f"{records[0].formula} volume on the weight-sum-2 slice")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_continuity_figure(table: ContinuityTable, path: str) -> None:
    """Deviation against epsilon for one continuity path."""
    plt = _pyplot()
    eps = [float(r.epsilon) for r in table.rows]
    dev = [float(r.deviation) for r in table.rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(eps, dev, "o-")
    ax.set_xscale("log")
    if all(d > 0 for d in dev):
        ax.set_yscale("log")
    ax.set_xlabel("epsilon (weight sum 2 - epsilon)")
    ax.set_ylabel("deviation from base coefficient")
    ax.set_title(f"continuity along the {table.direction} path")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
