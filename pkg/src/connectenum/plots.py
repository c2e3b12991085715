"""Figure rendering for benchmark reports and the growth-base curve.

Figures are written straight to files; the Agg backend keeps this usable in
headless runs.
"""

from __future__ import annotations

from math import log
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bench import RunReport


def save_bound_curve(
    points: list[tuple[float, float]],
    out_path: str | Path,
    threshold: float | None = None,
) -> Path:
    """Plot the per-vertex growth base over the terminal fraction grid."""
    out = Path(out_path)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    xs = [a for a, _ in points]
    ys = [b for _, b in points]
    ax.plot(xs, ys, lw=1.5)
    if threshold is not None:
        ax.axvline(threshold, color="gray", ls="--", lw=1.0)
        ax.annotate(f"{threshold:g}", (threshold, min(ys)), fontsize=8, color="gray")
    ax.set_xlabel("terminal fraction")
    ax.set_ylabel("per-vertex growth base")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out


def save_benchmark_figures(reports: list[RunReport], out_dir: str | Path) -> list[Path]:
    """Render the count-vs-bound and timing figures next to the CSV output.

    Returns the paths written: ``counts.png`` (log emitted count against the
    log-scale bound, with the bound diagonal) and ``times.png`` (wall time
    over instance size, one marker series per mode).
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    bounded = [r for r in reports if r.bound_ln is not None and r.emitted > 0 and not r.error]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if bounded:
        xs = [r.bound_ln for r in bounded]
        ys = [log(r.emitted) for r in bounded]
        lim = max(max(xs), max(ys)) * 1.05 + 0.1
        ax.plot([0, lim], [0, lim], color="gray", ls="--", lw=1.0, label="bound")
        ax.scatter(xs, ys, s=18, alpha=0.8)
        ax.set_xlim(0, lim)
        ax.set_ylim(0, lim)
        ax.legend(loc="upper left", fontsize=8)
    ax.set_xlabel("ln bound")
    ax.set_ylabel("ln emitted count")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    counts_path = out_dir / "counts.png"
    fig.savefig(counts_path, dpi=150)
    plt.close(fig)
    written.append(counts_path)

    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ok = [r for r in reports if not r.error]
    for mode in sorted({r.mode for r in ok}):
        rows = [r for r in ok if r.mode == mode]
        ax.scatter([r.n for r in rows], [r.wall_time for r in rows], s=18, alpha=0.8, label=mode)
    if ok:
        ax.set_yscale("log")
        ax.legend(loc="upper left", fontsize=8)
    ax.set_xlabel("vertices")
    ax.set_ylabel("wall time (s)")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    times_path = out_dir / "times.png"
    fig.savefig(times_path, dpi=150)
    plt.close(fig)
    written.append(times_path)
    return written
