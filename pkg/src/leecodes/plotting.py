"""Figures for scan tables and two-dimensional tilings.

Uses the object-oriented matplotlib API (no pyplot global state), so figures
can be rendered from worker processes and tests without a display.
"""

from __future__ import annotations

import numpy as np
from matplotlib.colors import ListedColormap
from matplotlib.figure import Figure

from .codes import CodeSpec, materialize
from .criterion import ScanTable
from .lee import sphere_offsets

# Fixed metadata keeps repeated renders byte-identical.
_METADATA = {"png": {"Software": None}, "svg": {"Date": None}, "pdf": {"CreationDate": None}}


def _save(fig, path):
    path = str(path)
    ext = path.rsplit(".", 1)[-1].lower()
    fig.savefig(path, bbox_inches="tight", metadata=_METADATA.get(ext))


def plot_scan(table: ScanTable, path, title=None):
    """Counts of prime-p and criterion-applicable n against the threshold, log-log."""
    fig = Figure(figsize=(6, 4.2))
    ax = fig.add_subplot(1, 1, 1)
    t = np.asarray(table.thresholds)
    ax.plot(t, table.prime_counts, "o-", color="0.2", label=r"$2n^2+2n+1$ prime")
    ax.plot(t, table.applicable_counts, "s--", color="tab:red", mfc="none",
            label="nonexistence proven")
    if len(t) > 1:
        ax.set_xscale("log")
        if min(table.applicable_counts) > 0:
            ax.set_yscale("log")
    ax.set_xlabel(r"threshold $x$ ($n \leq x$)")
    ax.set_ylabel("count")
    ax.set_title(title or "Criterion coverage")
    ax.grid(True, which="both", lw=0.4, alpha=0.5)
    ax.legend(frameon=False, loc="upper left")
    _save(fig, path)
    return fig


def plot_tiling(code: CodeSpec, path, title=None):
    """Colour each point of (Z/qZ)^2 by the center whose sphere covers it.

    Uncovered points are white; points covered more than once are black.
    """
    if code.n != 2:
        raise ValueError("tiling plots are only drawn for n = 2")
    q, e = code.q, code.e
    centers = materialize(code)
    owner = np.full((q, q), -1, dtype=np.int64)
    for idx, (cx, cy) in enumerate(centers):
        for dx, dy in sphere_offsets(2, e):
            x, y = (cx + dx) % q, (cy + dy) % q
            owner[y, x] = idx if owner[y, x] == -1 else -2

    rng = np.random.default_rng(0)
    palette = rng.uniform(0.25, 0.95, size=(max(len(centers), 1), 3))
    colours = np.vstack([[0, 0, 0], [1, 1, 1], palette])
    image = owner + 2  # -2 -> black, -1 -> white, k -> palette[k]

    fig = Figure(figsize=(5, 5))
    ax = fig.add_subplot(1, 1, 1)
    ax.imshow(image, cmap=ListedColormap(colours), vmin=0, vmax=len(colours) - 1,
              origin="lower", interpolation="nearest")
    cx, cy = zip(*centers)
    ax.plot(cx, cy, "k.", ms=4)
    ax.set_xlabel(r"$v_1$")
    ax.set_ylabel(r"$v_2$")
    ax.set_title(title or f"S(2,{e}) translates in $(\\mathbb{{Z}}/{q})^2$")
    _save(fig, path)
    return fig
