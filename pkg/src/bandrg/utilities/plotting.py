"""Module containing the figures of the experiments.

Notes
-----
The figures are drawn with matplotlib, which is an optional dependency installed with
the ``plotting`` extra. The SVG output is made reproducible by fixing the hash salt of
the element ids and by omitting the creation date.
"""
from __future__ import annotations

import io
from typing import TYPE_CHECKING

import matplotlib as mpl
import matplotlib.pyplot as plt

from bandrg.utilities.io import write_atomic

if TYPE_CHECKING:
    from os import PathLike
    from pathlib import Path

    from matplotlib.figure import Figure

    from bandrg.experiments.comparison import ComparisonReport
    from bandrg.renormalization.xi import XiTrace

__all__ = ["plot_ground_state", "plot_xi_flow", "save_svg"]

_SVG_HASHSALT = "bandrg"


def save_svg(fig: Figure, path: str | PathLike) -> Path:
    """Save a figure as a reproducible SVG file and close it."""
    buffer = io.StringIO()
    with mpl.rc_context({"svg.hashsalt": _SVG_HASHSALT, "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return write_atomic(path, buffer.getvalue())


def plot_ground_state(report: ComparisonReport, path: str | PathLike) -> Path:
    """Plot the renormalized and truncated ground state energy against the cutoff."""
    rows = report.level(0)
    n = [row.n for row in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(n, [row.rg for row in rows], "o-", label="RG")
    ax.plot(n, [row.pc for row in rows], "s--", label="PC")
    ax.axhline(rows[0].reference, color="k", linewidth=0.8,
               label=f"reference (M={report.reference_cutoff})")
    ax.set_xlabel("cutoff n")
    ax.set_ylabel("$E_0$")
    ax.set_title(f"g = {report.g:g}, N = {report.initial_cutoff}")
    ax.legend()
    return save_svg(fig, path)


def plot_xi_flow(trace: XiTrace, path: str | PathLike) -> Path:
    """Plot the six corner couplings against the cutoff."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for i in range(1, trace.values.shape[1] + 1):
        ax.plot(trace.cutoffs, trace.xi(i), label=f"$\\xi_{i}$")
    ax.set_xlabel("cutoff n")
    ax.set_ylabel("$\\xi_i(n)$")
    ax.set_title(f"g = {trace.g:g}, N = {trace.initial_cutoff}")
    ax.legend(ncol=2)
    return save_svg(fig, path)
