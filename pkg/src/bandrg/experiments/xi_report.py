"""Module producing the flow of the corner couplings as flat files."""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from bandrg.experiments.comparison import DEFAULT_INITIAL_CUTOFF
from bandrg.renormalization.xi import XiTrace, xi_flow

if TYPE_CHECKING:
    from os import PathLike

__all__ = ["DEFAULT_XI_COUPLING", "DEFAULT_XI_MIN_CUTOFF", "xi_flow_report"]

logger = logging.getLogger(__name__)

DEFAULT_XI_COUPLING = 10.0
DEFAULT_XI_MIN_CUTOFF = 8
MIN_FLOW_LENGTH = 8


def xi_flow_report(g: float = DEFAULT_XI_COUPLING,
                   initial_cutoff: int = DEFAULT_INITIAL_CUTOFF,
                   min_cutoff: int = DEFAULT_XI_MIN_CUTOFF,
                   csv_path: str | PathLike | None = None,
                   svg_path: str | PathLike | None = None) -> XiTrace:
    """Compute the coupling flow and write it to a CSV file and an SVG figure.

    Parameters
    ----------
    g : float, optional
        Coupling constant, by default 10.
    initial_cutoff : int, optional
        Initial cutoff N, by default 200.
    min_cutoff : int, optional
        Smallest cutoff of the flow, at most N - 8, by default 8.
    csv_path : str | PathLike, optional
        Destination of the CSV file with header ``n,xi1,...,xi6``.
    svg_path : str | PathLike, optional
        Destination of the figure, requires the plotting extra.

    Returns
    -------
    XiTrace
        The computed flow.
    """
    if initial_cutoff < min_cutoff + MIN_FLOW_LENGTH:
        raise ValueError(f"The initial cutoff should exceed the smallest cutoff by at "
                         f"least {MIN_FLOW_LENGTH}, got N={initial_cutoff} and "
                         f"n_min={min_cutoff}.")
    trace = xi_flow(g, initial_cutoff, min_cutoff)
    if csv_path is not None:
        trace.to_csv(csv_path)
        logger.info("Wrote the coupling flow to %s.", csv_path)
    if svg_path is not None:
        from bandrg.utilities.plotting import plot_xi_flow
        plot_xi_flow(trace, svg_path)
        logger.info("Wrote the coupling flow figure to %s.", svg_path)
    return trace
