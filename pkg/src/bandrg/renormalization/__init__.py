"""Module containing the renormalization of band Hamiltonians by state elimination."""

__all__ = [
    "EliminationMode", "RGConfig", "eliminate_top_exact", "eliminate_top_approx",
    "iter_reduce_interaction", "reduce_interaction", "rg_reduce",

    "CornerDelta", "corner_delta",

    "XiTrace", "xi_index", "xi_flow", "xi_from_interaction",
]

from bandrg.renormalization.elimination import (
    EliminationMode,
    RGConfig,
    eliminate_top_approx,
    eliminate_top_exact,
    iter_reduce_interaction,
    reduce_interaction,
    rg_reduce,
)
from bandrg.renormalization.locality import CornerDelta, corner_delta
from bandrg.renormalization.xi import XiTrace, xi_flow, xi_from_interaction, xi_index
