"""Module containing the cutoff-dependent couplings of the renormalized oscillator.

In the oscillator the elimination of a state only changes six independent matrix
elements in the 4 x 4 highest-energy corner of the interaction. Their ratios to the
unrenormalized elements are numbered as follows::

    xi_1  (n, n)          xi_5  (n, n - 2)
    xi_2  (n-1, n-1)      xi_6  (n - 1, n - 3)
    xi_3  (n-2, n-2)
    xi_4  (n-3, n-3)

With f_kl = H_I[n - k][n - l] and D(n) = n + g f_00 xi_1(n) - E a single elimination
step maps the couplings at cutoff n onto those at cutoff n - 1::

    xi_1(n-1) = xi_2(n)
    xi_2(n-1) = xi_3(n) - g f_02^2 xi_5(n)^2 / (f_22 D(n))
    xi_3(n-1) = xi_4(n)
    xi_4(n-1) = 1 - g f_04^2 / (f_44 D(n))
    xi_5(n-1) = xi_6(n)
    xi_6(n-1) = 1 - g f_02 f_04 xi_5(n) / (f_24 D(n))

Applying the step twice splits the six first order recursions into two sets of three
second order recursions, one for (xi_1, xi_3, xi_5) and one for (xi_2, xi_4, xi_6). The
second set is the first with every f index raised by one and n - 1 instead of n in the
denominator, D'(n) = (n - 1) + g f_11 xi_2(n) - E.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from bandrg.core.exceptions import SingularPivotError
from bandrg.models.oscillator import interaction as oscillator_interaction
from bandrg.renormalization.elimination import (
    PIVOT_FLOOR,
    EliminationMode,
    RGConfig,
    iter_reduce_interaction,
)
from bandrg.utilities.io import write_csv

if TYPE_CHECKING:
    from os import PathLike

    from numpy.typing import NDArray

    from bandrg.core.band_matrix import BandMatrix

__all__ = ["XI_COUNT", "F_LABELS", "XiTrace", "xi_index", "xi_step", "xi_double_step",
           "xi_flow", "xi_from_interaction", "xi_flow_from_reduction"]

logger = logging.getLogger(__name__)

XI_COUNT = 6
# Offsets (n - k, n - l) of the representative element of each coupling.
_XI_ELEMENTS = ((0, 0), (1, 1), (2, 2), (3, 3), (0, 2), (1, 3))
F_LABELS = ("f00", "f02", "f04", "f22", "f24", "f44",
            "f11", "f13", "f15", "f33", "f35", "f55")
_F_OFFSETS = tuple((int(label[1]), int(label[2])) for label in F_LABELS)
MIN_CUTOFF = 3


@dataclass(frozen=True, eq=False)
class XiTrace:
    """Flow of the six corner couplings from the initial cutoff downwards.

    Attributes
    ----------
    g : float
        Coupling constant.
    initial_cutoff : int
        Initial cutoff N, where all couplings are one.
    trial_e : float
        Eigenvalue kept in the elimination denominators.
    cutoffs : NDArray
        Retained cutoffs n in descending order.
    values : NDArray
        Array of shape (len(cutoffs), 6) with xi_1(n), ..., xi_6(n).
    inputs : NDArray
        Array of shape (len(cutoffs), 12) with the unrenormalized elements f_kl at
        each cutoff, ordered as :data:`F_LABELS`. Elements with a negative index are
        zero.
    """

    g: float
    initial_cutoff: int
    trial_e: float
    cutoffs: NDArray
    values: NDArray
    inputs: NDArray

    def __post_init__(self) -> None:
        for name in ("cutoffs", "values", "inputs"):
            array = np.array(getattr(self, name))
            if not np.all(np.isfinite(array)):
                raise ValueError(f"The {name} of a coupling trace should be finite.")
            array.flags.writeable = False
            object.__setattr__(self, name, array)

    def __len__(self) -> int:
        return self.cutoffs.size

    def at(self, cutoff: int) -> NDArray:
        """Return the six couplings at the given cutoff."""
        index = self.initial_cutoff - cutoff
        if not 0 <= index < len(self):
            raise KeyError(f"Cutoff {cutoff} is not part of the trace.")
        return self.values[index]

    def index_map(self, cutoff: int) -> dict[tuple[int, int], int]:
        """Return the coupling number i(k, l) of every cutoff-dependent element.

        The keys are the eight elements (k, l) of the corner at the given cutoff whose
        renormalized value is xi_i(n) times the unrenormalized one.
        """
        self.at(cutoff)
        corner = range(cutoff - 3, cutoff + 1)
        return {(k, l): i for k in corner for l in corner  # noqa: E741
                if (i := xi_index(k, l, cutoff)) is not None}

    def xi(self, i: int) -> NDArray:
        """Return the flow of coupling xi_i (1-based) over all cutoffs."""
        if not 1 <= i <= XI_COUNT:
            raise ValueError(f"Coupling index should be in 1..{XI_COUNT}, got {i}.")
        return self.values[:, i - 1]

    def as_array(self) -> NDArray:
        """Return the trace as an array with columns n, xi_1, ..., xi_6."""
        return np.column_stack((self.cutoffs, self.values))

    def rows(self) -> list[tuple[int, ...]]:
        """Return the rows ``(n, xi1, ..., xi6)`` of the trace."""
        return [(int(n), *(float(x) for x in xi))
                for n, xi in zip(self.cutoffs, self.values)]

    def to_csv(self, path: str | PathLike) -> None:
        """Write the trace with header ``n,xi1,...,xi6``."""
        write_csv(path, ("n", *(f"xi{i}" for i in range(1, XI_COUNT + 1))),
                  self.rows())


def xi_index(k: int, l: int, n: int) -> int | None:  # noqa: E741
    """Return the number i(k, l) of the coupling stored at element (k, l).

    Parameters
    ----------
    k, l : int
        Row and column of the element.
    n : int
        Current cutoff.

    Returns
    -------
    int | None
        Coupling number in 1..6, or None if the element is not one of the eight
        cutoff-dependent elements.
    """
    if k == l and 0 <= n - k <= 3:
        return n - k + 1
    if {k, l} == {n, n - 2}:
        return 5
    if {k, l} == {n - 1, n - 3}:
        return 6
    return None


def _f_inputs(interaction: BandMatrix, cutoff: int) -> NDArray:
    """Return the unrenormalized elements f_kl at the cutoff, see :data:`F_LABELS`."""
    inputs = np.zeros(len(F_LABELS))
    for i, (k, l) in enumerate(_F_OFFSETS):  # noqa: E741
        if cutoff - max(k, l) >= 0:
            inputs[i] = interaction.get(cutoff - k, cutoff - l)
    return inputs


def _denominator(cutoff: int, f00: float, xi1: float, g: float, trial_e: float,
                 pivot_floor: float, step: int) -> float:
    denominator = cutoff + g * f00 * xi1 - trial_e
    if not denominator > pivot_floor:
        raise SingularPivotError(cutoff, float(denominator), step=step, g=g)
    return denominator


def _half_set(xi_diag: float, xi_off: float, f: NDArray, g: float,
              denominator: float) -> tuple[float, float, float]:
    """Apply one set of three recursions with f = (f00, f02, f04, f22, f24, f44)."""
    _, f02, f04, f22, f24, f44 = f
    return (
        xi_diag - g * f02 ** 2 / f22 * xi_off ** 2 / denominator,
        1.0 - g * f04 ** 2 / f44 / denominator,
        1.0 - g * f02 * f04 / f24 * xi_off / denominator,
    )


def xi_step(xi: NDArray, cutoff: int, inputs: NDArray, g: float,
            trial_e: float = 0.0, pivot_floor: float = PIVOT_FLOOR,
            step: int = 0) -> NDArray:
    """Map the couplings at cutoff n onto those at n - 1 (one elimination).

    Parameters
    ----------
    xi : NDArray
        Couplings xi_1(n), ..., xi_6(n).
    cutoff : int
        Current cutoff n.
    inputs : NDArray
        Unrenormalized elements f_kl at cutoff n, ordered as :data:`F_LABELS`.
    g : float
        Coupling constant.
    trial_e : float, optional
        Eigenvalue kept in the denominator, by default zero.
    pivot_floor : float, optional
        Smallest admissible denominator, a smaller or negative one is an error.
    step : int, optional
        Elimination step number used in error messages.
    """
    denominator = _denominator(cutoff, inputs[0], xi[0], g, trial_e, pivot_floor, step)
    xi2, xi4, xi6 = _half_set(xi[2], xi[4], inputs[:6], g, denominator)
    return np.array([xi[1], xi2, xi[3], xi4, xi[5], xi6])


def xi_double_step(xi: NDArray, cutoff: int, inputs: NDArray, g: float,
                   trial_e: float = 0.0, pivot_floor: float = PIVOT_FLOOR,
                   step: int = 0) -> NDArray:
    """Map the couplings at cutoff n onto those at n - 2 with both recursion sets.

    The arguments are the same as for :func:`xi_step`.
    """
    odd = _half_set(xi[2], xi[4], inputs[:6], g, _denominator(
        cutoff, inputs[0], xi[0], g, trial_e, pivot_floor, step))
    even = _half_set(xi[3], xi[5], inputs[6:], g, _denominator(
        cutoff - 1, inputs[6], xi[1], g, trial_e, pivot_floor, step + 1))
    return np.array([odd[0], even[0], odd[1], even[1], odd[2], even[2]])


def xi_flow(g: float, initial_cutoff: int, min_cutoff: int, trial_e: float = 0.0,
            pivot_floor: float = PIVOT_FLOOR) -> XiTrace:
    """Iterate the coupling recursions from the initial cutoff down to ``min_cutoff``.

    Parameters
    ----------
    g : float
        Coupling constant.
    initial_cutoff : int
        Initial cutoff N.
    min_cutoff : int
        Smallest retained cutoff, at least 3 and at most N - 2.
    trial_e : float, optional
        Eigenvalue kept in the denominators, by default zero.
    pivot_floor : float, optional
        Smallest admissible denominator.

    Returns
    -------
    XiTrace
        Couplings at every cutoff N, N - 1, ..., min_cutoff.

    Explanation
    -----------
    The two second order recursion sets advance the cutoff by two. The cutoffs with
    the other parity are obtained by seeding the iteration with a single elimination
    step from N to N - 1.
    """
    if min_cutoff < MIN_CUTOFF or initial_cutoff < min_cutoff + 2:
        raise ValueError(f"Cutoffs should satisfy {MIN_CUTOFF} <= n_min <= N - 2, got "
                         f"n_min={min_cutoff} and N={initial_cutoff}.")
    interaction = oscillator_interaction(initial_cutoff)
    cutoffs = np.arange(initial_cutoff, min_cutoff - 1, -1)
    inputs = np.array([_f_inputs(interaction, int(n)) for n in cutoffs])
    values = np.empty((cutoffs.size, XI_COUNT))
    values[0] = 1.0
    values[1] = xi_step(values[0], initial_cutoff, inputs[0], g, trial_e, pivot_floor)
    for index in range(cutoffs.size - 2):
        values[index + 2] = xi_double_step(values[index], int(cutoffs[index]),
                                           inputs[index], g, trial_e, pivot_floor,
                                           step=index)
    logger.debug("Coupling flow for g=%r from N=%d down to n=%d: %s.", g,
                 initial_cutoff, min_cutoff, values[-1])
    return XiTrace(g, initial_cutoff, trial_e, cutoffs, values, inputs)


def xi_from_interaction(reduced: BandMatrix, original: BandMatrix) -> NDArray:
    """Return the ratios of renormalized to unrenormalized corner elements.

    Parameters
    ----------
    reduced : BandMatrix
        Renormalized interaction H_I^RG(n).
    original : BandMatrix
        Unrenormalized interaction with a cutoff of at least n.
    """
    n = reduced.cutoff
    if n < MIN_CUTOFF:
        raise ValueError(f"The corner couplings need a cutoff of at least "
                         f"{MIN_CUTOFF}, got {n}.")
    return np.array([reduced.get(n - k, n - l) / original.get(n - k, n - l)
                     for k, l in _XI_ELEMENTS])  # noqa: E741


def xi_flow_from_reduction(g: float, initial_cutoff: int, min_cutoff: int,
                           trial_e: float = 0.0, pivot_floor: float = PIVOT_FLOOR
                           ) -> XiTrace:
    """Compute the coupling flow by reducing the full interaction matrix.

    The arguments are the same as for :func:`xi_flow`. Every elimination is carried
    out on the band matrix, and the couplings are read off after each step.
    """
    if min_cutoff < MIN_CUTOFF or initial_cutoff < min_cutoff:
        raise ValueError(f"Cutoffs should satisfy {MIN_CUTOFF} <= n_min <= N, got "
                         f"n_min={min_cutoff} and N={initial_cutoff}.")
    mode = (EliminationMode.APPROXIMATE if trial_e == 0 else EliminationMode.EXACT)
    config = RGConfig(g, initial_cutoff, min_cutoff, mode, trial_e, pivot_floor)
    original = oscillator_interaction(initial_cutoff)
    cutoffs, values = [], []
    for n, reduced in iter_reduce_interaction(config):
        cutoffs.append(n)
        values.append(xi_from_interaction(reduced, original))
    inputs = [_f_inputs(original, n) for n in cutoffs]
    return XiTrace(g, initial_cutoff, trial_e, np.array(cutoffs), np.array(values),
                   np.array(inputs))
