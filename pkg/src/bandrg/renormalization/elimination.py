"""Module containing the Gaussian elimination of the highest basis state.

Eliminating the state |N> from the eigenvalue equation sum_l H_kl psi_l = E psi_k
yields the Schur complement

    H'_kl = H_kl + H_kN H_Nl / (E - H_NN),     k, l < N,

which has exactly the same eigenvalues as H for the eigenvalue E used in the
denominator. Replacing E by zero, which is accurate as long as E is small compared to
the eliminated diagonal element, makes the reduction independent of E and allows any
number of states to be eliminated in sequence. Because H_kN vanishes for k < N - m in
a matrix of half-bandwidth m, only the m x m highest-index corner of the reduced matrix
differs from the plain truncation.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

import numpy as np

from bandrg.core.band_matrix import BandMatrix
from bandrg.core.exceptions import SingularPivotError
from bandrg.models.oscillator import default_oscillator

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from bandrg.models.hamiltonian_base import HamiltonianBase

__all__ = ["PIVOT_FLOOR", "EliminationMode", "RGConfig", "eliminate_top_exact",
           "eliminate_top_approx", "eliminate_top_dense", "iter_reduce_interaction",
           "reduce_interaction", "rg_reduce"]

logger = logging.getLogger(__name__)

PIVOT_FLOOR = 1e-12


class EliminationMode(str, enum.Enum):
    """Treatment of the eigenvalue in the elimination denominator."""

    APPROXIMATE = "approx"
    EXACT = "exact"


@dataclass(frozen=True)
class RGConfig:
    """Configuration of a reduction from the initial to the target cutoff.

    Attributes
    ----------
    g : float
        Coupling constant.
    initial_cutoff : int
        Initial cutoff N.
    target_cutoff : int
        Target cutoff n, 0 <= n <= N.
    mode : EliminationMode
        Approximate elimination with E = 0 in the denominator, or exact elimination
        at the fixed trial eigenvalue.
    trial_e : float
        Trial eigenvalue E used in exact mode.
    pivot_floor : float
        Smallest admissible magnitude of an elimination denominator.
    """

    g: float
    initial_cutoff: int
    target_cutoff: int
    mode: EliminationMode = EliminationMode.APPROXIMATE
    trial_e: float = 0.0
    pivot_floor: float = PIVOT_FLOOR

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", EliminationMode(self.mode))
        if not math.isfinite(self.g) or self.g < 0:
            raise ValueError(f"Coupling constant should be finite and nonnegative, got "
                             f"{self.g!r}.")
        if not 0 <= self.target_cutoff <= self.initial_cutoff:
            raise ValueError(f"Cutoffs should satisfy 0 <= n <= N, got n="
                             f"{self.target_cutoff} and N={self.initial_cutoff}.")
        if not math.isfinite(self.trial_e):
            raise ValueError(
                f"Trial eigenvalue should be finite, got {self.trial_e!r}.")
        if self.mode is EliminationMode.APPROXIMATE and self.trial_e != 0:
            raise ValueError("A trial eigenvalue can only be used in exact mode.")
        if not self.pivot_floor > 0:
            raise ValueError(f"Pivot floor should be positive, got "
                             f"{self.pivot_floor!r}.")

    @property
    def steps(self) -> int:
        """Number of elimination steps N - n."""
        return self.initial_cutoff - self.target_cutoff


def _top_row(matrix: BandMatrix) -> tuple[int, NDArray]:
    """Return the first column index and the band part of the last row."""
    top = matrix.cutoff
    start = max(0, top - matrix.half_bandwidth)
    row = np.array([matrix.diagonals[top - col][col] for col in range(start, top)])
    return start, row


def _fold_top_row(matrix: BandMatrix, factor: float) -> BandMatrix:
    """Truncate the last state and add factor * H_kN H_Nl to the remaining corner."""
    top = matrix.cutoff
    start, row = _top_row(matrix)
    width = row.size
    diagonals = [np.array(d[:max(top - i, 0)])
                 for i, d in enumerate(matrix.diagonals)]
    for i in range(min(width, matrix.half_bandwidth + 1)):
        diagonals[i][start:top - i] += factor * row[i:] * row[:width - i]
    return BandMatrix(diagonals)


def eliminate_top_exact(matrix: BandMatrix, e: float,
                        pivot_floor: float = PIVOT_FLOOR) -> BandMatrix:
    """Eliminate the highest basis state at a fixed eigenvalue.

    Parameters
    ----------
    matrix : BandMatrix
        Hamiltonian matrix H of dimension at least 2.
    e : float
        Eigenvalue E substituted into the denominator E - H_NN.
    pivot_floor : float, optional
        Smallest admissible value of abs(E - H_NN), by default 1e-12.

    Returns
    -------
    BandMatrix
        The reduced matrix H_kl + H_kN H_Nl / (E - H_NN) of dimension dim - 1.
    """
    if matrix.dim < 2:
        raise ValueError("Cannot eliminate a state from a matrix of dimension "
                         f"{matrix.dim}.")
    top = matrix.cutoff
    pivot = e - matrix.diagonals[0][top]
    if not abs(pivot) >= pivot_floor:
        raise SingularPivotError(top, float(pivot))
    return _fold_top_row(matrix, 1.0 / pivot)


def eliminate_top_approx(free_diagonal: ArrayLike, interaction: BandMatrix, g: float,
                         trial_e: float = 0.0, pivot_floor: float = PIVOT_FLOOR
                         ) -> BandMatrix:
    """Perform one renormalization step on the interaction.

    Parameters
    ----------
    free_diagonal : ArrayLike
        Diagonal of the free Hamiltonian H0, at least up to the current cutoff.
    interaction : BandMatrix
        Current interaction H_I^(j) with cutoff n.
    g : float
        Coupling constant.
    trial_e : float, optional
        Eigenvalue kept in the denominator, by default zero.
    pivot_floor : float, optional
        Smallest admissible denominator, by default 1e-12.

    Returns
    -------
    BandMatrix
        The reduced interaction
        H_I_kl - g H_I_kn H_I_nl / (H0_nn + g H_I_nn - E).

    Explanation
    -----------
    The denominator must be positive: a small or negative denominator means that the
    eliminated diagonal element does not dominate the eigenvalues of interest.
    """
    if interaction.dim < 2:
        raise ValueError("Cannot eliminate a state from a matrix of dimension "
                         f"{interaction.dim}.")
    top = interaction.cutoff
    denominator = (float(np.asarray(free_diagonal, dtype=float)[top]) +
                   g * interaction.diagonals[0][top] - trial_e)
    if not denominator > pivot_floor:
        raise SingularPivotError(top, float(denominator))
    return _fold_top_row(interaction, -g / denominator)


def eliminate_top_dense(matrix: ArrayLike, e: float,
                        pivot_floor: float = PIVOT_FLOOR) -> NDArray:
    """Eliminate the highest basis state of a dense matrix (Schur complement).

    This is the reference implementation on full arrays, without any assumption on
    the sparsity of the matrix.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 2:
        raise ValueError(f"Expected a square matrix of dimension at least 2, but got "
                         f"shape {a.shape}.")
    pivot = e - a[-1, -1]
    if not abs(pivot) >= pivot_floor:
        raise SingularPivotError(a.shape[0] - 1, float(pivot))
    return a[:-1, :-1] + np.outer(a[:-1, -1], a[-1, :-1]) / pivot


def iter_reduce_interaction(config: RGConfig, model: HamiltonianBase | None = None
                            ) -> Iterator[tuple[int, BandMatrix]]:
    """Iterate over the renormalized interactions H_I^RG(n) for n = N, ..., target.

    Parameters
    ----------
    config : RGConfig
        Configuration of the reduction. In exact mode the trial eigenvalue is kept in
        the denominator.
    model : HamiltonianBase, optional
        Hamiltonian model, by default the quartic oscillator.

    Yields
    ------
    tuple[int, BandMatrix]
        The current cutoff and the renormalized interaction at that cutoff.
    """
    if model is None:
        model = default_oscillator()
    free = model.free_diagonal(config.initial_cutoff)
    current = model.interaction(config.initial_cutoff)
    yield config.initial_cutoff, current
    for step in range(config.steps):
        try:
            current = eliminate_top_approx(free, current, config.g, config.trial_e,
                                           config.pivot_floor)
        except SingularPivotError as err:
            raise err.annotate(step=step) from err
        logger.debug("Eliminated state %d (step j=%d, g=%r).", current.dim, step,
                     config.g)
        yield current.cutoff, current


def reduce_interaction(config: RGConfig, model: HamiltonianBase | None = None
                       ) -> BandMatrix:
    """Return the renormalized interaction H_I^RG(n) at the target cutoff."""
    for _, interaction in iter_reduce_interaction(config, model):
        pass
    return interaction


def rg_reduce(config: RGConfig, model: HamiltonianBase | None = None) -> BandMatrix:
    """Reduce a Hamiltonian from the initial to the target cutoff.

    Parameters
    ----------
    config : RGConfig
        Configuration of the reduction.
    model : HamiltonianBase, optional
        Hamiltonian model, by default the quartic oscillator.

    Returns
    -------
    BandMatrix
        The effective Hamiltonian H^RG(n) = H0 + g H_I^RG(n) of dimension n + 1.
    """
    if model is None:
        model = default_oscillator()
    logger.debug("Reducing %s from N=%d to n=%d in %s mode.", model,
                 config.initial_cutoff, config.target_cutoff, config.mode.value)
    if config.mode is EliminationMode.APPROXIMATE:
        interaction = reduce_interaction(config, model)
        return BandMatrix.from_split(model.free_diagonal(config.target_cutoff),
                                     config.g, interaction)
    matrix = model.hamiltonian(config.g, config.initial_cutoff)
    for step in range(config.steps):
        try:
            matrix = eliminate_top_exact(matrix, config.trial_e, config.pivot_floor)
        except SingularPivotError as err:
            raise err.annotate(step=step) from err
    return matrix
