"""Module verifying that renormalization only changes the high-energy corner."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from bandrg.core.exceptions import LocalityViolationError

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from bandrg.core.band_matrix import BandMatrix

__all__ = ["CornerDelta", "corner_delta"]


@dataclass(frozen=True, eq=False)
class CornerDelta:
    """Difference between a renormalized and a plainly truncated matrix.

    Attributes
    ----------
    start : int
        Index of the first row and column of the corner.
    delta : NDArray
        Dense symmetric difference H^RG - H^PC restricted to the corner.
    """

    start: int
    delta: NDArray

    @property
    def changed(self) -> int:
        """Number of matrix elements that differ, counting both triangles."""
        return int(np.count_nonzero(self.delta))

    @property
    def independent(self) -> int:
        """Number of differing matrix elements on or below the diagonal."""
        return int(np.count_nonzero(np.tril(self.delta)))


def corner_delta(renormalized: BandMatrix, truncated: BandMatrix) -> CornerDelta:
    """Return the corner difference and check that nothing else changed.

    Parameters
    ----------
    renormalized : BandMatrix
        Renormalized matrix H^RG(n).
    truncated : BandMatrix
        Plain cutoff H^PC(n) of the same dimension and half-bandwidth.

    Returns
    -------
    CornerDelta
        The difference inside the m x m highest-index corner.

    Raises
    ------
    LocalityViolationError
        If any element outside the corner differs, even by a single bit.
    """
    if (renormalized.dim != truncated.dim or
            renormalized.half_bandwidth != truncated.half_bandwidth):
        raise ValueError(
            f"Cannot compare {renormalized!r} with {truncated!r}, dimensions and "
            f"half-bandwidths should be equal.")
    dim, m = renormalized.dim, renormalized.half_bandwidth
    start = max(0, dim - m)
    for offset, (a, b) in enumerate(zip(renormalized.diagonals, truncated.diagonals)):
        outside = np.flatnonzero(a[:start] != b[:start])
        if outside.size:
            col = int(outside[0])
            raise LocalityViolationError(
                f"Element ({col + offset}, {col}) differs outside the {m} x {m} "
                f"corner: {a[col]!r} != {b[col]!r}.")
    delta = np.zeros((dim - start, dim - start))
    for offset, (a, b) in enumerate(zip(renormalized.diagonals, truncated.diagonals)):
        cols = np.arange(start, dim - offset) - start
        diff = a[start:] - b[start:]
        delta[cols + offset, cols] = diff
        delta[cols, cols + offset] = diff
    return CornerDelta(start, delta)
