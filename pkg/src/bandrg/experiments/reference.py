"""Module containing the high-cutoff reference spectra and their convergence study."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

import numpy as np

from bandrg.core.eigensolver import Spectrum, lowest_k
from bandrg.models.oscillator import OscillatorParams, hamiltonian
from bandrg.utilities.io import write_csv

if TYPE_CHECKING:
    from os import PathLike

    from numpy.typing import NDArray

__all__ = ["REFERENCE_CUTOFF", "DEFAULT_TOLERANCE", "reference_spectrum",
           "ConvergenceReport", "convergence_study"]

logger = logging.getLogger(__name__)

REFERENCE_CUTOFF = 1000
DEFAULT_TOLERANCE = 1e-10


@lru_cache(maxsize=None)
def reference_spectrum(g: float, cutoff: int = REFERENCE_CUTOFF, k: int = 3
                       ) -> Spectrum:
    """Compute the lowest eigenvalues of the oscillator at a large cutoff.

    Parameters
    ----------
    g : float
        Coupling constant.
    cutoff : int, optional
        Cutoff M of the diagonalized matrix, by default 1000.
    k : int, optional
        Number of eigenvalues, by default 3.

    Returns
    -------
    Spectrum
        The k smallest eigenvalues, tagged "reference".

    Explanation
    -----------
    Spectra are immutable, hence the results are cached per (g, cutoff, k).
    """
    logger.info("Computing the reference spectrum for g=%r at M=%d.", g, cutoff)
    return lowest_k(hamiltonian(OscillatorParams(g), cutoff), k, g=g,
                    method="reference")


@dataclass(frozen=True, eq=False)
class ConvergenceReport:
    """Dependence of the lowest eigenvalues on the cutoff.

    Attributes
    ----------
    g : float
        Coupling constant.
    cutoffs : tuple[int, ...]
        Cutoffs M at which the spectrum was computed.
    spectra : tuple[Spectrum, ...]
        Lowest eigenvalues per cutoff.
    spreads : NDArray
        Largest pairwise relative difference per level.
    tolerance : float
        Admissible spread.
    """

    g: float
    cutoffs: tuple[int, ...]
    spectra: tuple[Spectrum, ...]
    spreads: NDArray
    tolerance: float

    @property
    def passed(self) -> bool:
        """Whether every level is converged within the tolerance."""
        return bool(np.all(self.spreads <= self.tolerance))

    def rows(self) -> list[tuple[object, ...]]:
        """Return the rows ``(level, spread, passed)`` of the report."""
        return [(level, float(spread), bool(spread <= self.tolerance))
                for level, spread in enumerate(self.spreads)]

    def to_csv(self, path: str | PathLike) -> None:
        """Write the per-level spreads with header ``level,spread,passed``."""
        write_csv(path, ("level", "spread", "passed"), self.rows())


def convergence_study(g: float, cutoffs: Sequence[int], k: int = 3,
                      tolerance: float = DEFAULT_TOLERANCE) -> ConvergenceReport:
    """Compare the lowest eigenvalues of the oscillator at several cutoffs.

    Parameters
    ----------
    g : float
        Coupling constant.
    cutoffs : Sequence[int]
        Cutoffs M to compare, each larger than k.
    k : int, optional
        Number of levels, by default 3.
    tolerance : float, optional
        Admissible relative spread, by default 1e-10.

    Returns
    -------
    ConvergenceReport
        Spectra and the largest pairwise relative spread per level.

    Explanation
    -----------
    The relative spread of level i between cutoffs M and M' is
    ``abs(E_i(M) - E_i(M')) / abs(E_i(M'))``, or the absolute difference if the
    eigenvalue vanishes.
    """
    if not cutoffs:
        raise ValueError("At least one cutoff is required for a convergence study.")
    if not tolerance >= 0:
        raise ValueError(f"Tolerance should be nonnegative, got {tolerance!r}.")
    spectra = tuple(reference_spectrum(g, int(cutoff), k) for cutoff in cutoffs)
    spreads = np.zeros(k)
    for a, b in itertools.permutations(spectra, 2):
        scale = np.abs(b.eigenvalues)
        diff = np.abs(a.eigenvalues - b.eigenvalues)
        relative = np.divide(diff, scale, out=diff.copy(), where=scale > 0)
        spreads = np.maximum(spreads, relative)
    report = ConvergenceReport(float(g), tuple(int(c) for c in cutoffs), spectra,
                               spreads, tolerance)
    logger.info("Convergence study for g=%r over M=%s: spreads %s.", g,
                report.cutoffs, spreads)
    return report
