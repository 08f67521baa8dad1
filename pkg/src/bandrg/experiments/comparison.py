"""Module comparing renormalized and plainly truncated oscillator spectra."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, NamedTuple

import numpy as np

from bandrg.core.eigensolver import Spectrum, lowest_k
from bandrg.core.exceptions import SingularPivotError
from bandrg.experiments.reference import REFERENCE_CUTOFF, reference_spectrum
from bandrg.models.oscillator import OscillatorParams, hamiltonian
from bandrg.renormalization.elimination import RGConfig, rg_reduce
from bandrg.utilities.io import write_csv

if TYPE_CHECKING:
    from os import PathLike

__all__ = ["DEFAULT_INITIAL_CUTOFF", "PUBLISHED_SPECTRA", "PUBLISHED_TOLERANCE",
           "ComparisonRow", "ComparisonReport", "compare_rg_pc", "published_notes"]

logger = logging.getLogger(__name__)

DEFAULT_INITIAL_CUTOFF = 200
PUBLISHED_TOLERANCE = 1e-8
# Published lowest eigenvalues of the oscillator. For g = 10 the third value is quoted
# as E_3, although it is the second excited level, and the quoted errors of the excited
# levels at n = 4 belong to n = 10.
PUBLISHED_SPECTRA: dict[float, tuple[float, ...]] = {
    0.01: (0.1687726041, 1.716925770, 3.602838696),
    1.0: (0.6487889141, 3.521565666, 7.263980184),
    10.0: (1.826275924, 7.790412053, 15.70695963),
}
_LABEL_NOTE = ("The published value 15.70695963 for g=10 is labelled E_3, it is "
               "compared as the second excited level E_2.")
_EXCITED_LEVEL_NOTE = ("The published errors 11% and 43% of the renormalized E_1 and "
                        "E_2 for g=10 are quoted for n=4, they are reproduced at n=10.")


class ComparisonRow(NamedTuple):
    """Eigenvalues of one level at one cutoff together with their relative errors."""

    n: int
    level: int
    reference: float
    rg: float
    pc: float
    error_rg: float
    error_pc: float


@dataclass(frozen=True)
class ComparisonReport:
    """Accuracy of the renormalized against the plainly truncated spectrum.

    Attributes
    ----------
    g : float
        Coupling constant.
    reference_cutoff : int
        Cutoff M of the reference spectrum.
    initial_cutoff : int
        Initial cutoff N of the renormalization.
    rows : tuple[ComparisonRow, ...]
        One row per cutoff n and level, ordered by n and level.
    notes : tuple[str, ...]
        Recorded discrepancies with published values.
    """

    g: float
    reference_cutoff: int
    initial_cutoff: int
    rows: tuple[ComparisonRow, ...]
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        for row in self.rows:
            if not (np.isfinite(row.error_rg) and np.isfinite(row.error_pc)):
                raise ValueError(f"Relative errors should be finite, got {row!r}.")

    @property
    def cutoffs(self) -> tuple[int, ...]:
        """Cutoffs n present in the report in ascending order."""
        return tuple(sorted({row.n for row in self.rows}))

    def row(self, n: int, level: int) -> ComparisonRow:
        """Return the row of the given cutoff and level."""
        for row in self.rows:
            if row.n == n and row.level == level:
                return row
        raise KeyError(f"No row for n={n} and level {level}.")

    def level(self, level: int) -> tuple[ComparisonRow, ...]:
        """Return the rows of one level ordered by the cutoff."""
        return tuple(row for row in self.rows if row.level == level)

    def to_csv(self, path: str | PathLike) -> None:
        """Write the report with header ``g,n,level,E_ref,E_rg,E_pc,err_rg,err_pc``."""
        write_csv(path, ("g", "n", "level", "E_ref", "E_rg", "E_pc", "err_rg",
                         "err_pc"), [(self.g, *row) for row in self.rows])


def _relative_error(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference) if reference else abs(value)


def _evaluate_cutoff(g: float, initial_cutoff: int, n: int, k: int
                     ) -> tuple[Spectrum, Spectrum]:
    """Return the renormalized and the truncated spectrum at cutoff n."""
    try:
        renormalized = rg_reduce(RGConfig(g, initial_cutoff, n))
    except SingularPivotError as err:
        raise err.annotate(g=g, n=n) from err
    truncated = hamiltonian(OscillatorParams(g), initial_cutoff).truncate(n)
    logger.info("Comparing RG and PC spectra for g=%r at n=%d.", g, n)
    return (lowest_k(renormalized, k, g=g, method="rg"),
            lowest_k(truncated, k, g=g, method="pc"))


def published_notes(g: float, reference: Spectrum) -> list[str]:
    """Return notes on the agreement of a reference spectrum with published values.

    Explanation
    -----------
    Published values that the reference spectrum does not reproduce within a relative
    tolerance of 1e-8 are recorded, never enforced.
    """
    notes = []
    published = PUBLISHED_SPECTRA.get(float(g))
    if published is None:
        return notes
    if float(g) == 10.0:
        notes.extend((_LABEL_NOTE, _EXCITED_LEVEL_NOTE))
    for level, value in enumerate(published[:len(reference)]):
        computed = reference[level]
        if _relative_error(computed, value) > PUBLISHED_TOLERANCE:
            note = (f"Published E_{level}={value!r} for g={g!r} is not reproduced, the "
                    f"reference value is {computed!r}.")
            logger.warning(note)
            notes.append(note)
    return notes


def compare_rg_pc(g: float, initial_cutoff: int = DEFAULT_INITIAL_CUTOFF,
                  n_grid: Iterable[int] = range(4, 61), k: int = 3,
                  reference_cutoff: int = REFERENCE_CUTOFF, workers: int = 1
                  ) -> ComparisonReport:
    """Compare renormalized and plainly truncated spectra with a reference.

    Parameters
    ----------
    g : float
        Coupling constant.
    initial_cutoff : int, optional
        Initial cutoff N, by default 200.
    n_grid : Iterable[int], optional
        Target cutoffs n, each at least k - 1 and at most N, by default 4 to 60.
    k : int, optional
        Number of levels, by default 3.
    reference_cutoff : int, optional
        Cutoff M of the reference spectrum, by default 1000.
    workers : int, optional
        Number of worker processes evaluating the grid, by default 1.

    Returns
    -------
    ComparisonReport
        Relative errors of both methods per cutoff and level.

    Explanation
    -----------
    The cutoffs are independent of each other and can be evaluated concurrently. The
    results are merged in the order of the grid, such that the report does not depend
    on the number of workers.
    """
    grid = sorted({int(n) for n in n_grid})
    if not grid:
        raise ValueError("The grid of target cutoffs is empty.")
    if grid[0] < k - 1 or grid[-1] > initial_cutoff:
        raise ValueError(f"Target cutoffs should be in [{k - 1}, {initial_cutoff}], "
                         f"got {grid[0]} to {grid[-1]}.")
    if workers < 1:
        raise ValueError(f"Number of workers should be positive, got {workers}.")
    reference = reference_spectrum(g, reference_cutoff, k)
    if workers == 1:
        spectra = [_evaluate_cutoff(g, initial_cutoff, n, k) for n in grid]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            spectra = list(executor.map(_evaluate_cutoff, *zip(
                *((g, initial_cutoff, n, k) for n in grid))))
    rows = []
    for n, (rg, pc) in zip(grid, spectra):
        for level in range(k):
            rows.append(ComparisonRow(
                n, level, reference[level], rg[level], pc[level],
                _relative_error(rg[level], reference[level]),
                _relative_error(pc[level], reference[level])))
    return ComparisonReport(float(g), reference_cutoff, initial_cutoff, tuple(rows),
                            tuple(published_notes(g, reference)))
