"""Module containing the dense symmetric eigensolver.

The eigenvalues are computed by a Householder reduction to tridiagonal form followed
by the implicitly shifted QL algorithm. The reduction starts at the last row and the QL
iteration deflates from the top. The error of every eigenvalue is a small multiple of
the machine precision times the norm of the matrix. For the oscillator at the reference
cutoff M = 1000 the lowest levels are accurate to 1e-10 relative, but not to the last
bit.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from bandrg.core.exceptions import ConvergenceError, NotSymmetricError
from bandrg.utilities.io import write_csv

if TYPE_CHECKING:
    from os import PathLike

    from numpy.typing import ArrayLike, NDArray

    from bandrg.core.band_matrix import BandMatrix

__all__ = ["Spectrum", "eigenvalues_symmetric", "lowest_k", "tridiagonalize",
           "tridiagonal_eigenvalues"]

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-12
MAX_SWEEPS_PER_DIMENSION = 30


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues of a Hamiltonian matrix together with their origin.

    Attributes
    ----------
    eigenvalues : NDArray
        Eigenvalues sorted in ascending order.
    cutoff : int | None
        Cutoff of the diagonalized matrix, if known.
    g : float | None
        Coupling constant of the diagonalized Hamiltonian, if known.
    method : str
        Tag describing how the matrix was obtained, e.g. "rg", "pc" or "reference".
    """

    eigenvalues: NDArray
    cutoff: int | None = None
    g: float | None = None
    method: str = ""

    def __post_init__(self) -> None:
        values = np.array(self.eigenvalues, dtype=float).ravel()
        if not np.all(np.isfinite(values)):
            raise ValueError("Eigenvalues of a spectrum should be finite.")
        if np.any(np.diff(values) < 0):
            raise ValueError("Eigenvalues of a spectrum should be sorted ascending.")
        values.flags.writeable = False
        object.__setattr__(self, "eigenvalues", values)

    def __len__(self) -> int:
        return self.eigenvalues.size

    def __getitem__(self, level: int) -> float:
        return float(self.eigenvalues[level])

    def lowest(self, k: int) -> Spectrum:
        """Return the spectrum restricted to the k smallest eigenvalues."""
        if not 1 <= k <= len(self):
            raise ValueError(f"Cannot select {k} eigenvalues from a spectrum of "
                             f"length {len(self)}.")
        return Spectrum(self.eigenvalues[:k], self.cutoff, self.g, self.method)

    def to_csv(self, path: str | PathLike) -> None:
        """Write the spectrum with header ``index,eigenvalue``."""
        write_csv(path, ("index", "eigenvalue"), enumerate(self.eigenvalues))


def tridiagonalize(matrix: ArrayLike) -> tuple[NDArray, NDArray]:
    """Reduce a symmetric matrix to tridiagonal form by Householder reflections.

    Parameters
    ----------
    matrix : ArrayLike
        Dense symmetric matrix, it is not modified.

    Returns
    -------
    diagonal : NDArray
        Diagonal of the tridiagonal matrix.
    off_diagonal : NDArray
        Sub-diagonal, where ``off_diagonal[i]`` couples row i to row i - 1 and
        ``off_diagonal[0]`` is zero.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    for i in range(n - 1, 0, -1):
        l = i - 1  # noqa: E741
        row = a[i, :i]
        scale = np.sum(np.abs(row))
        if l == 0 or scale == 0.0:
            e[i] = a[i, l]
        else:
            u = row / scale
            h = float(u @ u)
            f = u[l]
            g = -math.copysign(math.sqrt(h), f)
            e[i] = scale * g
            h -= f * g
            u[l] = f - g
            block = a[:i, :i]
            p = block @ u / h
            k = float(u @ p) / (h + h)
            q = p - k * u
            block -= np.outer(u, q) + np.outer(q, u)
        d[i] = a[i, i]
    d[0] = a[0, 0]
    return d, e


def tridiagonal_eigenvalues(diagonal: ArrayLike, off_diagonal: ArrayLike,
                            max_iterations: int | None = None) -> NDArray:
    """Compute the eigenvalues of a symmetric tridiagonal matrix by implicit QL.

    Parameters
    ----------
    diagonal : ArrayLike
        Diagonal of the matrix.
    off_diagonal : ArrayLike
        Sub-diagonal in the layout returned by :func:`tridiagonalize`.
    max_iterations : int, optional
        Cap on the total number of QL sweeps, by default 30 times the dimension.

    Returns
    -------
    NDArray
        Eigenvalues in ascending order.
    """
    d = [float(x) for x in diagonal]
    n = len(d)
    e = [float(x) for x in off_diagonal][1:] + [0.0]
    if max_iterations is None:
        max_iterations = MAX_SWEEPS_PER_DIMENSION * max(n, 1)
    eps = np.finfo(float).eps
    sweeps = 0
    for l in range(n):  # noqa: E741
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_iterations:
                raise ConvergenceError(
                    f"Implicit QL iteration did not converge within {max_iterations} "
                    f"sweeps for a tridiagonal matrix of dimension {n}.")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    logger.debug("Implicit QL converged after %d sweeps for dimension %d.", sweeps, n)
    return np.sort(np.array(d))


def eigenvalues_symmetric(matrix: ArrayLike) -> Spectrum:
    """Compute all eigenvalues of a dense symmetric matrix.

    Parameters
    ----------
    matrix : ArrayLike
        Dense matrix, symmetric within a relative tolerance of 1e-12.

    Returns
    -------
    Spectrum
        All eigenvalues in ascending order.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"Expected a nonempty square matrix, but got shape {a.shape}.")
    if not np.all(np.isfinite(a)):
        raise ValueError("Matrix contains non-finite entries.")
    asymmetry = np.max(np.abs(a - a.T))
    if asymmetry > SYMMETRY_TOLERANCE * max(np.max(np.abs(a)), np.finfo(float).tiny):
        raise NotSymmetricError(f"Matrix is not symmetric, the largest difference "
                                f"between transposed entries is {asymmetry!r}.")
    d, e = tridiagonalize(a)
    return Spectrum(tridiagonal_eigenvalues(d, e), cutoff=a.shape[0] - 1)


def lowest_k(matrix: BandMatrix, k: int, g: float | None = None, method: str = ""
             ) -> Spectrum:
    """Compute the k smallest eigenvalues of a band matrix.

    Parameters
    ----------
    matrix : BandMatrix
        Matrix to diagonalize.
    k : int
        Number of eigenvalues.
    g : float, optional
        Coupling constant stored in the metadata of the spectrum.
    method : str, optional
        Method tag stored in the metadata of the spectrum.
    """
    if not 1 <= k <= matrix.dim:
        raise ValueError(f"Requested {k} eigenvalues of a matrix of dimension "
                         f"{matrix.dim}.")
    values = eigenvalues_symmetric(matrix.to_dense()).eigenvalues[:k]
    return Spectrum(values, cutoff=matrix.cutoff, g=g, method=method)
