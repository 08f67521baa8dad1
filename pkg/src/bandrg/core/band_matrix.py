"""Module containing the symmetric band-diagonal matrix storage."""
from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Iterator, Sequence

import numpy as np
from sympy import lambdify

from bandrg.core.exceptions import ConstructionError
from bandrg.utilities.io import write_csv

if TYPE_CHECKING:
    from os import PathLike

    from numpy.typing import ArrayLike, NDArray
    from sympy import Expr, Symbol

__all__ = ["BandGenerator", "BandMatrix", "build"]


class BandGenerator:
    """Near-diagonal generators h_i(k) of a symmetric band-diagonal matrix.

    Explanation
    -----------
    A band-diagonal matrix with half-bandwidth m is fully determined by m + 1 functions
    of the row index. The function with index i yields the matrix element M[k][k - i]
    of row k, the elements above the diagonal follow from symmetry. Every function is
    called with a one-dimensional float array of row indices and should return an
    array of the same length or a scalar, which is then broadcast.
    """

    def __init__(self, functions: Sequence[Callable[[NDArray], ArrayLike]]) -> None:
        """Initialize the generator.

        Parameters
        ----------
        functions : Sequence[Callable[[NDArray], ArrayLike]]
            Functions h_0, h_1, ..., h_m, where h_i yields the i-th lower near-diagonal.
        """
        functions = tuple(functions)
        if not functions:
            raise ValueError("A band generator needs at least the diagonal function.")
        for i, func in enumerate(functions):
            if not callable(func):
                raise TypeError(f"Generator h_{i} should be callable, but received "
                                f"{func!r}.")
        self._functions = functions

    @classmethod
    def from_expressions(cls, expressions: Sequence[Expr | float], row: Symbol
                         ) -> BandGenerator:
        """Create a generator from symbolic expressions of the row index.

        Parameters
        ----------
        expressions : Sequence[Expr | float]
            Expressions for h_0(k), ..., h_m(k). All free symbols other than ``row``
            should have been substituted.
        row : Symbol
            Symbol representing the row index k.
        """
        functions = []
        for i, expr in enumerate(expressions):
            free = getattr(expr, "free_symbols", set()) - {row}
            if free:
                raise ValueError(f"Expression for h_{i} contains unsubstituted symbols "
                                 f"{free}.")
            functions.append(lambdify(row, expr, modules="numpy"))
        return cls(functions)

    @property
    def half_bandwidth(self) -> int:
        """Half-bandwidth m of the generated matrices."""
        return len(self._functions) - 1

    def evaluate(self, offset: int, rows: NDArray) -> NDArray:
        """Evaluate h_offset on an array of row indices."""
        rows = np.asarray(rows, dtype=float)
        values = np.asarray(self._functions[offset](rows), dtype=float)
        return np.array(np.broadcast_to(values, rows.shape), dtype=float)


class BandMatrix:
    """Symmetric real matrix stored as its lower near-diagonals.

    Explanation
    -----------
    The diagonal with offset i is stored as an array of length dim - i holding the
    entries M[c + i][c] for the columns c = 0, ..., dim - i - 1. The upper triangle is
    implied, which makes the matrix symmetric by construction. Instances are immutable:
    the stored arrays are read-only and every operation returns a new matrix.
    """

    def __init__(self, diagonals: Sequence[ArrayLike]) -> None:
        """Initialize the band matrix.

        Parameters
        ----------
        diagonals : Sequence[ArrayLike]
            Lower near-diagonals, starting with the main diagonal. The diagonal with
            offset i must have length max(dim - i, 0).
        """
        diagonals = [np.array(d, dtype=float).ravel() for d in diagonals]
        if not diagonals:
            raise ValueError("A band matrix needs at least a main diagonal.")
        dim = diagonals[0].size
        for i, diag in enumerate(diagonals):
            if diag.size != max(dim - i, 0):
                raise ValueError(
                    f"Diagonal with offset {i} has length {diag.size}, but "
                    f"{max(dim - i, 0)} was expected for dimension {dim}.")
            if not np.all(np.isfinite(diag)):
                column = int(np.flatnonzero(~np.isfinite(diag))[0])
                raise ConstructionError(i, column + i, float(diag[column]))
            diag.flags.writeable = False
        self._diagonals = tuple(diagonals)

    @classmethod
    def from_dense(cls, dense: ArrayLike, half_bandwidth: int) -> BandMatrix:
        """Extract the band of a dense square matrix.

        Only the lower triangle is read, hence the result is always symmetric.
        """
        dense = np.asarray(dense, dtype=float)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise ValueError(f"Expected a square matrix, but got shape {dense.shape}.")
        if half_bandwidth < 0:
            raise ValueError(f"Half-bandwidth should be nonnegative, got "
                             f"{half_bandwidth}.")
        return cls([np.diagonal(dense, -i) for i in range(half_bandwidth + 1)])

    @classmethod
    def from_split(cls, free_diagonal: ArrayLike, g: float, interaction: BandMatrix
                   ) -> BandMatrix:
        """Compose H = H0 + g * H_I from a diagonal H0 and an interaction H_I."""
        free_diagonal = np.asarray(free_diagonal, dtype=float)
        if free_diagonal.shape != (interaction.dim,):
            raise ValueError(f"Free diagonal of shape {free_diagonal.shape} does not "
                             f"match the interaction of dimension {interaction.dim}.")
        diagonals = [free_diagonal + g * interaction.diagonal(0)]
        diagonals.extend(g * interaction.diagonal(i)
                         for i in range(1, interaction.half_bandwidth + 1))
        return cls(diagonals)

    @property
    def dim(self) -> int:
        """Number of basis states."""
        return self._diagonals[0].size

    @property
    def cutoff(self) -> int:
        """Highest basis state index, i.e. dim - 1."""
        return self.dim - 1

    @property
    def half_bandwidth(self) -> int:
        """Half-bandwidth m of the storage."""
        return len(self._diagonals) - 1

    @property
    def diagonals(self) -> tuple[NDArray, ...]:
        """Read-only lower near-diagonals, starting with the main diagonal."""
        return self._diagonals

    def diagonal(self, offset: int) -> NDArray:
        """Return the (read-only) near-diagonal with the given offset."""
        if not 0 <= offset <= self.half_bandwidth:
            raise IndexError(f"Offset {offset} is outside the stored band "
                             f"0..{self.half_bandwidth}.")
        return self._diagonals[offset]

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.dim:
            raise IndexError(f"Index {index} is out of range for dimension {self.dim}.")

    def get(self, k: int, l: int) -> float:  # noqa: E741
        """Return the matrix element M[k][l], which is zero outside the band."""
        self._check_index(k)
        self._check_index(l)
        offset = abs(k - l)
        if offset > self.half_bandwidth:
            return 0.0
        return float(self._diagonals[offset][min(k, l)])

    def __getitem__(self, index: tuple[int, int]) -> float:
        return self.get(*index)

    def truncate(self, cutoff: int) -> BandMatrix:
        """Return the leading (cutoff + 1) x (cutoff + 1) principal submatrix.

        Explanation
        -----------
        This is the plain cutoff (PC) of the matrix: the retained matrix elements are
        left unchanged.
        """
        if cutoff < 0 or cutoff + 1 > self.dim:
            raise ValueError(f"Cannot truncate a matrix of dimension {self.dim} to "
                             f"cutoff {cutoff}.")
        dim = cutoff + 1
        return BandMatrix([d[:max(dim - i, 0)] for i, d in enumerate(self._diagonals)])

    def to_dense(self) -> NDArray:
        """Return the full symmetric matrix as a dense array."""
        dense = np.diag(self._diagonals[0])
        for i, diag in enumerate(self._diagonals[1:], start=1):
            if diag.size:
                dense += np.diag(diag, -i) + np.diag(diag, i)
        return dense

    def iter_entries(self) -> Iterator[tuple[int, int, float]]:
        """Iterate over the stored lower-triangle entries (k, l, value) row by row."""
        for k in range(self.dim):
            for l in range(max(0, k - self.half_bandwidth), k + 1):  # noqa: E741
                yield k, l, float(self._diagonals[k - l][l])

    def to_csv(self, path: str | PathLike) -> None:
        """Write the stored lower-triangle entries with header ``k,l,value``."""
        write_csv(path, ("k", "l", "value"), self.iter_entries())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BandMatrix):
            return NotImplemented
        return (self.half_bandwidth == other.half_bandwidth and
                all(np.array_equal(a, b)
                    for a, b in zip(self._diagonals, other._diagonals)))

    __hash__ = None

    def __repr__(self) -> str:
        return (f"{self.__class__.__name__}(dim={self.dim}, "
                f"half_bandwidth={self.half_bandwidth})")


def build(generator: BandGenerator, cutoff: int) -> BandMatrix:
    """Build the (cutoff + 1) x (cutoff + 1) matrix defined by a band generator.

    Parameters
    ----------
    generator : BandGenerator
        Generator of the near-diagonals, M[k][k - i] = h_i(k).
    cutoff : int
        Highest basis state index n.

    Returns
    -------
    BandMatrix
        Matrix with the half-bandwidth of the generator.
    """
    if cutoff < 0:
        raise ValueError(f"Cutoff should be nonnegative, got {cutoff}.")
    diagonals = []
    for i in range(generator.half_bandwidth + 1):
        rows = np.arange(i, cutoff + 1, dtype=float)
        values = generator.evaluate(i, rows)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise ConstructionError(i, int(rows[bad[0]]), float(values[bad[0]]))
        diagonals.append(values)
    return BandMatrix(diagonals)
