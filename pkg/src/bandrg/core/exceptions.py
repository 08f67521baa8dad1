"""Exceptions raised by bandrg."""
from __future__ import annotations

__all__ = [
    "BandRGError",
    "ConstructionError",
    "NumericalError",
    "SingularPivotError",
    "ConvergenceError",
    "NotSymmetricError",
    "LocalityViolationError",
]


class BandRGError(Exception):
    """Base class of all errors raised by bandrg."""


class ConstructionError(BandRGError, ValueError):
    """Raised when a band generator produces a non-finite matrix element."""

    def __init__(self, offset: int, row: int, value: float) -> None:
        """Initialize the error.

        Parameters
        ----------
        offset : int
            Near-diagonal index i of the offending generator h_i.
        row : int
            Row index k at which h_i(k) was evaluated.
        value : float
            The non-finite value that was produced.
        """
        self.offset = offset
        self.row = row
        self.value = value
        super().__init__(
            f"Generator h_{offset}({row}) evaluated to {value!r}, which is not finite.")

    def __reduce__(self) -> tuple:
        return type(self), (self.offset, self.row, self.value)


class NumericalError(BandRGError, ArithmeticError):
    """Base class for failures of a numerical algorithm."""


class SingularPivotError(NumericalError):
    """Raised when an elimination denominator falls below the pivot floor."""

    def __init__(self, index: int, pivot: float, step: int | None = None,
                 **context: float) -> None:
        """Initialize the error.

        Parameters
        ----------
        index : int
            Index of the basis state that was being eliminated.
        pivot : float
            Value of the denominator that was rejected.
        step : int, optional
            Elimination step number j at which the failure occurred.
        **context
            Additional context, like the coupling ``g`` or target cutoff ``n``.
        """
        self.index = index
        self.pivot = pivot
        self.step = step
        self.context = dict(context)
        super().__init__(self._message())

    def __reduce__(self) -> tuple:
        return _rebuild_pivot_error, (self.index, self.pivot, self.step, self.context)

    def _message(self) -> str:
        msg = f"Singular pivot {self.pivot!r} while eliminating state {self.index}"
        if self.step is not None:
            msg += f" at step j={self.step}"
        if self.context:
            msg += " (" + ", ".join(f"{k}={v!r}" for k, v in self.context.items()) + ")"
        return msg + "."

    def annotate(self, step: int | None = None, **context: float
                 ) -> SingularPivotError:
        """Return a copy of the error with additional context."""
        return SingularPivotError(
            self.index, self.pivot, self.step if step is None else step,
            **{**self.context, **context})


class ConvergenceError(NumericalError):
    """Raised when an iterative eigenvalue algorithm exceeds its iteration cap."""


class NotSymmetricError(BandRGError, ValueError):
    """Raised when a matrix that should be symmetric is not."""


class LocalityViolationError(BandRGError, AssertionError):
    """Raised when renormalization changed entries outside the high-energy corner."""


def _rebuild_pivot_error(index: int, pivot: float, step: int | None,
                         context: dict[str, float]) -> SingularPivotError:
    return SingularPivotError(index, pivot, step, **context)
