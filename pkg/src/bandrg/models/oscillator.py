"""Module containing the quartic anharmonic oscillator.

The oscillator H = a^dagger a + g (a^dagger + a)^4, with the mass set to one and the
constant 1/2 suppressed, has the following matrix elements in the occupation number
basis |k> = (k!)^(-1/2) (a^dagger)^k |0>::

    H_kk     = k + 3 g (2 k^2 + 2 k + 1)
    H_(l+2)l = g (4 l + 6) sqrt((l + 1)(l + 2))
    H_(l+4)l = g sqrt((l + 1)(l + 2)(l + 3)(l + 4))

All other elements, besides those implied by symmetry, vanish.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from sympy import Integer, Symbol, sqrt

from bandrg.core.band_matrix import BandGenerator
from bandrg.models.hamiltonian_base import HamiltonianBase

if TYPE_CHECKING:
    from sympy import Expr

    from bandrg.core.band_matrix import BandMatrix

__all__ = ["OscillatorParams", "QuarticOscillator", "default_oscillator", "hamiltonian",
           "interaction"]


@dataclass(frozen=True)
class OscillatorParams:
    """Parameters of the quartic oscillator.

    Attributes
    ----------
    g : float
        Dimensionless coupling constant. The physical model requires g > 0, g = 0 is
        admitted as the free limit.
    """

    g: float

    def __post_init__(self) -> None:
        g = float(self.g)
        if not math.isfinite(g) or g < 0:
            raise ValueError(f"Coupling constant should be finite and nonnegative, got "
                             f"{self.g!r}.")
        object.__setattr__(self, "g", g)


class QuarticOscillator(HamiltonianBase):
    """Elementary oscillator with a quartic anharmonicity."""

    row = Symbol("k", integer=True, nonnegative=True)
    column = Symbol("l", integer=True, nonnegative=True)

    def __init__(self, name: str = "quartic_oscillator") -> None:
        """Create a new instance.

        Parameters
        ----------
        name : str, optional
            Name of the model, by default "quartic_oscillator".
        """
        super().__init__(name)

    @property
    def column_elements(self) -> dict[int, Expr]:
        """Nonzero interaction elements H_I[l + i][l] as functions of the column l."""
        l = self.column  # noqa: E741
        return {
            0: 3 * (2 * l ** 2 + 2 * l + 1),
            2: (4 * l + 6) * sqrt((l + 1) * (l + 2)),
            4: sqrt((l + 1) * (l + 2) * (l + 3) * (l + 4)),
        }

    @property
    def row_elements(self) -> tuple[Expr, ...]:
        """Generator expressions h_i(k) = H_I[k][k - i] of the interaction."""
        elements = self.column_elements
        return tuple(elements[i].subs(self.column, self.row - i) if i in elements
                     else Integer(0) for i in range(max(elements) + 1))

    def _create_interaction_generator(self) -> BandGenerator:
        return BandGenerator.from_expressions(self.row_elements, self.row)


@lru_cache(maxsize=None)
def default_oscillator() -> QuarticOscillator:
    """Return the shared instance of the quartic oscillator."""
    return QuarticOscillator()


def hamiltonian(params: OscillatorParams, cutoff: int) -> BandMatrix:
    """Matrix of the oscillator Hamiltonian on the states |0>, ..., |cutoff>.

    Parameters
    ----------
    params : OscillatorParams
        Parameters of the oscillator.
    cutoff : int
        Highest retained occupation number N.

    Returns
    -------
    BandMatrix
        The (N + 1) x (N + 1) matrix with half-bandwidth 4.
    """
    return default_oscillator().hamiltonian(params.g, cutoff)


def interaction(cutoff: int) -> BandMatrix:
    """Matrix of the g-independent interaction H_I = (H - H0) / g."""
    return default_oscillator().interaction(cutoff)
