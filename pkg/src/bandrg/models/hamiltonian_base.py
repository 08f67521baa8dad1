"""Module containing the base class of band-diagonal Hamiltonian models."""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Callable

import numpy as np

from bandrg.core.band_matrix import BandGenerator, BandMatrix, build

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

__all__ = ["HamiltonianBase", "GeneratorHamiltonian"]


class HamiltonianBase(ABC):
    """Base class for Hamiltonians H = H0 + g * H_I in the occupation number basis.

    Explanation
    -----------
    The free part H0 is diagonal in the basis |0>, |1>, ... and the interaction H_I
    is band-diagonal. Subclasses only have to provide the near-diagonal generators of
    the interaction; truncation to a cutoff and composition with the coupling constant
    are handled here.
    """

    def __init__(self, name: str) -> None:
        """Create a new instance.

        Parameters
        ----------
        name : str
            Name of the model.
        """
        if not name.isidentifier():
            raise ValueError("The name of a model should be a valid identifier.")
        self._name = str(name)
        self._generator = None

    @property
    def name(self) -> str:
        """Name of the model."""
        return self._name

    def __str__(self) -> str:
        return self.name

    @abstractmethod
    def _create_interaction_generator(self) -> BandGenerator:
        """Create the generator of the g-independent interaction H_I."""

    @property
    def interaction_generator(self) -> BandGenerator:
        """Generator of the near-diagonals of the interaction H_I."""
        if self._generator is None:
            self._generator = self._create_interaction_generator()
        return self._generator

    @property
    def half_bandwidth(self) -> int:
        """Half-bandwidth m of the interaction."""
        return self.interaction_generator.half_bandwidth

    def free_values(self, rows: NDArray) -> NDArray:
        """Diagonal elements of the free Hamiltonian H0 = a^dagger a at the rows."""
        return np.array(rows, dtype=float)

    def free_diagonal(self, cutoff: int) -> NDArray:
        """Diagonal of the free Hamiltonian H0 up to the cutoff."""
        return self.free_values(np.arange(cutoff + 1, dtype=float))

    def interaction(self, cutoff: int) -> BandMatrix:
        """Matrix of the interaction H_I with the given cutoff."""
        return build(self.interaction_generator, cutoff)

    def hamiltonian(self, g: float, cutoff: int) -> BandMatrix:
        """Matrix of the full Hamiltonian H = H0 + g * H_I with the given cutoff."""
        return BandMatrix.from_split(self.free_diagonal(cutoff), g,
                                     self.interaction(cutoff))

    def hamiltonian_generator(self, g: float) -> BandGenerator:
        """Generator of the full Hamiltonian for a fixed coupling constant.

        Explanation
        -----------
        The generated elements are evaluated with the same floating point operations
        as :meth:`hamiltonian`, hence ``build(model.hamiltonian_generator(g), n)`` and
        ``model.hamiltonian(g, n)`` are bitwise identical.
        """
        interaction = self.interaction_generator

        def diagonal(rows: NDArray) -> NDArray:
            return self.free_values(rows) + g * interaction.evaluate(0, rows)

        def near_diagonal(offset: int) -> Callable[[NDArray], NDArray]:
            return lambda rows: g * interaction.evaluate(offset, rows)

        return BandGenerator([diagonal] + [
            near_diagonal(i) for i in range(1, interaction.half_bandwidth + 1)])


class GeneratorHamiltonian(HamiltonianBase):
    """Hamiltonian whose interaction is given by an arbitrary band generator."""

    def __init__(self, name: str, generator: BandGenerator,
                 free_diagonal: Callable[[NDArray], ArrayLike] | None = None) -> None:
        """Create a new instance.

        Parameters
        ----------
        name : str
            Name of the model.
        generator : BandGenerator
            Generator of the interaction H_I.
        free_diagonal : Callable[[NDArray], ArrayLike], optional
            Diagonal of H0 as a function of the basis index, by default the occupation
            number k itself.
        """
        super().__init__(name)
        if not isinstance(generator, BandGenerator):
            raise TypeError(f"Generator should be an instance of {BandGenerator}, but "
                            f"{generator!r} is an instance of {type(generator)}.")
        self._interaction_generator = generator
        self._free_diagonal = free_diagonal

    def _create_interaction_generator(self) -> BandGenerator:
        return self._interaction_generator

    def free_values(self, rows: NDArray) -> NDArray:
        """Diagonal elements of the free Hamiltonian H0 at the rows."""
        rows = np.asarray(rows, dtype=float)
        if self._free_diagonal is None:
            return super().free_values(rows)
        return np.array(np.broadcast_to(self._free_diagonal(rows), rows.shape),
                        dtype=float)
