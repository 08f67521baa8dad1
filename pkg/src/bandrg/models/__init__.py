"""Module containing the Hamiltonian models."""

__all__ = [
    "HamiltonianBase", "GeneratorHamiltonian",
    "OscillatorParams", "QuarticOscillator", "default_oscillator",
]

from bandrg.models.hamiltonian_base import GeneratorHamiltonian, HamiltonianBase
from bandrg.models.oscillator import (
    OscillatorParams,
    QuarticOscillator,
    default_oscillator,
)
