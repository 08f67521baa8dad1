"""Module containing the band matrix storage and the symmetric eigensolver."""

__all__ = [
    "BandGenerator", "BandMatrix", "build",
    "Spectrum", "eigenvalues_symmetric", "lowest_k", "tridiagonalize",
    "tridiagonal_eigenvalues",
]

from bandrg.core.band_matrix import BandGenerator, BandMatrix, build
from bandrg.core.eigensolver import (
    Spectrum,
    eigenvalues_symmetric,
    lowest_k,
    tridiagonal_eigenvalues,
    tridiagonalize,
)
