"""bandrg.

Renormalization of band-diagonal Hamiltonians by Gaussian elimination of high-energy
basis states.
"""
__all__ = [
    "BandGenerator", "BandMatrix", "build",

    "Spectrum", "eigenvalues_symmetric", "lowest_k",

    "HamiltonianBase", "GeneratorHamiltonian",

    "OscillatorParams", "QuarticOscillator",

    "EliminationMode", "RGConfig", "rg_reduce", "reduce_interaction",

    "XiTrace", "xi_flow",
]

from bandrg.core import (
    BandGenerator,
    BandMatrix,
    Spectrum,
    build,
    eigenvalues_symmetric,
    lowest_k,
)
from bandrg.models import (
    GeneratorHamiltonian,
    HamiltonianBase,
    OscillatorParams,
    QuarticOscillator,
)
from bandrg.renormalization import (
    EliminationMode,
    RGConfig,
    XiTrace,
    reduce_interaction,
    rg_reduce,
    xi_flow,
)
