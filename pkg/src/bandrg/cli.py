"""Command line interface of bandrg.

Every sub-command writes comma-separated values, either to the file given with
``--csv`` or to the standard output. The exit status is 0 on success, 2 for invalid
arguments or a missing plotting extra, 3 for a numerical failure and 4 if ``converge``
finds a level that is not converged within the tolerance.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import TYPE_CHECKING, Iterable, Sequence

from bandrg.core.eigensolver import lowest_k
from bandrg.core.exceptions import NumericalError
from bandrg.experiments.comparison import DEFAULT_INITIAL_CUTOFF, compare_rg_pc
from bandrg.experiments.reference import DEFAULT_TOLERANCE, convergence_study
from bandrg.experiments.xi_report import (
    DEFAULT_XI_COUPLING,
    DEFAULT_XI_MIN_CUTOFF,
    xi_flow_report,
)
from bandrg.models.oscillator import OscillatorParams, hamiltonian
from bandrg.renormalization.elimination import EliminationMode, RGConfig, rg_reduce
from bandrg.utilities.io import format_value, write_csv

if TYPE_CHECKING:
    from bandrg.core.band_matrix import BandMatrix

__all__ = ["EXIT_OK", "EXIT_USAGE", "EXIT_NUMERICAL", "EXIT_NOT_CONVERGED",
           "build_parser", "main"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_NOT_CONVERGED = 4


def _cutoff(value: str) -> int:
    cutoff = int(value)
    if cutoff < 0:
        raise argparse.ArgumentTypeError(f"cutoff should be nonnegative, got {value}")
    return cutoff


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def _cutoff_list(value: str) -> list[int]:
    try:
        return [_cutoff(item) for item in value.split(",") if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of cutoffs, got {value!r}") from err


def _emit(header: Sequence[str], rows: Iterable[Sequence[object]],
          path: str | None) -> None:
    if path is not None:
        write_csv(path, header, rows)
        return
    print(",".join(header))
    for row in rows:
        print(",".join(format_value(value) for value in row))


def _run_spectrum(args: argparse.Namespace) -> int:
    matrix = hamiltonian(OscillatorParams(args.g), args.cutoff)
    spectrum = lowest_k(matrix, args.levels, g=args.g, method="pc")
    _emit(("index", "eigenvalue"), enumerate(spectrum.eigenvalues), args.csv)
    return EXIT_OK


def _run_reduce(args: argparse.Namespace) -> int:
    config = RGConfig(args.g, args.big_n, args.small_n, args.mode, args.trial_e)
    matrix: BandMatrix = rg_reduce(config)
    _emit(("k", "l", "value"), matrix.iter_entries(), args.csv)
    return EXIT_OK


def _run_compare(args: argparse.Namespace) -> int:
    report = compare_rg_pc(args.g, args.big_n, range(args.n_min, args.n_max + 1),
                           args.levels, workers=args.workers)
    report.to_csv(args.csv)
    for note in report.notes:
        logger.info("Note: %s", note)
    if args.svg is not None:
        from bandrg.utilities.plotting import plot_ground_state
        plot_ground_state(report, args.svg)
    return EXIT_OK


def _run_xi(args: argparse.Namespace) -> int:
    xi_flow_report(args.g, args.big_n, args.n_min, args.csv, args.svg)
    return EXIT_OK


def _run_converge(args: argparse.Namespace) -> int:
    report = convergence_study(args.g, args.cutoffs, args.levels, args.tol)
    _emit(("level", "spread", "passed"), report.rows(), None)
    if not report.passed:
        logger.error("Eigenvalues for g=%r are not converged within %r over M=%s.",
                     args.g, args.tol, report.cutoffs)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with all sub-commands."""
    parser = argparse.ArgumentParser(
        prog="bandrg",
        description="Renormalization of the quartic oscillator by eliminating "
                    "high-energy basis states.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="increase the logging verbosity, may be repeated")
    parser.add_argument("-q", "--quiet", action="store_true",
                        help="only log errors")
    subparsers = parser.add_subparsers(dest="command", required=True)

    spectrum = subparsers.add_parser(
        "spectrum", help="lowest eigenvalues of the oscillator at a cutoff")
    spectrum.add_argument("--g", type=float, required=True, help="coupling constant")
    spectrum.add_argument("--cutoff", type=_cutoff, required=True,
                          help="highest retained occupation number")
    spectrum.add_argument("--levels", type=_positive_int, required=True,
                          help="number of eigenvalues")
    spectrum.add_argument("--csv", help="destination of the CSV output")
    spectrum.set_defaults(run=_run_spectrum)

    reduce = subparsers.add_parser(
        "reduce", help="renormalized Hamiltonian at a smaller cutoff")
    reduce.add_argument("--g", type=float, required=True, help="coupling constant")
    reduce.add_argument("--big-n", type=_cutoff, required=True,
                        help="initial cutoff N")
    reduce.add_argument("--small-n", type=_cutoff, required=True,
                        help="target cutoff n")
    reduce.add_argument("--mode", choices=[mode.value for mode in EliminationMode],
                        default=EliminationMode.APPROXIMATE.value,
                        help="treatment of the eigenvalue in the denominators")
    reduce.add_argument("--trial-e", type=float, default=0.0,
                        help="trial eigenvalue in exact mode")
    reduce.add_argument("--csv", help="destination of the CSV output")
    reduce.set_defaults(run=_run_reduce)

    compare = subparsers.add_parser(
        "compare", help="accuracy of renormalization against plain truncation")
    compare.add_argument("--g", type=float, required=True, help="coupling constant")
    compare.add_argument("--big-n", type=_cutoff, default=DEFAULT_INITIAL_CUTOFF,
                         help="initial cutoff N")
    compare.add_argument("--n-min", type=_cutoff, required=True,
                         help="smallest target cutoff")
    compare.add_argument("--n-max", type=_cutoff, required=True,
                         help="largest target cutoff")
    compare.add_argument("--levels", type=_positive_int, default=3,
                         help="number of levels")
    compare.add_argument("--workers", type=_positive_int, default=1,
                         help="number of worker processes")
    compare.add_argument("--csv", required=True, help="destination of the report")
    compare.add_argument("--svg", help="destination of the ground state figure")
    compare.set_defaults(run=_run_compare)

    xi = subparsers.add_parser("xi", help="flow of the corner couplings")
    xi.add_argument("--g", type=float, default=DEFAULT_XI_COUPLING,
                    help="coupling constant")
    xi.add_argument("--big-n", type=_cutoff, default=DEFAULT_INITIAL_CUTOFF,
                    help="initial cutoff N")
    xi.add_argument("--n-min", type=_cutoff, default=DEFAULT_XI_MIN_CUTOFF,
                    help="smallest cutoff of the flow")
    xi.add_argument("--csv", required=True, help="destination of the flow")
    xi.add_argument("--svg", help="destination of the figure")
    xi.set_defaults(run=_run_xi)

    converge = subparsers.add_parser(
        "converge", help="check that the lowest eigenvalues do not depend on M")
    converge.add_argument("--g", type=float, required=True, help="coupling constant")
    converge.add_argument("--cutoffs", type=_cutoff_list, required=True,
                          help="comma-separated list of cutoffs M")
    converge.add_argument("--levels", type=_positive_int, default=3,
                          help="number of levels")
    converge.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                          help="admissible relative spread")
    converge.set_defaults(run=_run_converge)
    return parser


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    else:
        level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s:%(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line interface and return the exit status."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose, args.quiet)
    try:
        return args.run(args)
    except NumericalError as err:
        logger.error("%s", err)
        return EXIT_NUMERICAL
    except ValueError as err:
        logger.error("%s", err)
        return EXIT_USAGE
    except ImportError as err:
        logger.error("Figures require the plotting extra, install bandrg[plotting]: %s",
                     err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
