from __future__ import annotations

import sys

import pytest
from bandrg.cli import (
    EXIT_NOT_CONVERGED,
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    main,
)


class TestParser:
    @pytest.mark.parametrize("argv", [
        [],
        ["spectrum"],
        ["spectrum", "--g", "1", "--cutoff", "-3", "--levels", "3"],
        ["spectrum", "--g", "1", "--cutoff", "10", "--levels", "0"],
        ["reduce", "--g", "1", "--big-n", "10", "--small-n", "5", "--mode", "fast"],
        ["converge", "--g", "1", "--cutoffs", "10,a"],
        ["xi", "--g", "10"],
    ])
    def test_usage_error(self, argv) -> None:
        with pytest.raises(SystemExit) as exc_info:
            main(argv)
        assert exc_info.value.code == EXIT_USAGE

    def test_defaults(self) -> None:
        args = build_parser().parse_args(["xi", "--csv", "xi.csv"])
        assert (args.g, args.big_n, args.n_min, args.svg) == (10.0, 200, 8, None)
        args = build_parser().parse_args(["converge", "--g", "1", "--cutoffs",
                                          "200,1000"])
        assert args.cutoffs == [200, 1000]
        assert args.tol == 1e-10


class TestSpectrum:
    def test_stdout(self, capsys) -> None:
        assert main(["spectrum", "--g", "0", "--cutoff", "5", "--levels", "3"]) == \
            EXIT_OK
        assert capsys.readouterr().out == "index,eigenvalue\n0,0\n1,1\n2,2\n"

    def test_csv(self, tmp_path, capsys) -> None:
        path = tmp_path / "spectrum.csv"
        assert main(["-q", "spectrum", "--g", "0", "--cutoff", "5", "--levels", "2",
                     "--csv", str(path)]) == EXIT_OK
        assert path.read_text() == "index,eigenvalue\n0,0\n1,1\n"
        assert capsys.readouterr().out == ""

    def test_too_many_levels(self) -> None:
        assert main(["spectrum", "--g", "1", "--cutoff", "2", "--levels", "4"]) == \
            EXIT_USAGE


class TestReduce:
    def test_stdout(self, capsys) -> None:
        assert main(["reduce", "--g", "0", "--big-n", "4", "--small-n", "2"]) == \
            EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "k,l,value"
        assert lines[1] == "0,0,0"
        assert lines[-1] == "2,2,2"
        assert len(lines) == 7

    def test_invalid_coupling(self) -> None:
        assert main(["reduce", "--g", "-1", "--big-n", "10", "--small-n", "5"]) == \
            EXIT_USAGE

    def test_singular_pivot(self) -> None:
        assert main(["reduce", "--g", "0", "--big-n", "5", "--small-n", "3",
                     "--mode", "exact", "--trial-e", "5"]) == EXIT_NUMERICAL


class TestConverge:
    def test_not_converged(self, capsys) -> None:
        assert main(["converge", "--g", "10", "--cutoffs", "20,200"]) == \
            EXIT_NOT_CONVERGED
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "level,spread,passed"
        assert lines[3].endswith(",false")

    def test_converged(self, capsys) -> None:
        assert main(["converge", "--g", "0", "--cutoffs", "10,20"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[1] == "0,0,true"


class TestFiles:
    def test_xi(self, tmp_path) -> None:
        path = tmp_path / "xi.csv"
        assert main(["xi", "--g", "1", "--big-n", "30", "--n-min", "10", "--csv",
                     str(path)]) == EXIT_OK
        lines = path.read_text().splitlines()
        assert lines[0] == "n,xi1,xi2,xi3,xi4,xi5,xi6"
        assert len(lines) == 1 + 21

    def test_xi_short_flow(self, tmp_path) -> None:
        assert main(["xi", "--big-n", "12", "--csv", str(tmp_path / "xi.csv")]) == \
            EXIT_USAGE

    @pytest.mark.slow
    def test_compare_deterministic(self, tmp_path) -> None:
        argv = ["compare", "--g", "1", "--big-n", "30", "--n-min", "4", "--n-max", "6"]
        assert main([*argv, "--csv", str(tmp_path / "a.csv")]) == EXIT_OK
        assert main([*argv, "--workers", "2", "--csv", str(tmp_path / "b.csv")]) == \
            EXIT_OK
        content = (tmp_path / "a.csv").read_text()
        assert content == (tmp_path / "b.csv").read_text()
        assert len(content.splitlines()) == 1 + 3 * 3

    def test_compare_invalid_grid(self, tmp_path) -> None:
        assert main(["compare", "--g", "1", "--big-n", "20", "--n-min", "4",
                     "--n-max", "30", "--csv", str(tmp_path / "c.csv")]) == EXIT_USAGE
        assert not (tmp_path / "c.csv").exists()

    def test_svg_without_plotting_extra(self, tmp_path, monkeypatch) -> None:
        monkeypatch.setitem(sys.modules, "matplotlib", None)
        monkeypatch.setitem(sys.modules, "matplotlib.pyplot", None)
        monkeypatch.delitem(sys.modules, "bandrg.utilities.plotting", raising=False)
        assert main(["xi", "--g", "1", "--big-n", "30", "--n-min", "10", "--csv",
                     str(tmp_path / "xi.csv"), "--svg", str(tmp_path / "xi.svg")]) == \
            EXIT_USAGE
        assert not (tmp_path / "xi.svg").exists()
