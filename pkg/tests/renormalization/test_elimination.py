from __future__ import annotations

import numpy as np
import pytest
from bandrg.core.band_matrix import BandGenerator, BandMatrix
from bandrg.core.exceptions import SingularPivotError
from bandrg.models.hamiltonian_base import GeneratorHamiltonian
from bandrg.models.oscillator import (
    OscillatorParams,
    default_oscillator,
    hamiltonian,
    interaction,
)
from bandrg.renormalization.elimination import (
    PIVOT_FLOOR,
    EliminationMode,
    RGConfig,
    eliminate_top_approx,
    eliminate_top_dense,
    eliminate_top_exact,
    iter_reduce_interaction,
    reduce_interaction,
    rg_reduce,
)


def random_band_matrix(rng: np.random.Generator, dim: int, half_bandwidth: int
                       ) -> BandMatrix:
    diagonals = [10.0 * np.arange(dim) + rng.uniform(-1, 1, dim)]
    diagonals.extend(rng.uniform(-1, 1, dim - i)
                     for i in range(1, half_bandwidth + 1))
    return BandMatrix(diagonals)


def distance_to_spectrum(matrix: np.ndarray, value: float) -> float:
    return float(np.min(np.abs(np.linalg.eigvalsh(matrix) - value)))


class TestRGConfig:
    def test_defaults(self) -> None:
        config = RGConfig(1.0, 200, 10)
        assert config.mode is EliminationMode.APPROXIMATE
        assert config.trial_e == 0.0
        assert config.pivot_floor == PIVOT_FLOOR
        assert config.steps == 190

    def test_mode_from_string(self) -> None:
        assert RGConfig(1.0, 10, 5, "exact", 0.5).mode is EliminationMode.EXACT

    @pytest.mark.parametrize("args, kwargs", [
        ((-1.0, 10, 5), {}),
        ((np.nan, 10, 5), {}),
        ((1.0, 10, 11), {}),
        ((1.0, 10, -1), {}),
        ((1.0, 10, 5), {"trial_e": 0.5}),
        ((1.0, 10, 5), {"mode": "exact", "trial_e": np.inf}),
        ((1.0, 10, 5), {"pivot_floor": 0.0}),
        ((1.0, 10, 5), {"mode": "fast"}),
    ])
    def test_invalid(self, args, kwargs) -> None:
        with pytest.raises(ValueError):
            RGConfig(*args, **kwargs)

    def test_frozen(self) -> None:
        config = RGConfig(1.0, 10, 5)
        with pytest.raises(AttributeError):
            config.g = 2.0


class TestEliminateTopExact:
    def test_two_by_two(self) -> None:
        reduced = eliminate_top_exact(BandMatrix([[0.0, 2.0], [1.0]]), 0.0)
        assert reduced.dim == 1
        assert reduced.get(0, 0) == -0.5

    @pytest.mark.parametrize("seed", range(20))
    def test_keeps_eigenvalue(self, seed) -> None:
        rng = np.random.default_rng(seed)
        matrix = random_band_matrix(rng, 6, 2)
        eigenvalue = np.linalg.eigvalsh(matrix.to_dense())[rng.integers(0, 3)]
        reduced = eliminate_top_exact(matrix, eigenvalue)
        assert reduced.dim == 5
        assert reduced.half_bandwidth == 2
        assert distance_to_spectrum(reduced.to_dense(), eigenvalue) < 1e-9

    def test_keeps_oscillator_eigenvalue(self) -> None:
        matrix = hamiltonian(OscillatorParams(1.0), 5)
        for eigenvalue in np.linalg.eigvalsh(matrix.to_dense())[:3]:
            reduced = eliminate_top_exact(matrix, eigenvalue)
            assert distance_to_spectrum(reduced.to_dense(), eigenvalue) < 1e-9

    def test_matches_dense(self) -> None:
        matrix = random_band_matrix(np.random.default_rng(42), 9, 3)
        np.testing.assert_allclose(eliminate_top_exact(matrix, 1.5).to_dense(),
                                   eliminate_top_dense(matrix.to_dense(), 1.5),
                                   rtol=1e-14, atol=1e-14)

    def test_singular_pivot(self) -> None:
        with pytest.raises(SingularPivotError) as exc_info:
            eliminate_top_exact(BandMatrix([[0.0, 2.0], [1.0]]), 2.0)
        assert exc_info.value.index == 1
        assert exc_info.value.pivot == 0.0

    def test_single_state(self) -> None:
        with pytest.raises(ValueError):
            eliminate_top_exact(BandMatrix([[1.0]]), 0.0)


class TestEliminateTopDense:
    def test_schur_complement(self) -> None:
        dense = np.array([[1.0, 0.0, 2.0], [0.0, 3.0, 1.0], [2.0, 1.0, 5.0]])
        np.testing.assert_allclose(eliminate_top_dense(dense, 1.0), [
            [1.0 - 1.0, -0.5],
            [-0.5, 3.0 - 0.25],
        ])

    @pytest.mark.parametrize("matrix", [np.ones((2, 3)), np.ones((1, 1))])
    def test_invalid(self, matrix) -> None:
        with pytest.raises(ValueError):
            eliminate_top_dense(matrix, 0.0)

    def test_singular_pivot(self) -> None:
        with pytest.raises(SingularPivotError):
            eliminate_top_dense(np.eye(3), 1.0)


class TestEliminateTopApprox:
    @pytest.mark.parametrize("g", [0.01, 1.0, 10.0])
    def test_equals_exact_at_zero(self, g) -> None:
        free = np.arange(31.0)
        reduced = eliminate_top_approx(free, interaction(30), g)
        exact = eliminate_top_exact(hamiltonian(OscillatorParams(g), 30), 0.0)
        np.testing.assert_allclose(
            BandMatrix.from_split(free[:-1], g, reduced).to_dense(), exact.to_dense(),
            rtol=1e-13, atol=1e-12)

    def test_hand_evaluation(self) -> None:
        # Eliminating |6> with g = 1: H_I[6][6] = 255, H_I[6][4] = 22 sqrt(30) and
        # H_I[6][2] = sqrt(360), the denominator is 6 + 255.
        reduced = eliminate_top_approx(np.arange(7.0), interaction(6), 1.0)
        assert reduced.get(4, 4) == pytest.approx(123 - 22 ** 2 * 30 / 261)
        assert reduced.get(4, 2) == pytest.approx(
            14 * np.sqrt(12) - 22 * np.sqrt(30) * np.sqrt(360) / 261)
        assert reduced.get(2, 2) == pytest.approx(39 - 360 / 261)
        assert reduced.get(5, 3) == interaction(6).get(5, 3)
        assert reduced.get(4, 0) == interaction(6).get(4, 0)

    def test_non_positive_denominator(self) -> None:
        with pytest.raises(SingularPivotError):
            eliminate_top_approx(np.arange(5.0), interaction(4), 1.0, trial_e=300.0)


class TestReduction:
    def test_trajectory(self) -> None:
        steps = list(iter_reduce_interaction(RGConfig(1.0, 12, 8)))
        assert [n for n, _ in steps] == [12, 11, 10, 9, 8]
        assert [matrix.cutoff for _, matrix in steps] == [12, 11, 10, 9, 8]
        assert steps[0][1] == interaction(12)
        assert steps[-1][1] == reduce_interaction(RGConfig(1.0, 12, 8))

    def test_no_steps(self) -> None:
        config = RGConfig(1.0, 10, 10)
        assert reduce_interaction(config) == interaction(10)
        assert rg_reduce(config) == hamiltonian(OscillatorParams(1.0), 10)

    def test_free_limit(self) -> None:
        config = RGConfig(0.0, 20, 10)
        assert reduce_interaction(config) == interaction(20).truncate(10)
        np.testing.assert_array_equal(rg_reduce(config).to_dense(),
                                      np.diag(np.arange(11.0)))

    def test_composition(self) -> None:
        reduced = rg_reduce(RGConfig(1.0, 40, 10))
        assert reduced.dim == 11
        assert reduced == BandMatrix.from_split(
            np.arange(11.0), 1.0, reduce_interaction(RGConfig(1.0, 40, 10)))

    def test_exact_mode_keeps_eigenvalue(self) -> None:
        matrix = hamiltonian(OscillatorParams(1.0), 12)
        eigenvalue = np.linalg.eigvalsh(matrix.to_dense())[0]
        reduced = rg_reduce(RGConfig(1.0, 12, 4, EliminationMode.EXACT, eigenvalue))
        assert reduced.dim == 5
        assert distance_to_spectrum(reduced.to_dense(), eigenvalue) < 1e-8

    def test_exact_mode_at_zero_equals_approximate(self) -> None:
        exact = rg_reduce(RGConfig(1.0, 30, 10, EliminationMode.EXACT, 0.0))
        approx = rg_reduce(RGConfig(1.0, 30, 10))
        np.testing.assert_allclose(exact.to_dense(), approx.to_dense(), rtol=1e-12,
                                   atol=1e-10)

    def test_pivot_error_carries_step(self) -> None:
        model = GeneratorHamiltonian(
            "attractive", BandGenerator([lambda rows: 1.0, lambda rows: 0.1]),
            lambda rows: rows - 5.0)
        with pytest.raises(SingularPivotError) as exc_info:
            reduce_interaction(RGConfig(1.0, 10, 2), model)
        assert exc_info.value.index == 4
        assert exc_info.value.step == 6
        assert exc_info.value.pivot < 0

    def test_exact_mode_pivot_error_carries_step(self) -> None:
        with pytest.raises(SingularPivotError) as exc_info:
            rg_reduce(RGConfig(0.0, 8, 2, "exact", 6.0))
        assert exc_info.value.index == 6
        assert exc_info.value.step == 2

    def test_generic_model(self) -> None:
        model = GeneratorHamiltonian(
            "tridiagonal", BandGenerator([lambda rows: rows ** 2, lambda rows: rows]))
        reduced = rg_reduce(RGConfig(0.5, 15, 5), model)
        assert reduced.half_bandwidth == 1
        assert reduced.dim == 6

    def test_approximation_improves_with_free_scale(self) -> None:
        generator = default_oscillator().interaction_generator
        gaps = []
        for scale in (1.0, 10.0, 100.0, 1000.0):
            model = GeneratorHamiltonian(
                "scaled", generator, lambda rows, scale=scale: scale * rows)
            eigenvalue = np.linalg.eigvalsh(model.hamiltonian(1.0, 12).to_dense())[0]
            reduced = rg_reduce(RGConfig(1.0, 12, 2), model)
            gaps.append(abs(np.linalg.eigvalsh(reduced.to_dense())[0] - eigenvalue))
            exact = rg_reduce(RGConfig(1.0, 12, 2, "exact", eigenvalue), model)
            assert distance_to_spectrum(exact.to_dense(), eigenvalue) < 1e-8
        assert all(a > b for a, b in zip(gaps, gaps[1:])), gaps
        assert gaps[-1] < 1e-4
