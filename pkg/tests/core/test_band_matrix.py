from __future__ import annotations

import numpy as np
import pytest
from bandrg.core.band_matrix import BandGenerator, BandMatrix, build
from bandrg.core.exceptions import ConstructionError
from sympy import Integer, Symbol, sqrt

k = Symbol("k")


class TestBandGenerator:
    def test_half_bandwidth(self) -> None:
        assert BandGenerator([np.ones_like]).half_bandwidth == 0
        assert BandGenerator([np.ones_like, np.sqrt, np.cos]).half_bandwidth == 2

    def test_empty(self) -> None:
        with pytest.raises(ValueError):
            BandGenerator([])

    def test_not_callable(self) -> None:
        with pytest.raises(TypeError):
            BandGenerator([np.ones_like, 3.0])

    def test_scalar_broadcast(self) -> None:
        generator = BandGenerator([lambda rows: 2.0])
        np.testing.assert_array_equal(generator.evaluate(0, np.arange(3)), [2, 2, 2])

    def test_from_expressions(self) -> None:
        generator = BandGenerator.from_expressions([k ** 2, Integer(0), sqrt(k)], k)
        rows = np.arange(2.0, 5.0)
        np.testing.assert_allclose(generator.evaluate(0, rows), rows ** 2)
        np.testing.assert_array_equal(generator.evaluate(1, rows), [0, 0, 0])
        np.testing.assert_allclose(generator.evaluate(2, rows), np.sqrt(rows))

    def test_from_expressions_unsubstituted(self) -> None:
        with pytest.raises(ValueError):
            BandGenerator.from_expressions([k * Symbol("g")], k)


class TestBandMatrix:
    @pytest.fixture(autouse=True)
    def _setup(self) -> None:
        self.dense = np.array([
            [1.0, 2.0, 3.0, 0.0],
            [2.0, 4.0, 5.0, 6.0],
            [3.0, 5.0, 7.0, 8.0],
            [0.0, 6.0, 8.0, 9.0],
        ])
        self.matrix = BandMatrix.from_dense(self.dense, 2)

    def test_properties(self) -> None:
        assert self.matrix.dim == 4
        assert self.matrix.cutoff == 3
        assert self.matrix.half_bandwidth == 2
        np.testing.assert_array_equal(self.matrix.diagonal(1), [2, 5, 8])

    def test_to_dense(self) -> None:
        np.testing.assert_array_equal(self.matrix.to_dense(), self.dense)

    @pytest.mark.parametrize("index, expected", [
        ((0, 0), 1.0), ((2, 0), 3.0), ((0, 2), 3.0), ((3, 1), 6.0), ((3, 0), 0.0),
        ((0, 3), 0.0)])
    def test_get(self, index, expected) -> None:
        assert self.matrix.get(*index) == expected
        assert self.matrix[index] == expected

    @pytest.mark.parametrize("index", [(4, 0), (0, -1)])
    def test_get_out_of_range(self, index) -> None:
        with pytest.raises(IndexError):
            self.matrix.get(*index)

    def test_diagonal_out_of_band(self) -> None:
        with pytest.raises(IndexError):
            self.matrix.diagonal(3)

    def test_symmetric(self) -> None:
        for i in range(4):
            for j in range(4):
                assert self.matrix.get(i, j) == self.matrix.get(j, i)

    def test_read_only(self) -> None:
        with pytest.raises(ValueError):
            self.matrix.diagonals[0][0] = 3.0

    @pytest.mark.parametrize("diagonals", [
        [[1.0, 2.0], [1.0, 2.0]],
        [[1.0, 2.0, 3.0], [1.0]],
        [],
    ])
    def test_invalid_lengths(self, diagonals) -> None:
        with pytest.raises(ValueError):
            BandMatrix(diagonals)

    def test_non_finite(self) -> None:
        with pytest.raises(ConstructionError) as exc_info:
            BandMatrix([[1.0, 2.0, 3.0], [1.0, np.nan]])
        assert exc_info.value.offset == 1
        assert exc_info.value.row == 2

    def test_from_dense_ignores_upper_triangle(self) -> None:
        dense = self.dense.copy()
        dense[0, 1] = 100.0
        assert BandMatrix.from_dense(dense, 2) == self.matrix

    @pytest.mark.parametrize("args", [(np.ones((2, 3)), 1), (np.ones((3, 3)), -1)])
    def test_from_dense_invalid(self, args) -> None:
        with pytest.raises(ValueError):
            BandMatrix.from_dense(*args)

    def test_truncate(self) -> None:
        truncated = self.matrix.truncate(1)
        assert truncated.dim == 2
        assert truncated.half_bandwidth == 2
        np.testing.assert_array_equal(truncated.to_dense(), self.dense[:2, :2])

    @pytest.mark.parametrize("outer, inner", [(12, 12), (10, 4), (5, 5), (3, 0)])
    def test_truncate_composition(self, outer, inner) -> None:
        matrix = build(BandGenerator([lambda rows: rows ** 2, lambda rows: rows,
                                      lambda rows: 1.0]), 12)
        assert matrix.truncate(outer).truncate(inner) == matrix.truncate(inner)

    def test_truncate_to_single_state(self) -> None:
        truncated = self.matrix.truncate(0)
        np.testing.assert_array_equal(truncated.to_dense(), [[1.0]])
        assert truncated.diagonal(2).size == 0

    @pytest.mark.parametrize("cutoff", [-1, 4])
    def test_truncate_invalid(self, cutoff) -> None:
        with pytest.raises(ValueError):
            self.matrix.truncate(cutoff)

    def test_iter_entries(self) -> None:
        matrix = BandMatrix([[1.0, 2.0, 3.0], [4.0, 5.0]])
        assert list(matrix.iter_entries()) == [
            (0, 0, 1.0), (1, 0, 4.0), (1, 1, 2.0), (2, 1, 5.0), (2, 2, 3.0)]

    def test_to_csv(self, tmp_path) -> None:
        path = tmp_path / "matrix.csv"
        BandMatrix([[1.0, 0.5], [0.25]]).to_csv(path)
        assert path.read_text() == "k,l,value\n0,0,1\n1,0,0.25\n1,1,0.5\n"

    def test_from_split(self) -> None:
        interaction = BandMatrix([[1.0, 2.0, 3.0], [4.0, 5.0]])
        matrix = BandMatrix.from_split([0.0, 1.0, 2.0], 0.5, interaction)
        np.testing.assert_array_equal(matrix.diagonal(0), [0.5, 2.0, 3.5])
        np.testing.assert_array_equal(matrix.diagonal(1), [2.0, 2.5])

    def test_from_split_shape_mismatch(self) -> None:
        with pytest.raises(ValueError):
            BandMatrix.from_split([0.0, 1.0], 1.0, BandMatrix([[1.0, 2.0, 3.0]]))

    def test_equality(self) -> None:
        assert self.matrix == BandMatrix.from_dense(self.dense, 2)
        assert self.matrix != BandMatrix.from_dense(self.dense, 3)
        assert self.matrix != self.matrix.truncate(2)
        assert self.matrix.__eq__(self.dense) is NotImplemented

    def test_repr(self) -> None:
        assert repr(self.matrix) == "BandMatrix(dim=4, half_bandwidth=2)"


class TestBuild:
    def test_rows(self) -> None:
        generator = BandGenerator([lambda rows: rows, lambda rows: 10 * rows])
        matrix = build(generator, 3)
        np.testing.assert_array_equal(matrix.diagonal(0), [0, 1, 2, 3])
        np.testing.assert_array_equal(matrix.diagonal(1), [10, 20, 30])

    def test_zero_cutoff(self) -> None:
        generator = BandGenerator([lambda rows: rows + 1, np.sqrt, np.sqrt])
        matrix = build(generator, 0)
        assert matrix.dim == 1
        assert matrix.half_bandwidth == 2
        assert matrix.get(0, 0) == 1.0

    def test_negative_cutoff(self) -> None:
        with pytest.raises(ValueError):
            build(BandGenerator([np.ones_like]), -1)

    def test_non_finite(self) -> None:
        generator = BandGenerator([
            lambda rows: rows, lambda rows: np.where(rows == 2, np.nan, rows)])
        with pytest.raises(ConstructionError) as exc_info:
            build(generator, 4)
        assert exc_info.value.offset == 1
        assert exc_info.value.row == 2
        assert np.isnan(exc_info.value.value)
