import random

import pytest

from hierasure import ParameterError, linalg
from towers import tower


def M(ext, rows):
    return [[ext.from_index(v) for v in row] for row in rows]


class TestRank:
    def test_identity(self):
        ext = tower(5, 1, 1)
        assert linalg.rank(linalg.identity(4, ext), ext) == 4

    def test_dependent_rows(self):
        ext = tower(5, 1, 1)
        m = M(ext, [[1, 0, 3], [0, 1, 1], [1, 1, 4]])  # row3 = row1 + row2
        assert linalg.rank(m, ext) == 2

    def test_empty(self):
        ext = tower(2, 1, 2)
        assert linalg.rank([], ext) == 0


class TestKernel:
    def test_kernel_vectors_annihilate(self):
        ext = tower(3, 1, 2)
        rng = random.Random(0)
        for _ in range(10):
            rows = [[ext.from_index(rng.randrange(ext.order)) for _ in range(4)] for _ in range(2)]
            kernel = linalg.right_kernel(rows, 4, ext)
            assert len(kernel) == 4 - linalg.rank(rows, ext)
            for v in kernel:
                assert all(not x for x in linalg.mat_vec(rows, v, ext))

    def test_zero_rows_kernel_is_everything(self):
        ext = tower(2, 1, 1)
        kernel = linalg.right_kernel([], 3, ext)
        assert len(kernel) == 3


class TestSolve:
    def test_unique(self):
        ext = tower(7, 1, 1)
        rows = M(ext, [[1, 2], [3, 4]])
        x = [ext.from_index(5), ext.from_index(6)]
        rhs = linalg.mat_vec(rows, x, ext)
        out = linalg.solve(rows, rhs, 2, ext)
        assert out.status == "unique"
        assert out.solution == x

    def test_inconsistent(self):
        ext = tower(5, 1, 1)
        rows = M(ext, [[1, 1], [2, 2]])
        rhs = [ext.from_index(1), ext.from_index(3)]
        assert linalg.solve(rows, rhs, 2, ext).status == "inconsistent"

    def test_ambiguous_counts_freedom(self):
        ext = tower(5, 1, 1)
        rows = M(ext, [[1, 1]])
        rhs = [ext.from_index(2)]
        out = linalg.solve(rows, rhs, 2, ext)
        assert out.status == "ambiguous"
        assert out.free_count == 1

    def test_zero_columns(self):
        ext = tower(5, 1, 1)
        rows = [[], []]
        ok = linalg.solve(rows, [ext.zero(), ext.zero()], 0, ext)
        assert ok.status == "unique" and ok.solution == []
        bad = linalg.solve(rows, [ext.one(), ext.zero()], 0, ext)
        assert bad.status == "inconsistent"


class TestInvert:
    def test_round_trip(self):
        ext = tower(2, 2, 1)
        rng = random.Random(3)
        for _ in range(10):
            rows = [
                [ext.from_index(rng.randrange(ext.order)) for _ in range(3)]
                for _ in range(3)
            ]
            if linalg.rank(rows, ext) < 3:
                continue
            inv = linalg.invert(rows, ext)
            prod = linalg.mat_mul(rows, inv, ext)
            assert prod == linalg.identity(3, ext)

    def test_singular(self):
        ext = tower(2, 1, 1)
        with pytest.raises(ParameterError):
            linalg.invert(M(ext, [[1, 1], [1, 1]]), ext)
