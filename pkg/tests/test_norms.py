import math

import numpy as np
import pytest

from logmaj import BadK, DimMismatch, InvalidP, fan_dominates, ky_fan, schatten

from conftest import rand_pd, rand_square, rand_unitary


class TestSchatten:
    def test_identity(self):
        for n in (2, 4):
            for p in (1.0, 2.0, 3.0):
                assert schatten(np.eye(n), p) == pytest.approx(n ** (1.0 / p), rel=1e-13)

    def test_diag_p2(self):
        assert schatten(np.diag([3.0, 4.0]), 2.0) == pytest.approx(5.0, rel=1e-13)

    def test_diag_inf(self):
        assert schatten(np.diag([3.0, 4.0]), math.inf) == pytest.approx(4.0, rel=1e-13)

    def test_invalid_p(self):
        with pytest.raises(InvalidP):
            schatten(np.eye(2), 0.5)
        with pytest.raises(InvalidP):
            schatten(np.eye(2), float("nan"))

    def test_unitary_invariance(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 6))
            x = rand_square(n, rng)
            u, v = rand_unitary(n, rng), rand_unitary(n, rng)
            for p in (1.0, 1.5, 2.0, 3.0, math.inf):
                a, b = schatten(u @ x @ v, p), schatten(x, p)
                assert a == pytest.approx(b, rel=1e-10)

    def test_monotone_in_p(self, rng):
        for _ in range(30):
            x = rand_square(int(rng.integers(2, 6)), rng)
            ps = [1.0, 1.3, 2.0, 2.7, 4.0, 10.0, math.inf]
            vals = [schatten(x, p) for p in ps]
            assert all(vals[i] >= vals[i + 1] - 1e-12 * vals[0] for i in range(len(vals) - 1))

    def test_triangle_inequality(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 6))
            x, y = rand_square(n, rng), rand_square(n, rng)
            for p in (1.0, 2.0, math.inf):
                s = schatten(x + y, p)
                assert s <= schatten(x, p) + schatten(y, p) + 1e-10 * s


class TestKyFan:
    def test_examples(self):
        assert ky_fan(np.diag([3.0, 1.0]), 1) == pytest.approx(3.0, rel=1e-13)
        assert ky_fan(np.diag([3.0, 1.0]), 2) == pytest.approx(4.0, rel=1e-13)

    def test_unitary(self, rng):
        u = rand_unitary(5, rng)
        for k in range(1, 6):
            assert ky_fan(u, k) == pytest.approx(float(k), rel=1e-12)

    def test_bad_k(self):
        with pytest.raises(BadK):
            ky_fan(np.eye(2), 0)
        with pytest.raises(BadK):
            ky_fan(np.eye(2), 3)


class TestFanDominance:
    def test_self(self, rng):
        x = rand_square(3, rng)
        ok, gaps = fan_dominates(x, x)
        assert ok
        assert np.abs(gaps).max() == 0.0

    def test_spread_example(self):
        ok, gaps = fan_dominates(np.diag([1.0, 1.0]), np.diag([2.0, 0.0]))
        assert ok
        assert gaps[0] == pytest.approx(1.0)
        assert gaps[1] == pytest.approx(0.0)

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            fan_dominates(np.eye(2), np.eye(3))

    def test_implies_schatten_domination(self, rng):
        tol = 1e-9
        for _ in range(50):
            n = int(rng.integers(2, 6))
            x, y = rand_square(n, rng), rand_pd(n, rng) + rand_pd(n, rng)
            ok, _ = fan_dominates(x, y, tol)
            if ok:
                for p in (1.0, 1.5, 2.0, 3.0, math.inf):
                    assert schatten(x, p) <= schatten(y, p) + n * tol
