import numpy as np
import pytest
from numpy.testing import assert_allclose

from logmaj import (
    DimMismatch,
    LengthMismatch,
    SingularMatrix,
    UnsupportedShape,
    adjoint,
    det,
    eig_hermitian,
    eigenvalue_moduli,
    eigenvalues_of_product,
    hadamard,
    hermitian_part,
    matrix_from_json,
    matrix_power,
    matrix_to_json,
    singular_values,
    word_eigenvalues,
)
from logmaj.linalg import matmul, signed_det_parts

from conftest import rand_hermitian, rand_pd, rand_psd, rand_square, rand_unitary


def herm2x2_oracle(a, b, c):
    """Eigenvalues of [[a, b], [conj(b), c]] by the quadratic formula."""
    mean = (a + c) / 2.0
    disc = np.sqrt(((a - c) / 2.0) ** 2 + abs(b) ** 2)
    return mean + disc, mean - disc


def sqrt2x2_oracle(m):
    """PSD square root of a 2x2 PSD matrix: (M + sqrt(det) I)/sqrt(tr + 2 sqrt(det))."""
    d = np.sqrt(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real
    return (m + d * np.eye(2)) / np.sqrt(np.trace(m).real + 2 * d)


class TestEigHermitian:
    def test_diagonal(self):
        dec = eig_hermitian(np.diag([3.0, 1.0, 2.0]))
        assert_allclose(dec.eigenvalues, [3.0, 2.0, 1.0], atol=1e-14)

    def test_2x2_real(self):
        dec = eig_hermitian(np.array([[2.0, 1.0], [1.0, 2.0]]))
        assert_allclose(dec.eigenvalues, [3.0, 1.0], atol=1e-14)

    def test_2x2_complex_quadratic_oracle(self):
        m = np.array([[2.0, 1j], [-1j, 2.0]])
        hi, lo = herm2x2_oracle(2.0, 1j, 2.0)
        dec = eig_hermitian(m)
        assert_allclose(dec.eigenvalues, [hi, lo], atol=1e-14)
        assert_allclose(dec.eigenvalues, [3.0, 1.0], atol=1e-14)

    def test_reconstruction_and_trace(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 9))
            a = rand_hermitian(n, rng, cond=10 ** rng.uniform(0, 3))
            w, v = eig_hermitian(a)
            assert np.all(np.diff(w) <= 0)
            assert np.linalg.norm(a - (v * w) @ v.conj().T) <= 1e-12 * n * np.linalg.norm(a)
            assert abs(w.sum() - np.trace(a).real) <= 1e-12 * max(abs(np.trace(a).real), 1.0)
            assert np.abs(v.conj().T @ v - np.eye(n)).max() <= 1e-12 * n

    def test_against_lapack(self, rng):
        for _ in range(100):
            n = int(rng.integers(2, 7))
            a = rand_hermitian(n, rng)
            w = eig_hermitian(a).eigenvalues
            ref = np.sort(np.linalg.eigvalsh(a))[::-1]
            assert_allclose(w, ref, atol=1e-12 * max(1.0, np.abs(ref).max()))

    def test_rejects_nonsquare(self):
        with pytest.raises(DimMismatch):
            eig_hermitian(np.ones((2, 3)))

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            eig_hermitian(np.array([[np.nan, 0.0], [0.0, 1.0]]))


class TestMatrixPower:
    def test_diagonal_sqrt(self):
        assert_allclose(matrix_power(np.diag([4.0, 9.0]), 0.5), np.diag([2.0, 3.0]), atol=1e-14)

    def test_power_zero_is_identity(self, rng):
        a = rand_pd(4, rng)
        assert_allclose(matrix_power(a, 0.0), np.eye(4), atol=1e-13)

    def test_2x2_sqrt_closed_form(self):
        m = np.array([[2.0, 1.0], [1.0, 2.0]])
        expected = 0.5 * np.array(
            [[np.sqrt(3) + 1, np.sqrt(3) - 1], [np.sqrt(3) - 1, np.sqrt(3) + 1]]
        )
        assert_allclose(matrix_power(m, 0.5), expected, atol=1e-14)
        assert_allclose(matrix_power(m, 0.5), sqrt2x2_oracle(m), atol=1e-14)

    def test_sqrt_oracle_random_2x2(self, rng):
        for _ in range(100):
            a = rand_pd(2, rng, cond=10 ** rng.uniform(0, 3))
            assert_allclose(matrix_power(a, 0.5), sqrt2x2_oracle(a), atol=1e-10 * np.linalg.norm(a))

    def test_multiplicative_exponents(self, rng):
        for _ in range(50):
            a = rand_pd(3, rng, cond=10.0)
            s, t = rng.uniform(-2, 2, 2)
            lhs = matrix_power(matrix_power(a, s), t)
            rhs = matrix_power(a, s * t)
            assert np.linalg.norm(lhs - rhs) <= 1e-10 * max(np.linalg.norm(rhs), 1e-300)

    def test_negative_power_of_singular_raises(self, rng):
        a = rand_psd(3, 2, rng)
        with pytest.raises(SingularMatrix):
            matrix_power(a, -0.5)

    def test_fractional_power_of_singular_ok(self, rng):
        a = rand_psd(3, 2, rng)
        s = matrix_power(a, 0.5)
        assert_allclose(s @ s, a, atol=1e-12 * np.linalg.norm(a))

    def test_indefinite_rejected(self):
        with pytest.raises(ValueError):
            matrix_power(np.diag([1.0, -1.0]), 0.5)


class TestSingularValues:
    def test_diagonal_abs(self):
        assert_allclose(singular_values(np.diag([-3.0, 2.0])), [3.0, 2.0], atol=1e-14)

    def test_unitary(self, rng):
        u = rand_unitary(4, rng)
        assert_allclose(singular_values(u), np.ones(4), atol=1e-13)

    def test_nilpotent(self):
        assert_allclose(singular_values(np.array([[0.0, 2.0], [0.0, 0.0]])), [2.0, 0.0], atol=1e-14)

    def test_matches_gram_eigenvalues(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 7))
            x = rand_square(n, rng)
            s = singular_values(x)
            g1 = np.sqrt(np.maximum(eig_hermitian(x.conj().T @ x).eigenvalues, 0.0))
            g2 = np.sqrt(np.maximum(eig_hermitian(x @ x.conj().T).eigenvalues, 0.0))
            top = max(s[0], 1e-300)
            assert np.abs(s - g1).max() <= 1e-10 * top
            assert np.abs(s - g2).max() <= 1e-10 * top


class TestEigenvaluesOfProduct:
    def test_commuting_diagonals(self):
        got = eigenvalues_of_product(np.diag([1.0, 2.0]), np.diag([3.0, 4.0]))
        assert_allclose(got, [8.0, 3.0], atol=1e-14)

    def test_identity(self, rng):
        b = rand_pd(3, rng)
        assert_allclose(
            eigenvalues_of_product(np.eye(3), b), eig_hermitian(b).eigenvalues, atol=1e-12
        )

    def test_char_poly_oracle(self):
        # eigenvalues of [[2,1],[1,1]] @ diag(1,2) solve x^2 - 4x + 2 = 0
        a = np.array([[2.0, 1.0], [1.0, 1.0]])
        b = np.diag([1.0, 2.0])
        got = eigenvalues_of_product(a, b)
        assert_allclose(got, [2.0 + np.sqrt(2.0), 2.0 - np.sqrt(2.0)], atol=1e-13)

    def test_symmetry(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 6))
            a, b = rand_pd(n, rng), rand_pd(n, rng)
            x = eigenvalues_of_product(a, b)
            y = eigenvalues_of_product(b, a)
            assert np.abs(x - y).max() <= 1e-10 * max(x[0], 1e-300)

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            eigenvalues_of_product(np.eye(2), np.eye(3))


class TestWordEigenvalues:
    def test_two_psd_factors(self, rng):
        a, b = rand_pd(3, rng), rand_pd(3, rng)
        got = word_eigenvalues([(a, "psd"), (b, "psd")])
        assert_allclose(got, eigenvalues_of_product(a, b), atol=1e-11 * got[0])

    def test_psd_hermitian_signed(self, rng):
        p = rand_pd(3, rng)
        h = rand_hermitian(3, rng)
        got = word_eigenvalues([(p, "psd"), (h, "hermitian")])
        ref = np.linalg.eigvals(p @ h)
        assert np.abs(ref.imag).max() <= 1e-10 * np.abs(ref).max()
        assert_allclose(
            np.sort(got), np.sort(ref.real), atol=1e-10 * np.abs(ref).max()
        )
        assert np.all(np.diff(np.abs(got)) <= 1e-12 * np.abs(got).max())

    def test_four_factor_palindrome(self, rng):
        a = rand_pd(3, rng)
        h = rand_hermitian(3, rng)
        ap = matrix_power(a, 1.3)
        aq = matrix_power(a, -0.7)
        got = word_eigenvalues([(ap, "psd"), (h, "hermitian"), (aq, "psd"), (h, "hermitian")])
        ref = np.sort(np.abs(np.linalg.eigvals(ap @ h @ aq @ h)))[::-1]
        assert_allclose(np.abs(got), ref, atol=1e-9 * ref.max())
        assert np.all(got >= -1e-12 * ref.max())  # G*G structure: nonnegative

    def test_commuting_diagonal_word(self):
        a, b = np.diag([2.0, 3.0]), np.diag([5.0, 1.0])
        got = word_eigenvalues([(a, "psd"), (b, "psd")])
        assert_allclose(got, [10.0, 3.0], atol=1e-13)

    def test_unsupported_shape(self, rng):
        a, b, c = rand_pd(2, rng), rand_pd(2, rng), rand_pd(2, rng)
        with pytest.raises(UnsupportedShape):
            word_eigenvalues([(a, "psd"), (b, "psd"), (c, "psd")])

    def test_no_psd_pivot(self, rng):
        h = rand_hermitian(2, rng)
        with pytest.raises(UnsupportedShape):
            word_eigenvalues([(h, "hermitian")])


class TestEigenvalueModuli:
    def test_matches_general_solver(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 6))
            x = rand_square(n, rng)
            got = eigenvalue_moduli(x)
            ref = np.sort(np.abs(np.linalg.eigvals(x)))[::-1]
            assert_allclose(got, ref, atol=1e-11 * max(ref.max(), 1e-300))


class TestSmallOps:
    def test_hadamard(self):
        assert_allclose(hadamard([2.0, 1.0], [3.0, 1.0]), [6.0, 1.0], atol=0)

    def test_hadamard_resorts(self):
        assert_allclose(hadamard([4.0, 1.0], [0.5, 8.0]), [8.0, 2.0], atol=0)

    def test_hadamard_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            hadamard([1.0], [1.0, 2.0])

    def test_det_diag(self):
        assert det(np.diag([2.0, 3.0])) == pytest.approx(6.0, abs=1e-13)

    def test_det_general_lu(self, rng):
        x = rand_square(4, rng)
        assert det(x) == pytest.approx(complex(np.linalg.det(x)), abs=1e-10 * abs(np.linalg.det(x)))

    def test_signed_det_parts(self):
        mant, expo = signed_det_parts(np.diag([2.0, -3.0]))
        assert mant * 2.0**expo == pytest.approx(-6.0, rel=1e-13)
        assert 1.0 <= abs(mant) < 2.0

    def test_adjoint(self):
        x = np.array([[0.0, 1j], [0.0, 0.0]])
        assert_allclose(adjoint(x), np.array([[0.0, 0.0], [-1j, 0.0]]), atol=0)

    def test_matmul_checks_dims(self):
        with pytest.raises(DimMismatch):
            matmul(np.eye(2), np.eye(3))

    def test_hermitian_part(self, rng):
        x = rand_square(3, rng)
        h = hermitian_part(x)
        assert np.linalg.norm(h - h.conj().T) <= 1e-15 * np.linalg.norm(h)


class TestMatrixJson:
    def test_roundtrip(self, rng):
        x = rand_square(3, rng)
        assert np.array_equal(matrix_from_json(matrix_to_json(x)), x)

    def test_bare_reals_accepted(self):
        m = matrix_from_json({"n": 2, "entries": [[1.0, 2.0], [[0.0, 1.0], 4]]})
        assert_allclose(m, np.array([[1.0, 2.0], [1j, 4.0]]), atol=0)

    def test_bad_shape(self):
        with pytest.raises(DimMismatch):
            matrix_from_json({"n": 2, "entries": [[1.0, 2.0]]})
