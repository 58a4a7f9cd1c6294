import numpy as np
import pytest
from numpy.testing import assert_allclose

from affmin.errors import NotPSDError, ValidationError
from affmin.linalg import (
    PAULI,
    hermitian_eig,
    kron,
    operator_basis,
    partial_trace,
    psd_power,
)
from affmin.states import bell_diagonal, pure_from_schmidt, random_density_matrix, werner

sx, sy, sz = PAULI


def _partial_trace_loop(rho, da, db, keep):
    # Independent oracle: explicit index sums.
    if keep == 0:
        out = np.zeros((da, da), dtype=complex)
        for a in range(da):
            for b in range(da):
                out[a, b] = sum(rho[a * db + j, b * db + j] for j in range(db))
    else:
        out = np.zeros((db, db), dtype=complex)
        for a in range(db):
            for b in range(db):
                out[a, b] = sum(rho[i * db + a, i * db + b] for i in range(da))
    return out


class TestHermitianEig:
    def test_diagonal(self):
        assert_allclose(hermitian_eig(np.diag([3.0, 1.0, 2.0])).eigenvalues, [1, 2, 3])

    def test_pauli_x(self):
        assert_allclose(hermitian_eig(sx).eigenvalues, [-1, 1], atol=1e-15)

    def test_bell_diagonal_spectrum(self):
        w = hermitian_eig(bell_diagonal([0.5, 0.5, -0.5]).matrix).eigenvalues
        assert_allclose(w, [0.125, 0.125, 0.125, 0.625], atol=1e-14)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValidationError, match="not Hermitian"):
            hermitian_eig(np.array([[0, 1], [0, 0]]))

    def test_reconstruction_random(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            d = int(rng.integers(1, 17))
            a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            m = a + a.conj().T
            es = hermitian_eig(m)
            assert np.linalg.norm(es.reconstruct() - m) <= 1e-10 * max(1.0, np.linalg.norm(m))
            assert_allclose(es.eigenvectors.conj().T @ es.eigenvectors, np.eye(d), atol=1e-12)
            assert np.all(np.diff(es.eigenvalues) >= 0)
            assert_allclose(m @ es.eigenvectors, es.eigenvectors * es.eigenvalues, atol=1e-10 * max(1, np.abs(m).max()))


class TestPsdPower:
    def test_maximally_mixed_sqrt(self):
        assert_allclose(psd_power(np.eye(2) / 2, 0.5), np.eye(2) / np.sqrt(2), atol=1e-15)

    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9, 1.0])
    def test_projector_is_fixed(self, alpha):
        p = np.diag([1.0, 0.0])
        assert_allclose(psd_power(p, alpha), p, atol=1e-15)

    def test_scalar_roots(self):
        assert_allclose(psd_power(np.diag([0.25, 0.75]), 0.5), np.diag([0.5, np.sqrt(0.75)]), atol=1e-15)

    def test_alpha_one_returns_input(self):
        m = random_density_matrix(3, seed=3)
        assert_allclose(psd_power(m, 1.0), m)

    def test_square_of_root(self):
        for seed in range(20):
            m = random_density_matrix(5, rank=3, seed=seed)
            r = psd_power(m, 0.5)
            assert_allclose(r @ r, m, atol=1e-9)

    def test_clamps_tiny_negative(self):
        m = np.diag([1.0, -5e-11])
        assert_allclose(psd_power(m, 0.5), np.diag([1.0, 0.0]))

    def test_not_psd(self):
        with pytest.raises(NotPSDError, match="-1.000e-03"):
            psd_power(np.diag([1.0, -1e-3]), 0.5)


class TestKron:
    def test_identities(self):
        assert_allclose(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_zz(self):
        assert_allclose(kron(sz, sz), np.diag([1, -1, -1, 1]))

    def test_projector_with_mixed(self):
        assert_allclose(kron(np.diag([1, 0]), np.eye(2) / 2), np.diag([0.5, 0.5, 0, 0]))

    def test_trace_factorizes(self):
        a, b = random_density_matrix(3, seed=1), random_density_matrix(2, seed=2) * 3
        assert np.isclose(np.trace(kron(a, b)), np.trace(a) * np.trace(b))


class TestPartialTrace:
    def test_bell_marginal(self):
        phi = pure_from_schmidt([0.5, 0.5], 2, 2).matrix
        assert_allclose(partial_trace(phi, (2, 2), 0), np.eye(2) / 2, atol=1e-15)

    def test_product(self):
        a, b = random_density_matrix(2, seed=4), random_density_matrix(3, seed=5)
        assert_allclose(partial_trace(np.kron(a, b), (2, 3), 0), a, atol=1e-12)
        assert_allclose(partial_trace(np.kron(a, b), (2, 3), 1), b, atol=1e-12)

    def test_unnormalized_factorization(self):
        a = np.arange(9).reshape(3, 3).astype(complex)
        b = np.array([[2.0, 1j], [-1j, 5.0]])
        assert_allclose(partial_trace(np.kron(a, b), (3, 2), 0), 7.0 * a, atol=1e-12)

    def test_werner_marginal(self):
        assert_allclose(partial_trace(werner(2, 0.3).matrix, (2, 2), 0), np.eye(2) / 2, atol=1e-14)

    @pytest.mark.parametrize("dims", [(2, 3), (3, 2), (3, 4)])
    def test_against_loop(self, dims):
        rho = random_density_matrix(dims[0] * dims[1], seed=9)
        for keep in (0, 1):
            assert_allclose(partial_trace(rho, dims, keep), _partial_trace_loop(rho, *dims, keep), atol=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            partial_trace(np.eye(4), (2, 3), 0)


class TestOperatorBasis:
    def test_pauli(self):
        basis = operator_basis(2)
        expected = [np.eye(2), sx, sy, sz]
        for x, e in zip(basis, expected):
            assert_allclose(x, e / np.sqrt(2), atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_gram_identity(self, d):
        basis = operator_basis(d)
        assert len(basis) == d * d
        gram = np.array([[np.trace(x.conj().T @ y) for y in basis] for x in basis])
        assert_allclose(gram, np.eye(d * d), atol=1e-12)
        for x in basis:
            assert_allclose(x, x.conj().T)

    def test_first_element(self):
        x0 = operator_basis(6)[0]
        assert_allclose(x0, np.eye(6) / np.sqrt(6))
        assert np.isclose(np.trace(x0 @ x0), 1.0)

    def test_rejects_trivial(self):
        with pytest.raises(ValidationError):
            operator_basis(1)
