"""Dense complex linear algebra used throughout the package.

All routines take and return plain ``numpy`` arrays. Spectra are always
reported in ascending order.
"""
from __future__ import annotations

from functools import reduce
from typing import NamedTuple

import numpy as np

from .errors import NotPSDError, ValidationError

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class EigenSystem(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def max_asymmetry(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitian_eig(m: np.ndarray, tol: float = HERMITIAN_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises
    ------
    ValidationError
        If ``m`` is not square or deviates from Hermitian by more than ``tol``.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    asym = max_asymmetry(m)
    if asym > tol:
        raise ValidationError(f"matrix is not Hermitian: max |M - M^dag| = {asym:.3e}")
    w, v = np.linalg.eigh(0.5 * (m + m.conj().T))
    return EigenSystem(w, v)


def psd_power(m: np.ndarray, alpha: float, tol: float = PSD_TOL) -> np.ndarray:
    """Fractional power of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` and round-off-sized positive ones are set
    to zero before exponentiation.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValidationError(f"alpha must lie in (0, 1], got {alpha}")
    w, v = hermitian_eig(m)
    if w.size and w[0] < -tol:
        raise NotPSDError(f"matrix is not PSD: eigenvalue {w[0]:.3e}")
    if alpha == 1.0:
        return np.array(m, dtype=complex)
    # Eigenvalues at round-off level would be amplified by the fractional power.
    floor = w.size * np.finfo(float).eps * max(abs(w[-1]), abs(w[0]))
    w = np.where(w > floor, w, 0.0) ** alpha
    out = (v * w) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def sqrtm_psd(m: np.ndarray) -> np.ndarray:
    return psd_power(m, 0.5)


def kron(*ops: np.ndarray) -> np.ndarray:
    return reduce(np.kron, ops)


def partial_trace(rho: np.ndarray, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Reduced matrix of a bipartite operator.

    ``keep`` is 0 for the first factor and 1 for the second.
    """
    da, db = dims
    rho = np.asarray(rho)
    if rho.shape != (da * db, da * db):
        raise ValidationError(f"shape {rho.shape} does not match dims {dims}")
    r = rho.reshape(da, db, da, db)
    if keep == 0:
        return np.einsum("ajbj->ab", r)
    if keep == 1:
        return np.einsum("iaib->ab", r)
    raise ValidationError(f"keep must be 0 or 1, got {keep}")


def operator_basis(d: int) -> list[np.ndarray]:
    """Hermitian orthonormal operator basis of a ``d``-level system.

    Element 0 is the scaled identity; the rest are generalized Gell-Mann
    matrices divided by sqrt(2), ordered as (symmetric, antisymmetric) pairs
    for each ``j < k`` followed by the diagonal ones. For ``d = 2`` this is
    the normalized Pauli basis in x, y, z order.
    """
    if d < 2:
        raise ValidationError(f"dimension must be >= 2, got {d}")
    basis = [np.eye(d, dtype=complex) / np.sqrt(d)]
    s = 1.0 / np.sqrt(2.0)
    for j in range(d):
        for k in range(j + 1, d):
            sym = np.zeros((d, d), dtype=complex)
            sym[j, k] = sym[k, j] = s
            asym = np.zeros((d, d), dtype=complex)
            asym[j, k] = -1j * s
            asym[k, j] = 1j * s
            basis += [sym, asym]
    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1.0
        diag[l] = -l
        basis.append(np.diag(diag / np.sqrt(l * (l + 1))).astype(complex))
    return basis


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    return complex(np.vdot(a, b))
