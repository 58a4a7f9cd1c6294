"""Bipartite states analysed by the package and their constructors."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import unitary_group

from .errors import InvalidStateError, ValidationError
from .linalg import PAULI, hermitian_eig, kron, max_asymmetry, partial_trace

STATE_TOL = 1e-10

# Bell-diagonal eigenvalue labels (a, b), in the order used by spectra below.
BELL_LABELS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Density matrix on C^dim_a x C^dim_b."""

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        n = self.dim_a * self.dim_b
        if m.shape != (n, n):
            raise ValidationError(
                f"matrix shape {m.shape} does not match {self.dim_a}x{self.dim_b} split"
            )
        object.__setattr__(self, "matrix", m)

    @property
    def dims(self) -> tuple[int, int]:
        return (self.dim_a, self.dim_b)

    @property
    def marginal_a(self) -> np.ndarray:
        return partial_trace(self.matrix, self.dims, 0)

    @property
    def marginal_b(self) -> np.ndarray:
        return partial_trace(self.matrix, self.dims, 1)

    @property
    def purity(self) -> float:
        return purity(self.matrix)

    def spectrum(self) -> np.ndarray:
        return hermitian_eig(self.matrix).eigenvalues

    def validate(self, tol: float = STATE_TOL) -> "BipartiteState":
        """Raise :class:`InvalidStateError` naming the first violated invariant."""
        check_density_matrix(self.matrix, tol)
        return self

    def conjugated(self, u: np.ndarray) -> "BipartiteState":
        return BipartiteState(u @ self.matrix @ u.conj().T, self.dim_a, self.dim_b)


def check_density_matrix(m: np.ndarray, tol: float = STATE_TOL) -> None:
    asym = max_asymmetry(m)
    if asym > tol:
        raise InvalidStateError(f"not Hermitian: max |rho - rho^dag| = {asym:.3e}")
    tr = np.trace(m).real
    if abs(tr - 1.0) > tol:
        raise InvalidStateError(f"trace is {tr:.12g}, expected 1")
    lo = hermitian_eig(m, tol=tol).eigenvalues[0]
    if lo < -tol:
        raise InvalidStateError(f"not positive semidefinite: eigenvalue {lo:.3e}")


def purity(m: np.ndarray) -> float:
    return float(np.real(np.vdot(m, m)))


def projector(vec: np.ndarray) -> np.ndarray:
    vec = np.asarray(vec, dtype=complex)
    return np.outer(vec, vec.conj())


def pure_from_schmidt(s, dim_a: int, dim_b: int) -> BipartiteState:
    """Pure state ``sum_i sqrt(s_i)|i>|i>`` from squared Schmidt coefficients."""
    s = np.asarray(s, dtype=float)
    if s.size > min(dim_a, dim_b):
        raise ValidationError(
            f"{s.size} Schmidt coefficients do not fit a {dim_a}x{dim_b} system"
        )
    if np.any(s < 0) or abs(s.sum() - 1.0) > STATE_TOL:
        raise ValidationError(f"Schmidt coefficients must be non-negative and sum to 1, got {s}")
    psi = np.zeros(dim_a * dim_b, dtype=complex)
    for i, si in enumerate(s):
        psi[i * dim_b + i] = np.sqrt(si)
    return BipartiteState(projector(psi), dim_a, dim_b)


def schmidt_spectrum(state: BipartiteState, tol: float = 1e-8) -> np.ndarray:
    """Squared Schmidt coefficients of a pure state, descending, zeros trimmed."""
    w, v = hermitian_eig(state.matrix)
    if w[-1] < 1.0 - tol:
        rank = int(np.sum(w > tol))
        raise ValidationError(f"state is not pure (largest eigenvalue {w[-1]:.6g}, rank ~{rank})")
    coeffs = v[:, -1].reshape(state.dim_a, state.dim_b)
    sv = np.linalg.svd(coeffs, compute_uv=False) ** 2
    return sv[sv > 1e-14]


def bell_spectrum(c) -> np.ndarray:
    """Eigenvalues ``lambda_ab`` of the Bell-diagonal state, ordered as BELL_LABELS."""
    c1, c2, c3 = c
    return np.array(
        [
            0.25 * (1 + (-1) ** a * c1 - (-1) ** (a + b) * c2 + (-1) ** b * c3)
            for a, b in BELL_LABELS
        ]
    )


def correlation_from_spectrum(lam) -> np.ndarray:
    """Inverse of :func:`bell_spectrum`."""
    lam = np.asarray(lam, dtype=float)
    signs = np.array([[(-1) ** a, -((-1) ** (a + b)), (-1) ** b] for a, b in BELL_LABELS])
    return signs.T @ lam


def bell_diagonal(c, tol: float = 1e-12) -> BipartiteState:
    c = np.asarray(c, dtype=float)
    lam = bell_spectrum(c)
    if np.any(lam < -tol):
        bad = {f"{a}{b}": float(l) for (a, b), l in zip(BELL_LABELS, lam) if l < -tol}
        raise InvalidStateError(f"correlation vector {tuple(c)} outside tetrahedron: {bad}")
    rho = np.eye(4, dtype=complex)
    for ci, p in zip(c, PAULI):
        rho = rho + ci * np.kron(p, p)
    return BipartiteState(rho / 4, 2, 2)


def swap_operator(m: int) -> np.ndarray:
    f = np.zeros((m * m, m * m))
    for k in range(m):
        for l in range(m):
            f[k * m + l, l * m + k] = 1.0
    return f


def max_entangled(m: int) -> np.ndarray:
    return np.eye(m).reshape(-1).astype(complex) / np.sqrt(m)


def werner(m: int, x: float) -> BipartiteState:
    """U x U invariant state with swap expectation ``x``."""
    if m < 2:
        raise ValidationError(f"dimension must be >= 2, got {m}")
    if not -1.0 <= x <= 1.0:
        raise ValidationError(f"Werner parameter must lie in [-1, 1], got {x}")
    norm = m**3 - m
    rho = (m - x) / norm * np.eye(m * m) + (m * x - 1) / norm * swap_operator(m)
    return BipartiteState(rho.astype(complex), m, m).validate()


def isotropic(m: int, x: float) -> BipartiteState:
    """U x U* invariant state with maximally-entangled fidelity ``x``."""
    if m < 2:
        raise ValidationError(f"dimension must be >= 2, got {m}")
    if not 0.0 <= x <= 1.0:
        raise ValidationError(f"isotropic parameter must lie in [0, 1], got {x}")
    n = m * m - 1
    rho = (1 - x) / n * np.eye(m * m) + (m * m * x - 1) / n * projector(max_entangled(m))
    return BipartiteState(rho, m, m).validate()


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_state(dim_a: int, dim_b: int, rank: int | None = None, seed=0) -> BipartiteState:
    """Induced-Ginibre random state ``G G^dag / Tr`` with ``G`` of width ``rank``."""
    n = dim_a * dim_b
    rank = n if rank is None else rank
    if not 1 <= rank <= n:
        raise ValidationError(f"rank must lie in [1, {n}], got {rank}")
    rng = _rng(seed)
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return BipartiteState(rho / np.trace(rho).real, dim_a, dim_b)


def random_pure_state(dim_a: int, dim_b: int, seed=0) -> BipartiteState:
    return random_state(dim_a, dim_b, rank=1, seed=seed)


def random_density_matrix(d: int, rank: int | None = None, seed=0) -> np.ndarray:
    return random_state(d, 1, rank=rank, seed=seed).matrix


def random_unitary(d: int, seed=0) -> np.ndarray:
    return unitary_group.rvs(d, random_state=_rng(seed)) if d > 1 else np.eye(1, dtype=complex)


def random_tetrahedron_point(seed=0) -> np.ndarray:
    """Correlation vector of a Bell-diagonal state with Dirichlet(1,1,1,1) spectrum."""
    return correlation_from_spectrum(_rng(seed).dirichlet(np.ones(4)))


def product_state(rho_a: np.ndarray, rho_b: np.ndarray) -> BipartiteState:
    return BipartiteState(np.kron(rho_a, rho_b), rho_a.shape[0], rho_b.shape[0])


def add_ancilla(state: BipartiteState, sigma: np.ndarray) -> BipartiteState:
    """Attach an uncorrelated ancilla to the unmeasured party: A:B -> A:(BC)."""
    sigma = np.asarray(sigma, dtype=complex)
    return BipartiteState(kron(state.matrix, sigma), state.dim_a, state.dim_b * sigma.shape[0])


def local_unitary(state: BipartiteState, u: np.ndarray, v: np.ndarray) -> BipartiteState:
    return state.conjugated(np.kron(u, v))
