"""Correlation measures: affinity, affinity-based MIN, Hilbert-Schmidt MIN, concurrence.

The affinity-based MIN of a state is

    N_A(rho) = 1 - min_Pi Tr[sqrt(rho) Pi(sqrt(rho))]

with ``Pi`` ranging over local projective measurements on A that leave the
marginal of A unchanged. ``Tr[S Pi(S)]`` is evaluated by the kernel in
:mod:`affmin.kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ValidationError
from .linalg import PAULI, hermitian_eig, operator_basis, psd_power, sqrtm_psd
from .measurement import (
    ProjectiveMeasurement,
    SearchConfig,
    dephase_local,
    measurement_space,
    minimize_over_measurements,
)
from .states import BipartiteState, check_density_matrix, purity

PURE_TOL = 1e-8

PURE_FORMULA = "pure-formula"
CLOSED_2XN = "closed-2xn"
BRUTE_FORCE = "brute-force"


@dataclass
class MinResult:
    value: float
    method: str
    optimal_measurement: ProjectiveMeasurement
    iterations: int = 0
    converged: bool = True

    def __float__(self):
        return float(self.value)


def _matrix(x) -> np.ndarray:
    return x.matrix if isinstance(x, BipartiteState) else np.asarray(x, dtype=complex)


def affinity(rho, sigma, alpha: float = 0.5) -> float:
    """``Tr(rho^alpha sigma^(1-alpha))``, clipped to [0, 1]."""
    if not 0.0 < alpha < 1.0:
        raise ValidationError(f"alpha must lie in (0, 1), got {alpha}")
    a, b = _matrix(rho), _matrix(sigma)
    if a.shape != b.shape:
        raise ValidationError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if alpha == 0.5:
        pa, pb = sqrtm_psd(a), sqrtm_psd(b)
    else:
        pa, pb = psd_power(a, alpha), psd_power(b, 1.0 - alpha)
    val = float(np.real(np.vdot(pa.conj().T, pb)))
    return min(1.0, max(0.0, val))


def affinity_metric(rho, sigma, alpha: float = 0.5) -> float:
    return float(np.sqrt(max(0.0, 1.0 - affinity(rho, sigma, alpha))))


def apply_measurement(state: BipartiteState, meas: ProjectiveMeasurement) -> BipartiteState:
    """Post-measurement state for a non-selective measurement on A."""
    return BipartiteState(dephase_local(state.matrix, meas, state.dims), state.dim_a, state.dim_b)


def measured_overlap(s: np.ndarray, meas: ProjectiveMeasurement, dims) -> float:
    """``Tr[S Pi(S)]`` for an operator ``S`` on A x B."""
    return kernels.measured_overlap(np.ascontiguousarray(s), meas.basis, *dims)


def is_pure(state: BipartiteState, tol: float = PURE_TOL) -> bool:
    return hermitian_eig(state.matrix).eigenvalues[-1] >= 1.0 - tol


def min_affinity(state: BipartiteState, config: SearchConfig = SearchConfig()) -> MinResult:
    """Affinity-based measurement-induced nonlocality.

    With ``config.method == "auto"`` qubit-qudit states use the T-matrix
    route, other pure states ``1 - sum s_k^2``; everything else (or
    ``method="brute-force"``) runs the multi-start search.
    """
    state.validate()
    if config.method == "auto":
        if state.dim_a == 2:
            return min_affinity_2xn(state, config)
        if is_pure(state):
            return _min_affinity_pure(state)
    return _min_affinity_search(state, config)


def _min_affinity_pure(state: BipartiteState) -> MinResult:
    w, v = hermitian_eig(state.marginal_a)
    s = np.clip(w, 0.0, None)
    return MinResult(float(max(0.0, 1.0 - np.sum(s**2))), PURE_FORMULA, ProjectiveMeasurement(v))


def _min_affinity_search(state: BipartiteState, config: SearchConfig) -> MinResult:
    s = np.ascontiguousarray(sqrtm_psd(state.matrix))
    dims = state.dims
    space = measurement_space(state.marginal_a, config.deg_tol)
    res = minimize_over_measurements(
        lambda basis: kernels.measured_overlap(s, basis, *dims), space, config
    )
    return MinResult(
        max(0.0, 1.0 - res.value), BRUTE_FORCE, res.measurement, res.iterations, res.converged
    )


def t_matrix(state: BipartiteState) -> np.ndarray:
    """``T_ij = Tr[sqrt(rho)(s_i x 1) sqrt(rho)(s_j x 1)]`` for a qubit on A."""
    if state.dim_a != 2:
        raise ValidationError(f"T matrix needs a qubit on A, got dimA={state.dim_a}")
    s = sqrtm_psd(state.matrix)
    eye_b = np.eye(state.dim_b)
    ops = [np.kron(p, eye_b) for p in PAULI]
    conj = [s @ o for o in ops]
    t = np.array([[np.trace(conj[i] @ conj[j]).real for j in range(3)] for i in range(3)])
    return 0.5 * (t + t.T)


def marginal_bloch_vector(state: BipartiteState) -> np.ndarray:
    if state.dim_a != 2:
        raise ValidationError("Bloch vector needs a qubit on A")
    rho_a = state.marginal_a
    return np.array([np.trace(rho_a @ p).real for p in PAULI])


def min_affinity_2xn(state: BipartiteState, config: SearchConfig = SearchConfig()) -> MinResult:
    """Qubit-qudit affinity MIN from the T matrix.

    For a measurement along the unit vector ``r`` the overlap is
    ``(1 + r.T.r)/2``. A degenerate marginal leaves ``r`` free, giving
    ``(1 - lambda_min(T))/2``; otherwise ``r`` is pinned to the marginal's
    Bloch axis.
    """
    t = t_matrix(state)
    space = measurement_space(state.marginal_a, config.deg_tol)
    if len(space.blocks) == 1:
        w, v = np.linalg.eigh(t)
        r = v[:, 0]
        overlap = w[0]
    else:
        b = marginal_bloch_vector(state)
        r = b / np.linalg.norm(b)
        overlap = r @ t @ r
    value = max(0.0, 0.5 * (1.0 - overlap))
    return MinResult(float(value), CLOSED_2XN, ProjectiveMeasurement.from_bloch(r))


def gamma_matrix(state: BipartiteState) -> np.ndarray:
    """Real coefficients of sqrt(rho) in the product operator basis."""
    s4 = sqrtm_psd(state.matrix).reshape(state.dim_a, state.dim_b, state.dim_a, state.dim_b)
    xa = np.array(operator_basis(state.dim_a))
    yb = np.array(operator_basis(state.dim_b)) if state.dim_b > 1 else np.ones((1, 1, 1))
    g = np.einsum("acbd,iba,jdc->ij", s4, xa, yb)
    return g.real


def min_affinity_upper_bound(state: BipartiteState) -> float:
    """Spectral upper bound on the affinity MIN.

    Splitting off the identity row ``g0`` of the coefficient matrix, any
    admissible measurement has overlap ``|g0|^2 + Tr(R G' G'^t R^t)`` with
    ``R`` an (m-1)-row orthonormal frame, so the overlap is at least
    ``|g0|^2`` plus the m-1 smallest eigenvalues of ``G' G'^t``. Since the
    whole matrix has unit Frobenius norm the bound is the sum of the
    remaining m^2 - m eigenvalues.
    """
    m = state.dim_a
    g = gamma_matrix(state)
    rest = g[1:]
    mu = np.linalg.eigvalsh(rest @ rest.T)
    return float(max(0.0, np.sum(mu[m - 1 :])))


def hs_min(state: BipartiteState, config: SearchConfig = SearchConfig()) -> MinResult:
    """Hilbert-Schmidt MIN ``max_Pi ||rho - Pi(rho)||^2`` by search."""
    state.validate()
    rho = np.ascontiguousarray(state.matrix)
    dims = state.dims
    space = measurement_space(state.marginal_a, config.deg_tol)
    res = minimize_over_measurements(
        lambda basis: kernels.measured_overlap(rho, basis, *dims), space, config
    )
    value = max(0.0, purity(rho) - res.value)
    return MinResult(value, BRUTE_FORCE, res.measurement, res.iterations, res.converged)


def luo_fu_min(state: BipartiteState, config: SearchConfig = SearchConfig()) -> float:
    """``max_Pi ||sqrt(rho) - Pi(sqrt(rho))||^2`` built from explicit matrices.

    Deliberately avoids the overlap kernel so that it can serve as an
    independent check of :func:`min_affinity`.
    """
    state.validate()
    s = sqrtm_psd(state.matrix)
    dims = state.dims
    space = measurement_space(state.marginal_a, config.deg_tol)

    def negative_disturbance(basis):
        diff = s - dephase_local(s, ProjectiveMeasurement(basis), dims)
        return -float(np.sum(np.abs(diff) ** 2))

    res = minimize_over_measurements(negative_disturbance, space, config)
    return -res.value


def concurrence(state) -> float:
    """Wootters concurrence of a two-qubit state."""
    if isinstance(state, BipartiteState):
        if state.dims != (2, 2):
            raise ValidationError(f"concurrence needs a 2x2 state, got {state.dims}")
    rho = _matrix(state)
    if rho.shape != (4, 4):
        raise ValidationError(f"concurrence needs a 4x4 matrix, got {rho.shape}")
    yy = np.kron(PAULI[1], PAULI[1])
    r = rho @ yy @ rho.conj() @ yy
    lam = np.sqrt(np.clip(np.sort(np.linalg.eigvals(r).real)[::-1], 0.0, None))
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def validate_matrix(m: np.ndarray) -> None:
    check_density_matrix(m)
