"""Local projective measurements on subsystem A and search over them.

Only measurements that leave the marginal of A unchanged are admissible.
These are rank-1 refinements of the marginal's spectral projectors, so the
free parameters are a choice of orthonormal basis inside each degenerate
eigenspace. Two-dimensional blocks are parametrized by the Bloch angles of
the first basis vector; larger blocks by ``expm(iH)`` with ``H`` Hermitian.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from .errors import ValidationError
from .linalg import PAULI, hermitian_eig

PROJECTOR_TOL = 1e-10
MARGINAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ProjectiveMeasurement:
    """Rank-1 projective measurement given by an orthonormal basis (columns)."""

    basis: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=complex)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValidationError(f"basis must be square, got shape {b.shape}")
        err = np.max(np.abs(b.conj().T @ b - np.eye(b.shape[0])))
        if err > PROJECTOR_TOL:
            raise ValidationError(f"measurement basis is not orthonormal (error {err:.3e})")
        object.__setattr__(self, "basis", b)

    @classmethod
    def from_projectors(cls, projectors) -> "ProjectiveMeasurement":
        projectors = [np.asarray(p, dtype=complex) for p in projectors]
        d = projectors[0].shape[0]
        if len(projectors) != d:
            raise ValidationError(f"need {d} rank-1 projectors, got {len(projectors)}")
        total = sum(projectors)
        if np.max(np.abs(total - np.eye(d))) > PROJECTOR_TOL:
            raise ValidationError("projectors do not sum to the identity")
        cols = []
        for p in projectors:
            w, v = hermitian_eig(p)
            if abs(w[-1] - 1) > PROJECTOR_TOL or np.any(np.abs(w[:-1]) > PROJECTOR_TOL):
                raise ValidationError("projector is not a rank-1 idempotent")
            cols.append(v[:, -1])
        return cls(np.column_stack(cols))

    @classmethod
    def from_bloch(cls, r) -> "ProjectiveMeasurement":
        """Qubit measurement with projectors (1 +- r.sigma)/2."""
        r = np.asarray(r, dtype=float)
        r = r / np.linalg.norm(r)
        plus = 0.5 * (np.eye(2) + sum(ri * p for ri, p in zip(r, PAULI)))
        return cls.from_projectors([plus, np.eye(2) - plus])

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def projectors(self) -> list[np.ndarray]:
        return [np.outer(v, v.conj()) for v in self.basis.T]

    def bloch_vector(self) -> np.ndarray:
        if self.dim != 2:
            raise ValidationError("Bloch vector is defined for qubit measurements only")
        p0 = self.projectors[0]
        return np.array([np.trace(p0 @ p).real for p in PAULI])

    def dephase(self, rho_a: np.ndarray) -> np.ndarray:
        return sum(p @ rho_a @ p for p in self.projectors)

    def preserves_marginal(self, rho_a: np.ndarray, tol: float = MARGINAL_TOL) -> bool:
        return bool(np.max(np.abs(self.dephase(rho_a) - rho_a)) <= tol)


def dephase_local(m: np.ndarray, meas: ProjectiveMeasurement, dims) -> np.ndarray:
    """``sum_k (P_k x 1) M (P_k x 1)`` for any operator ``M`` on A x B."""
    da, db = dims
    if meas.dim != da:
        raise ValidationError(f"measurement acts on dimension {meas.dim}, subsystem A has {da}")
    eye_b = np.eye(db)
    out = np.zeros_like(m, dtype=complex)
    for p in meas.projectors:
        q = np.kron(p, eye_b)
        out += q @ m @ q
    return out


@dataclass(frozen=True, eq=False)
class MeasurementSpace:
    """Admissible measurements for a given marginal.

    ``blocks`` lists index groups of (numerically) degenerate eigenvalues of
    the marginal; each group of size k contributes free parameters.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    blocks: tuple

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    @property
    def free_blocks(self) -> list:
        return [b for b in self.blocks if len(b) > 1]

    @property
    def n_params(self) -> int:
        return sum(_block_params(len(b)) for b in self.blocks)

    def basis(self, params=()) -> np.ndarray:
        """Measurement basis (columns) for a parameter vector."""
        params = np.asarray(params, dtype=float)
        out = np.array(self.eigenvectors, dtype=complex)
        pos = 0
        for block in self.free_blocks:
            k = len(block)
            n = _block_params(k)
            u = _block_unitary(k, params[pos : pos + n])
            pos += n
            idx = list(block)
            out[:, idx] = self.eigenvectors[:, idx] @ u
        return out

    def measurement(self, params=()) -> ProjectiveMeasurement:
        return ProjectiveMeasurement(self.basis(params))

    def random_params(self, rng: np.random.Generator) -> np.ndarray:
        chunks = []
        for block in self.free_blocks:
            k = len(block)
            if k == 2:
                chunks.append([np.arccos(rng.uniform(-1, 1)), rng.uniform(0, 2 * np.pi)])
            else:
                chunks.append(rng.normal(scale=np.pi / 2, size=k * k))
        return np.concatenate(chunks) if chunks else np.zeros(0)


def _block_params(k: int) -> int:
    if k == 1:
        return 0
    return 2 if k == 2 else k * k


def _block_unitary(k: int, p: np.ndarray) -> np.ndarray:
    if k == 2:
        theta, phi = p
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        ph = np.exp(1j * phi)
        return np.array([[c, -s / ph], [ph * s, c]], dtype=complex)
    h = np.zeros((k, k), dtype=complex)
    iu = np.triu_indices(k, 1)
    m = len(iu[0])
    h[np.diag_indices(k)] = p[:k]
    h[iu] = p[k : k + m] + 1j * p[k + m : k + 2 * m]
    h = h + np.triu(h, 1).conj().T
    return expm(1j * h)


def measurement_space(rho_a: np.ndarray, tol_degeneracy: float = 1e-7) -> MeasurementSpace:
    """Group the marginal's eigenvalues into degenerate blocks.

    Consecutive ascending eigenvalues closer than ``tol_degeneracy`` times
    the largest eigenvalue fall in the same block.
    """
    w, v = hermitian_eig(rho_a)
    scale = max(float(np.max(np.abs(w))), np.finfo(float).tiny)
    blocks = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] <= tol_degeneracy * scale:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return MeasurementSpace(w, v, tuple(tuple(b) for b in blocks))


@dataclass(frozen=True)
class SearchConfig:
    """Settings for the measurement search.

    ``method`` is ``"auto"`` (use analytic paths where available) or
    ``"brute-force"`` (always run the multi-start search). A start must beat
    the incumbent by more than ``ftol`` to replace it; ``gtol`` is the BFGS
    gradient tolerance of each local search.
    """

    starts: int = 32
    seed: int = 0
    deg_tol: float = 1e-7
    ftol: float = 1e-10
    gtol: float = 1e-7
    maxiter: int = 400
    method: str = "auto"

    def __post_init__(self):
        if self.method not in ("auto", "brute-force"):
            raise ValidationError(f"unknown search method {self.method!r}")
        if self.starts < 1:
            raise ValidationError("need at least one start")


@dataclass
class SearchResult:
    value: float
    params: np.ndarray
    measurement: ProjectiveMeasurement
    iterations: int
    converged: bool
    start_values: list = field(default_factory=list)


def minimize_over_measurements(
    objective: Callable[[np.ndarray], float],
    space: MeasurementSpace,
    config: SearchConfig = SearchConfig(),
) -> SearchResult:
    """Minimize ``objective(basis)`` over admissible measurements.

    Start 0 is the marginal's eigenbasis; the remaining starts are drawn from
    ``config.seed``. The best start wins, ties going to the lowest index, so
    the outcome does not depend on evaluation order.
    """
    if space.n_params == 0:
        basis = space.basis()
        return SearchResult(objective(basis), np.zeros(0), ProjectiveMeasurement(basis), 0, True)

    rng = np.random.default_rng(config.seed)
    starts = [np.zeros(space.n_params)]
    starts += [space.random_params(rng) for _ in range(config.starts - 1)]

    def f(p):
        return objective(space.basis(p))

    best = None
    iterations = 0
    converged = True
    values = []
    for x0 in starts:
        res = minimize(
            f, x0, method="BFGS", options={"gtol": config.gtol, "maxiter": config.maxiter}
        )
        # BFGS reports precision loss at flat optima that are nonetheless converged.
        ok = res.success or res.status == 2
        iterations += int(res.nit)
        values.append(float(res.fun))
        if best is None or res.fun < best.fun - config.ftol:
            best, converged = res, ok
    basis = space.basis(best.x)
    return SearchResult(
        float(best.fun), best.x, ProjectiveMeasurement(basis), iterations, converged, values
    )
