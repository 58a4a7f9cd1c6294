"""Kraus channels, generalized amplitude damping and Bell-diagonal dynamics."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .closed_forms import (
    concurrence_bell_diagonal,
    hs_min_bell_diagonal,
    min_affinity_bell_diagonal,
)
from .errors import ValidationError
from .states import BipartiteState, bell_spectrum

COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class KrausChannel:
    operators: tuple
    label: str = ""

    def __post_init__(self):
        ops = tuple(np.asarray(e, dtype=complex) for e in self.operators)
        object.__setattr__(self, "operators", ops)
        res = self.completeness_residual()
        if res > COMPLETENESS_TOL:
            raise ValidationError(f"Kraus operators are not trace preserving (residual {res:.3e})")

    @property
    def dim(self) -> int:
        return self.operators[0].shape[1]

    def completeness_residual(self) -> float:
        total = sum(e.conj().T @ e for e in self.operators)
        return float(np.max(np.abs(total - np.eye(total.shape[0]))))

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        return sum(e @ rho @ e.conj().T for e in self.operators)


def gad_kraus(gamma: float, p: float = 0.5) -> KrausChannel:
    """Generalized amplitude damping with decay ``gamma`` and equilibrium weight ``p``."""
    if not 0.0 <= gamma <= 1.0:
        raise ValidationError(f"gamma must lie in [0, 1], got {gamma}")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p must lie in [0, 1], got {p}")
    a, b = np.sqrt(p), np.sqrt(1 - p)
    g, h = np.sqrt(gamma), np.sqrt(1 - gamma)
    ops = (
        a * np.array([[1, 0], [0, h]]),
        a * np.array([[0, g], [0, 0]]),
        b * np.array([[h, 0], [0, 1]]),
        b * np.array([[0, 0], [g, 0]]),
    )
    return KrausChannel(ops, f"GAD(gamma={gamma:g}, p={p:g})")


def identity_channel(d: int = 2) -> KrausChannel:
    return KrausChannel((np.eye(d),), "identity")


def random_kraus_channel(d: int, n_ops: int = 3, seed=0) -> KrausChannel:
    """Random channel from a Haar isometry C^d -> C^(n_ops d)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = rng.standard_normal((n_ops * d, d)) + 1j * rng.standard_normal((n_ops * d, d))
    q, _ = np.linalg.qr(z)
    return KrausChannel(tuple(q[k * d : (k + 1) * d] for k in range(n_ops)), "random")


def apply_product_channel(state: BipartiteState, channel: KrausChannel) -> BipartiteState:
    """Send both halves of a bipartite state through copies of ``channel``."""
    if state.dims != (channel.dim, channel.dim):
        raise ValidationError(
            f"channel acts on dimension {channel.dim}, state has split {state.dims}"
        )
    out = np.zeros_like(state.matrix)
    for ei in channel.operators:
        for ej in channel.operators:
            k = np.kron(ei, ej)
            out += k @ state.matrix @ k.conj().T
    return BipartiteState(0.5 * (out + out.conj().T), state.dim_a, state.dim_b)


def evolve_bd(c, gamma: float, p: float = 0.5) -> np.ndarray:
    """Correlation vector of a Bell-diagonal state after GAD on both qubits.

    Only the symmetric bath ``p = 1/2`` keeps the state Bell-diagonal; other
    values must go through :func:`apply_product_channel`.
    """
    if p != 0.5:
        raise ValidationError("the correlation-vector map only holds for p = 1/2")
    if not 0.0 <= gamma <= 1.0:
        raise ValidationError(f"gamma must lie in [0, 1], got {gamma}")
    c1, c2, c3 = np.asarray(c, dtype=float)
    s = 1.0 - gamma
    return np.array([s * c1, s * c2, s * s * c3])


class DynamicsRecord(NamedTuple):
    gamma: float
    n_affinity: float
    n_hs: float
    concurrence: float


def dynamics_sweep(c0, gammas) -> list[DynamicsRecord]:
    if np.any(bell_spectrum(c0) < -1e-12):
        raise ValidationError(f"initial correlation vector {tuple(c0)} outside tetrahedron")
    records = []
    for g in gammas:
        c = evolve_bd(c0, float(g))
        records.append(
            DynamicsRecord(
                float(g),
                min_affinity_bell_diagonal(c),
                hs_min_bell_diagonal(c),
                concurrence_bell_diagonal(c),
            )
        )
    return records


def sudden_death_gamma(c0, points: int = 1001) -> float | None:
    """First grid ``gamma`` at which the concurrence vanishes, or None."""
    for rec in dynamics_sweep(c0, np.linspace(0.0, 1.0, points)):
        if rec.concurrence == 0.0:
            return rec.gamma
    return None
