"""Closed-form measures for Bell-diagonal, Werner and isotropic states."""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import InvalidStateError, ValidationError
from .states import BELL_LABELS, bell_spectrum

# <beta_ab| s_i x s_i |beta_ab> for i = 1, 2, 3, rows ordered as BELL_LABELS.
_BELL_SIGNS = np.array([[(-1) ** a, -((-1) ** (a + b)), (-1) ** b] for a, b in BELL_LABELS])


class MinPair(NamedTuple):
    affinity_min: float
    hs_min: float


def _checked_spectrum(c, tol: float = 1e-12) -> np.ndarray:
    lam = bell_spectrum(c)
    if np.any(lam < -tol):
        raise InvalidStateError(f"correlation vector {tuple(c)} outside tetrahedron")
    return np.clip(lam, 0.0, None)


def bell_sqrt_coefficients(c) -> tuple[float, np.ndarray]:
    """``(h, d)`` with ``sqrt(rho) = (h 1x1 + sum_i d_i s_i x s_i)/4``."""
    root = np.sqrt(_checked_spectrum(c))
    return float(root.sum()), _BELL_SIGNS.T @ root


def bell_t_diagonal(c) -> np.ndarray:
    h, d = bell_sqrt_coefficients(c)
    return 0.25 * (h**2 + 2 * d**2 - np.sum(d**2))


def min_affinity_bell_diagonal(c) -> float:
    h, d = bell_sqrt_coefficients(c)
    return float(max(0.0, 1.0 - 0.25 * (h**2 + np.min(d**2))))


def hs_min_bell_diagonal(c) -> float:
    c = np.asarray(c, dtype=float)
    _checked_spectrum(c)
    c2 = c**2
    return float(0.25 * (c2.sum() - c2.min()))


def concurrence_bell_diagonal(c) -> float:
    lam = _checked_spectrum(c)
    return float(2.0 * max(0.0, lam.max() - 0.5))


def werner_pair(p: float) -> MinPair:
    """Both MINs on the two-qubit Werner line c = (-p, -p, -p)."""
    if not -1.0 / 3.0 <= p <= 1.0:
        raise ValidationError(f"Werner weight must lie in [-1/3, 1], got {p}")
    aff = 0.25 * (1 + p - np.sqrt((1 - p) * (1 + 3 * p)))
    return MinPair(float(max(0.0, aff)), 0.5 * p * p)


def closed_form_werner(m: int, x: float) -> MinPair:
    if m < 2:
        raise ValidationError(f"dimension must be >= 2, got {m}")
    if not -1.0 <= x <= 1.0:
        raise ValidationError(f"Werner parameter must lie in [-1, 1], got {x}")
    aff = 0.5 * ((m - x) / (m + 1) - np.sqrt((m - 1) * (1 - x * x) / (m + 1)))
    hs = (m * x - 1) ** 2 / (m * (m - 1) * (m + 1) ** 2)
    return MinPair(float(max(0.0, aff)), float(hs))


def closed_form_isotropic(m: int, x: float) -> MinPair:
    if m < 2:
        raise ValidationError(f"dimension must be >= 2, got {m}")
    if not 0.0 <= x <= 1.0:
        raise ValidationError(f"isotropic parameter must lie in [0, 1], got {x}")
    aff = (np.sqrt((m - 1) * x) - np.sqrt((1 - x) / (m + 1))) ** 2 / m
    hs = (m * m * x - 1) ** 2 / (m * (m - 1) * (m + 1) ** 2)
    return MinPair(float(aff), float(hs))
