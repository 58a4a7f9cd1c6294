"""Seeded property suites run by ``affmin verify``.

Each suite is a list of named checks. A check draws its own random inputs
from a generator seeded by the suite seed and returns ``(passed, total)``.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .channels import (
    apply_product_channel,
    dynamics_sweep,
    evolve_bd,
    gad_kraus,
    random_kraus_channel,
)
from .closed_forms import min_affinity_bell_diagonal
from .measurement import SearchConfig
from .measures import (
    affinity,
    affinity_metric,
    hs_min,
    luo_fu_min,
    min_affinity,
    min_affinity_2xn,
    min_affinity_upper_bound,
)
from .states import (
    add_ancilla,
    bell_diagonal,
    local_unitary,
    random_density_matrix,
    random_pure_state,
    random_state,
    random_tetrahedron_point,
    random_unitary,
    schmidt_spectrum,
)

BRUTE = SearchConfig(method="brute-force", starts=8)


class PropertyReport(NamedTuple):
    suite: str
    name: str
    passed: int
    total: int

    @property
    def ok(self) -> bool:
        return self.passed == self.total


def _count(flags) -> tuple[int, int]:
    flags = list(flags)
    return sum(bool(f) for f in flags), len(flags)


def _ints(rng, n):
    return rng.integers(0, 2**31, size=n)


# metric-axioms


def _identity(rng):
    return _count(
        affinity_metric(r, r) < 1e-6 for r in (random_density_matrix(4, seed=s) for s in _ints(rng, 20))
    )


def _symmetry(rng):
    flags = []
    for s in _ints(rng, 20):
        a, b = random_density_matrix(4, seed=s), random_density_matrix(4, seed=s + 1)
        flags.append(abs(affinity_metric(a, b) - affinity_metric(b, a)) < 1e-12)
    return _count(flags)


def _triangle(rng):
    flags = []
    for s in _ints(rng, 100):
        r, q, t = (random_density_matrix(3, seed=s + k) for k in range(3))
        flags.append(affinity_metric(r, t) <= affinity_metric(r, q) + affinity_metric(q, t) + 1e-12)
    return _count(flags)


def _monotonicity(rng):
    flags = []
    for s in _ints(rng, 30):
        r, q = random_density_matrix(3, seed=s), random_density_matrix(3, seed=s + 1)
        ch = random_kraus_channel(3, 3, seed=s + 2)
        flags.append(affinity(ch(r), ch(q)) >= affinity(r, q) - 1e-9)
    return _count(flags)


def _concavity(rng):
    flags = []
    for s in _ints(rng, 30):
        p = np.random.default_rng(s).dirichlet(np.ones(3))
        rs = [random_density_matrix(3, seed=s + k) for k in range(3)]
        qs = [random_density_matrix(3, seed=s + 10 + k) for k in range(3)]
        lhs = affinity(sum(w * r for w, r in zip(p, rs)), sum(w * q for w, q in zip(p, qs)))
        rhs = sum(w * affinity(r, q) for w, r, q in zip(p, rs, qs))
        flags.append(lhs >= rhs - 1e-9)
    return _count(flags)


# min-equivalences


def _pure_vs_search(rng):
    flags = []
    for s, dims in zip(_ints(rng, 15), [(2, 2), (2, 3), (3, 3)] * 5):
        st = random_pure_state(*dims, seed=s)
        formula = 1.0 - np.sum(schmidt_spectrum(st) ** 2)
        flags.append(abs(min_affinity(st, BRUTE).value - formula) < 1e-4)
    return _count(flags)


def _closed_vs_search(rng):
    flags = []
    for s in _ints(rng, 15):
        c = random_tetrahedron_point(s)
        st = local_unitary(bell_diagonal(c), random_unitary(2, s), random_unitary(2, s + 1))
        closed = min_affinity_2xn(st).value
        flags.append(
            abs(closed - min_affinity(st, BRUTE).value) < 1e-5
            and abs(closed - min_affinity_bell_diagonal(c)) < 1e-5
        )
    return _count(flags)


def _luo_fu(rng):
    flags = []
    for s in _ints(rng, 15):
        st = random_state(2, 2, seed=s)
        flags.append(abs(luo_fu_min(st, BRUTE) - min_affinity(st).value) < 1e-8)
    return _count(flags)


# ancilla


def _ancilla_affinity(rng):
    flags = []
    for s in _ints(rng, 10):
        st = bell_diagonal(random_tetrahedron_point(s)) if s % 2 else random_state(2, 2, seed=s)
        ext = add_ancilla(st, random_density_matrix(2, seed=s + 1))
        flags.append(abs(min_affinity(ext).value - min_affinity(st).value) < 1e-6)
    return _count(flags)


def _ancilla_hs(rng):
    flags = []
    for s in _ints(rng, 10):
        st = bell_diagonal(random_tetrahedron_point(s)) if s % 2 else random_state(2, 2, seed=s)
        sigma = random_density_matrix(2, seed=s + 1)
        pur = float(np.real(np.trace(sigma @ sigma)))
        ext = add_ancilla(st, sigma)
        flags.append(abs(hs_min(ext, BRUTE).value - pur * hs_min(st, BRUTE).value) < 1e-6)
    return _count(flags)


# bounds


def _range(rng):
    flags = []
    for s, dims in zip(_ints(rng, 30), [(2, 2), (2, 3), (3, 3)] * 10):
        m = dims[0]
        v = min_affinity(random_state(*dims, seed=s)).value
        flags.append(-1e-12 <= v <= (m - 1) / m + 1e-9)
    return _count(flags)


def _upper_bound(rng):
    flags = []
    for s, dims in zip(_ints(rng, 30), [(2, 2), (2, 3), (3, 3)] * 10):
        st = random_state(*dims, seed=s)
        flags.append(min_affinity(st).value <= min_affinity_upper_bound(st) + 1e-6)
    return _count(flags)


def _local_unitary(rng):
    flags = []
    for s in _ints(rng, 10):
        st = random_state(2, 3, seed=s)
        rot = local_unitary(st, random_unitary(2, s + 1), random_unitary(3, s + 2))
        flags.append(abs(min_affinity(rot).value - min_affinity(st).value) < 1e-6)
    return _count(flags)


# channel


def _completeness(rng):
    return _count(
        gad_kraus(g, p).completeness_residual() < 1e-10 for g, p in rng.uniform(size=(20, 2))
    )


def _map_vs_kraus(rng):
    flags = []
    for s in _ints(rng, 20):
        c = random_tetrahedron_point(s)
        g = float(np.random.default_rng(s).uniform())
        out = apply_product_channel(bell_diagonal(c), gad_kraus(g))
        flags.append(np.max(np.abs(out.matrix - bell_diagonal(evolve_bd(c, g)).matrix)) < 1e-10)
    return _count(flags)


def _trace_positivity(rng):
    flags = []
    for s in _ints(rng, 20):
        g = float(np.random.default_rng(s).uniform())
        out = apply_product_channel(random_state(2, 2, seed=s), gad_kraus(g))
        w = np.linalg.eigvalsh(out.matrix)
        flags.append(abs(np.trace(out.matrix).real - 1) < 1e-10 and w[0] > -1e-10)
    return _count(flags)


def _monotone_dynamics(rng):
    recs = dynamics_sweep([1, 1, -1], np.linspace(0, 1, 101))
    na = np.array([r.n_affinity for r in recs])
    cc = np.array([r.concurrence for r in recs])
    return _count([np.all(np.diff(na) <= 1e-12), np.all(np.diff(cc) <= 1e-12)])


SUITES: dict[str, list[tuple[str, Callable]]] = {
    "metric-axioms": [
        ("identity", _identity),
        ("symmetry", _symmetry),
        ("triangle-inequality", _triangle),
        ("cptp-monotonicity", _monotonicity),
        ("joint-concavity", _concavity),
    ],
    "min-equivalences": [
        ("pure-formula-vs-search", _pure_vs_search),
        ("closed-2xn-vs-search-vs-bell-diagonal", _closed_vs_search),
        ("luo-fu-vs-affinity", _luo_fu),
    ],
    "ancilla": [
        ("affinity-invariant", _ancilla_affinity),
        ("hs-scales-by-purity", _ancilla_hs),
    ],
    "bounds": [
        ("range", _range),
        ("upper-bound-dominates", _upper_bound),
        ("local-unitary-invariance", _local_unitary),
    ],
    "channel": [
        ("kraus-completeness", _completeness),
        ("map-vs-kraus", _map_vs_kraus),
        ("trace-and-positivity", _trace_positivity),
        ("monotone-dynamics", _monotone_dynamics),
    ],
}


def run_suite(name: str, seed: int = 0) -> list[PropertyReport]:
    if name not in SUITES:
        raise KeyError(name)
    reports = []
    for i, (prop, check) in enumerate(SUITES[name]):
        rng = np.random.default_rng([seed, i])
        passed, total = check(rng)
        reports.append(PropertyReport(name, prop, passed, total))
    return reports


__all__ = ["SUITES", "PropertyReport", "run_suite"]
