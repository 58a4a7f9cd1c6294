"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 unreadable state file,
3 invalid state, 4 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .channels import dynamics_sweep
from .closed_forms import (
    closed_form_isotropic,
    closed_form_werner,
    hs_min_bell_diagonal,
    min_affinity_bell_diagonal,
)
from .errors import InvalidStateError, ValidationError
from .io import StateFileError, load_state
from .linalg import hermitian_eig
from .measurement import SearchConfig
from .measures import (
    affinity,
    apply_measurement,
    concurrence,
    hs_min,
    min_affinity,
    min_affinity_upper_bound,
)
from .states import bell_spectrum
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_USAGE = 0, 1, 2, 3, 4

FAMILY_RANGES = {
    "werner": (-1.0, 1.0),
    "isotropic": (0.0, 1.0),
    "bell-diagonal-line": (-1.0 / 3.0, 1.0),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x: float) -> str:
    # Closed forms leave round-off at their zeros; print those as 0.
    if abs(x) < 1e-14:
        return "0"
    return format(float(x), ".12g")


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _complex_rows(m: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def measure_report(state, config: SearchConfig, alpha: float = 0.5) -> dict:
    aff = min_affinity(state, config)
    hs = hs_min(state, config)
    meas = aff.optimal_measurement
    n_aff = {
        "value": aff.value,
        "method": aff.method,
        "converged": aff.converged,
        "iterations": aff.iterations,
    }
    if state.dim_a == 2:
        n_aff["bloch_vector"] = [float(v) for v in meas.bloch_vector()]
    else:
        n_aff["basis"] = _complex_rows(meas.basis)
    report = {
        "dims": [state.dim_a, state.dim_b],
        "purity": state.purity,
        "marginal_spectra": {
            "A": [float(v) for v in hermitian_eig(state.marginal_a).eigenvalues],
            "B": [float(v) for v in hermitian_eig(state.marginal_b).eigenvalues],
        },
        "n_affinity": n_aff,
        "n_hs": {"value": hs.value, "method": hs.method, "converged": hs.converged},
        "upper_bound": min_affinity_upper_bound(state),
        "concurrence": concurrence(state) if state.dims == (2, 2) else None,
        "alpha": alpha,
        "alpha_affinity_to_measured": affinity(state, apply_measurement(state, meas), alpha),
    }
    return report


def cmd_measure(args) -> int:
    try:
        state = load_state(args.state_file)
    except (StateFileError, ValidationError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        state.validate()
    except InvalidStateError as exc:
        print(f"invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not 0.0 < args.alpha < 1.0:
        raise UsageError(f"--alpha must lie in (0, 1), got {args.alpha}")
    config = SearchConfig(starts=args.starts, seed=args.seed, deg_tol=args.deg_tol)
    report = measure_report(state, config, args.alpha)
    _write(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def sweep_rows(family: str, m: int, start: float, end: float, points: int) -> list:
    lo, hi = FAMILY_RANGES[family]
    if points < 2:
        raise UsageError("--points must be at least 2")
    if not (lo <= start <= hi and lo <= end <= hi):
        raise UsageError(f"{family} parameter range must lie in [{lo:g}, {hi:g}]")
    if family == "bell-diagonal-line" and m != 2:
        raise UsageError("bell-diagonal-line is a two-qubit family; use --m 2")
    rows = []
    for x in np.linspace(start, end, points):
        x = float(x)
        if family == "werner":
            rows.append((x, *closed_form_werner(m, x)))
        elif family == "isotropic":
            rows.append((x, *closed_form_isotropic(m, x)))
        else:
            c = (-x, -x, -x)
            rows.append((x, min_affinity_bell_diagonal(c), hs_min_bell_diagonal(c)))
    return rows


def cmd_sweep(args) -> int:
    lo, hi = FAMILY_RANGES[args.family]
    start = lo if args.start is None else args.start
    end = hi if args.end is None else args.end
    rows = sweep_rows(args.family, args.m, start, end, args.points)
    _write(_csv(["param", "n_affinity", "n_hs"], rows), args.out)
    return EXIT_OK


def cmd_dynamics(args) -> int:
    c0 = tuple(args.c0)
    if np.any(bell_spectrum(c0) < -1e-12):
        print(f"invalid state: correlation vector {c0} outside tetrahedron", file=sys.stderr)
        return EXIT_INVALID
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    recs = dynamics_sweep(c0, np.linspace(0.0, 1.0, args.points))
    _write(_csv(["gamma", "n_affinity", "n_hs", "concurrence"], recs), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}, all")
    failed = False
    lines = []
    for name in names:
        for rep in run_suite(name, args.seed):
            tag = "PASS" if rep.ok else "FAIL"
            failed |= not rep.ok
            lines.append(f"{tag} {rep.suite}/{rep.name}: {rep.passed}/{rep.total}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="affmin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("measure", help="all measures for a JSON state file")
    m.add_argument("state_file")
    m.add_argument("--alpha", type=float, default=0.5)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--starts", type=int, default=32)
    m.add_argument("--deg-tol", type=float, default=1e-7)
    m.add_argument("--out")
    m.set_defaults(func=cmd_measure)

    s = sub.add_parser("sweep", help="closed-form MINs along a state family (CSV)")
    s.add_argument("--family", choices=sorted(FAMILY_RANGES), required=True)
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--start", type=float)
    s.add_argument("--end", type=float)
    s.add_argument("--points", type=int, default=101)
    s.add_argument("--out")
    s.set_defaults(func=cmd_sweep)

    d = sub.add_parser("dynamics", help="Bell-diagonal state under GAD noise (CSV)")
    d.add_argument("--c0", type=float, nargs=3, required=True, metavar=("C1", "C2", "C3"))
    d.add_argument("--points", type=int, default=101)
    d.add_argument("--out")
    d.set_defaults(func=cmd_dynamics)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
