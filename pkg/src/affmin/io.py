"""Reading and writing the JSON state file.

Layout::

    {"dimA": 2, "dimB": 2, "matrix": [[[re, im], ...], ...]}
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .states import BipartiteState


class StateFileError(ValueError):
    """The file could not be parsed into a matrix with a declared split."""


def state_to_dict(state: BipartiteState) -> dict:
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in state.matrix]
    return {"dimA": state.dim_a, "dimB": state.dim_b, "matrix": rows}


def state_from_dict(doc: dict) -> BipartiteState:
    try:
        da, db = int(doc["dimA"]), int(doc["dimB"])
        entries = np.array(doc["matrix"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise StateFileError(f"malformed state document: {exc}") from exc
    n = da * db
    if entries.shape != (n, n, 2):
        raise StateFileError(
            f"matrix must be {n}x{n} entries of [re, im], got array of shape {entries.shape}"
        )
    return BipartiteState(entries[..., 0] + 1j * entries[..., 1], da, db)


def dump_state(state: BipartiteState, path) -> None:
    # json writes floats with repr, i.e. round-trip (17 significant digit) precision.
    Path(path).write_text(json.dumps(state_to_dict(state)) + "\n")


def load_state(path) -> BipartiteState:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    return state_from_dict(doc)
