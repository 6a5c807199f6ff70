"""JSON forms of matrices, POVMs, states and reports.

Output is canonical: keys in a fixed order, floats written with Python's
shortest round-trip repr, so re-reading a file reproduces every double
bit for bit.
"""
import json

import numpy as np

from .designs import Povm
from .entanglement import BipartiteState
from .errors import ConikaError


class FormatError(ConikaError, ValueError):
    pass


def matrix_to_json(a):
    a = np.asarray(a, dtype=np.complex128)
    rows, cols = a.shape
    return {
        "rows": rows,
        "cols": cols,
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_json(obj):
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"matrix object needs rows, cols and entries ({exc})") from exc
    if len(entries) != rows * cols:
        raise FormatError(f"matrix declares {rows}x{cols} but carries {len(entries)} entries")
    flat = np.array([complex(re, im) for re, im in entries], dtype=np.complex128)
    return flat.reshape(rows, cols)


def povm_to_json(povm):
    return {
        "dim": povm.dim,
        "label": povm.label,
        "elements": [matrix_to_json(e) for e in povm.elements],
    }


def povm_from_json(obj):
    try:
        dim, elements = int(obj["dim"]), obj["elements"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"POVM object needs dim and elements ({exc})") from exc
    return Povm(dim, [matrix_from_json(e) for e in elements], label=obj.get("label", ""))


def state_to_json(state):
    return {"dim": state.dim, "coefficients": matrix_to_json(state.coefficients)}


def state_from_json(obj):
    try:
        dim, coeffs = int(obj["dim"]), obj["coefficients"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"state object needs dim and coefficients ({exc})") from exc
    return BipartiteState(dim, matrix_from_json(coeffs))


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dumps(obj):
    return json.dumps(_plain(obj), indent=2, ensure_ascii=False) + "\n"


def load_file(path):
    """Parse a UTF-8 JSON file; decode errors carry line and column."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def write_file(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
