"""JSON exchange format for matrices, shared by every CLI subcommand.

A matrix file is ``{"n": <int>, "re": [[...]], "im": [[...]]}`` with
row-major n-by-n real arrays; ``im`` is optional and defaults to zeros.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .linalg import as_matrix


def matrix_to_dict(a) -> dict:
    a = as_matrix(a)
    return {
        "n": int(a.shape[0]),
        "re": a.real.tolist(),
        "im": a.imag.tolist(),
    }


def matrix_from_dict(data: dict) -> np.ndarray:
    if not isinstance(data, dict) or "n" not in data or "re" not in data:
        raise ValueError("matrix JSON must carry 'n' and 're' fields")
    n = int(data["n"])
    re = np.asarray(data["re"], dtype=np.float64)
    im_raw = data.get("im")
    im = np.zeros((n, n)) if im_raw is None else np.asarray(im_raw, dtype=np.float64)
    if re.shape != (n, n) or im.shape != (n, n):
        raise ValueError(
            f"matrix JSON arrays must be {n}x{n}, got re {re.shape} and im {im.shape}"
        )
    return as_matrix(re + 1j * im)


def write_matrix(path, a) -> None:
    Path(path).write_text(json.dumps(matrix_to_dict(a), indent=2) + "\n")


def read_matrix(path) -> np.ndarray:
    return matrix_from_dict(json.loads(Path(path).read_text()))
