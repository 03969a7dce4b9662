"""Matrix interchange: exact five-tuple JSON with a lossy float fallback.

A file holds one square matrix as {"qubits": n, "entries": [[a, b, c, d, k],
...]} in row-major order, each tuple meaning (a + b*w + c*w^2 + d*w^3)/sqrt(2)^k
for the eighth root of unity w.  The alternative key "complex" takes [re, im]
pairs and keeps the matrix on the float layer, where only the float-based
operations apply.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .gates import catalog, make_gate, resolve_name
from .linalg import DenseMatrix
from .ring import RingScalar


@dataclass(frozen=True)
class ParsedMatrix:
    exact: Optional[DenseMatrix]
    approx: Optional[np.ndarray]
    warnings: tuple = ()

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def to_complex(self) -> np.ndarray:
        return self.exact.to_complex() if self.is_exact else self.approx

    @property
    def qubits(self) -> int:
        mat = self.exact if self.is_exact else self.approx
        dim = mat.rows if self.is_exact else mat.shape[0]
        return dim.bit_length() - 1


def _expect_dim(payload: dict) -> int:
    n = payload.get("qubits")
    if not isinstance(n, int) or n < 1:
        raise ValueError('payload needs a positive integer "qubits" field')
    return 1 << n


def parse_matrix_payload(payload: dict) -> ParsedMatrix:
    if not isinstance(payload, dict):
        raise ValueError("payload must be an object")
    if ("entries" in payload) == ("complex" in payload):
        raise ValueError('payload needs exactly one of "entries" or "complex"')
    dim = _expect_dim(payload)
    if "entries" in payload:
        entries = payload["entries"]
        if len(entries) != dim * dim:
            raise ValueError(f"dimension mismatch: expected {dim * dim} entries, got {len(entries)}")
        scalars = []
        for pos, tup in enumerate(entries):
            if not isinstance(tup, list) or len(tup) != 5 or not all(
                isinstance(v, int) for v in tup
            ):
                raise ValueError(f"entry {pos} is not a 5-tuple of integers")
            scalars.append(RingScalar(*tup))
        rows = [scalars[r * dim : (r + 1) * dim] for r in range(dim)]
        matrix = DenseMatrix.from_rows(rows)
        warnings = () if matrix.is_unitary() else ("matrix is not exactly unitary",)
        return ParsedMatrix(matrix, None, warnings)
    entries = payload["complex"]
    if len(entries) != dim * dim:
        raise ValueError(f"dimension mismatch: expected {dim * dim} entries, got {len(entries)}")
    values = []
    for pos, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"complex entry {pos} is not an [re, im] pair")
        values.append(complex(float(pair[0]), float(pair[1])))
    mat = np.array(values, dtype=complex).reshape(dim, dim)
    defect = np.abs(mat @ mat.conj().T - np.eye(dim)).max()
    warnings = () if defect <= 1e-9 else ("matrix is not unitary within 1e-9",)
    return ParsedMatrix(None, mat, warnings)


def parse_matrix_text(text: str) -> ParsedMatrix:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(
            f"parse error at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err
    return parse_matrix_payload(payload)


def parse_matrix_file(path) -> ParsedMatrix:
    return parse_matrix_text(Path(path).read_text())


def matrix_payload(matrix: DenseMatrix) -> dict:
    n = matrix.qubits
    if n is None or matrix.rows != matrix.cols:
        raise ValueError("only square whole-qubit matrices serialize")
    entries = [
        list(matrix.entry(r, c).to_tuple())
        for r in range(matrix.rows)
        for c in range(matrix.cols)
    ]
    return {"qubits": n, "entries": entries}


def write_matrix_file(path, matrix: DenseMatrix) -> None:
    Path(path).write_text(json.dumps(matrix_payload(matrix)) + "\n")


def gate_vocabulary() -> list:
    return sorted(catalog())


def load_gate(text: str) -> ParsedMatrix:
    """Resolve a catalog gate name, NAME or FAMILY:n, to its exact matrix."""
    name, _, param = text.partition(":")
    try:
        resolved = resolve_name(name)
    except ValueError:
        raise ValueError(
            f"unknown gate {text!r}; known gates: {', '.join(gate_vocabulary())}"
        ) from None
    params = (int(param),) if param else ()
    return ParsedMatrix(make_gate(resolved, *params), None)


def load_gate_or_file(text: str) -> ParsedMatrix:
    """Resolve a catalog gate name (NAME or FAMILY:n) or an interchange file."""
    name, _, _ = text.partition(":")
    try:
        resolve_name(name)
    except ValueError:
        known = False
    else:
        known = True
    if known:
        # Known name: parameter problems should surface as such, not as
        # a failed file lookup.
        return load_gate(text)
    if Path(text).exists():
        return parse_matrix_file(text)
    raise ValueError(
        f"unknown gate or file {text!r}; known gates: {', '.join(gate_vocabulary())}"
    )
