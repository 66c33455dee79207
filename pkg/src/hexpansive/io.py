"""JSON interchange for matrices, pairs and decomposition reports.

A matrix is ``{"rows": r, "cols": c, "entries": [[...], ...]}``.  Each entry
is a string ``"p"`` or ``"p/q"`` for a real rational, or
``{"re": "p/q", "im": "p/q"}`` for a complex one.  A pair document is
``{"A": matrix, "H": matrix, "metadata": {...}}`` with optional metadata.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidScalarError, ParseError
from .linalg import rank
from .matrix import Matrix
from .scalars import GaussianRational, format_rational, parse_rational


def scalar_to_json(z: GaussianRational):
    if z.im == 0:
        return format_rational(z.re)
    return {"re": format_rational(z.re), "im": format_rational(z.im)}


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[scalar_to_json(z) for z in row] for row in m.tolist()],
    }


def _scalar_from_json(x, loc: str) -> GaussianRational:
    try:
        if isinstance(x, str):
            return GaussianRational(parse_rational(x))
        if isinstance(x, int) and not isinstance(x, bool):
            return GaussianRational(x)
        if isinstance(x, dict) and set(x) <= {"re", "im"}:
            return GaussianRational(parse_rational(x.get("re", "0")), parse_rational(x.get("im", "0")))
    except InvalidScalarError as exc:
        raise ParseError("invalid-scalar", str(exc), loc) from None
    raise ParseError("invalid-scalar", f"unsupported entry {x!r}", loc)


def matrix_from_json(obj: Any, loc: str = "") -> Matrix:
    if isinstance(obj, list):
        obj = {"entries": obj}
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError("missing-field", "matrix needs an 'entries' array", loc)
    entries = obj["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ParseError("shape-mismatch", "'entries' must be a list of rows", loc)
    rows = obj.get("rows", len(entries))
    cols = obj.get("cols", len(entries[0]) if entries else None)
    if cols is None:
        raise ParseError("missing-field", "an empty matrix needs explicit 'cols'", loc)
    if not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in (rows, cols)):
        raise ParseError("shape-mismatch", "'rows' and 'cols' must be nonnegative integers", loc)
    if len(entries) != rows:
        raise ParseError("shape-mismatch", f"declared {rows} rows, found {len(entries)}", loc)
    parsed = []
    for i, row in enumerate(entries):
        if len(row) != cols:
            raise ParseError("shape-mismatch", f"row {i} has {len(row)} entries, expected {cols}", f"{loc}.entries[{i}]")
        parsed.append([_scalar_from_json(x, f"{loc}.entries[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix(parsed, rows=rows, cols=cols)


@dataclass(frozen=True)
class PairDocument:
    A: Matrix
    H: Matrix
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"A": matrix_to_json(self.A), "H": matrix_to_json(self.H)}
        if self.metadata:
            out["metadata"] = self.metadata
        return out


def load_json(data: bytes | str, what: str = "document") -> Any:
    try:
        return json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError("malformed-json", f"{what}: {exc}") from None


def parse_pair(data: bytes | str) -> PairDocument:
    """Parse and validate a pair document (``A`` square, ``H`` Hermitian invertible)."""
    obj = load_json(data, "pair")
    if not isinstance(obj, dict):
        raise ParseError("malformed-json", "top level must be an object")
    for key in ("A", "H"):
        if key not in obj:
            raise ParseError("missing-field", f"missing matrix '{key}'", key)
    a = matrix_from_json(obj["A"], "A")
    h = matrix_from_json(obj["H"], "H")
    if not a.is_square:
        raise ParseError("shape-mismatch", f"A is {a.rows}x{a.cols}, must be square", "A")
    if h.shape != a.shape:
        raise ParseError("shape-mismatch", f"H is {h.rows}x{h.cols}, A is {a.rows}x{a.cols}", "H")
    if not h.is_hermitian():
        bad = next((i, j) for i in range(h.rows) for j in range(h.cols) if h[i, j] != h[j, i].conjugate())
        raise ParseError("not-hermitian", "H differs from its conjugate transpose", f"H.entries[{bad[0]}][{bad[1]}]")
    if rank(h) != h.rows:
        raise ParseError("singular-h", "H is singular; the inner product must be nondegenerate", "H")
    meta = obj.get("metadata", {})
    if not isinstance(meta, dict):
        raise ParseError("malformed-json", "'metadata' must be an object", "metadata")
    return PairDocument(a, h, meta)


def parse_matrix_document(data: bytes | str, key: str | None = None) -> Matrix:
    """A bare matrix object, or an object holding one under ``key``."""
    obj = load_json(data, "matrix")
    if key is not None and isinstance(obj, dict) and key in obj and "entries" not in obj:
        return matrix_from_json(obj[key], key)
    return matrix_from_json(obj)


def report_to_json(report) -> dict:
    return {
        "all_pass": report.all_pass,
        "checks": [
            {
                "name": c.name,
                "pass": c.passed,
                "witness": None if c.witness is None else matrix_to_json(c.witness),
            }
            for c in report.checks
        ],
    }


def decomposition_to_json(dec) -> dict:
    from .structure import unitary_compression

    a22, h22, unitary_part = unitary_compression(dec)
    blocks = {f"A{i}{j}": matrix_to_json(dec.A(i, j)) for i in range(1, 5) for j in range(1, 5)}
    return {
        "dims": list(dec.dims),
        "S": matrix_to_json(dec.S),
        "blocks": blocks,
        "H22": matrix_to_json(dec.H22),
        "H44": matrix_to_json(dec.H44),
        "D11": matrix_to_json(dec.D11),
        "D12": matrix_to_json(dec.D12),
        "D22": matrix_to_json(dec.D22),
        "compression": {
            "A22": matrix_to_json(a22),
            "H22": matrix_to_json(h22),
            "is_unitary_part": unitary_part,
        },
        "verification": report_to_json(dec.report),
    }
