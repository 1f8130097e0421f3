"""JSON model files for Lie algebras, crossed modules and braided crossed modules.

Scalars are strings ("3", "-2", "3/7"); plain integers are accepted on input.
Every parse error carries the JSON path of the offending value.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .crossed import BraidedCrossedModule, CrossedModule
from .exact_linalg import FieldSpec, Matrix
from .lie import LieAlgebra

__all__ = ["ModelError", "Model", "parse_model", "loads_model", "lie_to_json",
           "crossed_to_json", "braided_to_json", "vec_to_json"]

_TOP_KEYS = {"field", "L0", "L1", "boundary", "action", "braiding"}
_LIE_KEYS = {"dim", "basis", "brackets"}


class ModelError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


@dataclass(frozen=True)
class Model:
    xmod: CrossedModule
    braided: BraidedCrossedModule | None = None


def _scalar(F: FieldSpec, v: Any, path: str):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ModelError(path, f"expected a scalar string or integer, got {json.dumps(v)}")
    try:
        if isinstance(v, str):
            Fraction(v.strip())
        return F(v)
    except (ValueError, ZeroDivisionError) as e:
        raise ModelError(path, f"bad scalar {v!r} ({e})") from None


def _vector(F: FieldSpec, v: Any, n: int, path: str) -> tuple:
    if not isinstance(v, list):
        raise ModelError(path, "expected a list of scalars")
    if len(v) != n:
        raise ModelError(path, f"expected {n} entries, got {len(v)}")
    return tuple(_scalar(F, a, f"{path}[{k}]") for k, a in enumerate(v))


def _list(v: Any, n: int, path: str) -> list:
    if not isinstance(v, list):
        raise ModelError(path, "expected a list")
    if len(v) != n:
        raise ModelError(path, f"expected {n} entries, got {len(v)}")
    return v


def _dim(spec: Any, path: str) -> int:
    if not isinstance(spec, dict):
        raise ModelError(path, "expected an object")
    extra = set(spec) - _LIE_KEYS
    if extra:
        raise ModelError(f"{path}.{sorted(extra)[0]}", "unknown field")
    n = spec.get("dim")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ModelError(f"{path}.dim", "expected a non-negative integer")
    return n


def _lie(F: FieldSpec, spec: dict, path: str, prefix: str) -> tuple[LieAlgebra, bool]:
    """The algebra, and whether its brackets were given explicitly."""
    n = _dim(spec, path)
    labels = spec.get("basis", [f"{prefix}{i}" for i in range(n)])
    labels = _list(labels, n, f"{path}.basis")
    for k, s in enumerate(labels):
        if not isinstance(s, str):
            raise ModelError(f"{path}.basis[{k}]", "labels must be strings")
    if len(set(labels)) != n:
        raise ModelError(f"{path}.basis", "labels must be distinct")
    given = "brackets" in spec
    raw = spec.get("brackets", [])
    if not isinstance(raw, list):
        raise ModelError(f"{path}.brackets", "expected a list")
    br = {}
    for k, e in enumerate(raw):
        p = f"{path}.brackets[{k}]"
        if not isinstance(e, dict) or set(e) != {"i", "j", "value"}:
            raise ModelError(p, 'expected {"i", "j", "value"}')
        i, j = e["i"], e["j"]
        if not all(isinstance(t, int) and not isinstance(t, bool) for t in (i, j)) or not 0 <= i < j < n:
            raise ModelError(p, f"need integers 0 <= i < j < {n}, got i={i!r}, j={j!r}")
        if (i, j) in br:
            raise ModelError(p, f"duplicate bracket ({i}, {j})")
        br[(i, j)] = _vector(F, e["value"], n, f"{p}.value")
    return LieAlgebra.from_brackets(F, labels, br), given


def parse_model(data: Any, field: FieldSpec | None = None) -> Model:
    if not isinstance(data, dict):
        raise ModelError("$", "expected a JSON object")
    extra = set(data) - _TOP_KEYS
    if extra:
        raise ModelError(f"$.{sorted(extra)[0]}", "unknown field")
    if field is None:
        text = data.get("field", "Q")
        if not isinstance(text, str):
            raise ModelError("$.field", "expected 'Q' or 'Fp:<p>'")
        try:
            field = FieldSpec.parse(text)
        except ValueError as e:
            raise ModelError("$.field", str(e)) from None
    for key in ("L0", "L1", "boundary"):
        if key not in data:
            raise ModelError(f"$.{key}", "missing")
    F = field
    L0, given0 = _lie(F, data["L0"], "$.L0", "x")
    L1, given1 = _lie(F, data["L1"], "$.L1", "a")
    n0, n1 = L0.dim, L1.dim
    bcols = [_vector(F, c, n0, f"$.boundary[{k}]")
             for k, c in enumerate(_list(data["boundary"], n1, "$.boundary"))]
    boundary = Matrix.from_columns(F, bcols, nrows=n0) if n1 else Matrix.zeros(F, n0, 0)

    braided = None
    if "braiding" in data:
        rows = _list(data["braiding"], n0, "$.braiding")
        br = tuple(tuple(_vector(F, v, n1, f"$.braiding[{i}][{j}]")
                         for j, v in enumerate(_list(r, n0, f"$.braiding[{i}]")))
                   for i, r in enumerate(rows))
        braided = BraidedCrossedModule(boundary, br, L0 if given0 else None, L1 if given1 else None)

    if "action" in data:
        rows = _list(data["action"], n0, "$.action")
        act = tuple(tuple(_vector(F, v, n1, f"$.action[{i}][{j}]")
                          for j, v in enumerate(_list(r, n1, f"$.action[{i}]")))
                    for i, r in enumerate(rows))
        X = CrossedModule(braided.lie0 if braided else L0, braided.lie1 if braided else L1, boundary, act)
    elif braided is not None:
        X = _from_braiding(braided)
    else:
        raise ModelError("$.action", "missing (required unless a braiding is given)")
    return Model(X, braided)


def _from_braiding(B: BraidedCrossedModule) -> CrossedModule:
    """``x.a = {x, d a}``, without validating; validators report any failure."""
    act = tuple(tuple(B.brace(B.e0(i), B.d(B.e1(j))) for j in range(B.n1)) for i in range(B.n0))
    return CrossedModule(B.lie0, B.lie1, B.boundary, act)


def loads_model(text: str, field: FieldSpec | None = None) -> Model:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelError(f"line {e.lineno} column {e.colno}", f"malformed JSON: {e.msg}") from None
    return parse_model(data, field)


def vec_to_json(F: FieldSpec, v) -> list[str]:
    return [F.format(a) for a in v]


def lie_to_json(L: LieAlgebra) -> dict:
    F = L.field
    br = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = L.structure[i][j]
            if any(v):
                br.append({"i": i, "j": j, "value": vec_to_json(F, v)})
    return {"dim": L.dim, "basis": list(L.labels), "brackets": br}


def crossed_to_json(X: CrossedModule) -> dict:
    F = X.field
    return {
        "field": _field_name(F),
        "L0": lie_to_json(X.L0),
        "L1": lie_to_json(X.L1),
        "boundary": [vec_to_json(F, X.boundary.column(k)) for k in range(X.n1)],
        "action": [[vec_to_json(F, X.action[i][j]) for j in range(X.n1)] for i in range(X.n0)],
    }


def braided_to_json(B: BraidedCrossedModule) -> dict:
    F = B.field
    out = {
        "field": _field_name(F),
        "L0": lie_to_json(B.lie0),
        "L1": lie_to_json(B.lie1),
        "boundary": [vec_to_json(F, B.boundary.column(k)) for k in range(B.n1)],
        "braiding": [[vec_to_json(F, B.braiding[i][j]) for j in range(B.n0)] for i in range(B.n0)],
    }
    return out


def _field_name(F: FieldSpec) -> str:
    return "Q" if F.is_rational else f"Fp:{F.modulus}"
