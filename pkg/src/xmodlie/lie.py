"""Finite-dimensional Lie algebras given by structure constants, and their modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_linalg import (
    FieldSpec,
    Matrix,
    Subspace,
    kernel,
    lin_comb,
    is_zero,
    quotient,
    unit_vector,
    vec_add,
    vec_sub,
    zero_vector,
)

__all__ = [
    "Violation",
    "NotAnIdeal",
    "LieAlgebra",
    "LieModule",
    "validate_lie_algebra",
    "validate_action",
    "restricted_centre",
    "quotient_lie",
    "abelian",
    "sl2",
    "heisenberg",
    "b2",
    "upper_triangular",
    "strictly_upper_triangular",
]


@dataclass(frozen=True)
class Violation:
    """A failed identity: which law, on which basis indices, with what defect."""

    kind: str
    indices: tuple
    defect: tuple = ()
    system: str = ""

    def describe(self, F: FieldSpec | None = None) -> str:
        d = [F.format(a) for a in self.defect] if F else list(self.defect)
        tag = f"[{self.system}] " if self.system else ""
        return f"{tag}{self.kind} at {self.indices}: defect {d}"


class NotAnIdeal(ValueError):
    def __init__(self, pair, value):
        super().__init__(f"[{pair[0]}, {pair[1]}] leaves the subspace (bracket = {value})")
        self.pair = pair
        self.value = value


def _tensor(F: FieldSpec, n: int, m: int, k: int, data) -> tuple:
    """Coerce an n x m table of length-k vectors."""
    if len(data) != n or any(len(row) != m for row in data):
        raise ValueError(f"tensor must be {n} x {m}")
    out = []
    for row in data:
        r = []
        for v in row:
            if len(v) != k:
                raise ValueError(f"tensor entries must have length {k}")
            r.append(tuple(F(a) for a in v))
        out.append(tuple(r))
    return tuple(out)


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``structure[i][j]`` = coordinates of ``[x_i, x_j]``.

    Construction does not check the axioms; use :func:`validate_lie_algebra`.
    """

    field: FieldSpec
    labels: tuple
    structure: tuple

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "structure", _tensor(self.field, n, n, n, self.structure))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def from_brackets(cls, F: FieldSpec, labels: Sequence[str], brackets: dict) -> "LieAlgebra":
        """Build from ``{(i, j): vector}`` for i < j; other pairs follow by antisymmetry."""
        n = len(labels)
        z = zero_vector(F, n)
        c = [[z] * n for _ in range(n)]
        for (i, j), v in brackets.items():
            if not (0 <= i < j < n):
                raise ValueError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {n}")
            v = tuple(F(a) for a in v)
            c[i][j] = v
            c[j][i] = tuple(-a for a in v)
        return cls(F, tuple(labels), tuple(tuple(r) for r in c))

    def basis(self) -> list[tuple]:
        return [unit_vector(self.field, self.dim, i) for i in range(self.dim)]

    def zero(self) -> tuple:
        return zero_vector(self.field, self.dim)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        F, n = self.field, self.dim
        terms = []
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.structure[i]
            for j, b in enumerate(y):
                if b:
                    terms.append((a * b, row[j]))
        return lin_comb(F, n, terms)

    def ad(self, x: Sequence) -> Matrix:
        return Matrix.from_columns(self.field, [self.bracket(x, e) for e in self.basis()], nrows=self.dim)

    def is_abelian(self) -> bool:
        return all(is_zero(v) for row in self.structure for v in row)

    def change_basis(self, P: Matrix) -> "LieAlgebra":
        """Transport the bracket to the basis given by the columns of invertible ``P``."""
        from .exact_linalg import solve
        new = P.columns()
        c = []
        for u in new:
            row = []
            for v in new:
                coords = solve(P, self.bracket(u, v))
                if coords is None:
                    raise ValueError("change of basis matrix is not invertible")
                row.append(coords)
            c.append(tuple(row))
        return LieAlgebra(self.field, self.labels, tuple(c))

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        F = self.field
        n, m = self.dim, other.dim
        z = zero_vector(F, n + m)
        c = [[z] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                c[i][j] = self.structure[i][j] + zero_vector(F, m)
        for i in range(m):
            for j in range(m):
                c[n + i][n + j] = zero_vector(F, n) + other.structure[i][j]
        labels = tuple(self.labels) + tuple(other.labels)
        return LieAlgebra(F, labels, tuple(tuple(r) for r in c))


@dataclass(frozen=True)
class LieModule:
    """``action[i][j]`` = coordinates of ``x_i . v_j``.

    When ``lie`` is given the module is a Lie algebra acted on by derivations.
    """

    algebra: LieAlgebra
    dim: int
    action: tuple
    lie: LieAlgebra | None = None

    def __post_init__(self):
        F = self.algebra.field
        object.__setattr__(self, "action", _tensor(F, self.algebra.dim, self.dim, self.dim, self.action))
        if self.lie is not None and (self.lie.dim != self.dim or self.lie.field != F):
            raise ValueError("Lie structure on the module has the wrong dimension or field")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @classmethod
    def trivial(cls, g: LieAlgebra, dim: int, lie: LieAlgebra | None = None) -> "LieModule":
        z = zero_vector(g.field, dim)
        return cls(g, dim, tuple(tuple(z for _ in range(dim)) for _ in range(g.dim)), lie)

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> "LieModule":
        return cls(g, g.dim, g.structure, g)

    def act(self, x: Sequence, v: Sequence) -> tuple:
        terms = []
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.action[i]
            for j, b in enumerate(v):
                if b:
                    terms.append((a * b, row[j]))
        return lin_comb(self.field, self.dim, terms)

    def action_matrix(self, x: Sequence) -> Matrix:
        F = self.field
        return Matrix.from_columns(F, [self.act(x, unit_vector(F, self.dim, j)) for j in range(self.dim)],
                                   nrows=self.dim)


def validate_lie_algebra(L: LieAlgebra) -> list[Violation]:
    """Antisymmetry and Jacobi on all basis tuples; empty list means valid."""
    out = []
    n = L.dim
    c = L.structure
    for i in range(n):
        if not is_zero(c[i][i]):
            out.append(Violation("antisymmetry", (i, i), c[i][i]))
        for j in range(i + 1, n):
            s = vec_add(c[i][j], c[j][i])
            if not is_zero(s):
                out.append(Violation("antisymmetry", (i, j), s))
    e = L.basis()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                # [x_i,[x_j,x_k]] + [x_k,[x_i,x_j]] + [x_j,[x_k,x_i]]
                s = vec_add(vec_add(L.bracket(e[i], c[j][k]), L.bracket(e[k], c[i][j])),
                            L.bracket(e[j], c[k][i]))
                if not is_zero(s):
                    out.append(Violation("jacobi", (i, j, k), s))
    return out


def validate_action(A: LieModule) -> list[Violation]:
    """Module law, plus the derivation law when the module carries a bracket."""
    out = []
    g = A.algebra
    F = A.field
    eg = g.basis()
    ev = [unit_vector(F, A.dim, j) for j in range(A.dim)]
    for i in range(g.dim):
        for j in range(g.dim):
            for k in range(A.dim):
                lhs = A.act(g.structure[i][j], ev[k])
                rhs = vec_sub(A.act(eg[i], A.action[j][k]), A.act(eg[j], A.action[i][k]))
                d = vec_sub(lhs, rhs)
                if not is_zero(d):
                    out.append(Violation("module_law", (i, j, k), d))
    M = A.lie
    if M is not None:
        for i in range(g.dim):
            for m in range(M.dim):
                for n in range(M.dim):
                    lhs = A.act(eg[i], M.structure[m][n])
                    rhs = vec_add(M.bracket(A.action[i][m], ev[n]), M.bracket(ev[m], A.action[i][n]))
                    d = vec_sub(lhs, rhs)
                    if not is_zero(d):
                        out.append(Violation("derivation_law", (i, m, n), d))
    return out


def restricted_centre(L: LieAlgebra, K: LieModule) -> tuple[Subspace, Subspace, Subspace]:
    """``(Z(L), st_K(L), Z_K(L))``: the centre, the annihilator of K, and their intersection."""
    F, n = L.field, L.dim
    if K.algebra.dim != n:
        raise ValueError("module is over a different algebra")
    # c -> ([c, x_j])_j is linear in c; likewise c -> (c . k_m)_m
    ad_rows = []
    for j in range(n):
        for comp in range(n):
            ad_rows.append(tuple(L.structure[i][j][comp] for i in range(n)))
    st_rows = []
    for m in range(K.dim):
        for comp in range(K.dim):
            st_rows.append(tuple(K.action[i][m][comp] for i in range(n)))
    Z = kernel(Matrix.from_rows(F, ad_rows, ncols=n))
    st = kernel(Matrix.from_rows(F, st_rows, ncols=n))
    ZK = kernel(Matrix.from_rows(F, ad_rows + st_rows, ncols=n))
    return Z, st, ZK


def check_ideal(L: LieAlgebra, I: Subspace) -> None:
    for i, x in enumerate(L.basis()):
        for b in I.basis:
            v = L.bracket(x, b)
            if not I.contains(v):
                raise NotAnIdeal((L.labels[i], b), v)


def quotient_lie(L: LieAlgebra, I: Subspace) -> tuple[LieAlgebra, Matrix]:
    """Quotient algebra L/I on section representatives, and the projection matrix."""
    check_ideal(L, I)
    Q = quotient(L.dim, I)
    reps = Q.representatives()
    c = tuple(tuple(Q.project(L.bracket(u, v)) for v in reps) for u in reps)
    free = [j for j in range(L.dim) if j not in set(I.pivots)]
    labels = tuple(L.labels[j] for j in free)
    quo = LieAlgebra(L.field, labels, c)
    P = Q.projection
    for u in L.basis():
        for v in L.basis():
            if P.apply(L.bracket(u, v)) != quo.bracket(P.apply(u), P.apply(v)):
                raise AssertionError("projection is not a Lie homomorphism")
    return quo, P


# ---------------------------------------------------------------------------
# standard algebras

def abelian(F: FieldSpec, n: int, prefix: str = "a") -> LieAlgebra:
    return LieAlgebra.from_brackets(F, [f"{prefix}{i}" for i in range(n)], {})


def sl2(F: FieldSpec) -> LieAlgebra:
    """Basis (h, e, f) with [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    return LieAlgebra.from_brackets(F, ["h", "e", "f"], {
        (0, 1): (0, 2, 0),
        (0, 2): (0, 0, -2),
        (1, 2): (1, 0, 0),
    })


def heisenberg(F: FieldSpec) -> LieAlgebra:
    """Basis (e, f, z) with [e,f]=z."""
    return LieAlgebra.from_brackets(F, ["e", "f", "z"], {(0, 1): (0, 0, 1)})


def b2(F: FieldSpec) -> LieAlgebra:
    """Basis (e, f) with [e,f]=f."""
    return LieAlgebra.from_brackets(F, ["e", "f"], {(0, 1): (0, 1)})


def _matrix_algebra(F: FieldSpec, positions: list[tuple[int, int]]) -> LieAlgebra:
    idx = {p: k for k, p in enumerate(positions)}
    n = len(positions)
    br = {}
    for a, (i, j) in enumerate(positions):
        for b, (k, l) in enumerate(positions):
            if a >= b:
                continue
            v = [0] * n
            # [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if j == k:
                v[idx[(i, l)]] += 1
            if l == i:
                v[idx[(k, j)]] -= 1
            if any(v):
                br[(a, b)] = v
    labels = [f"E{i + 1}{j + 1}" for i, j in positions]
    return LieAlgebra.from_brackets(F, labels, br)


def upper_triangular(F: FieldSpec, n: int = 3) -> LieAlgebra:
    """Upper triangular n x n matrices, basis E_ij for i <= j."""
    return _matrix_algebra(F, [(i, j) for i in range(n) for j in range(i, n)])


def strictly_upper_triangular(F: FieldSpec, n: int = 3) -> LieAlgebra:
    return _matrix_algebra(F, [(i, j) for i in range(n) for j in range(i + 1, n)])
