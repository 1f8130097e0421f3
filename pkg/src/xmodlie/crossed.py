"""Crossed and braided crossed modules of Lie algebras.

Both crossed-module axiom systems are checked independently:

* the *stored-bracket* system: L0 and L1 are Lie algebras, the boundary is a
  Lie homomorphism, L0 acts on L1 by derivations, equivariance
  ``d(x.a) = [x, d a]`` and Peiffer ``d(a).b = [a, b]``;
* the *module* system: L0 is a Lie algebra, L1 an L0-module, equivariance,
  ``d(a).b + d(b).a = 0``, and the stored L1 bracket agrees with the one
  reconstructed as ``[a, b] := d(a).b``.

Braided crossed modules likewise have a *standard* system (L0, L1 Lie,
homomorphism, and the four braiding identities) and an *alternative* system
that only sees the boundary and the braiding.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_linalg import (
    FieldSpec,
    Matrix,
    QuotientSpace,
    Subspace,
    image,
    is_zero,
    kernel,
    lin_comb,
    quotient,
    unit_vector,
    vec_add,
    vec_sub,
    zero_vector,
)
from .lie import (
    LieAlgebra,
    LieModule,
    Violation,
    _tensor,
    quotient_lie,
    validate_action,
    validate_lie_algebra,
)

__all__ = [
    "InvalidInput",
    "CrossedModule",
    "BraidedCrossedModule",
    "HomotopyInvariants",
    "validate_crossed",
    "crossed_axioms_stored",
    "crossed_axioms_module",
    "validate_braided",
    "braided_axioms_standard",
    "braided_axioms_alternative",
    "underlying_crossed",
    "homotopy",
]


class InvalidInput(ValueError):
    def __init__(self, message: str, violations: Sequence[Violation] = ()):
        super().__init__(message)
        self.violations = list(violations)


def _bilinear(F: FieldSpec, k: int, table, x: Sequence, y: Sequence) -> tuple:
    terms = []
    for i, a in enumerate(x):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(y):
            if b:
                terms.append((a * b, row[j]))
    return lin_comb(F, k, terms)


@dataclass(frozen=True)
class CrossedModule:
    """``boundary`` is dim L0 x dim L1 (columns are images of the L1 basis);
    ``action[i][j]`` = coordinates of ``x_i . a_j`` in L1."""

    L0: LieAlgebra
    L1: LieAlgebra
    boundary: Matrix
    action: tuple

    def __post_init__(self):
        F = self.L0.field
        if self.L1.field != F or self.boundary.field != F:
            raise ValueError("L0, L1 and the boundary must share a field")
        if self.boundary.shape != (self.L0.dim, self.L1.dim):
            raise ValueError(f"boundary must be {self.L0.dim} x {self.L1.dim}, got {self.boundary.shape}")
        object.__setattr__(self, "action", _tensor(F, self.L0.dim, self.L1.dim, self.L1.dim, self.action))

    @property
    def field(self) -> FieldSpec:
        return self.L0.field

    @property
    def n0(self) -> int:
        return self.L0.dim

    @property
    def n1(self) -> int:
        return self.L1.dim

    @property
    def module(self) -> LieModule:
        return LieModule(self.L0, self.L1.dim, self.action, self.L1)

    def d(self, a: Sequence) -> tuple:
        return self.boundary.apply(a)

    def act(self, x: Sequence, a: Sequence) -> tuple:
        return _bilinear(self.field, self.n1, self.action, x, a)

    def bracket0(self, x, y) -> tuple:
        return self.L0.bracket(x, y)

    def bracket1(self, a, b) -> tuple:
        return self.L1.bracket(a, b)

    def e0(self, i: int) -> tuple:
        return unit_vector(self.field, self.n0, i)

    def e1(self, i: int) -> tuple:
        return unit_vector(self.field, self.n1, i)

    def change_basis(self, P0: Matrix, P1: Matrix) -> "CrossedModule":
        """Same crossed module in the bases given by the columns of P0 (for L0) and P1 (for L1)."""
        from .exact_linalg import solve
        L0 = self.L0.change_basis(P0)
        L1 = self.L1.change_basis(P1)
        u0, u1 = P0.columns(), P1.columns()
        bcols = [solve(P0, self.d(a)) for a in u1]
        act = tuple(tuple(solve(P1, self.act(x, a)) for a in u1) for x in u0)
        return CrossedModule(L0, L1, Matrix.from_columns(self.field, bcols, nrows=self.n0), act)

    def direct_sum(self, other: "CrossedModule") -> "CrossedModule":
        F = self.field
        n0, n1, m0, m1 = self.n0, self.n1, other.n0, other.n1
        bcols = [self.boundary.column(j) + zero_vector(F, m0) for j in range(n1)]
        bcols += [zero_vector(F, n0) + other.boundary.column(j) for j in range(m1)]
        z = zero_vector(F, n1 + m1)
        act = [[z] * (n1 + m1) for _ in range(n0 + m0)]
        for i in range(n0):
            for j in range(n1):
                act[i][j] = self.action[i][j] + zero_vector(F, m1)
        for i in range(m0):
            for j in range(m1):
                act[n0 + i][n1 + j] = zero_vector(F, n1) + other.action[i][j]
        return CrossedModule(self.L0.direct_sum(other.L0), self.L1.direct_sum(other.L1),
                             Matrix.from_columns(F, bcols, nrows=n0 + m0),
                             tuple(tuple(r) for r in act))


@dataclass(frozen=True)
class BraidedCrossedModule:
    """``braiding[i][j]`` = coordinates of ``{x_i, x_j}`` in L1.

    The L0 and L1 brackets may be omitted; they are then derived from
    ``[x, y] := d{x, y}`` and ``[a, b] := {d a, d b}``.
    """

    boundary: Matrix
    braiding: tuple
    L0: LieAlgebra | None = None
    L1: LieAlgebra | None = None

    def __post_init__(self):
        F = self.boundary.field
        n0, n1 = self.boundary.shape
        object.__setattr__(self, "braiding", _tensor(F, n0, n0, n1, self.braiding))
        if self.L0 is not None and (self.L0.dim != n0 or self.L0.field != F):
            raise ValueError("L0 does not match the boundary")
        if self.L1 is not None and (self.L1.dim != n1 or self.L1.field != F):
            raise ValueError("L1 does not match the boundary")

    @property
    def field(self) -> FieldSpec:
        return self.boundary.field

    @property
    def n0(self) -> int:
        return self.boundary.nrows

    @property
    def n1(self) -> int:
        return self.boundary.ncols

    def d(self, a) -> tuple:
        return self.boundary.apply(a)

    def brace(self, x, y) -> tuple:
        return _bilinear(self.field, self.n1, self.braiding, x, y)

    def e0(self, i):
        return unit_vector(self.field, self.n0, i)

    def e1(self, i):
        return unit_vector(self.field, self.n1, i)

    def derived_L0(self) -> LieAlgebra:
        labels = self.L0.labels if self.L0 else tuple(f"x{i}" for i in range(self.n0))
        c = tuple(tuple(self.d(self.braiding[i][j]) for j in range(self.n0)) for i in range(self.n0))
        return LieAlgebra(self.field, labels, c)

    def derived_L1(self) -> LieAlgebra:
        labels = self.L1.labels if self.L1 else tuple(f"a{i}" for i in range(self.n1))
        da = [self.d(self.e1(i)) for i in range(self.n1)]
        c = tuple(tuple(self.brace(da[i], da[j]) for j in range(self.n1)) for i in range(self.n1))
        return LieAlgebra(self.field, labels, c)

    @property
    def lie0(self) -> LieAlgebra:
        return self.L0 if self.L0 is not None else self.derived_L0()

    @property
    def lie1(self) -> LieAlgebra:
        return self.L1 if self.L1 is not None else self.derived_L1()


# ---------------------------------------------------------------------------
# crossed module validation

def _tag(vs: list[Violation], system: str) -> list[Violation]:
    return [Violation(v.kind, v.indices, v.defect, system) for v in vs]


def _equivariance(X: CrossedModule) -> list[Violation]:
    out = []
    for i in range(X.n0):
        x = X.e0(i)
        for j in range(X.n1):
            a = X.e1(j)
            dlt = vec_sub(X.d(X.action[i][j]), X.bracket0(x, X.d(a)))
            if not is_zero(dlt):
                out.append(Violation("equivariance", (i, j), dlt))
    return out


def crossed_axioms_stored(X: CrossedModule) -> list[Violation]:
    """L0, L1 Lie; d a homomorphism; action by derivations; equivariance; Peiffer."""
    out = _tag(validate_lie_algebra(X.L0), "L0") + _tag(validate_lie_algebra(X.L1), "L1")
    for i in range(X.n1):
        for j in range(X.n1):
            a, b = X.e1(i), X.e1(j)
            dlt = vec_sub(X.d(X.bracket1(a, b)), X.bracket0(X.d(a), X.d(b)))
            if not is_zero(dlt):
                out.append(Violation("homomorphism", (i, j), dlt))
    out += validate_action(X.module)
    out += _equivariance(X)
    for i in range(X.n1):
        da = X.d(X.e1(i))
        for j in range(X.n1):
            b = X.e1(j)
            dlt = vec_sub(X.act(da, b), X.bracket1(X.e1(i), b))
            if not is_zero(dlt):
                out.append(Violation("peiffer", (i, j), dlt))
    return _tag(out, "stored")


def reconstructed_L1(X: CrossedModule) -> LieAlgebra:
    """The L1 bracket ``[a, b] := d(a).b`` determined by the module structure."""
    c = tuple(tuple(X.act(X.d(X.e1(i)), X.e1(j)) for j in range(X.n1)) for i in range(X.n1))
    return LieAlgebra(X.field, X.L1.labels, c)


def crossed_axioms_module(X: CrossedModule) -> list[Violation]:
    """L0 Lie; L1 an L0-module; equivariance; ``d(a).b + d(b).a = 0``; stored bracket = reconstructed."""
    out = _tag(validate_lie_algebra(X.L0), "L0")
    out += validate_action(LieModule(X.L0, X.n1, X.action))
    out += _equivariance(X)
    for i in range(X.n1):
        da = X.d(X.e1(i))
        for j in range(i, X.n1):
            db = X.d(X.e1(j))
            dlt = vec_add(X.act(da, X.e1(j)), X.act(db, X.e1(i)))
            if not is_zero(dlt):
                out.append(Violation("peiffer_symmetric", (i, j), dlt))
    rec = reconstructed_L1(X)
    for i in range(X.n1):
        for j in range(X.n1):
            dlt = vec_sub(X.L1.structure[i][j], rec.structure[i][j])
            if not is_zero(dlt):
                out.append(Violation("reconstructed_bracket", (i, j), dlt))
    return _tag(out, "module")


def validate_crossed(X: CrossedModule) -> list[Violation]:
    """Union of both axiom systems; empty iff X is a crossed module."""
    return crossed_axioms_stored(X) + crossed_axioms_module(X)


# ---------------------------------------------------------------------------
# braided validation

def braided_axioms_standard(B: BraidedCrossedModule) -> list[Violation]:
    L0, L1 = B.lie0, B.lie1
    n0, n1 = B.n0, B.n1
    out = _tag(validate_lie_algebra(L0), "L0") + _tag(validate_lie_algebra(L1), "L1")
    e0 = [B.e0(i) for i in range(n0)]
    e1 = [B.e1(i) for i in range(n1)]
    d1 = [B.d(a) for a in e1]
    for i in range(n1):
        for j in range(n1):
            dlt = vec_sub(B.d(L1.structure[i][j]), L0.bracket(d1[i], d1[j]))
            if not is_zero(dlt):
                out.append(Violation("homomorphism", (i, j), dlt))
    for i in range(n0):
        for j in range(n0):
            dlt = vec_sub(B.d(B.braiding[i][j]), L0.structure[i][j])
            if not is_zero(dlt):
                out.append(Violation("boundary_of_braiding", (i, j), dlt))
    for i in range(n1):
        for j in range(n1):
            dlt = vec_sub(B.brace(d1[i], d1[j]), L1.structure[i][j])
            if not is_zero(dlt):
                out.append(Violation("braiding_of_boundaries", (i, j), dlt))
    out += _antisymmetric_on_image(B, e0, d1)
    for i in range(n0):
        for j in range(n0):
            for k in range(n0):
                s = vec_add(vec_add(B.brace(e0[i], L0.structure[j][k]), B.brace(e0[k], L0.structure[i][j])),
                            B.brace(e0[j], L0.structure[k][i]))
                if not is_zero(s):
                    out.append(Violation("braiding_cyclic", (i, j, k), s))
    return _tag(out, "standard")


def _antisymmetric_on_image(B, e0, d1) -> list[Violation]:
    out = []
    for a, da in enumerate(d1):
        for i, x in enumerate(e0):
            s = vec_add(B.brace(da, x), B.brace(x, da))
            if not is_zero(s):
                out.append(Violation("braiding_antisymmetric_on_image", (a, i), s))
    return out


def braided_axioms_alternative(B: BraidedCrossedModule) -> list[Violation]:
    """``{d a, x} + {x, d a} = 0``, ``d{x,x} = 0`` (polarized), the d-twisted Jacobi identity, and stored
    brackets equal to the ones derived from the braiding."""
    n0, n1 = B.n0, B.n1
    e0 = [B.e0(i) for i in range(n0)]
    d1 = [B.d(B.e1(i)) for i in range(n1)]
    out = _antisymmetric_on_image(B, e0, d1)
    br = B.braiding
    # d{x,x} is quadratic in x: vanishing for all x <=> diagonal and
    # symmetrized off-diagonal terms vanish on the basis
    for i in range(n0):
        v = B.d(br[i][i])
        if not is_zero(v):
            out.append(Violation("boundary_of_diagonal", (i, i), v))
        for j in range(i + 1, n0):
            v = B.d(vec_add(br[i][j], br[j][i]))
            if not is_zero(v):
                out.append(Violation("boundary_of_diagonal", (i, j), v))
    dbr = [[B.d(br[i][j]) for j in range(n0)] for i in range(n0)]
    for u in range(n0):
        for v in range(n0):
            for w in range(n0):
                s = vec_add(vec_add(B.brace(e0[u], dbr[v][w]), B.brace(e0[w], dbr[u][v])),
                            B.brace(e0[v], dbr[w][u]))
                if not is_zero(s):
                    out.append(Violation("twisted_jacobi", (u, v, w), s))
    if B.L0 is not None:
        der = B.derived_L0()
        for i in range(n0):
            for j in range(n0):
                dlt = vec_sub(B.L0.structure[i][j], der.structure[i][j])
                if not is_zero(dlt):
                    out.append(Violation("L0_bracket_definition", (i, j), dlt))
    if B.L1 is not None:
        der = B.derived_L1()
        for i in range(n1):
            for j in range(n1):
                dlt = vec_sub(B.L1.structure[i][j], der.structure[i][j])
                if not is_zero(dlt):
                    out.append(Violation("L1_bracket_definition", (i, j), dlt))
    return _tag(out, "alternative")


def validate_braided(B: BraidedCrossedModule) -> list[Violation]:
    """Both braided axiom systems; the ``system`` field says which one failed."""
    return braided_axioms_standard(B) + braided_axioms_alternative(B)


def underlying_crossed(B: BraidedCrossedModule) -> CrossedModule:
    """The crossed module with action ``x.a = {x, d a}``."""
    vs = validate_braided(B)
    if vs:
        raise InvalidInput("not a braided crossed module", vs)
    n0, n1 = B.n0, B.n1
    act = tuple(tuple(B.brace(B.e0(i), B.d(B.e1(j))) for j in range(n1)) for i in range(n0))
    return CrossedModule(B.lie0, B.lie1, B.boundary, act)


# ---------------------------------------------------------------------------
# homotopy invariants

@dataclass(frozen=True)
class HomotopyInvariants:
    """pi0 = Coker d with its projection, pi1 = Ker d, and the induced action."""

    pi0: LieAlgebra
    cl: Matrix
    pi0_quotient: QuotientSpace
    image: Subspace
    pi1: Subspace
    induced_action: LieModule

    def pi1_inclusion(self) -> Matrix:
        return self.pi1.basis_matrix()


def homotopy(X: CrossedModule) -> HomotopyInvariants:
    F = X.field
    im = image(X.boundary)
    pi0, cl = quotient_lie(X.L0, im)
    Q = quotient(X.n0, im)
    pi1 = kernel(X.boundary)
    reps = Q.representatives()
    # Im d . Ker d = 0 makes the action independent of representatives
    for b in im.basis:
        for c in pi1.basis:
            v = X.act(b, c)
            if not is_zero(v):
                raise InvalidInput(f"Im d does not kill Ker d: {b} . {c} = {v}")
    act = []
    for r in reps:
        row = []
        for c in pi1.basis:
            coords = pi1.coordinates(X.act(r, c))
            if coords is None:
                raise InvalidInput("L0 action does not preserve Ker d")
            row.append(coords)
        act.append(tuple(row))
    mod = LieModule(pi0, pi1.dim, tuple(act), LieAlgebra(F, tuple(f"k{i}" for i in range(pi1.dim)),
                                                         tuple(tuple(zero_vector(F, pi1.dim)
                                                                     for _ in range(pi1.dim))
                                                               for _ in range(pi1.dim))))
    return HomotopyInvariants(pi0, cl, Q, im, pi1, mod)
