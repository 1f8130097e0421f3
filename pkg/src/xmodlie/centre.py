"""The centre of a crossed module of Lie algebras.

A centre element is a pair ``(x, xi)`` with ``x`` in L0 and ``xi : L0 -> L1``
linear, subject to

* ZE1: ``d xi(t) = [x, t]``
* ZE2: ``xi(d a) = x . a``
* ZE3: ``xi([s, t]) = s . xi(t) - t . xi(s)``

Coordinates on ``L0 (+) Hom(L0, L1)`` put the ``n0`` coordinates of ``x``
first, followed by the entries of ``xi`` column by column (column ``j`` is
``xi(t_j)``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .crossed import BraidedCrossedModule, CrossedModule, homotopy
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
    vec_scale,
    vec_sub,
    zero_vector,
)
from .exactness import ExactnessReport, exactness_report
from .lie import LieAlgebra, Violation

__all__ = [
    "ElementNotInCentre",
    "CentreElement",
    "CentreCarrier",
    "CentreBCM",
    "ze_violations",
    "centre_carrier",
    "delta",
    "braiding",
    "z0_bracket",
    "bracket_forms",
    "centre_algebra",
    "centre_bcm",
    "action_on_centre",
    "action_and_quotient",
    "six_term_report",
]


class ElementNotInCentre(ValueError):
    pass


@dataclass(frozen=True)
class CentreElement:
    """``x`` in L0 and ``xi`` as an n1 x n0 matrix (columns are ``xi(t_j)``)."""

    x: tuple
    xi: Matrix

    def apply(self, t: Sequence) -> tuple:
        return self.xi.apply(t)

    def __add__(self, other: "CentreElement") -> "CentreElement":
        return CentreElement(vec_add(self.x, other.x), self.xi + other.xi)

    def __sub__(self, other: "CentreElement") -> "CentreElement":
        return CentreElement(vec_sub(self.x, other.x), self.xi - other.xi)

    def scale(self, c) -> "CentreElement":
        return CentreElement(vec_scale(self.xi.field(c), self.x), self.xi.scale(c))


def ambient_dim(X: CrossedModule) -> int:
    return X.n0 + X.n0 * X.n1


def encode(X: CrossedModule, p: CentreElement) -> tuple:
    out = list(p.x)
    for j in range(X.n0):
        out.extend(p.xi.column(j))
    return tuple(out)


def decode(X: CrossedModule, v: Sequence) -> CentreElement:
    n0, n1 = X.n0, X.n1
    if len(v) != ambient_dim(X):
        raise ValueError("coordinate vector has the wrong length")
    x = tuple(v[:n0])
    cols = [tuple(v[n0 + j * n1: n0 + (j + 1) * n1]) for j in range(n0)]
    return CentreElement(x, Matrix.from_columns(X.field, cols, nrows=n1))


def element(X: CrossedModule, x: Sequence, xi_columns: Sequence[Sequence]) -> CentreElement:
    """Convenience constructor from ``x`` and the list ``[xi(t_0), xi(t_1), ...]``."""
    F = X.field
    return CentreElement(tuple(F(a) for a in x), Matrix.from_columns(F, xi_columns, nrows=X.n1))


def _residual_blocks(X: CrossedModule, x, xi: Matrix) -> dict[str, list]:
    """Per-equation defects of ZE1, ZE2 and ZE3 (ZE3 only for s < t)."""
    n0, n1 = X.n0, X.n1
    cols = xi.columns()
    ze1, ze2, ze3 = [], [], []
    for j in range(n0):
        ze1.append(((j,), vec_sub(X.d(cols[j]), X.bracket0(x, X.e0(j)))))
    for k in range(n1):
        ze2.append(((k,), vec_sub(xi.apply(X.boundary.column(k)), X.act(x, X.e1(k)))))
    for s in range(n0):
        for t in range(s + 1, n0):
            lhs = xi.apply(X.L0.structure[s][t])
            rhs = vec_sub(X.act(X.e0(s), cols[t]), X.act(X.e0(t), cols[s]))
            ze3.append(((s, t), vec_sub(lhs, rhs)))
    return {"ZE1": ze1, "ZE2": ze2, "ZE3": ze3}


def ze_violations(X: CrossedModule, p: CentreElement, which=("ZE1", "ZE2", "ZE3")) -> list[Violation]:
    blocks = _residual_blocks(X, p.x, p.xi)
    return [Violation(k, idx, d) for k in which for idx, d in blocks[k] if not is_zero(d)]


def system_matrix(X: CrossedModule, which=("ZE1", "ZE2", "ZE3")) -> Matrix:
    """Matrix of the linear map ``(x, xi) -> stacked residuals of the chosen conditions``."""
    F, N = X.field, ambient_dim(X)
    cols = []
    for k in range(N):
        p = decode(X, unit_vector(F, N, k))
        blocks = _residual_blocks(X, p.x, p.xi)
        col = []
        for name in which:
            for _, d in blocks[name]:
                col.extend(d)
        cols.append(tuple(col))
    nrows = len(cols[0]) if cols else 0
    return Matrix.from_columns(F, cols, nrows=nrows)


@dataclass(frozen=True)
class CentreCarrier:
    """The subspace Z0 of ``L0 (+) Hom(L0, L1)`` cut out by ZE1-ZE3."""

    X: CrossedModule
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def elements(self) -> list[CentreElement]:
        return [decode(self.X, b) for b in self.space.basis]

    def element(self, coords: Sequence) -> CentreElement:
        return decode(self.X, self.space.vector(coords))

    def coordinates(self, p: CentreElement) -> tuple:
        c = self.space.coordinates(encode(self.X, p))
        if c is None:
            raise ElementNotInCentre(f"{p} is not in Z0")
        return c

    def contains(self, p: CentreElement) -> bool:
        return self.space.contains(encode(self.X, p))


@lru_cache(maxsize=256)
def centre_carrier(X: CrossedModule) -> CentreCarrier:
    return CentreCarrier(X, kernel(system_matrix(X)))


def _require(X: CrossedModule, *ps: CentreElement) -> None:
    for p in ps:
        vs = ze_violations(X, p)
        if vs:
            raise ElementNotInCentre(f"element violates {vs[0].kind} at {vs[0].indices}")


def delta(X: CrossedModule, c: Sequence) -> CentreElement:
    """``(d c, t -> -t.c)``."""
    F = X.field
    c = tuple(F(a) for a in c)
    cols = [vec_scale(F(-1), X.act(X.e0(j), c)) for j in range(X.n0)]
    return CentreElement(X.d(c), Matrix.from_columns(F, cols, nrows=X.n1))


def braiding(X: CrossedModule, p: CentreElement, q: CentreElement) -> tuple:
    """``{(x, xi), (y, eta)} = xi(y)``."""
    _require(X, p, q)
    return p.apply(q.x)


def _bracket(X: CrossedModule, p: CentreElement, q: CentreElement) -> CentreElement:
    F = X.field
    xy = p.apply(q.x)
    cols = [vec_scale(F(-1), X.act(X.e0(j), xy)) for j in range(X.n0)]
    return CentreElement(X.bracket0(p.x, q.x), Matrix.from_columns(F, cols, nrows=X.n1))


def z0_bracket(X: CrossedModule, p: CentreElement, q: CentreElement) -> CentreElement:
    """``[(x, xi), (y, eta)] = ([x, y], t -> -t.xi(y))``."""
    _require(X, p, q)
    return _bracket(X, p, q)


def bracket_forms(X: CrossedModule, p: CentreElement, q: CentreElement) -> tuple[Matrix, Matrix, Matrix]:
    """The three maps ``t -> -t.xi(y)``, ``t -> xi([y,t]) - eta([x,t])`` and ``t -> t.eta(x)``.

    They coincide for centre elements.
    """
    F = X.field
    xi_y = p.apply(q.x)
    eta_x = q.apply(p.x)
    first, second, third = [], [], []
    for j in range(X.n0):
        t = X.e0(j)
        first.append(vec_scale(F(-1), X.act(t, xi_y)))
        second.append(vec_sub(p.apply(X.bracket0(q.x, t)), q.apply(X.bracket0(p.x, t))))
        third.append(X.act(t, eta_x))
    mk = lambda cols: Matrix.from_columns(F, cols, nrows=X.n1)
    return mk(first), mk(second), mk(third)


@lru_cache(maxsize=256)
def centre_algebra(X: CrossedModule) -> LieAlgebra:
    """Z0 as a Lie algebra on the canonical carrier basis."""
    Z = centre_carrier(X)
    els = Z.elements()
    c = []
    for p in els:
        row = []
        for q in els:
            r = _bracket(X, p, q)
            if not Z.contains(r):
                raise AssertionError("Z0 is not closed under the bracket")
            row.append(Z.coordinates(r))
        c.append(tuple(row))
    labels = tuple(f"z{i}" for i in range(Z.dim))
    return LieAlgebra(X.field, labels, tuple(c))


def delta_matrix(X: CrossedModule) -> Matrix:
    """delta : L1 -> Z0 in carrier coordinates (dim Z0 x n1)."""
    Z = centre_carrier(X)
    cols = [Z.coordinates(delta(X, X.e1(k))) for k in range(X.n1)]
    return Matrix.from_columns(X.field, cols, nrows=Z.dim)


def z0_matrix(X: CrossedModule) -> Matrix:
    """z0 : Z0 -> L0, ``(x, xi) -> x`` (n0 x dim Z0)."""
    Z = centre_carrier(X)
    return Matrix.from_columns(X.field, [p.x for p in Z.elements()], nrows=X.n0)


@dataclass(frozen=True)
class CentreBCM:
    X: CrossedModule
    carrier: CentreCarrier
    bcm: BraidedCrossedModule

    def decode(self, coords: Sequence) -> CentreElement:
        return self.carrier.element(coords)

    def encode(self, p: CentreElement) -> tuple:
        return self.carrier.coordinates(p)


def centre_bcm(X: CrossedModule) -> CentreBCM:
    """The braided crossed module ``delta : L1 -> Z0`` with ``{p, q} = xi_p(y_q)``."""
    Z = centre_carrier(X)
    els = Z.elements()
    br = tuple(tuple(p.apply(q.x) for q in els) for p in els)
    B = BraidedCrossedModule(delta_matrix(X), br, centre_algebra(X), X.L1)
    return CentreBCM(X, Z, B)


def action_on_centre(X: CrossedModule, y: Sequence, p: CentreElement) -> CentreElement:
    """``y.(x, xi) = ([y, x], t -> t.xi(y))``."""
    F = X.field
    y = tuple(F(a) for a in y)
    xy = p.apply(y)
    cols = [X.act(X.e0(j), xy) for j in range(X.n0)]
    return CentreElement(X.bracket0(y, p.x), Matrix.from_columns(F, cols, nrows=X.n1))


def action_and_quotient(X: CrossedModule) -> CrossedModule:
    """The crossed module ``z0 : Z0 -> L0`` (the cofibre of the centre inclusion)."""
    Z = centre_carrier(X)
    els = Z.elements()
    act = []
    for i in range(X.n0):
        y = X.e0(i)
        row = []
        for p in els:
            r = action_on_centre(X, y, p)
            if not Z.contains(r):
                raise AssertionError("L0 action leaves Z0")
            row.append(Z.coordinates(r))
        act.append(tuple(row))
    return CrossedModule(X.L0, centre_algebra(X), z0_matrix(X), tuple(act))


def _coords_matrix(F: FieldSpec, target: Subspace, vectors, nsrc: int) -> Matrix:
    cols = []
    for v in vectors:
        c = target.coordinates(v)
        if c is None:
            raise AssertionError("map does not land in the expected subspace")
        cols.append(c)
    return Matrix.from_columns(F, cols, nrows=target.dim) if cols else Matrix.zeros(F, target.dim, nsrc)


def _proj_matrix(F: FieldSpec, Q: QuotientSpace, vectors, nsrc: int) -> Matrix:
    cols = [Q.project(v) for v in vectors]
    return Matrix.from_columns(F, cols, nrows=Q.dim) if cols else Matrix.zeros(F, Q.dim, nsrc)


@dataclass(frozen=True)
class CentreHomotopy:
    """pi1 and pi0 of the centre, in carrier coordinates."""

    pi1: Subspace          # Ker delta in L1
    image: Subspace        # Im delta in Z0 coordinates
    pi0: QuotientSpace     # Z0 / Im delta


@lru_cache(maxsize=256)
def centre_homotopy(X: CrossedModule) -> CentreHomotopy:
    D = delta_matrix(X)
    im = image(D)
    return CentreHomotopy(kernel(D), im, quotient(D.nrows, im))


def six_term_report(X: CrossedModule) -> ExactnessReport:
    """``0 -> pi1 Z -> pi1 L -> pi1 L//Z -> pi0 Z -> pi0 L -> pi0 L//Z -> 0``."""
    F = X.field
    Z = centre_carrier(X)
    D = delta_matrix(X)
    z0 = z0_matrix(X)
    ch = centre_homotopy(X)
    hL = homotopy(X)
    ker_z0 = kernel(z0)
    q_cof = quotient(X.n0, image(z0))

    a1 = _coords_matrix(F, hL.pi1, ch.pi1.basis, ch.pi1.dim)
    a2 = _coords_matrix(F, ker_z0, [D.apply(c) for c in hL.pi1.basis], hL.pi1.dim)
    a3 = _proj_matrix(F, ch.pi0, ker_z0.basis, ker_z0.dim)
    a4 = _proj_matrix(F, hL.pi0_quotient, [z0.apply(r) for r in ch.pi0.representatives()], ch.pi0.dim)
    a5 = _proj_matrix(F, q_cof, hL.pi0_quotient.representatives(), hL.pi0_quotient.dim)

    names = ["pi1(Z)", "pi1(L)", "pi1(L//Z)", "pi0(Z)", "pi0(L)", "pi0(L//Z)"]
    dims = [ch.pi1.dim, hL.pi1.dim, ker_z0.dim, ch.pi0.dim, hL.pi0_quotient.dim, q_cof.dim]
    maps = [("incl", a1), ("delta", a2), ("connecting", a3), ("z0", a4), ("proj", a5)]
    rep = exactness_report(names, dims, maps, left_zero=True, right_zero=True)
    rep.extra["dim_Z0"] = Z.dim
    return rep
