"""Chevalley-Eilenberg cohomology in low degrees and the exact sequence

    0 -> H^1(pi0, pi1) -f-> pi0(Z) -omega-> Z_{pi1}(pi0) -g-> H^2(pi0, pi1)

attached to a crossed module.

Cochains are alternating. An n-cochain is stored on sorted index tuples
``i_1 < ... < i_n`` in lexicographic order, each carrying ``dim A``
coordinates, so C^1 coordinates are a column-major ``dim A x dim g`` matrix.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .centre import (
    CentreElement,
    centre_carrier,
    centre_homotopy,
    delta,
    ze_violations,
    ElementNotInCentre,
)
from .crossed import CrossedModule, homotopy
from .exact_linalg import (
    FieldSpec,
    Matrix,
    QuotientSpace,
    Subspace,
    complement,
    image,
    is_zero,
    kernel,
    lin_comb,
    quotient,
    solve,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vector,
)
from .exactness import ExactnessReport, exactness_report
from .lie import LieAlgebra, LieModule, restricted_centre

__all__ = [
    "NotACocycle",
    "NotInRestrictedCentre",
    "NoPreimage",
    "CochainSpace",
    "CohomologyGroup",
    "ObstructionData",
    "ce_differential",
    "cohomology",
    "pi1_centre_iso",
    "map_f",
    "map_omega",
    "obstruction_g",
    "obstruction_sequence_report",
]


class NotACocycle(ValueError):
    pass


class NotInRestrictedCentre(ValueError):
    pass


class NoPreimage(RuntimeError):
    pass


@dataclass(frozen=True)
class CochainSpace:
    g: LieAlgebra
    A: LieModule
    degree: int

    @property
    def tuples(self) -> list[tuple]:
        return list(itertools.combinations(range(self.g.dim), self.degree))

    @property
    def dim(self) -> int:
        return len(self.tuples) * self.A.dim

    def index(self) -> dict:
        return {t: k for k, t in enumerate(self.tuples)}

    def value(self, omega: Sequence, args: Sequence[int]) -> tuple:
        """omega on basis indices in any order (alternating)."""
        m = self.A.dim
        F = self.g.field
        if len(set(args)) < len(args):
            return zero_vector(F, m)
        order = sorted(range(len(args)), key=lambda k: args[k])
        sign = _perm_sign(order)
        k = self.index()[tuple(sorted(args))]
        v = tuple(omega[k * m:(k + 1) * m])
        return v if sign > 0 else vec_scale(F(-1), v)

    def evaluate(self, omega: Sequence, vectors: Sequence[Sequence]) -> tuple:
        """omega on arbitrary vectors, by multilinear expansion."""
        F, m = self.g.field, self.A.dim
        acc = zero_vector(F, m)
        supports = [[(i, c) for i, c in enumerate(v) if c] for v in vectors]
        for combo in itertools.product(*supports):
            idx = [i for i, _ in combo]
            coef = F.one
            for _, c in combo:
                coef = coef * c
            val = self.value(omega, idx)
            if not is_zero(val):
                acc = vec_add(acc, vec_scale(coef, val))
        return acc

    def from_function(self, fn) -> tuple:
        """Cochain whose value on each sorted tuple is ``fn(tuple)``."""
        out = []
        for t in self.tuples:
            out.extend(fn(t))
        return tuple(out)


def _perm_sign(order: Sequence[int]) -> int:
    sign = 1
    seen = list(order)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def _apply_differential(src: CochainSpace, omega: Sequence) -> tuple:
    """(d omega)(x_0..x_n) = sum_i (-1)^i x_i.omega(..^x_i..)
                             + sum_{i<j} (-1)^{i+j} omega([x_i,x_j], ..^x_i..^x_j..)"""
    g, A = src.g, src.A
    F = g.field
    n = src.degree
    tgt = CochainSpace(g, A, n + 1)
    e = g.basis()
    out = []
    for tup in tgt.tuples:
        acc = zero_vector(F, A.dim)
        for i in range(n + 1):
            rest = tup[:i] + tup[i + 1:]
            v = A.act(e[tup[i]], src.value(omega, rest))
            acc = vec_add(acc, v) if i % 2 == 0 else vec_sub(acc, v)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                br = g.structure[tup[i]][tup[j]]
                if is_zero(br):
                    continue
                rest = [e[k] for pos, k in enumerate(tup) if pos not in (i, j)]
                v = src.evaluate(omega, [br] + rest)
                acc = vec_add(acc, v) if (i + j) % 2 == 0 else vec_sub(acc, v)
        out.extend(acc)
    return tuple(out)


@lru_cache(maxsize=512)
def ce_differential(g: LieAlgebra, A: LieModule, n: int) -> Matrix:
    """Matrix of d^n : C^n(g, A) -> C^{n+1}(g, A)."""
    if A.algebra != g:
        raise ValueError("module is over a different algebra")
    src = CochainSpace(g, A, n)
    tgt = CochainSpace(g, A, n + 1)
    F = g.field
    cols = [_apply_differential(src, unit_vector(F, src.dim, k)) for k in range(src.dim)]
    if not cols:
        return Matrix.zeros(F, tgt.dim, 0)
    return Matrix.from_columns(F, cols, nrows=tgt.dim)


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    cochains: CochainSpace
    cocycles: Subspace
    coboundaries: Subspace
    quotient: QuotientSpace     # in cocycle-basis coordinates

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def class_of(self, omega: Sequence) -> tuple:
        c = self.cocycles.coordinates(omega)
        if c is None:
            raise NotACocycle("cochain is not a cocycle")
        return self.quotient.project(c)

    def representative(self, cls: Sequence) -> tuple:
        return self.cocycles.vector(self.quotient.lift(cls))

    def representatives(self) -> list[tuple]:
        F = self.cocycles.field
        return [self.representative(unit_vector(F, self.dim, k)) for k in range(self.dim)]


def cohomology(g: LieAlgebra, A: LieModule, n: int) -> CohomologyGroup:
    if n < 0:
        raise ValueError("negative degree")
    F = g.field
    C = CochainSpace(g, A, n)
    Z = kernel(ce_differential(g, A, n))
    if n == 0:
        B = Subspace.zero(F, C.dim)
    else:
        B = image(ce_differential(g, A, n - 1))
    coords = [Z.coordinates(b) for b in B.basis]
    if any(c is None for c in coords):
        raise AssertionError("coboundaries are not cocycles: d o d != 0")
    Bz = Subspace.span(F, Z.dim, coords)
    return CohomologyGroup(n, C, Z, B, quotient(Z.dim, Bz))


# ---------------------------------------------------------------------------
# the crossed-module side

@dataclass(frozen=True)
class _Setup:
    X: CrossedModule
    pi0: LieAlgebra
    module: LieModule           # pi1 as a pi0-module
    cl: Matrix                  # L0 -> pi0
    section: Matrix             # pi0 -> L0
    incl: Matrix                # pi1 -> L1
    pi1: Subspace               # Ker d in L1
    im: Subspace                # Im d in L0
    restricted: Subspace        # Z_{pi1}(pi0) in pi0 coordinates


@lru_cache(maxsize=256)
def _setup(X: CrossedModule) -> _Setup:
    h = homotopy(X)
    _, _, ZK = restricted_centre(h.pi0, h.induced_action)
    return _Setup(X, h.pi0, h.induced_action, h.cl, h.pi0_quotient.section,
                  h.pi1.basis_matrix(), h.pi1, h.image, ZK)


def _c1_matrix(S: _Setup, phi: Sequence) -> Matrix:
    """C^1 coordinates -> matrix pi0 -> pi1 (column-major)."""
    F = S.X.field
    m, n = S.module.dim, S.pi0.dim
    cols = [tuple(phi[j * m:(j + 1) * m]) for j in range(n)]
    return Matrix.from_columns(F, cols, nrows=m) if cols else Matrix.zeros(F, m, 0)


def _c1_vector(M: Matrix) -> tuple:
    out = []
    for j in range(M.ncols):
        out.extend(M.column(j))
    return tuple(out)


@dataclass(frozen=True)
class Pi1Iso:
    ker_delta: Subspace
    h0_in_L1: Subspace
    h0: CohomologyGroup

    @property
    def bijective(self) -> bool:
        return self.ker_delta == self.h0_in_L1


def pi1_centre_iso(X: CrossedModule) -> Pi1Iso:
    """Ker delta versus H^0(pi0, pi1), both inside L1 via the identity of L1."""
    S = _setup(X)
    H0 = cohomology(S.pi0, S.module, 0)
    h0_L1 = Subspace.span(X.field, X.n1, [S.incl.apply(z) for z in H0.cocycles.basis])
    return Pi1Iso(centre_homotopy(X).pi1, h0_L1, H0)


def lift_cochain(X: CrossedModule, phi: Sequence) -> Matrix:
    """phi~ = incl o phi o cl : L0 -> L1."""
    S = _setup(X)
    return S.incl @ _c1_matrix(S, phi) @ S.cl


def map_f(X: CrossedModule, phi: Sequence) -> tuple:
    """Class of ``(0, phi~)`` in pi0(Z) for a 1-cocycle ``phi`` on pi0 with values in pi1."""
    S = _setup(X)
    F = X.field
    d1 = ce_differential(S.pi0, S.module, 1)
    if not is_zero(d1.apply(phi)):
        raise NotACocycle("phi is not a 1-cocycle")
    p = CentreElement(zero_vector(F, X.n0), lift_cochain(X, phi))
    vs = ze_violations(X, p)
    if vs:
        raise AssertionError(f"(0, phi~) violates {vs[0].kind}")
    coords = centre_carrier(X).coordinates(p)
    return centre_homotopy(X).pi0.project(coords)


def map_omega(X: CrossedModule, p: CentreElement) -> tuple:
    """``cl(x)`` for ``(x, xi)`` in Z0, as pi0 coordinates; lies in Z_{pi1}(pi0)."""
    if ze_violations(X, p):
        raise ElementNotInCentre("omega is only defined on Z0")
    S = _setup(X)
    v = S.cl.apply(p.x)
    if not S.restricted.contains(v):
        raise AssertionError("cl(x) is not in Z_{pi1}(pi0)")
    return v


@dataclass(frozen=True)
class ObstructionData:
    x: tuple
    psi: Matrix                 # L0 -> L1
    theta_bar: tuple            # theta_bar[s][t] in L1 on basis vectors of L0
    theta_tilde: tuple          # C^2(pi0, pi1) coordinates
    theta_class: tuple          # H^2 coordinates
    checks: dict


def partial_lift(X: CrossedModule, x: Sequence, reverse: bool = False) -> Matrix:
    """A linear psi with ``d psi(t) = [x, t]`` and ``psi(d a) = x.a``.

    psi is fixed on a coordinate complement T of Im d (chosen by
    :func:`complement`) through :func:`solve`, and on Im d by
    ``psi(d a) = x.a``.
    """
    S = _setup(X)
    F = X.field
    for c in S.pi1.basis:
        if not is_zero(X.act(x, c)):
            raise NotInRestrictedCentre("x does not annihilate pi1")
    T = complement(S.im, reverse=reverse)
    basis, values = [], []
    for t in T.basis:
        a = solve(X.boundary, X.bracket0(x, t))
        if a is None:
            raise NoPreimage(f"[x, {t}] is not in Im d")
        basis.append(t)
        values.append(a)
    for b in S.im.basis:
        a = solve(X.boundary, b)
        basis.append(b)
        values.append(X.act(x, a))
    if not basis:
        return Matrix.zeros(F, X.n1, 0)
    W = Matrix.from_columns(F, basis, nrows=X.n0)
    V = Matrix.from_columns(F, values, nrows=X.n1)
    cols = []
    for j in range(X.n0):
        w = solve(W, X.e0(j))
        cols.append(V.apply(w))
    return Matrix.from_columns(F, cols, nrows=X.n1)


def obstruction_g(X: CrossedModule, x: Sequence, psi: Matrix | None = None, reverse: bool = False) -> ObstructionData:
    """The H^2 class obstructing a lift of ``x`` to Z0.

    Requires ``cl(x)`` in Z_{pi1}(pi0). ``psi`` may be supplied (it must satisfy
    ZE1 and ZE2); otherwise one is built with :func:`partial_lift`.
    """
    S = _setup(X)
    F = X.field
    x = tuple(F(a) for a in x)
    if not S.restricted.contains(S.cl.apply(x)):
        raise NotInRestrictedCentre("cl(x) is not in Z_{pi1}(pi0)")
    if psi is None:
        psi = partial_lift(X, x, reverse=reverse)
    lift = CentreElement(x, psi)
    bad = ze_violations(X, lift, which=("ZE1", "ZE2"))
    if bad:
        raise ValueError(f"psi violates {bad[0].kind} at {bad[0].indices}")
    n0 = X.n0
    e = [X.e0(i) for i in range(n0)]

    def tb(s, t):
        return vec_sub(vec_sub(X.act(s, psi.apply(t)), X.act(t, psi.apply(s))),
                       psi.apply(X.bracket0(s, t)))

    table = [[tb(e[s], e[t]) for t in range(n0)] for s in range(n0)]
    alternating = all(is_zero(vec_add(table[s][t], table[t][s])) for s in range(n0) for t in range(n0))
    in_pi1 = all(is_zero(X.d(table[s][t])) for s in range(n0) for t in range(n0))
    kills_image = all(is_zero(tb(e[s], X.d(X.e1(a)))) for s in range(n0) for a in range(X.n1))

    C2 = CochainSpace(S.pi0, S.module, 2)
    reps = S.section.columns()

    def theta_tilde(pair):
        i, j = pair
        v = tb(reps[i], reps[j])
        c = S.pi1.coordinates(v)
        if c is None:
            raise AssertionError("theta_bar leaves pi1")
        return c

    tt = C2.from_function(theta_tilde) if in_pi1 else None
    H2 = cohomology(S.pi0, S.module, 2)
    cocycle = tt is not None and is_zero(ce_differential(S.pi0, S.module, 2).apply(tt))
    cls = H2.class_of(tt) if cocycle else None
    checks = {"alternating": alternating, "in_pi1": in_pi1, "kills_image": kills_image, "cocycle": cocycle}
    return ObstructionData(x, psi, tuple(tuple(r) for r in table), tt, cls, checks)


def _restricted_reps(S: _Setup) -> list[tuple]:
    return [S.section.apply(v) for v in S.restricted.basis]


def g_matrix(X: CrossedModule, reverse: bool = False) -> Matrix:
    """g : Z_{pi1}(pi0) -> H^2 on the canonical basis of Z_{pi1}(pi0)."""
    S = _setup(X)
    H2 = cohomology(S.pi0, S.module, 2)
    cols = [obstruction_g(X, x, reverse=reverse).theta_class for x in _restricted_reps(S)]
    return Matrix.from_columns(X.field, cols, nrows=H2.dim) if cols else Matrix.zeros(X.field, H2.dim, 0)


def obstruction_sequence_report(X: CrossedModule) -> ExactnessReport:
    """Dims, ranks and defects of ``0 -> H^1 -> pi0(Z) -> Z_{pi1}(pi0) -> H^2``."""
    S = _setup(X)
    F = X.field
    Z = centre_carrier(X)
    ch = centre_homotopy(X)
    H1 = cohomology(S.pi0, S.module, 1)
    H2 = cohomology(S.pi0, S.module, 2)

    fcols = [map_f(X, r) for r in H1.representatives()]
    fm = Matrix.from_columns(F, fcols, nrows=ch.pi0.dim) if fcols else Matrix.zeros(F, ch.pi0.dim, 0)
    wcols = []
    for r in ch.pi0.representatives():
        v = map_omega(X, Z.element(r))
        wcols.append(S.restricted.coordinates(v))
    wm = Matrix.from_columns(F, wcols, nrows=S.restricted.dim) if wcols \
        else Matrix.zeros(F, S.restricted.dim, 0)
    gm = g_matrix(X)
    names = ["H1(pi0,pi1)", "pi0(Z)", "Z_pi1(pi0)", "H2(pi0,pi1)"]
    dims = [H1.dim, ch.pi0.dim, S.restricted.dim, H2.dim]
    rep = exactness_report(names, dims, [("f", fm), ("omega", wm), ("g", gm)],
                           left_zero=True, right_zero=False)
    return rep
