"""Guin's nonabelian cohomology of a crossed module in degrees 0 and 1, and its
comparison with the centre.

Der_{L0}(L0, L1) consists of pairs ``(g, gamma)`` satisfying ZE1 and ZE3, so it
shares coordinates with the centre carrier. H^1(L0, L*) is Der modulo the
ideal I spanned by ``(d a + c, eta_a)`` with ``c`` central in L0. By default
``eta_a(t) = -t.a`` (the same sign as delta); ``strict_signs=True`` uses
``eta_a(t) = t.a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .centre import (
    CentreElement,
    ambient_dim,
    centre_carrier,
    centre_homotopy,
    decode,
    delta,
    delta_matrix,
    encode,
    system_matrix,
    z0_bracket,
    ze_violations,
)
from .crossed import CrossedModule
from .exact_linalg import (
    Matrix,
    QuotientSpace,
    Subspace,
    kernel,
    quotient,
    vec_scale,
    vec_sub,
)
from .lie import restricted_centre, LieModule

__all__ = [
    "ElementNotInCarrier",
    "DerivationPair",
    "GuinH1",
    "derivation_carrier",
    "guin_bracket",
    "ideal_I",
    "guin_h",
    "verify_guin_diagram",
]

# (g, gamma) uses the same representation as a centre element
DerivationPair = CentreElement


class ElementNotInCarrier(ValueError):
    pass


@lru_cache(maxsize=256)
def derivation_carrier(X: CrossedModule) -> Subspace:
    return kernel(system_matrix(X, which=("ZE1", "ZE3")))


def _require(X: CrossedModule, *ps: DerivationPair) -> None:
    for p in ps:
        vs = ze_violations(X, p, which=("ZE1", "ZE3"))
        if vs:
            raise ElementNotInCarrier(f"pair violates {vs[0].kind} at {vs[0].indices}")


def guin_bracket(X: CrossedModule, p: DerivationPair, q: DerivationPair) -> DerivationPair:
    """``([g, g'], t -> gamma([g', t]) - gamma'([g, t]))``."""
    _require(X, p, q)
    F = X.field
    cols = []
    for j in range(X.n0):
        t = X.e0(j)
        cols.append(vec_sub(p.apply(X.bracket0(q.x, t)), q.apply(X.bracket0(p.x, t))))
    return CentreElement(X.bracket0(p.x, q.x), Matrix.from_columns(F, cols, nrows=X.n1))


def _eta(X: CrossedModule, a: Sequence, strict_signs: bool) -> CentreElement:
    F = X.field
    cols = [X.act(X.e0(j), a) for j in range(X.n0)]
    if not strict_signs:
        cols = [vec_scale(F(-1), c) for c in cols]
    return CentreElement(X.d(a), Matrix.from_columns(F, cols, nrows=X.n1))


def ideal_I(X: CrossedModule, strict_signs: bool = False) -> Subspace:
    """Span of ``(d a, eta_a)`` over a in L1 and ``(c, 0)`` over c in Z(L0)."""
    F = X.field
    N = ambient_dim(X)
    vecs = [encode(X, _eta(X, X.e1(k), strict_signs)) for k in range(X.n1)]
    Zc, _, _ = restricted_centre(X.L0, LieModule.trivial(X.L0, 0))
    for c in Zc.basis:
        vecs.append(tuple(c) + (F.zero,) * (N - X.n0))
    return Subspace.span(F, N, vecs)


@dataclass(frozen=True)
class GuinH1:
    carrier: Subspace
    ideal_I: Subspace
    quotient: QuotientSpace        # carrier coordinates modulo I (intersected with the carrier)
    ideal_in_carrier: bool

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def class_of(self, v: Sequence) -> tuple:
        c = self.carrier.coordinates(v)
        if c is None:
            raise ElementNotInCarrier("vector is not in Der")
        return self.quotient.project(c)


def guin_h(X: CrossedModule, strict_signs: bool = False) -> tuple[Subspace, GuinH1]:
    """``H^0(L0, L*)`` inside L1 and ``H^1(L0, L*) = Der / I``."""
    F = X.field
    # H^0 = {a : d a = 0, x.a = 0 for all x}
    eqs = list(X.boundary.rows)
    for i in range(X.n0):
        M = Matrix.from_columns(F, [X.action[i][k] for k in range(X.n1)], nrows=X.n1) if X.n1 \
            else Matrix.zeros(F, 0, 0)
        eqs.extend(M.rows)
    H0 = kernel(Matrix.from_rows(F, eqs, ncols=X.n1))
    D = derivation_carrier(X)
    I = ideal_I(X, strict_signs)
    inside = I.is_subspace_of(D)
    Ic = I.intersection(D)
    coords = [D.coordinates(v) for v in Ic.basis]
    Q = quotient(D.dim, Subspace.span(F, D.dim, coords))
    return H0, GuinH1(D, I, Q, inside)


@dataclass
class GuinReport:
    dims: dict
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"dims": dict(self.dims), "checks": dict(self.checks), "passed": self.passed}


def verify_guin_diagram(X: CrossedModule, strict_signs: bool = False) -> GuinReport:
    """Both rows, the vertical maps, and the compatibility of the two brackets.

    Top row:    0 -> H^0(L0, L*) -> L1 -delta-> Der -> H^1(L0, L*) -> 0
    Bottom row: 0 -> pi1(Z)     -> L1 -delta-> Z0  -> pi0(Z)      -> 0
    """
    F = X.field
    Z = centre_carrier(X)
    D = derivation_carrier(X)
    ch = centre_homotopy(X)
    H0, H1 = guin_h(X, strict_signs)
    N = ambient_dim(X)
    im_delta = Subspace.span(F, N, [encode(X, delta(X, X.e1(k))) for k in range(X.n1)])

    checks = {}
    checks["carrier_contains_centre"] = Z.space.is_subspace_of(D)
    agree = True
    for p in Z.elements():
        for q in Z.elements():
            if guin_bracket(X, p, q) != z0_bracket(X, p, q):
                agree = False
    checks["bracket_agrees_on_centre"] = agree
    checks["ideal_in_carrier"] = H1.ideal_in_carrier
    closed = True
    for b in D.basis:
        for i in H1.ideal_I.basis:
            p, q = decode(X, b), decode(X, i)
            try:
                r = guin_bracket(X, p, q)
            except ElementNotInCarrier:
                closed = False
                continue
            if not H1.ideal_I.contains(encode(X, r)):
                closed = False
    checks["ideal_is_ideal"] = closed
    checks["H0_equals_H0_pi"] = H0 == _h0_pi(X)
    # top row
    checks["top_exact_at_L1"] = H0 == ch.pi1
    checks["top_exact_at_Der"] = im_delta == H1.ideal_I
    # bottom row
    checks["bottom_exact_at_L1"] = ch.pi1 == kernel(delta_matrix(X))
    checks["bottom_exact_at_Z0"] = Subspace.span(F, N, [Z.space.vector(v) for v in ch.image.basis]) == im_delta
    # vertical maps
    checks["pi1Z_iso_H0"] = ch.pi1 == H0
    checks["left_square_commutes"] = im_delta.is_subspace_of(D) and im_delta.is_subspace_of(Z.space)
    # pi0(Z) -> H^1 induced by Z0 inside Der; needs Im delta inside I
    checks["right_square_well_defined"] = im_delta.is_subspace_of(H1.ideal_I)
    reps = [Z.space.vector(r) for r in ch.pi0.representatives()]
    cols = [H1.class_of(v) for v in reps]
    m = Matrix.from_columns(F, cols, nrows=H1.dim) if cols else Matrix.zeros(F, H1.dim, 0)
    checks["pi0Z_into_H1_injective"] = m.rank() == ch.pi0.dim

    dims = {"Der": D.dim, "I": H1.ideal_I.dim, "H0": H0.dim, "H1": H1.dim,
            "Z0": Z.dim, "pi0Z": ch.pi0.dim, "pi1Z": ch.pi1.dim}
    return GuinReport(dims, checks)


def _h0_pi(X: CrossedModule) -> Subspace:
    from .cohomology import pi1_centre_iso
    return pi1_centre_iso(X).h0_in_L1
