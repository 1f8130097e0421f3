"""The strict Lie 2-algebra of a crossed module and its centre category.

Objects are elements of L0 and a morphism ``(x, a)`` goes from ``x`` to
``d a + x``. Laws are checked on basis-generated data only; every formula
involved is (bi)linear, so that suffices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .centre import (
    CentreElement,
    ElementNotInCentre,
    centre_carrier,
    delta,
    z0_bracket,
    ze_violations,
)
from .crossed import CrossedModule
from .exact_linalg import vec_add, vec_scale, vec_sub, zero_vector

__all__ = [
    "NonComposable",
    "CatMorphism",
    "LawReport",
    "identity_morphism",
    "compose",
    "scalar",
    "add_morphisms",
    "sub_morphisms",
    "bracket_morphisms",
    "tau",
    "tau_family",
    "basis_morphisms",
    "verify_category_laws",
    "verify_tau_laws",
    "verify_centre_category",
]


class NonComposable(ValueError):
    pass


@dataclass(frozen=True)
class CatMorphism:
    source: tuple
    label: tuple
    target: tuple

    def __repr__(self) -> str:
        return f"CatMorphism({self.source} --{self.label}--> {self.target})"


def morphism(X: CrossedModule, source: Sequence, label: Sequence) -> CatMorphism:
    F = X.field
    x = tuple(F(v) for v in source)
    a = tuple(F(v) for v in label)
    return CatMorphism(x, a, vec_add(X.d(a), x))


def identity_morphism(X: CrossedModule, x: Sequence) -> CatMorphism:
    return morphism(X, x, zero_vector(X.field, X.n1))


def compose(X: CrossedModule, f: CatMorphism, g: CatMorphism) -> CatMorphism:
    """``g`` after ``f``; labels add."""
    if f.target != g.source:
        raise NonComposable(f"target {f.target} differs from source {g.source}")
    return morphism(X, f.source, vec_add(f.label, g.label))


def scalar(X: CrossedModule, k, f: CatMorphism) -> CatMorphism:
    k = X.field(k)
    return morphism(X, vec_scale(k, f.source), vec_scale(k, f.label))


def add_morphisms(X: CrossedModule, f: CatMorphism, g: CatMorphism) -> CatMorphism:
    return morphism(X, vec_add(f.source, g.source), vec_add(f.label, g.label))


def sub_morphisms(X: CrossedModule, f: CatMorphism, g: CatMorphism) -> CatMorphism:
    return morphism(X, vec_sub(f.source, g.source), vec_sub(f.label, g.label))


def bracket_morphisms(X: CrossedModule, f: CatMorphism, g: CatMorphism) -> CatMorphism:
    """``[(x, a), (x', a')] = ([x, x'], d(a).a' - x'.a + x.a')``."""
    x, a = f.source, f.label
    y, b = g.source, g.label
    label = vec_add(vec_sub(X.act(X.d(a), b), X.act(y, a)), X.act(x, b))
    return morphism(X, X.bracket0(x, y), label)


def tau(X: CrossedModule, p: CentreElement, y: Sequence) -> CatMorphism:
    """``tau_y = -2 xi(y)`` as a morphism ``[x, y] -> [y, x]``."""
    return morphism(X, X.bracket0(p.x, y), vec_scale(X.field(-2), p.apply(y)))


def tau_family(X: CrossedModule, p: CentreElement) -> list[CatMorphism]:
    return [tau(X, p, X.e0(j)) for j in range(X.n0)]


def basis_morphisms(X: CrossedModule) -> list[CatMorphism]:
    """``(e_i, 0)`` and ``(0, f_k)``: a spanning set of the morphism space."""
    zero0, zero1 = zero_vector(X.field, X.n0), zero_vector(X.field, X.n1)
    return ([morphism(X, X.e0(i), zero1) for i in range(X.n0)]
            + [morphism(X, zero0, X.e1(k)) for k in range(X.n1)])


@dataclass
class LawReport:
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness=None) -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok and witness is not None:
            self.witnesses.setdefault(name, [])
            if len(self.witnesses[name]) < 5:
                self.witnesses[name].append(witness)

    def merge(self, other: "LawReport", prefix: str = "") -> None:
        for k, v in other.checks.items():
            self.record(prefix + k, v)
        for k, ws in other.witnesses.items():
            for w in ws:
                self.record(prefix + k, False, w)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def to_dict(self) -> dict:
        return {"checks": dict(self.checks), "passed": self.passed,
                "witnesses": {k: list(v) for k, v in self.witnesses.items()}}


def _chain(X: CrossedModule, x: Sequence, labels: Sequence[Sequence]) -> list[CatMorphism]:
    out, src = [], tuple(x)
    for a in labels:
        f = morphism(X, src, a)
        out.append(f)
        src = f.target
    return out


def _chain_basis(X: CrossedModule, length: int) -> list[tuple]:
    """Basis of the space of data ``(x, a_1, ..., a_length)`` of composable chains."""
    z0, z1 = zero_vector(X.field, X.n0), zero_vector(X.field, X.n1)
    out = [(X.e0(i),) + (z1,) * length for i in range(X.n0)]
    for pos in range(length):
        for k in range(X.n1):
            labels = [z1] * length
            labels[pos] = X.e1(k)
            out.append((z0,) + tuple(labels))
    return out


def verify_category_laws(X: CrossedModule) -> LawReport:
    """Identity, associativity, the scalar functor, and bracket bifunctoriality.

    Both sides of each law are multilinear in the data ``(x, a, b, ...)`` of
    the composable chains involved, so basis chains suffice.
    """
    rep = LawReport()
    for x, a in _chain_basis(X, 1):
        f = morphism(X, x, a)
        idl = compose(X, identity_morphism(X, f.source), f)
        idr = compose(X, f, identity_morphism(X, f.target))
        rep.record("identity", idl == f and idr == f, (x, a))
    for x, a, b, c in _chain_basis(X, 3):
        f, g, h = _chain(X, x, (a, b, c))
        lhs = compose(X, compose(X, f, g), h)
        rhs = compose(X, f, compose(X, g, h))
        rep.record("associativity", lhs == rhs, (x, a, b, c))
    for x, a, b in _chain_basis(X, 2):
        f, g = _chain(X, x, (a, b))
        for k in (3, -1):
            ok = scalar(X, k, compose(X, f, g)) == compose(X, scalar(X, k, f), scalar(X, k, g))
            rep.record("scalar_functor", ok, (k, x, a, b))

    objs = [X.e0(i) for i in range(X.n0)]
    for x in objs:
        for y in objs:
            ok = bracket_morphisms(X, identity_morphism(X, x), identity_morphism(X, y)) \
                == identity_morphism(X, X.bracket0(x, y))
            rep.record("bracket_preserves_identities", ok, (x, y))

    # interchange [g f, g' f'] = [g, g'] [f, f']
    chains = _chain_basis(X, 2)
    for x, a, b in chains:
        f, g = _chain(X, x, (a, b))
        for x2, a2, b2 in chains:
            f2, g2 = _chain(X, x2, (a2, b2))
            lhs = bracket_morphisms(X, compose(X, f, g), compose(X, f2, g2))
            try:
                rhs = compose(X, bracket_morphisms(X, f, f2), bracket_morphisms(X, g, g2))
            except NonComposable:
                rep.record("interchange", False, (x, a, b, x2, a2, b2))
                continue
            rep.record("interchange", lhs == rhs, (x, a, b, x2, a2, b2))

    basis = basis_morphisms(X)
    for f1 in basis:
        for f2 in basis:
            for g in basis:
                s = add_morphisms(X, f1, f2)
                ok_l = bracket_morphisms(X, s, g) == add_morphisms(
                    X, bracket_morphisms(X, f1, g), bracket_morphisms(X, f2, g))
                ok_r = bracket_morphisms(X, g, s) == add_morphisms(
                    X, bracket_morphisms(X, g, f1), bracket_morphisms(X, g, f2))
                rep.record("bilinearity", ok_l and ok_r, (f1, f2, g))
    return rep


def verify_tau_laws(X: CrossedModule, p: CentreElement, require_centre: bool = True) -> LawReport:
    """Typing, naturality and the identity ``tau_[y,z] = [id_y, tau_z] - [id_z, tau_y]``.

    With ``require_centre=False`` an arbitrary pair ``(x, xi)`` is accepted,
    which is how violations of the laws are exhibited.
    """
    if require_centre:
        vs = ze_violations(X, p)
        if vs:
            raise ElementNotInCentre(f"element violates {vs[0].kind} at {vs[0].indices}")
    rep = LawReport()
    x = p.x
    objs = [X.e0(j) for j in range(X.n0)]
    for y in objs:
        t = tau(X, p, y)
        rep.record("typing", t.target == X.bracket0(y, x), y)
        # naturality against basis arrows a : y -> d a + y
        for k in range(X.n1):
            a = morphism(X, y, X.e1(k))
            Ff = bracket_morphisms(X, identity_morphism(X, x), a)
            Gf = bracket_morphisms(X, a, identity_morphism(X, x))
            tz = tau(X, p, a.target)
            try:
                upper = compose(X, Ff, tz)
                lower = compose(X, t, Gf)
            except NonComposable:
                rep.record("naturality", False, (y, k))
                continue
            rep.record("naturality", upper == lower, (y, k))
    for y in objs:
        for z in objs:
            lhs = tau(X, p, X.bracket0(y, z))
            rhs = sub_morphisms(X, bracket_morphisms(X, identity_morphism(X, y), tau(X, p, z)),
                                bracket_morphisms(X, identity_morphism(X, z), tau(X, p, y)))
            rep.record("tau_bracket_source", lhs.source == rhs.source, (y, z))
            rep.record("tau_bracket_label", lhs.label == rhs.label, (y, z))
            # the same identity written with the module action
            act_form = vec_sub(X.act(y, tau(X, p, z).label), X.act(z, tau(X, p, y).label))
            rep.record("tau_bracket_action_form", lhs.label == act_form, (y, z))
    return rep


def verify_centre_category(X: CrossedModule) -> LawReport:
    """The centre bracket ``theta`` and the braiding, on pairs of Z0 basis elements."""
    rep = LawReport()
    Z = centre_carrier(X)
    elems = Z.elements()
    objs = [X.e0(j) for j in range(X.n0)]
    br = X.bracket0
    for x in objs:
        for y in objs:
            for z in objs:
                ok1 = br(br(x, y), z) == vec_sub(br(x, br(y, z)), br(y, br(x, z)))
                ok2 = br(z, br(x, y)) == vec_sub(br(br(z, x), y), br(br(z, y), x))
                rep.record("bracket_decomposition", ok1 and ok2, (x, y, z))
    for p in elems:
        rep.merge(verify_tau_laws(X, p), "tau.")
        for q in elems:
            pq = z0_bracket(X, p, q)
            for z in objs:
                theta = sub_morphisms(X, tau(X, p, br(q.x, z)), tau(X, q, br(p.x, z)))
                rep.record("theta_is_tau_of_bracket", theta == tau(X, pq, z), (p, q, z))
            # braiding tau^p_y : [p, q] -> [q, p] in the centre category
            c = tau(X, p, q.x).label
            qp = z0_bracket(X, q, p)
            rep.record("braiding_typing", delta(X, c) + pq == qp, (p, q))
            rep.record("braiding_in_L0", tau(X, p, q.x).target == br(q.x, p.x), (p, q))
    return rep
