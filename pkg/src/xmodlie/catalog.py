"""Built-in crossed modules and seeded families of guaranteed-valid instances.

Random instances are never drawn from random structure constants. Each family
is closed under the axioms: zero boundaries into module structures, identity
maps, ideal inclusions, and direct sums, all optionally transported along a
random change of basis.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .crossed import CrossedModule
from .exact_linalg import FieldSpec, Matrix, QQ, Subspace, unit_vector, zero_vector
from .lie import (
    LieAlgebra,
    LieModule,
    abelian,
    b2,
    heisenberg,
    sl2,
    strictly_upper_triangular,
    upper_triangular,
)

__all__ = ["CatalogEntry", "builtin", "names", "random_family", "FAMILIES",
           "zero_boundary", "identity", "ideal_inclusion"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    xmod: CrossedModule
    expected: dict = field(default_factory=dict)
    notes: str = ""


def zero_boundary(module: LieModule) -> CrossedModule:
    """``0 : A -> g`` for a g-module A, with A abelian."""
    g = module.algebra
    F = g.field
    A = abelian(F, module.dim)
    return CrossedModule(g, A, Matrix.zeros(F, g.dim, module.dim), module.action)


def identity(g: LieAlgebra) -> CrossedModule:
    return CrossedModule(g, g, Matrix.identity(g.field, g.dim), g.structure)


def ideal_inclusion(g: LieAlgebra, ideal_basis: list) -> CrossedModule:
    """Inclusion of an ideal, spanned by the given vectors, with the adjoint action."""
    F = g.field
    I = Subspace.span(F, g.dim, ideal_basis)
    vecs = list(I.basis)
    incl = Matrix.from_columns(F, vecs, nrows=g.dim)

    def coords(v):
        c = I.coordinates(v)
        if c is None:
            raise ValueError("subspace is not an ideal")
        return c

    labels = [f"i{k}" for k in range(len(vecs))]
    Lsub = LieAlgebra(F, labels, tuple(tuple(coords(g.bracket(u, v)) for v in vecs) for u in vecs))
    act = tuple(tuple(coords(g.bracket(x, v)) for v in vecs) for x in g.basis())
    return CrossedModule(g, Lsub, incl, act)


def _vec(F, *xs):
    return tuple(F(x) for x in xs)


def _xm_id_sl2(F):
    return identity(sl2(F))


def _xm_zero_sl2(F):
    g = sl2(F)
    return zero_boundary(LieModule.trivial(g, 0))


def _xm_ab1(F):
    return zero_boundary(LieModule.trivial(abelian(F, 1, "x"), 1))


def _xm_heis(F):
    # <z'> -> h3, z' -> z, trivial action
    h = heisenberg(F)
    L1 = LieAlgebra.from_brackets(F, ["z'"], {})
    return CrossedModule(h, L1, Matrix.from_columns(F, [_vec(F, 0, 0, 1)], nrows=3),
                         tuple((zero_vector(F, 1),) for _ in range(3)))


def _xm_mod(F):
    # k^2 -> 0
    g = abelian(F, 0)
    return CrossedModule(g, abelian(F, 2), Matrix.zeros(F, 0, 2), ())


def _xm_ideal_b2(F):
    g = b2(F)
    return ideal_inclusion(g, [_vec(F, 0, 1)])


def _xm_id_h3(F):
    return identity(heisenberg(F))


def _xm_central_h3(F):
    # 0 : k -> h3, trivial action
    return zero_boundary(LieModule.trivial(heisenberg(F), 1))


def _xm_b2_adjoint_module(F):
    # 0 : b2 (as an abelian algebra carrying the adjoint module) -> b2
    g = b2(F)
    return zero_boundary(LieModule(g, 2, g.structure))


def _xm_sl2_adjoint_module(F):
    g = sl2(F)
    return zero_boundary(LieModule(g, 3, g.structure))


def _xm_ut3_strict(F):
    g = upper_triangular(F, 3)
    n = strictly_upper_triangular(F, 3)
    # E12, E13, E23 sit at positions 1, 2, 4 of (E11, E12, E13, E22, E23, E33)
    return ideal_inclusion(g, [unit_vector(F, 6, k) for k in (1, 2, 4)])


def _xm_obstructed(F):
    """L0 = h3 (+) k w, L1 = span{c, k} abelian, d c = z, d k = 0, w.c = k.

    pi0 = k^3 (abelian), pi1 = span{k} trivial; the centre classes of e, f, w
    have nonzero obstructions in H^2.
    """
    h = heisenberg(F).direct_sum(LieAlgebra.from_brackets(F, ["w"], {}))
    L1 = LieAlgebra.from_brackets(F, ["c", "k"], {})
    bd = Matrix.from_columns(F, [_vec(F, 0, 0, 1, 0), _vec(F, 0, 0, 0, 0)], nrows=4)
    z = zero_vector(F, 2)
    act = [[z, z] for _ in range(4)]
    act[3][0] = _vec(F, 0, 1)
    return CrossedModule(h, L1, bd, tuple(tuple(r) for r in act))


_BUILDERS: dict[str, tuple[Callable, dict, str]] = {
    "XM_ID_SL2": (_xm_id_sl2, {"pi0": 0, "pi1": 0, "Z0": 3, "H0": 0, "H1": 0, "H2": 0,
                               "six_term": (0, 0, 0, 0, 0, 0), "obstruction_sequence": (0, 0, 0, 0)},
                  "identity of sl2 with the adjoint action"),
    "XM_ZERO_SL2": (_xm_zero_sl2, {"pi0": 3, "pi1": 0, "Z0": 0, "H0": 0, "H1": 0, "H2": 0,
                                   "six_term": (0, 0, 0, 0, 3, 3), "obstruction_sequence": (0, 0, 0, 0)},
                    "0 -> sl2"),
    "XM_AB1": (_xm_ab1, {"pi0": 1, "pi1": 1, "Z0": 2, "H0": 1, "H1": 1, "H2": 0,
                         "six_term": (1, 1, 1, 2, 1, 0), "obstruction_sequence": (1, 2, 1, 0)},
               "zero map k -> k, abelian, trivial action"),
    "XM_HEIS": (_xm_heis, {"pi0": 2, "pi1": 0, "Z0": 3, "H0": 0, "H1": 0, "H2": 0,
                           "six_term": (0, 0, 0, 2, 2, 0), "obstruction_sequence": (0, 2, 2, 0)},
                "<z'> -> h3 onto the centre, trivial action"),
    "XM_MOD": (_xm_mod, {"pi0": 0, "pi1": 2, "Z0": 0, "H0": 2, "H1": 0, "H2": 0,
                         "six_term": (2, 2, 0, 0, 0, 0), "obstruction_sequence": (0, 0, 0, 0)},
               "k^2 -> 0"),
    "XM_IDEAL_B2": (_xm_ideal_b2, {"pi0": 1, "pi1": 0, "Z0": 2, "H0": 0, "H1": 0, "H2": 0,
                                   "six_term": (0, 0, 0, 1, 1, 0), "obstruction_sequence": (0, 1, 1, 0)},
                    "span{f} inside b2 = <e, f | [e,f] = f>, adjoint action"),
    "XM_ID_H3": (_xm_id_h3, {"pi0": 0, "pi1": 0, "Z0": 3, "H0": 0, "H1": 0, "H2": 0,
                             "six_term": (0, 0, 0, 0, 0, 0), "obstruction_sequence": (0, 0, 0, 0)},
                 "identity of the Heisenberg algebra"),
    "XM_CENTRAL_H3": (_xm_central_h3, {"pi0": 3, "pi1": 1, "Z0": 3, "H0": 1, "H1": 2, "H2": 2,
                                       "six_term": (1, 1, 2, 3, 3, 2), "obstruction_sequence": (2, 3, 1, 2)},
                      "0 : k -> h3 with trivial action"),
    "XM_B2_ADJ_MODULE": (_xm_b2_adjoint_module, {"pi0": 2, "pi1": 2, "Z0": 2, "H0": 0, "H1": 0, "H2": 0,
                                             "six_term": (0, 2, 2, 0, 2, 2), "obstruction_sequence": (0, 0, 0, 0)},
                         "0 : ad(b2) -> b2"),
    "XM_SL2_ADJ_MODULE": (_xm_sl2_adjoint_module, {"pi0": 3, "pi1": 3, "Z0": 3, "H0": 0, "H1": 0, "H2": 0,
                                               "six_term": (0, 3, 3, 0, 3, 3), "obstruction_sequence": (0, 0, 0, 0)},
                          "0 : ad(sl2) -> sl2"),
    "XM_UT3_STRICT": (_xm_ut3_strict, {"pi0": 3, "pi1": 0, "Z0": 6, "H0": 0, "H1": 0, "H2": 0,
                                       "six_term": (0, 0, 0, 3, 3, 0), "obstruction_sequence": (0, 3, 3, 0)},
                      "strictly upper triangular 3x3 inside upper triangular 3x3"),
    "XM_OBSTRUCTED": (_xm_obstructed, {"pi0": 3, "pi1": 1, "Z0": 4, "H0": 1, "H1": 3, "H2": 3,
                                       "six_term": (1, 1, 3, 3, 3, 3), "obstruction_sequence": (3, 3, 3, 3)},
                      "h3 + kw with c -> z, w.c = k; the obstruction map is injective"),
}


def names() -> list[str]:
    return list(_BUILDERS)


def builtin(name: str, field: FieldSpec = QQ) -> CatalogEntry:
    try:
        build, expected, notes = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(_BUILDERS)}") from None
    return CatalogEntry(name, build(field), dict(expected), notes)


# ---------------------------------------------------------------------------
# seeded families

def _random_invertible(rng: random.Random, F: FieldSpec, n: int) -> Matrix:
    lo, hi = (-2, 2) if F.is_rational else (0, F.modulus - 1)
    while True:
        m = Matrix.from_rows(F, [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)], ncols=n) \
            if n else Matrix.zeros(F, 0, 0)
        if m.rank() == n:
            return m


def _transport(rng: random.Random, X: CrossedModule) -> CrossedModule:
    F = X.field
    return X.change_basis(_random_invertible(rng, F, X.n0), _random_invertible(rng, F, X.n1))


def _small_algebras(F):
    return {
        "k": abelian(F, 1, "x"),
        "k2": abelian(F, 2, "x"),
        "b2": b2(F),
        "h3": heisenberg(F),
        "sl2": sl2(F),
    }


def _family_a(rng, F, opts):
    algs = _small_algebras(F)
    gname = opts.get("g") or rng.choice(sorted(algs))
    g = algs[gname]
    kind = opts.get("module") or rng.choice(["trivial", "adjoint", "adjoint+trivial"])
    if kind == "trivial":
        m = opts.get("dim", rng.randint(1, 2))
        mod = LieModule.trivial(g, m)
    elif kind == "adjoint":
        mod = LieModule(g, g.dim, g.structure)
    else:
        n = g.dim
        z = zero_vector(F, n + 1)
        act = tuple(tuple(g.structure[i][j] + (F.zero,) for j in range(n)) + (z,) for i in range(n))
        mod = LieModule(g, n + 1, act)
    return zero_boundary(mod)


def _family_b(rng, F, opts):
    algs = _small_algebras(F)
    return identity(algs[opts.get("g") or rng.choice(sorted(algs))])


_IDEALS = {
    "b2": [[(0, 1)], [(1, 0), (0, 1)], []],
    "h3": [[(0, 0, 1)], [(1, 0, 0), (0, 0, 1)], [(0, 1, 0), (0, 0, 1)], []],
    "sl2": [[(1, 0, 0), (0, 1, 0), (0, 0, 1)], []],
    "ut3": [[(0, 0, 1, 0, 0, 0)], [(0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)],
            [(0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)], [(1, 0, 0, 1, 0, 1), (0, 0, 1, 0, 0, 0)]],
}


def _family_c(rng, F, opts):
    algs = _small_algebras(F)
    algs["ut3"] = upper_triangular(F, 3)
    gname = opts.get("g") or rng.choice(sorted(_IDEALS))
    g = algs[gname]
    basis = rng.choice(_IDEALS[gname])
    return ideal_inclusion(g, [tuple(F(a) for a in v) for v in basis])


def _family_d(rng, F, opts):
    parts = opts.get("parts") or rng.sample(["XM_AB1", "XM_HEIS", "XM_IDEAL_B2", "XM_MOD", "XM_ID_SL2"], 2)
    X = builtin(parts[0], F).xmod
    for p in parts[1:]:
        X = X.direct_sum(builtin(p, F).xmod)
    return X


FAMILIES = {"a": _family_a, "b": _family_b, "c": _family_c, "d": _family_d}
_ALIASES = {"zero_boundary": "a", "identity": "b", "ideal": "c", "direct_sum": "d"}


def random_family(seed: int, family: str, field: FieldSpec = QQ, transport: bool = True, **opts) -> CrossedModule:
    """A valid crossed module from the chosen family, deterministic in ``seed``.

    ``family`` is one of ``a``/``zero_boundary``, ``b``/``identity``,
    ``c``/``ideal``, ``d``/``direct_sum``. With ``transport`` the result is
    rewritten in a random basis.
    """
    fam = _ALIASES.get(family, family)
    if fam not in FAMILIES:
        raise KeyError(f"unknown family {family!r}")
    rng = random.Random(f"{fam}:{seed}:{field}")
    X = FAMILIES[fam](rng, field, opts)
    return _transport(rng, X) if transport else X


def corpus_seeds(count: int, field: FieldSpec = QQ):
    """``count`` seeded instances cycling through the four families."""
    fams = "abcd"
    for k in range(count):
        yield f"{fams[k % 4]}{k}", random_family(k, fams[k % 4], field)
