import pytest
from hypothesis import given, settings, strategies as st

import oracles
from xmodlie import catalog
from xmodlie.centre import centre_carrier, centre_homotopy, delta, element
from xmodlie.cohomology import (
    NotACocycle,
    NotInRestrictedCentre,
    _setup,
    ce_differential,
    cohomology,
    g_matrix,
    map_f,
    map_omega,
    obstruction_g,
    obstruction_sequence_report,
    pi1_centre_iso,
)
from xmodlie.exact_linalg import FieldSpec, is_zero
from xmodlie.lie import LieModule, abelian, b2, heisenberg, sl2

QQ = FieldSpec.rationals()
F3 = FieldSpec.prime(3)


def _dims(g, A, top=2):
    return tuple(cohomology(g, A, k).dim for k in range(top + 1))


def test_small_trivial_coefficients():
    k = abelian(QQ, 1)
    assert _dims(k, LieModule.trivial(k, 1)) == (1, 1, 0)
    k2 = abelian(QQ, 2)
    assert _dims(k2, LieModule.trivial(k2, 1)) == (1, 2, 1)
    assert all(ce_differential(k2, LieModule.trivial(k2, 1), n).rank() == 0 for n in range(3))


def test_sl2_adjoint_has_no_invariants():
    g = sl2(QQ)
    assert ce_differential(g, LieModule.adjoint(g), 0).rank() == 3
    assert cohomology(g, LieModule.adjoint(g), 0).dim == 0


@pytest.mark.parametrize("g", [sl2(F3), heisenberg(F3), b2(F3)], ids=["sl2", "h3", "b2"])
def test_trivial_coefficients_match_enumeration(g):
    c = [[[int(a.value) for a in v] for v in row] for row in g.structure]
    act = [[[0] for _ in range(1)] for _ in range(g.dim)]
    want = oracles.cohomology_dims(c, act, g.dim, 1, 3)
    assert _dims(g, LieModule.trivial(g, 1)) == (want[0], want[1], want[2])


@pytest.mark.parametrize("g", [sl2(QQ), heisenberg(QQ), b2(QQ), abelian(QQ, 3)], ids=["sl2", "h3", "b2", "k3"])
@pytest.mark.parametrize("adjoint", [True, False])
def test_d_squared_is_zero(g, adjoint):
    A = LieModule.adjoint(g) if adjoint else LieModule.trivial(g, 2)
    for n in range(3):
        assert (ce_differential(g, A, n + 1) @ ce_differential(g, A, n)).rank() == 0


@pytest.mark.parametrize("name", catalog.names())
def test_d_squared_is_zero_on_homotopy_modules(name):
    S = _setup(catalog.builtin(name).xmod)
    for n in range(3):
        assert (ce_differential(S.pi0, S.module, n + 1) @ ce_differential(S.pi0, S.module, n)).rank() == 0


@pytest.mark.parametrize("name,dim", [("XM_AB1", 1), ("XM_ID_SL2", 0), ("XM_MOD", 2)])
def test_pi1_iso_fixtures(name, dim):
    iso = pi1_centre_iso(catalog.builtin(name).xmod)
    assert iso.bijective
    assert iso.ker_delta.dim == dim


def test_map_f_on_ab1():
    X = catalog.builtin("XM_AB1").xmod
    assert is_zero(map_f(X, (0,)))
    assert not is_zero(map_f(X, (1,)))


def test_map_f_kills_coboundaries():
    X = catalog.builtin("XM_CENTRAL_H3").xmod
    S = _setup(X)
    d0 = ce_differential(S.pi0, S.module, 0)
    for b in range(S.module.dim):
        phi = d0.column(b)
        assert is_zero(map_f(X, phi))


def test_map_f_rejects_non_cocycle():
    X = catalog.builtin("XM_CENTRAL_H3").xmod
    S = _setup(X)
    d1 = ce_differential(S.pi0, S.module, 1)
    units = [tuple(1 if i == j else 0 for i in range(d1.ncols)) for j in range(d1.ncols)]
    phi = next(u for u in units if not is_zero(d1.apply(u)))
    with pytest.raises(NotACocycle):
        map_f(X, phi)


def test_map_omega_examples():
    X = catalog.builtin("XM_AB1").xmod
    assert map_omega(X, element(X, (1,), [(0,)])) == (1,)
    assert is_zero(map_omega(X, delta(X, (1,))))
    H = catalog.builtin("XM_HEIS").xmod
    p = next(q for q in centre_carrier(H).elements() if q.x == (1, 0, 0))
    assert not is_zero(map_omega(H, p))


def test_obstruction_vanishes_for_liftable_x():
    X = catalog.builtin("XM_HEIS").xmod
    for p in centre_carrier(X).elements():
        data = obstruction_g(X, p.x, psi=p.xi)
        assert all(is_zero(v) for row in data.theta_bar for v in row)
        assert is_zero(data.theta_class)


def test_obstruction_requires_restricted_centre():
    # pi0 = sl2 with trivial pi1: Z(sl2) = 0, so h has no obstruction class
    with pytest.raises(NotInRestrictedCentre):
        obstruction_g(catalog.builtin("XM_ZERO_SL2").xmod, (1, 0, 0))
    # pi0 = 0: every x is admissible
    assert obstruction_g(catalog.builtin("XM_ID_H3").xmod, (1, 0, 0)).checks["cocycle"]


def test_obstructed_entry_has_full_rank_g():
    X = catalog.builtin("XM_OBSTRUCTED").xmod
    assert g_matrix(X).rank() == 3


@pytest.mark.parametrize("name", catalog.names())
def test_obstruction_sequence_fixture(name, field):
    e = catalog.builtin(name, field)
    rep = obstruction_sequence_report(e.xmod)
    assert rep.exact
    assert tuple(rep.dims) == e.expected["obstruction_sequence"]
    assert g_matrix(e.xmod) == g_matrix(e.xmod, reverse=True)


@pytest.mark.parametrize("name", catalog.names())
def test_theta_bar_checks(name):
    X = catalog.builtin(name).xmod
    S = _setup(X)
    for v in S.restricted.basis:
        data = obstruction_g(X, S.section.apply(v))
        assert all(data.checks.values()), data.checks


@settings(max_examples=20)
@given(st.integers(0, 300), st.sampled_from("abcd"))
def test_g_is_linear_and_complement_free(seed, fam):
    X = catalog.random_family(seed, fam)
    S = _setup(X)
    reps = [S.section.apply(v) for v in S.restricted.basis]
    if len(reps) < 2:
        return
    x, y = reps[0], reps[1]
    s = tuple(a + b for a, b in zip(x, y))
    gx, gy, gs = (obstruction_g(X, v).theta_class for v in (x, y, s))
    assert gs == tuple(a + b for a, b in zip(gx, gy))
    assert obstruction_g(X, s, reverse=True).theta_class == gs


def test_centre_homotopy_of_ab1():
    ch = centre_homotopy(catalog.builtin("XM_AB1").xmod)
    assert (ch.pi1.dim, ch.pi0.dim) == (1, 2)
