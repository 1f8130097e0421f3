import pytest

from xmodlie import catalog
from xmodlie.centre import centre_carrier, element, z0_bracket, ze_violations
from xmodlie.lie2cat import (
    NonComposable,
    bracket_morphisms,
    compose,
    identity_morphism,
    morphism,
    scalar,
    sub_morphisms,
    tau,
    tau_family,
    verify_category_laws,
    verify_centre_category,
    verify_tau_laws,
)


def _ad(X, v):
    return element(X, v, [X.bracket0(v, X.e0(i)) for i in range(X.n0)])


SL2 = catalog.builtin("XM_ID_SL2").xmod


def test_identity_and_composition():
    f = morphism(SL2, (1, 0, 0), (0, 1, 0))
    assert compose(SL2, identity_morphism(SL2, f.source), f) == f
    g = morphism(SL2, f.target, (0, 0, 2))
    assert compose(SL2, f, g) == morphism(SL2, (1, 0, 0), (0, 1, 2))
    with pytest.raises(NonComposable):
        compose(SL2, g, f)


def test_scalar_functor_preserves_composition():
    f = morphism(SL2, (1, 2, 0), (0, 1, 1))
    g = morphism(SL2, f.target, (3, 0, -1))
    assert scalar(SL2, 3, compose(SL2, f, g)) == compose(SL2, scalar(SL2, 3, f), scalar(SL2, 3, g))


def test_bracket_with_identity():
    x, y, a = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    assert bracket_morphisms(SL2, identity_morphism(SL2, x), identity_morphism(SL2, y)) \
        == identity_morphism(SL2, SL2.bracket0(x, y))
    f = morphism(SL2, x, a)
    neg = tuple(-c for c in SL2.act(y, a))
    assert bracket_morphisms(SL2, f, identity_morphism(SL2, y)) == morphism(SL2, SL2.bracket0(x, y), neg)


def test_interchange_on_sl2_pairs():
    f = morphism(SL2, (1, 0, 0), (0, 1, 0))
    g = morphism(SL2, f.target, (0, 0, 1))
    f2 = morphism(SL2, (0, 0, 1), (1, 0, 0))
    g2 = morphism(SL2, f2.target, (0, 2, 0))
    lhs = bracket_morphisms(SL2, compose(SL2, f, g), compose(SL2, f2, g2))
    rhs = compose(SL2, bracket_morphisms(SL2, f, f2), bracket_morphisms(SL2, g, g2))
    assert lhs == rhs


def test_tau_on_sl2():
    p = _ad(SL2, (1, 0, 0))
    t = tau(SL2, p, (0, 1, 0))
    assert t.label == (0, -4, 0)
    assert t.source == (0, 2, 0) and t.target == (0, -2, 0)
    assert verify_tau_laws(SL2, p).passed


def test_zero_pair_gives_zero_tau():
    z = element(SL2, (0, 0, 0), [(0, 0, 0)] * 3)
    assert all(t == identity_morphism(SL2, (0, 0, 0)) for t in tau_family(SL2, z))


def test_theta_on_sl2_matches_tau_of_bracket():
    p, q = _ad(SL2, (1, 0, 0)), _ad(SL2, (0, 1, 0))
    pq = z0_bracket(SL2, p, q)
    assert pq == _ad(SL2, (0, 2, 0))
    for j in range(3):
        z = SL2.e0(j)
        theta = sub_morphisms(SL2, tau(SL2, p, SL2.bracket0(q.x, z)), tau(SL2, q, SL2.bracket0(p.x, z)))
        assert theta == tau(SL2, pq, z)


def test_heis_tau_and_theta():
    X = catalog.builtin("XM_HEIS").xmod
    els = centre_carrier(X).elements()
    p = next(q for q in els if q.x == (1, 0, 0))
    # tau^p_f : [e, f] = z -> [f, e] = -z with label -2 z'
    t = tau(X, p, (0, 1, 0))
    assert (t.source, t.label, t.target) == ((0, 0, 1), (-2,), (0, 0, -1))
    # every theta value vanishes: brackets land in the centre, where xi is 0
    zero = identity_morphism(X, (0, 0, 0))
    for a in els:
        for b in els:
            for j in range(3):
                z = X.e0(j)
                theta = sub_morphisms(X, tau(X, a, X.bracket0(b.x, z)), tau(X, b, X.bracket0(a.x, z)))
                assert theta == zero
    assert verify_centre_category(X).passed


@pytest.mark.parametrize("name", catalog.names())
def test_laws_on_catalog(name, field):
    X = catalog.builtin(name, field).xmod
    assert verify_category_laws(X).passed
    rep = verify_centre_category(X)
    assert rep.passed, rep.failures()


def test_ze3_violation_breaks_tau_laws():
    # zero boundary, so ZE1 and ZE2 hold for x = 0 and any xi
    X = catalog.builtin("XM_B2_ADJ_MODULE").xmod
    bad = element(X, (0, 0), [(1, 0), (0, 0)])
    kinds = {v.kind for v in ze_violations(X, bad)}
    assert "ZE3" in kinds
    rep = verify_tau_laws(X, bad, require_centre=False)
    assert not rep.passed
    assert any(k.startswith("tau_bracket") for k in rep.failures())
