import pytest

import oracles
from xmodlie import catalog
from xmodlie.centre import centre_carrier
from xmodlie.cohomology import _setup, cohomology
from xmodlie.crossed import homotopy, validate_crossed
from xmodlie.exact_linalg import FieldSpec

QQ = FieldSpec.rationals()
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)


@pytest.mark.parametrize("name", catalog.names())
def test_expected_values_reproduce(name, field):
    e = catalog.builtin(name, field)
    X = e.xmod
    h = homotopy(X)
    assert (h.pi0.dim, h.pi1.dim) == (e.expected["pi0"], e.expected["pi1"])
    assert centre_carrier(X).dim == e.expected["Z0"]
    S = _setup(X)
    assert [cohomology(S.pi0, S.module, k).dim for k in range(3)] == \
        [e.expected["H0"], e.expected["H1"], e.expected["H2"]]


@pytest.mark.parametrize("name", catalog.names())
def test_independent_axiom_oracle_agrees(name):
    assert oracles.crossed_module_ok(catalog.builtin(name).xmod)
    assert oracles.crossed_module_ok(catalog.builtin(name, F3).xmod, 3)


def test_unknown_entry():
    with pytest.raises(KeyError):
        catalog.builtin("XM_NOPE")


@pytest.mark.parametrize("family", ["a", "b", "c", "d", "zero_boundary", "identity", "ideal", "direct_sum"])
@pytest.mark.parametrize("seed", range(6))
def test_random_family_valid_and_deterministic(family, seed, field):
    X = catalog.random_family(seed, family, field)
    assert validate_crossed(X) == []
    assert catalog.random_family(seed, family, field) == X


def test_direct_sum_example():
    X = catalog.random_family(0, "d", parts=["XM_AB1", "XM_HEIS"])
    assert (X.n1, X.n0) == (2, 4)
    assert validate_crossed(X) == []


def test_identity_family_over_f5():
    X = catalog.random_family(1, "b", F5, g="h3")
    h = homotopy(X)
    assert (h.pi0.dim, h.pi1.dim) == (0, 0)


def test_abelian_trivial_family():
    X = catalog.random_family(2, "a", g="k2", module="trivial", dim=1)
    h = homotopy(X)
    assert (h.pi0.dim, h.pi1.dim) == (2, 1)


def test_unknown_family():
    with pytest.raises(KeyError):
        catalog.random_family(0, "z")
