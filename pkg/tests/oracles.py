"""Brute-force reference computations over small prime fields.

Nothing here calls the library's linear algebra or validators: models are
read as raw integer tensors and every condition is evaluated pointwise by
enumeration. Only usable when p**(number of unknowns) is small.
"""
from __future__ import annotations

import itertools
import math


def ints(X, p):
    """Raw tensors of a crossed module as integers mod p."""
    def r(a):
        return int(a.value) if hasattr(a, "value") else int(a) % p

    n0, n1 = X.n0, X.n1
    c0 = [[[r(a) for a in X.L0.structure[i][j]] for j in range(n0)] for i in range(n0)]
    c1 = [[[r(a) for a in X.L1.structure[i][j]] for j in range(n1)] for i in range(n1)]
    d = [[r(X.boundary.rows[i][k]) for k in range(n1)] for i in range(n0)]
    act = [[[r(a) for a in X.action[i][j]] for j in range(n1)] for i in range(n0)]
    return n0, n1, c0, c1, d, act


def _bil(table, x, y, n, p):
    out = [0] * n
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    row = table[i][j]
                    for k in range(n):
                        out[k] = (out[k] + a * b * row[k]) % p
    return out


def _mat(d, v, p):
    return [sum(d[i][k] * v[k] for k in range(len(v))) % p for i in range(len(d))]


def _sub(u, v, p):
    return [(a - b) % p for a, b in zip(u, v)]


def _add(u, v, p):
    return [(a + b) % p for a, b in zip(u, v)]


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def crossed_module_ok(X, p=None):
    """All crossed-module axioms by direct evaluation on basis elements.

    With ``p=None`` the model is read over Q and evaluated in exact fractions.
    """
    if p is None:
        return _cm_ok_rational(X)
    n0, n1, c0, c1, d, act = ints(X, p)
    return _cm_ok(n0, n1, c0, c1, d, act, p)


def _cm_ok(n0, n1, c0, c1, d, act, p):
    b0 = lambda x, y: _bil(c0, x, y, n0, p)
    b1 = lambda a, b: _bil(c1, a, b, n1, p)
    ac = lambda x, a: _bil(act, x, a, n1, p)
    dd = lambda a: _mat(d, a, p)
    E0 = [_unit(n0, i) for i in range(n0)]
    E1 = [_unit(n1, i) for i in range(n1)]
    for c, E, b in ((c0, E0, b0), (c1, E1, b1)):
        for x in E:
            for y in E:
                if any(_add(b(x, y), b(y, x), p)):
                    return False
                for z in E:
                    s = _add(_add(b(x, b(y, z)), b(y, b(z, x)), p), b(z, b(x, y)), p)
                    if any(s):
                        return False
    for a in E1:
        for b in E1:
            if any(_sub(dd(b1(a, b)), b0(dd(a), dd(b)), p)):
                return False
            if any(_sub(ac(dd(a), b), b1(a, b), p)):
                return False
    for x in E0:
        for a in E1:
            if any(_sub(dd(ac(x, a)), b0(x, dd(a)), p)):
                return False
            for y in E0:
                lhs = ac(b0(x, y), a)
                rhs = _sub(ac(x, ac(y, a)), ac(y, ac(x, a)), p)
                if any(_sub(lhs, rhs, p)):
                    return False
            for b in E1:
                lhs = ac(x, b1(a, b))
                rhs = _add(b1(ac(x, a), b), b1(a, ac(x, b)), p)
                if any(_sub(lhs, rhs, p)):
                    return False
    return True


def _cm_ok_rational(X):
    from fractions import Fraction

    n0, n1 = X.n0, X.n1
    fr = lambda a: Fraction(a)
    c0 = [[[fr(a) for a in X.L0.structure[i][j]] for j in range(n0)] for i in range(n0)]
    c1 = [[[fr(a) for a in X.L1.structure[i][j]] for j in range(n1)] for i in range(n1)]
    d = [[fr(X.boundary.rows[i][k]) for k in range(n1)] for i in range(n0)]
    act = [[[fr(a) for a in X.action[i][j]] for j in range(n1)] for i in range(n0)]
    return _cm_ok(n0, n1, c0, c1, d, act, _NoMod())


class _NoMod:
    """Stand-in modulus: ``x % _NoMod()`` is ``x``."""

    def __rmod__(self, x):
        return x


# ---------------------------------------------------------------------------
# centre

def centre_brute(X, p):
    """Every (x, xi) over F_p satisfying ZE1-ZE3, as flat integer tuples
    (x first, then the columns xi(e_0), xi(e_1), ...)."""
    n0, n1, c0, c1, d, act = ints(X, p)
    E0 = [_unit(n0, i) for i in range(n0)]
    E1 = [_unit(n1, i) for i in range(n1)]
    out = set()
    for v in itertools.product(range(p), repeat=n0 + n0 * n1):
        x = list(v[:n0])
        cols = [list(v[n0 + j * n1: n0 + (j + 1) * n1]) for j in range(n0)]

        def xi(t):
            r = [0] * n1
            for j, tj in enumerate(t):
                if tj:
                    for k in range(n1):
                        r[k] = (r[k] + tj * cols[j][k]) % p
            return r

        ok = True
        for t in E0:
            if _mat(d, xi(t), p) != _bil(c0, x, t, n0, p):
                ok = False
                break
        if ok:
            for a in E1:
                if xi(_mat(d, a, p)) != _bil(act, x, a, n1, p):
                    ok = False
                    break
        if ok:
            for s in E0:
                for t in E0:
                    lhs = xi(_bil(c0, s, t, n0, p))
                    rhs = _sub(_bil(act, s, xi(t), n1, p), _bil(act, t, xi(s), n1, p), p)
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.add(tuple(v))
    return out


def span_set(vectors, p, n):
    """All F_p-linear combinations of integer vectors."""
    vectors = [list(v) for v in vectors]
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        w = [0] * n
        for c, v in zip(coeffs, vectors):
            for k in range(n):
                w[k] = (w[k] + c * v[k]) % p
        out.add(tuple(w))
    return out


def log_p(count, p):
    k = round(math.log(count, p))
    assert p ** k == count, (count, p)
    return k


def six_term_dims(X, p):
    """Dims of pi1 Z, pi1 L, pi1 L//Z, pi0 Z, pi0 L, pi0 L//Z by counting."""
    n0, n1, c0, c1, d, act = ints(X, p)
    E0 = [_unit(n0, i) for i in range(n0)]
    L1 = list(itertools.product(range(p), repeat=n1))
    ker_d = [a for a in L1 if not any(_mat(d, a, p))]
    pi1Z = [a for a in ker_d if all(not any(_bil(act, t, a, n1, p)) for t in E0)]
    Z0 = centre_brute(X, p)
    ker_z0 = [v for v in Z0 if not any(v[:n0])]

    def delta(a):
        cols = []
        for t in E0:
            cols.extend((-c) % p for c in _bil(act, t, a, n1, p))
        return tuple(_mat(d, a, p)) + tuple(cols)

    im_delta = {delta(a) for a in L1}
    im_d = {tuple(_mat(d, a, p)) for a in L1}
    im_z0 = {v[:n0] for v in Z0}
    return (
        log_p(len(pi1Z), p),
        log_p(len(ker_d), p),
        log_p(len(ker_z0), p),
        log_p(len(Z0), p) - log_p(len(im_delta), p),
        n0 - log_p(len(im_d), p),
        n0 - log_p(len(im_z0), p),
    )


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg cohomology by enumeration

def _cochain_value(omega, idx, args, m, p):
    """Value of an alternating cochain given on increasing index tuples."""
    args = list(args)
    if len(set(args)) < len(args):
        return [0] * m
    order = sorted(range(len(args)), key=lambda k: args[k])
    sign = 1
    seen = list(order)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    v = omega[idx[tuple(sorted(args))]]
    return [(sign * a) % p for a in v]


def cohomology_dims(c, act, n, m, p, degrees=(0, 1, 2)):
    """dim H^k(g, A) for a Lie algebra with structure tensor ``c`` (dim n) and
    module action ``act`` (dim m), by counting cocycles and coboundaries."""
    def d(omega, k):
        # omega: list over increasing k-tuples of m-vectors -> (k+1)-cochain
        idx = {t: i for i, t in enumerate(itertools.combinations(range(n), k))}

        def val(args):
            return _cochain_value(omega, idx, args, m, p)

        out = []
        for args in itertools.combinations(range(n), k + 1):
            r = [0] * m
            for i in range(k + 1):
                rest = args[:i] + args[i + 1:]
                s = 1 if i % 2 == 0 else -1
                v = _bil(act, _unit(n, args[i]), val(rest), m, p)
                r = [(a + s * b) % p for a, b in zip(r, v)]
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    s = 1 if (i + j) % 2 == 0 else -1
                    br = c[args[i]][args[j]]
                    rest = [a for t, a in enumerate(args) if t not in (i, j)]
                    # omega([x_i, x_j], rest): expand the bracket linearly
                    for q, coeff in enumerate(br):
                        if coeff:
                            v = _cochain_value(omega, idx, [q] + rest, m, p)
                            r = [(a + s * coeff * b) % p for a, b in zip(r, v)]
            out.append(tuple(r))
        return out

    def cochains(k):
        size = math.comb(n, k)
        for flat in itertools.product(range(p), repeat=size * m):
            yield [tuple(flat[i * m:(i + 1) * m]) for i in range(size)]

    dims = {}
    for k in degrees:
        cocycles = [w for w in cochains(k) if not any(any(v) for v in d(w, k))]
        if k == 0:
            bound = 1
        else:
            bound = len({tuple(d(w, k - 1)) for w in cochains(k - 1)})
        dims[k] = log_p(len(cocycles), p) - log_p(bound, p)
    return dims


def restricted_centre_dim(c, act, n, m, p):
    """dim of {x : [x, y] = 0 for all y, x.a = 0 for all a} by enumeration."""
    E = [_unit(n, i) for i in range(n)]
    A = [_unit(m, i) for i in range(m)]
    count = 0
    for x in itertools.product(range(p), repeat=n):
        x = list(x)
        if any(any(_bil(c, x, y, n, p)) for y in E):
            continue
        if any(any(_bil(act, x, a, m, p)) for a in A):
            continue
        count += 1
    return log_p(count, p)
