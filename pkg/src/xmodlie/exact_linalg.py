"""Exact linear algebra over the rationals and odd prime fields.

Vectors are plain tuples of scalars. Rational scalars are
:class:`fractions.Fraction`; prime-field scalars are :class:`ModP`.
Subspaces are stored by their reduced row echelon basis, so two subspaces
are equal exactly when their representations are.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "FieldMismatch",
    "ModP",
    "FieldSpec",
    "QQ",
    "Matrix",
    "Subspace",
    "QuotientSpace",
    "rref",
    "rank",
    "kernel",
    "image",
    "solve",
    "complement",
    "quotient",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "lin_comb",
    "is_zero",
    "unit_vector",
    "zero_vector",
]


class FieldMismatch(ValueError):
    """Raised when scalars or matrices from different fields are combined."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class ModP:
    """Element of the prime field F_p.

    Invariant: ``0 <= value < p``.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch(f"cannot combine F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatch(f"cannot combine F_{self.p} with a rational")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.p)
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, ModP]
Vector = tuple


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``modulus is None``) or F_p for an odd prime p."""

    modulus: int | None = None

    def __post_init__(self):
        p = self.modulus
        if p is None:
            return
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"modulus {p!r} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"Q"`` or ``"Fp:<p>"``."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(None)
        if t.startswith("Fp:") or t.startswith("GF:"):
            try:
                p = int(t.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad field {text!r}") from None
            return cls(p)
        raise ValueError(f"unknown field {text!r}; expected 'Q' or 'Fp:<p>'")

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def __str__(self):
        return "Q" if self.modulus is None else f"Fp:{self.modulus}"

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction, ModP or numeric string into this field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.modulus is None:
            if isinstance(x, ModP):
                raise FieldMismatch("cannot read an F_p element as a rational")
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} to Q")
        p = self.modulus
        if isinstance(x, ModP):
            if x.p != p:
                raise FieldMismatch(f"cannot read F_{x.p} element in F_{p}")
            return x
        if isinstance(x, bool):
            raise TypeError(f"cannot coerce {x!r} to F_{p}")
        if isinstance(x, int):
            return ModP(x, p)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has denominator divisible by {p}")
            return ModP(x.numerator, p) / x.denominator
        raise TypeError(f"cannot coerce {x!r} to F_{p}")

    def contains(self, x) -> bool:
        if self.modulus is None:
            return isinstance(x, Fraction)
        return isinstance(x, ModP) and x.p == self.modulus

    def format(self, x: Scalar) -> str:
        """Canonical string form used in JSON output."""
        x = self(x)
        if self.modulus is None:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x.value)

    def elements(self) -> list[Scalar]:
        if self.modulus is None:
            raise ValueError("Q is infinite")
        return [ModP(v, self.modulus) for v in range(self.modulus)]


QQ = FieldSpec()


# ---------------------------------------------------------------------------
# vectors

def zero_vector(F: FieldSpec, n: int) -> Vector:
    z = F.zero
    return (z,) * n


def unit_vector(F: FieldSpec, n: int, i: int) -> Vector:
    z, o = F.zero, F.one
    return tuple(o if k == i else z for k in range(n))


def vec_add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def lin_comb(F: FieldSpec, n: int, terms: Iterable[tuple]) -> Vector:
    """Sum of ``c * v`` over ``(c, v)`` pairs, as a length-``n`` vector."""
    acc = list(zero_vector(F, n))
    for c, v in terms:
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] = acc[k] + c * a
    return tuple(acc)


def is_zero(v: Iterable) -> bool:
    return not any(v)


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a field, rows stored as tuples."""

    field: FieldSpec
    nrows: int
    ncols: int
    rows: tuple = dc_field(repr=False)

    def __post_init__(self):
        rows = tuple(tuple(self.field(a) for a in r) for r in self.rows)
        if len(rows) != self.nrows or any(len(r) != self.ncols for r in rows):
            raise ValueError(f"rows do not match shape {self.nrows}x{self.ncols}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, F: FieldSpec, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(F, len(rows), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, F: FieldSpec, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        cols = [tuple(c) for c in cols]
        if nrows is None:
            if not cols:
                raise ValueError("nrows required for a matrix with no columns")
            nrows = len(cols[0])
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(F, nrows, len(cols), rows)

    @classmethod
    def zeros(cls, F: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = F.zero
        return cls(F, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, F: FieldSpec, n: int) -> "Matrix":
        return cls(F, n, n, tuple(unit_vector(F, n, i) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, tuple(self.columns()))

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"matrices over {self.field} and {other.field}")

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.ncols} columns")
        v = tuple(self.field(a) for a in v)
        z = self.field.zero
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [self.apply(c) for c in other.columns()]
        return Matrix.from_columns(self.field, cols, nrows=self.nrows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, self.nrows, self.ncols, tuple(vec_scale(c, r) for r in self.rows))

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        return self.transpose().vstack(other.transpose()).transpose()

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def rank(self) -> int:
        return len(rref(self.field, self.rows, self.ncols)[1])


def _as_matrix(F: FieldSpec, rows, ncols: int) -> Matrix:
    return Matrix(F, len(rows), ncols, tuple(rows))


def rref(F: FieldSpec, rows: Sequence[Sequence], ncols: int) -> tuple[tuple, tuple[int, ...]]:
    """Reduced row echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    work = [[F(a) for a in r] for r in rows]
    for r in work:
        if len(r) != ncols:
            raise ValueError("ragged rows")
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, len(work)):
            if work[i][col]:
                piv = i
                break
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        inv = 1 / work[top][col]
        work[top] = [a * inv for a in work[top]]
        prow = work[top]
        for i in range(len(work)):
            if i != top:
                c = work[i][col]
                if c:
                    work[i] = [a - c * b for a, b in zip(work[i], prow)]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return tuple(tuple(r) for r in work[:top]), tuple(pivots)


def rank(m: Matrix) -> int:
    return m.rank()


# ---------------------------------------------------------------------------
# subspaces

@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n given by its canonical (RREF) basis rows."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, F: FieldSpec, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
        rows, piv = rref(F, vecs, n)
        return cls(F, n, rows, piv)

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls(F, n, (), ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> "Subspace":
        return cls.span(F, n, [unit_vector(F, n, i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.basis)

    def basis_matrix(self) -> Matrix:
        """Matrix whose columns are the basis vectors (inclusion map)."""
        return Matrix.from_columns(self.field, self.basis, nrows=self.ambient_dim)

    def canonicalize(self) -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.basis)

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coordinates of ``v`` in the canonical basis, or None if v is not in the subspace."""
        v = tuple(self.field(a) for a in v)
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        coords = tuple(v[p] for p in self.pivots)
        rest = vec_sub(v, lin_comb(self.field, self.ambient_dim, zip(coords, self.basis)))
        return coords if is_zero(rest) else None

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v):
        return self.contains(v)

    def vector(self, coords: Sequence) -> Vector:
        return lin_comb(self.field, self.ambient_dim, zip(coords, self.basis))

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        F, n = self.field, self.ambient_dim
        if not self.basis or not other.basis:
            return Subspace.zero(F, n)
        # u in both iff u = A s = B t; solve [A | -B] (s, t) = 0
        cols = list(self.basis) + [vec_scale(F(-1), b) for b in other.basis]
        sol = kernel(Matrix.from_columns(F, cols, nrows=n))
        vecs = [lin_comb(F, n, zip(s[: self.dim], self.basis)) for s in sol.basis]
        return Subspace.span(F, n, vecs)

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.span(self.field, m.nrows, [m.apply(b) for b in self.basis])


def kernel(m: Matrix) -> Subspace:
    """Canonical basis of ``{v : m v = 0}``."""
    F, n = m.field, m.ncols
    rows, piv = rref(F, m.rows, n)
    pivset = set(piv)
    vecs = []
    for free in range(n):
        if free in pivset:
            continue
        v = [F.zero] * n
        v[free] = F.one
        for r, p in zip(rows, piv):
            v[p] = -r[free]
        vecs.append(v)
    return Subspace.span(F, n, vecs)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.field, m.nrows, m.columns())


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some ``v`` with ``m v = b``, or None when the system is inconsistent."""
    F = m.field
    if len(b) != m.nrows:
        raise ValueError(f"right-hand side of length {len(b)} for {m.nrows} rows")
    b = tuple(F(x) for x in b)
    aug = [r + (x,) for r, x in zip(m.rows, b)]
    rows, piv = rref(F, aug, m.ncols + 1)
    if piv and piv[-1] == m.ncols:
        return None
    v = [F.zero] * m.ncols
    for r, p in zip(rows, piv):
        v[p] = r[-1]
    return tuple(v)


def complement(u: Subspace, reverse: bool = False) -> Subspace:
    """Coordinate complement T with ``u + T`` the whole space and ``u & T = 0``.

    By default T is spanned by the standard vectors at the non-pivot columns of
    u's canonical basis. With ``reverse=True`` the echelon form is taken with the
    column order reversed, which prefers pivots on the right and generally gives
    a different complement.
    """
    F, n = u.field, u.ambient_dim
    if reverse:
        _, piv = rref(F, [tuple(reversed(b)) for b in u.basis], n)
        pivset = {n - 1 - p for p in piv}
    else:
        pivset = set(u.pivots)
    return Subspace.span(F, n, [unit_vector(F, n, j) for j in range(n) if j not in pivset])


@dataclass(frozen=True)
class QuotientSpace:
    """Quotient F^n / u with a projection and a section (representatives)."""

    ambient_dim: int
    subspace: Subspace
    projection: Matrix
    section: Matrix

    @property
    def dim(self) -> int:
        return self.projection.nrows

    @property
    def field(self) -> FieldSpec:
        return self.subspace.field

    def project(self, v: Sequence) -> Vector:
        return self.projection.apply(v)

    def lift(self, coords: Sequence) -> Vector:
        return self.section.apply(coords)

    def representatives(self) -> list[Vector]:
        return self.section.columns()


def quotient(ambient_dim: int, u: Subspace) -> QuotientSpace:
    F = u.field
    if u.ambient_dim != ambient_dim:
        raise ValueError("subspace lives in a different ambient space")
    pivset = set(u.pivots)
    free = [j for j in range(ambient_dim) if j not in pivset]
    section = Matrix.from_columns(F, [unit_vector(F, ambient_dim, j) for j in free], nrows=ambient_dim)
    # reduce v against the echelon basis so it vanishes on pivot columns,
    # then read off the free coordinates
    proj_cols = []
    for j in range(ambient_dim):
        e = unit_vector(F, ambient_dim, j)
        coords = tuple(e[p] for p in u.pivots)
        r = vec_sub(e, lin_comb(F, ambient_dim, zip(coords, u.basis)))
        proj_cols.append(tuple(r[k] for k in free))
    projection = Matrix.from_columns(F, proj_cols, nrows=len(free))
    return QuotientSpace(ambient_dim, u, projection, section)


def enumerate_vectors(F: FieldSpec, n: int) -> Iterator[Vector]:
    """All vectors of F_p^n (finite fields only)."""
    return itertools.product(F.elements(), repeat=n)
