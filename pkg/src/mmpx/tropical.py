"""Exact max-plus / min-plus arithmetic over the extended rationals.

A scalar (an "extended value") is one of

* a finite exact rational, stored canonically as ``int`` when integral and as
  a reduced :class:`fractions.Fraction` otherwise,
* :data:`EPS`, negative infinity (the zero of max-plus),
* :data:`TAU`, positive infinity (the zero of min-plus).

Floats are rejected everywhere. Python ints are unbounded, so sums never
overflow.

Matrices and vectors are immutable and dense (row-major tuples).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch


class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "EPS" if self.sign < 0 else "TAU"

    def __str__(self):
        return "-inf" if self.sign < 0 else "+inf"

    def __reduce__(self):
        return (_infinity, (self.sign,))

    def __hash__(self):
        return hash(("mmpx-inf", self.sign))

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        if isinstance(other, Rational):
            return self.sign < 0
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign > other.sign
        if isinstance(other, Rational):
            return self.sign > 0
        return NotImplemented

    def __le__(self, other):
        return self == other or self < other

    def __ge__(self, other):
        return self == other or self > other


#: negative infinity, written epsilon in the max-plus literature
EPS = _Infinity(-1)
#: positive infinity, written tau in the min-plus literature
TAU = _Infinity(+1)


def _infinity(sign):
    return EPS if sign < 0 else TAU


Finite = Union[int, Fraction]
ExtendedValue = Union[int, Fraction, _Infinity]


class Context(enum.Enum):
    """Which semiring an addition happens in; decides ``EPS + TAU``."""

    MAX_PLUS = "max-plus"
    MIN_PLUS = "min-plus"


MAX_PLUS = Context.MAX_PLUS
MIN_PLUS = Context.MIN_PLUS


def canon(q) -> Finite:
    """Canonical finite form: ``int`` if integral, reduced ``Fraction`` otherwise."""
    if type(q) is int:
        return q
    if isinstance(q, bool):
        raise TypeError("booleans are not tropical scalars")
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    if isinstance(q, Rational):
        return canon(Fraction(q.numerator, q.denominator))
    if isinstance(q, str):
        return canon(Fraction(q))
    raise TypeError(f"expected an exact rational, got {type(q).__name__}")


def ext(x) -> ExtendedValue:
    """Coerce ``x`` to an extended value.

    Accepts ints, Fractions, :data:`EPS`/:data:`TAU` and the strings
    ``"-inf"``/``"+inf"``/``"p/q"``.
    """
    if isinstance(x, _Infinity):
        return x
    if isinstance(x, str):
        s = x.strip()
        if s == "-inf":
            return EPS
        if s in ("+inf", "inf"):
            return TAU
    return canon(x)


def is_finite(x) -> bool:
    return not isinstance(x, _Infinity)


def tmax(a: ExtendedValue, b: ExtendedValue) -> ExtendedValue:
    """``a ⊕ b``."""
    return a if a >= b else b


def tmin(a: ExtendedValue, b: ExtendedValue) -> ExtendedValue:
    """``a ⊕' b``."""
    return a if a <= b else b


def tadd(a: ExtendedValue, b: ExtendedValue, ctx: Context = MAX_PLUS) -> ExtendedValue:
    """``a ⊗ b``, i.e. ordinary addition extended to the infinities.

    An infinity absorbs any finite value. ``EPS + TAU`` is EPS in max-plus
    and TAU in min-plus, so an absent arc never contributes to a max or a min.
    """
    a_inf = isinstance(a, _Infinity)
    b_inf = isinstance(b, _Infinity)
    if not (a_inf or b_inf):
        s = a + b
        if type(s) is not int and s.denominator == 1:
            return s.numerator
        return s
    if a_inf and b_inf and a is not b:
        return EPS if ctx is MAX_PLUS else TAU
    return a if a_inf else b


def neg(a: Finite) -> Finite:
    return canon(-a)


@dataclass(frozen=True)
class TropicalVector:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(ext(x) for x in self.entries))
        if not self.entries:
            raise ValueError("vectors must be non-empty")

    @classmethod
    def of(cls, *values) -> "TropicalVector":
        return cls(tuple(values))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def is_finite(self) -> bool:
        return all(is_finite(x) for x in self.entries)


@dataclass(frozen=True)
class TropicalMatrix:
    """Dense ``rows x cols`` matrix of extended values, stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(ext(x) for x in self.entries))
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "TropicalMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionMismatch("matrix must have at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def filled(cls, rows: int, cols: int, value) -> "TropicalMatrix":
        return cls(rows, cols, (value,) * (rows * cols))

    @classmethod
    def identity(cls, n: int, ctx: Context = MAX_PLUS) -> "TropicalMatrix":
        """0 on the diagonal, the semiring zero (EPS or TAU) elsewhere."""
        zero = EPS if ctx is MAX_PLUS else TAU
        return cls(n, n, tuple(0 if i == j else zero for i in range(n) for j in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> ExtendedValue:
        """1-based accessor, ``1 <= i <= rows``, ``1 <= j <= cols``."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row(self, i: int) -> tuple:
        """0-based row slice."""
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def finite_entries(self) -> list:
        return [x for x in self.entries if is_finite(x)]


def _same_shape(a: TropicalMatrix, b: TropicalMatrix):
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")


def mat_oplus(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    """Elementwise max."""
    _same_shape(a, b)
    return TropicalMatrix(a.rows, a.cols, tuple(map(tmax, a.entries, b.entries)))


def mat_oplus_prime(u: TropicalMatrix, v: TropicalMatrix) -> TropicalMatrix:
    """Elementwise min."""
    _same_shape(u, v)
    return TropicalMatrix(u.rows, u.cols, tuple(map(tmin, u.entries, v.entries)))


def scalar_mul(alpha, a: TropicalMatrix, ctx: Context = MAX_PLUS) -> TropicalMatrix:
    """``alpha ⊗ A``: add the finite scalar ``alpha`` to every entry."""
    alpha = canon(alpha)
    return TropicalMatrix(a.rows, a.cols, tuple(tadd(alpha, x, ctx) for x in a.entries))


def _matvec(a: TropicalMatrix, x: Sequence, ctx: Context, pick) -> tuple:
    if a.cols != len(x):
        raise DimensionMismatch(f"{a.rows}x{a.cols} matrix times length-{len(x)} vector")
    out = []
    for i in range(a.rows):
        row = a.row(i)
        acc = tadd(row[0], x[0], ctx)
        for k in range(1, a.cols):
            acc = pick(acc, tadd(row[k], x[k], ctx))
        out.append(acc)
    return tuple(out)


def maxplus_matvec(a: TropicalMatrix, w) -> TropicalVector:
    """``(A ⊗ w)_i = max_k (a_ik + w_k)``."""
    return TropicalVector(_matvec(a, tuple(w), MAX_PLUS, tmax))


def minplus_matvec(b: TropicalMatrix, u) -> TropicalVector:
    """``(B ⊗' u)_j = min_k (b_jk + u_k)``."""
    return TropicalVector(_matvec(b, tuple(u), MIN_PLUS, tmin))


def _matmul(a: TropicalMatrix, b: TropicalMatrix, ctx: Context, pick) -> TropicalMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for i in range(a.rows):
        row = a.row(i)
        for j in range(b.cols):
            acc = tadd(row[0], b.entries[j], ctx)
            for k in range(1, a.cols):
                acc = pick(acc, tadd(row[k], b.entries[k * b.cols + j], ctx))
            out.append(acc)
    return TropicalMatrix(a.rows, b.cols, tuple(out))


def maxplus_matmul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    return _matmul(a, b, MAX_PLUS, tmax)


def minplus_matmul(u: TropicalMatrix, v: TropicalMatrix) -> TropicalMatrix:
    return _matmul(u, v, MIN_PLUS, tmin)


def fmt(x: ExtendedValue) -> str:
    """Exact text form: ``-inf``, ``+inf``, ``p`` or ``p/q``."""
    return str(x)


def vector(values: Iterable) -> TropicalVector:
    return TropicalVector(tuple(values))
