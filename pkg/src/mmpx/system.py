"""Bipartite min-max-plus systems and their one-step maps.

The system couples a max-plus half and a min-plus half::

    u(l+1) = A ⊗ w(l)        (max-plus, A is m x n, entries may be EPS)
    w(l+1) = B ⊗' u(l)       (min-plus, B is n x m, entries may be TAU)

Both halves read the state at step ``l`` (simultaneous update).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, EmptyList
from .tropical import (
    EPS,
    MAX_PLUS,
    MIN_PLUS,
    TAU,
    TropicalMatrix,
    TropicalVector,
    canon,
    is_finite,
    maxplus_matvec,
    minplus_matvec,
    neg,
    scalar_mul,
    tadd,
    tmax,
)


@dataclass(frozen=True)
class StateVector:
    """Stacked state ``x = (u; w)``."""

    u: TropicalVector
    w: TropicalVector

    def __post_init__(self):
        if not isinstance(self.u, TropicalVector):
            object.__setattr__(self, "u", TropicalVector(tuple(self.u)))
        if not isinstance(self.w, TropicalVector):
            object.__setattr__(self, "w", TropicalVector(tuple(self.w)))

    @classmethod
    def of(cls, u: Sequence, w: Sequence) -> "StateVector":
        return cls(TropicalVector(tuple(u)), TropicalVector(tuple(w)))

    @classmethod
    def from_entries(cls, entries: Sequence, m: int) -> "StateVector":
        """Split a flat ``m + n`` sequence into ``(u; w)``."""
        entries = tuple(entries)
        if not 0 < m < len(entries):
            raise DimensionMismatch(f"cannot split {len(entries)} entries at m={m}")
        return cls.of(entries[:m], entries[m:])

    @classmethod
    def zeros(cls, m: int, n: int) -> "StateVector":
        return cls.of((0,) * m, (0,) * n)

    @property
    def m(self) -> int:
        return len(self.u)

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def entries(self) -> tuple:
        return self.u.entries + self.w.entries

    def is_finite(self) -> bool:
        return self.u.is_finite() and self.w.is_finite()

    def __le__(self, other: "StateVector") -> bool:
        """Entrywise partial order."""
        _same_dims(self, other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: "StateVector") -> bool:
        return other <= self


def _same_dims(x: StateVector, y: StateVector):
    if (x.m, x.n) != (y.m, y.n):
        raise DimensionMismatch(f"state dims ({x.m};{x.n}) vs ({y.m};{y.n})")


@dataclass(frozen=True)
class BipartiteSystem:
    """The pair ``(A, B)``; A is ``m x n`` over max-plus, B is ``n x m`` over min-plus."""

    A: TropicalMatrix
    B: TropicalMatrix

    def __post_init__(self):
        A, B = self.A, self.B
        if (A.rows, A.cols) != (B.cols, B.rows):
            raise DimensionMismatch(
                f"A is {A.rows}x{A.cols} so B must be {A.cols}x{A.rows}, got {B.rows}x{B.cols}"
            )
        if any(x is TAU for x in A.entries):
            raise ValueError("A may not contain +inf")
        if any(x is EPS for x in B.entries):
            raise ValueError("B may not contain -inf")
        for name, M in (("A", A), ("B", B)):
            for i in range(M.rows):
                if not any(is_finite(x) for x in M.row(i)):
                    raise ValueError(f"row {i + 1} of {name} has no finite entry")

    @classmethod
    def from_rows(cls, a_rows, b_rows) -> "BipartiteSystem":
        return cls(TropicalMatrix.from_rows(a_rows), TropicalMatrix.from_rows(b_rows))

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    def check_state(self, x: StateVector) -> StateVector:
        if (x.m, x.n) != (self.m, self.n):
            raise DimensionMismatch(
                f"state has blocks ({x.m};{x.n}), system needs ({self.m};{self.n})"
            )
        return x

    def state(self, entries: Sequence) -> StateVector:
        """Build a state from a flat sequence, validated against this system."""
        if len(entries) != self.m + self.n:
            raise DimensionMismatch(f"expected {self.m + self.n} entries, got {len(entries)}")
        return StateVector.from_entries(entries, self.m)

    def zeros(self) -> StateVector:
        return StateVector.zeros(self.m, self.n)


@dataclass(frozen=True)
class NormalizedSystem:
    """``A_lambda = (-lambda) ⊗ A`` and ``B_lambda = (-lambda) ⊗ B``."""

    A_lambda: TropicalMatrix
    B_lambda: TropicalMatrix
    lam: object

    @property
    def m(self) -> int:
        return self.A_lambda.rows

    @property
    def n(self) -> int:
        return self.A_lambda.cols


def _apply(A: TropicalMatrix, B: TropicalMatrix, x: StateVector) -> StateVector:
    if (x.m, x.n) != (A.rows, A.cols):
        raise DimensionMismatch(
            f"state has blocks ({x.m};{x.n}), system needs ({A.rows};{A.cols})"
        )
    return StateVector(maxplus_matvec(A, x.w), minplus_matvec(B, x.u))


def apply_M(sys: BipartiteSystem, x: StateVector) -> StateVector:
    """One step of the system: ``(A ⊗ w; B ⊗' u)``."""
    return _apply(sys.A, sys.B, x)


def normalize(sys: BipartiteSystem, lam) -> NormalizedSystem:
    lam = canon(lam)
    shift = neg(lam)
    return NormalizedSystem(
        scalar_mul(shift, sys.A, MAX_PLUS), scalar_mul(shift, sys.B, MIN_PLUS), lam
    )


def apply_N(nsys: NormalizedSystem, x: StateVector) -> StateVector:
    """One step of the normalized system."""
    return _apply(nsys.A_lambda, nsys.B_lambda, x)


def state_sup(xs: Sequence[StateVector]) -> StateVector:
    """Entrywise maximum of a non-empty list of states."""
    xs = list(xs)
    if not xs:
        raise EmptyList("state_sup of an empty list")
    first = xs[0]
    u, w = list(first.u.entries), list(first.w.entries)
    for x in xs[1:]:
        _same_dims(first, x)
        u = [tmax(a, b) for a, b in zip(u, x.u.entries)]
        w = [tmax(a, b) for a, b in zip(w, x.w.entries)]
    return StateVector.of(u, w)


def shift_state(c, x: StateVector) -> StateVector:
    """``c ⊗ x`` for a finite scalar ``c``."""
    c = canon(c)
    return StateVector.of(
        [tadd(c, a, MAX_PLUS) for a in x.u.entries],
        [tadd(c, a, MIN_PLUS) for a in x.w.entries],
    )
