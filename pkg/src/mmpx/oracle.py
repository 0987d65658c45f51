"""Definition-level reference code used to cross-check the fast paths.

Nothing here calls into the matrix-vector routines of :mod:`mmpx.tropical`
or the maps of :mod:`mmpx.system`; the scalar rules are re-derived inline.
Slow on purpose.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DimensionMismatch, TooLarge
from .system import BipartiteSystem, StateVector
from .tropical import EPS, TAU, TropicalMatrix

MAX_ENUM_DIM = 5
MAX_ENUM_RADIUS = 6


def _plus(a, b, absorbing):
    # absorbing decides -inf + +inf: EPS on the max side, TAU on the min side
    if a is EPS or a is TAU or b is EPS or b is TAU:
        if (a is EPS or b is EPS) and (a is TAU or b is TAU):
            return absorbing
        return a if (a is EPS or a is TAU) else b
    return Fraction(a) + Fraction(b)


def _rank(x):
    if x is EPS:
        return (0, 0)
    if x is TAU:
        return (2, 0)
    return (1, Fraction(x))


def _back(x):
    if x is EPS or x is TAU:
        return x
    return x.numerator if x.denominator == 1 else x


def naive_apply_M(A: TropicalMatrix, B: TropicalMatrix, x: StateVector) -> StateVector:
    """``u_i' = max_j (a_ij + w_j)``, ``w_j' = min_i (b_ji + u_i)`` by double loops."""
    m, n = A.rows, A.cols
    if (B.rows, B.cols) != (n, m):
        raise DimensionMismatch(f"A {m}x{n} and B {B.rows}x{B.cols} are not conjugate")
    if (len(x.u), len(x.w)) != (m, n):
        raise DimensionMismatch("state does not match the matrices")
    u_new = []
    for i in range(m):
        best = None
        for j in range(n):
            term = _plus(A.entries[i * n + j], x.w.entries[j], EPS)
            if best is None or _rank(term) > _rank(best):
                best = term
        u_new.append(_back(best))
    w_new = []
    for j in range(n):
        best = None
        for i in range(m):
            term = _plus(B.entries[j * m + i], x.u.entries[i], TAU)
            if best is None or _rank(term) < _rank(best):
                best = term
        w_new.append(_back(best))
    return StateVector.of(u_new, w_new)


def naive_residual(sys: BipartiteSystem, lam, v: StateVector) -> list:
    image = naive_apply_M(sys.A, sys.B, v)
    return [_back(Fraction(g) - Fraction(lam) - Fraction(x))
            for g, x in zip(image.entries, v.entries)]


def brute_residual_grid(sys: BipartiteSystem, lam, radius: int, step) -> list:
    """All eigenvectors for ``lam`` on a bounded lattice, first coordinate pinned to 0.

    Candidates have every other coordinate in
    ``{-radius, -radius + step, ..., radius}``. Returned in lexicographic
    order.
    """
    dim = sys.m + sys.n
    if dim > MAX_ENUM_DIM:
        raise TooLarge(f"m + n = {dim} exceeds {MAX_ENUM_DIM}")
    if radius > MAX_ENUM_RADIUS:
        raise TooLarge(f"radius {radius} exceeds {MAX_ENUM_RADIUS}")
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    count = int((2 * radius) / step) + 1
    axis = [_back(-radius + k * step) for k in range(count)]
    found = []
    for rest in itertools.product(axis, repeat=dim - 1):
        v = StateVector.from_entries((0,) + rest, sys.m)
        if all(r == 0 for r in naive_residual(sys, lam, v)):
            found.append(v)
    return found
