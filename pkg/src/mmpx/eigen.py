"""Eigenpairs ``M(v) = lambda ⊗ v`` of bipartite min-max-plus systems.

Three solvers are provided:

``solve_fixedpoint``
    Iterate the normalized map ``N`` from a start state until an exact
    repeat ``x*(r) = x*(s)``, take the entrywise max over the cycle, and if
    that is not yet a fixed point of ``N`` keep iterating from it until it is.
``solve_latin``
    The same, with lambda read off a Latin-square system as
    ``(max A + min B) / 2``.
``solve_power``
    The classical power algorithm: iterate ``M`` until an affine repeat
    ``x(r) = c ⊗ x(s)``, then lambda = ``c / (r - s)``.

All arithmetic is exact, so repeats are detected by equality and every
returned pair verifies with an all-zero residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import InvariantViolation, NoFiniteEntry, NonConvergence
from .system import (
    BipartiteSystem,
    StateVector,
    apply_M,
    apply_N,
    normalize,
    shift_state,
    state_sup,
)
from .tropical import TropicalVector, canon, is_finite

DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class EigenPair:
    lam: object
    v: StateVector


@dataclass
class SolverTrace:
    """Everything a solve did, for inspection, benchmarking and serialization.

    ``iterates`` holds the first phase ``x(0) .. x(r)``; ``continuation``
    holds ``y(0) = cycle_sup, y(1), ...`` of the second phase, if one ran.
    """

    algorithm: str
    iterates: List[StateVector]
    s: int
    r: int
    c: object = None
    lam: object = None
    cycle_sup: Optional[StateVector] = None
    continuation: List[StateVector] = field(default_factory=list)
    continuation_steps: int = 0
    map_applications: int = 0

    @property
    def period(self) -> int:
        return self.r - self.s


@dataclass(frozen=True)
class Verification:
    valid: bool
    residual: TropicalVector
    image: StateVector


class RepeatIndex:
    """Hash index over visited states.

    In exact mode a hit means ``x == history[s]``. In affine mode states are
    keyed by their differences to the first coordinate, so a hit means
    ``x - history[s]`` is a constant vector. Dict lookups compare keys by
    exact equality, so a hash collision can never produce a false hit.
    Only the first index per key is kept, which makes ``s`` minimal.
    """

    def __init__(self, affine: bool = False):
        self.affine = affine
        self._first = {}
        self._states = []

    def _key(self, x: StateVector):
        e = x.entries
        if not self.affine:
            return e
        base = e[0]
        return tuple(canon(a - base) for a in e)

    def add(self, x: StateVector) -> int:
        idx = len(self._states)
        self._states.append(x)
        self._first.setdefault(self._key(x), idx)
        return idx

    def find(self, x: StateVector):
        """Return ``(s, c)`` for the earliest matching state, or ``None``."""
        s = self._first.get(self._key(x))
        if s is None:
            return None
        return s, canon(x.entries[0] - self._states[s].entries[0])

    def __len__(self):
        return len(self._states)


def detect_affine_repeat(history: Sequence[StateVector], x_new: StateVector,
                         require_zero: bool = False):
    """Smallest ``s`` with ``x_new = c ⊗ history[s]``; returns ``(s, c)`` or ``None``.

    With ``require_zero`` only exact repeats (``c == 0``) count.
    """
    for x in list(history) + [x_new]:
        if not x.is_finite():
            raise ValueError("affine repeat detection needs finite states")
    index = RepeatIndex(affine=not require_zero)
    for x in history:
        index.add(x)
    return index.find(x_new)


def _check_start(sys: BipartiteSystem, x0: StateVector, max_iter: int):
    sys.check_state(x0)
    if not x0.is_finite():
        raise ValueError("start state must be finite")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")


def _iterate_until_repeat(step, x0, max_iter, affine, label):
    index = RepeatIndex(affine=affine)
    index.add(x0)
    iterates = [x0]
    while True:
        if len(iterates) - 1 >= max_iter:
            raise NonConvergence(
                f"{label}: no repeat within {max_iter} map applications", max_iter
            )
        x = step(iterates[-1])
        hit = index.find(x)
        iterates.append(x)
        if hit is not None:
            return iterates, hit[0], hit[1]
        index.add(x)


def solve_fixedpoint(sys: BipartiteSystem, lam, x0: StateVector,
                     max_iter: int = DEFAULT_MAX_ITER):
    """Eigenvector for a given eigenvalue ``lam`` by normalized fixed-point iteration.

    Returns ``(EigenPair, SolverTrace)``. Raises :class:`NonConvergence` if
    either phase exceeds ``max_iter`` applications of ``N``, which is what
    happens when ``lam`` is not an eigenvalue reachable from ``x0``.
    """
    lam = canon(lam)
    _check_start(sys, x0, max_iter)
    nsys = normalize(sys, lam)

    def step(x):
        return apply_N(nsys, x)

    iterates, s, _ = _iterate_until_repeat(step, x0, max_iter, False, "fixed-point")
    r = len(iterates) - 1
    apps = r

    v = state_sup(iterates[s:r])
    nv = step(v)
    apps += 1
    if not nv >= v:
        raise InvariantViolation("N(v) >= v failed for the cycle supremum")

    trace = SolverTrace("fixed", iterates, s, r, lam=lam, cycle_sup=v)
    prev, cur = v, nv
    continuation = [v, nv]
    t = 0
    while cur != prev:
        if not cur >= prev:
            raise InvariantViolation(f"continuation not monotone at step {t}")
        if t + 1 >= max_iter:
            raise NonConvergence(
                f"fixed-point continuation: no fixed point within {max_iter} steps",
                apps,
            )
        prev, cur = cur, step(cur)
        continuation.append(cur)
        apps += 1
        t += 1

    if t:
        trace.continuation = continuation
    trace.continuation_steps = t
    trace.map_applications = apps
    return EigenPair(lam, prev), trace


def latin_eigenvalue(sys: BipartiteSystem):
    """``(max finite entry of A + min finite entry of B) / 2``."""
    a = sys.A.finite_entries()
    b = sys.B.finite_entries()
    if not a:
        raise NoFiniteEntry("A has no finite entry")
    if not b:
        raise NoFiniteEntry("B has no finite entry")
    return canon(Fraction(max(a) + min(b), 2))


def solve_latin(sys: BipartiteSystem, x0: StateVector, max_iter: int = DEFAULT_MAX_ITER):
    pair, trace = solve_fixedpoint(sys, latin_eigenvalue(sys), x0, max_iter)
    trace.algorithm = "latin"
    return pair, trace


def solve_power(sys: BipartiteSystem, x0: StateVector, max_iter: int = DEFAULT_MAX_ITER):
    """Power algorithm on ``M`` itself.

    Stops at the first affine repeat ``x(r) = c ⊗ x(s)``, sets
    ``lam = c / (r - s)`` and builds::

        v = max_{j=1..p} ( (p - j) * lam + x(s + j - 1) ),   p = r - s

    If ``M(v) != lam ⊗ v`` it restarts from ``v`` until
    ``x(t + 1) = lam ⊗ x(t)`` and returns ``x(t)``.
    """
    _check_start(sys, x0, max_iter)

    def step(x):
        return apply_M(sys, x)

    iterates, s, c = _iterate_until_repeat(step, x0, max_iter, True, "power")
    r = len(iterates) - 1
    p = r - s
    lam = canon(Fraction(c) / p)
    apps = r

    v = state_sup([shift_state((p - j) * lam, iterates[s + j - 1]) for j in range(1, p + 1)])
    trace = SolverTrace("power", iterates, s, r, c=c, lam=lam, cycle_sup=v)

    prev, cur = v, step(v)
    apps += 1
    continuation = [prev, cur]
    t = 0
    while cur != shift_state(lam, prev):
        if t + 1 >= max_iter:
            raise NonConvergence(
                f"power continuation: no eigenvector within {max_iter} steps", apps
            )
        prev, cur = cur, step(cur)
        continuation.append(cur)
        apps += 1
        t += 1

    if t:
        trace.continuation = continuation
    trace.continuation_steps = t
    trace.map_applications = apps
    return EigenPair(lam, prev), trace


def verify_eigenpair(sys: BipartiteSystem, pair: EigenPair) -> Verification:
    """Residual ``M(v)_i - (lam + v_i)``; valid iff it is zero everywhere."""
    v = sys.check_state(pair.v)
    if not v.is_finite():
        raise ValueError("eigenvectors must be finite")
    lam = canon(pair.lam)
    image = apply_M(sys, v)
    residual = []
    for got, vi in zip(image.entries, v.entries):
        if not is_finite(got):
            raise InvariantViolation("system maps a finite state to an infinite one")
        residual.append(canon(got - lam - vi))
    return Verification(all(x == 0 for x in residual), TropicalVector(tuple(residual)), image)
