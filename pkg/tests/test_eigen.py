from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from example_data import (
    M_OF_V_FIXED,
    NORMALIZED_RUN,
    POWER_RUN,
    V_FIXED,
    V_POWER,
    E,
    T,
    state,
)
from mmpx import worked
from mmpx.eigen import (
    EigenPair,
    RepeatIndex,
    detect_affine_repeat,
    latin_eigenvalue,
    solve_fixedpoint,
    solve_latin,
    solve_power,
    verify_eigenpair,
)
from mmpx.errors import DimensionMismatch, NoFiniteEntry, NonConvergence
from mmpx.latin import build_system
from mmpx.oracle import naive_apply_M, naive_residual
from mmpx.system import BipartiteSystem, StateVector, apply_N, normalize, shift_state
from mmpx.tropical import TropicalMatrix
from strategies import finite_states, latin_systems, rationals

ONE = BipartiteSystem.from_rows([[3]], [[1]])
ZERO1 = StateVector.of([0], [0])

# order-3 case-4 system whose cycle supremum is not yet a fixed point;
# every value below was iterated by hand
CONT_SYS = BipartiteSystem.from_rows([[E, 1, 2], [1, 2, E], [2, E, 1]],
                                     [[T, 2, 1], [2, 1, T], [1, T, 2]])
CONT_X0 = StateVector.of([1, 2, -1], [1, 1, -1])
H = Fraction(1, 2)
CONT_FIXED_RUN = [(1, 2, -1, 1, 1, -1),
                  (H, 3 * H, 3 * H, -3 * H, 3 * H, -H),
                  (1, 2, -1, 1, 1, 0),
                  (H, 3 * H, 3 * H, -3 * H, 3 * H, -H)]
CONT_FIXED_SUP = (1, 2, 3 * H, 1, 3 * H, 0)
CONT_FIXED_V = (1, 2, 3 * H, 1, 3 * H, H)
CONT_POWER_RUN = [(1, 2, -1, 1, 1, -1), (2, 3, 3, 0, 3, 1), (4, 5, 2, 4, 4, 3), (5, 6, 6, 3, 6, 4)]
CONT_POWER_SUP = (4, 5, 9 * H, 4, 9 * H, 3)
CONT_POWER_V = (11 * H, 13 * H, 6, 11 * H, 6, 5)

# general (non-Latin) system whose continuation phase outlasts the first phase
LONG_SYS = BipartiteSystem.from_rows([[-2, 0, 2], [-3, 3, E], [3, E, E]],
                                     [[1, -3, 0], [T, 0, -2], [-1, 0, 2]])
LONG_X0 = StateVector.of([3, 1, -4], [2, -1, 4])


def s3(entries):
    return state(entries, 3)


class TestFixedPoint:
    def test_worked_example(self, ex_sys, ex_x0):
        pair, trace = solve_fixedpoint(ex_sys, 2, ex_x0, 1000)
        assert pair.lam == 2
        assert pair.v == state(V_FIXED)
        assert (trace.s, trace.r, trace.continuation_steps) == (0, 6, 0)
        assert [x.entries for x in trace.iterates] == NORMALIZED_RUN
        assert trace.c is None
        assert trace.map_applications == 7

    def test_scalar_system(self):
        # u' = 1 + w, w' = -1 + u: (0;0) -> (1;-1) -> (0;0); sup (1;0) is fixed
        pair, trace = solve_fixedpoint(ONE, 2, ZERO1, 100)
        assert [x.entries for x in trace.iterates] == [(0, 0), (1, -1), (0, 0)]
        assert (trace.s, trace.r, trace.continuation_steps) == (0, 2, 0)
        assert pair.v == StateVector.of([1], [0])
        a_lam = TropicalMatrix.from_rows([[1]])
        b_lam = TropicalMatrix.from_rows([[-1]])
        assert naive_apply_M(a_lam, b_lam, pair.v) == pair.v
        assert naive_residual(ONE, 2, pair.v) == [0, 0]

    def test_wrong_lambda_does_not_converge(self, ex_sys, ex_x0):
        a_lam = TropicalMatrix(4, 4, tuple(x - 3 if x is not E else E for x in ex_sys.A.entries))
        b_lam = TropicalMatrix(4, 4, tuple(x - 3 if x is not T else T for x in ex_sys.B.entries))
        seen = [ex_x0]
        for _ in range(50):
            seen.append(naive_apply_M(a_lam, b_lam, seen[-1]))
        assert len(set(seen)) == len(seen)
        with pytest.raises(NonConvergence, match="no repeat"):
            solve_fixedpoint(ex_sys, 3, ex_x0, 50)

    def test_continuation_branch(self):
        pair, trace = solve_fixedpoint(CONT_SYS, Fraction(3, 2), CONT_X0)
        assert [x.entries for x in trace.iterates] == CONT_FIXED_RUN
        assert (trace.s, trace.r) == (1, 3)
        assert trace.cycle_sup == s3(CONT_FIXED_SUP)
        assert trace.continuation_steps == 1
        assert pair.v == s3(CONT_FIXED_V)
        assert trace.map_applications == 5
        assert naive_residual(CONT_SYS, Fraction(3, 2), pair.v) == [0] * 6

    def test_continuation_cap(self):
        pair, trace = solve_fixedpoint(LONG_SYS, Fraction(1, 4), LONG_X0, 100)
        assert trace.continuation_steps > trace.r
        assert verify_eigenpair(LONG_SYS, pair).valid
        with pytest.raises(NonConvergence, match="continuation"):
            solve_fixedpoint(LONG_SYS, Fraction(1, 4), LONG_X0, trace.r)

    def test_preconditions(self, ex_sys, ex_x0):
        with pytest.raises(ValueError):
            solve_fixedpoint(ex_sys, 2, StateVector.of([E, 0, 0, 0], [0] * 4))
        with pytest.raises(ValueError):
            solve_fixedpoint(ex_sys, 2, ex_x0, 0)
        with pytest.raises(DimensionMismatch):
            solve_fixedpoint(ex_sys, 2, ZERO1)


class TestLatin:
    def test_eigenvalue(self, ex_sys):
        assert latin_eigenvalue(ex_sys) == 2
        assert latin_eigenvalue(ONE) == 2

    def test_eigenvalue_of_unmasked_square(self):
        sys_ = build_system(worked.LATIN_L, worked.LATIN_L)
        lam = latin_eigenvalue(sys_)
        assert lam == Fraction(5, 2)
        assert solve_power(sys_, sys_.zeros())[0].lam == lam

    def test_eigenvalue_needs_finite_entries(self):
        class Fake:
            A = TropicalMatrix.from_rows([[E]])
            B = TropicalMatrix.from_rows([[1]])
        with pytest.raises(NoFiniteEntry):
            latin_eigenvalue(Fake)

    def test_worked_example(self, ex_sys, ex_x0):
        pair, trace = solve_latin(ex_sys, ex_x0, 1000)
        assert (pair.lam, pair.v) == (2, state(V_FIXED))
        assert trace.algorithm == "latin"

    def test_from_zeros(self, ex_sys):
        pair, _ = solve_latin(ex_sys, ex_sys.zeros(), 1000)
        assert pair.lam == 2
        assert verify_eigenpair(ex_sys, pair).valid

    def test_scalar_system(self):
        pair, _ = solve_latin(ONE, ZERO1, 100)
        assert pair.lam == 2
        assert pair.v.u[0] - pair.v.w[0] == 1


class TestPower:
    def test_worked_example(self, ex_sys, ex_x0):
        pair, trace = solve_power(ex_sys, ex_x0, 1000)
        assert (trace.s, trace.r, trace.c) == (0, 6, 12)
        assert pair.lam == 2
        assert pair.v == state(V_POWER)
        assert [x.entries for x in trace.iterates] == POWER_RUN
        assert trace.continuation_steps == 0

    def test_scalar_system(self):
        # u' = 3 + w, w' = 1 + u: (0;0) -> (3;1) -> (4;4) = 4 + (0;0)
        pair, trace = solve_power(ONE, ZERO1, 100)
        assert [x.entries for x in trace.iterates] == [(0, 0), (3, 1), (4, 4)]
        assert (trace.s, trace.r, trace.c) == (0, 2, 4)
        assert pair.lam == 2
        assert pair.v == StateVector.of([3], [2])

    def test_eigenvector_start_is_period_one(self, ex_sys):
        pair, trace = solve_power(ex_sys, state(V_POWER), 10)
        assert (trace.s, trace.r, trace.c) == (0, 1, 2)
        assert pair.v == state(V_POWER)

    def test_continuation_branch(self):
        pair, trace = solve_power(CONT_SYS, CONT_X0)
        assert [x.entries for x in trace.iterates] == CONT_POWER_RUN
        assert (trace.s, trace.r, trace.c) == (1, 3, 3)
        assert pair.lam == Fraction(3, 2)
        assert trace.cycle_sup == s3(CONT_POWER_SUP)
        assert trace.continuation_steps == 1
        assert pair.v == s3(CONT_POWER_V)
        assert naive_residual(CONT_SYS, Fraction(3, 2), pair.v) == [0] * 6

    def test_continuation_cap(self):
        pair, trace = solve_power(LONG_SYS, LONG_X0, 100)
        assert pair.lam == Fraction(1, 4)
        assert trace.continuation_steps > trace.r
        with pytest.raises(NonConvergence, match="continuation"):
            solve_power(LONG_SYS, LONG_X0, trace.r)

    def test_cap_in_first_phase(self, ex_sys, ex_x0):
        with pytest.raises(NonConvergence):
            solve_power(ex_sys, ex_x0, 5)


class TestRepeatDetection:
    def test_affine(self):
        hist = [state(x) for x in POWER_RUN[:6]]
        assert detect_affine_repeat(hist, state(POWER_RUN[6])) == (0, 12)

    def test_exact(self):
        hist = [state(x) for x in NORMALIZED_RUN[:6]]
        assert detect_affine_repeat(hist, state(NORMALIZED_RUN[6])) == (0, 0)
        assert detect_affine_repeat(hist, state(NORMALIZED_RUN[6]), require_zero=True) == (0, 0)

    def test_absent(self):
        assert detect_affine_repeat([ZERO1], StateVector.of([1], [2])) is None
        assert detect_affine_repeat([ZERO1], StateVector.of([1], [1]), require_zero=True) is None

    def test_earliest_index_wins(self):
        x = StateVector.of([0, 1], [2])
        hist = [x, shift_state(1, x), shift_state(2, x)]
        assert detect_affine_repeat(hist, shift_state(7, x)) == (0, 7)
        index = RepeatIndex(affine=False)
        for h in [x, StateVector.of([9, 9], [9]), x]:
            index.add(h)
        assert index.find(x) == (0, 0)

    def test_rejects_infinite_states(self):
        with pytest.raises(ValueError):
            detect_affine_repeat([StateVector.of([E], [0])], ZERO1)


class TestVerify:
    def test_valid(self, ex_sys):
        check = verify_eigenpair(ex_sys, EigenPair(2, state(V_FIXED)))
        assert check.valid
        assert check.image == state(M_OF_V_FIXED)
        assert check.residual.entries == (0,) * 8
        assert verify_eigenpair(ex_sys, EigenPair(2, state(V_POWER))).valid

    def test_bumped_entry_is_invalid(self, ex_sys):
        bumped = state((3,) + V_FIXED[1:])
        check = verify_eigenpair(ex_sys, EigenPair(2, bumped))
        assert not check.valid
        assert list(check.residual.entries) == naive_residual(ex_sys, 2, bumped)

    def test_wrong_lambda_residual(self, ex_sys):
        check = verify_eigenpair(ex_sys, EigenPair(Fraction(5, 2), state(V_FIXED)))
        assert check.residual.entries == (Fraction(-1, 2),) * 8

    def test_dims(self, ex_sys):
        with pytest.raises(DimensionMismatch):
            verify_eigenpair(ex_sys, EigenPair(2, ZERO1))


def _solved_case():
    return latin_systems().flatmap(
        lambda s: st.tuples(st.just(s), finite_states(s.m, s.n)))


@settings(max_examples=60, deadline=None)
@given(_solved_case())
def test_solver_invariants(case):
    sys_, x0 = case
    pair, trace = solve_latin(sys_, x0)
    nsys = normalize(sys_, pair.lam)
    assert trace.iterates[trace.r] == trace.iterates[trace.s]
    assert apply_N(nsys, trace.cycle_sup) >= trace.cycle_sup
    for a, b in zip(trace.continuation, trace.continuation[1:]):
        assert b >= a
    assert apply_N(nsys, pair.v) == pair.v
    assert verify_eigenpair(sys_, pair).valid
    assert trace.map_applications >= trace.r + trace.continuation_steps

    other, ptrace = solve_power(sys_, x0)
    assert ptrace.iterates[ptrace.r] == shift_state(ptrace.c, ptrace.iterates[ptrace.s])
    assert other.lam == pair.lam
    assert verify_eigenpair(sys_, other).valid


@settings(max_examples=40, deadline=None)
@given(_solved_case(), rationals(bound=1000, max_den=7))
def test_shift_invariance(case, alpha):
    sys_, x0 = case
    pair, _ = solve_latin(sys_, x0)
    assert verify_eigenpair(sys_, EigenPair(pair.lam, shift_state(alpha, pair.v))).valid
