"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from mmpx.latin import VARIANTS, random_system
from mmpx.system import StateVector
from mmpx.tropical import EPS, TAU, canon

small_ints = st.integers(-5, 5)


@st.composite
def rationals(draw, bound=20, max_den=4):
    return canon(Fraction(draw(st.integers(-bound, bound)), draw(st.integers(1, max_den))))


extended = st.one_of(rationals(), st.just(EPS), st.just(TAU))


@st.composite
def latin_systems(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    seed = draw(st.integers(0, 10**6))
    variant = draw(st.sampled_from(sorted(VARIANTS)))
    return random_system(n, seed, variant)


def finite_states(m, n):
    return st.tuples(st.lists(rationals(), min_size=m, max_size=m),
                     st.lists(rationals(), min_size=n, max_size=n)).map(
        lambda uw: StateVector.of(*uw))
