"""The order-4 worked example used throughout the tests and the bench.

A and B are the Latin squares below with the symbol 4 masked (-inf in A,
+inf in B). Starting from ``START`` both solvers find a period of 6 and
lambda = 2.
"""

from .latin import LatinSquare, MaskKind, MaskSpec, build_system
from .system import StateVector

LATIN_A = LatinSquare(((3, 2, 4, 1), (4, 1, 3, 2), (2, 3, 1, 4), (1, 4, 2, 3)))
LATIN_B = LatinSquare(((2, 3, 4, 1), (3, 4, 1, 2), (1, 2, 3, 4), (4, 1, 2, 3)))

#: the order-4 square used to illustrate the definition
LATIN_L = LatinSquare(((3, 2, 4, 1), (4, 1, 3, 2), (2, 4, 1, 3), (1, 3, 2, 4)))

START = StateVector.of((0, 1, 0, 1), (1, 0, 1, 0))


def system():
    return build_system(LATIN_A, LATIN_B, MaskSpec(MaskKind.EPS, 4), MaskSpec(MaskKind.TAU, 4))
