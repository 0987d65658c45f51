"""Reference values for the order-4 worked example."""

from mmpx.system import StateVector
from mmpx.tropical import EPS, TAU

E, T = EPS, TAU

# A, B and the first seven states of both trajectories
A_ROWS = [[3, 2, E, 1], [E, 1, 3, 2], [2, 3, 1, E], [1, E, 2, 3]]
B_ROWS = [[2, 3, T, 1], [3, T, 1, 2], [1, 2, 3, T], [T, 1, 2, 3]]
A_LAMBDA_ROWS = [[1, 0, E, -1], [E, -1, 1, 0], [0, 1, -1, E], [-1, E, 0, 1]]
B_LAMBDA_ROWS = [[0, 1, T, -1], [1, T, -1, 0], [-1, 0, 1, T], [T, -1, 0, 1]]

NORMALIZED_RUN = [
    (0, 1, 0, 1, 1, 0, 1, 0),
    (2, 2, 1, 1, 0, -1, -1, 0),
    (1, 0, 0, 1, 0, 0, 1, 1),
    (1, 2, 1, 2, 0, -1, 0, -1),
    (1, 1, 0, 0, 1, 0, 0, 1),
    (2, 1, 1, 2, -1, -1, 0, 0),
    (0, 1, 0, 1, 1, 0, 1, 0),
]
POWER_RUN = [
    (0, 1, 0, 1, 1, 0, 1, 0),
    (4, 4, 3, 3, 2, 1, 1, 2),
    (5, 4, 4, 5, 4, 4, 5, 5),
    (7, 8, 7, 8, 6, 5, 6, 5),
    (9, 9, 8, 8, 9, 8, 8, 9),
    (12, 11, 11, 12, 9, 9, 10, 10),
    (12, 13, 12, 13, 13, 12, 13, 12),
]
V_FIXED = (2, 2, 1, 2, 1, 0, 1, 1)
V_POWER = (12, 12, 11, 12, 11, 10, 11, 11)
M_OF_V_FIXED = (4, 4, 3, 4, 3, 2, 3, 3)


def state(entries, m=4):
    return StateVector.from_entries(entries, m)
