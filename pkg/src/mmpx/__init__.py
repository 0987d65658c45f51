"""Exact tropical linear algebra and eigensolvers for bipartite min-max-plus systems."""

from .eigen import (
    EigenPair,
    SolverTrace,
    detect_affine_repeat,
    latin_eigenvalue,
    solve_fixedpoint,
    solve_latin,
    solve_power,
    verify_eigenpair,
)
from .errors import DimensionMismatch, MMPXError, NonConvergence
from .latin import (
    LatinSquare,
    MaskKind,
    MaskSpec,
    apply_mask,
    build_system,
    cyclic_latin,
    random_latin,
    random_system,
    validate_latin,
)
from .system import (
    BipartiteSystem,
    NormalizedSystem,
    StateVector,
    apply_M,
    apply_N,
    normalize,
    shift_state,
    state_sup,
)
from .tropical import (
    EPS,
    MAX_PLUS,
    MIN_PLUS,
    TAU,
    Context,
    TropicalMatrix,
    TropicalVector,
    tadd,
    tmax,
    tmin,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteSystem",
    "Context",
    "DimensionMismatch",
    "EPS",
    "EigenPair",
    "LatinSquare",
    "MAX_PLUS",
    "MIN_PLUS",
    "MMPXError",
    "MaskKind",
    "MaskSpec",
    "NonConvergence",
    "NormalizedSystem",
    "SolverTrace",
    "StateVector",
    "TAU",
    "TropicalMatrix",
    "TropicalVector",
    "apply_M",
    "apply_N",
    "apply_mask",
    "build_system",
    "cyclic_latin",
    "detect_affine_repeat",
    "latin_eigenvalue",
    "normalize",
    "random_latin",
    "random_system",
    "shift_state",
    "solve_fixedpoint",
    "solve_latin",
    "solve_power",
    "state_sup",
    "tadd",
    "tmax",
    "tmin",
    "validate_latin",
    "verify_eigenpair",
]
