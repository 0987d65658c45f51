"""Latin squares and the four ways of turning a pair of them into a system.

A Latin square of order n holds the symbols 1..n with every row and every
column a permutation. The system variants differ in whether one symbol of
A is replaced by -inf and/or one symbol of B by +inf:

======  ===========  ===========
case    A            B
======  ===========  ===========
case1   finite       finite
case2   eps-masked   finite
case3   finite       tau-masked
case4   eps-masked   tau-masked
======  ===========  ===========
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DegenerateSystem, InvalidOrder, NotSquare, OrderMismatch, SymbolOutOfRange
from .system import BipartiteSystem
from .tropical import EPS, TAU, TropicalMatrix, is_finite


@dataclass(frozen=True)
class LatinSquare:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not validate_latin(rows):
            raise ValueError("not a Latin square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_lists(self):
        return [list(r) for r in self.rows]


def validate_latin(M: Sequence[Sequence[int]]) -> bool:
    """True iff every row and every column of ``M`` is a permutation of 1..n."""
    n = len(M)
    if n == 0 or any(len(r) != n for r in M):
        raise NotSquare(f"expected a square matrix, got {n} rows of lengths "
                        f"{sorted({len(r) for r in M})}")
    symbols = set(range(1, n + 1))
    if any(set(r) != symbols for r in M):
        return False
    return all({M[i][j] for i in range(n)} == symbols for j in range(n))


def cyclic_latin(n: int) -> LatinSquare:
    """``entry(i, j) = ((i + j - 2) mod n) + 1`` with 1-based i, j."""
    if n < 1:
        raise InvalidOrder(f"order must be >= 1, got {n}")
    return LatinSquare(tuple(tuple((i + j) % n + 1 for j in range(n)) for i in range(n)))


def random_latin(n: int, seed: int) -> LatinSquare:
    """Cyclic square under a seeded row shuffle, column shuffle and relabelling.

    Deterministic per ``(n, seed)``. Not uniform over all Latin squares.
    """
    base = cyclic_latin(n).rows
    rng = random.Random(seed)
    row_order = list(range(n))
    col_order = list(range(n))
    relabel = list(range(1, n + 1))
    rng.shuffle(row_order)
    rng.shuffle(col_order)
    rng.shuffle(relabel)
    return LatinSquare(tuple(
        tuple(relabel[base[i][j] - 1] for j in col_order) for i in row_order
    ))


class MaskKind(enum.Enum):
    NONE = "none"
    EPS = "eps"
    TAU = "tau"


@dataclass(frozen=True)
class MaskSpec:
    kind: MaskKind = MaskKind.NONE
    symbol: Optional[int] = None  # None means the largest symbol, n

    @classmethod
    def parse(cls, text: str) -> "MaskSpec":
        """``none``, ``eps``, ``tau``, ``eps:<k>`` or ``tau:<k>``."""
        kind, _, sym = text.strip().partition(":")
        try:
            mk = MaskKind(kind.lower())
        except ValueError:
            raise ValueError(f"unknown mask {text!r}") from None
        if mk is MaskKind.NONE:
            if sym:
                raise ValueError("mask 'none' takes no symbol")
            return cls()
        if not sym:
            return cls(mk)
        try:
            return cls(mk, int(sym))
        except ValueError:
            raise ValueError(f"bad mask symbol in {text!r}") from None

    def __str__(self):
        if self.kind is MaskKind.NONE:
            return "none"
        return self.kind.value if self.symbol is None else f"{self.kind.value}:{self.symbol}"


NO_MASK = MaskSpec()


def apply_mask(L: LatinSquare, mask: MaskSpec = NO_MASK) -> TropicalMatrix:
    """Lift ``L`` to a tropical matrix, sending every cell holding the masked symbol to an infinity."""
    n = L.n
    if mask.kind is MaskKind.NONE:
        return TropicalMatrix.from_rows(L.rows)
    symbol = n if mask.symbol is None else mask.symbol
    if not 1 <= symbol <= n:
        raise SymbolOutOfRange(f"mask symbol {symbol} not in 1..{n}")
    inf = EPS if mask.kind is MaskKind.EPS else TAU
    return TropicalMatrix.from_rows([[inf if x == symbol else x for x in r] for r in L.rows])


def build_system(LA: LatinSquare, LB: LatinSquare,
                 mask_a: MaskSpec = NO_MASK, mask_b: MaskSpec = NO_MASK) -> BipartiteSystem:
    if LA.n != LB.n:
        raise OrderMismatch(f"orders differ: {LA.n} vs {LB.n}")
    if mask_a.kind is MaskKind.TAU:
        raise ValueError("A may only be masked with eps")
    if mask_b.kind is MaskKind.EPS:
        raise ValueError("B may only be masked with tau")
    A = apply_mask(LA, mask_a)
    B = apply_mask(LB, mask_b)
    for name, M in (("A", A), ("B", B)):
        for i in range(M.rows):
            if not any(is_finite(x) for x in M.row(i)):
                raise DegenerateSystem(f"row {i + 1} of {name} has no finite entry left")
    return BipartiteSystem(A, B)


VARIANTS = {
    "case1": (NO_MASK, NO_MASK),
    "case2": (MaskSpec(MaskKind.EPS), NO_MASK),
    "case3": (NO_MASK, MaskSpec(MaskKind.TAU)),
    "case4": (MaskSpec(MaskKind.EPS), MaskSpec(MaskKind.TAU)),
}

# keeps the B stream away from any seed a caller would pick for A
_B_SEED_OFFSET = 1_000_003


def random_pair(n: int, seed: int):
    """``(random_latin(n, seed), random_latin(n, seed + 1000003))``."""
    return random_latin(n, seed), random_latin(n, seed + _B_SEED_OFFSET)


def random_system(n: int, seed: int, variant: str = "case4") -> BipartiteSystem:
    """System of the given variant built from :func:`random_pair`; masks hide the symbol n."""
    try:
        mask_a, mask_b = VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(VARIANTS)}") from None
    return build_system(*random_pair(n, seed), mask_a, mask_b)
