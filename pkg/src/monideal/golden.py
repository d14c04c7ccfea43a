"""Published values for the Sturmfels ideal and its splittings.

Every record carries a ``source`` string naming the displayed item it was
transcribed from, so a failed comparison points at the number it contradicts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import MonomialIdeal, PolyRing

RING = PolyRing.standard(6)

_COMPACT = re.compile(r"x(\d)(?:\^(\d+))?")


def compact_monomial(text: str) -> tuple[int, ...]:
    """``x1x3^2x6`` -> exponent vector in ``x1..x6``."""
    e = [0] * 6
    pos = 0
    for m in _COMPACT.finditer(text):
        if m.start() != pos:
            raise ValueError(f"bad compact monomial {text!r}")
        e[int(m.group(1)) - 1] += int(m.group(2) or 1)
        pos = m.end()
    if pos != len(text):
        raise ValueError(f"bad compact monomial {text!r}")
    return tuple(e)


def compact_ideal(items: str) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(RING, [compact_monomial(t) for t in items.split()])


@dataclass(frozen=True)
class GoldenRecord:
    label: str
    source: str
    generators: MonomialIdeal | None = None
    betti_rows: dict[int, tuple[int, ...]] | None = field(default=None, hash=False)
    regularity: int | None = None
    projdim: int | None = None


J = compact_ideal("x1x4x5 x1x3x6 x2x3x4 x2x5x6 x3x4x5 x3x4x6 x3x5x6 x4x5x6")

MINIMAL_PRIMES = [("x3", "x5"), ("x4", "x6"), ("x1", "x3", "x6"), ("x1", "x4", "x5"), ("x2", "x3", "x4"), ("x2", "x5", "x6")]

SYMBOLIC_SQUARE = compact_ideal(
    """
    x3x4x5x6 x4^2x5^2x6^2 x2x4x5^2x6^2 x3^2x5^2x6^2 x2x3x5^2x6^2 x2^2x5^2x6^2 x1x3^2x5x6^2 x1x2x3x5x6^2
    x3^2x4^2x6^2 x1x3^2x4x6^2 x1^2x3^2x6^2 x1x4^2x5^2x6 x1x2x4x5^2x6 x2x3^2x4^2x6 x1x2x3^2x4x6
    x3^2x4^2x5^2 x1x3x4^2x5^2 x1^2x4^2x5^2 x2x3^2x4^2x5 x1x2x3x4^2x5 x2^2x3^2x4^2
    """
)

CLOSURE_OF_SQUARE = compact_ideal(
    """
    x4^2x5^2x6^2 x3x4x5^2x6^2 x2x4x5^2x6^2 x3^2x5^2x6^2 x2x3x5^2x6^2 x2^2x5^2x6^2 x3x4^2x5x6^2 x3^2x4x5x6^2
    x2x3x4x5x6^2 x1x3x4x5x6^2 x1x3^2x5x6^2 x1x2x3x5x6^2 x3^2x4^2x6^2 x1x3^2x4x6^2 x1^2x3^2x6^2
    x3x4^2x5^2x6 x1x4^2x5^2x6 x3^2x4x5^2x6 x2x3x4x5^2x6 x1x3x4x5^2x6 x1x2x4x5^2x6 x3^2x4^2x5x6
    x2x3x4^2x5x6 x1x3x4^2x5x6 x2x3^2x4x5x6 x1x3^2x4x5x6 x2^2x3x4x5x6 x1x2x3x4x5x6
    x1^2x3x4x5x6 x2x3^2x4^2x6 x1x2x3^2x4x6 x3^2x4^2x5^2 x1x3x4^2x5^2 x1^2x4^2x5^2 x2x3^2x4^2x5
    x1x2x3x4^2x5 x2^2x3^2x4^2
    """
)

STURMFELS = [
    GoldenRecord(
        "frobenius square",
        "Betti table of J^[2]; regularity table row 'all / 1 each'",
        betti_rows={6: (8, 0, 0), 7: (0, 11, 0), 8: (0, 0, 4)},
        regularity=8,
    ),
    GoldenRecord(
        "square",
        "Betti table of J^2; reg(J^2) = 7",
        betti_rows={6: (36, 84, 75, 32, 6, 0), 7: (0, 1, 4, 6, 4, 1)},
        regularity=7,
    ),
    GoldenRecord(
        "closure of square",
        "displayed 37-generator closure of J^2 and its Betti table; reg = 6",
        generators=CLOSURE_OF_SQUARE,
        betti_rows={6: (37, 90, 89, 48, 15, 2)},
        regularity=6,
    ),
    GoldenRecord(
        "symbolic square",
        "displayed 21-generator J^(2), its Betti table and resolution; reg = 6",
        generators=SYMBOLIC_SQUARE,
        betti_rows={4: (1, 0, 0, 0), 6: (20, 40, 24, 4)},
        regularity=6,
        projdim=3,
    ),
]

# regularity of the split Frobenius square, square, closure of square, symbolic square
SPLIT_FORMULAS = {
    "frobenius": (10, -2),
    "power": (12, -5),
    "closure": (11, -5),
    "symbolic": (9, -3),
}

CONSTRUCTION_ORDER = ("frobenius", "power", "closure", "symbolic")


@dataclass(frozen=True)
class TableRow:
    number: int
    variables: tuple[str, ...]  # empty tuple means no variable is split
    parts: int
    regularities: tuple[int, int, int, int]  # in CONSTRUCTION_ORDER

    @property
    def label(self) -> str:
        names = ", ".join(self.variables) if self.variables else "all"
        return f"{names} / {self.parts}"

    @property
    def source(self) -> str:
        return f"regularity table of split ideals, row {self.number} ('{self.label}')"

    def split(self) -> dict[str, int]:
        return {v: self.parts for v in self.variables}

    @property
    def target_arity(self) -> int:
        return 6 + len(self.variables) * (self.parts - 1)


def _row(n, names, parts, *regs) -> TableRow:
    return TableRow(n, tuple(f"x{k}" for k in names), parts, tuple(regs))


SPLIT_TABLE = [
    _row(1, (), 1, 8, 7, 6, 6),
    _row(2, (1,), 2, 10, 9, 8, 8),
    _row(3, (1, 2), 2, 10, 11, 9, 8),
    _row(4, (1, 2, 3), 2, 12, 13, 11, 10),
    _row(5, (1, 2, 3, 4), 2, 14, 15, 13, 12),
    _row(6, (1, 2, 3, 4, 5), 2, 16, 17, 15, 14),
    _row(7, (2, 3, 4, 5, 6), 3, 28, 27, 26, 22),
    _row(8, (3, 4, 5, 6), 3, 24, 23, 22, 20),
    _row(9, (4, 5, 6), 3, 20, 19, 18, 18),
    _row(10, (5, 6), 3, 16, 15, 14, 14),
    _row(11, (6,), 3, 12, 11, 10, 10),
    _row(12, (1,), 3, 12, 11, 10, 10),
    _row(13, (1, 2), 3, 12, 15, 12, 10),
    _row(14, (1, 2, 3), 3, 16, 19, 16, 14),
    _row(15, (1, 2, 3, 4), 3, 20, 23, 20, 18),
    _row(16, (1, 2, 3, 4, 5), 3, 24, 27, 24, 22),
    _row(17, (1, 3, 5), 3, 20, 19, 18, 16),
    _row(18, (2, 4, 6), 3, 20, 19, 18, 16),
    _row(19, (1, 3), 3, 16, 15, 14, 14),
    _row(20, (4, 6), 3, 16, 15, 14, 14),
]
