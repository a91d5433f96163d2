"""3x3 matrices over GF(2), bit-packed into 9-bit integers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

_ROW = 0b111


@dataclass(frozen=True, order=True)
class Gf2Matrix3:
    """Bit 3*row + col of ``bits`` holds the (row, col) entry."""

    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 512:
            raise ValueError(f"bits {self.bits} outside the 9-bit range")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Gf2Matrix3":
        bits = 0
        pos = 0
        for row in rows:
            for entry in row:
                if entry not in (0, 1):
                    raise ValueError(f"entry {entry!r} is not a GF(2) value")
                bits |= entry << pos
                pos += 1
        if pos != 9:
            raise ValueError(f"expected 9 entries, got {pos}")
        return cls(bits)

    def entry(self, row: int, col: int) -> int:
        return self.bits >> (3 * row + col) & 1

    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            tuple(self.bits >> (3 * r + c) & 1 for c in range(3)) for r in range(3)
        )

    def __add__(self, other: "Gf2Matrix3") -> "Gf2Matrix3":
        return mat_add(self, other)

    def __mul__(self, other: "Gf2Matrix3") -> "Gf2Matrix3":
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join("".join(str(e) for e in row) for row in self.rows())


ZERO = Gf2Matrix3(0)
IDENTITY = Gf2Matrix3.from_rows(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def mat_add(x: Gf2Matrix3, y: Gf2Matrix3) -> Gf2Matrix3:
    """Entry-wise XOR."""
    return Gf2Matrix3(x.bits ^ y.bits)


def mat_mul(x: Gf2Matrix3, y: Gf2Matrix3) -> Gf2Matrix3:
    """Matrix product mod 2.

    Row r of the product is the XOR of the rows of ``y`` selected by the
    bits of row r of ``x``; the masks keep the combine branch-free.
    """
    yb = y.bits
    out = 0
    for shift in (0, 3, 6):
        row = x.bits >> shift
        acc = (
            (yb & _ROW & -(row & 1))
            ^ (yb >> 3 & _ROW & -(row >> 1 & 1))
            ^ (yb >> 6 & _ROW & -(row >> 2 & 1))
        )
        out |= acc << shift
    return Gf2Matrix3(out)
