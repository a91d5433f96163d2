"""The order-16 matrix ring: construction and exhaustive axiom checking."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import refdata
from .errors import ClosureViolation
from .gf2mat import Gf2Matrix3, mat_add, mat_mul


@dataclass(frozen=True)
class FiniteRing:
    """A finite ring presented by an element list and its operation tables.

    ``elements[i]`` is the matrix carrying label ``i``; the tables map label
    pairs to labels.  Instances are immutable and safe to share.
    """

    elements: tuple[Gf2Matrix3, ...]
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def labels(self) -> range:
        return range(len(self.elements))

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def neg(self, x: int) -> int:
        row = self.add_table[x]
        return row.index(self.zero)


def ring_from_matrices(matrices: Iterable[Gf2Matrix3]) -> FiniteRing:
    """Build a FiniteRing from a finite, operation-closed set of matrices.

    Raises ClosureViolation if any sum or product escapes the set (the
    symptom of a transcription bug in the element list).
    """
    elements = tuple(matrices)
    index = {m: i for i, m in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("element list contains duplicates")

    def label_of(m: Gf2Matrix3, what: str, x: int, y: int) -> int:
        label = index.get(m)
        if label is None:
            raise ClosureViolation(
                f"{what} of labels {x} and {y} falls outside the element set"
            )
        return label

    n = len(elements)
    add_table = tuple(
        tuple(label_of(mat_add(elements[x], elements[y]), "sum", x, y) for y in range(n))
        for x in range(n)
    )
    mul_table = tuple(
        tuple(label_of(mat_mul(elements[x], elements[y]), "product", x, y) for y in range(n))
        for x in range(n)
    )

    zero = _find_identity(add_table)
    if zero is None:
        raise ValueError("no additive identity in the element set")
    one = _find_identity(mul_table)
    if one is None:
        raise ValueError("no multiplicative identity in the element set")
    return FiniteRing(elements, add_table, mul_table, zero, one)


def _find_identity(table: Sequence[Sequence[int]]) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def defining_shape_matrices() -> frozenset[Gf2Matrix3]:
    """All 16 matrices of the defining shape [[a,c,d],[0,b,0],[0,0,b]].

    Generated directly from the four GF(2) parameters, independently of the
    canonical labeled list, so the two can be cross-checked.
    """
    return frozenset(
        Gf2Matrix3.from_rows(((a, c, d), (0, b, 0), (0, 0, b)))
        for a in (0, 1)
        for b in (0, 1)
        for c in (0, 1)
        for d in (0, 1)
    )


@lru_cache(maxsize=None)
def canonical_ring() -> FiniteRing:
    """The order-16 ring with its canonical labeling (0 = zero, 1 = one)."""
    mats = tuple(Gf2Matrix3.from_rows(rows) for rows in refdata.CANONICAL_MATRICES)
    ring = ring_from_matrices(mats)
    if ring.zero != 0 or ring.one != 1:
        raise ClosureViolation("canonical labeling must put zero at 0 and one at 1")
    return ring


@dataclass(frozen=True)
class RingAxiomReport:
    """Pass/fail per ring axiom, with witnesses for the failures."""

    additive_commutativity: bool
    additive_associativity: bool
    additive_identity: bool
    additive_inverses: bool
    multiplicative_associativity: bool
    multiplicative_identity: bool
    left_distributivity: bool
    right_distributivity: bool
    failures: tuple[str, ...]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict[str, bool]:
        return {
            "additive_commutativity": self.additive_commutativity,
            "additive_associativity": self.additive_associativity,
            "additive_identity": self.additive_identity,
            "additive_inverses": self.additive_inverses,
            "multiplicative_associativity": self.multiplicative_associativity,
            "multiplicative_identity": self.multiplicative_identity,
            "left_distributivity": self.left_distributivity,
            "right_distributivity": self.right_distributivity,
        }


def verify_ring_axioms(ring: FiniteRing) -> RingAxiomReport:
    """Check every ring axiom exhaustively; failures are reported, not raised.

    Pair axioms scan all order^2 pairs, triple axioms all order^3 triples.
    """
    labels = ring.labels()
    add, mul = ring.add, ring.mul
    failures: list[str] = []

    def check(name: str, witnesses: list[str]) -> bool:
        failures.extend(f"{name}: {w}" for w in witnesses[:5])
        return not witnesses

    add_comm = check(
        "additive_commutativity",
        [f"{x}+{y} != {y}+{x}" for x in labels for y in labels if add(x, y) != add(y, x)],
    )
    add_assoc = check(
        "additive_associativity",
        [
            f"({x}+{y})+{z} != {x}+({y}+{z})"
            for x in labels
            for y in labels
            for z in labels
            if add(add(x, y), z) != add(x, add(y, z))
        ],
    )
    add_id = check(
        "additive_identity",
        [f"{x}+0 != {x}" for x in labels if add(x, ring.zero) != x],
    )
    add_inv = check(
        "additive_inverses",
        [f"no y with {x}+y=0" for x in labels if ring.zero not in ring.add_table[x]],
    )
    mul_assoc = check(
        "multiplicative_associativity",
        [
            f"({x}*{y})*{z} != {x}*({y}*{z})"
            for x in labels
            for y in labels
            for z in labels
            if mul(mul(x, y), z) != mul(x, mul(y, z))
        ],
    )
    mul_id = check(
        "multiplicative_identity",
        [
            f"1 is not two-sided identity at {x}"
            for x in labels
            if mul(ring.one, x) != x or mul(x, ring.one) != x
        ],
    )
    left_dist = check(
        "left_distributivity",
        [
            f"{x}*({y}+{z}) != {x}*{y}+{x}*{z}"
            for x in labels
            for y in labels
            for z in labels
            if mul(x, add(y, z)) != add(mul(x, y), mul(x, z))
        ],
    )
    right_dist = check(
        "right_distributivity",
        [
            f"({x}+{y})*{z} != {x}*{z}+{y}*{z}"
            for x in labels
            for y in labels
            for z in labels
            if mul(add(x, y), z) != add(mul(x, z), mul(y, z))
        ],
    )

    return RingAxiomReport(
        additive_commutativity=add_comm,
        additive_associativity=add_assoc,
        additive_identity=add_id,
        additive_inverses=add_inv,
        multiplicative_associativity=mul_assoc,
        multiplicative_identity=mul_id,
        left_distributivity=left_dist,
        right_distributivity=right_dist,
        failures=tuple(failures),
    )
