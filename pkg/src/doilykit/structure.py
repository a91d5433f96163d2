"""Units, one- and two-sided ideals, and the Jacobson radical."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import MethodDisagreement, RingTooLarge
from .ring import FiniteRing

SIDEDNESS = ("left", "right", "two-sided")


@dataclass(frozen=True)
class IdealSet:
    members: frozenset[int]
    sidedness: str

    def __contains__(self, label: int) -> bool:
        return label in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def _check_sidedness(sidedness: str) -> None:
    if sidedness not in SIDEDNESS:
        raise ValueError(f"sidedness must be one of {SIDEDNESS}, got {sidedness!r}")


def units(ring: FiniteRing) -> frozenset[int]:
    """All labels with a two-sided multiplicative inverse."""
    one = ring.one
    return frozenset(
        x
        for x in ring.labels()
        if any(ring.mul(x, y) == one and ring.mul(y, x) == one for y in ring.labels())
    )


def ideal_closure(ring: FiniteRing, generators: Iterable[int], sidedness: str) -> IdealSet:
    """Smallest ideal of the requested sidedness containing the generators."""
    _check_sidedness(sidedness)
    absorb_left = sidedness in ("left", "two-sided")
    absorb_right = sidedness in ("right", "two-sided")
    members = {ring.zero} | set(generators)
    frontier = set(members)
    while frontier:
        new: set[int] = set()
        for x in frontier:
            for y in members:
                new.add(ring.add(x, y))
            for r in ring.labels():
                if absorb_left:
                    new.add(ring.mul(r, x))
                if absorb_right:
                    new.add(ring.mul(x, r))
        frontier = new - members
        members |= frontier
    return IdealSet(frozenset(members), sidedness)


def is_ideal(ring: FiniteRing, members: frozenset[int], sidedness: str) -> bool:
    """Exhaustive closure check: additive subgroup absorbing on the declared side(s)."""
    _check_sidedness(sidedness)
    if ring.zero not in members:
        return False
    for x in members:
        for y in members:
            if ring.add(x, y) not in members:
                return False
        for r in ring.labels():
            if sidedness in ("left", "two-sided") and ring.mul(r, x) not in members:
                return False
            if sidedness in ("right", "two-sided") and ring.mul(x, r) not in members:
                return False
    return True


def _guard_order(ring: FiniteRing) -> None:
    if ring.order > 16:
        raise RingTooLarge(
            f"exhaustive ideal enumeration is limited to order <= 16, got {ring.order}"
        )


def enumerate_ideals(ring: FiniteRing, sidedness: str) -> frozenset[IdealSet]:
    """All ideals of the requested sidedness.

    Strategy: close every generator set of size <= 2, then close the family
    under pairwise joins until it stops growing.  Every ideal is a finite
    join of principal ideals, so the fixed point is the full ideal lattice.
    """
    _check_sidedness(sidedness)
    _guard_order(ring)
    family: set[frozenset[int]] = {ideal_closure(ring, (), sidedness).members}
    for x in ring.labels():
        family.add(ideal_closure(ring, (x,), sidedness).members)
    for x, y in combinations(ring.labels(), 2):
        family.add(ideal_closure(ring, (x, y), sidedness).members)
    while True:
        joins = {
            ideal_closure(ring, a | b, sidedness).members
            for a in family
            for b in family
        }
        if joins <= family:
            break
        family |= joins
    return frozenset(IdealSet(members, sidedness) for members in family)


def enumerate_ideals_exhaustive(ring: FiniteRing, sidedness: str) -> frozenset[IdealSet]:
    """Independent oracle: scan all 2^order subsets for the closure property."""
    _check_sidedness(sidedness)
    _guard_order(ring)
    n = ring.order
    zero_bit = 1 << ring.zero
    found = []
    for mask in range(1, 1 << n):
        if not mask & zero_bit:
            continue
        members = [x for x in range(n) if mask >> x & 1]
        if _mask_is_ideal(ring, mask, members, sidedness):
            found.append(frozenset(members))
    return frozenset(IdealSet(members, sidedness) for members in found)


def _mask_is_ideal(ring: FiniteRing, mask: int, members: list[int], sidedness: str) -> bool:
    for x in members:
        add_row = ring.add_table[x]
        for y in members:
            if not mask >> add_row[y] & 1:
                return False
    absorb_left = sidedness in ("left", "two-sided")
    absorb_right = sidedness in ("right", "two-sided")
    for x in members:
        for r in range(ring.order):
            if absorb_left and not mask >> ring.mul_table[r][x] & 1:
                return False
            if absorb_right and not mask >> ring.mul_table[x][r] & 1:
                return False
    return True


def maximal_ideals(ring: FiniteRing, sidedness: str) -> frozenset[IdealSet]:
    """Proper ideals maximal under inclusion among proper ideals."""
    proper = [i for i in enumerate_ideals(ring, sidedness) if len(i) < ring.order]
    return frozenset(
        i for i in proper if not any(i.members < j.members for j in proper)
    )


def maximal_two_sided_ideals(ring: FiniteRing) -> frozenset[IdealSet]:
    return maximal_ideals(ring, "two-sided")


def jacobson_radical(ring: FiniteRing) -> IdealSet:
    """The radical, computed two independent ways and cross-asserted.

    (i) intersection of all maximal left ideals; (ii) the quasi-regularity
    characterization {x : 1 - r*x has a left inverse for every r}.  A
    mismatch is an implementation bug, not a valid outcome.
    """
    by_ideals: frozenset[int] = frozenset(ring.labels())
    for ideal in maximal_ideals(ring, "left"):
        by_ideals &= ideal.members

    one = ring.one
    left_invertible = [
        any(ring.mul(u, z) == one for u in ring.labels()) for z in ring.labels()
    ]
    by_quasiregularity = frozenset(
        x
        for x in ring.labels()
        if all(
            left_invertible[ring.add(one, ring.neg(ring.mul(r, x)))]
            for r in ring.labels()
        )
    )

    if by_ideals != by_quasiregularity:
        raise MethodDisagreement(
            "radical mismatch: maximal-left-ideal intersection "
            f"{sorted(by_ideals)} vs quasi-regularity {sorted(by_quasiregularity)}"
        )
    return IdealSet(by_ideals, "two-sided")


@dataclass(frozen=True)
class StructureReport:
    units: frozenset[int]
    maximal_two_sided: frozenset[IdealSet]
    jacobson: IdealSet


def structure_report(ring: FiniteRing) -> StructureReport:
    return StructureReport(
        units=units(ring),
        maximal_two_sided=maximal_two_sided_ideals(ring),
        jacobson=jacobson_radical(ring),
    )
