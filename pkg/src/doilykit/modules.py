"""Rank-2 free modules: cyclic submodules, freeness, unimodularity, census."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from . import refdata
from .errors import UnimodularNotFree
from .ring import FiniteRing

ModVector = tuple[int, int]

SIDES = ("left", "right")

UNIMODULAR = "unimodular"
NONUNIMODULAR_FREE = "nonunimodular-free-generating"
NONUNIMODULAR_NONFREE = "nonunimodular-nonfree-generating"


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def scale(ring: FiniteRing, alpha: int, v: ModVector, side: str = "left") -> ModVector:
    """alpha acting on v: (alpha*a, alpha*b) on the left, (a*alpha, b*alpha) on the right."""
    _check_side(side)
    a, b = v
    if side == "left":
        return (ring.mul(alpha, a), ring.mul(alpha, b))
    return (ring.mul(a, alpha), ring.mul(b, alpha))


def all_vectors(ring: FiniteRing) -> list[ModVector]:
    return [(a, b) for a in ring.labels() for b in ring.labels()]


def is_unimodular(ring: FiniteRing, v: ModVector) -> bool:
    """True iff a*c + b*d = 1 for some pair (c, d)."""
    a, b = v
    one = ring.one
    return any(
        ring.add(ring.mul(a, c), ring.mul(b, d)) == one
        for c in ring.labels()
        for d in ring.labels()
    )


@dataclass(frozen=True)
class CyclicSubmodule:
    """The orbit of a vector under the one-sided ring action.

    ``vectors[alpha]`` is alpha acting on the generator, so ``vectors[0]``
    is (0,0) and ``vectors[1]`` the generator itself; repeats appear when
    the submodule is not free.
    """

    generator: ModVector
    side: str
    vectors: tuple[ModVector, ...]
    distinct_vectors: frozenset[ModVector]
    is_free: bool
    is_unimodular_generated: bool
    contains_unimodular: bool


def cyclic_submodule(ring: FiniteRing, v: ModVector, side: str = "left") -> CyclicSubmodule:
    return _build_submodule(ring, v, side, lambda w: is_unimodular(ring, w))


def _build_submodule(
    ring: FiniteRing,
    v: ModVector,
    side: str,
    unimodular: Callable[[ModVector], bool],
) -> CyclicSubmodule:
    _check_side(side)
    vectors = tuple(scale(ring, alpha, v, side) for alpha in ring.labels())
    distinct = frozenset(vectors)
    return CyclicSubmodule(
        generator=v,
        side=side,
        vectors=vectors,
        distinct_vectors=distinct,
        is_free=len(distinct) == ring.order,
        is_unimodular_generated=unimodular(v),
        contains_unimodular=any(unimodular(w) for w in distinct),
    )


@dataclass(frozen=True)
class Census:
    """Classification of every vector pair plus the deduplicated submodules.

    ``nonunimodular_free`` holds one CyclicSubmodule per distinct point-set,
    built from its canonical (lexicographically smallest) generator and
    sorted by that generator; ``generator_sets[i]`` lists every generator
    of ``nonunimodular_free[i]``.
    """

    side: str
    classification: Mapping[ModVector, str]
    counts: Mapping[str, int]
    nonunimodular_free: tuple[CyclicSubmodule, ...]
    generator_sets: tuple[tuple[ModVector, ...], ...]


def census(ring: FiniteRing, side: str = "left") -> Census:
    """Classify all order^2 pairs and deduplicate the nonunimodular free orbits.

    Raises UnimodularNotFree if any unimodular vector fails to generate a
    free submodule (which would contradict a theorem, i.e. flag a bug).
    """
    _check_side(side)
    unimodular_map = {v: is_unimodular(ring, v) for v in all_vectors(ring)}
    classification: dict[ModVector, str] = {}
    counts = {UNIMODULAR: 0, NONUNIMODULAR_FREE: 0, NONUNIMODULAR_NONFREE: 0}
    by_point_set: dict[frozenset[ModVector], list[ModVector]] = {}

    for v in all_vectors(ring):
        sub = _build_submodule(ring, v, side, unimodular_map.__getitem__)
        if unimodular_map[v]:
            if not sub.is_free:
                raise UnimodularNotFree(
                    f"unimodular vector {v} generates a non-free submodule"
                )
            cls = UNIMODULAR
        elif sub.is_free:
            cls = NONUNIMODULAR_FREE
            by_point_set.setdefault(sub.distinct_vectors, []).append(v)
        else:
            cls = NONUNIMODULAR_NONFREE
        classification[v] = cls
        counts[cls] += 1

    canonical = sorted(min(gens) for gens in by_point_set.values())
    submodules = tuple(
        _build_submodule(ring, g, side, unimodular_map.__getitem__) for g in canonical
    )
    generator_sets = tuple(
        tuple(sorted(by_point_set[sub.distinct_vectors])) for sub in submodules
    )
    return Census(
        side=side,
        classification=classification,
        counts=counts,
        nonunimodular_free=submodules,
        generator_sets=generator_sets,
    )


@dataclass(frozen=True)
class TableCheckReport:
    """Cell-by-cell comparison of computed orbits against the reference table."""

    generators: tuple[ModVector, ...]
    mismatches: tuple[tuple[ModVector, int, ModVector, ModVector], ...]

    @property
    def all_match(self) -> bool:
        return not self.mismatches

    @property
    def cells_checked(self) -> int:
        return len(self.generators) * 16


def reference_table_check(
    ring: FiniteRing,
    table: Sequence[Sequence[ModVector]] | None = None,
    generators: Sequence[ModVector] | None = None,
) -> TableCheckReport:
    """Compare the computed left orbits of the reference generators against
    the hardcoded table; mismatches carry (generator, alpha, computed, expected)."""
    if table is None:
        table = refdata.REFERENCE_SUBMODULE_TABLE
    if generators is None:
        generators = refdata.REFERENCE_GENERATORS
    mismatches = []
    for col, gen in enumerate(generators):
        sub = cyclic_submodule(ring, gen, "left")
        for alpha in ring.labels():
            expected = tuple(table[alpha][col])
            if sub.vectors[alpha] != expected:
                mismatches.append((gen, alpha, sub.vectors[alpha], expected))
    return TableCheckReport(
        generators=tuple(tuple(g) for g in generators),
        mismatches=tuple(mismatches),
    )


def annihilator(ring: FiniteRing, v: ModVector, side: str = "left") -> frozenset[int]:
    """Labels alpha whose action sends v to (0, 0)."""
    zero = (ring.zero, ring.zero)
    return frozenset(
        alpha for alpha in ring.labels() if scale(ring, alpha, v, side) == zero
    )


def nonunimodular_definitions_agree(ring: FiniteRing, side: str = "left") -> bool:
    """Check that two phrasings select the same free submodules.

    For every free cyclic submodule, "generated by a nonunimodular vector
    and containing no unimodular vector" must coincide with "not generated
    by any unimodular vector".
    """
    _check_side(side)
    unimodular_map = {v: is_unimodular(ring, v) for v in all_vectors(ring)}
    free_orbits: dict[frozenset[ModVector], set[ModVector]] = {}
    for v in all_vectors(ring):
        vectors = frozenset(scale(ring, alpha, v, side) for alpha in ring.labels())
        if len(vectors) == ring.order:
            free_orbits.setdefault(vectors, set()).add(v)
    for vectors, gens in free_orbits.items():
        contains_unimodular = any(unimodular_map[w] for w in vectors)
        generated_by_unimodular = any(unimodular_map[g] for g in gens)
        if contains_unimodular != generated_by_unimodular:
            return False
    return True
