"""From algebra to geometry: traces of the nine submodules in the doily.

The duad-vector dictionary turns doily points into module vectors.  Each
nonunimodular free cyclic submodule then meets the doily in a seven-point
"Jacobson trace" (its vectors with both coordinates in the radical); the
traces organize the doily's lines into six distinguished ones forming a
grid with the nine concurrence points, and sort the submodules into three
triples by shared-vector counts.  Everything is recomputed and shape-checked
here rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from . import refdata
from .errors import (
    CoreShapeViolation,
    InvalidBijection,
    PartitionViolation,
    TraceShapeViolation,
)
from .incidence import IncidenceStructure, build_doily, build_grid_gq21, find_isomorphism
from .modules import Census, CyclicSubmodule, ModVector, census
from .ring import FiniteRing, canonical_ring
from .structure import jacobson_radical


@dataclass(frozen=True)
class DuadVectorBijection:
    pairs: tuple[tuple[tuple[int, int], ModVector], ...]

    def duad_to_vector(self) -> dict[tuple[int, int], ModVector]:
        return {duad: vector for duad, vector in self.pairs}

    def vector_to_duad(self) -> dict[ModVector, tuple[int, int]]:
        return {vector: duad for duad, vector in self.pairs}


def duad_vector_bijection(
    pairs: Sequence[tuple[tuple[int, int], ModVector]] | None = None,
    radical: frozenset[int] | None = None,
) -> DuadVectorBijection:
    """The canonical duad-vector dictionary, validated.

    Raises InvalidBijection unless the duads are exactly the 15 two-element
    subsets of {1..6} and the vectors exactly exhaust the nonzero pairs
    with both coordinates in the radical.
    """
    if pairs is None:
        pairs = refdata.DUAD_VECTOR_PAIRS
    if radical is None:
        radical = jacobson_radical(canonical_ring()).members
    normalized = tuple(
        (tuple(sorted(duad)), tuple(vector)) for duad, vector in pairs
    )
    duads = [duad for duad, _ in normalized]
    vectors = [vector for _, vector in normalized]
    expected_duads = {pair for pair in combinations(range(1, 7), 2)}
    if len(set(duads)) != len(duads) or set(duads) != expected_duads:
        raise InvalidBijection("duads do not enumerate the 15 two-element subsets")
    zero = (0, 0)
    expected_vectors = {(a, b) for a in radical for b in radical} - {zero}
    if len(set(vectors)) != len(vectors) or set(vectors) != expected_vectors:
        raise InvalidBijection(
            "vectors do not exhaust the nonzero radical-coordinate pairs"
        )
    return DuadVectorBijection(normalized)


def relabel_doily(
    doily: IncidenceStructure, bijection: DuadVectorBijection
) -> IncidenceStructure:
    """Same incidence, duad labels replaced by their vectors."""
    return doily.relabel(bijection.duad_to_vector())


@dataclass(frozen=True)
class TraceReport:
    """A submodule's seven doily vectors and the three lines they carry."""

    generator: ModVector
    side: str
    trace_points: frozenset[ModVector]
    trace_lines: tuple[frozenset[ModVector], ...]
    concurrence_point: ModVector


def jacobson_trace(
    submodule: CyclicSubmodule, relabeled_doily: IncidenceStructure
) -> TraceReport:
    """Intersect a submodule with the doily points and locate its line pencil.

    Raises TraceShapeViolation unless the intersection has exactly seven
    points carrying exactly three doily lines through one common point
    whose union is the whole intersection.
    """
    doily_points = set(relabeled_doily.points)
    trace_points = frozenset(submodule.distinct_vectors & doily_points)
    if len(trace_points) != 7:
        raise TraceShapeViolation(
            f"R{submodule.generator} meets the doily in {len(trace_points)} "
            "points, expected 7"
        )
    contained = [
        line for line in relabeled_doily.labeled_lines() if line <= trace_points
    ]
    if len(contained) != 3:
        raise TraceShapeViolation(
            f"R{submodule.generator} trace carries {len(contained)} doily lines, "
            "expected 3"
        )
    common = contained[0] & contained[1] & contained[2]
    if len(common) != 1:
        raise TraceShapeViolation(
            f"R{submodule.generator} trace lines are not concurrent in one point"
        )
    union = frozenset().union(*contained)
    if union != trace_points:
        raise TraceShapeViolation(
            f"R{submodule.generator} trace lines do not cover the trace points"
        )
    return TraceReport(
        generator=submodule.generator,
        side=submodule.side,
        trace_points=trace_points,
        trace_lines=tuple(sorted(contained, key=sorted)),
        concurrence_point=next(iter(common)),
    )


@dataclass(frozen=True)
class CoreGeometry:
    """Six thrice-used lines and nine concurrence points, with a grid witness.

    ``grid_isomorphism`` pairs each core point label with its image in the
    canonical 3x3 grid, in core point order.
    """

    distinguished_lines: tuple[frozenset[ModVector], ...]
    concurrence_points: tuple[ModVector, ...]
    line_multiplicity: tuple[tuple[tuple[ModVector, ...], int], ...]
    core: IncidenceStructure
    grid_isomorphism: tuple[tuple[Hashable, Hashable], ...]


def core_geometry(
    traces: Sequence[TraceReport], relabeled_doily: IncidenceStructure
) -> CoreGeometry:
    """Extract the distinguished lines and concurrence points and verify
    they form the grid.

    Raises CoreShapeViolation unless, across the nine traces, six doily
    lines occur three times and nine occur once, the nine concurrence
    points are distinct and each lies on exactly two distinguished lines,
    and the restricted structure is isomorphic to the 3x3 grid.
    """
    multiplicity: dict[frozenset[ModVector], int] = {
        line: 0 for line in relabeled_doily.labeled_lines()
    }
    for trace in traces:
        for line in trace.trace_lines:
            if line not in multiplicity:
                raise CoreShapeViolation(f"trace line {sorted(line)} is not a doily line")
            multiplicity[line] += 1
    distinguished = sorted(
        (line for line, count in multiplicity.items() if count == 3), key=sorted
    )
    singles = [line for line, count in multiplicity.items() if count == 1]
    if len(distinguished) != 6 or len(singles) != 9:
        histogram = sorted(multiplicity.values())
        raise CoreShapeViolation(
            f"line multiplicities {histogram} are not six 3s and nine 1s"
        )

    concurrence = sorted({trace.concurrence_point for trace in traces})
    if len(concurrence) != len(traces):
        raise CoreShapeViolation("concurrence points are not pairwise distinct")
    for point in concurrence:
        on = sum(1 for line in distinguished if point in line)
        if on != 2:
            raise CoreShapeViolation(
                f"concurrence point {point} lies on {on} distinguished lines, expected 2"
            )

    point_index = {p: i for i, p in enumerate(concurrence)}
    try:
        core = IncidenceStructure(
            points=tuple(concurrence),
            lines=tuple(
                tuple(point_index[p] for p in sorted(line)) for line in distinguished
            ),
        )
    except KeyError as exc:
        raise CoreShapeViolation(
            f"distinguished line contains non-concurrence point {exc.args[0]}"
        ) from exc

    grid = build_grid_gq21()
    mapping = find_isomorphism(core, grid)
    if mapping is None:
        raise CoreShapeViolation("core is not isomorphic to the 3x3 grid")
    witness = tuple(
        (core.points[i], grid.points[mapping[i]]) for i in range(core.num_points)
    )
    return CoreGeometry(
        distinguished_lines=tuple(distinguished),
        concurrence_points=tuple(concurrence),
        line_multiplicity=tuple(
            sorted((tuple(sorted(line)), count) for line, count in multiplicity.items())
        ),
        core=core,
        grid_isomorphism=witness,
    )


@dataclass(frozen=True)
class TriplePartition:
    """The nine submodules grouped by the two-level shared-vector pattern."""

    triples: tuple[tuple[ModVector, ...], ...]
    intra_size: int
    inter_sizes: tuple[int, ...]


def triple_partition(submodules: Sequence[CyclicSubmodule]) -> TriplePartition:
    """Group submodules whose pairwise vector intersections sit at the top level.

    Raises PartitionViolation unless the top-size pairs split the family
    into three triples with every intra-triple intersection at the top size
    and every inter-triple one strictly below it.
    """
    n = len(submodules)
    sizes = {
        (i, j): len(submodules[i].distinct_vectors & submodules[j].distinct_vectors)
        for i, j in combinations(range(n), 2)
    }
    if not sizes:
        raise PartitionViolation("need at least two submodules")
    top = max(sizes.values())
    if min(sizes.values()) == top:
        raise PartitionViolation("all pairwise intersections are equal; no grouping")

    adjacency = {i: set() for i in range(n)}
    for (i, j), size in sizes.items():
        if size == top:
            adjacency[i].add(j)
            adjacency[j].add(i)
    components: list[set[int]] = []
    unseen = set(range(n))
    while unseen:
        start = min(unseen)
        component = {start}
        frontier = {start}
        while frontier:
            frontier = {q for p in frontier for q in adjacency[p]} - component
            component |= frontier
        components.append(component)
        unseen -= component

    if len(components) != 3 or any(len(c) != 3 for c in components):
        raise PartitionViolation(
            f"top-level pairs split the family into sizes "
            f"{sorted(len(c) for c in components)}, expected three triples"
        )
    for component in components:
        for i, j in combinations(sorted(component), 2):
            if sizes[(i, j)] != top:
                raise PartitionViolation(
                    "intra-triple intersection sizes are not all equal"
                )
    inter = sorted(
        {size for (i, j), size in sizes.items() if not any(i in c and j in c for c in components)}
    )
    triples = tuple(
        sorted(tuple(sorted(submodules[i].generator for i in c)) for c in components)
    )
    return TriplePartition(
        triples=triples, intra_size=top, inter_sizes=tuple(inter)
    )


def ideal_membership_check(
    submodules: Iterable[CyclicSubmodule], ideal: frozenset[int] | Iterable[int]
) -> bool:
    """True iff every coordinate of every vector of every submodule is in the ideal."""
    members = getattr(ideal, "members", ideal)
    member_set = frozenset(members)
    return all(
        a in member_set and b in member_set
        for submodule in submodules
        for (a, b) in submodule.distinct_vectors
    )


@dataclass(frozen=True)
class ModuleGeometry:
    """One side's full picture: census, traces, core, triples, coordinates."""

    side: str
    census: Census
    traces: tuple[TraceReport, ...]
    core: CoreGeometry
    triples: TriplePartition
    coordinate_ideal: frozenset[int]
    coordinates_in_ideal: bool


def module_geometry(
    ring: FiniteRing, side: str, relabeled_doily: IncidenceStructure | None = None
) -> ModuleGeometry:
    """Census the module, trace its nine submodules, and assemble the geometry."""
    if relabeled_doily is None:
        relabeled_doily = relabel_doily(build_doily(), duad_vector_bijection())
    side_census = census(ring, side)
    traces = tuple(
        jacobson_trace(sub, relabeled_doily) for sub in side_census.nonunimodular_free
    )
    core = core_geometry(traces, relabeled_doily)
    triples = triple_partition(side_census.nonunimodular_free)
    ideal = (
        refdata.LEFT_COORDINATE_IDEAL if side == "left" else refdata.RIGHT_COORDINATE_IDEAL
    )
    return ModuleGeometry(
        side=side,
        census=side_census,
        traces=traces,
        core=core,
        triples=triples,
        coordinate_ideal=ideal,
        coordinates_in_ideal=ideal_membership_check(
            side_census.nonunimodular_free, ideal
        ),
    )


@dataclass(frozen=True)
class MirrorReport:
    """The right-module rerun, plus the shared-doily cross-checks."""

    geometry: ModuleGeometry
    doily_points_shared: bool
    counts_match_left: bool


def right_module_mirror(
    ring: FiniteRing, left: ModuleGeometry | None = None
) -> MirrorReport:
    """Rerun the full pipeline on the right module and compare with the left.

    Shape violations in the sub-operations propagate.  The doily is the
    same structure for both sides; the report records that every right
    trace point lies on it and that the left/right counts agree at every
    level (submodules, trace sizes, distinguished lines, concurrence points).
    """
    doily = relabel_doily(build_doily(), duad_vector_bijection())
    if left is None:
        left = module_geometry(ring, "left", doily)
    right = module_geometry(ring, "right", doily)
    doily_points = set(doily.points)
    shared = all(trace.trace_points <= doily_points for trace in right.traces)
    counts_match = (
        len(left.census.nonunimodular_free) == len(right.census.nonunimodular_free)
        and left.census.counts == right.census.counts
        and [len(t.trace_points) for t in left.traces]
        == [len(t.trace_points) for t in right.traces]
        and len(left.core.distinguished_lines) == len(right.core.distinguished_lines)
        and len(left.core.concurrence_points) == len(right.core.concurrence_points)
        and left.triples.intra_size == right.triples.intra_size
    )
    return MirrorReport(
        geometry=right, doily_points_shared=shared, counts_match_left=counts_match
    )
