"""Point-line incidence structures: the doily, the grid, and isomorphism search."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Optional

Duad = tuple[int, int]
Syntheme = tuple[Duad, Duad, Duad]


@dataclass(frozen=True)
class IncidenceStructure:
    """Points with opaque labels; lines as sorted tuples of point indices.

    Construction validates that line indices are in range, that no two
    lines coincide, and that two distinct points share at most one line.
    """

    points: tuple[Hashable, ...]
    lines: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        normalized = tuple(sorted(tuple(sorted(line)) for line in self.lines))
        object.__setattr__(self, "lines", normalized)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.points)})
        if len(self._index) != len(self.points):
            raise ValueError("duplicate point labels")
        n = len(self.points)
        for line in self.lines:
            if len(set(line)) != len(line):
                raise ValueError(f"line {line} repeats a point")
            if any(not 0 <= i < n for i in line):
                raise ValueError(f"line {line} references an invalid point index")
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("two lines have identical point sets")
        seen: set[tuple[int, int]] = set()
        for line in self.lines:
            for pair in combinations(line, 2):
                if pair in seen:
                    raise ValueError(f"points {pair} lie on two distinct lines")
                seen.add(pair)

    @property
    def num_points(self) -> int:
        return len(self.points)

    @property
    def num_lines(self) -> int:
        return len(self.lines)

    def point_index(self, label: Hashable) -> int:
        return self._index[label]

    def lines_through(self, point: int) -> tuple[tuple[int, ...], ...]:
        return tuple(line for line in self.lines if point in line)

    def point_degrees(self) -> tuple[int, ...]:
        degrees = [0] * len(self.points)
        for line in self.lines:
            for i in line:
                degrees[i] += 1
        return tuple(degrees)

    def labeled_lines(self) -> tuple[frozenset[Hashable], ...]:
        return tuple(frozenset(self.points[i] for i in line) for line in self.lines)

    def collinear(self, p: int, q: int) -> bool:
        return any(p in line and q in line for line in self.lines)

    def relabel(self, mapping: dict) -> "IncidenceStructure":
        """Same incidence, points renamed through ``mapping``."""
        return IncidenceStructure(
            points=tuple(mapping[p] for p in self.points),
            lines=self.lines,
        )


def all_duads() -> tuple[Duad, ...]:
    """The 15 two-element subsets of {1..6}, as sorted pairs in lex order."""
    return tuple(combinations(range(1, 7), 2))

def all_synthemes() -> tuple[Syntheme, ...]:
    """The 15 partitions of {1..6} into three duads.

    Built recursively: pair the smallest unused element with each candidate
    partner, then partition the rest.  (Tests cross-check this against a
    direct filter over duad triples.)
    """

    def partitions(remaining: tuple[int, ...]) -> list[tuple[Duad, ...]]:
        if not remaining:
            return [()]
        first, rest = remaining[0], remaining[1:]
        result = []
        for partner in rest:
            others = tuple(x for x in rest if x != partner)
            for tail in partitions(others):
                result.append(((first, partner),) + tail)
        return result

    return tuple(sorted(tuple(sorted(p)) for p in partitions(tuple(range(1, 7)))))


def build_doily() -> IncidenceStructure:
    """The duad-syntheme model of GQ(2,2): 15 duad points, 15 syntheme lines,
    incidence by containment."""
    duads = all_duads()
    index = {d: i for i, d in enumerate(duads)}
    lines = tuple(tuple(index[d] for d in syntheme) for syntheme in all_synthemes())
    return IncidenceStructure(points=duads, lines=lines)


def build_grid_gq21() -> IncidenceStructure:
    """The 3x3 grid GQ(2,1): 9 points, 3 row lines and 3 column lines."""
    points = tuple((r, c) for r in range(3) for c in range(3))
    rows = tuple(tuple(3 * r + c for c in range(3)) for r in range(3))
    cols = tuple(tuple(3 * r + c for r in range(3)) for c in range(3))
    return IncidenceStructure(points=points, lines=rows + cols)


@dataclass(frozen=True)
class GqCheckReport:
    """Outcome of the four GQ(s,t) axioms, with the violations enumerated."""

    s: int
    t: int
    line_size_ok: bool
    point_degree_ok: bool
    pair_uniqueness_ok: bool
    projection_ok: bool
    violations: tuple[str, ...]

    @property
    def all_pass(self) -> bool:
        return not self.violations


def check_gq(structure: IncidenceStructure, s: int, t: int) -> GqCheckReport:
    """Verify the GQ(s,t) axioms: s+1 points per line, t+1 lines per point,
    two points on at most one common line, and for every non-incident
    point-line pair exactly one point of the line collinear with the point."""
    violations: list[str] = []

    bad_lines = [line for line in structure.lines if len(line) != s + 1]
    for line in bad_lines[:5]:
        violations.append(f"line {line} has {len(line)} points, expected {s + 1}")
    line_size_ok = not bad_lines

    degrees = structure.point_degrees()
    bad_points = [i for i, d in enumerate(degrees) if d != t + 1]
    for i in bad_points[:5]:
        violations.append(
            f"point {structure.points[i]!r} lies on {degrees[i]} lines, expected {t + 1}"
        )
    point_degree_ok = not bad_points

    pair_lines: dict[tuple[int, int], int] = {}
    for line in structure.lines:
        for pair in combinations(line, 2):
            pair_lines[pair] = pair_lines.get(pair, 0) + 1
    bad_pairs = [pair for pair, count in sorted(pair_lines.items()) if count > 1]
    for pair in bad_pairs[:5]:
        violations.append(f"points {pair} share {pair_lines[pair]} lines")
    pair_uniqueness_ok = not bad_pairs

    projection_ok = True
    for p in range(structure.num_points):
        for line in structure.lines:
            if p in line:
                continue
            collinear = [q for q in line if structure.collinear(p, q)]
            if len(collinear) != 1:
                projection_ok = False
                if len(violations) < 20:
                    violations.append(
                        f"point {structure.points[p]!r} sees {len(collinear)} "
                        f"collinear points on line {line}, expected 1"
                    )

    return GqCheckReport(
        s=s,
        t=t,
        line_size_ok=line_size_ok,
        point_degree_ok=point_degree_ok,
        pair_uniqueness_ok=pair_uniqueness_ok,
        projection_ok=projection_ok,
        violations=tuple(violations),
    )


def find_isomorphism(
    a: IncidenceStructure, b: IncidenceStructure
) -> Optional[dict[int, int]]:
    """A point bijection mapping the lines of ``a`` onto the lines of ``b``,
    or None.

    Backtracking over points of ``a`` in descending degree order; a partial
    assignment is pruned unless every partially-mapped line of ``a`` still
    fits inside some line of ``b``.  Any mapping found is re-verified
    line-by-line before being returned.  Point labels are ignored.
    """
    if a.num_points != b.num_points or a.num_lines != b.num_lines:
        return None
    deg_a, deg_b = a.point_degrees(), b.point_degrees()
    if sorted(deg_a) != sorted(deg_b):
        return None
    if sorted(len(l) for l in a.lines) != sorted(len(l) for l in b.lines):
        return None

    b_line_sets = [frozenset(line) for line in b.lines]
    order = sorted(range(a.num_points), key=lambda i: -deg_a[i])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(p: int) -> bool:
        for line in a.lines_through(p):
            image = {mapping[q] for q in line if q in mapping}
            if len(image) < 2:
                continue
            if not any(image <= ls for ls in b_line_sets):
                return False
            if len(image) == len(line) and frozenset(image) not in b_line_sets:
                return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == len(order):
            return True
        p = order[pos]
        for q in range(b.num_points):
            if q in used or deg_b[q] != deg_a[p]:
                continue
            mapping[p] = q
            used.add(q)
            if consistent(p) and backtrack(pos + 1):
                return True
            del mapping[p]
            used.remove(q)
        return False

    if not backtrack(0):
        return None
    mapped_lines = {frozenset(mapping[p] for p in line) for line in a.lines}
    if mapped_lines != set(b_line_sets):
        return None
    return dict(mapping)
