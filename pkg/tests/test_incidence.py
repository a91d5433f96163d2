"""Doily construction, GQ axiom checking, and isomorphism search."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from doilykit.incidence import (
    IncidenceStructure,
    all_duads,
    all_synthemes,
    build_doily,
    build_grid_gq21,
    check_gq,
    find_isomorphism,
)


def test_duads():
    duads = all_duads()
    assert len(duads) == 15
    assert len(set(duads)) == 15
    assert all(1 <= a < b <= 6 for a, b in duads)


def test_synthemes_against_direct_filter():
    # independent route: all duad triples that tile {1..6}
    expected = {
        frozenset(triple)
        for triple in combinations(all_duads(), 3)
        if len({x for duad in triple for x in duad}) == 6
    }
    computed = {frozenset(s) for s in all_synthemes()}
    assert computed == expected
    assert len(computed) == 15


def test_doily_shape(doily):
    assert doily.num_points == 15
    assert doily.num_lines == 15
    assert set(doily.point_degrees()) == {3}
    assert {len(line) for line in doily.lines} == {3}


def test_doily_is_gq22(doily):
    report = check_gq(doily, 2, 2)
    assert report.all_pass
    assert report.violations == ()
    assert report.line_size_ok
    assert report.point_degree_ok
    assert report.pair_uniqueness_ok
    assert report.projection_ok


def test_doily_is_not_gq21(doily):
    report = check_gq(doily, 2, 1)
    assert not report.all_pass
    assert not report.point_degree_ok


def test_grid_is_gq21():
    grid = build_grid_gq21()
    assert grid.num_points == 9
    assert grid.num_lines == 6
    assert check_gq(grid, 2, 1).all_pass


def test_mutilated_doily_fails_gq(doily):
    broken = IncidenceStructure(points=doily.points, lines=doily.lines[:-1])
    report = check_gq(broken, 2, 2)
    assert not report.all_pass
    assert not report.point_degree_ok


def test_construction_rejects_repeated_pair():
    with pytest.raises(ValueError, match="two distinct lines"):
        IncidenceStructure(points=(0, 1, 2, 3), lines=((0, 1, 2), (0, 1, 3)))


def test_construction_rejects_duplicate_points():
    with pytest.raises(ValueError, match="duplicate"):
        IncidenceStructure(points=("a", "a"), lines=())


def test_construction_rejects_bad_index():
    with pytest.raises(ValueError):
        IncidenceStructure(points=(0, 1), lines=((0, 5),))


def test_lines_are_normalized():
    s = IncidenceStructure(points=("x", "y", "z"), lines=((2, 0, 1),))
    assert s.lines == ((0, 1, 2),)
    assert s.labeled_lines() == (frozenset({"x", "y", "z"}),)


def test_relabel_preserves_incidence(doily):
    mapping = {d: f"d{d[0]}{d[1]}" for d in doily.points}
    relabeled = doily.relabel(mapping)
    assert relabeled.lines == doily.lines
    assert relabeled.points[0] == mapping[doily.points[0]]


def test_isomorphism_doily_to_itself(doily):
    mapping = find_isomorphism(doily, doily)
    assert mapping is not None
    mapped = {frozenset(mapping[p] for p in line) for line in doily.lines}
    assert mapped == {frozenset(line) for line in doily.lines}


def test_isomorphism_to_shuffled_copy(doily):
    rng = random.Random(7)
    perm = list(range(doily.num_points))
    rng.shuffle(perm)
    # perm[i] is the new index of old point i
    shuffled_points = [None] * doily.num_points
    for old, new in enumerate(perm):
        shuffled_points[new] = doily.points[old]
    shuffled = IncidenceStructure(
        points=tuple(shuffled_points),
        lines=tuple(tuple(perm[i] for i in line) for line in doily.lines),
    )
    mapping = find_isomorphism(doily, shuffled)
    assert mapping is not None
    mapped = {frozenset(mapping[p] for p in line) for line in doily.lines}
    assert mapped == {frozenset(line) for line in shuffled.lines}


def test_hexagon_not_isomorphic_to_two_triangles():
    # same point count, line count, degrees and line sizes, different geometry
    hexagon = IncidenceStructure(
        points=tuple(range(6)),
        lines=((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)),
    )
    triangles = IncidenceStructure(
        points=tuple(range(6)),
        lines=((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)),
    )
    assert find_isomorphism(hexagon, triangles) is None
    assert find_isomorphism(triangles, hexagon) is None


def test_isomorphism_rejects_size_mismatch(doily):
    assert find_isomorphism(doily, build_grid_gq21()) is None
