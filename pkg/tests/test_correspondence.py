"""Bijection, Jacobson traces, core geometry, triples, and the right mirror."""

from __future__ import annotations

import pytest

from doilykit import refdata
from doilykit.correspondence import (
    core_geometry,
    duad_vector_bijection,
    ideal_membership_check,
    jacobson_trace,
    triple_partition,
)
from doilykit.errors import (
    CoreShapeViolation,
    InvalidBijection,
    PartitionViolation,
    TraceShapeViolation,
)
from doilykit.incidence import build_grid_gq21
from doilykit.modules import census, cyclic_submodule

# frozen from a first-principles rerun of the whole construction
EXPECTED_CONCURRENCE = {
    (3, 8): (0, 3),
    (5, 8): (0, 5),
    (6, 8): (0, 6),
    (8, 11): (3, 3),
    (8, 13): (5, 5),
    (8, 14): (6, 6),
    (8, 6): (6, 0),
    (8, 5): (5, 0),
    (8, 3): (3, 0),
}

EXPECTED_DISTINGUISHED = {
    frozenset({(0, 3), (0, 5), (0, 6)}),
    frozenset({(0, 3), (3, 0), (3, 3)}),
    frozenset({(0, 5), (5, 0), (5, 5)}),
    frozenset({(0, 6), (6, 0), (6, 6)}),
    frozenset({(3, 0), (5, 0), (6, 0)}),
    frozenset({(3, 3), (5, 5), (6, 6)}),
}

EXPECTED_TRIPLES = (
    ((3, 8), (5, 8), (6, 8)),
    ((8, 3), (8, 5), (8, 6)),
    ((8, 11), (8, 13), (8, 14)),
)


def test_bijection_is_valid():
    bijection = duad_vector_bijection()
    assert len(bijection.pairs) == 15
    forward = bijection.duad_to_vector()
    backward = bijection.vector_to_duad()
    assert len(forward) == 15 and len(backward) == 15
    for duad, vector in bijection.pairs:
        assert backward[forward[duad]] == duad


def test_bijection_covers_radical_square():
    radical = frozenset({0, 3, 5, 6})
    vectors = {v for _, v in duad_vector_bijection().pairs}
    assert vectors == {(a, b) for a in radical for b in radical} - {(0, 0)}


def test_bijection_rejects_missing_pair():
    with pytest.raises(InvalidBijection):
        duad_vector_bijection(refdata.DUAD_VECTOR_PAIRS[:-1])


def test_bijection_rejects_repeated_vector():
    pairs = list(refdata.DUAD_VECTOR_PAIRS)
    pairs[0] = (pairs[0][0], pairs[1][1])
    with pytest.raises(InvalidBijection):
        duad_vector_bijection(pairs)


def test_relabeled_doily_points(relabeled):
    radical = frozenset({0, 3, 5, 6})
    assert set(relabeled.points) == {
        (a, b) for a in radical for b in radical
    } - {(0, 0)}
    assert relabeled.num_lines == 15


def test_trace_of_r38(ring, relabeled):
    trace = jacobson_trace(cyclic_submodule(ring, (3, 8), "left"), relabeled)
    assert trace.trace_points == frozenset(
        {(0, 3), (0, 5), (0, 6), (3, 0), (3, 3), (3, 5), (3, 6)}
    )
    assert trace.concurrence_point == (0, 3)
    assert {frozenset(line) for line in trace.trace_lines} == {
        frozenset({(0, 3), (0, 5), (0, 6)}),
        frozenset({(0, 3), (3, 0), (3, 3)}),
        frozenset({(0, 3), (3, 5), (3, 6)}),
    }


def test_all_trace_concurrences(left_geometry):
    found = {t.generator: t.concurrence_point for t in left_geometry.traces}
    assert found == EXPECTED_CONCURRENCE


def test_trace_shapes(left_geometry):
    for trace in left_geometry.traces:
        assert len(trace.trace_points) == 7
        assert len(trace.trace_lines) == 3
        for line in trace.trace_lines:
            assert len(line) == 3
            assert trace.concurrence_point in line
        # pencil identity: 1 common point + 3 lines x 2 own points
        others = [line - {trace.concurrence_point} for line in trace.trace_lines]
        assert all(len(o) == 2 for o in others)
        assert len(frozenset().union(*others)) == 6


def test_traces_union_covers_doily(left_geometry, relabeled):
    union = frozenset().union(*(t.trace_points for t in left_geometry.traces))
    assert union == frozenset(relabeled.points)


def test_trace_rejects_non_doily_submodule(ring, relabeled):
    with pytest.raises(TraceShapeViolation):
        jacobson_trace(cyclic_submodule(ring, (1, 0), "left"), relabeled)


def test_core_distinguished_lines(left_geometry):
    core = left_geometry.core
    assert {frozenset(line) for line in core.distinguished_lines} == EXPECTED_DISTINGUISHED
    assert set(core.concurrence_points) == {
        (0, 3), (0, 5), (0, 6), (3, 0), (3, 3), (5, 0), (5, 5), (6, 0), (6, 6),
    }


def test_core_multiplicity_histogram(left_geometry):
    counts = [count for _, count in left_geometry.core.line_multiplicity]
    assert sorted(counts) == [1] * 9 + [3] * 6


def test_concurrence_points_on_two_distinguished_lines(left_geometry):
    core = left_geometry.core
    for point in core.concurrence_points:
        assert sum(1 for line in core.distinguished_lines if point in line) == 2


def test_core_is_the_grid(left_geometry):
    core = left_geometry.core
    witness = dict(core.grid_isomorphism)
    assert len(witness) == 9
    grid = build_grid_gq21()
    mapped = {
        frozenset(witness[p] for p in line) for line in core.core.labeled_lines()
    }
    assert mapped == {frozenset(line) for line in grid.labeled_lines()}


def test_core_rejects_incomplete_trace_family(left_geometry, relabeled):
    with pytest.raises(CoreShapeViolation):
        core_geometry(left_geometry.traces[:8], relabeled)


def test_triple_partition(left_geometry):
    triples = left_geometry.triples
    assert triples.triples == EXPECTED_TRIPLES
    assert triples.intra_size == 8
    assert triples.inter_sizes == (4,)


def test_triple_partition_rejects_flat_family(left_geometry):
    with pytest.raises(PartitionViolation):
        triple_partition(left_geometry.census.nonunimodular_free[:2])


def test_ideal_membership(ring, left_geometry):
    subs = left_geometry.census.nonunimodular_free
    assert ideal_membership_check(subs, refdata.LEFT_COORDINATE_IDEAL)
    assert not ideal_membership_check(subs, refdata.REFERENCE_RADICAL)
    assert left_geometry.coordinates_in_ideal


def test_right_mirror(ring, mirror, left_geometry):
    right = mirror.geometry
    assert right.side == "right"
    assert mirror.doily_points_shared
    assert mirror.counts_match_left
    assert len(right.census.nonunimodular_free) == 9
    assert right.coordinates_in_ideal
    assert ideal_membership_check(
        right.census.nonunimodular_free, refdata.RIGHT_COORDINATE_IDEAL
    )
    # the two sides share not just the doily but the same core
    assert {frozenset(l) for l in right.core.distinguished_lines} == {
        frozenset(l) for l in left_geometry.core.distinguished_lines
    }
    assert set(right.core.concurrence_points) == set(
        left_geometry.core.concurrence_points
    )
    assert right.triples.intra_size == 8
    assert right.triples.inter_sizes == (4,)


def test_right_census_classes(ring):
    cn = census(ring, "right")
    assert dict(cn.counts) == dict(census(ring, "left").counts)
