"""Acceptance gate: the eleven headline checks, one printed line each.

Every comparison is exact; all arithmetic is finite. Run with ``-s`` to see
the per-criterion lines on success (pytest swallows stdout of passing tests
by default). The whole module must finish in well under ten seconds.
"""

from __future__ import annotations

import json

from doilykit import refdata
from doilykit.exports import FORMATS, TARGETS, render_export
from doilykit.errors import UnknownFormat
from doilykit.gf2mat import Gf2Matrix3
from doilykit.incidence import build_doily, build_grid_gq21, check_gq
from doilykit.modules import all_vectors, census, cyclic_submodule, is_unimodular, reference_table_check, scale
from doilykit.report import build_verification_report
from doilykit.ring import defining_shape_matrices, verify_ring_axioms
from doilykit.structure import jacobson_radical, maximal_two_sided_ideals, units


def _record(num: int, ok: bool, desc: str) -> None:
    print(f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def test_criterion_01_ring_reconstruction(ring):
    labeled = tuple(Gf2Matrix3.from_rows(rows) for rows in refdata.CANONICAL_MATRICES)
    bit_for_bit = ring.elements == labeled
    shape_match = frozenset(ring.elements) == defining_shape_matrices()
    axioms = verify_ring_axioms(ring)
    ok = bit_for_bit and shape_match and axioms.all_pass and ring.order == 16
    _record(1, ok, "16 matrices match the labeling bit-for-bit; all ring axioms pass over 4096 triples")


def test_criterion_02_units(ring):
    ok = units(ring) == frozenset({1, 2, 4, 7})
    _record(2, ok, "units are exactly {1, 2, 4, 7}")


def test_criterion_03_ideals_and_radical(ring):
    maximal = {i.members for i in maximal_two_sided_ideals(ring)}
    ideals_ok = maximal == {refdata.LEFT_COORDINATE_IDEAL, refdata.RIGHT_COORDINATE_IDEAL}
    # jacobson_radical raises MethodDisagreement if its two routes differ
    radical_ok = jacobson_radical(ring).members == frozenset({0, 3, 5, 6})
    _record(3, ideals_ok and radical_ok,
            "maximal two-sided ideals are the two coordinate ideals; radical {0,3,5,6} by two agreeing methods")


def test_criterion_04_census_and_table(ring):
    cn = census(ring, "left")
    nine = len(cn.nonunimodular_free) == 9
    headers_covered = all(
        any(header in gens for gens in cn.generator_sets)
        for header in refdata.REFERENCE_GENERATORS
    )
    table = reference_table_check(ring)
    cells_ok = table.all_match and table.cells_checked == 144
    typographic = (
        refdata.REFERENCE_SUBMODULE_TABLE[11][3] == (11, 11)
        and refdata.REFERENCE_SUBMODULE_TABLE[11][8] == (11, 0)
    )
    _record(4, nine and headers_covered and cells_ok and typographic,
            "9 nonunimodular free left submodules; all 144 reference-table cells reproduced")


def test_criterion_05_unimodular_implies_free(ring):
    counterexamples = [
        v for v in all_vectors(ring)
        if is_unimodular(ring, v) and not cyclic_submodule(ring, v, "left").is_free
    ]
    _record(5, not counterexamples,
            "every unimodular pair generates a free submodule (0 counterexamples in 256)")


def test_criterion_06_doily_is_gq22(doily):
    gq = check_gq(doily, 2, 2)
    shape = (
        doily.num_points == 15
        and doily.num_lines == 15
        and set(doily.point_degrees()) == {3}
        and {len(l) for l in doily.lines} == {3}
    )
    _record(6, gq.all_pass and shape,
            "duad-syntheme structure passes GQ(2,2): 15 points, 15 lines, 3-regular, 3-uniform")


def test_criterion_07_jacobson_traces(left_geometry):
    shapes_ok = all(
        len(t.trace_points) == 7
        and len(t.trace_lines) == 3
        and all(t.concurrence_point in line for line in t.trace_lines)
        for t in left_geometry.traces
    )
    r38 = next(t for t in left_geometry.traces if t.generator == (3, 8))
    r38_ok = r38.trace_points == frozenset(
        {(0, 3), (0, 5), (0, 6), (3, 0), (3, 3), (3, 5), (3, 6)}
    ) and r38.concurrence_point == (0, 3)
    _record(7, shapes_ok and r38_ok,
            "all nine traces are 7 points on 3 concurrent lines; R(3,8) trace and concurrence pinned")


def test_criterion_08_core_geometry(left_geometry):
    core = left_geometry.core
    counts = [count for _, count in core.line_multiplicity]
    histogram_ok = sorted(counts) == [1] * 9 + [3] * 6
    on_two = all(
        sum(1 for line in core.distinguished_lines if p in line) == 2
        for p in core.concurrence_points
    )
    witness = dict(core.grid_isomorphism)
    grid = build_grid_gq21()
    mapped = {frozenset(witness[p] for p in line) for line in core.core.labeled_lines()}
    witness_ok = (
        len(witness) == 9
        and mapped == {frozenset(line) for line in grid.labeled_lines()}
        and check_gq(core.core, 2, 1).all_pass
    )
    _record(8, histogram_ok and on_two and witness_ok,
            "line multiplicities {3:6, 1:9}; 9 concurrence points on 2 lines each; core is the 3x3 grid (witness re-verified)")


def test_criterion_09_triple_partition(left_geometry):
    triples = left_geometry.triples
    ok = (
        len(triples.triples) == 3
        and all(len(t) == 3 for t in triples.triples)
        and all(size < triples.intra_size for size in triples.inter_sizes)
    )
    _record(9, ok,
            f"3 disjoint triples; intra-triple intersections {triples.intra_size}, "
            f"inter-triple {list(triples.inter_sizes)}")


def test_criterion_10_coordinate_ideals_and_mirror(left_geometry, mirror, relabeled):
    left_ok = left_geometry.coordinates_in_ideal
    right = mirror.geometry
    right_ok = (
        len(right.census.nonunimodular_free) == 9
        and right.coordinates_in_ideal
        and mirror.doily_points_shared
        and mirror.counts_match_left
    )
    same_core = {frozenset(l) for l in right.core.distinguished_lines} == {
        frozenset(l) for l in left_geometry.core.distinguished_lines
    }
    _record(10, left_ok and right_ok and same_core,
            "left coordinates in I_l; right module rerun gives 9 submodules in I_r with the identical core")


def test_criterion_11_property_suite(ring, left_geometry, relabeled, tmp_path):
    # extensional dedup: the 36 nonunimodular-free generators fall into
    # exactly 9 distinct point-sets, recomputed directly from the orbits
    free_nonuni = [
        v for v in all_vectors(ring)
        if not is_unimodular(ring, v) and cyclic_submodule(ring, v, "left").is_free
    ]
    orbits = {cyclic_submodule(ring, v, "left").distinct_vectors for v in free_nonuni}
    dedup_ok = len(free_nonuni) == 36 and len(orbits) == 9

    pencil_ok = all(
        len(t.trace_points) == 1 + 3 * 2 for t in left_geometry.traces
    )
    union = frozenset().union(*(t.trace_points for t in left_geometry.traces))
    union_ok = union == frozenset(relabeled.points)

    deterministic = True
    for target in TARGETS:
        for fmt in FORMATS:
            try:
                first = render_export(target, fmt, ring)
            except UnknownFormat:
                continue
            deterministic = deterministic and first == render_export(target, fmt, ring)
    tree = build_verification_report().to_dict()
    again = build_verification_report().to_dict()
    deterministic = deterministic and json.dumps(tree, sort_keys=True) == json.dumps(again, sort_keys=True)

    from doilykit.figures import draw_doily

    png_a = draw_doily(build_doily(), tmp_path / "a.png").read_bytes()
    png_b = draw_doily(build_doily(), tmp_path / "b.png").read_bytes()
    deterministic = deterministic and png_a == png_b

    _record(11, dedup_ok and pencil_ok and union_ok and deterministic,
            "dedup soundness (36 generators, 9 orbits); 1+3*2=7 pencils; traces cover all 15 points; exports byte-identical")
