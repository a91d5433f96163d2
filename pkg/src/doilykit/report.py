"""Assembly of the full verification report as one self-describing tree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import refdata
from .correspondence import (
    ModuleGeometry,
    MirrorReport,
    duad_vector_bijection,
    module_geometry,
    relabel_doily,
    right_module_mirror,
)
from .errors import DoilykitError
from .incidence import build_doily, check_gq
from .modules import reference_table_check
from .ring import FiniteRing, canonical_ring, defining_shape_matrices, verify_ring_axioms
from .structure import structure_report

SECTION_ORDER = (
    "ring",
    "structure",
    "census",
    "reference_table",
    "doily",
    "bijection",
    "traces",
    "core",
    "triples",
    "ideal_membership",
    "right_mirror",
)


@dataclass(frozen=True)
class VerificationReport:
    sections: dict[str, dict[str, Any]]

    @property
    def overall_pass(self) -> bool:
        return all(section.get("pass") is True for section in self.sections.values())

    @property
    def first_failure(self) -> str | None:
        for name in SECTION_ORDER:
            section = self.sections.get(name)
            if section is None or section.get("pass") is not True:
                return name
        return None

    def to_dict(self) -> dict[str, Any]:
        tree: dict[str, Any] = {name: self.sections[name] for name in SECTION_ORDER}
        tree["overall_pass"] = self.overall_pass
        return tree


def _vec(v: tuple[int, int]) -> list[int]:
    return [v[0], v[1]]

def _vecs(vs) -> list[list[int]]:
    return [_vec(v) for v in sorted(vs)]

def _line(line) -> list[list[int]]:
    return [_vec(v) for v in sorted(line)]


def _geometry_tree(geometry: ModuleGeometry) -> dict[str, Any]:
    """The census/traces/core/triples subtree shared by the two sides."""
    cn = geometry.census
    core = geometry.core
    core_gq = check_gq(core.core, 2, 1)
    passed = (
        len(cn.nonunimodular_free) == 9
        and all(len(t.trace_points) == 7 for t in geometry.traces)
        and geometry.coordinates_in_ideal
        and core_gq.all_pass
    )
    return {
        "census": {
            "counts": dict(sorted(cn.counts.items())),
            "total_pairs": sum(cn.counts.values()),
            "nonunimodular_free_count": len(cn.nonunimodular_free),
            "canonical_generators": [_vec(s.generator) for s in cn.nonunimodular_free],
            "generator_sets": [[_vec(g) for g in gens] for gens in cn.generator_sets],
        },
        "traces": [
            {
                "generator": _vec(t.generator),
                "points": _vecs(t.trace_points),
                "lines": [_line(line) for line in t.trace_lines],
                "concurrence_point": _vec(t.concurrence_point),
            }
            for t in geometry.traces
        ],
        "core": {
            "distinguished_lines": [_line(line) for line in core.distinguished_lines],
            "concurrence_points": [_vec(p) for p in core.concurrence_points],
            "line_multiplicity_histogram": _multiplicity_histogram(core),
            "grid_isomorphism": [
                [_vec(src), list(dst)] for src, dst in core.grid_isomorphism
            ],
            "core_gq21_pass": core_gq.all_pass,
        },
        "triples": {
            "triples": [[_vec(g) for g in triple] for triple in geometry.triples.triples],
            "intra_intersection_size": geometry.triples.intra_size,
            "inter_intersection_sizes": list(geometry.triples.inter_sizes),
        },
        "coordinate_ideal": sorted(geometry.coordinate_ideal),
        "coordinates_in_ideal": geometry.coordinates_in_ideal,
        "pass": passed,
    }


def _multiplicity_histogram(core) -> dict[str, int]:
    histogram: dict[str, int] = {}
    for _, count in core.line_multiplicity:
        key = str(count)
        histogram[key] = histogram.get(key, 0) + 1
    return dict(sorted(histogram.items()))


def build_verification_report(ring: FiniteRing | None = None) -> VerificationReport:
    """Run the whole pipeline and fold every check into one report tree.

    Stages that raise a DoilykitError are recorded as failed sections
    instead of aborting the run; dependent sections are marked skipped.
    """
    if ring is None:
        ring = canonical_ring()
    sections: dict[str, dict[str, Any]] = {}

    def stage(name: str, fn: Callable[[], dict[str, Any]]) -> Any:
        try:
            sections[name] = fn()
        except DoilykitError as exc:
            sections[name] = {"pass": False, "error": str(exc)}
            return False
        return sections[name].get("pass", False)

    def ring_section() -> dict[str, Any]:
        axioms = verify_ring_axioms(ring)
        shape_match = frozenset(ring.elements) == defining_shape_matrices()
        ok = (
            axioms.all_pass
            and shape_match
            and ring.order == 16
            and ring.zero == 0
            and ring.one == 1
        )
        return {
            "order": ring.order,
            "zero_label": ring.zero,
            "one_label": ring.one,
            "matches_defining_shape": shape_match,
            "axioms": axioms.as_dict(),
            "axiom_failures": list(axioms.failures),
            "pass": ok,
        }

    stage("ring", ring_section)

    def structure_section() -> dict[str, Any]:
        report = structure_report(ring)
        maximal = sorted(ideal.sorted_members() for ideal in report.maximal_two_sided)
        expected_maximal = sorted(
            [sorted(refdata.LEFT_COORDINATE_IDEAL), sorted(refdata.RIGHT_COORDINATE_IDEAL)]
        )
        ok = (
            report.units == refdata.REFERENCE_UNITS
            and [list(m) for m in maximal] == expected_maximal
            and report.jacobson.members == refdata.REFERENCE_RADICAL
        )
        return {
            "units": sorted(report.units),
            "maximal_two_sided_ideals": [list(m) for m in maximal],
            "jacobson_radical": sorted(report.jacobson.members),
            "radical_methods_agree": True,
            "pass": ok,
        }

    stage("structure", structure_section)

    doily = build_doily()

    def doily_section() -> dict[str, Any]:
        gq = check_gq(doily, 2, 2)
        degrees = set(doily.point_degrees())
        sizes = {len(line) for line in doily.lines}
        ok = (
            doily.num_points == 15
            and doily.num_lines == 15
            and degrees == {3}
            and sizes == {3}
            and gq.all_pass
        )
        return {
            "points": doily.num_points,
            "lines": doily.num_lines,
            "point_degrees": sorted(degrees),
            "line_sizes": sorted(sizes),
            "gq22_pass": gq.all_pass,
            "gq22_violations": list(gq.violations),
            "pass": ok,
        }

    stage("doily", doily_section)

    def bijection_section() -> dict[str, Any]:
        bijection = duad_vector_bijection()
        return {
            "pairs": [[list(duad), _vec(vec)] for duad, vec in bijection.pairs],
            "pass": True,
        }

    bijection_ok = stage("bijection", bijection_section)

    def table_section() -> dict[str, Any]:
        table_report = reference_table_check(ring)
        return {
            "cells_checked": table_report.cells_checked,
            "mismatches": [
                {
                    "generator": _vec(gen),
                    "alpha": alpha,
                    "computed": _vec(computed),
                    "expected": _vec(expected),
                }
                for gen, alpha, computed, expected in table_report.mismatches
            ],
            "pass": table_report.all_match,
        }

    stage("reference_table", table_section)

    left: ModuleGeometry | None = None
    mirror: MirrorReport | None = None
    if bijection_ok:
        relabeled = relabel_doily(doily, duad_vector_bijection())

        def left_sections() -> ModuleGeometry:
            return module_geometry(ring, "left", relabeled)

        try:
            left = left_sections()
        except DoilykitError as exc:
            for name in ("census", "traces", "core", "triples", "ideal_membership"):
                sections[name] = {"pass": False, "error": str(exc)}
        if left is not None:
            tree = _geometry_tree(left)
            sections["census"] = {**tree["census"], "pass": tree["pass"]}
            sections["traces"] = {"reports": tree["traces"], "pass": tree["pass"]}
            sections["core"] = {**tree["core"], "pass": tree["pass"]}
            sections["triples"] = {**tree["triples"], "pass": tree["pass"]}
            sections["ideal_membership"] = {
                "side": "left",
                "ideal": sorted(left.coordinate_ideal),
                "pass": left.coordinates_in_ideal,
            }

        def mirror_section() -> dict[str, Any]:
            nonlocal mirror
            mirror = right_module_mirror(ring, left)
            tree = _geometry_tree(mirror.geometry)
            return {
                **tree,
                "doily_points_shared": mirror.doily_points_shared,
                "counts_match_left": mirror.counts_match_left,
                "pass": tree["pass"]
                and mirror.doily_points_shared
                and mirror.counts_match_left,
            }

        stage("right_mirror", mirror_section)
    for name in SECTION_ORDER:
        sections.setdefault(name, {"pass": False, "error": "skipped"})
    return VerificationReport(sections)
