"""Deterministic file exports: JSON trees, CSV tables, DOT incidence graphs.

Incidence graphs are emitted in Levi (bipartite) form: one node per point,
one box-shaped node per line, one edge per incidence. A collinearity graph
would lose the three-point lines, so it is not offered.
"""

from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path
from typing import Any

from .correspondence import duad_vector_bijection, module_geometry, relabel_doily
from .errors import UnknownFormat, UnknownTarget
from .incidence import IncidenceStructure, build_doily
from .modules import ModVector, census, cyclic_submodule, is_unimodular, scale
from .ring import FiniteRing, canonical_ring

TARGETS = ("ring-tables", "census", "doily", "traces", "core")
FORMATS = ("structured-report", "table", "graph")

FORMAT_STRUCTURED = "structured-report"
FORMAT_TABLE = "table"
FORMAT_GRAPH = "graph"


def format_point(label: Any) -> str:
    """Stable text token for a point label (duad or vector, both int pairs)."""
    if isinstance(label, tuple):
        return "(" + ",".join(str(part) for part in label) + ")"
    return str(label)


def parse_vector_cell(cell: str) -> ModVector:
    """Inverse of format_point for vector cells like "(3,8)"."""
    inner = cell.strip()
    if not (inner.startswith("(") and inner.endswith(")")):
        raise ValueError(f"not a vector cell: {cell!r}")
    a_text, b_text = inner[1:-1].split(",")
    return (int(a_text), int(b_text))


def _node_id(prefix: str, token: str) -> str:
    return prefix + "_" + re.sub(r"[^0-9A-Za-z]+", "_", token).strip("_")


def render_levi_dot(structure: IncidenceStructure, name: str) -> str:
    """Bipartite DOT graph: circle nodes for points, box nodes for lines."""
    point_tokens = sorted(format_point(p) for p in structure.points)
    line_entries = []
    for line in structure.labeled_lines():
        tokens = sorted(format_point(p) for p in line)
        line_entries.append((tokens, " ".join(tokens)))
    line_entries.sort(key=lambda entry: entry[1])

    out = [f"graph {name} {{"]
    for token in point_tokens:
        out.append(f'  {_node_id("p", token)} [shape=circle, label="{token}"];')
    for _, label in line_entries:
        out.append(f'  {_node_id("l", label)} [shape=box, label="{label}"];')
    edges = []
    for tokens, label in line_entries:
        edges.extend(
            f'  {_node_id("p", token)} -- {_node_id("l", label)};' for token in tokens
        )
    out.extend(sorted(edges))
    out.append("}")
    return "\n".join(out) + "\n"


def _csv_text(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(tree: Any) -> str:
    return json.dumps(tree, indent=2, sort_keys=True) + "\n"


def render_ring_grid_csv(ring: FiniteRing, op: str) -> str:
    """One 16x16 Cayley grid, header row and column of element labels."""
    apply = ring.add if op == "add" else ring.mul
    labels = ring.labels()
    rows = [[op] + [str(b) for b in labels]]
    for a in labels:
        rows.append([str(a)] + [str(apply(a, b)) for b in labels])
    return _csv_text(rows)


def _ring_tables_tree(ring: FiniteRing) -> dict[str, Any]:
    labels = ring.labels()
    return {
        "labels": list(labels),
        "add": [[ring.add(a, b) for b in labels] for a in labels],
        "mul": [[ring.mul(a, b) for b in labels] for a in labels],
    }


def render_census_csv(ring: FiniteRing, side: str) -> str:
    cn = census(ring, side)
    rows = [["a", "b", "classification", "distinct_vectors", "is_free", "is_unimodular"]]
    for pair in sorted(cn.classification):
        sub = cyclic_submodule(ring, pair, side)
        rows.append(
            [
                str(pair[0]),
                str(pair[1]),
                cn.classification[pair],
                str(len(sub.distinct_vectors)),
                str(sub.is_free).lower(),
                str(is_unimodular(ring, pair)).lower(),
            ]
        )
    return _csv_text(rows)


def _census_tree(ring: FiniteRing, side: str) -> dict[str, Any]:
    cn = census(ring, side)
    return {
        "side": side,
        "counts": dict(sorted(cn.counts.items())),
        "classification": [
            {"a": pair[0], "b": pair[1], "class": cn.classification[pair]}
            for pair in sorted(cn.classification)
        ],
        "nonunimodular_free_generators": [
            list(sub.generator) for sub in cn.nonunimodular_free
        ],
        "generator_sets": [
            [list(g) for g in gens] for gens in cn.generator_sets
        ],
    }


def _doily_tree(doily: IncidenceStructure) -> dict[str, Any]:
    return {
        "points": sorted(format_point(p) for p in doily.points),
        "lines": sorted(
            sorted(format_point(p) for p in line) for line in doily.labeled_lines()
        ),
    }


def render_doily_csv(doily: IncidenceStructure) -> str:
    lines = sorted(
        sorted(format_point(p) for p in line) for line in doily.labeled_lines()
    )
    rows = [["line", "point_1", "point_2", "point_3"]]
    for index, line in enumerate(lines):
        rows.append([str(index)] + line)
    return _csv_text(rows)


def render_submodule_table_csv(ring: FiniteRing, side: str) -> str:
    """The 16-row alpha table: one column per canonical generator.

    Round-trips: parsing a column back yields exactly the submodule's
    vector set (see parse_submodule_table_csv).
    """
    generators = [sub.generator for sub in census(ring, side).nonunimodular_free]
    rows = [["alpha"] + [format_point(g) for g in generators]]
    for alpha in ring.labels():
        rows.append(
            [str(alpha)]
            + [format_point(scale(ring, alpha, g, side)) for g in generators]
        )
    return _csv_text(rows)


def parse_submodule_table_csv(text: str) -> dict[ModVector, frozenset[ModVector]]:
    """Read back an exported alpha table as generator -> vector set."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    generators = [parse_vector_cell(cell) for cell in header[1:]]
    columns: list[set[ModVector]] = [set() for _ in generators]
    for row in reader:
        for column, cell in zip(columns, row[1:]):
            column.add(parse_vector_cell(cell))
    return {g: frozenset(col) for g, col in zip(generators, columns)}


def _traces_tree(geometry) -> list[dict[str, Any]]:
    return [
        {
            "generator": list(t.generator),
            "points": [list(p) for p in sorted(t.trace_points)],
            "lines": sorted(
                [list(p) for p in sorted(line)] for line in t.trace_lines
            ),
            "concurrence_point": list(t.concurrence_point),
        }
        for t in geometry.traces
    ]


def render_traces_dot(geometry, name: str) -> str:
    """Nine cluster subgraphs, one Levi graph per Jacobson trace."""
    out = [f"graph {name} {{"]
    for index, trace in enumerate(geometry.traces):
        gen = format_point(trace.generator)
        out.append(f"  subgraph cluster_{index} {{")
        out.append(f'    label="R{gen}";')
        prefix = f"t{index}"
        for token in sorted(format_point(p) for p in trace.trace_points):
            out.append(
                f'    {_node_id(prefix + "p", token)} [shape=circle, label="{token}"];'
            )
        line_entries = sorted(
            (sorted(format_point(p) for p in line) for line in trace.trace_lines),
            key=lambda tokens: " ".join(tokens),
        )
        edges = []
        for tokens in line_entries:
            label = " ".join(tokens)
            out.append(
                f'    {_node_id(prefix + "l", label)} [shape=box, label="{label}"];'
            )
            edges.extend(
                f'    {_node_id(prefix + "p", token)} -- {_node_id(prefix + "l", label)};'
                for token in tokens
            )
        out.extend(sorted(edges))
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def _core_tree(geometry) -> dict[str, Any]:
    core = geometry.core
    histogram: dict[str, int] = {}
    for _, count in core.line_multiplicity:
        histogram[str(count)] = histogram.get(str(count), 0) + 1
    return {
        "distinguished_lines": sorted(
            [list(p) for p in sorted(line)] for line in core.distinguished_lines
        ),
        "concurrence_points": [list(p) for p in sorted(core.concurrence_points)],
        "line_multiplicity_histogram": dict(sorted(histogram.items())),
        "grid_isomorphism": sorted(
            [list(src), list(dst)] for src, dst in core.grid_isomorphism
        ),
    }


def render_core_csv(geometry) -> str:
    lines = sorted(
        sorted(format_point(p) for p in line)
        for line in geometry.core.distinguished_lines
    )
    rows = [["line", "point_1", "point_2", "point_3"]]
    for index, line in enumerate(lines):
        rows.append([str(index)] + line)
    return _csv_text(rows)


def render_core_grid_map_csv(geometry) -> str:
    rows = [["core_point", "grid_row", "grid_col"]]
    for src, dst in sorted(geometry.core.grid_isomorphism):
        rows.append([format_point(src), str(dst[0]), str(dst[1])])
    return _csv_text(rows)


def render_export(
    target: str,
    fmt: str,
    ring: FiniteRing | None = None,
    side: str = "left",
) -> dict[str, str]:
    """Build the named artifact as {filename: content}. Pure, no writes."""
    if target not in TARGETS:
        raise UnknownTarget(f"unknown export target {target!r}; expected one of {TARGETS}")
    if fmt not in FORMATS:
        raise UnknownFormat(f"unknown export format {fmt!r}; expected one of {FORMATS}")
    if ring is None:
        ring = canonical_ring()

    if target == "ring-tables":
        if fmt == FORMAT_STRUCTURED:
            return {"ring_tables.json": _json_text(_ring_tables_tree(ring))}
        if fmt == FORMAT_TABLE:
            return {
                "ring_add.csv": render_ring_grid_csv(ring, "add"),
                "ring_mul.csv": render_ring_grid_csv(ring, "mul"),
            }
        raise UnknownFormat("ring-tables has no graph form (it is not an incidence structure)")

    if target == "census":
        if fmt == FORMAT_STRUCTURED:
            return {f"census_{side}.json": _json_text(_census_tree(ring, side))}
        if fmt == FORMAT_TABLE:
            return {f"census_{side}.csv": render_census_csv(ring, side)}
        raise UnknownFormat("census has no graph form (it is not an incidence structure)")

    if target == "doily":
        doily = build_doily()
        if fmt == FORMAT_STRUCTURED:
            return {"doily.json": _json_text(_doily_tree(doily))}
        if fmt == FORMAT_TABLE:
            return {"doily.csv": render_doily_csv(doily)}
        return {"doily.dot": render_levi_dot(doily, "doily")}

    # traces and core both need the per-side module geometry
    relabeled = relabel_doily(build_doily(), duad_vector_bijection())
    geometry = module_geometry(ring, side, relabeled)

    if target == "traces":
        if fmt == FORMAT_STRUCTURED:
            return {f"traces_{side}.json": _json_text(_traces_tree(geometry))}
        if fmt == FORMAT_TABLE:
            return {
                f"submodule_table_{side}.csv": render_submodule_table_csv(ring, side)
            }
        return {f"traces_{side}.dot": render_traces_dot(geometry, f"traces_{side}")}

    if fmt == FORMAT_STRUCTURED:
        return {f"core_{side}.json": _json_text(_core_tree(geometry))}
    if fmt == FORMAT_TABLE:
        return {
            f"core_{side}.csv": render_core_csv(geometry),
            f"core_grid_map_{side}.csv": render_core_grid_map_csv(geometry),
        }
    core_structure = geometry.core.core
    return {f"core_{side}.dot": render_levi_dot(core_structure, f"core_{side}")}


def export_artifact(
    target: str,
    fmt: str,
    out_dir: Path,
    ring: FiniteRing | None = None,
    side: str = "left",
) -> list[Path]:
    """Render and write the artifact into out_dir; returns written paths."""
    files = render_export(target, fmt, ring, side)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(files):
        path = out_dir / name
        path.write_text(files[name], encoding="utf-8")
        written.append(path)
    return written
