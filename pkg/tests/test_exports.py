"""Export renderers: CSV tables, DOT graphs, JSON trees, determinism."""

from __future__ import annotations

import csv
import io
import json

import pytest

from doilykit.errors import UnknownFormat, UnknownTarget
from doilykit.exports import (
    FORMATS,
    TARGETS,
    export_artifact,
    format_point,
    parse_submodule_table_csv,
    parse_vector_cell,
    render_export,
    render_levi_dot,
    render_ring_grid_csv,
    render_submodule_table_csv,
)
from doilykit.modules import census


def test_format_and_parse_vector_cells():
    assert format_point((3, 8)) == "(3,8)"
    assert parse_vector_cell("(3,8)") == (3, 8)
    assert parse_vector_cell(format_point((0, 15))) == (0, 15)
    with pytest.raises(ValueError):
        parse_vector_cell("3,8")


def test_unknown_target_and_format():
    with pytest.raises(UnknownTarget):
        render_export("everything", "table")
    with pytest.raises(UnknownFormat):
        render_export("doily", "yaml")
    with pytest.raises(UnknownFormat):
        render_export("ring-tables", "graph")
    with pytest.raises(UnknownFormat):
        render_export("census", "graph")


def test_ring_grid_csv(ring):
    text = render_ring_grid_csv(ring, "mul")
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 17
    assert rows[0] == ["mul"] + [str(i) for i in range(16)]
    for a in range(16):
        assert rows[a + 1][0] == str(a)
        for b in range(16):
            assert int(rows[a + 1][b + 1]) == ring.mul(a, b)


def test_ring_tables_json(ring):
    tree = json.loads(render_export("ring-tables", "structured-report")["ring_tables.json"])
    assert tree["labels"] == list(range(16))
    assert tree["mul"][3][8] == 3
    assert tree["mul"][8][3] == 0
    assert tree["add"][3][5] == 6


@pytest.mark.parametrize("side", ["left", "right"])
def test_submodule_table_roundtrip(ring, side):
    text = render_submodule_table_csv(ring, side)
    rows = list(csv.reader(io.StringIO(text)))
    assert len(rows) == 17  # header + one row per alpha
    assert len(rows[0]) == 10  # alpha column + nine generators
    parsed = parse_submodule_table_csv(text)
    cn = census(ring, side)
    expected = {sub.generator: sub.distinct_vectors for sub in cn.nonunimodular_free}
    assert parsed == expected


def test_levi_dot_doily(doily):
    text = render_levi_dot(doily, "doily")
    assert text.count("shape=circle") == 15
    assert text.count("shape=box") == 15
    assert text.count(" -- ") == 45
    assert text.startswith("graph doily {")


def test_census_csv(ring):
    files = render_export("census", "table", side="left")
    rows = list(csv.reader(io.StringIO(files["census_left.csv"])))
    assert rows[0] == ["a", "b", "classification", "distinct_vectors", "is_free", "is_unimodular"]
    assert len(rows) == 257
    classes = [row[2] for row in rows[1:]]
    assert classes.count("unimodular") == 144
    assert classes.count("nonunimodular-free-generating") == 36
    assert classes.count("nonunimodular-nonfree-generating") == 76


def test_doily_exports(doily):
    tree = json.loads(render_export("doily", "structured-report")["doily.json"])
    assert len(tree["points"]) == 15
    assert len(tree["lines"]) == 15
    files = render_export("doily", "table")
    rows = list(csv.reader(io.StringIO(files["doily.csv"])))
    assert len(rows) == 16
    assert rows[0] == ["line", "point_1", "point_2", "point_3"]


def test_traces_exports(ring):
    tree = json.loads(render_export("traces", "structured-report")["traces_left.json"])
    assert len(tree) == 9
    assert all(len(t["points"]) == 7 for t in tree)
    dot = render_export("traces", "graph")["traces_left.dot"]
    assert dot.count("subgraph cluster_") == 9
    assert dot.count("shape=box") == 27  # 3 line nodes per trace


def test_core_exports(ring):
    tree = json.loads(render_export("core", "structured-report")["core_left.json"])
    assert len(tree["distinguished_lines"]) == 6
    assert len(tree["concurrence_points"]) == 9
    assert tree["line_multiplicity_histogram"] == {"1": 9, "3": 6}
    files = render_export("core", "table")
    lines = list(csv.reader(io.StringIO(files["core_left.csv"])))
    assert len(lines) == 7
    grid_map = list(csv.reader(io.StringIO(files["core_grid_map_left.csv"])))
    assert len(grid_map) == 10
    dot = render_export("core", "graph")["core_left.dot"]
    assert dot.count("shape=circle") == 9
    assert dot.count("shape=box") == 6
    assert dot.count(" -- ") == 18


def test_all_exports_deterministic(ring):
    for target in TARGETS:
        for fmt in FORMATS:
            try:
                first = render_export(target, fmt, ring)
            except UnknownFormat:
                continue
            second = render_export(target, fmt, ring)
            assert first == second, (target, fmt)


def test_export_artifact_writes_files(tmp_path):
    written = export_artifact("doily", "graph", tmp_path)
    assert [p.name for p in written] == ["doily.dot"]
    assert written[0].read_text(encoding="utf-8").startswith("graph doily {")
