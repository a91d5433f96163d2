"""Command-line interface.

Subcommands:
  verify-all   run the full pipeline, write report + tables + figures
  export       write one artifact (ring-tables|census|doily|traces|core)
  census       print the 256-pair census summary for one side
  trace A B    classify the pair (A,B) and print its Jacobson trace

Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .correspondence import (
    duad_vector_bijection,
    jacobson_trace,
    module_geometry,
    relabel_doily,
)
from .errors import DoilykitError, UnknownFormat, UnknownTarget
from .exports import (
    FORMATS,
    TARGETS,
    export_artifact,
    format_point,
    render_census_csv,
    render_submodule_table_csv,
)
from .incidence import build_doily
from .modules import NONUNIMODULAR_FREE, census, cyclic_submodule, is_unimodular
from .report import SECTION_ORDER, build_verification_report
from .ring import canonical_ring


def _report_json(report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def cmd_verify_all(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    ring = canonical_ring()
    report = build_verification_report(ring)

    for name in SECTION_ORDER:
        ok = report.sections[name].get("pass") is True
        print(f"[{'ok' if ok else 'FAIL'}] {name}")

    (out_dir / "report.json").write_text(_report_json(report), encoding="utf-8")
    (out_dir / "submodules_left.csv").write_text(
        render_submodule_table_csv(ring, "left"), encoding="utf-8"
    )
    (out_dir / "submodules_right.csv").write_text(
        render_submodule_table_csv(ring, "right"), encoding="utf-8"
    )
    if not args.no_figures:
        # figures are optional plumbing; import here keeps --no-figures
        # runs free of matplotlib entirely
        from .figures import render_all_figures

        render_all_figures(out_dir, ring)

    if not report.overall_pass:
        print(f"first failing check: {report.first_failure}", file=sys.stderr)
        print("overall: FAIL")
        return 1
    print("overall: PASS")
    print(f"report written to {out_dir / 'report.json'}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    try:
        written = export_artifact(
            args.target, args.format, Path(args.out), side=args.side
        )
    except (UnknownTarget, UnknownFormat) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for path in written:
        print(path)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    ring = canonical_ring()
    cn = census(ring, args.side)
    print(f"census ({args.side} module, 256 generator pairs)")
    for key in sorted(cn.counts):
        print(f"  {key}: {cn.counts[key]}")
    print(f"  distinct nonunimodular free submodules: {len(cn.nonunimodular_free)}")
    gens = " ".join(format_point(s.generator) for s in cn.nonunimodular_free)
    print(f"  canonical generators: {gens}")
    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"census_{args.side}.csv"
        path.write_text(render_census_csv(ring, args.side), encoding="utf-8")
        print(f"written: {path}")
    return 0


def cmd_trace(args: argparse.Namespace) -> int:
    if not (0 <= args.a <= 15 and 0 <= args.b <= 15):
        print("error: generator labels must be in 0..15", file=sys.stderr)
        return 2
    ring = canonical_ring()
    pair = (args.a, args.b)
    sub = cyclic_submodule(ring, pair, args.side)
    cn = census(ring, args.side)
    print(f"R{format_point(pair)}, {args.side} module")
    print(f"  classification: {cn.classification[pair]}")
    print(f"  distinct vectors: {len(sub.distinct_vectors)}")
    print(f"  free: {str(sub.is_free).lower()}")
    print(f"  unimodular: {str(is_unimodular(ring, pair)).lower()}")
    if cn.classification[pair] != NONUNIMODULAR_FREE:
        print("  no Jacobson trace: only nonunimodular free submodules have one")
        return 0
    relabeled = relabel_doily(build_doily(), duad_vector_bijection())
    trace = jacobson_trace(sub, relabeled)
    print("  trace points: " + " ".join(format_point(p) for p in sorted(trace.trace_points)))
    print("  trace lines:")
    for line in sorted(sorted(line) for line in trace.trace_lines):
        print("    " + " ".join(format_point(p) for p in line))
    print(f"  concurrence point: {format_point(trace.concurrence_point)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doilykit",
        description="Verify the order-16 ring, its cyclic submodules, and their doily geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify-all", help="run every check and write the report")
    p_verify.add_argument("--out", default="doilykit-out", help="output directory")
    p_verify.add_argument(
        "--no-figures", action="store_true", help="skip PNG figure rendering"
    )
    p_verify.set_defaults(fn=cmd_verify_all)

    p_export = sub.add_parser("export", help="write one artifact")
    p_export.add_argument("target", help=f"one of: {', '.join(TARGETS)}")
    p_export.add_argument(
        "--format", default="structured-report", help=f"one of: {', '.join(FORMATS)}"
    )
    p_export.add_argument("--side", choices=("left", "right"), default="left")
    p_export.add_argument("--out", default="doilykit-out", help="output directory")
    p_export.set_defaults(fn=cmd_export)

    p_census = sub.add_parser("census", help="print the 256-pair census summary")
    p_census.add_argument("--side", choices=("left", "right"), default="left")
    p_census.add_argument("--out", default=None, help="also write census_<side>.csv here")
    p_census.set_defaults(fn=cmd_census)

    p_trace = sub.add_parser("trace", help="classify a pair and print its Jacobson trace")
    p_trace.add_argument("a", type=int, help="first generator coordinate label (0..15)")
    p_trace.add_argument("b", type=int, help="second generator coordinate label (0..15)")
    p_trace.add_argument("--side", choices=("left", "right"), default="left")
    p_trace.set_defaults(fn=cmd_trace)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; normalize to a
        # return value so in-process callers never see SystemExit
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (UnknownTarget, UnknownFormat) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DoilykitError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
