"""Command-line entry point.

Exit codes, kept stable for pipelines:
  0  success (survey: no check FAILed)
  1  a conjecture check FAILed during a survey -- a potential counterexample
  2  input error (bad flags, unknown family, malformed file, out-of-range n)
  3  the group exceeds the enumeration cap (analyze only)

Machine-format output goes to stdout (or --out); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .alternating import alternating_exponent
from .corpus import (
    ALL_CHECKS,
    SurveyConfig,
    emit_report,
    parse_corpus,
    run_survey,
)
from .errors import CapExceeded, CorpusError, CutgroupsError
from .group import DEFAULT_CAP, PermGroup
from .perm import format_permutation
from .rationality import (
    SUITE_CHECKS,
    conjecture_suite,
    group_rationality,
    lemma61_check,
    qg_degree_alternating,
    sylow3_check,
)
from .constructions import parse_family_spec

AN_FIELDS_MAX = 14


def _cap_argument(text: str) -> int:
    try:
        cap = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cap must be an integer, got {text!r}")
    if cap < 1:
        raise argparse.ArgumentTypeError(f"cap must be >= 1, got {cap}")
    return cap


def _checks_argument(text: str) -> tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [n for n in names if n not in ALL_CHECKS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown checks {unknown}; known: {', '.join(ALL_CHECKS)}"
        )
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutgroups",
        description="Rationality analysis of finite permutation groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="classify one group")
    source = analyze.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", help="family spec, e.g. cyclic:6 or sylnorm:5")
    source.add_argument("--file", help="corpus file containing exactly one group")
    analyze.add_argument("--cap", type=_cap_argument, default=DEFAULT_CAP)
    analyze.add_argument("--checks", type=_checks_argument, default=ALL_CHECKS)
    analyze.add_argument("--format", choices=["json", "csv", "text"], default="text")
    analyze.add_argument("--out", help="output path (default stdout)")
    analyze.set_defaults(func=cmd_analyze)

    survey = sub.add_parser("survey", help="batch-analyze a corpus file")
    survey.add_argument("--corpus", required=True)
    survey.add_argument("--cap", type=_cap_argument, default=DEFAULT_CAP)
    survey.add_argument("--checks", type=_checks_argument, default=ALL_CHECKS)
    survey.add_argument("--format", choices=["json", "csv", "text"], default="text")
    survey.add_argument("--out", help="output path (default stdout)")
    survey.add_argument("--workers", type=int, default=1)
    survey.set_defaults(func=cmd_survey)

    construct = sub.add_parser(
        "construct", help="emit a one-record corpus for a constructed family"
    )
    construct.add_argument("--family", required=True)
    construct.add_argument("--out", help="output path (default stdout)")
    construct.set_defaults(func=cmd_construct)

    an_fields = sub.add_parser(
        "an-fields",
        help="character-field degrees of alternating groups, no enumeration",
    )
    an_fields.add_argument("--max-n", type=int, required=True, dest="max_n")
    an_fields.add_argument("--format", choices=["json", "csv", "text"], default="text")
    an_fields.add_argument("--out", help="output path (default stdout)")
    an_fields.set_defaults(func=cmd_an_fields)

    return parser


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _fail(message: str, code: int) -> int:
    print(f"cutgroups: {message}", file=sys.stderr)
    return code


def _load_single_group(args) -> PermGroup:
    if args.family is not None:
        return parse_family_spec(args.family)
    records = parse_corpus(args.file)
    if len(records) != 1:
        raise CorpusError(
            f"{args.file}: expected exactly one record, found {len(records)}"
        )
    return records[0].build_group()


def _render_analysis_text(report_dict: dict) -> str:
    lines = [
        f"order:         {report_dict['order']}",
        f"solvable:      {report_dict['solvable']}",
        f"rational:      {report_dict['rational']}",
        f"cut:           {report_dict['cut']}",
        f"semirational:  {report_dict['semirational']}",
        f"qg_degree:     {report_dict['qg_degree']}",
        f"classes:       {len(report_dict['classes'])}",
    ]
    if report_dict["checks"]:
        lines.append("checks:")
        for name, result in report_dict["checks"].items():
            lines.append(f"  {name:12s} {result['status']:4s} {result['detail']}")
    return "\n".join(lines) + "\n"


def _render_analysis_csv(report_dict: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = list(report_dict["checks"])
    writer.writerow(
        ["order", "solvable", "rational", "cut", "semirational", "qg_degree"]
        + [f"check:{n}" for n in names]
    )
    writer.writerow(
        [
            report_dict["order"],
            report_dict["solvable"],
            report_dict["rational"],
            report_dict["cut"],
            report_dict["semirational"],
            report_dict["qg_degree"],
        ]
        + [report_dict["checks"][n]["status"] for n in names]
    )
    return buf.getvalue()


def cmd_analyze(args) -> int:
    try:
        G = _load_single_group(args)
    except (CutgroupsError, OSError) as e:
        return _fail(str(e), 2)
    try:
        report = group_rationality(G, args.cap)
        suite_wanted = [c for c in args.checks if c in SUITE_CHECKS]
        if suite_wanted:
            suite = conjecture_suite(G, args.cap)
            for name in suite_wanted:
                report.check_results[name] = suite[name]
        if "sylow3" in args.checks:
            report.check_results["sylow3"] = sylow3_check(G, args.cap)
        if "lemma61" in args.checks:
            report.check_results["lemma61"] = lemma61_check(G, args.cap)
    except CapExceeded as e:
        return _fail(str(e), 3)
    report_dict = report.as_dict()
    if args.format == "json":
        text = json.dumps(report_dict, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _render_analysis_csv(report_dict)
    else:
        text = _render_analysis_text(report_dict)
    _write(text, args.out)
    return 0


def cmd_survey(args) -> int:
    try:
        records = parse_corpus(args.corpus)
    except (CutgroupsError, OSError) as e:
        return _fail(str(e), 2)
    config = SurveyConfig(cap=args.cap, checks=tuple(args.checks), workers=args.workers)
    report = run_survey(records, config, label=str(args.corpus))
    emit_report(report, args.format, args.out)
    if report.failures:
        print(
            f"cutgroups: {len(report.failures)} check failure(s) found",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_construct(args) -> int:
    try:
        G = parse_family_spec(args.family)
    except CutgroupsError as e:
        return _fail(str(e), 2)
    lines = [f"group {args.family}", f"name {args.family}", f"degree {G.degree}"]
    lines.extend(f"gen {format_permutation(g)}" for g in G.generators)
    lines.append(f"order {G.order()}")
    lines.append("end")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_an_fields(args) -> int:
    if not 4 <= args.max_n <= AN_FIELDS_MAX:
        return _fail(f"--max-n must be in 4..{AN_FIELDS_MAX}, got {args.max_n}", 2)
    rows = [
        {
            "n": n,
            "exponent": alternating_exponent(n),
            "qg_degree": qg_degree_alternating(n),
        }
        for n in range(4, args.max_n + 1)
    ]
    if args.format == "json":
        text = json.dumps({"rows": rows}, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "exponent", "qg_degree"])
        for row in rows:
            writer.writerow([row["n"], row["exponent"], row["qg_degree"]])
        text = buf.getvalue()
    else:
        lines = [f"{'n':>3}  {'exp(A_n)':>10}  {'deg Q(A_n)':>10}"]
        lines.extend(
            f"{row['n']:>3}  {row['exponent']:>10}  {row['qg_degree']:>10}"
            for row in rows
        )
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
