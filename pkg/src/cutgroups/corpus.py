"""Corpus ingestion, batch analysis, aggregation and reporting.

The corpus file format is line oriented (UTF-8, ``#`` comments):

    group <id>
    name <free text>            (optional)
    degree <n>
    gen <cycle-notation>        (one or more)
    order <expected>            (optional)
    tags <comma-separated>      (optional)
    end

Survey reports are deterministic: rows are sorted by id, JSON keys are
sorted, and nothing time- or host-dependent enters the body, so two runs
over the same corpus are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import (
    CapExceeded,
    CorpusSyntaxError,
    CutgroupsError,
    DuplicateId,
    OrderMismatch,
)
from .group import DEFAULT_CAP, PermGroup
from .perm import parse_permutation
from .rationality import (
    SUITE_CHECKS,
    conjecture_suite,
    group_rationality,
    lemma61_check,
    sylow3_check,
)
from .structure import sylow

EXTRA_CHECKS = ("sylow3", "lemma61", "syl2")
ALL_CHECKS = SUITE_CHECKS + EXTRA_CHECKS


@dataclass
class GroupRecord:
    id: str
    degree: int
    generator_texts: list[str]
    name: str | None = None
    expected_order: int | None = None
    tags: list[str] = field(default_factory=list)
    group: PermGroup | None = None

    def build_group(self) -> PermGroup:
        if self.group is None:
            gens = [parse_permutation(t, self.degree) for t in self.generator_texts]
            self.group = PermGroup(self.degree, gens)
        return self.group


@dataclass
class SurveyConfig:
    cap: int = DEFAULT_CAP
    checks: tuple[str, ...] = ALL_CHECKS
    workers: int = 1

    def __post_init__(self):
        unknown = [c for c in self.checks if c not in ALL_CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {unknown}")


@dataclass
class SurveyReport:
    corpus: str
    config: dict
    rows: list[dict]
    aggregates: dict
    failures: list[dict]
    skipped: list[dict]

    def as_dict(self) -> dict:
        return {
            "corpus": self.corpus,
            "config": self.config,
            "rows": self.rows,
            "aggregates": self.aggregates,
            "failures": self.failures,
            "skipped": self.skipped,
        }


def parse_corpus(path: str | Path) -> list[GroupRecord]:
    """Parse and validate a corpus file.

    Generators must parse at the stated degree, ids must be unique, and a
    declared order must match the computed group order.
    """
    path = Path(path)
    records: list[GroupRecord] = []
    seen_ids: set[str] = set()
    current: dict | None = None
    gen_lines: list[tuple[int, str]] = []

    with path.open(encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, rest = line.partition(" ")
            rest = rest.strip()
            if key == "group":
                if current is not None:
                    raise CorpusSyntaxError(line_no, "previous record missing 'end'")
                if not rest:
                    raise CorpusSyntaxError(line_no, "'group' needs an id")
                if rest in seen_ids:
                    raise DuplicateId(f"duplicate record id {rest!r} at line {line_no}")
                seen_ids.add(rest)
                current = {"id": rest, "line": line_no}
                gen_lines = []
            elif current is None:
                raise CorpusSyntaxError(line_no, f"{key!r} outside a group record")
            elif key == "name":
                current["name"] = rest
            elif key == "degree":
                try:
                    current["degree"] = int(rest)
                except ValueError:
                    raise CorpusSyntaxError(line_no, f"bad degree {rest!r}") from None
            elif key == "gen":
                gen_lines.append((line_no, rest))
            elif key == "order":
                try:
                    current["order"] = int(rest)
                except ValueError:
                    raise CorpusSyntaxError(line_no, f"bad order {rest!r}") from None
            elif key == "tags":
                current["tags"] = [t.strip() for t in rest.split(",") if t.strip()]
            elif key == "end":
                records.append(_finish_record(current, gen_lines))
                current = None
            else:
                raise CorpusSyntaxError(line_no, f"unknown keyword {key!r}")
    if current is not None:
        raise CorpusSyntaxError(current["line"], "record missing 'end'")
    return records


def _finish_record(current: dict, gen_lines: list[tuple[int, str]]) -> GroupRecord:
    start = current["line"]
    if "degree" not in current:
        raise CorpusSyntaxError(start, f"record {current['id']!r} has no degree")
    if not gen_lines:
        raise CorpusSyntaxError(start, f"record {current['id']!r} has no generators")
    degree = current["degree"]
    if degree < 1:
        raise CorpusSyntaxError(start, f"degree must be positive, got {degree}")
    gens = []
    for line_no, text in gen_lines:
        try:
            gens.append(parse_permutation(text, degree))
        except CutgroupsError as e:
            raise CorpusSyntaxError(
                line_no, f"record {current['id']!r}: {e}"
            ) from None
    record = GroupRecord(
        id=current["id"],
        degree=degree,
        generator_texts=[text for _, text in gen_lines],
        name=current.get("name"),
        expected_order=current.get("order"),
        tags=current.get("tags", []),
    )
    record.group = PermGroup(degree, gens)
    if record.expected_order is not None:
        actual = record.group.order()
        if actual != record.expected_order:
            raise OrderMismatch(record.id, record.expected_order, actual)
    return record


def _analyze_payload(payload: dict) -> dict:
    """Analyze one record from a plain payload (picklable for worker pools)."""
    rid = payload["id"]
    degree = payload["degree"]
    cap = payload["cap"]
    checks = payload["checks"]
    gens = [parse_permutation(t, degree) for t in payload["gens"]]
    G = PermGroup(degree, gens)
    try:
        report = group_rationality(G, cap)
    except CapExceeded as e:
        return {"id": rid, "skipped": str(e)}
    check_results = {}
    suite_wanted = [c for c in checks if c in SUITE_CHECKS]
    if suite_wanted:
        suite = conjecture_suite(G, cap)
        for name in suite_wanted:
            check_results[name] = suite[name].as_dict()
    if "sylow3" in checks:
        check_results["sylow3"] = sylow3_check(G, cap).as_dict()
    if "lemma61" in checks:
        check_results["lemma61"] = lemma61_check(G, cap).as_dict()
    sylow2_cut = None
    if "syl2" in checks and report.is_cut:
        P2 = sylow(G, 2, cap)
        sylow2_cut = group_rationality(P2.as_group, cap).is_cut
    return {
        "id": rid,
        "row": {
            "id": rid,
            "order": report.order,
            "solvable": report.solvable,
            "rational": report.is_rational,
            "cut": report.is_cut,
            "semirational": report.is_semirational,
            "qg_degree": report.qg_degree,
            "checks": check_results,
            "sylow2_cut": sylow2_cut,
        },
    }


def run_survey(
    records: list[GroupRecord],
    config: SurveyConfig | None = None,
    label: str = "corpus",
) -> SurveyReport:
    """Analyze every record; per-record cap overruns become skipped entries,
    never silent drops.  Row order is by record id regardless of workers."""
    config = config or SurveyConfig()
    ordered = sorted(records, key=lambda r: r.id)
    payloads = [
        {
            "id": r.id,
            "degree": r.degree,
            "gens": list(r.generator_texts),
            "cap": config.cap,
            "checks": tuple(config.checks),
        }
        for r in ordered
    ]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(_analyze_payload, payloads))
    else:
        outcomes = [_analyze_payload(p) for p in payloads]

    rows: list[dict] = []
    skipped: list[dict] = []
    failures: list[dict] = []
    for outcome in outcomes:
        if "skipped" in outcome:
            skipped.append({"id": outcome["id"], "reason": outcome["skipped"]})
            continue
        row = outcome["row"]
        rows.append(row)
        for name, result in row["checks"].items():
            if result["status"] == "FAIL":
                failures.append(
                    {"id": row["id"], "check": name, "detail": result["detail"]}
                )

    aggregates = _aggregate(rows, config)
    return SurveyReport(
        corpus=label,
        config={
            "cap": config.cap,
            "checks": list(config.checks),
            "workers": config.workers,
        },
        rows=rows,
        aggregates=aggregates,
        failures=failures,
        skipped=skipped,
    )


def _aggregate(rows: list[dict], config: SurveyConfig) -> dict:
    analyzed = len(rows)
    rational = sum(1 for r in rows if r["rational"])
    cut = sum(1 for r in rows if r["cut"])
    semirational = sum(1 for r in rows if r["semirational"])

    def pct(n: int) -> float:
        return round(100.0 * n / analyzed, 2) if analyzed else 0.0

    check_counts = {}
    for name in config.checks:
        if name == "syl2":
            continue
        tally = {"PASS": 0, "FAIL": 0, "SKIP": 0}
        for row in rows:
            if name in row["checks"]:
                tally[row["checks"][name]["status"]] += 1
        check_counts[name] = tally
    return {
        "analyzed": analyzed,
        "max_order_analyzed": max((r["order"] for r in rows), default=0),
        "rational_count": rational,
        "cut_count": cut,
        "semirational_count": semirational,
        "rational_pct": pct(rational),
        "cut_pct": pct(cut),
        "semirational_pct": pct(semirational),
        "checks": check_counts,
        "cut_with_noncut_sylow2": sorted(
            r["id"] for r in rows if r["cut"] and r["sylow2_cut"] is False
        ),
    }


def render_report(report: SurveyReport, format: str) -> str:
    if format == "json":
        return json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n"
    if format == "csv":
        return _render_csv(report)
    if format == "text":
        return _render_text(report)
    raise ValueError(f"unknown format {format!r}")


def _render_csv(report: SurveyReport) -> str:
    check_names = [c for c in report.config["checks"] if c != "syl2"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = [
        "id",
        "order",
        "solvable",
        "rational",
        "cut",
        "semirational",
        "qg_degree",
        "sylow2_cut",
    ] + [f"check:{c}" for c in check_names]
    writer.writerow(header)
    for row in report.rows:
        writer.writerow(
            [
                row["id"],
                row["order"],
                row["solvable"],
                row["rational"],
                row["cut"],
                row["semirational"],
                row["qg_degree"],
                "" if row["sylow2_cut"] is None else row["sylow2_cut"],
            ]
            + [row["checks"].get(c, {}).get("status", "") for c in check_names]
        )
    return buf.getvalue()


def _render_text(report: SurveyReport) -> str:
    agg = report.aggregates
    lines = [
        f"corpus: {report.corpus}",
        f"analyzed {agg['analyzed']} groups"
        f" (max order {agg['max_order_analyzed']}, cap {report.config['cap']}),"
        f" {len(report.skipped)} skipped",
        "",
        f"  rational:       {agg['rational_count']:4d}  ({agg['rational_pct']}%)",
        f"  cut:            {agg['cut_count']:4d}  ({agg['cut_pct']}%)",
        f"  semirational:   {agg['semirational_count']:4d}  ({agg['semirational_pct']}%)",
        "",
    ]
    if agg["checks"]:
        lines.append("check results (pass/fail/skip):")
        for name, tally in agg["checks"].items():
            lines.append(
                f"  {name:12s} {tally['PASS']:4d} / {tally['FAIL']:4d} / {tally['SKIP']:4d}"
            )
        lines.append("")
    if agg["cut_with_noncut_sylow2"]:
        lines.append(
            "cut groups with a non-cut Sylow 2-subgroup (informational): "
            + ", ".join(agg["cut_with_noncut_sylow2"])
        )
        lines.append("")
    if report.failures:
        lines.append("FAILURES (potential counterexamples):")
        for f in report.failures:
            lines.append(f"  {f['id']} [{f['check']}]: {f['detail']}")
        lines.append("")
    if report.skipped:
        lines.append("skipped:")
        for s in report.skipped:
            lines.append(f"  {s['id']}: {s['reason']}")
        lines.append("")
    return "\n".join(lines)


def emit_report(report: SurveyReport, format: str, path: str | Path | None) -> None:
    """Write a report in the given format; None writes to stdout."""
    text = render_report(report, format)
    if path is None:
        print(text, end="")
    else:
        Path(path).write_text(text, encoding="utf-8")


def bundled_corpus_path() -> Path:
    """Location of the corpus shipped with the package."""
    return Path(__file__).parent / "data" / "bundled.corpus"
