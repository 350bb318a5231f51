"""Command-line interface.

Exit codes: 0 ok, 1 unfulfilled FSRs, 2 conflicts, 3 input/parse error,
4 usage error. Diagnostics are written to standard error; the report goes
to standard output unless ``--out`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from coop_safety import __version__
from coop_safety.catalog import CATALOG_ENV, load_catalog, resolve_catalog_path
from coop_safety.diagnostics import InputError, sort_diagnostics
from coop_safety.report import FORMATS, PipelineConfig, render, run_pipeline

EXIT_OK = 0
EXIT_UNFULFILLED = 1
EXIT_CONFLICTS = 2
EXIT_INPUT = 3
EXIT_USAGE = 4

COMMANDS = {
    "validate": "parse and validate the model files",
    "hara": "functions, hazards and hazardous events",
    "goals": "safety goals with ASILs",
    "fsrs": "functional safety requirements from fault trees",
    "conflicts": "grouped FSR conflict check",
    "assess": "fulfillment of FSRs by implemented tactics",
    "report": "full pipeline report",
}
STAGE_OF = {"hara": "hara", "goals": "goals", "fsrs": "fsrs", "conflicts": "conflicts", "assess": "assess", "report": "assess"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--model", action="append", default=[], metavar="PATH",
                        help="model file or directory of *.cs files (repeatable)")
    common.add_argument("--catalog", metavar="PATH",
                        help=f"tactic catalog (default: ${CATALOG_ENV} or the bundled catalog)")
    common.add_argument("--out", metavar="PATH", help="write the output here instead of standard output")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--fail-on", choices=("conflicts", "unfulfilled", "none"), default="unfulfilled")
    common.add_argument("--timestamps", action="store_true", help="record the generation time in the report")
    common.add_argument("--quiet", action="store_true", help="suppress warnings on standard error")

    parser = _Parser(prog="coop-safety", description="Functional safety assessment of cooperative driving architectures.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, help_text in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "report":
            p.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    return parser


def expand_inputs(paths: list[str]) -> list[Path]:
    files: list[Path] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            found = sorted(path.glob("*.cs"))
            if not found:
                raise InputError(f"{path}: directory holds no *.cs model files")
            files.extend(found)
        else:
            files.append(path)
    return files


def _section(doc: dict, command: str) -> dict:
    t = doc["traceability"]
    c = doc["counts"]
    if command == "hara":
        keys = ("functions", "hazards", "hazards_per_function", "draft_hazards", "events_raw", "events")
        return {"meta": doc["meta"], "counts": {k: c[k] for k in keys},
                "functions": t["functions"], "hazards": t["hazards"], "events": t["events"]}
    if command == "goals":
        return {"meta": doc["meta"], "counts": {"goals": c["goals"], "asil": c["asil_histogram"]["goals"]},
                "goals": t["goals"]}
    if command == "fsrs":
        return {"meta": doc["meta"], "counts": {"fsrs": c["fsrs"], "asil": c["asil_histogram"]["fsrs"],
                                                "fsrs_per_component": {k: v["total"] for k, v in c["fsrs_per_component"].items()}},
                "fsrs": t["fsrs"], "overlapping_fsrs": t["overlapping_fsrs"]}
    if command == "conflicts":
        return {"meta": doc["meta"], "conflicts": doc["conflicts"]}
    if command == "assess":
        return {"meta": doc["meta"], "counts": {"fulfilled": c["fulfilled"], "unfulfilled": c["unfulfilled"]},
                "verdicts": doc["verdicts"]}
    return doc


def _markdown_section(section: dict, command: str) -> str:
    lines = [f"# {command}", ""]
    rows: list[list] = []
    if command == "hara":
        lines.append(f"{len(section['hazards'])} hazards, {len(section['events'])} hazardous events.")
        lines.append("")
        header = ["Hazard", "Perspective", "Text"]
        rows = [[h["id"], h["perspective"], h["text"] + (" *(draft)*" if h["draft"] else "")] for h in section["hazards"]]
    elif command == "goals":
        header = ["Goal", "Perspective", "ASIL", "Events", "Text"]
        rows = [[g["id"], g["perspective"], g["asil"], len(g["events"]), g["text"] + (" *(draft)*" if g["draft"] else "")]
                for g in section["goals"]]
    elif command == "fsrs":
        header = ["FSR", "Component", "Perspective", "ASIL", "Source goals"]
        rows = [[f["id"], f["group"], f["perspective"], f["asil"], ", ".join(f["source_goals"])] for f in section["fsrs"]]
    elif command == "conflicts":
        c = section["conflicts"]
        lines.append(f"{len(c['pairs'])} conflicts; comparisons grouped {c['comparisons_grouped']}, naive {c['comparisons_naive']}.")
        lines.append("")
        header = ["FSR", "FSR", "Rule"]
        rows = [[p["first"], p["second"], p["rule"]] for p in c["pairs"]]
    else:
        header = ["FSR", "Status", "Applied tactics", "Reason"]
        rows = [[v["fsr"], v["status"], ", ".join(v["applied_tactics"]) or "-", v["reason"] or ""] for v in section["verdicts"]]
    if rows:
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "|".join(" --- " for _ in header) + "|")
        lines += ["| " + " | ".join(str(x).replace("|", "\\|") for x in row) + " |" for row in rows]
    else:
        lines.append("(none)")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _exit_code(doc: dict, fail_on: str) -> int:
    if fail_on == "none":
        return EXIT_OK
    if doc["conflicts"]["pairs"]:
        return EXIT_CONFLICTS
    if fail_on == "unfulfilled" and any(v["status"] == "unfulfilled" for v in doc["verdicts"]):
        return EXIT_UNFULFILLED
    return EXIT_OK


def _report_diags(diags, quiet: bool):
    for d in sort_diagnostics(diags):
        if d.is_error or not quiet:
            print(d.format(), file=sys.stderr)


def run(args: argparse.Namespace) -> int:
    if not args.model:
        raise UsageError("coop-safety: error: at least one --model is required")
    files = expand_inputs(args.model)

    if args.command == "validate":
        from coop_safety.dsl import parse_model

        catalog = load_catalog(resolve_catalog_path(args.catalog))
        _, diags = parse_model(files, catalog=catalog)
        _report_diags(diags, args.quiet)
        errors = sum(d.is_error for d in diags)
        summary = {"files": [str(f) for f in sorted(files)], "errors": errors, "warnings": len(diags) - errors}
        _emit(json.dumps(summary, indent=2, sort_keys=True) + "\n" if args.format == "json"
              else f"{errors} errors, {summary['warnings']} warnings\n", args.out)
        return EXIT_INPUT if errors else EXIT_OK

    report = run_pipeline(PipelineConfig(files, args.catalog, args.timestamps, STAGE_OF[args.command]))
    _report_diags(report.diagnostics, args.quiet)
    doc = report.to_dict()
    if args.command == "report":
        _emit(render(report, args.format), args.out)
        if getattr(args, "figures", None):
            from coop_safety.figures import write_figures

            for path in write_figures(doc, args.figures):
                print(f"wrote {path}", file=sys.stderr)
    else:
        section = _section(doc, args.command)
        text = (json.dumps(section, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
                if args.format == "json" else _markdown_section(section, args.command))
        _emit(text, args.out)

    if args.command in ("conflicts", "assess", "report"):
        return _exit_code(doc, args.fail_on)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        return run(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        _report_diags(exc.diagnostics, quiet=False)
        return EXIT_INPUT
    except OSError as exc:
        print(f"coop-safety: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
