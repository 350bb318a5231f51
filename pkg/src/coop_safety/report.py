"""End-to-end pipeline orchestration and report rendering (JSON / Markdown)."""

from __future__ import annotations

import hashlib
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Sequence

from coop_safety import __version__
from coop_safety.catalog import Catalog, load_catalog, resolve_catalog_path
from coop_safety.conformance import AssessmentVerdict, ConflictReport, assess, detect_conflicts
from coop_safety.diagnostics import Diagnostic, InputError
from coop_safety.fta import derive_fsrs, overlapping_fsrs
from coop_safety.hara import derive_goals, enumerate_events, generate_hazards, raw_triples
from coop_safety.model import Asil, Fsr, Hazard, HazardousEvent, Model, Perspective, SafetyGoal, canonical_alternatives

SCHEMA_VERSION = "1.0"
FORMATS = ("json", "markdown")
STAGES = ("hara", "goals", "fsrs", "conflicts", "assess")
PERSPECTIVES = tuple(p.value for p in Perspective)


@dataclass(frozen=True)
class Analysis:
    """Everything derived from one model; later stages are empty when not run."""

    model: Model
    catalog: Catalog
    hazards: tuple[Hazard, ...]
    raw_events: dict[str, int]
    events: tuple[HazardousEvent, ...]
    goals: tuple[SafetyGoal, ...] = ()
    fsrs: tuple[Fsr, ...] = ()
    conflicts: ConflictReport | None = None
    verdicts: tuple[AssessmentVerdict, ...] = ()
    overlaps: tuple[tuple[str, str], ...] = ()
    stage: str = "assess"


def analyze(model: Model, catalog: Catalog, until: str = "assess") -> Analysis:
    """Run the pipeline on a validated model up to and including ``until``.

    Raises :class:`InputError` (or a subclass) when a stage's precondition
    is violated, e.g. a goal without fault tree.
    """
    if until not in STAGES:
        raise ValueError(f"unknown stage {until!r}")
    order = STAGES.index(until)
    policies = {p: model.policy(p) for p in Perspective}
    hazards = generate_hazards(model.functions, model.applicability(), model.authored_texts())
    raw = Counter(h.perspective.value for h, _, _ in raw_triples(hazards, model.modes, model.situations))
    events = enumerate_events(hazards, model.modes, model.situations, policies, model.ratings)
    base = dict(hazards=tuple(hazards), raw_events={p: raw.get(p, 0) for p in PERSPECTIVES}, events=tuple(events))
    if order < STAGES.index("goals"):
        return Analysis(model, catalog, stage=until, **base)
    goals = derive_goals(events, model.merge_groups)
    if order < STAGES.index("fsrs"):
        return Analysis(model, catalog, goals=tuple(goals), stage=until, **base)
    fsrs = derive_fsrs(goals, model.trees, model.annotations, base_of=model.base_component)
    overlaps = tuple(overlapping_fsrs(fsrs))
    if order < STAGES.index("conflicts"):
        return Analysis(model, catalog, goals=tuple(goals), fsrs=tuple(fsrs), overlaps=overlaps, stage=until, **base)
    conflicts = detect_conflicts(fsrs, catalog)
    verdicts = assess(fsrs, model.tech_components, catalog) if order >= STAGES.index("assess") else []
    return Analysis(
        model,
        catalog,
        goals=tuple(goals),
        fsrs=tuple(fsrs),
        conflicts=conflicts,
        verdicts=tuple(verdicts),
        overlaps=overlaps,
        stage=until,
        **base,
    )


@dataclass(frozen=True)
class AssessmentReport:
    meta: dict
    counts: dict
    conflicts: dict
    verdicts: list
    traceability: dict
    analysis: Analysis | None = field(default=None, compare=False, repr=False)
    diagnostics: tuple[Diagnostic, ...] = field(default=(), compare=False, repr=False)

    def to_dict(self) -> dict:
        return {
            "meta": self.meta,
            "counts": self.counts,
            "conflicts": self.conflicts,
            "verdicts": self.verdicts,
            "traceability": self.traceability,
        }

    @property
    def has_conflicts(self) -> bool:
        return bool(self.conflicts.get("pairs"))

    @property
    def has_unfulfilled(self) -> bool:
        return any(v["status"] == "unfulfilled" for v in self.verdicts)


@dataclass(frozen=True)
class PipelineConfig:
    model_paths: Sequence[str | os.PathLike]
    catalog_path: str | os.PathLike | None = None
    timestamps: bool = False
    until: str = "assess"


# -- building the report --------------------------------------------------------------


def _fsr_dict(f: Fsr) -> dict:
    return {
        "id": f.id,
        "text": f.text,
        "draft": f.draft,
        "components": list(f.components),
        "group": f.group,
        "failure_mode": f.failure_mode,
        "perspective": f.perspective.value,
        "asil": str(f.asil),
        "source_goals": list(f.source_goals),
        "trigger": f.trigger,
        "response_class": f.response_class,
        "requirement": [list(alt) for alt in canonical_alternatives(f.requirement)],
    }


def _verdict_dict(v: AssessmentVerdict, fsr: Fsr, model: Model, catalog: Catalog) -> dict:
    out = {"perspective": fsr.perspective.value, "group": fsr.group, **v.to_dict()}
    evidence = []
    applied = set(v.applied_tactics)
    for tc in model.tech_components:
        for t in tc.tactics:
            if t.tactic in applied and t.tactic in v.implemented_tactics_considered:
                evidence.append({"tactic": t.tactic, "component": tc.id, "evidence": t.evidence})
    reachable = _reachable(v.realized_by, model)
    out["evidence"] = [e for e in evidence if e["component"] in reachable]
    out["recommended_patterns"] = [
        {**p, "name": catalog.pattern_index[p["pattern"]].name} for p in out["recommended_patterns"]
    ]
    return out


def _reachable(roots, model: Model) -> set[str]:
    seen, stack = set(), list(roots)
    while stack:
        tid = stack.pop()
        if tid in seen or tid not in model.tech_index:
            continue
        seen.add(tid)
        stack.extend(model.tech_index[tid].linked)
    return seen


def build_report(analysis: Analysis, meta: dict | None = None) -> AssessmentReport:
    a = analysis
    m = a.model
    fsr_index = {f.id: f for f in a.fsrs}
    goal_of_event = {e.id: g.id for g in a.goals for e in g.events}
    verdicts = [_verdict_dict(v, fsr_index[v.fsr], m, a.catalog) for v in a.verdicts]
    status_of = {v["fsr"]: v["status"] for v in verdicts}

    traceability = {
        "functions": [
            {
                "id": f.id,
                "description": f.description,
                "perspective": f.perspective.value,
                "scenario": f.scenario,
                "guide_words": [g.value for g in f.guide_words],
            }
            for f in m.functions
        ],
        "modes": [{"id": x.id, "perspective": x.perspective.value} for x in m.modes],
        "situations": [{"id": x.id, "perspective": x.perspective.value} for x in m.situations],
        "hazards": [
            {
                "id": h.id,
                "function": h.function,
                "guide_word": h.guide_word.value,
                "text": h.text,
                "perspective": h.perspective.value,
                "draft": h.draft,
            }
            for h in a.hazards
        ],
        "events": [
            {
                "id": e.id,
                "hazard": e.hazard.id,
                "mode": e.mode,
                "situation": e.situation,
                "perspective": e.perspective.value,
                "severity": e.severity,
                "exposure": e.exposure,
                "controllability": e.controllability,
                "asil": str(e.asil),
                "goal": goal_of_event.get(e.id),
            }
            for e in a.events
        ],
        "goals": [
            {
                "id": g.id,
                "text": g.text,
                "draft": g.draft,
                "perspective": g.perspective.value,
                "asil": str(g.asil),
                "events": [e.id for e in g.events],
            }
            for g in a.goals
        ],
        "fsrs": [_fsr_dict(f) for f in a.fsrs],
        "overlapping_fsrs": [list(p) for p in a.overlaps],
        "chains": _chains(a, status_of, verdicts),
    }

    conflicts = a.conflicts.to_dict() if a.conflicts is not None else {
        "pairs": [], "comparisons_grouped": 0, "comparisons_naive": 0, "groups": []
    }
    report = AssessmentReport(
        meta=meta or {},
        counts={},
        conflicts=conflicts,
        verdicts=verdicts,
        traceability=traceability,
        analysis=a,
    )
    counts = recompute_counts(report.to_dict())
    counts["stage"] = a.stage
    return AssessmentReport(report.meta, counts, conflicts, verdicts, traceability, a)


def _chains(a: Analysis, status_of: dict, verdicts: list) -> list[dict]:
    """One chain per (FSR, source goal): scenario -> function -> hazard -> event -> goal -> FSR -> tactics -> status."""
    goal_index = {g.id: g for g in a.goals}
    func_index = a.model.function_index
    applied = {v["fsr"]: v["applied_tactics"] for v in verdicts}
    out = []
    for f in a.fsrs:
        for gid in f.source_goals:
            g = goal_index[gid]
            hazards = sorted({e.hazard.id for e in g.events})
            functions = sorted({e.hazard.function for e in g.events})
            out.append(
                {
                    "scenarios": sorted({func_index[fn].scenario for fn in functions if fn in func_index}),
                    "functions": functions,
                    "hazards": hazards,
                    "events": [e.id for e in g.events],
                    "goal": gid,
                    "fsr": f.id,
                    "component": f.components[0] if len(f.components) == 1 else None,
                    "tactics": list(applied.get(f.id, [])),
                    "status": status_of.get(f.id),
                }
            )
    return out


def recompute_counts(doc: dict) -> dict:
    """Summary counts derived purely from the detail sections of a report dict."""
    t = doc["traceability"]

    def per(items, key="perspective"):
        c = Counter(x[key] for x in items)
        out = {p: c.get(p, 0) for p in PERSPECTIVES}
        out["total"] = sum(out.values())
        return out

    def hist(items):
        c = Counter(x["asil"] for x in items)
        return {a.name: c.get(a.name, 0) for a in Asil}

    modes = Counter(x["perspective"] for x in t["modes"])
    sits = Counter(x["perspective"] for x in t["situations"])
    hz = Counter(x["perspective"] for x in t["hazards"])
    raw = {p: hz.get(p, 0) * modes.get(p, 0) * sits.get(p, 0) for p in PERSPECTIVES}
    raw["total"] = sum(raw.values())

    per_function = Counter(h["function"] for h in t["hazards"])
    fsrs = t["fsrs"]
    by_group: dict[str, dict] = {}
    status = {v["fsr"]: v["status"] for v in doc["verdicts"]}
    for f in fsrs:
        row = by_group.setdefault(f["group"], {"total": 0, **{
            f"{p}_{s}": 0 for p in PERSPECTIVES for s in ("fulfilled", "unfulfilled", "unassessed")
        }})
        row["total"] += 1
        row[f"{f['perspective']}_{status.get(f['id'], 'unassessed')}"] += 1

    verdict_persp = {f["id"]: f["perspective"] for f in fsrs}
    fulfilled = per([{"perspective": verdict_persp[v["fsr"]]} for v in doc["verdicts"] if v["status"] == "fulfilled"])
    unfulfilled = per([{"perspective": verdict_persp[v["fsr"]]} for v in doc["verdicts"] if v["status"] == "unfulfilled"])
    conflicts = doc["conflicts"]
    n = len(fsrs)
    group_sizes = Counter(f["group"] for f in fsrs)
    return {
        "functions": per(t["functions"]),
        "hazards": per(t["hazards"]),
        "hazards_per_function": dict(sorted(per_function.items())),
        "draft_hazards": sum(h["draft"] for h in t["hazards"]),
        "events_raw": raw,
        "events": per(t["events"]),
        "goals": per(t["goals"]),
        "draft_goals": sum(g["draft"] for g in t["goals"]),
        "fsrs": per(fsrs),
        "draft_fsrs": sum(f["draft"] for f in fsrs),
        "asil_histogram": {
            "events": hist(t["events"]),
            "goals": hist(t["goals"]),
            "fsrs": hist(fsrs),
            "goals_by_perspective": {p: hist([g for g in t["goals"] if g["perspective"] == p]) for p in PERSPECTIVES},
            "fsrs_by_perspective": {p: hist([f for f in fsrs if f["perspective"] == p]) for p in PERSPECTIVES},
        },
        "fsrs_per_component": dict(sorted(by_group.items())),
        "component_groups": len(by_group),
        "fulfilled": fulfilled,
        "unfulfilled": unfulfilled,
        "conflicts": len(conflicts["pairs"]),
        "comparisons_grouped": sum(k * (k - 1) // 2 for k in group_sizes.values()),
        "comparisons_naive": n * (n - 1) // 2,
    }


# -- entry points -------------------------------------------------------------------------


def _digest(path) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def run_model(model: Model, catalog: Catalog, meta: dict | None = None, until: str = "assess") -> AssessmentReport:
    """Analyse an already validated model and build its report."""
    meta = dict(meta or {})
    meta.setdefault("tool", "coop-safety")
    meta.setdefault("version", __version__)
    meta.setdefault("schema_version", SCHEMA_VERSION)
    meta.setdefault("inputs", [])
    meta.setdefault("catalog", {"path": catalog.source, "tactics": len(catalog.tactics), "patterns": len(catalog.patterns)})
    return build_report(analyze(model, catalog, until), meta)


def run_pipeline(config: PipelineConfig) -> AssessmentReport:
    """Parse, validate and analyse; raises :class:`InputError` on any error diagnostic."""
    from coop_safety.dsl import parse_model

    catalog_path = resolve_catalog_path(config.catalog_path)
    catalog = load_catalog(catalog_path)
    model, diags = parse_model(config.model_paths, catalog=catalog)
    errors = [d for d in diags if d.is_error]
    if errors:
        raise InputError(errors)
    paths = sorted({os.fspath(p) for p in config.model_paths})
    meta = {
        "tool": "coop-safety",
        "version": __version__,
        "schema_version": SCHEMA_VERSION,
        "inputs": [{"path": p, "sha256": _digest(p)} for p in paths],
        "catalog": {
            "path": os.fspath(catalog_path),
            "sha256": _digest(catalog_path),
            "tactics": len(catalog.tactics),
            "patterns": len(catalog.patterns),
        },
    }
    if config.timestamps:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    report = run_model(model, catalog, meta, config.until)
    return AssessmentReport(report.meta, report.counts, report.conflicts, report.verdicts, report.traceability,
                            report.analysis, tuple(d for d in diags if not d.is_error))


# -- rendering -----------------------------------------------------------------------------


def render(report: AssessmentReport | dict, fmt: str = "json") -> str:
    doc = report.to_dict() if isinstance(report, AssessmentReport) else report
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "markdown":
        return render_markdown(doc)
    raise ValueError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")


def _table(header: list[str], rows: list[list]) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "|".join(" --- " for _ in header) + "|"]
    out += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return out


def _draft(text: str, draft: bool) -> str:
    text = text.replace("|", "\\|")
    return f"{text} *(draft)*" if draft else text


def render_markdown(doc: dict) -> str:
    c = doc["counts"]
    t = doc["traceability"]
    lines = ["# Functional safety assessment", ""]
    meta = doc.get("meta", {})
    if meta.get("version"):
        lines.append(f"Generated by coop-safety {meta['version']}.")
    for inp in meta.get("inputs", []):
        lines.append(f"- input `{inp['path']}` sha256 `{inp['sha256'][:12]}`")
    lines.append("")

    lines += ["## Summary", ""]
    rows = []
    for label, key in (
        ("Functions", "functions"),
        ("Hazards", "hazards"),
        ("Hazardous events (raw)", "events_raw"),
        ("Hazardous events (feasible)", "events"),
        ("Safety goals", "goals"),
        ("FSRs", "fsrs"),
        ("Fulfilled FSRs", "fulfilled"),
        ("Unfulfilled FSRs", "unfulfilled"),
    ):
        rows.append([label] + [c[key][p] for p in PERSPECTIVES] + [c[key]["total"]])
    lines += _table(["Metric", "Vehicular", "Cooperative", "Total"], rows)
    lines += [
        "",
        f"Conflicts: {c['conflicts']} (comparisons grouped by component: {c['comparisons_grouped']}, "
        f"naive: {c['comparisons_naive']}).",
        "",
        "## ASIL distribution",
        "",
    ]
    hist = c["asil_histogram"]
    lines += _table(
        ["Level", "Events", "Goals", "FSRs"],
        [[a.name, hist["events"][a.name], hist["goals"][a.name], hist["fsrs"][a.name]] for a in Asil],
    )
    lines.append("")

    lines += ["## Safety goals", ""]
    if t["goals"]:
        lines += _table(
            ["Goal", "Perspective", "ASIL", "Events", "Text"],
            [[g["id"], g["perspective"], g["asil"], len(g["events"]), _draft(g["text"], g["draft"])] for g in t["goals"]],
        )
    else:
        lines.append("No safety goals derived.")
    lines.append("")

    fsrs = t["fsrs"]
    if not fsrs:
        lines += ["## FSRs", "", "No FSRs derived.", ""]
        return "\n".join(lines)

    lines += ["## FSRs per functional component", ""]
    rows = []
    for comp, r in c["fsrs_per_component"].items():
        rows.append([comp, r["total"]] + [r[f"{p}_{s}"] for p in PERSPECTIVES for s in ("fulfilled", "unfulfilled")])
    lines += _table(
        ["Component", "FSRs", "Vehicular fulfilled", "Vehicular unfulfilled", "Cooperative fulfilled", "Cooperative unfulfilled"],
        rows,
    )
    lines.append("")

    lines += ["## Conflicts", ""]
    pairs = doc["conflicts"]["pairs"]
    if pairs:
        lines += _table(["FSR", "FSR", "Rule"], [[p["first"], p["second"], p["rule"]] for p in pairs])
    else:
        lines.append(f"No conflicts in {len(doc['conflicts']['groups'])} component groups.")
    lines.append("")

    fsr_index = {f["id"]: f for f in fsrs}
    verdicts = doc["verdicts"]
    fulfilled = [v for v in verdicts if v["status"] == "fulfilled"]
    lines += ["## Fulfilled FSRs", ""]
    if fulfilled:
        rows = []
        for v in fulfilled:
            f = fsr_index[v["fsr"]]
            impl = "; ".join(f"{e['component']}: {e['tactic']}" + (f" ({e['evidence']})" if e["evidence"] else "") for e in v["evidence"])
            rows.append([f["id"], f["asil"], f["perspective"], _draft(f["text"], f["draft"]), ", ".join(v["applied_tactics"]), impl])
        lines += _table(["FSR", "ASIL", "Perspective", "Requirement", "Applied tactics", "Implementation"], rows)
    elif verdicts:
        lines.append("No FSR is fulfilled.")
    else:
        lines.append("Fulfillment not assessed.")
    lines.append("")

    unfulfilled = [v for v in verdicts if v["status"] == "unfulfilled"]
    if unfulfilled:
        lines += ["## Unfulfilled FSRs", ""]
        rows = []
        for v in unfulfilled:
            f = fsr_index[v["fsr"]]
            patterns = ", ".join(p["name"] for p in v["recommended_patterns"][:3]) or "-"
            rows.append([f["id"], f["asil"], f["perspective"], v["reason"], ", ".join(v["applicable_tactics"]) or "-", patterns])
        lines += _table(["FSR", "ASIL", "Perspective", "Reason", "Applicable tactics", "Recommended patterns"], rows)
        lines.append("")

    lines += ["## FSR texts", ""]
    lines += _table(
        ["FSR", "Component", "Source goals", "Text"],
        [[f["id"], f["group"], ", ".join(f["source_goals"]), _draft(f["text"], f["draft"])] for f in fsrs],
    )
    if t["overlapping_fsrs"]:
        lines += ["", "Overlapping FSRs across perspectives: " + "; ".join(" / ".join(p) for p in t["overlapping_fsrs"])]
    lines.append("")
    return "\n".join(lines)
