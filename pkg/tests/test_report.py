from __future__ import annotations

import json
import shutil
from pathlib import Path

import jsonschema
import pytest

from coop_safety.catalog import load_catalog
from coop_safety.dsl import parse_model_text
from coop_safety.report import PipelineConfig, recompute_counts, render, run_model, run_pipeline
from conftest import FIXTURE_DIR, FIXTURE_FILES, PKG_DATA
from reference import COUNTS, as_dict

SCHEMA = json.loads((PKG_DATA.parent / "schema" / "report.schema.json").read_text())


def copy_fixture(tmp_path: Path) -> Path:
    dest = tmp_path / "platooning"
    shutil.copytree(FIXTURE_DIR, dest)
    return dest


def test_fixture_counts(fixture_doc):
    counts = fixture_doc["counts"]
    for key, value in COUNTS.items():
        assert counts[key] == as_dict(value), key
    assert counts["conflicts"] == 0
    assert counts["comparisons_grouped"] == 60 and counts["comparisons_naive"] == 465
    assert counts["component_groups"] == 8


def test_counts_are_recomputable(fixture_doc):
    expected = {k: v for k, v in fixture_doc["counts"].items() if k != "stage"}
    assert recompute_counts(fixture_doc) == expected


def test_json_validates_against_schema(fixture_report):
    jsonschema.validate(json.loads(render(fixture_report, "json")), SCHEMA)


def test_json_is_byte_identical_across_runs(fixture_report):
    again = run_pipeline(PipelineConfig(list(reversed(FIXTURE_FILES))))
    assert render(again, "json") == render(fixture_report, "json")


def test_no_timestamp_unless_requested(fixture_doc):
    assert "generated_at" not in fixture_doc["meta"]
    stamped = run_pipeline(PipelineConfig(FIXTURE_FILES, timestamps=True)).to_dict()
    assert "generated_at" in stamped["meta"]


def test_meta_records_input_digests(fixture_doc):
    inputs = fixture_doc["meta"]["inputs"]
    assert len(inputs) == len(FIXTURE_FILES)
    assert all(len(i["sha256"]) == 64 for i in inputs)
    assert fixture_doc["meta"]["catalog"]["tactics"] == 13


def test_markdown_has_vehicle_control_row(fixture_report):
    md = render(fixture_report, "markdown")
    assert "| vehicle_control | 9 |" in md
    assert "vehicle_control | 9" in md


def test_markdown_lists_fulfilled_fsrs_with_evidence(fixture_report):
    md = render(fixture_report, "markdown")
    assert "CRC on every sensor message" in md
    assert "*(draft)*" in md


def test_markdown_without_fsrs(catalog):
    model, _ = parse_model_text("")
    md = render(run_model(model, catalog), "markdown")
    assert "No FSRs derived." in md
    lines = md.splitlines()
    # every table has at least one data row below its separator
    for i, line in enumerate(lines):
        if line.startswith("|") and set(line.replace("|", "").split()) == {"---"}:
            assert i + 1 < len(lines) and lines[i + 1].startswith("|")


def test_empty_model_has_zero_counts(catalog):
    model, _ = parse_model_text("")
    counts = run_model(model, catalog).counts
    for key in ("hazards", "events", "goals", "fsrs", "fulfilled", "unfulfilled"):
        assert counts[key]["total"] == 0
    assert counts["conflicts"] == 0


def test_unknown_format_rejected(fixture_report):
    with pytest.raises(ValueError):
        render(fixture_report, "xml")


def test_removing_a_tactic_drops_fulfilled_to_five(tmp_path):
    model_dir = copy_fixture(tmp_path)
    tech = model_dir / "technical.cs"
    text = tech.read_text()
    line = '    implements_tactic heartbeat "validity time per sensor message";\n'
    assert line in text
    tech.write_text(text.replace(line, ""))
    doc = run_pipeline(PipelineConfig(sorted(model_dir.glob("*.cs")))).to_dict()
    assert doc["counts"]["fulfilled"]["total"] == 5
    assert "follower_env_perception.incorrect_distance_info" not in {
        v["fsr"] for v in doc["verdicts"] if v["status"] == "fulfilled"}


def test_traceability_chain_per_fsr_goal(fixture_doc):
    chains = fixture_doc["traceability"]["chains"]
    fsrs = fixture_doc["traceability"]["fsrs"]
    assert len(chains) == sum(len(f["source_goals"]) for f in fsrs)
    for chain in chains:
        assert chain["events"] and chain["hazards"] and chain["functions"] and chain["component"]


def test_catalog_override_changes_results(tmp_path):
    text = (PKG_DATA / "default.catalog").read_text()
    text = text.replace("provides liveness-monitoring;", "provides liveness-signal;")
    path = tmp_path / "edited.catalog"
    path.write_text(text)
    assert load_catalog(path).tactic_index["heartbeat"].provides == frozenset({"liveness-signal"})
    doc = run_pipeline(PipelineConfig(FIXTURE_FILES, catalog_path=path)).to_dict()
    assert doc["counts"]["fulfilled"]["total"] < 6


def test_figures_are_written(fixture_doc, tmp_path):
    from coop_safety.figures import write_figures

    paths = write_figures(fixture_doc, tmp_path / "figs")
    assert [p.name for p in paths] == ["fsrs_per_component.png", "asil_distribution.png"]
    for p in paths:
        assert p.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
