from __future__ import annotations

import json
import shutil

import pytest

from coop_safety.cli import EXIT_CONFLICTS, EXIT_INPUT, EXIT_OK, EXIT_UNFULFILLED, EXIT_USAGE, main
from conftest import DIAG_DIR, FIXTURE_DIR, PKG_DATA

FIX = str(FIXTURE_DIR)

CONFLICTING = """
item car { kind vehicle; component sensor_if; }
function sense "sense the vehicle state" { perspective vehicular; guide_words no; }
mode driving vehicular;
situation road vehicular;
event_rating * * * S3 E4 C3;
merge_goal G1 "state shall be sensed" { hazards sense.no; }
tree for G1 { or { basic sensor_if report_fault; basic sensor_if go_silent; } }
fsr_annotation sensor_if report_fault {
    trigger actuation-sensor-failure; response emit-fault-message; requires plausibility-check;
}
fsr_annotation sensor_if go_silent {
    trigger actuation-sensor-failure; response suppress-all-messages; requires plausibility-check;
}
tech_component tc { realizes sensor_if; implements_tactic sanity_check; }
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_fixture(capsys):
    code, out, _ = run(capsys, "validate", "--model", FIX)
    assert code == EXIT_OK
    assert json.loads(out)["errors"] == 0


def test_report_exits_unfulfilled(capsys):
    code, out, _ = run(capsys, "report", "--model", FIX)
    assert code == EXIT_UNFULFILLED
    assert json.loads(out)["counts"]["fsrs"]["total"] == 31


def test_fail_on_none_and_conflicts(capsys):
    assert run(capsys, "report", "--model", FIX, "--fail-on", "none")[0] == EXIT_OK
    assert run(capsys, "report", "--model", FIX, "--fail-on", "conflicts")[0] == EXIT_OK


def test_conflicts_exit_code(tmp_path, capsys):
    path = tmp_path / "m.cs"
    path.write_text(CONFLICTING)
    code, out, _ = run(capsys, "conflicts", "--model", str(path))
    assert code == EXIT_CONFLICTS
    assert len(json.loads(out)["conflicts"]["pairs"]) == 1


def test_input_error_exit_code(capsys):
    code, _, err = run(capsys, "report", "--model", str(DIAG_DIR / "dup_id" / "model.cs"))
    assert code == EXIT_INPUT
    assert "DUP_ID" in err


def test_missing_file_is_input_error(tmp_path, capsys):
    assert run(capsys, "hara", "--model", str(tmp_path / "nope.cs"))[0] == EXIT_INPUT


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["report"], ["report", "--model", FIX, "--format", "xml"]])
def test_usage_errors(argv, capsys):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_empty_model_exit_zero(tmp_path, capsys):
    path = tmp_path / "empty.cs"
    path.write_text("# nothing\n")
    code, out, _ = run(capsys, "report", "--model", str(path), "--fail-on", "none")
    assert code == EXIT_OK
    assert json.loads(out)["counts"]["fsrs"]["total"] == 0


@pytest.mark.parametrize("command,key", [("hara", "hazards"), ("goals", "goals"), ("fsrs", "fsrs"),
                                         ("conflicts", "conflicts"), ("assess", "verdicts")])
def test_stage_commands(command, key, capsys):
    code, out, _ = run(capsys, command, "--model", FIX)
    assert key in json.loads(out)
    code, out, _ = run(capsys, command, "--model", FIX, "--format", "markdown")
    assert out.startswith(f"# {command}")


def test_hara_section_counts(capsys):
    _, out, _ = run(capsys, "hara", "--model", FIX)
    counts = json.loads(out)["counts"]
    assert counts["hazards"]["total"] == 57 and counts["events"]["total"] == 340


def test_markdown_report_to_file_with_figures(tmp_path, capsys):
    out_file = tmp_path / "report.md"
    figs = tmp_path / "figs"
    code, _, err = run(capsys, "report", "--model", FIX, "--format", "markdown", "--out", str(out_file),
                       "--figures", str(figs))
    assert code == EXIT_UNFULFILLED
    assert "vehicle_control | 9" in out_file.read_text()
    assert (figs / "fsrs_per_component.png").exists() and (figs / "asil_distribution.png").exists()


def _broken_catalog(tmp_path):
    path = tmp_path / "broken.catalog"
    path.write_text("tactic {\n")
    return path


def test_catalog_from_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("COOP_SAFETY_CATALOG", str(_broken_catalog(tmp_path)))
    assert run(capsys, "report", "--model", FIX)[0] == EXIT_INPUT


def test_catalog_flag_beats_environment(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("COOP_SAFETY_CATALOG", str(_broken_catalog(tmp_path)))
    good = tmp_path / "good.catalog"
    shutil.copy(PKG_DATA / "default.catalog", good)
    code, out, _ = run(capsys, "report", "--model", FIX, "--catalog", str(good))
    assert code == EXIT_UNFULFILLED
    assert json.loads(out)["meta"]["catalog"]["path"] == str(good)


def test_quiet_suppresses_warnings(tmp_path, capsys):
    path = tmp_path / "m.cs"
    path.write_text(CONFLICTING + "fsr_annotation sensor_if unused { trigger t; response r; requires x; }\n")
    _, _, err = run(capsys, "validate", "--model", str(path))
    assert "UNUSED_ANNOTATION" in err
    _, _, err = run(capsys, "validate", "--model", str(path), "--quiet")
    assert "UNUSED_ANNOTATION" not in err
