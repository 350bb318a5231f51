from __future__ import annotations

import json
from pathlib import Path

from coop_safety.dsl import build_model, parse_fault_trees, parse_model, parse_model_text
from coop_safety.model import And, Basic, GuideWord, Or, Perspective
from coop_safety.syntax import parse_text
from conftest import DIAG_DIR, FIXTURE_FILES

ARCH = """
item car "Test vehicle" {
    kind vehicle;
    component vehicle_control "Vehicle control";
    component v2v "V2V";
}
"""

GOALS = """
function brake "brake the vehicle" { perspective vehicular; guide_words no; }
mode driving vehicular;
situation road vehicular;
event_rating * * * S3 E4 C3;
merge_goal G1 "Braking shall not be lost" { hazards brake.no; }
"""


def codes(diags, severity="error"):
    return [d.code for d in diags if d.severity.value == severity]


def span_text(source: str, span) -> str:
    line = source.splitlines()[span.line - 1]
    return line[span.column - 1: span.column - 1 + span.length]


def test_minimal_model_is_valid():
    model, diags = parse_model_text('function "x" { perspective vehicular }\n' + ARCH)
    assert codes(diags) == []
    assert [f.id for f in model.functions] == ["x"]
    assert model.functions[0].perspective is Perspective.VEHICULAR


def test_empty_model_is_valid():
    model, diags = parse_model_text("")
    assert diags == [] and model.functions == ()


def test_fixture_parses_to_15_functions(fixture_model):
    persp = [f.perspective for f in fixture_model.functions]
    assert len(persp) == 15
    assert persp.count(Perspective.COOPERATIVE) == 6
    assert persp.count(Perspective.VEHICULAR) == 9


def test_fixture_validates_cleanly(catalog):
    _, diags = parse_model(FIXTURE_FILES, catalog=catalog)
    assert diags == []


def test_duplicate_component_reported_at_second_span():
    text = ARCH.replace('component v2v "V2V";', 'component v2v "V2V";\n    component vehicle_control "again";')
    _, diags = parse_model_text(text, "m.cs")
    dups = [d for d in diags if d.code == "DUP_ID"]
    assert len(dups) == 1
    assert dups[0].span.line == 6 and dups[0].span.column == 15
    assert span_text(text, dups[0].span) == "vehicle_control"


def test_file_order_does_not_change_first_declaration(tmp_path):
    a = tmp_path / "a.cs"
    b = tmp_path / "b.cs"
    a.write_text(ARCH, encoding="utf-8")
    b.write_text('item other { kind vehicle; component vehicle_control; }\n', encoding="utf-8")
    m1, d1 = parse_model([a, b])
    m2, d2 = parse_model([b, a])
    assert m1 == m2 and d1 == d2
    dup = [d for d in d1 if d.code == "DUP_ID"][0]
    assert dup.span.file == str(b)


def test_tree_example_builds_two_leaf_or(tmp_path):
    path = tmp_path / "t.cs"
    path.write_text("tree for G1 { or { basic vehicle_control loss_of_output; basic v2v corrupt_message } }\n",
                    encoding="utf-8")
    trees, diags = parse_fault_trees([path])
    assert diags == []
    assert len(trees) == 1
    assert trees[0].goal == "G1"
    assert trees[0].root == Or((Basic("vehicle_control", "loss_of_output"), Basic("v2v", "corrupt_message")))


def test_tree_for_unknown_goal(tmp_path):
    model, diags = parse_model_text(ARCH + GOALS)
    assert codes(diags) == []
    path = tmp_path / "t.cs"
    source = "tree for G99 { basic vehicle_control loss_of_output; }\n"
    path.write_text(source, encoding="utf-8")
    _, diags = parse_fault_trees([path], model)
    bad = [d for d in diags if d.code == "UNKNOWN_GOAL"]
    assert len(bad) == 1 and span_text(source, bad[0].span) == "G99"


def test_self_include_is_a_cycle():
    source = ARCH + "tree loop { or { basic vehicle_control x; include loop; } }\n"
    _, diags = parse_model_text(source, "m.cs")
    cyc = [d for d in diags if d.code == "CYCLE"]
    assert len(cyc) == 1 and span_text(source, cyc[0].span) == "loop"


def test_include_inlines_named_subtree():
    source = ARCH + GOALS + """
tree common { or { basic vehicle_control a; basic v2v b; } }
tree for G1 { and { basic vehicle_control c; include common; } }
"""
    model, _ = parse_model_text(source)
    tree = [t for t in model.trees if t.goal == "G1"][0]
    assert tree.root == And((Basic("vehicle_control", "c"), Or((Basic("vehicle_control", "a"), Basic("v2v", "b")))))


def test_empty_gate():
    _, diags = parse_model_text(ARCH + GOALS + "tree for G1 { or { } }\n")
    assert "EMPTY_GATE" in codes(diags)


def test_missing_rating_span_points_at_feasible_statement():
    source = ARCH + """
function brake "brake" { perspective vehicular; guide_words no more; }
mode driving vehicular;
situation road vehicular;
feasibility_default infeasible;
feasible brake.more driving road;
"""
    _, diags = parse_model_text(source, "m.cs")
    miss = [d for d in diags if d.code == "MISSING_RATING"]
    assert len(miss) == 1
    assert source.splitlines()[miss[0].span.line - 1].startswith("feasible brake.more")


def test_unknown_keyword_and_catalog_statement():
    _, diags = parse_model_text("widget x;\ntactic t \"T\" { provides a; }\n")
    assert codes(diags) == ["UNKNOWN_KEYWORD", "UNEXPECTED_BLOCK"]


def test_bad_rating_value():
    _, diags = parse_model_text(ARCH + GOALS.replace("S3 E4 C3", "S4 E4 C3"), "m.cs")
    assert "BAD_RATING" in codes(diags)


def test_anonymous_merge_goals_numbered_in_source_order():
    source = ARCH + """
function brake "brake" { perspective vehicular; guide_words no more; }
mode driving vehicular;
situation road vehicular;
event_rating * * * S1 E1 C1;
merge_goal "second text" { hazards brake.more; }
merge_goal "first text" { hazards brake.no; }
"""
    model, _ = parse_model_text(source)
    assert [(g.id, g.text) for g in model.merge_groups] == [("MG1", "second text"), ("MG2", "first text")]


def test_feasibility_exception_scoped_to_its_perspective():
    source = ARCH + """
item team { kind cooperative; component lead_ctrl { ref vehicle_control; } }
function brake "brake" { perspective vehicular; guide_words no; }
function gap "keep the gap" { perspective cooperative; guide_words no; }
mode driving vehicular;
mode cruising cooperative;
situation road vehicular;
situation road cooperative;
feasibility_default infeasible;
feasible brake.no * *;
"""
    model, diags = parse_model_text(source)
    assert model.policy(Perspective.VEHICULAR).exceptions == frozenset({("brake.no", None, None)})
    assert model.policy(Perspective.COOPERATIVE).exceptions == frozenset()


def test_redundant_feasibility_is_warning():
    _, diags = parse_model_text(ARCH + GOALS + "feasible brake.no driving road;\n")
    assert "REDUNDANT_FEASIBILITY" in codes(diags, "warning")
    assert codes(diags) == []


def test_authored_hazard_text_must_be_applicable():
    source = ARCH + GOALS + 'hazard brake more "braking too hard";\n'
    _, diags = parse_model_text(source)
    assert "HAZARD_NOT_APPLICABLE" in codes(diags)


def test_guide_word_identifiers():
    model, _ = parse_model_text('function f "do it" { perspective vehicular; guide_words as_well_as part_of other_than; }' + ARCH)
    assert model.functions[0].guide_words == (GuideWord.AS_WELL_AS, GuideWord.PART_OF, GuideWord.OTHER_THAN)


def test_requires_lines_form_alternatives():
    source = ARCH + GOALS + """
tree for G1 { basic vehicle_control loss_of_output; }
fsr_annotation vehicle_control loss_of_output {
    trigger control-failure;
    response emit-fault-message;
    requires plausibility-check runtime-monitoring;
    requires failure-masking;
}
"""
    model, diags = parse_model_text(source)
    assert codes(diags) == []
    assert model.annotations[0].requirement == frozenset(
        {frozenset({"plausibility-check", "runtime-monitoring"}), frozenset({"failure-masking"})}
    )


def test_build_is_statement_order_independent():
    stmts = parse_text(ARCH + GOALS + "tree for G1 { basic vehicle_control x; }\n", "m.cs")
    m1, d1 = build_model(stmts)
    m2, d2 = build_model(list(reversed(stmts)))
    assert m1 == m2 and d1 == d2


def test_diagnostic_fixtures_have_designated_codes():
    for case in sorted(p for p in DIAG_DIR.iterdir() if p.is_dir()):
        expected = json.loads((case / "expected.json").read_text())
        path = case / "model.cs"
        _, diags = parse_model([path])
        hits = [d for d in diags if d.code == expected["code"] and d.span is not None]
        assert hits, case.name
        spans = {(Path(d.span.file).name, d.span.line, d.span.column, d.span.length) for d in hits}
        assert (expected["file"], expected["line"], expected["column"], expected["length"]) in spans, case.name


def test_readme_example_is_a_valid_model(catalog):
    readme = (Path(__file__).resolve().parents[1] / "README.md").read_text(encoding="utf-8")
    block = readme.split("```text\n", 1)[1].split("```", 1)[0]
    model, diags = parse_model_text(block, "README.md", catalog)
    assert diags == []
    assert [t.goal for t in model.trees] == ["G1"]
