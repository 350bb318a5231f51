from __future__ import annotations

from collections import Counter

import pytest

from coop_safety.hara import (
    HaraError,
    derive_goals,
    enumerate_events,
    generate_hazards,
    raw_triples,
    resolve_rating,
)
from coop_safety.model import (
    Asil,
    FeasibilityPolicy,
    GuideWord,
    Hazard,
    HazardousEvent,
    MergeGroup,
    OperationalMode,
    OperationalSituation,
    Perspective,
    Rating,
    SystemFunction,
)
from reference import HAZARDS_PER_FUNCTION

V = Perspective.VEHICULAR



def fixture_hazards(model):
    return generate_hazards(model.functions, model.applicability(), model.authored_texts())


def test_fixture_hazard_totals(fixture_model):
    hazards = fixture_hazards(fixture_model)
    per = Counter(h.perspective for h in hazards)
    assert len(hazards) == 57
    assert per[Perspective.VEHICULAR] == 31
    assert per[Perspective.COOPERATIVE] == 26


def test_fixture_per_function_counts(fixture_model):
    per_fn = Counter(h.function for h in fixture_hazards(fixture_model))
    for fid, n in HAZARDS_PER_FUNCTION.items():
        assert per_fn[fid] == n, fid


def test_fixture_make_place_function_has_six_hazards(fixture_model):
    per_fn = Counter(h.function for h in fixture_hazards(fixture_model))
    make_place = [f for f in fixture_model.functions if "make place" in f.description.lower()]
    assert len(make_place) == 1
    assert per_fn[make_place[0].id] == 6


def test_authored_less_hazard_text(fixture_model):
    by_id = {h.id: h for h in fixture_hazards(fixture_model)}
    hz = by_id["keep_inter_vehicle_distance.less"]
    assert hz.text == "keeping less than sufficiently safe inter-vehicular distance"
    assert not hz.draft


def test_template_hazard_text_is_draft():
    fn = SystemFunction("f", "hold the lane", V, "base", (GuideWord.MORE,))
    (hz,) = generate_hazards([fn], {"f": [GuideWord.MORE]})
    assert hz.draft and "hold the lane" in hz.text


def test_empty_applicability_gives_no_hazards():
    fn = SystemFunction("f", "hold the lane", V)
    assert generate_hazards([fn], {"f": []}) == []


def test_unknown_function_in_applicability():
    with pytest.raises(HaraError):
        generate_hazards([], {"ghost": [GuideWord.NO]})


def _one(default_feasible=True, exceptions=frozenset()):
    hz = Hazard("f.no", "f", GuideWord.NO, "no f", V)
    modes = [OperationalMode("m", "m", V)]
    sits = [OperationalSituation("s", "s", V)]
    policy = FeasibilityPolicy(V, default_feasible, exceptions)
    return hz, modes, sits, policy


def test_infeasible_default_without_exceptions_gives_no_events():
    hz, modes, sits, policy = _one(default_feasible=False)
    assert enumerate_events([hz], modes, sits, policy, []) == []


def test_singleton_product_gives_one_event():
    hz, modes, sits, policy = _one()
    events = enumerate_events([hz], modes, sits, policy, [Rating(None, None, None, 3, 4, 3)])
    assert len(events) == 1 and events[0].asil is Asil.D


def test_missing_rating_raises():
    hz, modes, sits, policy = _one()
    with pytest.raises(HaraError) as exc:
        enumerate_events([hz], modes, sits, policy, [])
    assert exc.value.diagnostics[0].code == "MISSING_RATING"


def test_most_specific_rating_wins_and_ties_are_ambiguous():
    general = Rating(None, None, None, 1, 1, 1)
    specific = Rating("h", None, "s", 3, 3, 3)
    assert resolve_rating(("h", "m", "s"), [general, specific]) is specific
    with pytest.raises(ValueError):
        resolve_rating(("h", "m", "s"), [Rating("h", None, None, 1, 1, 1), Rating(None, "m", None, 2, 2, 2)])
    # the same values from two equally specific patterns are not ambiguous
    assert resolve_rating(("h", "m", "s"), [Rating("h", None, None, 1, 1, 1), Rating(None, "m", None, 1, 1, 1)])


def test_fixture_event_counts(fixture_model):
    hazards = fixture_hazards(fixture_model)
    raw = Counter(h.perspective for h, _, _ in raw_triples(hazards, fixture_model.modes, fixture_model.situations))
    assert raw[Perspective.VEHICULAR] == 372 and raw[Perspective.COOPERATIVE] == 364
    policies = {p: fixture_model.policy(p) for p in Perspective}
    events = enumerate_events(hazards, fixture_model.modes, fixture_model.situations, policies, fixture_model.ratings)
    per = Counter(e.perspective for e in events)
    assert per[Perspective.VEHICULAR] == 140 and per[Perspective.COOPERATIVE] == 200


def test_fixture_goals(fixture_model, catalog):
    from coop_safety.report import analyze

    goals = analyze(fixture_model, catalog, "goals").goals
    per = Counter(g.perspective for g in goals)
    assert len(goals) == 25 and per[Perspective.VEHICULAR] == 14 and per[Perspective.COOPERATIVE] == 11
    assert sum(g.asil is Asil.D for g in goals) == 7
    distance = [g for g in goals if g.text.startswith(
        "sufficiently safe inter-vehicular distance shall be kept regardless of the operational mode or operational situation")]
    assert len(distance) == 1 and len(distance[0].events) == 56


def _event(hid, mode, s, e, c, persp=V):
    hz = Hazard(hid, hid.split(".")[0], GuideWord.NO, hid, persp)
    return HazardousEvent(hz, mode, "road", s, e, c)


def test_single_unmerged_event_becomes_asil_d_goal():
    (goal,) = derive_goals([_event("f.no", "m", 3, 4, 3)])
    assert goal.asil is Asil.D and goal.draft and len(goal.events) == 1


def test_merged_goal_takes_max_asil():
    events = [_event("f.no", "a", 3, 4, 3), _event("f.no", "b", 1, 1, 1), _event("g.no", "a", 2, 2, 2)]
    goals = derive_goals(events, [MergeGroup("G", "f never lost", hazards=("f.no",))])
    by_id = {g.id: g for g in goals}
    assert by_id["G"].asil is Asil.D and len(by_id["G"].events) == 2
    assert len(goals) == 2


def test_overlapping_merge_groups_are_rejected():
    events = [_event("f.no", "a", 1, 1, 1)]
    groups = [MergeGroup("A", "x", hazards=("f.no",)), MergeGroup("B", "y", functions=("f",))]
    with pytest.raises(HaraError) as exc:
        derive_goals(events, groups)
    assert [d.code for d in exc.value.diagnostics] == ["EVENT_IN_TWO_GOALS"]


def test_empty_merge_group_is_rejected():
    with pytest.raises(HaraError) as exc:
        derive_goals([_event("f.no", "a", 1, 1, 1)], [MergeGroup("A", "x", hazards=("nothing.no",))])
    assert exc.value.diagnostics[0].code == "EMPTY_GOAL"
