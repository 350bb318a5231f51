from __future__ import annotations

from dataclasses import replace

from coop_safety.conformance import (
    Status,
    applicable_tactics,
    assess,
    assess_one,
    conflict_rule,
    detect_conflicts,
)
from coop_safety.model import Asil, Fsr, ImplementedTactic, Perspective, TechnicalComponent
from coop_safety.report import analyze
from reference import FULFILLED_FSRS


def fsr(fid, component="sensor_if", trigger="actuation-sensor-failure", response="emit-fault-message",
        requirement=(("plausibility-check",),), group=""):
    return Fsr(
        id=fid,
        text=fid,
        components=(component,),
        perspective=Perspective.VEHICULAR,
        source_goals=("G",),
        asil=Asil.B,
        trigger=trigger,
        response_class=response,
        requirement=frozenset(frozenset(alt) for alt in requirement),
        group=group or component,
    )


def test_worked_example_conflict(catalog):
    a = fsr("FSR_01")
    b = fsr("FSR_02", response="suppress-all-messages")
    report = detect_conflicts([a, b], catalog)
    assert len(report.pairs) == 1
    assert (report.pairs[0].first, report.pairs[0].second) == ("FSR_01", "FSR_02")
    assert report.comparisons_grouped == 1 and report.comparisons_naive == 1


def test_different_components_are_never_compared(catalog):
    a = fsr("FSR_01")
    b = fsr("FSR_02", component="other", response="suppress-all-messages")
    report = detect_conflicts([a, b], catalog)
    assert report.pairs == () and report.comparisons_grouped == 0 and report.comparisons_naive == 1


def test_explicit_conflicts_with():
    a = replace(fsr("A"), conflicts_with=("B",))
    b = fsr("B", response="contain-failure")
    assert conflict_rule(a, b, frozenset()) == conflict_rule(b, a, frozenset()) == "conflicts_with"
    assert conflict_rule(a, a, frozenset()) is None


def test_different_triggers_do_not_conflict(catalog):
    a = fsr("A")
    b = fsr("B", trigger="perception-failure", response="suppress-all-messages")
    assert detect_conflicts([a, b], catalog).pairs == ()


def test_fixture_conflicts(fixture_model, catalog):
    report = analyze(fixture_model, catalog, "conflicts").conflicts
    assert report.pairs == ()
    assert report.comparisons_grouped == 60 and report.comparisons_naive == 465
    assert len(report.groups) == 8


def test_leader_acceleration_fsr_has_diverse_redundancy(fixture_model, catalog):
    fsrs = {f.id: f for f in analyze(fixture_model, catalog, "fsrs").fsrs}
    f = fsrs["leader_vehicle_control.incorrect_acceleration_broadcast"]
    assert {"failure-masking", "diverse-channel"} <= f.atoms
    assert "diverse_redundancy" in [t.id for t in applicable_tactics(f, catalog)]


def test_environment_perception_fsr_excludes_simplicity(fixture_model, catalog):
    fsrs = {f.id: f for f in analyze(fixture_model, catalog, "fsrs").fsrs}
    ids = [t.id for t in applicable_tactics(fsrs["follower_env_perception.incorrect_distance_info"], catalog)]
    assert "simplicity" not in ids and "sanity_check" in ids


def test_no_applicable_tactic_gives_warning(catalog):
    f = fsr("X", requirement=(("time-travel",),))
    assert applicable_tactics(f, catalog) == []
    verdict = assess_one(f, [], catalog)
    assert verdict.status is Status.UNFULFILLED
    assert [w.code for w in verdict.warnings] == ["UNSATISFIABLE_ATOM"]


def test_unimplemented_plausibility_check_recommends_sanity_check_pattern(catalog):
    f = fsr("X")
    tc = TechnicalComponent("tc", "sensor_if")
    (verdict,) = assess([f], [tc], catalog)
    assert verdict.status is Status.UNFULFILLED and verdict.reason == "NO_ALTERNATIVE_SATISFIED"
    patterns = [p for p, _ in verdict.recommended_patterns]
    assert "sanity_check" in patterns
    assert dict(verdict.recommended_patterns)["sanity_check"] == 1


def test_implemented_tactic_fulfills(catalog):
    f = fsr("X")
    tc = TechnicalComponent("tc", "sensor_if", (ImplementedTactic("sanity_check", "CRC"),))
    (verdict,) = assess([f], [tc], catalog)
    assert verdict.fulfilled
    assert verdict.satisfied_alternative == ("plausibility-check",)
    assert verdict.applied_tactics == ("sanity_check",)


def test_linked_mechanism_contributes(catalog):
    f = fsr("X", requirement=(("plausibility-check", "runtime-monitoring"),))
    tc = TechnicalComponent("tc", "sensor_if", (ImplementedTactic("sanity_check"),), linked=("wd",))
    wd = TechnicalComponent("wd", None, (ImplementedTactic("condition_monitoring"),), mechanism=True)
    assert not assess([f], [tc], catalog)[0].fulfilled
    verdict = assess([f], [tc, wd], catalog)[0]
    assert verdict.fulfilled and verdict.applied_tactics == ("condition_monitoring", "sanity_check")


def test_no_realizing_component(catalog):
    (verdict,) = assess([fsr("X")], [], catalog)
    assert verdict.reason == "NO_REALIZATION"


def test_any_alternative_suffices(catalog):
    f = fsr("X", requirement=(("failure-masking", "diverse-channel"), ("liveness-monitoring",)))
    tc = TechnicalComponent("tc", "sensor_if", (ImplementedTactic("heartbeat"),))
    assert assess([f], [tc], catalog)[0].satisfied_alternative == ("liveness-monitoring",)


def test_fixture_fulfillment_matches_reference(fixture_model, catalog):
    verdicts = analyze(fixture_model, catalog).verdicts
    fsrs = {f.id: f for f in analyze(fixture_model, catalog, "fsrs").fsrs}
    fulfilled = {v.fsr: v for v in verdicts if v.fulfilled}
    assert set(fulfilled) == set(FULFILLED_FSRS)
    for fid, (persp, tactics) in FULFILLED_FSRS.items():
        assert fsrs[fid].perspective.value == persp
        assert set(fulfilled[fid].applied_tactics) == tactics, fid
    unfulfilled = [fsrs[v.fsr].perspective for v in verdicts if not v.fulfilled]
    assert unfulfilled.count(Perspective.VEHICULAR) == 13 and unfulfilled.count(Perspective.COOPERATIVE) == 12
