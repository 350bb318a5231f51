"""Hazard analysis and risk assessment.

functions -> hazards (guide words) -> hazardous events (feasible
hazard x mode x situation triples with S/E/C) -> merged, ASIL-rated goals.
Vehicular and cooperative inputs never interact here; every function works
per perspective and returns canonically ordered results.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from coop_safety.diagnostics import InputError, error
from coop_safety.model import (
    FeasibilityPolicy,
    GuideWord,
    Hazard,
    HazardousEvent,
    MergeGroup,
    OperationalMode,
    OperationalSituation,
    Perspective,
    Rating,
    SafetyGoal,
    SystemFunction,
    Triple,
    hazard_id,
    max_asil,
)


class HaraError(InputError):
    pass


def template_hazard_text(function: SystemFunction, guide_word: GuideWord) -> str:
    return f"{guide_word.phrase} {function.description}"


def generate_hazards(
    functions: Iterable[SystemFunction],
    applicability: Mapping[str, Iterable[GuideWord]],
    authored_texts: Mapping[tuple[str, GuideWord], str] | None = None,
) -> list[Hazard]:
    """One hazard per applicable (function, guide word) pair.

    Text comes from ``authored_texts`` when present; otherwise it is
    templated and the hazard is marked as a draft.
    """
    authored_texts = authored_texts or {}
    by_id = {f.id: f for f in functions}
    unknown = sorted(set(applicability) - by_id.keys())
    if unknown:
        raise HaraError([error("UNKNOWN_FUNCTION", f"applicability names unknown function {f!r}", entity=f) for f in unknown])

    hazards = []
    for fid in sorted(by_id):
        function = by_id[fid]
        for gw in sorted(set(applicability.get(fid, ())), key=lambda g: g.rank):
            text = authored_texts.get((fid, gw))
            hazards.append(
                Hazard(
                    id=hazard_id(fid, gw),
                    function=fid,
                    guide_word=gw,
                    text=text if text else template_hazard_text(function, gw),
                    perspective=function.perspective,
                    draft=not text,
                )
            )
    return hazards


def _policy_for(policy, perspective: Perspective) -> FeasibilityPolicy:
    if isinstance(policy, FeasibilityPolicy):
        return policy
    return policy.get(perspective) or FeasibilityPolicy(perspective)


def raw_triples(
    hazards: Iterable[Hazard],
    modes: Iterable[OperationalMode],
    situations: Iterable[OperationalSituation],
) -> list[tuple[Hazard, str, str]]:
    """Every hazard x mode x situation combination within one perspective."""
    modes_by = defaultdict(list)
    for m in modes:
        modes_by[m.perspective].append(m.id)
    sits_by = defaultdict(list)
    for s in situations:
        sits_by[s.perspective].append(s.id)
    out = []
    for h in sorted(hazards, key=_hazard_key):
        for m in sorted(modes_by[h.perspective]):
            for s in sorted(sits_by[h.perspective]):
                out.append((h, m, s))
    return out


def feasible_triples(hazards, modes, situations, policy) -> list[tuple[Hazard, str, str]]:
    return [
        (h, m, s)
        for h, m, s in raw_triples(hazards, modes, situations)
        if _policy_for(policy, h.perspective).is_feasible((h.id, m, s))
    ]


def resolve_rating(triple: Triple, ratings: Sequence[Rating]) -> Rating | None:
    """Most specific matching rating; raises ``ValueError`` on an ambiguous tie."""
    best: list[Rating] = []
    for r in ratings:
        if not r.matches(triple):
            continue
        if not best or r.specificity > best[0].specificity:
            best = [r]
        elif r.specificity == best[0].specificity:
            best.append(r)
    values = {(r.severity, r.exposure, r.controllability) for r in best}
    if len(values) > 1:
        raise ValueError(f"ambiguous ratings for {'/'.join(triple)}: {sorted(values)}")
    return best[0] if best else None


def enumerate_events(
    hazards: Iterable[Hazard],
    modes: Iterable[OperationalMode],
    situations: Iterable[OperationalSituation],
    policy: FeasibilityPolicy | Mapping[Perspective, FeasibilityPolicy],
    ratings: Sequence[Rating],
) -> list[HazardousEvent]:
    events = []
    problems = []
    for h, m, s in feasible_triples(hazards, modes, situations, policy):
        triple = (h.id, m, s)
        try:
            rating = resolve_rating(triple, ratings)
        except ValueError as exc:
            problems.append(error("AMBIGUOUS_RATING", str(exc), entity=h.id))
            continue
        if rating is None:
            problems.append(error("MISSING_RATING", f"no S/E/C rating for feasible event {h.id} / {m} / {s}", entity=h.id))
            continue
        events.append(HazardousEvent(h, m, s, rating.severity, rating.exposure, rating.controllability))
    if problems:
        raise HaraError(problems)
    return events


def _hazard_key(h: Hazard):
    return (h.perspective.value, h.function, h.guide_word.rank)


def _event_key(e: HazardousEvent):
    return (*_hazard_key(e.hazard), e.mode, e.situation)


def template_goal_text(event: HazardousEvent) -> str:
    return f"{event.hazard.text} shall be avoided during {event.mode} on {event.situation}"


def derive_goals(events: Iterable[HazardousEvent], merge_map: Iterable[MergeGroup] = ()) -> list[SafetyGoal]:
    """Partition events into safety goals.

    Every merge group becomes one goal; events no group selects become
    singleton goals with templated (draft) text. Goal ASIL is the maximum
    event ASIL over its members.
    """
    events = sorted(events, key=_event_key)
    owner: dict[str, str] = {}
    members: dict[str, list[HazardousEvent]] = {}
    groups = sorted(merge_map, key=lambda g: g.id)
    problems = []

    for group in groups:
        hazards = set(group.hazards)
        functions = set(group.functions)
        triples = set(group.events)
        chosen = [
            e for e in events
            if e.hazard.id in hazards or e.hazard.function in functions or e.triple in triples
        ]
        if not chosen:
            problems.append(error("EMPTY_GOAL", f"merge group {group.id!r} selects no hazardous event", entity=group.id))
            continue
        perspectives = {e.perspective for e in chosen}
        if len(perspectives) > 1:
            problems.append(error("MIXED_PERSPECTIVE", f"merge group {group.id!r} mixes perspectives", entity=group.id))
            continue
        for e in chosen:
            if e.id in owner:
                problems.append(
                    error("EVENT_IN_TWO_GOALS", f"event {e.id} selected by {owner[e.id]!r} and {group.id!r}", entity=group.id)
                )
            else:
                owner[e.id] = group.id
        members[group.id] = chosen
    if problems:
        raise HaraError(problems)

    goals = []
    for group in groups:
        chosen = members[group.id]
        goals.append(
            SafetyGoal(
                id=group.id,
                text=group.text,
                perspective=chosen[0].perspective,
                events=tuple(chosen),
                asil=max_asil(e.asil for e in chosen),
            )
        )
    for e in events:
        if e.id not in owner:
            goals.append(
                SafetyGoal(
                    id=f"SG.{e.id}",
                    text=template_goal_text(e),
                    perspective=e.perspective,
                    events=(e,),
                    asil=e.asil,
                    draft=True,
                )
            )
    return sorted(goals, key=lambda g: g.id)
