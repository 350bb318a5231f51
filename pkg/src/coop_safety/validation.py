"""Structural and referential validation of a parsed model.

:func:`validate_model` never raises; it returns diagnostics, each carrying
the source span the loader recorded for the offending entity (when the
model came from files).
"""

from __future__ import annotations

from coop_safety.diagnostics import Diagnostic, error, sort_diagnostics, warning
from coop_safety.hara import HaraError, derive_goals, feasible_triples, generate_hazards, resolve_rating
from coop_safety.model import (
    HazardousEvent,
    ItemKind,
    Model,
    Perspective,
    SafetyGoal,
    event_id,
    iter_basics,
    max_asil,
)


class _Checker:
    def __init__(self, model: Model, spans=None):
        self.model = model
        self.spans = spans if spans is not None else model.spans
        self.out: list[Diagnostic] = []

    def at(self, kind: str, ident: str):
        return self.spans.get((kind, ident))

    def err(self, code, message, span_key=None, entity=None):
        span = self.at(*span_key) if span_key else None
        self.out.append(error(code, message, span, entity))

    def warn(self, code, message, span_key=None, entity=None):
        span = self.at(*span_key) if span_key else None
        self.out.append(warning(code, message, span, entity))


# -- architecture ---------------------------------------------------------------


def _check_architecture(c: _Checker):
    m = c.model
    coop_items = [i for i in m.items if i.kind is ItemKind.COOPERATIVE_SYSTEM]
    vehicle_items = [i for i in m.items if i.kind is ItemKind.VEHICLE_TYPE]
    for extra in coop_items[1:]:
        c.err("MULTIPLE_COOPERATIVE_ITEMS", f"only one cooperative item is allowed; {extra.id!r} is another", ("item", extra.id), extra.id)
    has_coop = any(f.perspective is Perspective.COOPERATIVE for f in m.functions)
    if has_coop and not coop_items:
        c.err("MISSING_ITEM", "cooperative functions are declared but there is no item of kind cooperative")
    if m.functions and not vehicle_items:
        c.err("MISSING_ITEM", "functions are declared but there is no item of kind vehicle")

    for comp in m.components:
        item = m.item_index.get(comp.item)
        if item is None:
            c.err("UNKNOWN_REF", f"component {comp.id!r} belongs to unknown item {comp.item!r}",
                  ("component.item", comp.id) if c.at("component.item", comp.id) else ("component", comp.id), comp.id)
            continue
        if item.kind is ItemKind.VEHICLE_TYPE:
            if comp.ref:
                c.err("BAD_VALUE", f"vehicle component {comp.id!r} cannot reference another component", ("component.ref", comp.id), comp.id)
            if comp.external:
                c.err("BAD_VALUE", f"only cooperative components may be external ({comp.id!r})", ("component", comp.id), comp.id)
            continue
        if comp.ref:
            target = m.component_index.get(comp.ref)
            target_item = m.item_index.get(target.item) if target else None
            if target is None:
                c.err("UNKNOWN_REF", f"cooperative component {comp.id!r} references unknown component {comp.ref!r}",
                      ("component.ref", comp.id), comp.id)
            elif target_item is None or target_item.kind is not ItemKind.VEHICLE_TYPE:
                c.err("COOP_COMPONENT_UNMAPPED",
                      f"cooperative component {comp.id!r} must reference a vehicle component, not {comp.ref!r}",
                      ("component.ref", comp.id), comp.id)
        elif not comp.external:
            c.err("COOP_COMPONENT_UNMAPPED",
                  f"cooperative component {comp.id!r} is neither mapped to a vehicle component (ref) nor declared external",
                  ("component", comp.id), comp.id)

    for flow in m.flows:
        key = f"{flow.item}:{flow.source}->{flow.target}"
        for end, pos in ((flow.source, "source"), (flow.target, "target")):
            comp = m.component_index.get(end)
            if comp is None:
                c.err("UNKNOWN_REF", f"flow endpoint {end!r} is not a component", (f"flow.{pos}", key), end)
            elif flow.item and comp.item != flow.item:
                c.err("SCOPE_VIOLATION", f"flow endpoint {end!r} is not in item {flow.item!r}", (f"flow.{pos}", key), end)


# -- hazard analysis ----------------------------------------------------------------


def _check_hara(c: _Checker) -> list[HazardousEvent]:
    """Checks functions, texts, feasibility and ratings; returns the events it could rate."""
    m = c.model
    for f in m.functions:
        if not f.description.strip():
            c.err("EMPTY_TEXT", f"function {f.id!r} has an empty description", ("function", f.id), f.id)

    for ht in m.hazard_texts:
        hid = f"{ht.function}.{ht.guide_word.value}"
        fn = m.function_index.get(ht.function)
        if fn is None:
            c.err("UNKNOWN_REF", f"hazard text for unknown function {ht.function!r}", ("hazard_text.function", hid), ht.function)
        elif ht.guide_word not in fn.guide_words:
            c.err("HAZARD_NOT_APPLICABLE",
                  f"guide word {ht.guide_word.value!r} is not applicable to function {ht.function!r}",
                  ("hazard_text", hid), hid)
        if not ht.text.strip():
            c.err("EMPTY_TEXT", f"hazard {hid} has empty text", ("hazard_text", hid), hid)

    hazards = generate_hazards(m.functions, m.applicability(), m.authored_texts())
    hazard_index = {h.id: h for h in hazards}
    mode_ids = {p: {x.id for x in m.modes_of(p)} for p in Perspective}
    sit_ids = {p: {x.id for x in m.situations_of(p)} for p in Perspective}

    def check_pattern(pattern, kind: str, key: str, what: str):
        h, mo, s = pattern
        perspectives = set(Perspective)
        if h is not None:
            hz = hazard_index.get(h)
            if hz is None:
                c.err("UNKNOWN_REF", f"{what} names unknown hazard {h!r}", (f"{kind}.hazard", key), h)
                return
            perspectives &= {hz.perspective}
        for part, ids, pos in ((mo, mode_ids, "mode"), (s, sit_ids, "situation")):
            if part is None:
                continue
            found = {p for p in Perspective if part in ids[p]}
            if not found:
                c.err("UNKNOWN_REF", f"{what} names unknown {pos} {part!r}", (f"{kind}.{pos}", key), part)
                return
            perspectives &= found
        if not perspectives:
            c.err("PERSPECTIVE_MISMATCH", f"{what} combines entities of different perspectives", (kind, key), key)

    for (kind, key) in sorted(k for k in c.spans if k[0] == "feasible"):
        pattern = tuple(None if p == "*" else p for p in key.split("|"))
        check_pattern(pattern, "feasible", key, "feasibility entry")
    for r in m.ratings:
        key = "|".join(p if p is not None else "*" for p in r.pattern)
        check_pattern(r.pattern, "rating", key, "event_rating")

    events = []
    policies = {p: m.policy(p) for p in Perspective}
    for h, mo, s in feasible_triples(hazards, m.modes, m.situations, policies):
        triple = (h.id, mo, s)
        try:
            rating = resolve_rating(triple, m.ratings)
        except ValueError as exc:
            c.err("AMBIGUOUS_RATING", str(exc), ("hazard_text", h.id) if c.at("hazard_text", h.id) else ("function", h.function),
                  event_id(*triple))
            rating = None
            values = (1, 1, 1)
        else:
            if rating is None:
                c.err("MISSING_RATING", f"no S/E/C rating for feasible hazardous event {event_id(*triple)}",
                      _missing_rating_span(c, h, triple, policies[h.perspective]), event_id(*triple))
                values = (1, 1, 1)
            else:
                values = (rating.severity, rating.exposure, rating.controllability)
        events.append(HazardousEvent(h, mo, s, *values))
    return events


def _missing_rating_span(c: _Checker, hazard, triple, policy):
    """Span of the statement that made a triple feasible, else of its function."""
    if not policy.default_feasible:
        for pattern in sorted(policy.exceptions, key=lambda p: tuple(x or "" for x in p)):
            if all(p is None or p == t for p, t in zip(pattern, triple)):
                key = "|".join(p if p is not None else "*" for p in pattern)
                if c.at("feasible", key):
                    return ("feasible", key)
    if c.at("hazard_text", hazard.id):
        return ("hazard_text", hazard.id)
    return ("function", hazard.function)


def _check_goals(c: _Checker, events: list[HazardousEvent]) -> list[SafetyGoal]:
    m = c.model
    hazard_ids = {e.hazard.id for e in events} | {
        f"{f.id}.{gw.value}" for f in m.functions for gw in f.guide_words
    }
    for group in m.merge_groups:
        for h in group.hazards:
            if h not in hazard_ids:
                c.err("UNKNOWN_REF", f"merge goal {group.id!r} names unknown hazard {h!r}", ("merge.hazard", f"{group.id}:{h}"), h)
        for f in group.functions:
            if f not in m.function_index:
                c.err("UNKNOWN_REF", f"merge goal {group.id!r} names unknown function {f!r}", ("merge.function", f"{group.id}:{f}"), f)
        known = {e.triple for e in events}
        for t in group.events:
            if t not in known:
                c.err("UNKNOWN_REF", f"merge goal {group.id!r} names {event_id(*t)}, which is not a feasible hazardous event",
                      ("merge.event", f"{group.id}:{event_id(*t)}"), event_id(*t))
        if not group.text.strip():
            c.err("EMPTY_TEXT", f"merge goal {group.id!r} has empty text", ("merge_goal", group.id), group.id)
    try:
        return derive_goals(events, m.merge_groups)
    except HaraError as exc:
        for d in exc.diagnostics:
            c.out.append(error(d.code, d.message, c.at("merge_goal", d.entity or ""), d.entity))
        return []


# -- fault trees, annotations, technical architecture ------------------------------------


def _tree_diagnostics(c: _Checker, trees, goals: list[SafetyGoal] | None):
    m = c.model
    goal_index = {g.id: g for g in goals} if goals is not None else None
    for tree in trees:
        goal = None
        if goal_index is not None:
            goal = goal_index.get(tree.goal)
            if goal is None:
                c.err("UNKNOWN_GOAL", f"fault tree {tree.name!r} is for unknown safety goal {tree.goal!r}",
                      ("tree.goal", tree.name), tree.goal)
        for b in sorted(set(iter_basics(tree.root))):
            key = ("basic", f"{tree.name}:{b.component}:{b.failure_mode}")
            comp = m.component_index.get(b.component)
            if comp is None:
                c.err("UNKNOWN_COMPONENT", f"basic event names unknown component {b.component!r}", key, b.component)
                continue
            if goal is not None and goal.perspective is Perspective.VEHICULAR:
                if m.perspective_of_component(b.component) is not Perspective.VEHICULAR:
                    c.err("SCOPE_VIOLATION",
                          f"vehicular goal {goal.id!r} may only reference vehicle components, not {b.component!r}",
                          key, b.component)


def check_trees(model: Model, trees, spans=None) -> list[Diagnostic]:
    """Check externally parsed trees against a model's goals and components."""
    c = _Checker(model, {**model.spans, **(spans or {})})
    events = _lenient_events(model)
    goals = _lenient_goals(model, events)
    _tree_diagnostics(c, trees, goals)
    return sort_diagnostics(c.out)


def _lenient_events(model: Model) -> list[HazardousEvent]:
    c = _Checker(model)
    return _check_hara(c)


def _lenient_goals(model: Model, events) -> list[SafetyGoal]:
    try:
        return derive_goals(events, model.merge_groups)
    except HaraError:
        return []


def _check_fta(c: _Checker, goals: list[SafetyGoal], goals_ok: bool, catalog):
    m = c.model
    _tree_diagnostics(c, m.trees, goals if goals_ok else None)
    if goals_ok:
        with_tree = {t.goal for t in m.trees}
        for g in goals:
            if g.id not in with_tree:
                c.warn("MISSING_TREE", f"safety goal {g.id!r} has no fault tree; FSR derivation will fail", ("merge_goal", g.id), g.id)

    notes = {a.key: a for a in m.annotations}
    used = set()
    for tree in m.trees:
        for b in sorted(set(iter_basics(tree.root))):
            used.add((b.component, b.failure_mode))
            if (b.component, b.failure_mode) not in notes and b.component in m.component_index:
                c.err("MISSING_ANNOTATION", f"basic event {b.component} {b.failure_mode} has no fsr_annotation",
                      ("basic", f"{tree.name}:{b.component}:{b.failure_mode}"), b.key)
    for a in m.annotations:
        key = f"{a.component}.{a.failure_mode}"
        if a.component not in m.component_index:
            c.err("UNKNOWN_COMPONENT", f"fsr_annotation names unknown component {a.component!r}", ("annotation.component", key), a.component)
        elif a.key not in used:
            c.warn("UNUSED_ANNOTATION", f"fsr_annotation {key} matches no basic event", ("annotation", key), key)
        if not a.requirement or any(not alt for alt in a.requirement):
            c.err("EMPTY_REQUIREMENT", f"requirement of {key} needs >=1 non-empty alternative", ("annotation", key), key)
        if catalog is not None:
            if catalog.triggers and a.trigger not in catalog.triggers:
                c.err("UNKNOWN_TRIGGER", f"trigger {a.trigger!r} of {key} is not in the catalog vocabulary", ("annotation", key), key)
            if catalog.responses and a.response not in catalog.responses:
                c.err("UNKNOWN_RESPONSE", f"response {a.response!r} of {key} is not in the catalog vocabulary", ("annotation", key), key)
            for atom in sorted(set().union(*a.requirement) - catalog.capabilities if a.requirement else ()):
                c.warn("UNSATISFIABLE_ATOM", f"no catalog tactic provides {atom!r} (required by {key})", ("annotation", key), key)


def _check_technical(c: _Checker, catalog):
    m = c.model
    for tc in m.tech_components:
        if tc.realizes is None:
            if not tc.mechanism:
                c.err("MISSING_FIELD", f"technical component {tc.id!r} must realize a functional component", ("tech_component", tc.id), tc.id)
        elif tc.realizes not in m.component_index:
            c.err("UNKNOWN_REF", f"technical component {tc.id!r} realizes unknown component {tc.realizes!r}",
                  ("tech.realizes", tc.id), tc.realizes)
        for link in tc.linked:
            if link not in m.tech_index:
                c.err("UNKNOWN_REF", f"technical component {tc.id!r} links unknown mechanism {link!r}",
                      ("tech.linked", f"{tc.id}:{link}"), link)
            elif link == tc.id:
                c.err("CYCLE", f"technical component {tc.id!r} links itself", ("tech.linked", f"{tc.id}:{link}"), link)
        if catalog is not None:
            for t in tc.tactics:
                if t.tactic not in catalog.tactic_index:
                    c.err("UNKNOWN_TACTIC", f"technical component {tc.id!r} implements unknown tactic {t.tactic!r}",
                          ("tech.tactic", f"{tc.id}:{t.tactic}"), t.tactic)


# -- derived results ------------------------------------------------------------------------


def _check_derived(c: _Checker, derived):
    events = list(getattr(derived, "events", ()) or ())
    goals = list(getattr(derived, "goals", ()) or ())
    fsrs = list(getattr(derived, "fsrs", ()) or ())

    seen: dict[str, str] = {}
    for g in goals:
        if not g.events:
            c.err("EMPTY_GOAL", f"safety goal {g.id!r} has no member events", entity=g.id)
            continue
        if g.asil != max_asil(e.asil for e in g.events):
            c.err("ASIL_MISMATCH", f"goal {g.id!r} ASIL {g.asil} is not the maximum of its events", entity=g.id)
        for e in g.events:
            if e.perspective is not g.perspective:
                c.err("PERSPECTIVE_MISMATCH", f"goal {g.id!r} holds event {e.id} of another perspective", entity=g.id)
            if e.id in seen:
                c.err("EVENT_IN_TWO_GOALS", f"event {e.id} belongs to goals {seen[e.id]!r} and {g.id!r}", entity=e.id)
            seen[e.id] = g.id
    if events and goals:
        for e in events:
            if e.id not in seen:
                c.err("UNCOVERED_EVENT", f"event {e.id} belongs to no safety goal", entity=e.id)

    goal_index = {g.id: g for g in goals}
    for f in fsrs:
        if len(f.components) != 1:
            c.err("FSR_ALLOCATION", f"FSR {f.id!r} allocated to {len(f.components)} components (must be exactly 1)", entity=f.id)
        for comp in f.components:
            if comp not in c.model.component_index:
                c.err("UNKNOWN_COMPONENT", f"FSR {f.id!r} is allocated to unknown component {comp!r}", entity=f.id)
        if not f.source_goals:
            c.err("MISSING_FIELD", f"FSR {f.id!r} has no source goal", entity=f.id)
            continue
        sources = [goal_index.get(g) for g in f.source_goals]
        if any(s is None for s in sources):
            if goal_index:
                c.err("UNKNOWN_GOAL", f"FSR {f.id!r} derives from an unknown goal", entity=f.id)
            continue
        if any(s.perspective is not f.perspective for s in sources):
            c.err("PERSPECTIVE_MISMATCH", f"FSR {f.id!r} perspective differs from one of its source goals", entity=f.id)
        if f.asil != max_asil(s.asil for s in sources):
            c.err("ASIL_MISMATCH", f"FSR {f.id!r} ASIL {f.asil} is not the maximum of its source goals", entity=f.id)
        if not f.requirement or any(not alt for alt in f.requirement):
            c.err("EMPTY_REQUIREMENT", f"FSR {f.id!r} needs >=1 non-empty requirement alternative", entity=f.id)


def validate_model(model: Model, derived=None, catalog=None) -> list[Diagnostic]:
    """All invariant violations of ``model`` (and of ``derived`` results, if given).

    ``derived`` is any object with ``events``, ``goals`` and ``fsrs``
    attributes, e.g. a :class:`coop_safety.report.Analysis`. With a
    ``catalog`` the controlled vocabularies and tactic references are checked
    as well.
    """
    c = _Checker(model)
    _check_architecture(c)
    events = _check_hara(c)
    n_before = sum(d.is_error for d in c.out)
    goals = _check_goals(c, events)
    goals_ok = sum(d.is_error for d in c.out) == n_before
    _check_fta(c, goals, goals_ok, catalog)
    _check_technical(c, catalog)
    if derived is not None:
        _check_derived(c, derived)
    return sort_diagnostics(_dedupe(c.out))


def _dedupe(diags: list[Diagnostic]) -> list[Diagnostic]:
    seen, out = set(), []
    for d in diags:
        key = (d.severity, d.code, d.message, d.span)
        if key not in seen:
            seen.add(key)
            out.append(d)
    return out

