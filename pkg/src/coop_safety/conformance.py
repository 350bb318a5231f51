"""FSR conflict detection and fulfillment assessment against implemented tactics."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from coop_safety.catalog import Catalog, SafetyTactic
from coop_safety.diagnostics import Diagnostic, warning
from coop_safety.model import Fsr, TechnicalComponent, canonical_alternatives


class Status(str, Enum):
    FULFILLED = "fulfilled"
    UNFULFILLED = "unfulfilled"


@dataclass(frozen=True)
class Conflict:
    first: str
    second: str
    rule: str


@dataclass(frozen=True)
class ConflictReport:
    pairs: tuple[Conflict, ...]
    comparisons_grouped: int
    comparisons_naive: int
    groups: tuple[tuple[str, int], ...] = ()

    def to_dict(self) -> dict:
        return {
            "pairs": [{"first": c.first, "second": c.second, "rule": c.rule} for c in self.pairs],
            "comparisons_grouped": self.comparisons_grouped,
            "comparisons_naive": self.comparisons_naive,
            "groups": [{"component": g, "fsrs": n} for g, n in self.groups],
        }


def _group(fsr: Fsr) -> str:
    return fsr.group or fsr.component


def _exclusive_pairs(exclusivity) -> frozenset[frozenset[str]]:
    if isinstance(exclusivity, Catalog):
        return exclusivity.exclusive
    return frozenset(frozenset(p) for p in exclusivity)


def conflict_rule(a: Fsr, b: Fsr, exclusive: frozenset[frozenset[str]]) -> str | None:
    """Why two FSRs conflict, or ``None``. Symmetric and irreflexive."""
    if a.id == b.id:
        return None
    if b.id in a.conflicts_with or a.id in b.conflicts_with:
        return "conflicts_with"
    if a.trigger == b.trigger and frozenset((a.response_class, b.response_class)) in exclusive:
        first, second = sorted((a.response_class, b.response_class))
        return f"exclusive:{first}/{second}"
    return None


def detect_conflicts(fsrs: Iterable[Fsr], exclusivity) -> ConflictReport:
    """Pairwise check within each functional-component group only."""
    fsrs = sorted(fsrs, key=lambda f: f.id)
    exclusive = _exclusive_pairs(exclusivity)
    groups: dict[str, list[Fsr]] = defaultdict(list)
    for f in fsrs:
        groups[_group(f)].append(f)

    pairs = []
    grouped = 0
    for name in sorted(groups):
        members = groups[name]
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                grouped += 1
                rule = conflict_rule(a, b, exclusive)
                if rule:
                    pairs.append(Conflict(a.id, b.id, rule))
    n = len(fsrs)
    return ConflictReport(
        pairs=tuple(pairs),
        comparisons_grouped=grouped,
        comparisons_naive=n * (n - 1) // 2,
        groups=tuple((g, len(groups[g])) for g in sorted(groups)),
    )


def applicable_tactics(fsr: Fsr, catalog: Catalog) -> list[SafetyTactic]:
    atoms = fsr.atoms
    return [t for t in catalog.tactics if t.provides & atoms]


def unsatisfiable_atoms(fsr: Fsr, catalog: Catalog) -> list[str]:
    return sorted(fsr.atoms - catalog.capabilities)


@dataclass(frozen=True)
class AssessmentVerdict:
    fsr: str
    status: Status
    applicable_tactics: tuple[str, ...]
    satisfied_alternative: tuple[str, ...] | None
    implemented_tactics_considered: tuple[str, ...]
    available_capabilities: tuple[str, ...]
    applied_tactics: tuple[str, ...] = ()
    recommended_patterns: tuple[tuple[str, int], ...] = ()
    realized_by: tuple[str, ...] = ()
    reason: str | None = None
    warnings: tuple[Diagnostic, ...] = field(default=(), compare=False)

    @property
    def fulfilled(self) -> bool:
        return self.status is Status.FULFILLED

    def to_dict(self) -> dict:
        return {
            "fsr": self.fsr,
            "status": self.status.value,
            "applicable_tactics": list(self.applicable_tactics),
            "satisfied_alternative": list(self.satisfied_alternative) if self.satisfied_alternative is not None else None,
            "implemented_tactics_considered": list(self.implemented_tactics_considered),
            "available_capabilities": list(self.available_capabilities),
            "applied_tactics": list(self.applied_tactics),
            "recommended_patterns": [{"pattern": p, "covers_missing": s} for p, s in self.recommended_patterns],
            "realized_by": list(self.realized_by),
            "reason": self.reason,
            "warnings": [w.to_dict() for w in self.warnings],
        }


def _considered(roots: list[TechnicalComponent], index: dict[str, TechnicalComponent]) -> list[TechnicalComponent]:
    """Realizing components plus everything reachable through linked mechanisms."""
    out, stack, seen = [], list(roots), set()
    while stack:
        tc = stack.pop()
        if tc.id in seen:
            continue
        seen.add(tc.id)
        out.append(tc)
        stack.extend(index[l] for l in tc.linked if l in index)
    return sorted(out, key=lambda t: t.id)


def assess_one(fsr: Fsr, technical: list[TechnicalComponent], catalog: Catalog, index=None) -> AssessmentVerdict:
    index = index if index is not None else {t.id: t for t in technical}
    applicable = tuple(t.id for t in applicable_tactics(fsr, catalog))
    warnings = tuple(
        warning("UNSATISFIABLE_ATOM", f"no catalog tactic provides {atom!r}", entity=fsr.id)
        for atom in unsatisfiable_atoms(fsr, catalog)
    )
    targets = {fsr.component, _group(fsr)}
    realizing = [t for t in technical if t.realizes in targets]
    considered = _considered(realizing, index)
    tactic_ids = sorted({tid for tc in considered for tid in tc.tactic_ids})
    available = catalog.provides(tactic_ids)

    satisfied = None
    for alt in canonical_alternatives(fsr.requirement):
        if set(alt) <= available:
            satisfied = alt
            break

    reason = None
    if not realizing:
        reason = "NO_REALIZATION"
    if satisfied is not None:
        applied = tuple(
            tid for tid in tactic_ids
            if tid in catalog.tactic_index and catalog.tactic_index[tid].provides & set(satisfied)
        )
        return AssessmentVerdict(
            fsr=fsr.id,
            status=Status.FULFILLED,
            applicable_tactics=applicable,
            satisfied_alternative=satisfied,
            implemented_tactics_considered=tuple(tactic_ids),
            available_capabilities=tuple(sorted(available)),
            applied_tactics=applied,
            realized_by=tuple(t.id for t in realizing),
            warnings=warnings,
        )

    missing = fsr.atoms - available
    applicable_set = set(applicable)
    ranked = []
    for pattern in catalog.patterns:
        if pattern.tactics & applicable_set:
            ranked.append((pattern.id, len(catalog.provides(pattern.tactics) & missing)))
    ranked.sort(key=lambda p: (-p[1], p[0]))
    return AssessmentVerdict(
        fsr=fsr.id,
        status=Status.UNFULFILLED,
        applicable_tactics=applicable,
        satisfied_alternative=None,
        implemented_tactics_considered=tuple(tactic_ids),
        available_capabilities=tuple(sorted(available)),
        recommended_patterns=tuple(ranked),
        realized_by=tuple(t.id for t in realizing),
        reason=reason or "NO_ALTERNATIVE_SATISFIED",
        warnings=warnings,
    )


def assess(fsrs: Iterable[Fsr], technical_architecture: Iterable[TechnicalComponent], catalog: Catalog) -> list[AssessmentVerdict]:
    """Verdict per FSR, ordered by FSR id.

    An FSR is fulfilled when one alternative of its requirement is covered by
    the capabilities of the tactics implemented in the technical components
    realizing its functional component, including their linked mechanisms.
    """
    technical = sorted(technical_architecture, key=lambda t: t.id)
    index = {t.id: t for t in technical}
    return [assess_one(f, technical, catalog, index) for f in sorted(fsrs, key=lambda f: f.id)]
