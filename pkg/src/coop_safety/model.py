"""Domain types shared by every stage of the assessment pipeline.

All types are frozen dataclasses holding tuples, so a model (and anything
derived from it) can be shared freely once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, IntEnum
from functools import cached_property
from typing import Mapping, Optional, Union

from coop_safety.diagnostics import SourceSpan


class Perspective(str, Enum):
    VEHICULAR = "vehicular"
    COOPERATIVE = "cooperative"


class ItemKind(str, Enum):
    VEHICLE_TYPE = "vehicle"
    COOPERATIVE_SYSTEM = "cooperative"


class GuideWord(str, Enum):
    NO = "no"
    MORE = "more"
    LESS = "less"
    AS_WELL_AS = "as_well_as"
    PART_OF = "part_of"
    REVERSE = "reverse"
    OTHER_THAN = "other_than"

    @property
    def phrase(self) -> str:
        return _GUIDE_WORD_PHRASES[self]

    @property
    def rank(self) -> int:
        return _GUIDE_WORD_ORDER.index(self)


_GUIDE_WORD_ORDER = list(GuideWord)

_GUIDE_WORD_PHRASES = {
    GuideWord.NO: "no",
    GuideWord.MORE: "more",
    GuideWord.LESS: "less",
    GuideWord.AS_WELL_AS: "as well as",
    GuideWord.PART_OF: "part of",
    GuideWord.REVERSE: "reverse",
    GuideWord.OTHER_THAN: "other than",
}


class Asil(IntEnum):
    QM = 0
    A = 1
    B = 2
    C = 3
    D = 4

    def __str__(self) -> str:
        return self.name


def max_asil(ratings) -> Asil:
    ratings = list(ratings)
    if not ratings:
        raise ValueError("max_asil of an empty collection")
    return max(ratings)


Triple = tuple[str, str, str]
Pattern = tuple[Optional[str], Optional[str], Optional[str]]


def event_id(hazard: str, mode: str, situation: str) -> str:
    return f"{hazard}@{mode}@{situation}"


def hazard_id(function: str, guide_word: GuideWord) -> str:
    return f"{function}.{guide_word.value}"


# -- architecture -----------------------------------------------------------


@dataclass(frozen=True)
class Item:
    id: str
    kind: ItemKind
    name: str = ""


@dataclass(frozen=True)
class FunctionalComponent:
    id: str
    name: str
    item: str
    cls: str | None = None
    # id of the vehicle component a cooperative component stands for
    ref: str | None = None
    external: bool = False


@dataclass(frozen=True)
class Flow:
    source: str
    target: str
    item: str


@dataclass(frozen=True)
class FunctionalArchitecture:
    item: str
    components: tuple[FunctionalComponent, ...]
    flows: tuple[Flow, ...]


# -- hazard analysis ----------------------------------------------------------


@dataclass(frozen=True)
class SystemFunction:
    id: str
    description: str
    perspective: Perspective
    scenario: str = "base"
    guide_words: tuple[GuideWord, ...] = ()


@dataclass(frozen=True)
class HazardText:
    function: str
    guide_word: GuideWord
    text: str


@dataclass(frozen=True)
class Hazard:
    id: str
    function: str
    guide_word: GuideWord
    text: str
    perspective: Perspective
    draft: bool = False


@dataclass(frozen=True)
class OperationalMode:
    id: str
    name: str
    perspective: Perspective


@dataclass(frozen=True)
class OperationalSituation:
    id: str
    name: str
    perspective: Perspective


@dataclass(frozen=True)
class FeasibilityPolicy:
    """Default feasibility plus exception patterns; ``None`` in a pattern is a wildcard."""

    perspective: Perspective
    default_feasible: bool = True
    exceptions: frozenset[Pattern] = frozenset()

    def is_feasible(self, triple: Triple) -> bool:
        hit = any(_pattern_matches(p, triple) for p in self.exceptions)
        return self.default_feasible != hit


def _pattern_matches(pattern: Pattern, triple: Triple) -> bool:
    return all(p is None or p == t for p, t in zip(pattern, triple))


@dataclass(frozen=True)
class Rating:
    hazard: str | None
    mode: str | None
    situation: str | None
    severity: int
    exposure: int
    controllability: int

    @property
    def pattern(self) -> Pattern:
        return (self.hazard, self.mode, self.situation)

    @property
    def specificity(self) -> int:
        return sum(p is not None for p in self.pattern)

    def matches(self, triple: Triple) -> bool:
        return _pattern_matches(self.pattern, triple)


@dataclass(frozen=True)
class HazardousEvent:
    hazard: Hazard
    mode: str
    situation: str
    severity: int
    exposure: int
    controllability: int

    @property
    def id(self) -> str:
        return event_id(self.hazard.id, self.mode, self.situation)

    @property
    def perspective(self) -> Perspective:
        return self.hazard.perspective

    @property
    def triple(self) -> Triple:
        return (self.hazard.id, self.mode, self.situation)

    @property
    def asil(self) -> Asil:
        from coop_safety.catalog import determine_asil

        return determine_asil(self.severity, self.exposure, self.controllability)


@dataclass(frozen=True)
class MergeGroup:
    """Authored goal-merge entry selecting events by hazard, function or triple."""

    id: str
    text: str
    hazards: tuple[str, ...] = ()
    functions: tuple[str, ...] = ()
    events: tuple[Triple, ...] = ()


@dataclass(frozen=True)
class SafetyGoal:
    id: str
    text: str
    perspective: Perspective
    events: tuple[HazardousEvent, ...]
    asil: Asil
    draft: bool = False


# -- fault trees --------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Basic:
    component: str
    failure_mode: str

    @property
    def key(self) -> str:
        return f"{self.component}.{self.failure_mode}"


@dataclass(frozen=True)
class And:
    children: tuple["Gate", ...]


@dataclass(frozen=True)
class Or:
    children: tuple["Gate", ...]


Gate = Union[And, Or, Basic]


@dataclass(frozen=True)
class FaultTree:
    goal: str
    root: Gate
    name: str = ""

    def basics(self) -> frozenset[Basic]:
        return frozenset(iter_basics(self.root))


def iter_basics(gate: Gate):
    if isinstance(gate, Basic):
        yield gate
    else:
        for child in gate.children:
            yield from iter_basics(child)


# -- requirements ---------------------------------------------------------------

Requirement = frozenset[frozenset[str]]


def canonical_alternatives(requirement: Requirement) -> list[tuple[str, ...]]:
    return sorted((tuple(sorted(alt)) for alt in requirement), key=lambda a: (len(a), a))


@dataclass(frozen=True)
class FsrAnnotation:
    component: str
    failure_mode: str
    trigger: str
    response: str
    requirement: Requirement
    text: str | None = None
    conflicts_with: tuple[str, ...] = ()

    @property
    def key(self) -> tuple[str, str]:
        return (self.component, self.failure_mode)


@dataclass(frozen=True)
class Fsr:
    id: str
    text: str
    components: tuple[str, ...]
    perspective: Perspective
    source_goals: tuple[str, ...]
    asil: Asil
    trigger: str
    response_class: str
    requirement: Requirement
    failure_mode: str = ""
    # functional component the FSR is grouped under (vehicle component for cooperative ones)
    group: str = ""
    draft: bool = False
    conflicts_with: tuple[str, ...] = ()

    @property
    def component(self) -> str:
        if len(self.components) != 1:
            raise ValueError(f"FSR {self.id} is allocated to {len(self.components)} components")
        return self.components[0]

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset().union(*self.requirement) if self.requirement else frozenset()


# -- technical architecture ------------------------------------------------------


@dataclass(frozen=True)
class ImplementedTactic:
    tactic: str
    evidence: str = ""


@dataclass(frozen=True)
class TechnicalComponent:
    id: str
    realizes: str | None
    tactics: tuple[ImplementedTactic, ...] = ()
    linked: tuple[str, ...] = ()
    mechanism: bool = False
    name: str = ""

    @property
    def tactic_ids(self) -> frozenset[str]:
        return frozenset(t.tactic for t in self.tactics)


# -- the model ------------------------------------------------------------------


@dataclass(frozen=True)
class Model:
    items: tuple[Item, ...] = ()
    components: tuple[FunctionalComponent, ...] = ()
    flows: tuple[Flow, ...] = ()
    functions: tuple[SystemFunction, ...] = ()
    hazard_texts: tuple[HazardText, ...] = ()
    modes: tuple[OperationalMode, ...] = ()
    situations: tuple[OperationalSituation, ...] = ()
    feasibility: tuple[FeasibilityPolicy, ...] = ()
    ratings: tuple[Rating, ...] = ()
    merge_groups: tuple[MergeGroup, ...] = ()
    trees: tuple[FaultTree, ...] = ()
    tech_components: tuple[TechnicalComponent, ...] = ()
    annotations: tuple[FsrAnnotation, ...] = ()
    spans: Mapping[tuple[str, str], SourceSpan] = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def item_index(self) -> dict[str, Item]:
        return {i.id: i for i in self.items}

    @cached_property
    def component_index(self) -> dict[str, FunctionalComponent]:
        return {c.id: c for c in self.components}

    @cached_property
    def function_index(self) -> dict[str, SystemFunction]:
        return {f.id: f for f in self.functions}

    @cached_property
    def tech_index(self) -> dict[str, TechnicalComponent]:
        return {t.id: t for t in self.tech_components}

    def modes_of(self, perspective: Perspective) -> tuple[OperationalMode, ...]:
        return tuple(m for m in self.modes if m.perspective is perspective)

    def situations_of(self, perspective: Perspective) -> tuple[OperationalSituation, ...]:
        return tuple(s for s in self.situations if s.perspective is perspective)

    def policy(self, perspective: Perspective) -> FeasibilityPolicy:
        for p in self.feasibility:
            if p.perspective is perspective:
                return p
        return FeasibilityPolicy(perspective)

    def applicability(self) -> dict[str, frozenset[GuideWord]]:
        return {f.id: frozenset(f.guide_words) for f in self.functions}

    def authored_texts(self) -> dict[tuple[str, GuideWord], str]:
        return {(h.function, h.guide_word): h.text for h in self.hazard_texts}

    def perspective_of_component(self, component_id: str) -> Perspective | None:
        comp = self.component_index.get(component_id)
        if comp is None:
            return None
        item = self.item_index.get(comp.item)
        if item is None:
            return None
        if item.kind is ItemKind.COOPERATIVE_SYSTEM:
            return Perspective.COOPERATIVE
        return Perspective.VEHICULAR

    def base_component(self, component_id: str) -> str:
        """Vehicle component a (possibly cooperative) component maps onto."""
        comp = self.component_index.get(component_id)
        if comp is not None and comp.ref:
            return comp.ref
        return component_id

    def architecture(self, item_id: str) -> FunctionalArchitecture:
        return FunctionalArchitecture(
            item_id,
            tuple(c for c in self.components if c.item == item_id),
            tuple(f for f in self.flows if f.item == item_id),
        )

    def span(self, kind: str, ident: str) -> SourceSpan | None:
        return self.spans.get((kind, ident))
