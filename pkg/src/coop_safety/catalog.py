"""Safety tactic / pattern knowledge base and ASIL determination."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

from coop_safety.diagnostics import InputError, error
from coop_safety.model import Asil
from coop_safety.syntax import Statement, parse_source, read_source

CATALOG_ENV = "COOP_SAFETY_CATALOG"

SEVERITY_RANGE = range(0, 4)
EXPOSURE_RANGE = range(0, 5)
CONTROLLABILITY_RANGE = range(0, 4)

_ASIL_BY_SUM = {7: Asil.A, 8: Asil.B, 9: Asil.C, 10: Asil.D}


def determine_asil(severity: int, exposure: int, controllability: int) -> Asil:
    """ASIL for a hazardous event rated S0-S3, E0-E4, C0-C3.

    Any class 0 yields QM; otherwise the ISO 26262-3 risk graph reduces to
    the sum of the three indices (7 -> A ... 10 -> D, below 7 -> QM).
    """
    for value, allowed, label in (
        (severity, SEVERITY_RANGE, "severity"),
        (exposure, EXPOSURE_RANGE, "exposure"),
        (controllability, CONTROLLABILITY_RANGE, "controllability"),
    ):
        if isinstance(value, bool) or not isinstance(value, int) or value not in allowed:
            raise ValueError(f"{label} index {value!r} outside {allowed.start}..{allowed.stop - 1}")
    if 0 in (severity, exposure, controllability):
        return Asil.QM
    return _ASIL_BY_SUM.get(severity + exposure + controllability, Asil.QM)


@dataclass(frozen=True)
class SafetyTactic:
    id: str
    name: str
    aim: str = ""
    description: str = ""
    provides: frozenset[str] = frozenset()


@dataclass(frozen=True)
class SafetyPattern:
    id: str
    name: str
    tactics: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Catalog:
    tactics: tuple[SafetyTactic, ...]
    patterns: tuple[SafetyPattern, ...] = ()
    exclusive: frozenset[frozenset[str]] = frozenset()
    triggers: frozenset[str] = frozenset()
    responses: frozenset[str] = frozenset()
    source: str = field(default="", compare=False)

    @cached_property
    def tactic_index(self) -> dict[str, SafetyTactic]:
        return {t.id: t for t in self.tactics}

    @cached_property
    def pattern_index(self) -> dict[str, SafetyPattern]:
        return {p.id: p for p in self.patterns}

    @cached_property
    def capabilities(self) -> frozenset[str]:
        return frozenset().union(*(t.provides for t in self.tactics))

    def provides(self, tactic_ids) -> frozenset[str]:
        out: set[str] = set()
        for tid in tactic_ids:
            tactic = self.tactic_index.get(tid)
            if tactic is not None:
                out |= tactic.provides
        return frozenset(out)

    def is_exclusive(self, a: str, b: str) -> bool:
        return a != b and frozenset((a, b)) in self.exclusive


# -- loading ----------------------------------------------------------------------


def default_catalog_path() -> Path:
    return Path(str(resources.files("coop_safety") / "data" / "default.catalog"))


def resolve_catalog_path(explicit: str | os.PathLike | None = None) -> Path:
    """Flag beats environment variable beats bundled catalog."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return default_catalog_path()


def load_catalog(source: str | os.PathLike | None = None) -> Catalog:
    path = resolve_catalog_path(source)
    return parse_catalog(read_source(path), str(path))


def parse_catalog(text: str, file: str = "<catalog>") -> Catalog:
    stmts, diags = parse_source(text, file)
    if diags:
        raise InputError(diags)

    tactics: dict[str, SafetyTactic] = {}
    patterns: dict[str, tuple[SafetyPattern, Statement]] = {}
    exclusive: set[frozenset[str]] = set()
    triggers: set[str] = set()
    responses: set[str] = set()
    problems = []

    for stmt in stmts:
        name = stmt.name
        words = [a.value for a in stmt.args if a.kind == "WORD"]
        strings = [a.value for a in stmt.args if a.kind == "STRING"]
        if name in ("tactic", "pattern"):
            if not words:
                problems.append(error("MISSING_ID", f"{name} needs an identifier", stmt.span))
                continue
            ident = words[0]
            if ident in (tactics if name == "tactic" else patterns):
                problems.append(error("DUP_ID", f"duplicate catalog id {ident!r}", stmt.args[0].span, ident))
                continue
            label = strings[0] if strings else ident
            if name == "tactic":
                provides = frozenset(_entry_words(stmt, "provides"))
                if not provides:
                    problems.append(error("EMPTY_PROVIDES", f"tactic {ident!r} provides no capability", stmt.span, ident))
                tactics[ident] = SafetyTactic(
                    ident, label, _entry_string(stmt, "aim"), _entry_string(stmt, "description"), provides
                )
            else:
                members = frozenset(_entry_words(stmt, "tactics"))
                if not members:
                    problems.append(error("EMPTY_PATTERN", f"pattern {ident!r} names no tactic", stmt.span, ident))
                patterns[ident] = (SafetyPattern(ident, label, members), stmt)
        elif name == "exclusive":
            if len(words) != 2 or words[0] == words[1]:
                problems.append(error("BAD_EXCLUSIVE", "exclusive takes two distinct response classes", stmt.span))
                continue
            exclusive.add(frozenset(words))
            responses.update(words)
        elif name == "trigger":
            triggers.update(words[:1])
        elif name == "response":
            responses.update(words[:1])
        else:
            problems.append(error("UNKNOWN_KEYWORD", f"unknown catalog statement {name!r}", stmt.span))

    for pattern, stmt in patterns.values():
        for tid in sorted(pattern.tactics - tactics.keys()):
            problems.append(
                error("UNKNOWN_TACTIC", f"pattern {pattern.id!r} references unknown tactic {tid!r}", stmt.span, pattern.id)
            )
    if not tactics:
        problems.append(error("EMPTY_CATALOG", "catalog must define >=1 tactic", None, file))
    if problems:
        raise InputError(problems)

    return Catalog(
        tactics=tuple(sorted(tactics.values(), key=lambda t: t.id)),
        patterns=tuple(sorted((p for p, _ in patterns.values()), key=lambda p: p.id)),
        exclusive=frozenset(exclusive),
        triggers=frozenset(triggers),
        responses=frozenset(responses),
        source=file,
    )


def _entry_words(stmt: Statement, keyword: str) -> list[str]:
    return [a.value for e in stmt.entries(keyword) for a in e.args if a.kind == "WORD"]


def _entry_string(stmt: Statement, keyword: str) -> str:
    for e in stmt.entries(keyword):
        for a in e.args:
            if a.kind == "STRING":
                return a.value
    return ""
