"""Model file front-end: statements -> :class:`~coop_safety.model.Model`.

The loader only builds structure and records source spans. Referential and
semantic checks run in :mod:`coop_safety.validation`, which attaches the
spans recorded here to its diagnostics.
"""

from __future__ import annotations

import os
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from coop_safety.diagnostics import Diagnostic, InputError, SourceSpan, error, sort_diagnostics, warning
from coop_safety.model import (
    And,
    Basic,
    FaultTree,
    FeasibilityPolicy,
    Flow,
    FsrAnnotation,
    FunctionalComponent,
    GuideWord,
    HazardText,
    ImplementedTactic,
    Item,
    ItemKind,
    MergeGroup,
    Model,
    OperationalMode,
    OperationalSituation,
    Or,
    Perspective,
    Rating,
    SystemFunction,
    TechnicalComponent,
    hazard_id,
)
from coop_safety.syntax import WORD_RE, Statement, Token, parse_source, read_source

MODEL_KEYWORDS = {
    "item", "component", "flow", "function", "mode", "situation", "feasibility_default",
    "feasible", "infeasible", "hazard", "event_rating", "merge_goal", "tree",
    "tech_component", "implements_tactic", "fsr_annotation",
}
CATALOG_KEYWORDS = {"tactic", "pattern", "exclusive", "trigger", "response"}
GATE_KEYWORDS = {"and", "or", "basic", "include"}

_RATING_RE = {
    "S": re.compile(r"^[Ss]([0-3])$"),
    "E": re.compile(r"^[Ee]([0-4])$"),
    "C": re.compile(r"^[Cc]([0-3])$"),
}


def pattern_key(pattern) -> str:
    return "|".join(p if p is not None else "*" for p in pattern)


def flow_key(item: str, source: str, target: str) -> str:
    return f"{item}:{source}->{target}"


@dataclass
class _Decl:
    kind: str
    ident: str
    span: SourceSpan
    value: object


@dataclass
class _Builder:
    diagnostics: list[Diagnostic] = field(default_factory=list)
    decls: dict[str, list[_Decl]] = field(default_factory=lambda: defaultdict(list))
    spans: dict[tuple[str, str], SourceSpan] = field(default_factory=dict)
    defaults: list[tuple[Perspective | None, bool, SourceSpan]] = field(default_factory=list)
    exceptions: list[tuple[bool, tuple, SourceSpan]] = field(default_factory=list)
    ratings: list[tuple[Rating, SourceSpan]] = field(default_factory=list)
    named_trees: list[tuple[str, Statement]] = field(default_factory=list)
    goal_trees: list[tuple[str | None, str, Statement]] = field(default_factory=list)
    tactic_links: list[tuple[str, ImplementedTactic, SourceSpan]] = field(default_factory=list)
    anon_goals: int = 0

    # -- helpers ---------------------------------------------------------------

    def err(self, code, message, span=None, entity=None):
        self.diagnostics.append(error(code, message, span, entity))

    def warn(self, code, message, span=None, entity=None):
        self.diagnostics.append(warning(code, message, span, entity))

    def span(self, kind: str, ident: str, span: SourceSpan):
        self.spans.setdefault((kind, ident), span)

    def declare(self, kind: str, ident: str, span: SourceSpan, value):
        self.decls[kind].append(_Decl(kind, ident, span, value))

    def words(self, stmt: Statement) -> list[Token]:
        bad = [a for a in stmt.args if a.kind != "WORD"]
        for tok in bad:
            self.err("BAD_VALUE", f"{stmt.name}: expected an identifier, found {tok.value!r}", tok.span)
        return [a for a in stmt.args if a.kind == "WORD"]

    def single(self, block: Statement, keyword: str, required: bool = False) -> Token | None:
        entries = block.entries(keyword)
        if not entries:
            if required:
                self.err("MISSING_FIELD", f"{block.name} is missing '{keyword}'", block.span)
            return None
        if len(entries) > 1:
            self.err("DUP_FIELD", f"'{keyword}' given more than once", entries[1].span)
        entry = entries[0]
        if not entry.args:
            self.err("MISSING_VALUE", f"'{keyword}' needs a value", entry.span)
            return None
        return entry.args[0]

    def string_of(self, block: Statement, keyword: str) -> str | None:
        tok = self.single(block, keyword)
        return tok.value if tok is not None else None

    def list_of(self, block: Statement, keyword: str) -> list[Token]:
        out = []
        for entry in block.entries(keyword):
            out.extend(self.words(entry))
        return out

    def perspective(self, tok: Token | None) -> Perspective | None:
        if tok is None:
            return None
        try:
            return Perspective(tok.value)
        except ValueError:
            self.err("BAD_VALUE", f"unknown perspective {tok.value!r} (vehicular|cooperative)", tok.span)
            return None

    def check_body(self, block: Statement, allowed: set[str]):
        for entry in block.body or ():
            if entry.name not in allowed:
                self.err("UNKNOWN_FIELD", f"unexpected '{entry.name}' in {block.name}", entry.span)

    def header(self, stmt: Statement) -> tuple[Token | None, list[Token]]:
        """First argument is the identifier; remaining strings are prose."""
        if not stmt.args:
            self.err("MISSING_ID", f"{stmt.name} needs an identifier", stmt.span)
            return None, []
        first = stmt.args[0]
        if first.kind == "STAR" or not WORD_RE.fullmatch(first.value):
            self.err("BAD_ID", f"invalid identifier {first.value!r}", first.span)
            return None, []
        rest = [a for a in stmt.args[1:] if a.kind == "STRING"]
        return first, rest

    # -- statements -------------------------------------------------------------

    def statement(self, stmt: Statement):
        name = stmt.name
        handler = getattr(self, f"on_{name}", None)
        if name in CATALOG_KEYWORDS:
            self.err("UNEXPECTED_BLOCK", f"catalog statement '{name}' in a model file; pass catalogs with --catalog", stmt.span)
        elif name not in MODEL_KEYWORDS or handler is None:
            self.err("UNKNOWN_KEYWORD", f"unknown statement '{name}'", stmt.span)
        else:
            handler(stmt)

    def on_item(self, stmt: Statement):
        ident, prose = self.header(stmt)
        if ident is None:
            return
        self.check_body(stmt, {"kind", "component", "flow", "name"})
        kind_tok = self.single(stmt, "kind", required=True) if stmt.body is not None else None
        if stmt.body is None:
            self.err("MISSING_FIELD", "item is missing 'kind'", stmt.span)
        kind = None
        if kind_tok is not None:
            try:
                kind = ItemKind(kind_tok.value)
            except ValueError:
                self.err("BAD_VALUE", f"unknown item kind {kind_tok.value!r} (vehicle|cooperative)", kind_tok.span)
        name = prose[0].value if prose else (self.string_of(stmt, "name") or ident.value)
        if kind is not None:
            self.declare("item", ident.value, ident.span, Item(ident.value, kind, name))
        for entry in stmt.entries("component"):
            self.on_component(entry, item=ident.value)
        for entry in stmt.entries("flow"):
            self.on_flow(entry, item=ident.value)

    def on_component(self, stmt: Statement, item: str | None = None):
        ident, prose = self.header(stmt)
        if ident is None:
            return
        self.check_body(stmt, {"item", "class", "ref", "external", "description", "name"})
        item_tok = self.single(stmt, "item") if stmt.body else None
        if item is None:
            if item_tok is None:
                self.err("MISSING_FIELD", "top-level component needs 'item'", stmt.span)
                return
            item = item_tok.value
            self.span("component.item", ident.value, item_tok.span)
        cls = self.single(stmt, "class") if stmt.body else None
        ref = self.single(stmt, "ref") if stmt.body else None
        if ref is not None:
            self.span("component.ref", ident.value, ref.span)
        external = bool(stmt.entries("external")) if stmt.body else False
        name = prose[0].value if prose else ident.value
        self.declare(
            "component",
            ident.value,
            ident.span,
            FunctionalComponent(
                ident.value, name, item, cls.value if cls else None, ref.value if ref else None, external
            ),
        )

    def on_flow(self, stmt: Statement, item: str | None = None):
        words = self.words(stmt)
        if len(words) != 2:
            self.err("BAD_ARITY", "flow takes exactly two component ids", stmt.span)
            return
        if item is None and stmt.body:
            tok = self.single(stmt, "item")
            item = tok.value if tok else None
        src, dst = words
        key = flow_key(item or "", src.value, dst.value)
        self.span("flow.source", key, src.span)
        self.span("flow.target", key, dst.span)
        self.declare("flow", key, stmt.span, Flow(src.value, dst.value, item or ""))

    def on_function(self, stmt: Statement):
        ident, prose = self.header(stmt)
        if ident is None:
            return
        if stmt.body is None:
            self.err("MISSING_FIELD", "function is missing 'perspective'", stmt.span)
            return
        self.check_body(stmt, {"perspective", "scenario", "guide_words", "description"})
        perspective = self.perspective(self.single(stmt, "perspective", required=True))
        scenario = self.single(stmt, "scenario")
        description = prose[0].value if prose else self.string_of(stmt, "description")
        if description is None:
            description = ident.value
        words = []
        for tok in self.list_of(stmt, "guide_words"):
            try:
                gw = GuideWord(tok.value)
            except ValueError:
                self.err("BAD_VALUE", f"unknown guide word {tok.value!r}", tok.span)
                continue
            if gw in words:
                self.err("DUP_ID", f"guide word {tok.value!r} listed twice", tok.span)
                continue
            words.append(gw)
        if perspective is None:
            return
        self.declare(
            "function",
            ident.value,
            ident.span,
            SystemFunction(
                ident.value,
                description,
                perspective,
                scenario.value if scenario else "base",
                tuple(sorted(words, key=lambda g: g.rank)),
            ),
        )

    def _mode_like(self, stmt: Statement, cls):
        ident, prose = self.header(stmt)
        if ident is None:
            return
        persp_tok = None
        if stmt.body is not None:
            self.check_body(stmt, {"perspective", "name"})
            persp_tok = self.single(stmt, "perspective", required=True)
        else:
            trailing = [a for a in stmt.args[1:] if a.kind == "WORD"]
            persp_tok = trailing[0] if trailing else None
            if persp_tok is None:
                self.err("MISSING_FIELD", f"{stmt.name} is missing 'perspective'", stmt.span)
        perspective = self.perspective(persp_tok)
        if perspective is None:
            return
        name = prose[0].value if prose else (self.string_of(stmt, "name") if stmt.body else None) or ident.value
        key = f"{perspective.value}:{ident.value}"
        self.declare(stmt.name, key, ident.span, cls(ident.value, name, perspective))

    def on_mode(self, stmt: Statement):
        self._mode_like(stmt, OperationalMode)

    def on_situation(self, stmt: Statement):
        self._mode_like(stmt, OperationalSituation)

    def on_hazard(self, stmt: Statement):
        words = [a for a in stmt.args if a.kind == "WORD"]
        strings = [a for a in stmt.args if a.kind == "STRING"]
        if len(words) != 2 or len(strings) != 1:
            self.err("BAD_ARITY", 'hazard takes: <function> <guide word> "text"', stmt.span)
            return
        func, gw_tok = words
        try:
            gw = GuideWord(gw_tok.value)
        except ValueError:
            self.err("BAD_VALUE", f"unknown guide word {gw_tok.value!r}", gw_tok.span)
            return
        hid = hazard_id(func.value, gw)
        self.span("hazard_text.function", hid, func.span)
        self.declare("hazard_text", hid, stmt.span, HazardText(func.value, gw, strings[0].value))

    def on_feasibility_default(self, stmt: Statement):
        words = self.words(stmt)
        if not words or words[0].value not in ("feasible", "infeasible") or len(words) > 2:
            self.err("BAD_VALUE", "feasibility_default takes feasible|infeasible [perspective]", stmt.span)
            return
        perspective = self.perspective(words[1]) if len(words) == 2 else None
        if len(words) == 2 and perspective is None:
            return
        self.defaults.append((perspective, words[0].value == "feasible", stmt.span))

    def _pattern(self, stmt: Statement, count: int = 3):
        args = stmt.args[:count]
        if len(args) < count or any(a.kind == "STRING" for a in args):
            self.err("BAD_ARITY", f"{stmt.name} takes <hazard|*> <mode|*> <situation|*>", stmt.span)
            return None
        return tuple(None if a.kind == "STAR" else a.value for a in args)

    def on_feasible(self, stmt: Statement):
        pattern = self._pattern(stmt)
        if pattern is None:
            return
        if len(stmt.args) != 3:
            self.err("BAD_ARITY", f"{stmt.name} takes exactly three values", stmt.span)
            return
        if pattern == (None, None, None):
            self.err("BAD_VALUE", f"{stmt.name} with three wildcards; use feasibility_default", stmt.span)
            return
        key = pattern_key(pattern)
        self.span("feasible", key, stmt.span)
        for pos, tok in zip(("hazard", "mode", "situation"), stmt.args):
            self.span(f"feasible.{pos}", key, tok.span)
        self.exceptions.append((stmt.name == "feasible", pattern, stmt.span))

    on_infeasible = on_feasible

    def on_event_rating(self, stmt: Statement):
        pattern = self._pattern(stmt)
        if pattern is None:
            return
        rest = stmt.args[3:]
        if len(rest) != 3:
            self.err("BAD_ARITY", "event_rating takes <hazard> <mode> <situation> S<n> E<n> C<n>", stmt.span)
            return
        values = []
        for letter, tok in zip("SEC", rest):
            m = _RATING_RE[letter].match(tok.value) if tok.kind == "WORD" else None
            if m is None:
                self.err("BAD_RATING", f"expected {letter}<n> in range, found {tok.value!r}", tok.span)
                return
            values.append(int(m.group(1)))
        key = pattern_key(pattern)
        self.span("rating", key, stmt.span)
        for pos, tok in zip(("hazard", "mode", "situation"), stmt.args):
            self.span(f"rating.{pos}", key, tok.span)
        self.ratings.append((Rating(*pattern, *values), stmt.span))

    def on_merge_goal(self, stmt: Statement):
        words = [a for a in stmt.args if a.kind == "WORD"]
        strings = [a for a in stmt.args if a.kind == "STRING"]
        if not strings:
            self.err("MISSING_VALUE", 'merge_goal needs a goal text: merge_goal [id] "text" { ... }', stmt.span)
            return
        if words:
            gid, span = words[0].value, words[0].span
        else:
            gid, span = None, stmt.span
        self.check_body(stmt, {"hazards", "functions", "event", "events", "perspective"})
        hazards = self.list_of(stmt, "hazards")
        functions = self.list_of(stmt, "functions")
        triples = []
        for entry in stmt.entries("event"):
            ws = self.words(entry)
            if len(ws) != 3:
                self.err("BAD_ARITY", "event takes <hazard> <mode> <situation>", entry.span)
                continue
            triples.append((tuple(w.value for w in ws), entry.span))
        for tok in self.list_of(stmt, "events"):
            parts = tok.value.split("@")
            if len(parts) != 3:
                self.err("BAD_VALUE", f"event id {tok.value!r} is not hazard@mode@situation", tok.span)
                continue
            triples.append((tuple(parts), tok.span))
        self.declare(
            "merge_goal",
            gid or "",
            span,
            (
                MergeGroup(
                    gid or "",
                    strings[0].value,
                    tuple(t.value for t in hazards),
                    tuple(t.value for t in functions),
                    tuple(t for t, _ in triples),
                ),
                [(t.value, t.span) for t in hazards],
                [(t.value, t.span) for t in functions],
                triples,
            ),
        )

    def on_tree(self, stmt: Statement):
        words = self.words(stmt)
        name, goal = None, None
        values = [w.value for w in words]
        if values[:1] == ["for"]:
            if len(values) != 2:
                self.err("BAD_ARITY", "tree header is: tree [name] [for <goal>]", stmt.span)
                return
            goal = words[1]
        elif len(values) == 1:
            name = values[0]
        elif len(values) == 3 and values[1] == "for":
            name, goal = values[0], words[2]
        else:
            self.err("BAD_ARITY", "tree header is: tree [name] [for <goal>]", stmt.span)
            return
        gates = [s for s in stmt.body or ()]
        if len(gates) != 1:
            self.err("BAD_TREE", "a tree holds exactly one top gate", stmt.span)
            return
        if goal is None:
            self.named_trees.append((name, stmt))
        else:
            self.goal_trees.append((name, goal.value, stmt))
            if name:
                self.named_trees.append((name, stmt))
            self.span("tree.goal.pending", f"{stmt.span}", goal.span)

    def on_tech_component(self, stmt: Statement):
        ident, prose = self.header(stmt)
        if ident is None:
            return
        self.check_body(stmt, {"realizes", "mechanism", "implements_tactic", "linked", "name"})
        realizes = self.single(stmt, "realizes") if stmt.body else None
        if realizes is not None:
            self.span("tech.realizes", ident.value, realizes.span)
        mechanism = bool(stmt.entries("mechanism")) if stmt.body else False
        linked = self.list_of(stmt, "linked") if stmt.body else []
        for tok in linked:
            self.span("tech.linked", f"{ident.value}:{tok.value}", tok.span)
        for entry in (stmt.entries("implements_tactic") if stmt.body else []):
            ws = [a for a in entry.args if a.kind == "WORD"]
            ss = [a for a in entry.args if a.kind == "STRING"]
            if len(ws) != 1:
                self.err("BAD_ARITY", 'implements_tactic takes <tactic> ["evidence"]', entry.span)
                continue
            self.tactic_links.append((ident.value, ImplementedTactic(ws[0].value, ss[0].value if ss else ""), ws[0].span))
        name = prose[0].value if prose else ident.value
        self.declare(
            "tech_component",
            ident.value,
            ident.span,
            TechnicalComponent(
                ident.value,
                realizes.value if realizes else None,
                (),
                tuple(t.value for t in linked),
                mechanism,
                name,
            ),
        )

    def on_implements_tactic(self, stmt: Statement):
        ws = [a for a in stmt.args if a.kind == "WORD"]
        ss = [a for a in stmt.args if a.kind == "STRING"]
        if len(ws) != 2:
            self.err("BAD_ARITY", 'implements_tactic takes <tech component> <tactic> ["evidence"]', stmt.span)
            return
        self.span("tech.ref", f"{ws[0].value}:{ws[1].value}", ws[0].span)
        self.tactic_links.append((ws[0].value, ImplementedTactic(ws[1].value, ss[0].value if ss else ""), ws[1].span))

    def on_fsr_annotation(self, stmt: Statement):
        words = self.words(stmt)
        if len(words) != 2:
            self.err("BAD_ARITY", "fsr_annotation takes <component> <failure mode>", stmt.span)
            return
        comp, mode = words
        key = f"{comp.value}.{mode.value}"
        if stmt.body is None:
            self.err("MISSING_FIELD", "fsr_annotation needs trigger, response and requires entries", stmt.span)
            return
        self.check_body(stmt, {"text", "trigger", "response", "response_class", "requires", "conflicts_with"})
        self.span("annotation.component", key, comp.span)
        trigger = self.single(stmt, "trigger", required=True)
        response = self.single(stmt, "response") or self.single(stmt, "response_class")
        if response is None:
            self.err("MISSING_FIELD", "fsr_annotation is missing 'response'", stmt.span)
        alternatives = []
        for entry in stmt.entries("requires"):
            atoms = frozenset(t.value for t in self.words(entry))
            if not atoms:
                self.err("EMPTY_REQUIREMENT", "'requires' needs at least one capability tag", entry.span)
                continue
            alternatives.append(atoms)
        if not alternatives:
            self.err("EMPTY_REQUIREMENT", "fsr_annotation needs at least one 'requires' alternative", stmt.span)
        if trigger is None or response is None or not alternatives:
            return
        self.declare(
            "annotation",
            key,
            comp.span,
            FsrAnnotation(
                comp.value,
                mode.value,
                trigger.value,
                response.value,
                frozenset(alternatives),
                self.string_of(stmt, "text"),
                tuple(t.value for t in self.list_of(stmt, "conflicts_with")),
            ),
        )

    # -- assembly ---------------------------------------------------------------

    def unique(self, kind: str) -> dict[str, _Decl]:
        """First declaration (in source order) wins; later ones are DUP_ID errors."""
        out: dict[str, _Decl] = {}
        for decl in sorted(self.decls[kind], key=lambda d: d.span):
            if decl.ident in out:
                first = out[decl.ident].span
                self.err("DUP_ID", f"duplicate {kind} id {decl.ident!r} (first declared at {first})", decl.span, decl.ident)
                continue
            out[decl.ident] = decl
        return out

    def resolve_gate(self, stmt: Statement, named: dict[str, Statement], stack: tuple[str, ...], tree_name: str):
        kw = stmt.name
        if kw not in GATE_KEYWORDS:
            self.err("BAD_TREE", f"unknown gate '{kw}' (and|or|basic|include)", stmt.span)
            return None
        if kw == "basic":
            ws = self.words(stmt)
            if len(ws) != 2 or stmt.body is not None:
                self.err("BAD_ARITY", "basic takes <component> <failure mode>", stmt.span)
                return None
            self.span("basic", f"{tree_name}:{ws[0].value}:{ws[1].value}", ws[0].span)
            return Basic(ws[0].value, ws[1].value)
        if kw == "include":
            ws = self.words(stmt)
            if len(ws) != 1:
                self.err("BAD_ARITY", "include takes one tree name", stmt.span)
                return None
            target = ws[0].value
            if target in stack:
                chain = " -> ".join(stack[stack.index(target):] + (target,))
                self.err("CYCLE", f"fault tree include cycle: {chain}", ws[0].span, target)
                return None
            if target not in named:
                self.err("UNKNOWN_REF", f"include of unknown tree {target!r}", ws[0].span, target)
                return None
            body = named[target].body or ()
            if len(body) != 1:
                return None
            return self.resolve_gate(body[0], named, stack + (target,), tree_name)
        children = stmt.body or ()
        if stmt.args:
            self.err("BAD_ARITY", f"{kw} takes no arguments", stmt.span)
        if not children:
            self.err("EMPTY_GATE", f"{kw} gate has no children", stmt.span)
            return None
        resolved = [self.resolve_gate(c, named, stack, tree_name) for c in children]
        if any(r is None for r in resolved):
            return None
        return (And if kw == "and" else Or)(tuple(resolved))

    def trees(self) -> list[FaultTree]:
        named: dict[str, Statement] = {}
        for name, stmt in sorted(self.named_trees, key=lambda t: t[1].span):
            if name in named:
                if named[name] is not stmt:
                    self.err("DUP_ID", f"duplicate tree name {name!r}", stmt.span, name)
                continue
            named[name] = stmt
        for name, stmt in named.items():
            # standalone subtrees are checked for cycles even if no goal uses them
            if not any(g[2] is stmt for g in self.goal_trees):
                self.resolve_gate(stmt.body[0], named, (name,), name)

        per_goal: dict[str, int] = defaultdict(int)
        out = []
        for name, goal, stmt in sorted(self.goal_trees, key=lambda t: t[2].span):
            per_goal[goal] += 1
            tname = name or f"{goal}#{per_goal[goal]}"
            stack = (name,) if name else ()
            root = self.resolve_gate(stmt.body[0], named, stack, tname)
            goal_span = self.spans.pop(("tree.goal.pending", f"{stmt.span}"), stmt.span)
            self.span("tree.goal", tname, goal_span)
            self.span("tree", tname, stmt.span)
            if root is not None:
                out.append(FaultTree(goal, root, tname))
        return out

    def feasibility(self, perspectives_of) -> list[FeasibilityPolicy]:
        defaults: dict[Perspective | None, tuple[bool, SourceSpan]] = {}
        for persp, value, span in sorted(self.defaults, key=lambda d: d[2]):
            if persp in defaults and defaults[persp][0] != value:
                self.err("CONFLICTING_DEFAULT", "conflicting feasibility_default declarations", span)
                continue
            defaults.setdefault(persp, (value, span))
        policies = []
        for persp in Perspective:
            default = defaults.get(persp, defaults.get(None, (True, None)))[0]
            exceptions = set()
            for is_feasible, pattern, span in self.exceptions:
                if persp not in perspectives_of(pattern):
                    continue
                if is_feasible == default:
                    self.warn("REDUNDANT_FEASIBILITY", f"'{'feasible' if is_feasible else 'infeasible'}' restates the default", span)
                    continue
                exceptions.add(pattern)
            policies.append((persp, default, exceptions))
        return [FeasibilityPolicy(p, d, frozenset(e)) for p, d, e in policies]


def build_model(statements: Iterable[Statement]) -> tuple[Model, list[Diagnostic]]:
    """Interpret parsed statements (from any number of files) into a model."""
    b = _Builder()
    for stmt in statements:
        b.statement(stmt)

    items = b.unique("item")
    components = b.unique("component")
    flows = b.unique("flow")
    functions = b.unique("function")
    hazard_texts = b.unique("hazard_text")
    modes = b.unique("mode")
    situations = b.unique("situation")
    tech = b.unique("tech_component")
    notes = b.unique("annotation")

    # anonymous merge goals get ids by source order
    goal_decls = sorted(b.decls["merge_goal"], key=lambda d: d.span)
    n = 0
    for decl in goal_decls:
        if not decl.ident:
            n += 1
            decl.ident = f"MG{n}"
            group = decl.value[0]
            decl.value = (MergeGroup(decl.ident, group.text, group.hazards, group.functions, group.events), *decl.value[1:])
    b.decls["merge_goal"] = goal_decls
    merge_goals = b.unique("merge_goal")

    for kind, index in (("item", items), ("component", components), ("function", functions),
                        ("tech_component", tech), ("merge_goal", merge_goals), ("hazard_text", hazard_texts),
                        ("annotation", notes)):
        for ident, decl in index.items():
            b.span(kind, ident, decl.span)
    for kind, index in (("mode", modes), ("situation", situations)):
        for ident, decl in index.items():
            b.span(kind, ident, decl.span)
    for gid, decl in merge_goals.items():
        _, hazards, funcs, triples = decl.value
        for h, span in hazards:
            b.span("merge.hazard", f"{gid}:{h}", span)
        for f, span in funcs:
            b.span("merge.function", f"{gid}:{f}", span)
        for t, span in triples:
            b.span("merge.event", f"{gid}:{'@'.join(t)}", span)

    # top-level flows without an item take their source component's item
    flow_list = []
    for decl in flows.values():
        flow = decl.value
        if not flow.item:
            src = components.get(flow.source)
            item = src.value.item if src else ""
            flow = Flow(flow.source, flow.target, item)
            key = flow_key(item, flow.source, flow.target)
            for pos in ("source", "target"):
                old = b.spans.get((f"flow.{pos}", decl.ident))
                if old:
                    b.span(f"flow.{pos}", key, old)
        flow_list.append(flow)

    tactics_by_tc: dict[str, list[ImplementedTactic]] = defaultdict(list)
    for tc, impl, span in sorted(b.tactic_links, key=lambda t: t[2]):
        b.span("tech.tactic", f"{tc}:{impl.tactic}", span)
        if any(i.tactic == impl.tactic for i in tactics_by_tc[tc]):
            b.warn("DUP_TACTIC", f"tactic {impl.tactic!r} listed twice for {tc!r}", span)
            continue
        tactics_by_tc[tc].append(impl)
    tech_list = []
    for ident, decl in tech.items():
        tc = decl.value
        tech_list.append(
            TechnicalComponent(tc.id, tc.realizes, tuple(sorted(tactics_by_tc.get(ident, []), key=lambda t: t.tactic)),
                               tc.linked, tc.mechanism, tc.name)
        )
    for tc in sorted(set(tactics_by_tc) - tech.keys()):
        span = next(s for t, _, s in b.tactic_links if t == tc)
        b.err("UNKNOWN_REF", f"implements_tactic names unknown technical component {tc!r}",
              b.spans.get(("tech.ref", f"{tc}:{tactics_by_tc[tc][0].tactic}"), span), tc)

    ratings = []
    for rating, span in sorted(b.ratings, key=lambda r: r[1]):
        ratings.append(rating)

    trees = b.trees()
    def perspectives_of(pattern) -> set[Perspective]:
        """Perspectives in which every non-wildcard part of a pattern resolves."""
        h, m, s = pattern
        out = set(Perspective)
        if h is not None:
            fn = functions.get(h.rsplit(".", 1)[0])
            out &= {fn.value.perspective} if fn else set()
        if m is not None:
            out &= {p for p in Perspective if f"{p.value}:{m}" in modes}
        if s is not None:
            out &= {p for p in Perspective if f"{p.value}:{s}" in situations}
        return out

    policies = b.feasibility(perspectives_of)

    def by_id(index):
        return tuple(index[k].value for k in sorted(index))

    model = Model(
        items=by_id(items),
        components=by_id(components),
        flows=tuple(sorted(flow_list, key=lambda f: (f.item, f.source, f.target))),
        functions=by_id(functions),
        hazard_texts=by_id(hazard_texts),
        modes=tuple(sorted((d.value for d in modes.values()), key=lambda m: (m.perspective.value, m.id))),
        situations=tuple(sorted((d.value for d in situations.values()), key=lambda s: (s.perspective.value, s.id))),
        feasibility=tuple(policies),
        ratings=tuple(ratings),
        merge_groups=tuple(merge_goals[k].value[0] for k in sorted(merge_goals)),
        trees=tuple(sorted(trees, key=lambda t: (t.goal, t.name))),
        tech_components=tuple(tech_list),
        annotations=by_id(notes),
        spans=b.spans,
    )
    return model, b.diagnostics


def _collect(files) -> tuple[list[Statement], list[Diagnostic]]:
    stmts: list[Statement] = []
    diags: list[Diagnostic] = []
    for path in sorted({os.fspath(f) for f in files}):
        text = read_source(path)
        parsed, problems = parse_source(text, path)
        stmts.extend(parsed)
        diags.extend(problems)
    return stmts, diags


def parse_model(files, catalog=None) -> tuple[Model, list[Diagnostic]]:
    """Parse and validate model files.

    Files are read as UTF-8 and processed in sorted path order, so the result
    does not depend on the order they are given in. On zero errors the model
    passes :func:`coop_safety.validation.validate_model`.
    """
    from coop_safety.validation import validate_model

    stmts, diags = _collect(files)
    model, build_diags = build_model(stmts)
    diags.extend(build_diags)
    diags.extend(validate_model(model, catalog=catalog))
    return model, sort_diagnostics(diags)


def parse_model_text(text: str, file: str = "<string>", catalog=None) -> tuple[Model, list[Diagnostic]]:
    from coop_safety.validation import validate_model

    stmts, diags = parse_source(text, file)
    model, build_diags = build_model(stmts)
    diags = list(diags) + build_diags + validate_model(model, catalog=catalog)
    return model, sort_diagnostics(diags)


def parse_fault_trees(files, model: Model | None = None) -> tuple[list[FaultTree], list[Diagnostic]]:
    """Parse only the ``tree`` statements of the given files.

    With a ``model`` the trees are also checked against its goals and
    components.
    """
    from coop_safety.validation import check_trees

    stmts, diags = _collect(files)
    tree_stmts = [s for s in stmts if s.name == "tree"]
    built, build_diags = build_model(tree_stmts)
    diags.extend(build_diags)
    trees = list(built.trees)
    if model is not None:
        diags.extend(check_trees(model, trees, built.spans))
    return trees, sort_diagnostics(diags)


def load_model(files, catalog=None) -> Model:
    """Parse files and raise :class:`InputError` if any error diagnostic is produced."""
    model, diags = parse_model(files, catalog=catalog)
    errors = [d for d in diags if d.is_error]
    if errors:
        raise InputError(errors)
    return model
