"""Fault tree analysis: minimal cut sets and FSR derivation."""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Mapping

from coop_safety.diagnostics import InputError, error
from coop_safety.model import (
    And,
    Basic,
    FaultTree,
    Fsr,
    FsrAnnotation,
    Gate,
    Or,
    Perspective,
    SafetyGoal,
    max_asil,
)

CutSet = frozenset[Basic]


class FtaError(InputError):
    pass


def cut_set_key(cut: CutSet):
    return (len(cut), tuple(sorted(b.key for b in cut)))


def minimize(cut_sets: Iterable[CutSet]) -> list[CutSet]:
    """Absorption: drop every set that contains another one."""
    kept: list[CutSet] = []
    for cut in sorted(set(cut_sets), key=cut_set_key):
        if not any(k <= cut for k in kept):
            kept.append(cut)
    return kept


def minimal_cut_sets(tree: FaultTree | Gate) -> list[CutSet]:
    """MOCUS expansion followed by absorption.

    Each row holds the basic events collected so far plus the gates still to
    expand. An OR gate splits its row into one row per child, an AND gate
    pushes all its children onto the same row.
    """
    root = tree.root if isinstance(tree, FaultTree) else tree
    done: set[CutSet] = set()
    rows: list[tuple[frozenset[Basic], tuple[Gate, ...]]] = [(frozenset(), (root,))]
    seen = set()
    while rows:
        basics, pending = rows.pop()
        if not pending:
            done.add(basics)
            continue
        gate, rest = pending[0], pending[1:]
        if isinstance(gate, Basic):
            nxt = [(basics | {gate}, rest)]
        elif isinstance(gate, And):
            nxt = [(basics, tuple(gate.children) + rest)]
        elif isinstance(gate, Or):
            nxt = [(basics, (child,) + rest) for child in gate.children]
        else:
            raise TypeError(f"not a fault tree gate: {gate!r}")
        for row in nxt:
            if row not in seen:
                seen.add(row)
                rows.append(row)
    return minimize(done)


def template_fsr_text(failure_mode: str, component: str, goals: list[SafetyGoal]) -> str:
    if len(goals) == 1:
        target = goals[0].text
    else:
        target = "safety goals " + ", ".join(g.id for g in goals)
    return f"A failure ({failure_mode.replace('_', ' ')}) in {component} shall not lead to violation of {target}"


def derive_fsrs(
    goals: Iterable[SafetyGoal],
    trees: Iterable[FaultTree],
    annotations: Iterable[FsrAnnotation] | Mapping[tuple[str, str], FsrAnnotation],
    base_of: Callable[[str], str] | Mapping[str, str] | None = None,
) -> list[Fsr]:
    """One FSR per (perspective, component, failure mode) found in any minimal cut set.

    Source goals accumulate across trees; the FSR ASIL is the maximum over
    them. ``base_of`` maps a component to the functional component its FSRs
    are grouped under (defaults to the component itself).
    """
    goal_index = {g.id: g for g in goals}
    if isinstance(annotations, Mapping):
        notes = dict(annotations)
    else:
        notes = {a.key: a for a in annotations}
    if base_of is None:
        group_of = lambda c: c  # noqa: E731
    elif isinstance(base_of, Mapping):
        group_of = lambda c: base_of.get(c, c)  # noqa: E731
    else:
        group_of = base_of

    by_goal: dict[str, list[FaultTree]] = defaultdict(list)
    problems = []
    for tree in trees:
        if tree.goal not in goal_index:
            problems.append(error("UNKNOWN_GOAL", f"fault tree refers to unknown goal {tree.goal!r}", entity=tree.goal))
            continue
        by_goal[tree.goal].append(tree)
    for gid in sorted(goal_index):
        if not by_goal.get(gid):
            problems.append(error("MISSING_TREE", f"safety goal {gid!r} has no fault tree", entity=gid))
    if problems:
        raise FtaError(problems)

    sources: dict[tuple[Perspective, Basic], set[str]] = defaultdict(set)
    for gid in sorted(by_goal):
        goal = goal_index[gid]
        for tree in by_goal[gid]:
            for cut in minimal_cut_sets(tree):
                for basic in cut:
                    sources[(goal.perspective, basic)].add(gid)

    missing = sorted({b for _, b in sources if (b.component, b.failure_mode) not in notes})
    if missing:
        raise FtaError(
            [error("MISSING_ANNOTATION", f"basic event {b.component} {b.failure_mode} has no fsr_annotation", entity=b.key) for b in missing]
        )

    collisions = defaultdict(set)
    for perspective, basic in sources:
        collisions[basic].add(perspective)

    fsrs = []
    for (perspective, basic), gids in sources.items():
        note = notes[(basic.component, basic.failure_mode)]
        src = sorted((goal_index[g] for g in gids), key=lambda g: g.id)
        fid = basic.key
        if len(collisions[basic]) > 1:
            fid = f"{fid}.{perspective.value}"
        fsrs.append(
            Fsr(
                id=fid,
                text=note.text or template_fsr_text(basic.failure_mode, basic.component, src),
                components=(basic.component,),
                perspective=perspective,
                source_goals=tuple(g.id for g in src),
                asil=max_asil(g.asil for g in src),
                trigger=note.trigger,
                response_class=note.response,
                requirement=note.requirement,
                failure_mode=basic.failure_mode,
                group=group_of(basic.component),
                draft=not note.text,
                conflicts_with=note.conflicts_with,
            )
        )
    return sorted(fsrs, key=lambda f: f.id)


def overlapping_fsrs(fsrs: Iterable[Fsr]) -> list[tuple[str, str]]:
    """FSR id pairs that are the same obligation derived from both perspectives."""
    seen: dict[tuple, list[Fsr]] = defaultdict(list)
    for f in fsrs:
        seen[(f.components, f.failure_mode, f.requirement)].append(f)
    pairs = []
    for group in seen.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                if a.perspective is not b.perspective:
                    pairs.append(tuple(sorted((a.id, b.id))))
    return sorted(pairs)
