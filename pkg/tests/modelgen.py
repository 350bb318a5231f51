"""Hypothesis strategy producing arbitrary valid models as DSL text.

The generator decides everything structurally (components, functions,
feasibility, ratings, merge groups, trees, annotations, tactics) and then
renders it as model source, so every generated example also exercises
the parser and validator.
"""

from __future__ import annotations

from dataclasses import dataclass

from hypothesis import strategies as st

from coop_safety.model import GuideWord

TRIGGERS = ("control-failure", "perception-failure", "communication-failure")
RESPONSES = ("emit-fault-message", "suppress-all-messages", "contain-failure", "reject-invalid-data")
CAPABILITIES = (
    "plausibility-check", "runtime-monitoring", "liveness-monitoring", "failure-masking",
    "diverse-channel", "output-comparison", "complexity-reduction", "safe-state-override",
)
TACTICS = (
    "sanity_check", "condition_monitoring", "heartbeat", "diverse_redundancy",
    "comparison", "simplicity", "override", "barrier",
)
FAILURE_MODES = ("loss", "stuck", "corrupt")
PERSPECTIVES = ("vehicular", "cooperative")


@dataclass(frozen=True)
class Generated:
    text: str
    statements: int


def _subset(draw, pool, min_size=0, max_size=None):
    return draw(st.lists(st.sampled_from(pool), min_size=min_size, max_size=max_size, unique=True))


def _tree(draw, pool, depth=0):
    if depth >= 3 or draw(st.integers(0, 9)) < 4:
        comp, fm = draw(st.sampled_from(pool))
        return f"basic {comp} {fm};", {(comp, fm)}
    kind = draw(st.sampled_from(("and", "or")))
    parts, used = [], set()
    for _ in range(draw(st.integers(1, 3))):
        text, u = _tree(draw, pool, depth + 1)
        parts.append(text)
        used |= u
    return f"{kind} {{ {' '.join(parts)} }}", used


@st.composite
def models(draw) -> Generated:
    out: list[str] = []

    vehicle = [f"v{i}" for i in range(draw(st.integers(1, 4)))]
    coop = [(f"p{i}", draw(st.sampled_from(vehicle))) for i in range(draw(st.integers(0, 3)))]
    out.append("item car { kind vehicle; " + " ".join(f"component {c};" for c in vehicle) + " }")
    if coop:
        out.append("item team { kind cooperative; "
                   + " ".join(f"component {c} {{ ref {r}; }}" for c, r in coop) + " }")

    functions = {"vehicular": [], "cooperative": []}
    hazards = {"vehicular": [], "cooperative": []}
    for persp, count in (("vehicular", draw(st.integers(0, 3))), ("cooperative", draw(st.integers(0, 2)) if coop else 0)):
        for i in range(count):
            fid = f"{persp[0]}f{i}"
            words = _subset(draw, [g.value for g in GuideWord], max_size=3)
            functions[persp].append(fid)
            hazards[persp] += [f"{fid}.{w}" for w in words]
            gw = f" guide_words {' '.join(words)};" if words else ""
            out.append(f'function {fid} "perform function {fid}" {{ perspective {persp};{gw} }}')

    modes, sits = {}, {}
    for persp in PERSPECTIVES:
        modes[persp] = [f"{persp[0]}m{i}" for i in range(draw(st.integers(1, 3)))]
        sits[persp] = [f"{persp[0]}s{i}" for i in range(draw(st.integers(1, 2)))]
        out += [f"mode {m} {persp};" for m in modes[persp]]
        out += [f"situation {s} {persp};" for s in sits[persp]]

    feasible = {}
    for persp in PERSPECTIVES:
        default = draw(st.booleans())
        out.append(f"feasibility_default {'feasible' if default else 'infeasible'} {persp};")
        flip = set()
        for h in hazards[persp]:
            if draw(st.booleans()):
                m = draw(st.sampled_from(modes[persp] + ["*"]))
                flip.add((h, m))
        word = "infeasible" if default else "feasible"
        out += [f"{word} {h} {m} *;" for h, m in sorted(flip)]
        for h in hazards[persp]:
            for m in modes[persp]:
                hit = (h, "*") in flip or (h, m) in flip
                for s in sits[persp]:
                    feasible[(h, m, s)] = default != hit

    sec = st.tuples(st.integers(0, 3), st.integers(0, 4), st.integers(0, 3))
    s, e, c = draw(sec)
    out.append(f"event_rating * * * S{s} E{e} C{c};")
    for persp in PERSPECTIVES:
        for h in hazards[persp]:
            if draw(st.booleans()):
                s, e, c = draw(sec)
                out.append(f"event_rating {h} * * S{s} E{e} C{c};")
            if draw(st.booleans()):
                m = draw(st.sampled_from(modes[persp]))
                s, e, c = draw(sec)
                out.append(f"event_rating {h} {m} * S{s} E{e} C{c};")

    goals = {}
    for persp in PERSPECTIVES:
        live = [h for h in hazards[persp] if any(feasible.get((h, m, s)) for m in modes[persp] for s in sits[persp])]
        taken = set()
        for i in range(draw(st.integers(0, 2))):
            free = [h for h in live if h not in taken]
            if not free:
                break
            chosen = _subset(draw, free, min_size=1, max_size=3)
            taken.update(chosen)
            gid = f"{persp[0].upper()}G{i}"
            goals[gid] = persp
            out.append(f'merge_goal {gid} "goal {gid}" {{ hazards {" ".join(chosen)}; }}')
        for h in hazards[persp]:
            if h in taken:
                continue
            for m in modes[persp]:
                for s in sits[persp]:
                    if feasible[(h, m, s)]:
                        goals[f"SG.{h}@{m}@{s}"] = persp

    used = set()
    for gid in sorted(goals):
        comps = vehicle if goals[gid] == "vehicular" else vehicle + [c for c, _ in coop]
        pool = [(comp, fm) for comp in comps for fm in FAILURE_MODES]
        text, u = _tree(draw, pool)
        used |= u
        out.append(f"tree for {gid} {{ {text} }}")

    for comp, fm in sorted(used):
        lines = [f"trigger {draw(st.sampled_from(TRIGGERS))};", f"response {draw(st.sampled_from(RESPONSES))};"]
        for _ in range(draw(st.integers(1, 2))):
            lines.append("requires " + " ".join(_subset(draw, CAPABILITIES, 1, 2)) + ";")
        out.append(f"fsr_annotation {comp} {fm} {{ {' '.join(lines)} }}")

    mechanism = draw(st.booleans())
    if mechanism:
        tactics = _subset(draw, TACTICS, 1, 2)
        out.append("tech_component mech { mechanism; "
                   + " ".join(f"implements_tactic {t};" for t in tactics) + " }")
    for comp in vehicle:
        if draw(st.booleans()):
            tactics = _subset(draw, TACTICS, 0, 3)
            link = " linked mech;" if mechanism and draw(st.booleans()) else ""
            out.append(f"tech_component tc_{comp} {{ realizes {comp};{link} "
                       + " ".join(f"implements_tactic {t};" for t in tactics) + " }")

    return Generated("\n".join(out) + "\n", len(out))
