"""
Serialization of solver results: run reports, explanations and the attack
graph in DOT form. Everything here is deterministic for a given program.
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import networkx as nx

from praset.attacks.closure import AttackDerivation
from praset.attacks.solver import PreferenceSolver, Verdict
from praset.error_handling import UnknownAnswerSet
from praset.lang.syntax import PrioritizedProgram, obj
from praset.semantics import AnswerSet
from praset.structures.argument import complete_structure

SCHEMA_VERSION = 1


def program_digest(program: PrioritizedProgram) -> str:
    return hashlib.sha256(program.render().encode("utf-8")).hexdigest()


def _blocker_summary(blocker: Optional[AttackDerivation]) -> Optional[Dict[str, Any]]:
    if blocker is None:
        return None
    return {
        "attacker": blocker.final.attacker.render(),
        "rules": blocker.tags,
        "steps": len(blocker.steps),
    }


def _verdict_summary(solver: PreferenceSolver, verdict: Verdict) -> Dict[str, Any]:
    return {
        "generating_set": verdict.derivation.generating_set.render(solver.program),
        "steps": [s.describe() for s in verdict.derivation.steps],
        "blocked": verdict.blocked,
        "blocker": _blocker_summary(verdict.blocker),
    }


@dataclass
class RunReport:
    digest: str
    answer_sets: List[str]
    preferred: List[str]
    derivations: Dict[str, List[Dict[str, Any]]]
    closure: Dict[str, Any]
    structures: int
    timing: Optional[Dict[str, Any]] = field(default=None)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "schema": SCHEMA_VERSION,
            "program": self.digest,
            "answer_sets": self.answer_sets,
            "preferred": self.preferred,
            "derivations": self.derivations,
            "closure": self.closure,
            "structures": self.structures,
        }
        if self.timing is not None:
            data["timing"] = self.timing
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def build_run_report(solver: PreferenceSolver, total: bool = False,
                     timing: Optional[Dict[str, Any]] = None) -> RunReport:
    preferred = solver.preferred_answer_sets()
    closure = solver.closure
    return RunReport(
        digest=program_digest(solver.program),
        answer_sets=[s.render(total) for s in solver.answer_sets],
        preferred=[s.render(total) for s in preferred],
        derivations={
            s.render(total): [_verdict_summary(solver, v) for v in solver.verdicts(s)]
            for s in solver.answer_sets
        },
        closure={
            "stable": closure.stable,
            "definite": len(closure.lower),
            "possible": len(closure.upper),
            "rounds": closure.rounds,
        },
        structures=len(solver.universe),
        timing=timing,
    )


def render_text(report: RunReport) -> str:
    count = len(report.answer_sets)
    lines = [f"{count} answer set{'' if count == 1 else 's'}"]
    for i, rendered in enumerate(report.answer_sets, start=1):
        mark = "preferred" if rendered in report.preferred else "blocked"
        lines.append(f"  {i}: {rendered}  {mark}")
    if count:
        lines.append("preferred: " + (", ".join(report.preferred) or "none"))
    if not report.closure["stable"]:
        lines.append(
            f"note: attack closure unstable ({report.closure['definite']} definite, "
            f"{report.closure['possible']} possible)"
        )
    if report.timing is not None:
        lines.append("timing: " + ", ".join(f"{k}={v}" for k, v in sorted(report.timing.items())))
    return "\n".join(lines)


def select_answer_set(solver: PreferenceSolver, selector: str) -> AnswerSet:
    """Resolve a 1-based index or a literal list such as ``"a,-b"``.

    Raises:
        UnknownAnswerSet: If nothing matches
    """
    answer_sets = solver.answer_sets
    text = selector.strip()
    if text.isdigit():
        index = int(text)
        if 1 <= index <= len(answer_sets):
            return answer_sets[index - 1]
        raise UnknownAnswerSet(selector)
    names = [part.strip() for part in text.strip("{}").split(",") if part.strip()]
    try:
        wanted = frozenset(obj(name) for name in names)
    except ValueError:
        raise UnknownAnswerSet(selector)
    for answer_set in answer_sets:
        if answer_set.positive == wanted:
            return answer_set
    raise UnknownAnswerSet(selector)


def explain(solver: PreferenceSolver, answer_set: AnswerSet) -> str:
    """Derivations of the complete structure of S with their blocking verdicts."""
    index = solver.answer_sets.index(answer_set) + 1
    preferred = solver.is_preferred(answer_set)
    lines = [
        f"answer set {index}: {answer_set.render()}  {'preferred' if preferred else 'not preferred'}",
        f"complete structure: {complete_structure(answer_set).render()}",
    ]
    for i, verdict in enumerate(solver.verdicts(answer_set), start=1):
        generating = verdict.derivation.generating_set.render(solver.program)
        lines.append("")
        lines.append(f"derivation {i} via {generating}: {'blocked' if verdict.blocked else 'warranted'}")
        lines.extend("  " + line for line in verdict.derivation.render())
        if verdict.blocked:
            attacker = verdict.blocker.final.attacker
            lines.append(f"  blocked by complete {attacker.render()} (shortest attack chain):")
            lines.extend("    " + line for line in verdict.blocker.render())
    return "\n".join(lines)


def attack_graph(solver: PreferenceSolver) -> nx.DiGraph:
    """Structures involved in some possible attack; edges styled by certainty."""
    universe = solver.universe
    closure = solver.closure
    graph = nx.DiGraph()
    for first, second in sorted(closure.upper):
        for index in (first, second):
            if index not in graph:
                graph.add_node(
                    universe.label(index),
                    label=universe[index].render(),
                    complete=universe.is_complete(index),
                )
        definite = (first, second) in closure.lower
        graph.add_edge(
            universe.label(first),
            universe.label(second),
            style="solid" if definite else "dashed",
            rule=closure.provenance[(first, second)].rule.value if definite else "",
        )
    return graph


def _quote(value: Any) -> str:
    return '"' + str(value).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: nx.DiGraph, name: str = "attacks") -> str:
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for node, data in sorted(graph.nodes(data=True)):
        shape = ", peripheries=2" if data.get("complete") else ""
        lines.append(f"  {_quote(node)} [label={_quote(data.get('label', node))}{shape}];")
    for first, second, data in sorted(graph.edges(data=True), key=lambda e: (e[0], e[1])):
        attributes = f"style={data.get('style', 'solid')}"
        if data.get("rule"):
            attributes += f", label={_quote(data['rule'])}"
        lines.append(f"  {_quote(first)} -> {_quote(second)} [{attributes}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
