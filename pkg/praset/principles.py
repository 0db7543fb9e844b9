"""
Rule-set attack, warranted generating sets and checkers for the
preference principles.

Both the checked generating sets R and the attacking sets Q range over the
minimal generating sets of the answer sets.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from praset.attacks.solver import PreferenceSolver
from praset.lang.preferences import Order, validate_preferences
from praset.lang.syntax import PrioritizedProgram
from praset.semantics import AnswerSet, GeneratingSet, minimal_generating_sets
from praset.utils.logger import logger


class Principle(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    THEOREM = "Theorem"


class Outcome(Enum):
    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


@dataclass(frozen=True)
class PrincipleReport:
    principle: Principle
    program: str
    verdict: Outcome
    witness: Dict[str, Any] = field(default_factory=dict)
    generating_sets: str = "minimal"

    @property
    def failed(self) -> bool:
        return self.verdict is Outcome.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "principle": self.principle.value,
            "program": self.program,
            "verdict": self.verdict.value,
            "generating_sets": self.generating_sets,
            "witness": self.witness,
        }

    def render(self) -> str:
        line = f"{self.program}  principle {self.principle.value}: {self.verdict.value}"
        if self.witness:
            line += "  " + "; ".join(f"{k}={_flat(v)}" for k, v in sorted(self.witness.items()))
        return line


def _flat(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    return str(value)


def rule_set_attacks(program: PrioritizedProgram, first: GeneratingSet, second: GeneratingSet,
                     order: Optional[Order] = None) -> bool:
    """Some r1 in ``first`` and r2 in ``second`` with r2 ≺ r1 and not head(r1) in body⁻(r2)."""
    order = validate_preferences(program) if order is None else order
    for name1 in sorted(first.rules):
        head = program.rule(name1).head.default()
        for name2 in sorted(second.rules):
            if (name2, name1) in order and head in program.rule(name2).negative_body:
                return True
    return False


class PrincipleChecker:
    """Evaluates the principles for one program, sharing one solver."""

    def __init__(self, program: PrioritizedProgram, program_id: str = "<program>",
                 solver: Optional[PreferenceSolver] = None):
        self.program = program
        self.program_id = program_id
        self.solver = solver or PreferenceSolver(program)
        self._minimal: Dict[AnswerSet, List[GeneratingSet]] = {}

    def minimal_sets(self, answer_set: AnswerSet) -> List[GeneratingSet]:
        if answer_set not in self._minimal:
            self._minimal[answer_set] = minimal_generating_sets(self.program, answer_set)
        return self._minimal[answer_set]

    def attacking_pool(self) -> List[GeneratingSet]:
        pool = []
        for answer_set in self.solver.answer_sets:
            pool.extend(self.minimal_sets(answer_set))
        return pool

    def attackers(self, target: GeneratingSet) -> List[GeneratingSet]:
        return [q for q in self.attacking_pool()
                if rule_set_attacks(self.program, q, target, self.solver.order)]

    def is_warranted_rule_set(self, target: GeneratingSet) -> bool:
        return not self.attackers(target)

    def _report(self, principle: Principle, failed: bool, witness: Optional[Dict[str, Any]] = None) -> PrincipleReport:
        verdict = Outcome.FAIL if failed else Outcome.PASS
        if failed:
            logger.warning(f"{self.program_id}: principle {principle.value} fails")
        return PrincipleReport(principle, self.program_id, verdict, witness or {})

    def _names(self, generating_set: GeneratingSet) -> str:
        return generating_set.render(self.program)

    def check_theorem_subset(self) -> PrincipleReport:
        answer_sets = set(self.solver.answer_sets)
        stray = [s for s in self.solver.preferred_answer_sets() if s not in answer_sets]
        if stray:
            return self._report(Principle.THEOREM, True, {"not_answer_sets": [s.render() for s in stray]})
        return self._report(Principle.THEOREM, False)

    def check_principle_III(self) -> PrincipleReport:
        answer_sets = self.solver.answer_sets
        if not answer_sets:
            return self._report(Principle.III, False, {"answer_sets": 0})
        preferred = self.solver.preferred_answer_sets()
        if not preferred:
            return self._report(Principle.III, True, {"answer_sets": [s.render() for s in answer_sets]})
        return self._report(Principle.III, False, {"preferred": len(preferred)})

    def check_principle_IV(self) -> PrincipleReport:
        for answer_set in self.solver.answer_sets:
            for generating_set in self.minimal_sets(answer_set):
                if self.is_warranted_rule_set(generating_set) and not self.solver.is_preferred(answer_set):
                    return self._report(Principle.IV, True, {
                        "answer_set": answer_set.render(),
                        "generating_set": self._names(generating_set),
                    })
        return self._report(Principle.IV, False)

    def check_principle_I(self) -> PrincipleReport:
        for first, second, d1, d2 in self._decompositions():
            targets = self.minimal_sets(second)
            if not all(self._attacked_by_warranted(t) for t in targets):
                continue
            if self.solver.is_preferred(second):
                return self._report(Principle.I, True, {
                    "preferred_answer_set": second.render(),
                    "other_answer_set": first.render(),
                    "d1": d1,
                    "d2": d2,
                })
        return self._report(Principle.I, False)

    def _attacked_by_warranted(self, target: GeneratingSet) -> bool:
        return any(self.is_warranted_rule_set(q) for q in self.attackers(target))

    def _decompositions(self) -> List[Tuple[AnswerSet, AnswerSet, str, str]]:
        """(A1, A2, d1, d2) with generating sets R ∪ {d1}, R ∪ {d2} and d2 ≺ d1."""
        found = []
        answer_sets = self.solver.answer_sets
        for first in answer_sets:
            for second in answer_sets:
                if first == second:
                    continue
                for g1 in self.minimal_sets(first):
                    for g2 in self.minimal_sets(second):
                        only1, only2 = g1.rules - g2.rules, g2.rules - g1.rules
                        if len(only1) != 1 or len(only2) != 1:
                            continue
                        (d1,), (d2,) = only1, only2
                        if (d2, d1) in self.solver.order:
                            found.append((first, second, d1, d2))
        return found

    def diagnose_principle_II(self) -> List[PrincipleReport]:
        """For each rule r and preferred A of P without r whose body⁺(r) ⊄ A⁺: does A stay preferred?"""
        findings = []
        for rule in self.program.rules:
            reduced = PreferenceSolver(self.program.without(rule.name), self.solver.limit, self.solver.widen)
            for candidate in reduced.preferred_answer_sets():
                if rule.positive_body <= candidate.positive:
                    continue
                try:
                    lifted = AnswerSet.of(self.program, candidate.positive)
                except ValueError:
                    stays = False
                else:
                    stays = lifted in self.solver.answer_sets and self.solver.is_preferred(lifted)
                findings.append(PrincipleReport(Principle.II, self.program_id, Outcome.INFO, {
                    "rule": rule.name,
                    "answer_set": candidate.render(),
                    "stays_preferred": stays,
                }))
        return findings

    def check_all(self, diagnose_ii: bool = False) -> List[PrincipleReport]:
        reports = [
            self.check_principle_I(),
            self.check_principle_III(),
            self.check_principle_IV(),
            self.check_theorem_subset(),
        ]
        if diagnose_ii:
            reports.extend(self.diagnose_principle_II())
        return reports


def is_warranted_rule_set(program: PrioritizedProgram, generating_set: GeneratingSet) -> bool:
    return PrincipleChecker(program).is_warranted_rule_set(generating_set)


def check_principle_I(program: PrioritizedProgram, program_id: str = "<program>") -> PrincipleReport:
    return PrincipleChecker(program, program_id).check_principle_I()


def check_principle_III(program: PrioritizedProgram, program_id: str = "<program>") -> PrincipleReport:
    return PrincipleChecker(program, program_id).check_principle_III()


def check_principle_IV(program: PrioritizedProgram, program_id: str = "<program>") -> PrincipleReport:
    return PrincipleChecker(program, program_id).check_principle_IV()


def check_theorem_subset(program: PrioritizedProgram, program_id: str = "<program>") -> PrincipleReport:
    return PrincipleChecker(program, program_id).check_theorem_subset()


def diagnose_principle_II(program: PrioritizedProgram, program_id: str = "<program>") -> List[PrincipleReport]:
    return PrincipleChecker(program, program_id).diagnose_principle_II()
