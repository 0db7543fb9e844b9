"""
Blocking, warrant and preferred answer sets.

A derivation σ is blocked when some attack derivation, whose attacked side
stays among the members of σ at every step, ends in an attack of a complete
structure against the final structure of σ. An answer set is preferred when
its complete structure has a derivation that is not blocked.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Optional
import time

from praset.error_handling import PreconditionViolation
from praset.lang.preferences import validate_preferences
from praset.lang.syntax import PrioritizedProgram
from praset.semantics import AnswerSet, answer_sets
from praset.structures.argument import ArgStructure, StructureBuilder, complete_structure
from praset.structures.derivation import Derivation, canonical_derivations
from praset.structures.universe import StructureUniverse, saturate
from praset.attacks.closure import AttackClosure, AttackDerivation, attack_closure
from praset.utils.logger import logger


@dataclass(frozen=True)
class Verdict:
    """Blocking verdict for one derivation."""
    derivation: Derivation
    blocker: Optional[AttackDerivation] = None

    @property
    def blocked(self) -> bool:
        return self.blocker is not None


class PreferenceSolver:
    """Computes and caches everything needed to select preferred answer sets.

    Args:
        program: The prioritized program
        limit: Cap on structures and attacks (None for the default)
        widen: Test every sufficient generating set, not only minimal ones

    Raises:
        UnknownRuleInPrefer: If a preference names a missing rule
        PreferenceCycle: If the preferences are cyclic
    """

    def __init__(self, program: PrioritizedProgram, limit: Optional[int] = None, widen: bool = False):
        self.program = program
        self.limit = limit
        self.widen = widen
        self.order = validate_preferences(program)
        self.builder = StructureBuilder(program)
        self._verdicts: Dict[AnswerSet, List[Verdict]] = {}

    @cached_property
    def answer_sets(self) -> List[AnswerSet]:
        return answer_sets(self.program)

    @cached_property
    def universe(self) -> StructureUniverse:
        return saturate(self.program, self.limit, self.answer_sets, self.builder)

    @cached_property
    def closure(self) -> AttackClosure:
        return attack_closure(self.program, self.universe, self.order)

    def warm(self, clock: Callable[[], float] = time.perf_counter) -> Dict[str, float]:
        """Compute every cached phase in order; returns the clock reading after each."""
        stamps = {}
        for phase, run in (
            ("answer_sets", lambda: self.answer_sets),
            ("saturate", lambda: self.universe),
            ("closure", lambda: self.closure),
            ("preferred", self.preferred_answer_sets),
        ):
            run()
            stamps[phase] = clock()
        return stamps

    def derivations(self, answer_set: AnswerSet) -> List[Derivation]:
        return canonical_derivations(self.program, answer_set, self.widen, self.builder)

    def blocking_derivation(self, derivation: Derivation) -> Optional[AttackDerivation]:
        """The shortest attack derivation that blocks ``derivation``, if any."""
        universe = self.universe
        final = universe.id_of(derivation.final)
        if final is None:
            return None
        members = {i for i in (universe.id_of(s) for s in derivation.structures) if i is not None}
        pairs, provenance = self.closure.close(restrict=members)
        blockers = sorted(p for p in pairs if p[1] == final and universe.is_complete(p[0]))
        if not blockers:
            return None
        chains = [self.closure.derivation(pair, provenance) for pair in blockers]
        return min(chains, key=lambda chain: len(chain.steps))

    def is_blocked(self, derivation: Derivation) -> bool:
        return self.blocking_derivation(derivation) is not None

    def verdicts(self, answer_set: AnswerSet) -> List[Verdict]:
        if answer_set not in self._verdicts:
            found = []
            for derivation in self.derivations(answer_set):
                blocker = self.blocking_derivation(derivation)
                logger.debug(
                    f"{answer_set} via {derivation.generating_set.render(self.program)}: "
                    f"{'blocked' if blocker else 'warranted'}"
                )
                found.append(Verdict(derivation, blocker))
            self._verdicts[answer_set] = found
        return self._verdicts[answer_set]

    def is_preferred(self, answer_set: AnswerSet) -> bool:
        return any(not v.blocked for v in self.verdicts(answer_set))

    def is_warranted(self, structure: ArgStructure) -> bool:
        """Some canonical derivation of the complete ``structure`` is not blocked.

        Raises:
            PreconditionViolation: If ``structure`` is not complete
        """
        if not self.builder.is_complete(structure):
            raise PreconditionViolation(
                "warrant is defined for complete structures",
                details={"structure": structure.render()}
            )
        for answer_set in self.answer_sets:
            if complete_structure(answer_set) == structure:
                return self.is_preferred(answer_set)
        return False

    def preferred_answer_sets(self) -> List[AnswerSet]:
        preferred = [s for s in self.answer_sets if self.is_preferred(s)]
        if self.answer_sets and not preferred:
            logger.warning(f"no preferred answer set among {len(self.answer_sets)}")
        return preferred


def is_blocked(program: PrioritizedProgram, derivation: Derivation,
               solver: Optional[PreferenceSolver] = None) -> bool:
    solver = solver or PreferenceSolver(program)
    return solver.is_blocked(derivation)


def is_warranted(program: PrioritizedProgram, structure: ArgStructure, widen: bool = False) -> bool:
    return PreferenceSolver(program, widen=widen).is_warranted(structure)


def preferred_answer_sets(program: PrioritizedProgram, limit: Optional[int] = None,
                          widen: bool = False) -> List[AnswerSet]:
    return PreferenceSolver(program, limit, widen).preferred_answer_sets()
