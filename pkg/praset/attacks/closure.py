"""
Attacks between argumentation structures.

Basic attacks come from a strictly more preferred rule contradicting a less
preferred one. Q1-Q6 carry them across unfolding, unions and assumption
extensions. Their negative premises ("is not attacked", "does not attack")
are evaluated by an alternating fixpoint: each closure round tests them
against the attacks of the previous round, the lower bound is what every
round agrees on, the upper bound is what some round allows.
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from praset.error_handling import ResourceLimit
from praset.lang.preferences import Order, validate_preferences
from praset.lang.syntax import PrioritizedProgram
from praset.structures.argument import ArgStructure, contradicts
from praset.structures.universe import StructureUniverse
from praset.utils.logger import logger

Pair = Tuple[int, int]


class AttackRule(Enum):
    BASIC = "Basic"
    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"
    Q4 = "Q4"
    Q5 = "Q5"
    Q6 = "Q6"


@dataclass(frozen=True)
class Attack:
    attacker: ArgStructure
    attacked: ArgStructure

    def render(self) -> str:
        return f"({self.attacker.render()}, {self.attacked.render()})"


@dataclass(frozen=True)
class Provenance:
    rule: AttackRule
    premise: Optional[Pair] = None
    partner: Optional[int] = None


@dataclass(frozen=True)
class AttackStep:
    attack: Attack
    rule: AttackRule
    premise: Optional[int] = None
    partner: Optional[ArgStructure] = None

    def describe(self) -> str:
        if self.rule is AttackRule.BASIC:
            return "Basic"
        text = f"{self.rule.value}({self.premise + 1}"
        if self.partner is not None:
            text += f", {self.partner.render()}"
        return text + ")"


@dataclass(frozen=True)
class AttackDerivation:
    steps: Tuple[AttackStep, ...]

    @property
    def final(self) -> Attack:
        return self.steps[-1].attack

    @property
    def tags(self) -> List[str]:
        return [step.rule.value for step in self.steps]

    def render(self) -> List[str]:
        return [f"{i + 1}. {step.attack.render()}  [{step.describe()}]" for i, step in enumerate(self.steps)]


@dataclass
class AttackClosure:
    """Lower (definite) and upper (possible) attack sets over a universe."""
    universe: StructureUniverse
    basic: FrozenSet[Pair]
    lower: FrozenSet[Pair]
    upper: FrozenSet[Pair]
    provenance: Dict[Pair, Provenance] = field(default_factory=dict)
    rounds: int = 0

    @property
    def stable(self) -> bool:
        return self.lower == self.upper

    @property
    def definite(self) -> FrozenSet[Attack]:
        return frozenset(self.attack(p) for p in self.lower)

    @property
    def possible(self) -> FrozenSet[Attack]:
        return frozenset(self.attack(p) for p in self.upper)

    def attack(self, pair: Pair) -> Attack:
        return Attack(self.universe[pair[0]], self.universe[pair[1]])

    def pair_of(self, attack: Attack) -> Optional[Pair]:
        first = self.universe.id_of(attack.attacker)
        second = self.universe.id_of(attack.attacked)
        if first is None or second is None:
            return None
        return first, second

    def is_definite(self, attack: Attack) -> bool:
        return self.pair_of(attack) in self.lower

    def derivation(self, pair: Pair, provenance: Optional[Dict[Pair, Provenance]] = None) -> AttackDerivation:
        """Follow the provenance of ``pair`` back to its basic attack."""
        provenance = provenance or self.provenance
        chain = []
        current: Optional[Pair] = pair
        while current is not None:
            chain.append((current, provenance[current]))
            current = provenance[current].premise
        chain.reverse()
        steps = []
        for i, (p, origin) in enumerate(chain):
            partner = None if origin.partner is None else self.universe[origin.partner]
            steps.append(AttackStep(self.attack(p), origin.rule, None if i == 0 else i - 1, partner))
        return AttackDerivation(tuple(steps))

    def close(self, restrict: Optional[Set[int]] = None) -> Tuple[FrozenSet[Pair], Dict[Pair, Provenance]]:
        """Closure whose attacked side stays inside ``restrict``, negatives read from the upper bound."""
        return _close(self.universe, self.basic, self.upper, restrict)


def basic_attack_pairs(program: PrioritizedProgram, universe: StructureUniverse,
                       order: Optional[Order] = None) -> FrozenSet[Pair]:
    order = validate_preferences(program) if order is None else order
    found = set()
    for first, first_rules in sorted(universe.basic_rules.items()):
        for second, second_rules in sorted(universe.basic_rules.items()):
            if not contradicts(universe[first], universe[second]):
                continue
            if any((less, more) in order for more in first_rules for less in second_rules):
                found.add((first, second))
    return frozenset(found)


def basic_attacks(program: PrioritizedProgram, universe: StructureUniverse) -> FrozenSet[Attack]:
    """(A_r1, A_r2) for r2 ≺ r1 whenever A_r1 contradicts A_r2."""
    return frozenset(Attack(universe[a], universe[b]) for a, b in basic_attack_pairs(program, universe))


def _close(universe: StructureUniverse, seeds: Iterable[Pair], neg: Optional[FrozenSet[Pair]],
           restrict: Optional[Set[int]] = None) -> Tuple[FrozenSet[Pair], Dict[Pair, Provenance]]:
    """Close ``seeds`` under Q1-Q6; ``neg`` answers the negative premises (None ignores them)."""
    attacked = None if neg is None else {b for _, b in neg}
    found: Dict[Pair, Provenance] = {}
    queue = deque()

    def admit(pair: Pair, origin: Provenance) -> None:
        if pair in found:
            return
        if restrict is not None and pair[1] not in restrict:
            return
        if len(found) >= universe.limit:
            raise ResourceLimit(universe.limit, what="attacks")
        found[pair] = origin
        queue.append(pair)

    def not_attacked(index: int) -> bool:
        return attacked is None or index not in attacked

    def no_attack(first: int, second: int) -> bool:
        return neg is None or (first, second) not in neg

    for pair in sorted(seeds):
        admit(pair, Provenance(AttackRule.BASIC))

    while queue:
        a1, a2 = premise = queue.popleft()
        for a3, result in universe.unfold_partners(a2):
            if no_attack(a3, a1):
                admit((a1, result), Provenance(AttackRule.Q1, premise, a3))
        for a3, result in universe.unfold_partners(a1):
            if not_attacked(a3):
                admit((result, a2), Provenance(AttackRule.Q2, premise, a3))
        if universe[a1].condition_free:
            for a3, result in universe.union_partners(a1):
                if not_attacked(a3):
                    admit((result, a2), Provenance(AttackRule.Q3, premise, a3))
            for result in universe.extensions(a1):
                admit((result, a2), Provenance(AttackRule.Q5, premise))
        if universe[a2].condition_free:
            for a3, result in universe.union_partners(a2):
                if no_attack(a3, a1):
                    admit((a1, result), Provenance(AttackRule.Q4, premise, a3))
            for result in universe.extensions(a2):
                admit((a1, result), Provenance(AttackRule.Q6, premise))
    return frozenset(found), found


def attack_closure(program: PrioritizedProgram, universe: StructureUniverse,
                   order: Optional[Order] = None) -> AttackClosure:
    """Alternating fixpoint of the Q1-Q6 closure.

    Raises:
        ResourceLimit: If more attacks than the structure limit are derived
    """
    seeds = basic_attack_pairs(program, universe, order)
    upper, _ = _close(universe, seeds, None)
    rounds = 0
    while True:
        rounds += 1
        lower, provenance = _close(universe, seeds, upper)
        next_upper, _ = _close(universe, seeds, lower)
        if next_upper == upper:
            break
        upper = next_upper

    closure = AttackClosure(universe, seeds, lower, upper, provenance, rounds)
    logger.debug(f"attack closure: {len(lower)} definite, {len(upper)} possible, {rounds} rounds")
    if not closure.stable:
        logger.warning(f"attack closure unstable: {len(upper - lower)} attacks only possible")
    return closure


def replay_attack_derivation(closure: AttackClosure, derivation: AttackDerivation) -> bool:
    """Re-check every step against the universe and the closure's negative premises."""
    universe = closure.universe
    attacked = {b for _, b in closure.upper}
    pairs: List[Pair] = []
    for i, step in enumerate(derivation.steps):
        pair = closure.pair_of(step.attack)
        if pair is None:
            return False
        if step.rule is AttackRule.BASIC:
            if pair not in closure.basic:
                return False
            pairs.append(pair)
            continue
        if step.premise is None or not 0 <= step.premise < i:
            return False
        a1, a2 = pairs[step.premise]
        a3 = None if step.partner is None else universe.id_of(step.partner)
        if not _replays(universe, step.rule, (a1, a2), a3, pair, closure.upper, attacked):
            return False
        pairs.append(pair)
    return True


def _replays(universe: StructureUniverse, rule: AttackRule, premise: Pair, a3: Optional[int],
             pair: Pair, upper: FrozenSet[Pair], attacked: Set[int]) -> bool:
    a1, a2 = premise
    if rule is AttackRule.Q1:
        return (a3, pair[1]) in universe.unfold_partners(a2) and pair[0] == a1 and (a3, a1) not in upper
    if rule is AttackRule.Q2:
        return (a3, pair[0]) in universe.unfold_partners(a1) and pair[1] == a2 and a3 not in attacked
    if rule is AttackRule.Q3:
        return (universe[a1].condition_free and (a3, pair[0]) in universe.union_partners(a1)
                and pair[1] == a2 and a3 not in attacked)
    if rule is AttackRule.Q4:
        return (universe[a2].condition_free and (a3, pair[1]) in universe.union_partners(a2)
                and pair[0] == a1 and (a3, a1) not in upper)
    if rule is AttackRule.Q5:
        return pair[0] in universe.extensions(a1) and pair[1] == a2
    if rule is AttackRule.Q6:
        return pair[1] in universe.extensions(a2) and pair[0] == a1
    return False
