"""
Seeded random prioritized programs for principle checks.

Preferences are drawn over a random permutation of the rule names, each
pair pointing forward in the permutation, so the order is always acyclic.
"""

import random
from string import ascii_lowercase
from typing import List, Set, Tuple

from praset.lang.syntax import Atom, Literal, ObjectiveLiteral, PrioritizedProgram, Rule, make_program
from praset.utils.validation import InputValidator

STRONG_NEGATION_RATE = 0.2
DEFAULT_NEGATION_RATE = 0.5
MAX_ATTEMPTS = 50


def atom_names(count: int) -> List[str]:
    if count <= len(ascii_lowercase):
        return list(ascii_lowercase[:count])
    return [f"p{i}" for i in range(count)]


def _objective(rng: random.Random, atoms: List[str]) -> ObjectiveLiteral:
    return ObjectiveLiteral(Atom(rng.choice(atoms)), rng.random() < STRONG_NEGATION_RATE)


def _random_rule(rng: random.Random, name: str, atoms: List[str], max_body: int) -> Rule:
    head = _objective(rng, atoms)
    body = set()
    for _ in range(rng.randint(0, max_body)):
        body.add(Literal(_objective(rng, atoms), rng.random() < DEFAULT_NEGATION_RATE))
    return Rule(name, head, frozenset(body))


def generate_program(rng: random.Random, atoms: int, max_rules: int = 10,
                     max_body: int = 3, density: float = 0.3) -> PrioritizedProgram:
    """Draw one program with at most ``max_rules`` distinct rules over ``atoms`` atoms.

    Args:
        rng: Seeded generator; equal seeds give equal programs
        atoms: Number of atoms in the signature pool
        max_rules: Upper bound on the number of rules
        max_body: Upper bound on body literals per rule
        density: Probability of each forward preference pair

    Raises:
        ValidationError: If a bound is out of range
    """
    InputValidator.validate_range(atoms, "atoms", 1)
    InputValidator.validate_range(max_rules, "max_rules", 1)
    InputValidator.validate_range(max_body, "max_body", 0, 3)

    names = atom_names(atoms)
    rules: List[Rule] = []
    seen: Set[Tuple] = set()
    for _ in range(rng.randint(1, max_rules)):
        for _ in range(MAX_ATTEMPTS):
            rule = _random_rule(rng, f"r{len(rules) + 1}", names, max_body)
            shape = (rule.head, rule.body)
            if shape not in seen:
                seen.add(shape)
                rules.append(rule)
                break

    permutation = [r.name for r in rules]
    rng.shuffle(permutation)
    prefers = set()
    for i, less in enumerate(permutation):
        for more in permutation[i + 1:]:
            if rng.random() < density:
                prefers.add((less, more))
    return make_program(rules, prefers)


def generate_corpus(seed: int, count: int, atoms: int, max_rules: int = 10,
                    max_body: int = 3, density: float = 0.3) -> List[PrioritizedProgram]:
    rng = random.Random(seed)
    return [generate_program(rng, atoms, max_rules, max_body, density) for _ in range(count)]
