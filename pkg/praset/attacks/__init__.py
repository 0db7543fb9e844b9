"""Attacks, their closure under Q1-Q6, blocking and preferred answer sets."""

from praset.attacks.closure import (
    Attack,
    AttackClosure,
    AttackDerivation,
    AttackRule,
    AttackStep,
    attack_closure,
    basic_attacks,
    replay_attack_derivation,
)
from praset.attacks.solver import (
    PreferenceSolver,
    Verdict,
    is_blocked,
    is_warranted,
    preferred_answer_sets,
)

__all__ = [
    "Attack",
    "AttackClosure",
    "AttackDerivation",
    "AttackRule",
    "AttackStep",
    "PreferenceSolver",
    "Verdict",
    "attack_closure",
    "basic_attacks",
    "is_blocked",
    "is_warranted",
    "preferred_answer_sets",
    "replay_attack_derivation",
]
