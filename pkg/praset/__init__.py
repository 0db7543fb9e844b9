"""
praset - preferred answer sets of prioritized extended logic programs,
selected through argumentation structures, attacks and blocked derivations.
"""

__version__ = "0.1.0"

from praset.attacks import PreferenceSolver, preferred_answer_sets
from praset.lang import parse_program
from praset.semantics import answer_sets

__all__ = ["PreferenceSolver", "__version__", "answer_sets", "parse_program", "preferred_answer_sets"]
