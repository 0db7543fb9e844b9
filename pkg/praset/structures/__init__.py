"""Argumentation structures, the rules R1-R3, saturation and canonical derivations."""

from praset.structures.argument import (
    ArgStructure,
    StructureBuilder,
    apply_R1,
    apply_R2,
    apply_R3,
    basic_structure,
    complete_structure,
    contradicts,
    is_complete,
)
from praset.structures.derivation import Derivation, DerivationRule, Step, canonical_derivations
from praset.structures.universe import StructureUniverse, saturate

__all__ = [
    "ArgStructure",
    "Derivation",
    "DerivationRule",
    "Step",
    "StructureBuilder",
    "StructureUniverse",
    "apply_R1",
    "apply_R2",
    "apply_R3",
    "basic_structure",
    "canonical_derivations",
    "complete_structure",
    "contradicts",
    "is_complete",
    "saturate",
]
