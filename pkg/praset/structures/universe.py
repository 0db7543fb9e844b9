"""
Saturation of the argumentation structures of a program.

Basic structures are closed under unfolding (R1), then every pair of
condition-free structures under union (R2). Unions inside each answer set
are built first, together with their assumption extensions (R3), so those
structures get the same ids whatever else the program holds; the unions
aligned with no answer set follow. Extensions go straight to S⁻, which is
the extension that completes a structure; a structure aligned with no
answer set is never extended.
"""

from collections import deque
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from praset.error_handling import ResourceLimit
from praset.lang.syntax import PrioritizedProgram, sort_literals
from praset.semantics import AnswerSet, answer_sets as compute_answer_sets
from praset.structures.argument import ArgStructure, StructureBuilder
from praset.utils.logger import logger

DEFAULT_LIMIT = 200000

Edge = Tuple[str, Tuple[int, ...], int]


class StructureUniverse:
    """Interned structures plus the derivation edges between them."""

    def __init__(self, program: PrioritizedProgram, answer_sets: Sequence[AnswerSet],
                 builder: StructureBuilder, limit: int = DEFAULT_LIMIT):
        self.program = program
        self.answer_sets = list(answer_sets)
        self.builder = builder
        self.limit = limit
        self.structures: List[ArgStructure] = []
        self.edges: List[Edge] = []
        self.basic_rules: Dict[int, List[str]] = {}
        self._ids: Dict[ArgStructure, int] = {}
        self._unfold_index: Dict[int, List[Tuple[int, int]]] = {}
        self._extensions: Dict[int, List[int]] = {}
        self._union_index: Dict[int, List[Tuple[int, int]]] = {}
        self._union_pairs: Set[Tuple[int, int]] = set()
        self.families: Dict[int, List[int]] = {}
        self.aligned: Dict[int, List[int]] = {}
        self.complete: Set[int] = set()

    def __len__(self) -> int:
        return len(self.structures)

    def __iter__(self) -> Iterator[ArgStructure]:
        return iter(self.structures)

    def __contains__(self, structure: ArgStructure) -> bool:
        return structure in self._ids

    def __getitem__(self, index: int) -> ArgStructure:
        return self.structures[index]

    def id_of(self, structure: ArgStructure) -> Optional[int]:
        return self._ids.get(structure)

    def add(self, structure: ArgStructure) -> Tuple[int, bool]:
        """Intern a structure; returns its id and whether it is new."""
        known = self._ids.get(structure)
        if known is not None:
            return known, False
        if len(self.structures) >= self.limit:
            raise ResourceLimit(self.limit)
        index = len(self.structures)
        self.structures.append(structure)
        self._ids[structure] = index
        return index, True

    def record_unfold(self, first: int, second: int, result: int) -> None:
        self.edges.append(("R1", (first, second), result))
        self._unfold_index.setdefault(first, []).append((second, result))
        if second != first:
            self._unfold_index.setdefault(second, []).append((first, result))

    def has_union(self, first: int, second: int) -> bool:
        return (min(first, second), max(first, second)) in self._union_pairs

    def record_union(self, first: int, second: int, result: int) -> None:
        pair = (min(first, second), max(first, second))
        if first == second or pair in self._union_pairs:
            return
        self._union_pairs.add(pair)
        self.edges.append(("R2", pair, result))
        self._union_index.setdefault(first, []).append((second, result))
        self._union_index.setdefault(second, []).append((first, result))

    def record_extension(self, source: int, result: int) -> None:
        self.edges.append(("R3", (source,), result))
        self._extensions.setdefault(source, []).append(result)

    def unfold_partners(self, index: int) -> List[Tuple[int, int]]:
        """(partner, u(index, partner)) pairs, in either unfolding role."""
        return self._unfold_index.get(index, [])

    def extensions(self, index: int) -> List[int]:
        return self._extensions.get(index, [])

    def union_partners(self, index: int) -> List[Tuple[int, int]]:
        """(partner, index ∪ partner) pairs for condition-free structures."""
        return self._union_index.get(index, [])

    def is_complete(self, index: int) -> bool:
        return index in self.complete

    def complete_id(self, answer_set: AnswerSet) -> Optional[int]:
        return self._ids.get(ArgStructure(answer_set.positive, answer_set.negative))

    def label(self, index: int) -> str:
        return f"S{index + 1}"


def saturate(program: PrioritizedProgram, limit: Optional[int] = None,
             answer_sets: Optional[Sequence[AnswerSet]] = None,
             builder: Optional[StructureBuilder] = None) -> StructureUniverse:
    """Build the structure universe of ``program``.

    Raises:
        ResourceLimit: If more than ``limit`` structures are needed
    """
    builder = builder or StructureBuilder(program)
    if answer_sets is None:
        answer_sets = compute_answer_sets(program)
    universe = StructureUniverse(program, answer_sets, builder, limit or DEFAULT_LIMIT)

    # Basic structures, in rule order
    basics: Dict[int, List[Tuple[str, int]]] = {}
    pending = deque()
    for rule in program.rules:
        structure = builder.basic(rule)
        if structure is None:
            continue
        index, new = universe.add(structure)
        universe.basic_rules.setdefault(index, []).append(rule.name)
        universe.edges.append(("Basic", (), index))
        basics.setdefault(rule.head, []).append((rule.name, index))
        if new and structure.conditions:
            pending.append(index)

    # R1 closure
    while pending:
        index = pending.popleft()
        structure = universe[index]
        for condition in sort_literals(structure.conditions):
            for _, supplier in basics.get(condition, []):
                result = builder.unfold(structure, universe[supplier])
                if result is None:
                    continue
                result_id, new = universe.add(result)
                universe.record_unfold(index, supplier, result_id)
                if new and result.conditions:
                    pending.append(result_id)

    atoms = [i for i, s in enumerate(universe.structures) if s.condition_free]
    for answer_set in universe.answer_sets:
        _close_within(universe, answer_set, [i for i in atoms if universe[i].aligned_with(answer_set)])
    _close_unions(universe)
    for partners in universe._union_index.values():
        partners.sort()

    for index, structure in enumerate(universe.structures):
        if not structure.condition_free:
            continue
        if builder.is_complete(structure):
            universe.complete.add(index)
        for k, answer_set in enumerate(universe.answer_sets):
            if structure.aligned_with(answer_set):
                universe.aligned.setdefault(index, []).append(k)
                universe.families.setdefault(k, []).append(index)
    for k in range(len(universe.answer_sets)):
        universe.families.setdefault(k, [])

    logger.debug(f"saturated {len(universe)} structures, {len(universe.complete)} complete")
    return universe


def _close_within(universe: StructureUniverse, answer_set: AnswerSet, atoms: List[int]) -> None:
    """R2 closure of the aligned atoms, then R3 of every member to S⁻."""
    builder = universe.builder
    members = list(atoms)
    seen = set(atoms)
    frontier = list(atoms)
    while frontier:
        grown = []
        for index in frontier:
            for atom in atoms:
                result = builder.union(universe[index], universe[atom])
                if result is None:
                    continue
                result_id, _ = universe.add(result)
                universe.record_union(index, atom, result_id)
                if result_id not in seen:
                    seen.add(result_id)
                    members.append(result_id)
                    grown.append(result_id)
        frontier = grown

    for index in members:
        structure = universe[index]
        missing = answer_set.negative - structure.assumptions
        if not missing:
            continue
        result = builder.extend(structure, missing)
        if result is None:
            continue
        result_id, _ = universe.add(result)
        universe.record_extension(index, result_id)


def _close_unions(universe: StructureUniverse) -> None:
    """R2 over every pair of condition-free structures, to a fixpoint."""
    builder = universe.builder
    members = [i for i, s in enumerate(universe.structures) if s.condition_free]
    position = 0
    while position < len(members):
        index = members[position]
        for partner in members[:position]:
            if universe.has_union(partner, index):
                continue
            result = builder.union(universe[partner], universe[index])
            if result is None:
                continue
            result_id, new = universe.add(result)
            universe.record_union(partner, index, result_id)
            if new:
                members.append(result_id)
        position += 1
