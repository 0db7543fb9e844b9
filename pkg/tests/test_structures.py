"""
Tests for basic structures, R1-R3, saturation and canonical derivations.
"""

import pytest

from praset.error_handling import PreconditionViolation
from praset.lang import lit, make_program, obj, parse_program
from praset.semantics import answer_sets
from praset.structures import (
    ArgStructure,
    DerivationRule,
    StructureBuilder,
    apply_R1,
    apply_R2,
    apply_R3,
    basic_structure,
    canonical_derivations,
    complete_structure,
    contradicts,
    is_complete,
    saturate,
)


def structure(conclusions, assumptions=(), conditions=()):
    return ArgStructure(
        frozenset(obj(l) for l in conclusions),
        frozenset(lit(l) for l in assumptions),
        frozenset(obj(l) for l in conditions),
    )


A1 = structure(["b"], ["not -b"], ["a"])
A2 = structure(["-b"], ["not b"])
A3 = structure(["a"], ["not -a"])
A4 = structure(["b"], ["not -a", "not -b"])


def test_basic_structures_of_running_example(load_program):
    program = load_program("running")
    assert basic_structure(program, program.rule("r1")) == A1
    assert basic_structure(program, program.rule("r2")) == A2
    assert basic_structure(program, program.rule("r3")) == A3


@pytest.mark.parametrize("name,rule", [
    ("troubles_second", "r2"),
    ("four_rules", "r4"),
    ("incoherent", "r1"),
])
def test_rules_without_basic_structure(load_program, name, rule):
    """Assumptions that are not self-consistent give no basic structure."""
    program = load_program(name)
    assert basic_structure(program, program.rule(rule)) is None


def test_unfold(load_program):
    program = load_program("running")
    assert apply_R1(program, A1, A3) == A4


def test_unfold_preconditions(load_program):
    program = load_program("running")
    with pytest.raises(PreconditionViolation):
        apply_R1(program, A3, A1)
    with pytest.raises(PreconditionViolation):
        apply_R1(program, A1, A4)
    with pytest.raises(PreconditionViolation):
        apply_R1(program, structure(["a", "b"], ["not -a"]), A3)


def test_union(load_program):
    program = load_program("running")
    assert apply_R2(program, A3, A4) == structure(["a", "b"], ["not -a", "not -b"])
    assert apply_R2(program, A2, A4) is None
    with pytest.raises(PreconditionViolation):
        apply_R2(program, A1, A3)


def test_extension(load_program):
    program = load_program("running")
    assert apply_R3(program, A3, [lit("not b")]) == structure(["a"], ["not -a", "not b"])
    assert apply_R3(program, A3, [lit("not a")]) is None
    with pytest.raises(PreconditionViolation):
        apply_R3(program, A3, [lit("b")])
    with pytest.raises(PreconditionViolation):
        apply_R3(program, A1, [lit("not b")])


def test_contradicts():
    assert contradicts(A2, A1)
    assert contradicts(A1, A2)
    assert not contradicts(A3, A2)


def test_is_complete(load_program, answer_set):
    program = load_program("running")
    assert is_complete(program, complete_structure(answer_set(program, "a", "b")))
    assert is_complete(program, structure(["a", "-b"], ["not -a", "not b"]))
    assert not is_complete(program, A3)
    assert not is_complete(program, A1)


def test_render():
    assert A1.render() == "<{b} <- {not -b}; {a}>"
    assert A3.render() == "<{a} <- {not -a}>"


def test_saturate_running_example(load_program, answer_set):
    program = load_program("running")
    universe = saturate(program)
    for s in (A1, A2, A3, A4):
        assert s in universe
    assert universe.id_of(A1) == 0
    assert universe.basic_rules == {0: ["r1"], 1: ["r2"], 2: ["r3"]}
    assert complete_structure(answer_set(program, "a", "b")) in universe
    assert complete_structure(answer_set(program, "a", "-b")) in universe
    assert (0, universe.id_of(A4)) in universe.unfold_partners(2)


def test_saturate_empty_program():
    universe = saturate(make_program([]))
    assert len(universe) == 0
    assert universe.families == {}
    assert universe.complete == set()


@pytest.mark.parametrize("name", [
    "running", "ambiguity", "four_rules", "tamtonieje_p_prime", "troubles_cyclic", "troubles_second",
])
def test_saturation_is_a_fixpoint(load_program, name):
    """Unfolding, unions of any two condition-free structures and extensions to S⁻ add nothing new."""
    program = load_program(name)
    universe = saturate(program)
    builder = universe.builder
    suppliers = [universe[i] for i in universe.basic_rules]
    for s in list(universe):
        for condition in s.conditions:
            for basic in suppliers:
                if basic.conclusions == {condition}:
                    result = builder.unfold(s, basic)
                    assert result is None or result in universe
    free = [i for i, s in enumerate(universe) if s.condition_free]
    for i in free:
        for j in free:
            joined = builder.union(universe[i], universe[j])
            assert joined is None or joined in universe
    for k, answer_set in enumerate(universe.answer_sets):
        for i in universe.families[k]:
            extended = builder.extend(universe[i], answer_set.negative - universe[i].assumptions)
            assert extended is None or extended in universe


def test_unions_outside_every_answer_set_are_kept():
    program = parse_program("r1: a :- not b.\nr2: c :- not d.\nr3: d :- not c.\nr4: q :- a, c, not q.")
    assert [s.render() for s in answer_sets(program)] == ["{a, d}"]
    universe = saturate(program)
    joined = structure(["a", "c"], ["not b", "not d"])
    assert joined in universe
    assert not universe.aligned.get(universe.id_of(joined))
    first = universe.id_of(structure(["a"], ["not b"]))
    second = universe.id_of(structure(["c"], ["not d"]))
    result = universe.id_of(joined)
    assert ("R2", (min(first, second), max(first, second)), result) in universe.edges
    assert (second, result) in universe.union_partners(first)
    assert (first, result) in universe.union_partners(second)
    assert universe.extensions(result) == []


def test_union_edges_match_union_partners(load_program):
    universe = saturate(load_program("ambiguity"))
    unions = [(pair, result) for rule, pair, result in universe.edges if rule == "R2"]
    assert unions
    for (first, second), result in unions:
        assert universe[result] == universe.builder.union(universe[first], universe[second])
        assert (second, result) in universe.union_partners(first)


@pytest.mark.parametrize("name", [
    "running", "ambiguity", "four_rules", "tamtonieje_p", "tamtonieje_p_prime",
    "troubles_cyclic", "troubles_second", "facts_only",
])
def test_complete_structures_are_the_answer_sets(load_program, name):
    program = load_program(name)
    universe = saturate(program)
    found = {universe[i] for i in universe.complete}
    assert found == {complete_structure(s) for s in answer_sets(program)}


def test_every_structure_is_a_dependency_structure(load_program):
    program = load_program("ambiguity")
    builder = StructureBuilder(program)
    assert all(builder.is_dependency_structure(s) for s in saturate(program, builder=builder))


def test_canonical_derivation_of_running_example(load_program, answer_set):
    program = load_program("running")
    s = answer_set(program, "a", "b")
    (derivation,) = canonical_derivations(program, s)
    assert [step.describe() for step in derivation.steps] == ["Basic(r3)", "Basic(r1)", "R1(2, 1)", "R2(1, 3)"]
    assert derivation.structures == [A3, A1, A4, complete_structure(s)]
    assert derivation.is_well_formed()


def test_canonical_derivation_of_facts(load_program, answer_set):
    program = load_program("facts_only")
    (derivation,) = canonical_derivations(program, answer_set(program, "a"))
    assert [step.rule for step in derivation.steps] == [DerivationRule.BASIC, DerivationRule.R3]
    assert derivation.steps[1].extension == {lit("not -a")}
    assert derivation.render() == [
        "1. <{a} <- {}>  [Basic(r1)]",
        "2. <{a} <- {not -a}>  [R3(1, {not -a})]",
    ]


def test_one_derivation_per_minimal_generating_set(load_program, answer_set):
    program = load_program("ambiguity")
    s = answer_set(program, "a")
    derivations = canonical_derivations(program, s)
    assert [d.generating_set.rules for d in derivations] == [{"r1"}, {"r3"}]
    assert [len(d) for d in derivations] == [2, 2]
    assert all(d.final == complete_structure(s) for d in derivations)


def test_widened_derivations(load_program, answer_set):
    program = load_program("ambiguity")
    s = answer_set(program, "a")
    derivations = canonical_derivations(program, s, widen=True)
    assert [d.generating_set.rules for d in derivations] == [{"r1"}, {"r3"}, {"r1", "r3"}]
    assert derivations[2].steps[2].rule is DerivationRule.R2


@pytest.mark.parametrize("name", ["running", "ambiguity", "four_rules", "troubles_cyclic", "troubles_second"])
def test_derivations_end_in_the_complete_structure(load_program, name):
    program = load_program(name)
    universe = saturate(program)
    for s in answer_sets(program):
        for derivation in canonical_derivations(program, s):
            assert derivation.is_well_formed()
            assert derivation.final == complete_structure(s)
            assert len(set(derivation.structures)) == len(derivation)
            assert all(member in universe for member in derivation.structures)


def test_empty_generating_set():
    """The empty answer set is derived from the empty structure."""
    program = parse_program("r1: a :- b.")
    (s,) = answer_sets(program)
    (derivation,) = canonical_derivations(program, s)
    assert [step.describe() for step in derivation.steps] == [
        "Basic(empty)", "R3(1, {not a, not -a, not b, not -b})",
    ]
    assert derivation.final == complete_structure(s)
