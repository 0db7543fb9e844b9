"""
Tests for reducts, least models, answer sets, the consequence operator and
generating sets.
"""

import random
from itertools import chain, combinations

import pytest
from hypothesis import given, settings, strategies as st

from praset.error_handling import NotTotal
from praset.generator import generate_program
from praset.lang import Rule, lit, make_program, obj, parse_program
from praset.semantics import (
    AnswerSet,
    Interpretation,
    answer_sets,
    consequences,
    generating_rules,
    is_self_consistent,
    least_model,
    minimal_generating_sets,
    reduct,
    sufficient_generating_sets,
)


def consequences_by_sequences(program, assumptions, facts=()):
    """Cn by exhaustive search over rule sequences whose default bodies are assumed."""
    assumptions = frozenset(assumptions)
    usable = [r for r in program.rules if r.negative_body <= assumptions]
    found = set(facts)
    seen = set()

    def extend(derived, used):
        if derived in seen:
            return
        seen.add(derived)
        for i, rule in enumerate(usable):
            if i in used or not rule.positive_body <= derived:
                continue
            found.add(rule.head)
            extend(derived | {rule.head}, used | {i})

    extend(frozenset(facts), frozenset())
    return assumptions | frozenset(l.as_literal() for l in found)


def _subsets(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, n) for n in range(len(items) + 1))


def test_reduct_of_running_example(load_program):
    program = load_program("running")
    total = Interpretation.total(program, [obj("a"), obj("b")])
    kept = reduct(program, total)
    assert {r.name for r in kept} == {"r1", "r3"}
    assert all(not r.negative_body for r in kept)


def test_reduct_requires_total_interpretation(load_program):
    program = load_program("running")
    with pytest.raises(NotTotal):
        reduct(program, Interpretation(frozenset({lit("a")})))


def test_reduct_keeps_facts():
    program = parse_program("r1: a.")
    kept = reduct(program, Interpretation.total(program, [obj("a")]))
    assert kept == (Rule("r1", obj("a")),)


def test_least_model():
    """Forward chaining; unfounded loops stay out."""
    rules = [Rule("r1", obj("b"), frozenset({lit("a")})), Rule("r2", obj("a"))]
    assert least_model(rules) == {obj("a"), obj("b")}
    assert least_model([]) == frozenset()
    loop = [Rule("r1", obj("c"), frozenset({lit("b")})), Rule("r2", obj("b"), frozenset({lit("c")}))]
    assert least_model(loop) == frozenset()


@pytest.mark.parametrize("name,expected", [
    ("running", [{"a", "b"}, {"a", "-b"}]),
    ("ambiguity", [{"a"}, {"b", "c"}]),
    ("four_rules", [{"a", "c"}]),
    ("tamtonieje_p", [{"b"}]),
    ("tamtonieje_p_prime", [{"a", "c"}, {"b"}]),
    ("troubles_cyclic", [{"a1", "d1"}, {"a2", "d2"}, {"a3", "d3"}]),
    ("troubles_second", [{"a", "b"}, {"a", "c"}]),
    ("incoherent", []),
    ("facts_only", [{"a"}]),
])
def test_answer_sets(load_program, name, expected):
    """Answer sets come out in canonical order."""
    found = answer_sets(load_program(name))
    assert [{str(l) for l in s.positive} for s in found] == expected


def test_answer_sets_are_total_and_stable(load_program):
    program = load_program("running")
    for s in answer_sets(program):
        total = s.total
        assert total.is_consistent()
        assert total.is_total(program.objective_signature())
        assert least_model(reduct(program, total)) == s.positive


def test_answer_set_construction_is_checked(load_program):
    program = load_program("running")
    with pytest.raises(ValueError):
        AnswerSet.of(program, [obj("b")])


def test_consequences(load_program):
    program = load_program("running")
    w = {lit("not -b"), lit("not -a")}
    assert consequences(program, (), w) == w | {lit("a"), lit("b")}
    assert consequences(program, [obj("a")], {lit("not -b")}) == {lit("not -b"), lit("a"), lit("b")}
    assert consequences(parse_program("r1: b :- a."), (), ()) == frozenset()


def test_self_consistency(load_program):
    assert not is_self_consistent(parse_program("r1: p :- not p."), {lit("not p")})
    assert is_self_consistent(load_program("running"), ())
    assert not is_self_consistent(load_program("running"), {lit("not b"), lit("not -b")})


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=100_000), st.data())
def test_consequences_agree_with_rule_sequences(seed, data):
    """The reduct fixpoint equals the rule-sequence definition for every assumption set."""
    program = generate_program(random.Random(seed), atoms=3, max_rules=5)
    defaults = sorted(program.default_signature())
    chosen = data.draw(st.lists(st.sampled_from(defaults), unique=True)) if defaults else []
    assert consequences(program, (), chosen) == consequences_by_sequences(program, chosen)


def test_consequences_agree_with_rule_sequences_on_random_programs():
    """Every assumption set of a hundred seeded programs over five atoms."""
    for seed in range(100):
        program = generate_program(random.Random(seed), atoms=5, max_rules=8)
        for w in _subsets(program.default_signature()):
            assert consequences(program, (), w) == consequences_by_sequences(program, w), (seed, w)


def test_consequences_agree_with_rule_sequences_exhaustively(load_program):
    for name in ("running", "ambiguity", "four_rules"):
        program = load_program(name)
        for w in _subsets(program.default_signature()):
            assert consequences(program, (), w) == consequences_by_sequences(program, w)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=100_000), st.data())
def test_consequences_are_monotone(seed, data):
    program = generate_program(random.Random(seed), atoms=3, max_rules=5)
    defaults = sorted(program.default_signature())
    smaller = set(data.draw(st.lists(st.sampled_from(defaults), unique=True)))
    larger = smaller | set(data.draw(st.lists(st.sampled_from(defaults), unique=True)))
    assert consequences(program, (), smaller) <= consequences(program, (), larger)


def test_generating_rules(load_program, answer_set):
    ambiguity = load_program("ambiguity")
    assert generating_rules(ambiguity, answer_set(ambiguity, "a")).rules == {"r1", "r3"}
    running = load_program("running")
    assert generating_rules(running, answer_set(running, "a", "b")).rules == {"r1", "r3"}
    facts = load_program("facts_only")
    assert generating_rules(facts, answer_set(facts, "a")).rules == {"r1"}


def test_minimal_generating_sets(load_program, answer_set):
    ambiguity = load_program("ambiguity")
    found = minimal_generating_sets(ambiguity, answer_set(ambiguity, "a"))
    assert [g.rules for g in found] == [{"r1"}, {"r3"}]
    assert all(g.minimal for g in found)
    found = minimal_generating_sets(ambiguity, answer_set(ambiguity, "b", "c"))
    assert [g.rules for g in found] == [{"r2", "r4"}]
    running = load_program("running")
    assert [g.rules for g in minimal_generating_sets(running, answer_set(running, "a", "b"))] == [{"r1", "r3"}]


def test_sufficient_generating_sets(load_program, answer_set):
    ambiguity = load_program("ambiguity")
    found = sufficient_generating_sets(ambiguity, answer_set(ambiguity, "a"))
    assert {g.rules: g.minimal for g in found} == {
        frozenset({"r1"}): True,
        frozenset({"r3"}): True,
        frozenset({"r1", "r3"}): False,
    }


def test_program_without_rules_has_no_answer_sets():
    assert answer_sets(make_program([])) == []


def test_empty_answer_set():
    """Rules whose bodies never hold leave the empty answer set."""
    program = parse_program("r1: a :- b.")
    (found,) = answer_sets(program)
    assert found.positive == frozenset()
    assert found.negative == {lit("not a"), lit("not -a"), lit("not b"), lit("not -b")}
    assert minimal_generating_sets(program, found)[0].rules == frozenset()
