"""
Tests for rule-set attack and the principle checkers.
"""

import pytest

from praset.attacks import PreferenceSolver
from praset.generator import generate_corpus
from praset.principles import (
    Outcome,
    Principle,
    PrincipleChecker,
    PrincipleReport,
    check_principle_I,
    check_principle_III,
    check_principle_IV,
    check_theorem_subset,
    diagnose_principle_II,
    is_warranted_rule_set,
    rule_set_attacks,
)
from praset.lang import parse_program
from praset.semantics import GeneratingSet

FIXTURE_NAMES = [
    "running", "ambiguity", "four_rules", "tamtonieje_p", "tamtonieje_p_prime",
    "troubles_cyclic", "troubles_second", "incoherent", "facts_only",
]


def rules(answer_set, *names):
    return GeneratingSet(frozenset(names), answer_set)


def test_rule_set_attacks(load_program, answer_set):
    program = load_program("ambiguity")
    s1 = answer_set(program, "a")
    s2 = answer_set(program, "b", "c")
    assert rule_set_attacks(program, rules(s2, "r2", "r4"), rules(s1, "r1"))
    assert not rule_set_attacks(program, rules(s2, "r2", "r4"), rules(s1, "r3"))
    assert not rule_set_attacks(program, rules(s1, "r1"), rules(s2, "r2", "r4"))


def test_attack_needs_the_default_literal(load_program, answer_set):
    """A preferred rule whose head does not occur under not in the other body does not attack."""
    program = load_program("tamtonieje_p")
    s = answer_set(program, "b")
    assert not rule_set_attacks(program, rules(s, "r1"), rules(s, "r2"))
    assert rule_set_attacks(program, rules(s, "r2"), rules(s, "r1")) is False


def test_warranted_rule_sets(load_program, answer_set):
    program = load_program("ambiguity")
    s1 = answer_set(program, "a")
    s2 = answer_set(program, "b", "c")
    assert is_warranted_rule_set(program, rules(s2, "r2", "r4"))
    assert is_warranted_rule_set(program, rules(s1, "r3"))
    assert not is_warranted_rule_set(program, rules(s1, "r1"))


def test_attacking_pool(load_program):
    checker = PrincipleChecker(load_program("ambiguity"))
    pool = [g.rules for g in checker.attacking_pool()]
    assert pool == [{"r1"}, {"r3"}, {"r2", "r4"}]


SHADOWED = """
r1: a :- not x.
r2: a :- c, not y.
r6: c :- a.
r3: x :- not a.
r4: z :- not a.
r5: y :- not a.
prefer r2 > r4.
"""


def test_attackers_come_from_minimal_sets_only(answer_set):
    """r2 generates {a, c} only together with r1, so no minimal set holds it and {r3, r4, r5} stays warranted."""
    program = parse_program(SHADOWED)
    checker = PrincipleChecker(program, "shadowed")
    target = rules(answer_set(program, "x", "y", "z"), "r3", "r4", "r5")
    assert all("r2" not in g.rules for g in checker.attacking_pool())
    assert checker.is_warranted_rule_set(target)


def test_principle_IV_failure_is_reported(answer_set):
    program = parse_program(SHADOWED)
    solver = PreferenceSolver(program)
    assert not solver.is_preferred(answer_set(program, "x", "y", "z"))
    report = check_principle_IV(program, "shadowed")
    assert report.verdict is Outcome.FAIL
    assert report.witness == {"answer_set": "{x, y, z}", "generating_set": "{r3, r4, r5}"}
    assert report.to_dict()["generating_sets"] == "minimal"


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_principles_hold_on_fixtures(load_program, name):
    program = load_program(name)
    for report in PrincipleChecker(program, name).check_all():
        assert report.verdict is Outcome.PASS, report.render()


def test_module_level_checks(load_program):
    program = load_program("running")
    assert check_principle_I(program).verdict is Outcome.PASS
    assert check_principle_IV(program).verdict is Outcome.PASS
    assert check_theorem_subset(program).verdict is Outcome.PASS
    report = check_principle_III(program, "running.lp")
    assert report.witness == {"preferred": 1}
    assert report.program == "running.lp"


def test_principle_III_is_vacuous_without_answer_sets(load_program):
    report = check_principle_III(load_program("incoherent"))
    assert report.verdict is Outcome.PASS
    assert report.witness == {"answer_sets": 0}


def test_principle_I_decompositions(load_program):
    """Answer sets of troubles_second differ in one rule each: r4 for {a,b}, r3 for {a,c}."""
    checker = PrincipleChecker(load_program("troubles_second"))
    found = [(first.render(), second.render(), d1, d2) for first, second, d1, d2 in checker._decompositions()]
    assert found == [("{a, b}", "{a, c}", "r4", "r3")]
    assert checker.check_principle_I().verdict is Outcome.PASS


def test_principle_II_diagnostic(load_program):
    """Adding r3 to P without r3 drops {b}: it stays an answer set but is no longer preferred."""
    (finding,) = diagnose_principle_II(load_program("tamtonieje_p_prime"), "p_prime")
    assert finding.principle is Principle.II
    assert finding.verdict is Outcome.INFO
    assert finding.witness == {"rule": "r3", "answer_set": "{b}", "stays_preferred": False}
    assert not finding.failed


def test_check_all_with_diagnostic(load_program):
    reports = PrincipleChecker(load_program("tamtonieje_p_prime"), "p").check_all(diagnose_ii=True)
    assert [r.principle for r in reports] == [
        Principle.I, Principle.III, Principle.IV, Principle.THEOREM, Principle.II,
    ]


def test_report_serialization():
    report = PrincipleReport(Principle.IV, "x.lp", Outcome.FAIL, {"answer_set": "{a}", "generating_set": "{r1}"})
    assert report.failed
    assert report.to_dict() == {
        "principle": "IV",
        "program": "x.lp",
        "verdict": "fail",
        "generating_sets": "minimal",
        "witness": {"answer_set": "{a}", "generating_set": "{r1}"},
    }
    assert report.render() == "x.lp  principle IV: fail  answer_set={a}; generating_set={r1}"


def test_random_corpus_preferred_are_answer_sets():
    for i, program in enumerate(generate_corpus(seed=7, count=40, atoms=4, max_rules=6)):
        report = PrincipleChecker(program, f"random-{i}").check_theorem_subset()
        assert report.verdict is Outcome.PASS


def test_random_corpus_principles():
    for i, program in enumerate(generate_corpus(seed=7, count=200, atoms=6, max_rules=10)):
        for report in PrincipleChecker(program, f"random-7-{i + 1:04d}").check_all():
            assert report.verdict is Outcome.PASS, report.render()


def test_without_preferences_every_answer_set_is_preferred():
    for program in generate_corpus(seed=11, count=30, atoms=4, max_rules=6, density=0.0):
        solver = PreferenceSolver(program)
        assert solver.preferred_answer_sets() == solver.answer_sets
