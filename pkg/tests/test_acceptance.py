"""Acceptance criteria 1 to 10.

Each test runs one check, prints one PASS/FAIL line and asserts on the
result.  All comparisons are exact (invariant lists, dimension vectors);
the only tolerances are the runtime limits pinned below.
"""

from conftest import ACCEPTANCE_LINES

from latcoh import suites

# runtime limits in seconds
SPINE_LIMIT = 60
PRINCIPAL_LIMIT = 15 * 60
TUBES_LIMIT = 20 * 60


def report(number, res):
    line = "criterion %2d %s" % (number, res.line())
    ACCEPTANCE_LINES[number] = line
    print(line)
    for r in res.records:
        if r.status == "mismatch":
            print("    mismatch", r.label, r.degree, r.formula, r.oracle, r.note)
    return res


def test_criterion_01_trivial_spine():
    res = report(1, suites.check_trivial_spine(-6, 6))
    assert res.seconds < SPINE_LIMIT
    assert res.passed, res.summary


def test_criterion_02_principal_component():
    res = report(2, suites.check_principal(("L2", "L3", "P1", "P2"), range(-2, 4), 6))
    assert res.seconds < PRINCIPAL_LIMIT
    assert res.passed, res.summary


def test_criterion_03_exceptional_cell():
    res = report(3, suites.check_exceptional_cell())
    assert res.passed, res.summary


def test_criterion_04_dimension_vectors():
    res = report(4, suites.check_dimvectors())
    assert res.passed, res.summary


def test_criterion_05_tubes():
    res = report(5, suites.check_tubes(max_tube=3, radius=4))
    assert res.seconds < TUBES_LIMIT
    assert res.passed, res.summary


def test_criterion_06_duality():
    res = report(6, suites.check_duality(radius=4))
    assert res.passed, res.summary


def test_criterion_07_additivity_projectivity():
    res = report(7, suites.check_additivity_projectivity(pairs=10, radius=4))
    assert res.passed, res.summary


def test_criterion_08_globalization():
    res = report(8, suites.check_global())
    assert res.passed, res.summary


def test_criterion_09_round_trip():
    res = report(9, suites.check_round_trip(count=50, max_total=20))
    assert res.passed, res.summary


def test_criterion_10_oracle_consistency():
    res = report(10, suites.check_oracle_consistency(radius=4, matrices=100))
    assert res.passed, res.summary
