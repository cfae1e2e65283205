from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperideal import (
    DomainError,
    FuzzySubset,
    Hypergroupoid,
    LeHypergroupoid,
    Relation,
    fuzzy_ideal_max_oracle,
    is_fuzzy_ideal,
    is_fuzzy_left_ideal,
    is_fuzzy_prime_ideal,
    is_fuzzy_prime_subset,
    is_fuzzy_right_ideal,
    is_fuzzy_semiprime_ideal,
    is_fuzzy_semiprime_subset,
)
from hyperideal.core import mask_elements
from hyperideal.fuzzy import (
    DEFAULT_GRID,
    FUZZY_PROPERTIES,
    as_grade,
    grade_grid,
    left_absorbing,
    right_absorbing,
    square_equality_characterization,
)
from hyperideal.theorems import Universe
from structures import ALL_ZERO, FIRST_PROJ, MULT2, SECOND_PROJ, Z6, structures

HALF = F(1, 2)
GRID3 = (0, HALF, 1)
N2 = [lh for _, lh in Universe.exhaustive(2)]


def fz(*grades):
    return FuzzySubset(grades)


def violations(lh, f, bad):
    """All (x, y, u) with u in x∘y and bad(f(u), f(x), f(y)), in lexicographic order."""
    g = f.grades
    return [
        (x, y, u)
        for x, y in product(range(lh.n), repeat=2)
        for u in mask_elements(lh.table[x][y])
        if bad(g[u], g[x], g[y])
    ]


grades = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def structure_and_fuzzy(draw, **kw):
    lh = draw(structures(**kw))
    return lh, FuzzySubset(tuple(draw(grades) for _ in range(lh.n)))


@pytest.mark.parametrize("c", [0, F(1, 3), HALF, 1])
@pytest.mark.parametrize("name", sorted(FUZZY_PROPERTIES))
def test_constants_satisfy_everything(name, c):
    for lh in (MULT2, ALL_ZERO, FIRST_PROJ, Z6):
        assert FUZZY_PROPERTIES[name](lh, FuzzySubset.constant(lh.n, c)).holds


def test_fuzzy_left_ideal_examples():
    assert is_fuzzy_left_ideal(SECOND_PROJ, fz(1, 0)).holds
    expected = violations(FIRST_PROJ, fz(1, 0), lambda u, x, y: u < y)
    assert expected[0] == (1, 0, 1)
    r = is_fuzzy_left_ideal(FIRST_PROJ, fz(1, 0))
    assert not r.holds and r.witness == (1, 0, 1)


def test_fuzzy_right_ideal_examples():
    assert is_fuzzy_right_ideal(FIRST_PROJ, fz(1, 0)).holds
    r = is_fuzzy_right_ideal(SECOND_PROJ, fz(1, 0))
    assert not r.holds and r.witness == (0, 1, 1)


def test_fuzzy_ideal_examples():
    assert is_fuzzy_ideal(MULT2, fz(1, 0)).holds
    expected = violations(MULT2, fz(0, 1), lambda u, x, y: u < y)
    r = is_fuzzy_ideal(MULT2, fz(0, 1))
    assert not r.holds and r.witness == expected[0] == (0, 1, 0)


def test_fuzzy_antitone_clause():
    lh = LeHypergroupoid(MULT2.h, Relation(2, frozenset({(1, 0)})))
    r = is_fuzzy_left_ideal(lh, fz(1, 0))
    assert not r.holds and r.witness == (1, 0) and r.clause == "antitone"
    # the max form and the prime-subset test do not look at the relation
    assert fuzzy_ideal_max_oracle(lh, fz(1, 0)).holds
    assert is_fuzzy_prime_subset(lh, fz(1, 0)).holds
    assert not is_fuzzy_prime_ideal(lh, fz(1, 0)).holds


def test_max_oracle_example():
    f = fz(HALF, 1)
    expected = violations(ALL_ZERO, f, lambda u, x, y: u < max(x, y))
    assert (1, 1, 0) in expected
    r = fuzzy_ideal_max_oracle(ALL_ZERO, f)
    assert not r.holds and r.witness == expected[0] == (0, 1, 0)


def test_max_oracle_matches_clause_pair_n2():
    for lh in N2:
        for f in grade_grid(2, GRID3):
            both = left_absorbing(lh, f).holds and right_absorbing(lh, f).holds
            assert fuzzy_ideal_max_oracle(lh, f).holds == both


def test_fuzzy_prime_subset_examples():
    r = is_fuzzy_prime_subset(ALL_ZERO, fz(1, 0))
    assert not r.holds and r.witness == (1, 1, 0)
    for f in grade_grid(2):
        assert is_fuzzy_prime_subset(SECOND_PROJ, f).holds


def test_fuzzy_prime_ideal_examples():
    assert is_fuzzy_prime_ideal(MULT2, fz(1, 1)).holds
    assert is_fuzzy_prime_ideal(MULT2, fz(1, 0)).holds
    r = is_fuzzy_prime_ideal(ALL_ZERO, fz(1, 0))
    assert not r.holds and r.witness == (1, 1, 0)


def test_fuzzy_semiprime_subset_examples():
    r = is_fuzzy_semiprime_subset(ALL_ZERO, fz(1, 0))
    assert not r.holds and r.witness == (1, 0)
    for f in grade_grid(2):
        assert is_fuzzy_semiprime_subset(FIRST_PROJ, f).holds


def test_fuzzy_semiprime_ideal_examples():
    assert is_fuzzy_semiprime_ideal(MULT2, fz(1, 1)).holds
    assert is_fuzzy_semiprime_ideal(Z6, fz(1, 0, 0, 0, 0, 0)).holds
    assert not is_fuzzy_semiprime_ideal(ALL_ZERO, fz(1, 0)).holds


def test_square_equality_is_weaker_than_semiprime_ideal():
    # diagonal fine, but 0∘1 = {1} drops below max{f(0), f(1)}
    lh = LeHypergroupoid.plain(Hypergroupoid.from_sets([[{0}, {1}], [{1}, {1}]]))
    f = fz(1, 0)
    assert square_equality_characterization(lh, f).holds
    assert not is_fuzzy_ideal(lh, f).holds
    assert not is_fuzzy_semiprime_ideal(lh, f).holds


def test_semiprime_ideals_pass_square_equality_n2():
    for lh in N2:
        for f in grade_grid(2, GRID3):
            if is_fuzzy_semiprime_ideal(lh, f):
                assert square_equality_characterization(lh, f).holds


@given(structure_and_fuzzy())
def test_fuzzy_ideal_dominates_on_squares(case):
    lh, f = case
    if is_fuzzy_ideal(lh, f):
        for a in range(lh.n):
            assert all(f[u] >= f[a] for u in mask_elements(lh.table[a][a]))


@given(structure_and_fuzzy())
def test_prime_ideal_implies_semiprime_ideal(case):
    lh, f = case
    if is_fuzzy_prime_ideal(lh, f):
        assert is_fuzzy_semiprime_ideal(lh, f).holds


@given(structure_and_fuzzy())
def test_characterizations_consistent(case):
    lh, f = case
    assert is_fuzzy_prime_ideal(lh, f).holds == (
        is_fuzzy_ideal(lh, f).holds and is_fuzzy_prime_subset(lh, f).holds
    )
    assert is_fuzzy_semiprime_ideal(lh, f).holds == (
        is_fuzzy_ideal(lh, f).holds and is_fuzzy_semiprime_subset(lh, f).holds
    )
    both = left_absorbing(lh, f).holds and right_absorbing(lh, f).holds
    assert fuzzy_ideal_max_oracle(lh, f).holds == both


def test_characterizations_consistent_n2_grid():
    for lh in N2:
        for f in grade_grid(2, GRID3):
            ideal = is_fuzzy_ideal(lh, f).holds
            assert is_fuzzy_prime_ideal(lh, f).holds == (ideal and is_fuzzy_prime_subset(lh, f).holds)


def test_grades_are_exact():
    assert fz("1/3", 1).grades == (F(1, 3), F(1))
    with pytest.raises(DomainError):
        fz(0.5, 1)
    with pytest.raises(DomainError):
        fz("0.5", 1)
    with pytest.raises(DomainError):
        fz(F(3, 2), 0)
    with pytest.raises(DomainError):
        fz(-1, 0)
    with pytest.raises(DomainError):
        as_grade("1/0")
    with pytest.raises(DomainError):
        as_grade(True)


def test_equality_is_exact():
    # 1/3 + 1/3 + 1/3 == 1 exactly, where floats would need a tolerance
    third = F(1, 3)
    lh = LeHypergroupoid.plain(Hypergroupoid.from_sets([[{0}]]))
    assert is_fuzzy_prime_ideal(lh, fz(third + third + third)).holds


def test_grade_grid_size():
    assert len(list(grade_grid(2))) == len(DEFAULT_GRID) ** 2
    assert len(list(grade_grid(2, GRID3))) == 9


def test_carrier_mismatch():
    with pytest.raises(DomainError):
        is_fuzzy_ideal(MULT2, fz(1, 0, 0))
