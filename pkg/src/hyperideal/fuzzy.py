"""Fuzzy subsets with exact rational grades, and deciders for fuzzy ideals.

All comparisons are between :class:`fractions.Fraction` values; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import DomainError, LeHypergroupoid, PropertyReport, mask_elements

_ZERO, _ONE = Fraction(0), Fraction(1)
DEFAULT_GRID = (_ZERO, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), _ONE)


def as_grade(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact grade in [0, 1]."""
    if value is _ZERO or value is _ONE:
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"grades must be exact rationals, got {value!r}")
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE "):
            raise DomainError(f"malformed grade {value!r}")
    try:
        g = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed grade {value!r}") from exc
    if not 0 <= g <= 1:
        raise DomainError(f"grade {g} outside [0, 1]")
    return g


@dataclass(frozen=True)
class FuzzySubset:
    """A map from ``{0..n-1}`` to [0, 1], stored as a tuple of fractions."""

    grades: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "grades", tuple(as_grade(g) for g in self.grades))

    @classmethod
    def constant(cls, n: int, value) -> "FuzzySubset":
        return cls((value,) * n)

    @property
    def n(self) -> int:
        return len(self.grades)

    def __getitem__(self, x: int) -> Fraction:
        return self.grades[x]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.grades)

    def __repr__(self) -> str:
        return "FuzzySubset(" + ", ".join(str(g) for g in self.grades) + ")"


def grade_grid(n: int, grid: Iterable = DEFAULT_GRID) -> Iterator[FuzzySubset]:
    """Every fuzzy subset of an ``n``-element carrier with grades drawn from ``grid``."""
    values = sorted({as_grade(g) for g in grid})
    for grades in product(values, repeat=n):
        yield FuzzySubset(grades)


def _check(lh: LeHypergroupoid, f: FuzzySubset) -> Sequence[Fraction]:
    if f.n != lh.n:
        raise DomainError(f"fuzzy subset has {f.n} grades, carrier has {lh.n} elements")
    return f.grades


def _cells(lh: LeHypergroupoid):
    n = lh.n
    for x in range(n):
        row = lh.table[x]
        for y in range(n):
            yield x, y, mask_elements(row[y])


def antitone(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """``x <= y`` implies ``f(x) >= f(y)``; witness ``(x, y)``."""
    g = _check(lh, f)
    for x, y in lh.le.sorted_pairs():
        if g[x] < g[y]:
            return PropertyReport.fail("le-antitone", (x, y), "antitone")
    return PropertyReport.ok("le-antitone")


def left_absorbing(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """``u in x∘y`` implies ``f(u) >= f(y)``; witness ``(x, y, u)``."""
    g = _check(lh, f)
    for x, y, cell in _cells(lh):
        for u in cell:
            if g[u] < g[y]:
                return PropertyReport.fail("left-absorbing", (x, y, u), "product")
    return PropertyReport.ok("left-absorbing")


def right_absorbing(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """``u in x∘y`` implies ``f(u) >= f(x)``; witness ``(x, y, u)``."""
    g = _check(lh, f)
    for x, y, cell in _cells(lh):
        for u in cell:
            if g[u] < g[x]:
                return PropertyReport.fail("right-absorbing", (x, y, u), "product")
    return PropertyReport.ok("right-absorbing")


def _first_failure(name: str, *reports: PropertyReport) -> PropertyReport:
    for r in reports:
        if not r:
            return r.renamed(name)
    return PropertyReport.ok(name)


def is_fuzzy_left_ideal(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    return _first_failure("fuzzy-left-ideal", left_absorbing(lh, f), antitone(lh, f))


def is_fuzzy_right_ideal(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    return _first_failure("fuzzy-right-ideal", right_absorbing(lh, f), antitone(lh, f))


def is_fuzzy_ideal(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    left = is_fuzzy_left_ideal(lh, f)
    if not left:
        return PropertyReport.fail("fuzzy-ideal", left.witness, "left-" + left.clause)
    right = is_fuzzy_right_ideal(lh, f)
    if not right:
        return PropertyReport.fail("fuzzy-ideal", right.witness, "right-" + right.clause)
    return PropertyReport.ok("fuzzy-ideal")


def fuzzy_ideal_max_oracle(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """``u in x∘y`` implies ``f(u) >= max(f(x), f(y))``.

    This is the single-inequality form of the two absorption clauses; the
    ``≤`` clause is deliberately not part of it.
    """
    g = _check(lh, f)
    for x, y, cell in _cells(lh):
        m = max(g[x], g[y])
        for u in cell:
            if g[u] < m:
                return PropertyReport.fail("fuzzy-ideal-max", (x, y, u), "max")
    return PropertyReport.ok("fuzzy-ideal-max")


def is_fuzzy_prime_subset(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """``u in x∘y`` implies ``f(u) <= max(f(x), f(y))``; no ``≤`` clause."""
    g = _check(lh, f)
    for x, y, cell in _cells(lh):
        m = max(g[x], g[y])
        for u in cell:
            if g[u] > m:
                return PropertyReport.fail("fuzzy-prime", (x, y, u), "max")
    return PropertyReport.ok("fuzzy-prime")


def is_fuzzy_prime_ideal(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """Antitone along ``≤`` and ``f(u) == max(f(x), f(y))`` for every ``u in x∘y``."""
    g = _check(lh, f)
    for x, y, cell in _cells(lh):
        m = max(g[x], g[y])
        for u in cell:
            if g[u] != m:
                return PropertyReport.fail("fuzzy-prime-ideal", (x, y, u), "max-equality")
    return antitone(lh, f).renamed("fuzzy-prime-ideal")


def is_fuzzy_semiprime_subset(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """``u in x∘x`` implies ``f(x) >= f(u)``; witness ``(x, u)``."""
    g = _check(lh, f)
    for x in range(lh.n):
        for u in mask_elements(lh.table[x][x]):
            if g[x] < g[u]:
                return PropertyReport.fail("fuzzy-semiprime", (x, u), "square")
    return PropertyReport.ok("fuzzy-semiprime")


def is_fuzzy_semiprime_ideal(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """A fuzzy ideal that is also a fuzzy semiprime subset.

    The diagonal-only test in :func:`square_equality_characterization` is not
    a substitute: it never looks at ``x∘y`` for ``x != y``.
    """
    return _first_failure(
        "fuzzy-semiprime-ideal", is_fuzzy_ideal(lh, f), is_fuzzy_semiprime_subset(lh, f)
    )


def square_equality_characterization(lh: LeHypergroupoid, f: FuzzySubset) -> PropertyReport:
    """Antitone along ``≤`` and ``f(u) == f(x)`` for every ``u in x∘x``.

    Every fuzzy semiprime ideal passes this test, but the converse fails in
    general (see the test suite for a two-element counterexample).
    """
    g = _check(lh, f)
    for x in range(lh.n):
        for u in mask_elements(lh.table[x][x]):
            if g[u] != g[x]:
                return PropertyReport.fail("square-equality", (x, u), "square-equality")
    return antitone(lh, f).renamed("square-equality")


FUZZY_PROPERTIES = {
    "fuzzy-left-ideal": is_fuzzy_left_ideal,
    "fuzzy-right-ideal": is_fuzzy_right_ideal,
    "fuzzy-ideal": is_fuzzy_ideal,
    "fuzzy-ideal-max": fuzzy_ideal_max_oracle,
    "fuzzy-prime": is_fuzzy_prime_subset,
    "fuzzy-semiprime": is_fuzzy_semiprime_subset,
    "fuzzy-prime-ideal": is_fuzzy_prime_ideal,
    "fuzzy-semiprime-ideal": is_fuzzy_semiprime_ideal,
}
