"""Deciders for crisp ideal-theoretic properties of subsets.

Every decider returns a :class:`PropertyReport`.  When a property fails the
witness is the first violating tuple in lexicographic element order.  The
``*_oracle`` functions reach the same verdicts by a different route (direct
elementwise loops, or brute force over all pairs of nonempty subsets) and
exist to cross-check the main deciders.
"""

from __future__ import annotations

from .core import (
    LeHypergroupoid,
    PropertyReport,
    Subset,
    _require_nonempty,
    _require_same_carrier,
    lowest,
    nonempty_subsets,
    subset_product,
)


def _check(lh: LeHypergroupoid, a: Subset) -> None:
    _require_same_carrier(lh, a)
    _require_nonempty(a)


def is_subgroupoid(lh: LeHypergroupoid, a: Subset) -> PropertyReport:
    _check(lh, a)
    extra = subset_product(lh, a, a).bits & ~a.bits
    if extra:
        return PropertyReport.fail("subgroupoid", (lowest(extra),))
    return PropertyReport.ok("subgroupoid")


def _down_closed(lh: LeHypergroupoid, a: Subset, name: str) -> PropertyReport:
    # witness (b, x): b <= x, x in A, b not in A
    for b, x in lh.le.sorted_pairs():
        if a.bits >> x & 1 and not a.bits >> b & 1:
            return PropertyReport.fail(name, (b, x), "down-closed")
    return PropertyReport.ok(name)


def is_left_ideal(lh: LeHypergroupoid, a: Subset) -> PropertyReport:
    """``H*A ⊆ A`` and ``A`` is closed downward under ``≤``.

    A product failure has witness ``(h, x, u)`` with ``x in A`` and
    ``u in h∘x`` outside ``A``; a ``≤`` failure has witness ``(b, x)``.
    """
    _check(lh, a)
    name = "left-ideal"
    if not subset_product(lh, Subset.full(lh.n), a).issubset(a):
        for h in range(lh.n):
            for x in a.elements:
                extra = lh.table[h][x] & ~a.bits
                if extra:
                    return PropertyReport.fail(name, (h, x, lowest(extra)), "product")
    return _down_closed(lh, a, name)


def is_right_ideal(lh: LeHypergroupoid, a: Subset) -> PropertyReport:
    """Mirror of :func:`is_left_ideal`; product witnesses are ``(x, h, u)``."""
    _check(lh, a)
    name = "right-ideal"
    if not subset_product(lh, a, Subset.full(lh.n)).issubset(a):
        for x in a.elements:
            for h in range(lh.n):
                extra = lh.table[x][h] & ~a.bits
                if extra:
                    return PropertyReport.fail(name, (x, h, lowest(extra)), "product")
    return _down_closed(lh, a, name)


def is_ideal(lh: LeHypergroupoid, a: Subset) -> PropertyReport:
    left = is_left_ideal(lh, a)
    if not left:
        return PropertyReport.fail("ideal", left.witness, "left-" + left.clause)
    right = is_right_ideal(lh, a)
    if not right:
        return PropertyReport.fail("ideal", right.witness, "right-" + right.clause)
    return PropertyReport.ok("ideal")


def _elementwise_down_closed(lh: LeHypergroupoid, a: Subset, name: str) -> PropertyReport:
    for b in range(lh.n):
        if b in a:
            continue
        for x in a:
            if (b, x) in lh.le:
                return PropertyReport.fail(name, (b, x), "down-closed")
    return PropertyReport.ok(name)


def elementwise_left_ideal_oracle(lh: LeHypergroupoid, a: Subset) -> PropertyReport:
    """Left ideal test via ``h∘x ⊆ A`` for each ``h in H``, ``x in A``."""
    _check(lh, a)
    name = "left-ideal"
    for h in range(lh.n):
        for x in a:
            for u in lh.circ(h, x):
                if u not in a:
                    return PropertyReport.fail(name, (h, x, u), "product")
    return _elementwise_down_closed(lh, a, name)


def elementwise_right_ideal_oracle(lh: LeHypergroupoid, a: Subset) -> PropertyReport:
    _check(lh, a)
    name = "right-ideal"
    for x in a:
        for h in range(lh.n):
            for u in lh.circ(x, h):
                if u not in a:
                    return PropertyReport.fail(name, (x, h, u), "product")
    return _elementwise_down_closed(lh, a, name)


def prime_implication(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    """``a∘b ⊆ I`` implies ``a in I`` or ``b in I``; witness ``(a, b)``."""
    _check(lh, i)
    bits = i.bits
    for a in range(lh.n):
        if bits >> a & 1:
            continue
        for b in range(lh.n):
            if not bits >> b & 1 and lh.table[a][b] & ~bits == 0:
                return PropertyReport.fail("prime-implication", (a, b), "1")
    return PropertyReport.ok("prime-implication")


def prime_dichotomy(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    """Every ``a∘b`` is contained in ``I`` or disjoint from it; witness ``(a, b)``."""
    _check(lh, i)
    bits = i.bits
    for a in range(lh.n):
        for b in range(lh.n):
            cell = lh.table[a][b]
            if cell & bits and cell & ~bits:
                return PropertyReport.fail("prime-dichotomy", (a, b), "2")
    return PropertyReport.ok("prime-dichotomy")


def is_prime_subset(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    for part in (prime_implication, prime_dichotomy):
        r = part(lh, i)
        if not r:
            return r.renamed("prime")
    return PropertyReport.ok("prime")


def setwise_prime_oracle(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    """Brute force: ``A*B ⊆ I`` implies ``A ⊆ I`` or ``B ⊆ I`` for all nonempty ``A, B``.

    The witness is the first offending pair ``(A, B)`` in bitmask order.
    """
    _check(lh, i)
    subsets = list(nonempty_subsets(lh.n))
    for a in subsets:
        for b in subsets:
            if subset_product(lh, a, b).issubset(i) and not a.issubset(i) and not b.issubset(i):
                return PropertyReport.fail("setwise-prime", (a, b), "1")
    return PropertyReport.ok("setwise-prime")


def is_prime_ideal(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    for decide in (is_ideal, is_prime_subset):
        r = decide(lh, i)
        if not r:
            return PropertyReport.fail("prime-ideal", r.witness, f"{r.property_name}:{r.clause}")
    return PropertyReport.ok("prime-ideal")


def semiprime_implication(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    """``a∘a ⊆ I`` implies ``a in I``; witness ``(a,)``."""
    _check(lh, i)
    bits = i.bits
    for a in range(lh.n):
        if not bits >> a & 1 and lh.table[a][a] & ~bits == 0:
            return PropertyReport.fail("semiprime-implication", (a,), "1")
    return PropertyReport.ok("semiprime-implication")


def semiprime_dichotomy(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    _check(lh, i)
    bits = i.bits
    for a in range(lh.n):
        cell = lh.table[a][a]
        if cell & bits and cell & ~bits:
            return PropertyReport.fail("semiprime-dichotomy", (a,), "2")
    return PropertyReport.ok("semiprime-dichotomy")


def is_semiprime_subset(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    for part in (semiprime_implication, semiprime_dichotomy):
        r = part(lh, i)
        if not r:
            return r.renamed("semiprime")
    return PropertyReport.ok("semiprime")


def setwise_semiprime_oracle(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    """Brute force: ``A*A ⊆ I`` implies ``A ⊆ I`` for every nonempty ``A``."""
    _check(lh, i)
    for a in nonempty_subsets(lh.n):
        if subset_product(lh, a, a).issubset(i) and not a.issubset(i):
            return PropertyReport.fail("setwise-semiprime", (a,), "1")
    return PropertyReport.ok("setwise-semiprime")


def is_semiprime_ideal(lh: LeHypergroupoid, i: Subset) -> PropertyReport:
    for decide in (is_ideal, is_semiprime_subset):
        r = decide(lh, i)
        if not r:
            return PropertyReport.fail(
                "semiprime-ideal", r.witness, f"{r.property_name}:{r.clause}"
            )
    return PropertyReport.ok("semiprime-ideal")


CRISP_PROPERTIES = {
    "subgroupoid": is_subgroupoid,
    "left-ideal": is_left_ideal,
    "right-ideal": is_right_ideal,
    "ideal": is_ideal,
    "prime": is_prime_subset,
    "semiprime": is_semiprime_subset,
    "prime-ideal": is_prime_ideal,
    "semiprime-ideal": is_semiprime_ideal,
}

