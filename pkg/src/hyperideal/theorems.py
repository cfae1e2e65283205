"""Structure universes and machine verification of the crisp/fuzzy correspondences.

A :class:`Universe` is a finite, indexable family of ≤-hypergroupoids: every
structure of a given order (exhaustive), a seeded random sample, or an
explicit list.  Each ``verify_*`` function walks a universe, runs a per-structure
check and collects mismatches into a :class:`VerificationRun`.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from . import crisp, fuzzy
from .core import (
    DomainError,
    Hypergroupoid,
    LeHypergroupoid,
    Relation,
    ResourceCapExceeded,
    Subset,
    mask_elements,
    nonempty_subsets,
)
from .fuzzy import DEFAULT_GRID, FuzzySubset

EXHAUSTIVE_ORDER_CAP = 2
DEFAULT_MAX_STRUCTURES = 1_000_000
DEFAULT_MAX_FAILURES = 100
_GRADES = (fuzzy._ZERO, fuzzy._ONE)


def characteristic_function(lh: LeHypergroupoid, a: Subset) -> FuzzySubset:
    if a.n != lh.n:
        raise DomainError(f"subset over {a.n} elements used with carrier of size {lh.n}")
    return FuzzySubset(tuple(_GRADES[a.bits >> x & 1] for x in range(lh.n)))


def support(f: FuzzySubset) -> Subset:
    """Elements with positive grade; inverts :func:`characteristic_function`."""
    return Subset.of(f.n, (x for x, g in enumerate(f.grades) if g > 0))


def enumerate_ideals(lh: LeHypergroupoid, kind: str = "ideal", cap: int = 20) -> list[Subset]:
    """Nonempty subsets satisfying a crisp property, in increasing bitmask order.

    ``kind`` is any key of :data:`crisp.CRISP_PROPERTIES` (``"ideal"``,
    ``"left-ideal"``, ``"prime-ideal"``, ...).
    """
    if lh.n > cap:
        raise ResourceCapExceeded("max-order", cap, lh.n)
    decide = crisp.CRISP_PROPERTIES[kind]
    return [a for a in nonempty_subsets(lh.n) if decide(lh, a)]


# -- universes --------------------------------------------------------------


@dataclass(frozen=True)
class Universe:
    """A finite indexed family of structures.

    ``mode`` is ``"exhaustive"``, ``"sampled"`` or ``"explicit"``.
    ``relations`` is ``"all"`` (every relation on the carrier) or
    ``"identity"`` (table-only mode).
    """

    order: int
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = 0
    relations: str = "all"
    structures: tuple[LeHypergroupoid, ...] = ()
    allow_large: bool = False
    max_structures: int = DEFAULT_MAX_STRUCTURES

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled", "explicit"):
            raise ValueError(f"unknown universe mode {self.mode!r}")
        if self.relations not in ("all", "identity"):
            raise ValueError(f"unknown relation mode {self.relations!r}")
        if self.order < 1:
            raise ValueError("order must be at least 1")

    @classmethod
    def exhaustive(cls, order: int, relations: str = "all", **kw) -> "Universe":
        return cls(order, "exhaustive", relations=relations, **kw)

    @classmethod
    def sampled(cls, order: int, samples: int, seed: int = 0, relations: str = "all", **kw) -> "Universe":
        return cls(order, "sampled", samples=samples, seed=seed, relations=relations, **kw)

    @classmethod
    def explicit(cls, structures: Iterable[LeHypergroupoid]) -> "Universe":
        structures = tuple(structures)
        if not structures:
            raise ValueError("explicit universe needs at least one structure")
        orders = {s.n for s in structures}
        order = orders.pop() if len(orders) == 1 else max(s.n for s in structures)
        return cls(order, "explicit", structures=structures)

    @property
    def _cell_choices(self) -> int:
        return (1 << self.order) - 1

    @property
    def _relation_count(self) -> int:
        return 1 if self.relations == "identity" else 1 << (self.order * self.order)

    def size(self) -> int:
        if self.mode == "explicit":
            return len(self.structures)
        if self.mode == "sampled":
            return self.samples
        return self._cell_choices ** (self.order * self.order) * self._relation_count

    def check_caps(self) -> None:
        if self.mode == "exhaustive" and self.order > EXHAUSTIVE_ORDER_CAP and not self.allow_large:
            raise ResourceCapExceeded("exhaustive-order", EXHAUSTIVE_ORDER_CAP, self.order)
        if self.size() > self.max_structures:
            raise ResourceCapExceeded("max-structures", self.max_structures, self.size())

    def structure_at(self, index: int) -> LeHypergroupoid:
        if not 0 <= index < self.size():
            raise IndexError(index)
        if self.mode == "explicit":
            return self.structures[index]
        if self.mode == "sampled":
            return self._random_structure(index)
        return self._decode(index)

    def _relation(self, bits: int) -> Relation:
        n = self.order
        if self.relations == "identity":
            return Relation.identity(n)
        return Relation(n, frozenset(divmod(k, n) for k in mask_elements(bits)))

    def _decode(self, index: int) -> LeHypergroupoid:
        # mixed radix: relation is the least significant digit, then the cells
        # from (n-1, n-1) back to (0, 0)
        n = self.order
        index, rel_bits = divmod(index, self._relation_count)
        k = self._cell_choices
        cells = [0] * (n * n)
        for pos in range(n * n - 1, -1, -1):
            index, digit = divmod(index, k)
            cells[pos] = digit + 1
        table = tuple(tuple(cells[a * n : (a + 1) * n]) for a in range(n))
        return LeHypergroupoid(Hypergroupoid(n, table), self._relation(rel_bits))

    def _random_structure(self, index: int) -> LeHypergroupoid:
        # per-index stream so any slice of the sample can be regenerated alone
        rng = random.Random(f"hyperideal:{self.seed}:{index}")
        n = self.order
        top = 1 << n
        table = tuple(tuple(rng.randrange(1, top) for _ in range(n)) for _ in range(n))
        rel_bits = rng.getrandbits(n * n)
        return LeHypergroupoid(Hypergroupoid(n, table), self._relation(rel_bits))

    def __iter__(self) -> "StructureIterator":
        return StructureIterator(self)

    def descriptor(self) -> dict:
        d = {"mode": self.mode, "order": self.order}
        if self.mode == "sampled":
            d["samples"] = self.samples
            d["seed"] = self.seed
        if self.mode != "explicit":
            d["relations"] = self.relations
        d["size"] = self.size()
        return d


class StructureIterator:
    """Yields ``(index, structure)`` pairs over ``[start, stop)`` of a universe."""

    def __init__(self, universe: Universe, start: int = 0, stop: int | None = None):
        self.universe = universe
        self.position = start
        self.stop = universe.size() if stop is None else min(stop, universe.size())

    @property
    def order(self) -> int:
        return self.universe.order

    @property
    def mode(self) -> str:
        return self.universe.mode

    def __iter__(self) -> "StructureIterator":
        return self

    def __next__(self) -> tuple[int, LeHypergroupoid]:
        if self.position >= self.stop:
            raise StopIteration
        i = self.position
        self.position += 1
        return i, self.universe.structure_at(i)


# -- runs -------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    index: int
    structure: LeHypergroupoid
    check: str
    subset: Subset | None = None
    fuzzy: FuzzySubset | None = None
    detail: dict = field(default_factory=dict, compare=False)

    def sort_key(self):
        return (
            self.index,
            self.check,
            -1 if self.subset is None else self.subset.bits,
            () if self.fuzzy is None else self.fuzzy.grades,
        )


@dataclass
class VerificationRun:
    theorem_id: str
    universe: dict
    structures_checked: int
    failures: list[Failure]
    failure_count: int
    seed: int | None = None
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0


# A check maps (structure, grid) to (mismatches, counters); a mismatch is
# (check_id, subset, fuzzy, detail).
Mismatch = tuple
CheckFn = Callable[[LeHypergroupoid, Sequence[Fraction]], tuple[list[Mismatch], Counter]]


def _correspondence(check_id: str, crisp_decider, fuzzy_decider):
    def run(lh, grid):
        out = []
        for a in nonempty_subsets(lh.n):
            c = crisp_decider(lh, a)
            f = fuzzy_decider(lh, characteristic_function(lh, a))
            if c.holds != f.holds:
                out.append((check_id, a, None, {"crisp": c.holds, "fuzzy": f.holds}))
        return out, Counter()

    return run


def _both(*checks):
    def run(lh, grid):
        out, stats = [], Counter()
        for c in checks:
            o, s = c(lh, grid)
            out += o
            stats += s
        return out, stats

    return run


def _prop14(lh, grid):
    out, stats = _correspondence("P14fwd", crisp.is_semiprime_ideal, fuzzy.is_fuzzy_semiprime_ideal)(
        lh, grid
    )
    # crisp prime => semiprime is measured, never asserted
    for a in nonempty_subsets(lh.n):
        if crisp.is_prime_ideal(lh, a):
            stats["prime_ideals"] += 1
            if crisp.is_semiprime_ideal(lh, a):
                stats["prime_ideals_semiprime"] += 1
    return out, stats


def _prop14_literal(lh, grid):
    out, stats = [], Counter()
    for a in nonempty_subsets(lh.n):
        if not fuzzy.is_fuzzy_semiprime_ideal(lh, characteristic_function(lh, a)):
            continue
        stats["fuzzy_semiprime_ideal_characteristic_functions"] += 1
        prime = crisp.is_prime_ideal(lh, a)
        if not prime:
            out.append(
                (
                    "P14conv-literal",
                    a,
                    None,
                    {
                        "semiprime_ideal": crisp.is_semiprime_ideal(lh, a).holds,
                        "prime_ideal": False,
                        "prime_witness": list(prime.witness),
                        "prime_clause": prime.clause,
                    },
                )
            )
    return out, stats


def _d5(lh, grid):
    out = []
    for i in nonempty_subsets(lh.n):
        e = crisp.prime_implication(lh, i).holds
        s = crisp.setwise_prime_oracle(lh, i).holds
        if e != s:
            out.append(("D5equiv", i, None, {"elementwise": e, "setwise": s}))
    return out, Counter()


def _d11(lh, grid):
    out = []
    for i in nonempty_subsets(lh.n):
        e = crisp.semiprime_implication(lh, i).holds
        s = crisp.setwise_semiprime_oracle(lh, i).holds
        if e != s:
            out.append(("D11equiv", i, None, {"elementwise": e, "setwise": s}))
    return out, Counter()


def _p2(lh, grid):
    out = []
    for a in nonempty_subsets(lh.n):
        for side, main, oracle in (
            ("left", crisp.is_left_ideal, crisp.elementwise_left_ideal_oracle),
            ("right", crisp.is_right_ideal, crisp.elementwise_right_ideal_oracle),
        ):
            m, o = main(lh, a).holds, oracle(lh, a).holds
            if m != o:
                out.append(("P2equiv", a, None, {"side": side, "setwise": m, "elementwise": o}))
    return out, Counter()


def _fmax(lh, grid):
    out = []
    for f in fuzzy.grade_grid(lh.n, grid):
        m = fuzzy.fuzzy_ideal_max_oracle(lh, f).holds
        c = fuzzy.left_absorbing(lh, f).holds and fuzzy.right_absorbing(lh, f).holds
        if m != c:
            out.append(("FMAXequiv", None, f, {"max_form": m, "clause_form": c}))
    return out, Counter()


def _r13(lh, grid):
    out, stats = [], Counter()
    for f in fuzzy.grade_grid(lh.n, grid):
        g = f.grades
        is_ideal = fuzzy.is_fuzzy_ideal(lh, f).holds
        if is_ideal:
            stats["fuzzy_ideals"] += 1
            for a in range(lh.n):
                bad = [u for u in mask_elements(lh.table[a][a]) if g[u] < g[a]]
                if bad:
                    out.append(("R13-square", None, f, {"element": a, "u": bad[0]}))
                    break
        if fuzzy.is_fuzzy_prime_ideal(lh, f):
            stats["fuzzy_prime_ideals"] += 1
            if not fuzzy.is_fuzzy_semiprime_ideal(lh, f):
                out.append(("R13-prime-semiprime", None, f, {}))
        semi = is_ideal and fuzzy.is_fuzzy_semiprime_subset(lh, f).holds
        if semi != fuzzy.square_equality_characterization(lh, f).holds:
            stats["square_equality_mismatches"] += 1
    return out, stats


_P7 = _both(
    _correspondence("P7L", crisp.is_left_ideal, fuzzy.is_fuzzy_left_ideal),
    _correspondence("P7R", crisp.is_right_ideal, fuzzy.is_fuzzy_right_ideal),
)

CHECKS: dict[str, CheckFn] = {
    "P7": _P7,
    "P8": _correspondence("P8", crisp.is_ideal, fuzzy.is_fuzzy_ideal),
    "P10": _correspondence("P10", crisp.is_prime_ideal, fuzzy.is_fuzzy_prime_ideal),
    "P14fwd": _prop14,
    "P14conv-literal": _prop14_literal,
    "D5equiv": _d5,
    "D11equiv": _d11,
    "P2equiv": _p2,
    "FMAXequiv": _fmax,
    "R13": _r13,
    "EQUIV": _both(_d5, _d11, _p2, _fmax, _r13),
}


def _run_chunk(theorem_id, universe, grid, start, stop, max_failures):
    check = CHECKS[theorem_id]
    failures, stats, total, checked = [], Counter(), 0, 0
    for index, lh in StructureIterator(universe, start, stop):
        checked += 1
        mismatches, s = check(lh, grid)
        stats += s
        total += len(mismatches)
        for check_id, subset, f, detail in mismatches:
            if len(failures) < max_failures:
                failures.append(Failure(index, lh, check_id, subset, f, detail))
    return checked, failures, total, stats


def verify(
    theorem_id: str,
    universe: Universe,
    grid: Iterable = DEFAULT_GRID,
    max_failures: int = DEFAULT_MAX_FAILURES,
    workers: int = 1,
) -> VerificationRun:
    """Run a registered check over every structure of ``universe``.

    With ``workers > 1`` the index range is split across processes; the
    merged failure list is sorted, so the result does not depend on
    scheduling.
    """
    if theorem_id not in CHECKS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    universe.check_caps()
    grid = tuple(sorted({fuzzy.as_grade(g) for g in grid}))
    size = universe.size()
    if workers <= 1 or size < 2:
        parts = [_run_chunk(theorem_id, universe, grid, 0, size, max_failures)]
    else:
        step = -(-size // workers)
        bounds = [(lo, min(lo + step, size)) for lo in range(0, size, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_chunk, theorem_id, universe, grid, lo, hi, max_failures)
                for lo, hi in bounds
            ]
            parts = [fut.result() for fut in futures]
    checked = sum(p[0] for p in parts)
    failures = sorted((f for p in parts for f in p[1]), key=Failure.sort_key)[:max_failures]
    total = sum(p[2] for p in parts)
    stats = Counter()
    for p in parts:
        stats.update(p[3])
    return VerificationRun(
        theorem_id=theorem_id,
        universe=universe.descriptor(),
        structures_checked=checked,
        failures=failures,
        failure_count=total,
        seed=universe.seed if universe.mode == "sampled" else None,
        stats=dict(sorted(stats.items())),
    )


def verify_prop7(universe: Universe, **kw) -> VerificationRun:
    """Left and right ideals versus fuzzy left and right ideals of ``f_A``."""
    return verify("P7", universe, **kw)


def verify_prop8(universe: Universe, **kw) -> VerificationRun:
    return verify("P8", universe, **kw)


def verify_prop10(universe: Universe, **kw) -> VerificationRun:
    return verify("P10", universe, **kw)


def verify_prop14_forward(universe: Universe, **kw) -> VerificationRun:
    """Semiprime ideals versus fuzzy semiprime ideals of ``f_A``, both directions."""
    return verify("P14fwd", universe, **kw)


def search_prop14_literal_counterexample(
    universe: Universe, max_witnesses: int = 10, **kw
) -> VerificationRun:
    """Look for ``A`` with ``f_A`` a fuzzy semiprime ideal but ``A`` not a prime ideal.

    Each failure of the returned run is such a witness.
    """
    return verify("P14conv-literal", universe, max_failures=max_witnesses, **kw)


def verify_equivalences(universe: Universe, grid: Iterable = DEFAULT_GRID, **kw) -> VerificationRun:
    """Elementwise/setwise prime and semiprime forms, the two left-ideal tests,
    the max form of fuzzy ideals, and the square laws for fuzzy ideals."""
    return verify("EQUIV", universe, grid=grid, **kw)


def iter_structures(universe: Universe) -> Iterator[LeHypergroupoid]:
    for _, lh in universe:
        yield lh
