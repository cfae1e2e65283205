"""Finite hypergroupoids, relations on them, and the induced subset product.

Elements of a carrier of size ``n`` are the integers ``0 .. n-1``.  Subsets
and hyperoperation values are stored as integer bitmasks (bit ``k`` set means
element ``k`` is a member).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence


class DomainError(ValueError):
    """An operation was called outside its domain (empty operand, bad index)."""


def _mask(elements: Iterable[int]) -> int:
    bits = 0
    for e in elements:
        if e < 0:
            raise DomainError(f"negative element {e}")
        bits |= 1 << e
    return bits


@lru_cache(maxsize=1 << 16)
def mask_elements(bits: int) -> tuple[int, ...]:
    out = []
    k = 0
    while bits:
        if bits & 1:
            out.append(k)
        bits >>= 1
        k += 1
    return tuple(out)


def lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


@dataclass(frozen=True, order=True)
class Subset:
    """A subset of ``{0, ..., n-1}``; may be empty."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"subset bits {self.bits:#b} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "Subset":
        return cls(n, _mask(elements))

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(n, 0)

    @property
    def elements(self) -> tuple[int, ...]:
        return mask_elements(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and bool(self.bits >> x & 1)

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.n, self.bits & other.bits)

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.n, self.bits | other.bits)

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.n, self.bits & ~other.bits)

    def issubset(self, other: "Subset") -> bool:
        return self.bits & ~other.bits == 0

    def is_empty(self) -> bool:
        return self.bits == 0

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def nonempty_subsets(n: int) -> Iterator[Subset]:
    """All nonempty subsets of an ``n``-element carrier, in increasing bitmask order."""
    for bits in range(1, 1 << n):
        yield Subset(n, bits)


@dataclass(frozen=True)
class Hypergroupoid:
    """A carrier ``{0..n-1}`` with a hyperoperation given by an ``n x n`` table.

    ``table[a][b]`` is the bitmask of ``a∘b``.  Construction only checks the
    table shape; use :func:`validate` for the nonemptiness and range
    invariants, so that malformed inputs can be diagnosed rather than
    rejected outright.
    """

    n: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("a hypergroupoid needs at least one element")
        table = tuple(tuple(int(c) for c in row) for row in self.table)
        if len(table) != self.n or any(len(row) != self.n for row in table):
            raise DomainError(f"table must be {self.n}x{self.n}")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_sets(cls, rows: Sequence[Sequence[Iterable[int]]]) -> "Hypergroupoid":
        return cls(len(rows), tuple(tuple(_mask(cell) for cell in row) for row in rows))

    @classmethod
    def from_function(cls, n: int, op: Callable[[int, int], int]) -> "Hypergroupoid":
        """Singleton hyperoperation ``a∘b = {op(a, b)}`` of an ordinary groupoid."""
        return cls(n, tuple(tuple(1 << op(a, b) for b in range(n)) for a in range(n)))

    def circ(self, a: int, b: int) -> Subset:
        self.check_element(a)
        self.check_element(b)
        return Subset(self.n, self.table[a][b])

    def check_element(self, x: int) -> None:
        if not 0 <= x < self.n:
            raise DomainError(f"element {x} out of range for n={self.n}")


@dataclass(frozen=True)
class Relation:
    """An arbitrary binary relation; no order axioms are assumed."""

    n: int
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset((int(x), int(y)) for x, y in self.pairs))

    @classmethod
    def identity(cls, n: int) -> "Relation":
        return cls(n, frozenset((x, x) for x in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Relation":
        return cls(n, frozenset())

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def sorted_pairs(self) -> tuple[tuple[int, int], ...]:
        return self._sorted

    @cached_property
    def _sorted(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pairs))

    @cached_property
    def below(self) -> tuple[int, ...]:
        """``below[y]`` is the bitmask of all ``x`` with ``x <= y``."""
        masks = [0] * self.n
        for x, y in self.pairs:
            if 0 <= y < self.n and 0 <= x < self.n:
                masks[y] |= 1 << x
        return tuple(masks)


@dataclass(frozen=True)
class LeHypergroupoid:
    """A hypergroupoid together with a relation ``≤`` on the same carrier."""

    h: Hypergroupoid
    le: Relation

    def __post_init__(self):
        if self.le.n != self.h.n:
            raise DomainError(f"relation is on {self.le.n} elements, carrier has {self.h.n}")

    @classmethod
    def plain(cls, h: Hypergroupoid) -> "LeHypergroupoid":
        """A hypergroupoid with no order information (identity relation)."""
        return cls(h, Relation.identity(h.n))

    @property
    def n(self) -> int:
        return self.h.n

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self.h.table

    def circ(self, a: int, b: int) -> Subset:
        return self.h.circ(a, b)

    def check_element(self, x: int) -> None:
        self.h.check_element(x)


@dataclass(frozen=True)
class PropertyReport:
    """Verdict of a decider.

    ``witness`` is present exactly when the property fails; ``clause`` names
    the failing condition when a property has more than one.
    """

    property_name: str
    holds: bool
    witness: tuple | None = None
    clause: str | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be given iff the property fails")

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls, name: str) -> "PropertyReport":
        return cls(name, True)

    @classmethod
    def fail(cls, name: str, witness: tuple, clause: str | None = None) -> "PropertyReport":
        return cls(name, False, tuple(witness), clause)

    def renamed(self, name: str) -> "PropertyReport":
        return PropertyReport(name, self.holds, self.witness, self.clause)


def _require_nonempty(*subsets: Subset) -> None:
    for s in subsets:
        if s.is_empty():
            raise DomainError("operand must be a nonempty subset")


def _require_same_carrier(h, *subsets: Subset) -> None:
    for s in subsets:
        if s.n != h.n:
            raise DomainError(f"subset over {s.n} elements used with carrier of size {h.n}")


def subset_product(h: Hypergroupoid | LeHypergroupoid, a: Subset, b: Subset) -> Subset:
    """``A*B``: the union of ``x∘y`` over ``x in A``, ``y in B``."""
    _require_same_carrier(h, a, b)
    _require_nonempty(a, b)
    table = h.table
    out = 0
    bs = b.elements
    for x in a.elements:
        row = table[x]
        for y in bs:
            out |= row[y]
    return Subset(h.n, out)


def product_membership(h: Hypergroupoid | LeHypergroupoid, x: int, a: Subset, b: Subset) -> bool:
    """Whether ``x in p∘q`` for some ``p in A``, ``q in B`` (searched pairwise)."""
    h.check_element(x)
    _require_same_carrier(h, a, b)
    _require_nonempty(a, b)
    bit = 1 << x
    return any(h.table[p][q] & bit for p, q in product(a.elements, b.elements))


def singleton_product_is_circ(h: Hypergroupoid | LeHypergroupoid, x: int, y: int) -> bool:
    h.check_element(x)
    h.check_element(y)
    n = h.n
    return subset_product(h, Subset(n, 1 << x), Subset(n, 1 << y)).bits == h.table[x][y]


def validate(lh: LeHypergroupoid) -> PropertyReport:
    """Check the structural invariants; the witness locates the first bad cell or pair."""
    name = "valid-structure"
    n = lh.n
    full = (1 << n) - 1
    for a in range(n):
        for b in range(n):
            cell = lh.table[a][b]
            if cell == 0:
                return PropertyReport.fail(name, (a, b), "empty-cell")
            if cell & ~full:
                return PropertyReport.fail(name, (a, b), "cell-range")
    for x, y in lh.le.sorted_pairs():
        if not (0 <= x < n and 0 <= y < n):
            return PropertyReport.fail(name, (x, y), "relation-range")
    return PropertyReport.ok(name)


def relation_diagnostics(lh: LeHypergroupoid) -> dict[str, bool]:
    """Report which order-like properties the relation happens to have.

    ``compatible`` uses the hyperstructure convention: ``x <= y`` implies
    every element of ``x∘z`` lies below some element of ``y∘z``, and the same
    on the left.
    """
    n = lh.n
    le = lh.le
    below = le.below
    reflexive = all((x, x) in le for x in range(n))
    antisymmetric = all(x == y or (y, x) not in le for x, y in le.pairs)
    transitive = all(
        (x, z) in le for x, y in le.pairs for y2, z in le.pairs if y == y2
    )

    def dominated(lo: int, hi: int) -> bool:
        return all(any(below[v] >> u & 1 for v in mask_elements(hi)) for u in mask_elements(lo))

    compatible = all(
        dominated(lh.table[x][z], lh.table[y][z]) and dominated(lh.table[z][x], lh.table[z][y])
        for x, y in le.pairs
        for z in range(n)
    )
    return {
        "reflexive": reflexive,
        "antisymmetric": antisymmetric,
        "transitive": transitive,
        "compatible": compatible,
    }


class ResourceCapExceeded(RuntimeError):
    """A configured size limit would be exceeded; ``cap`` names the limit."""

    def __init__(self, cap: str, limit: int, requested: int | None = None):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        msg = f"resource cap '{cap}' exceeded (limit {limit}"
        msg += f", requested {requested})" if requested is not None else ")"
        super().__init__(msg)
