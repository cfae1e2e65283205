"""Plain-text structure files.

Format::

    lehyper v1
    n 2
    cell 0 0 : 0
    cell 0 1 : 0
    cell 1 0 : 0
    cell 1 1 : 1
    le 0 0
    le 1 1
    fuzzy fA : 1 0

Blank lines and ``#`` comments are ignored.  Every one of the ``n²`` cells
must appear exactly once.  Grades are integers or ``p/q`` fractions.
"""

from __future__ import annotations

import hashlib

from .core import DomainError, Hypergroupoid, LeHypergroupoid, Relation, mask_elements
from .fuzzy import FuzzySubset, as_grade

HEADER = "lehyper v1"


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


def _int(tok: str, line: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(line, f"bad {what} {tok!r}")
    return int(tok)


def parse_structure(text: str, strict: bool = True) -> tuple[LeHypergroupoid, dict[str, FuzzySubset]]:
    """Parse a structure file into a ≤-hypergroupoid and its named fuzzy subsets.

    With ``strict=False`` empty cells and out-of-range element or relation
    indices are kept, so that :func:`hyperideal.core.validate` can report them.
    """
    lines = [(k, raw.split("#", 1)[0].strip()) for k, raw in enumerate(text.splitlines(), 1)]
    lines = [(k, s) for k, s in lines if s]
    if not lines or " ".join(lines[0][1].split()) != HEADER:
        raise ParseError(lines[0][0] if lines else 1, f"expected header {HEADER!r}")
    if len(lines) < 2:
        raise ParseError(lines[0][0] + 1, "missing 'n <count>' line")
    k, s = lines[1]
    parts = s.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(k, "expected 'n <count>'")
    n = _int(parts[1], k, "element count")
    if n < 1:
        raise ParseError(k, "element count must be at least 1")

    cells: dict[tuple[int, int], int] = {}
    pairs: set[tuple[int, int]] = set()
    fuzzy: dict[str, FuzzySubset] = {}

    def element(tok: str, line: int) -> int:
        x = _int(tok, line, "element")
        if strict and x >= n:
            raise ParseError(line, f"element {x} out of range for n={n}")
        return x

    for k, s in lines[2:]:
        keyword, _, rest = s.partition(" ")
        if keyword == "cell":
            head, sep, tail = rest.partition(":")
            if not sep:
                raise ParseError(k, "cell line needs ':'")
            ab = head.split()
            if len(ab) != 2:
                raise ParseError(k, "cell line needs two indices before ':'")
            a, b = (_int(t, k, "cell index") for t in ab)
            if a >= n or b >= n:
                raise ParseError(k, f"cell ({a},{b}) out of range for n={n}")
            if (a, b) in cells:
                raise ParseError(k, f"duplicate cell ({a},{b})")
            members = [element(t, k) for t in tail.split()]
            if strict and not members:
                raise ParseError(k, f"cell ({a},{b}) is empty")
            bits = 0
            for x in members:
                bits |= 1 << x
            cells[a, b] = bits
        elif keyword == "le":
            xy = rest.split()
            if len(xy) != 2:
                raise ParseError(k, "le line needs two indices")
            pairs.add((element(xy[0], k), element(xy[1], k)))
        elif keyword == "fuzzy":
            head, sep, tail = rest.partition(":")
            name = head.strip()
            if not sep or not name or len(name.split()) != 1:
                raise ParseError(k, "expected 'fuzzy <name> : <grades>'")
            if name in fuzzy:
                raise ParseError(k, f"duplicate fuzzy subset {name!r}")
            toks = tail.split()
            if len(toks) != n:
                raise ParseError(k, f"fuzzy subset {name!r} needs {n} grades, got {len(toks)}")
            try:
                fuzzy[name] = FuzzySubset(tuple(as_grade(t) for t in toks))
            except DomainError as exc:
                raise ParseError(k, str(exc)) from None
        else:
            raise ParseError(k, f"unknown line type {keyword!r}")

    missing = [(a, b) for a in range(n) for b in range(n) if (a, b) not in cells]
    if missing:
        a, b = missing[0]
        raise ParseError(lines[-1][0], f"missing cell ({a},{b}); {len(missing)} cells undefined")
    table = tuple(tuple(cells[a, b] for b in range(n)) for a in range(n))
    return LeHypergroupoid(Hypergroupoid(n, table), Relation(n, frozenset(pairs))), fuzzy


def serialize_structure(lh: LeHypergroupoid, fuzzy: dict[str, FuzzySubset] | None = None) -> str:
    """Canonical text: row-major cells, ascending elements, sorted pairs and names."""
    n = lh.n
    out = [HEADER, f"n {n}"]
    for a in range(n):
        for b in range(n):
            out.append(f"cell {a} {b} : " + " ".join(map(str, mask_elements(lh.table[a][b]))))
    out += [f"le {x} {y}" for x, y in lh.le.sorted_pairs()]
    for name in sorted(fuzzy or {}):
        out.append(f"fuzzy {name} : " + " ".join(str(g) for g in fuzzy[name].grades))
    return "\n".join(out) + "\n"


def structure_digest(lh: LeHypergroupoid) -> str:
    return "sha256:" + hashlib.sha256(serialize_structure(lh).encode()).hexdigest()
