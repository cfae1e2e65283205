"""Command-line interface.

Exit codes: 0 = property holds / run clean, 1 = property fails / failures or
witnesses found, 2 = usage, parse or domain error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import reports
from .core import DomainError, ResourceCapExceeded, Subset, relation_diagnostics, validate
from .crisp import CRISP_PROPERTIES
from .fuzzy import DEFAULT_GRID, FUZZY_PROPERTIES
from .textformat import ParseError, parse_structure, structure_digest
from .theorems import (
    DEFAULT_MAX_FAILURES,
    Universe,
    characteristic_function,
    enumerate_ideals,
    verify,
)

THEOREMS = {
    "P2": "P2equiv",
    "P7": "P7",
    "P8": "P8",
    "P10": "P10",
    "P14": "P14fwd",
    "D5": "D5equiv",
    "D11": "D11equiv",
    "R13": "R13",
    "FMAX": "FMAXequiv",
    "EQUIV": "EQUIV",
}
CLAIMS = {"p14-literal": "P14conv-literal"}
SEED_ENV = "HYPERIDEAL_SEED"


class UsageError(Exception):
    pass


def _subset(text: str, n: int, allow_empty: bool = False) -> Subset:
    toks = [t for t in text.replace(" ", "").split(",") if t]
    if not toks and not allow_empty:
        raise UsageError("--subset must list at least one element")
    try:
        elements = [int(t) for t in toks]
    except ValueError:
        raise UsageError(f"bad --subset {text!r}; expected comma-separated indices") from None
    bad = [x for x in elements if not 0 <= x < n]
    if bad:
        raise UsageError(f"element {bad[0]} out of range for n={n}")
    return Subset.of(n, elements)


def _load(path: str, strict: bool = True):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_structure(text, strict=strict)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None


def _grid(text: str | None):
    if text is None:
        return DEFAULT_GRID
    try:
        from .fuzzy import as_grade

        return tuple(as_grade(t) for t in text.split(","))
    except DomainError as exc:
        raise UsageError(f"bad --grid: {exc}") from None


def _universe(args, file_structure=None) -> Universe:
    if file_structure is not None:
        if args.order is not None and args.order != file_structure.n:
            raise UsageError(f"--order {args.order} does not match file order {file_structure.n}")
        return Universe.explicit([file_structure])
    if args.order is None:
        raise UsageError("--order is required without --file")
    kw = {"allow_large": args.allow_large}
    if args.max_structures is not None:
        kw["max_structures"] = args.max_structures
    if args.samples is not None:
        return Universe.sampled(args.order, args.samples, _seed(args), args.relations, **kw)
    return Universe.exhaustive(args.order, args.relations, **kw)


def _pretty_property(doc: dict) -> str:
    verdict = "holds" if doc["holds"] else "FAILS"
    line = f"{doc['property']}: {verdict}"
    if "witness" in doc:
        line += f"  witness={doc['witness']}"
        if "clause" in doc:
            line += f" ({doc['clause']})"
    return line


def _pretty_run(doc: dict) -> str:
    lines = [
        f"{doc['theorem_id']} over {doc['universe']}",
        f"  structures checked: {doc['structures_checked']}",
        f"  failures: {doc['failure_count']}",
    ]
    for f in doc["failures"]:
        where = f.get("subset", f.get("fuzzy"))
        lines.append(f"  - #{f['index']} {f['check']} {where} {f.get('detail', '')}")
        lines.append(f"    table={f['structure']['table']} le={f['structure']['le']}")
    for k, v in doc.get("stats", {}).items():
        lines.append(f"  {k}: {v}")
    return "\n".join(lines)


def _emit(doc: dict, pretty: bool, render=None) -> None:
    if pretty and render is not None:
        print(render(doc))
    else:
        print(reports.dumps(doc, pretty=pretty))


def cmd_validate(args) -> int:
    lh, _ = _load(args.file, strict=False)
    report = validate(lh)
    extra = {"relation": relation_diagnostics(lh)} if report.holds else {}
    _emit(reports.property_doc(report, lh, **extra), args.pretty, _pretty_property)
    return 0 if report.holds else 1


def cmd_check(args) -> int:
    lh, _ = _load(args.file)
    a = _subset(args.subset, lh.n)
    report = CRISP_PROPERTIES[args.property](lh, a)
    doc = reports.property_doc(report, lh, subset=a)
    _emit(doc, args.pretty, _pretty_property)
    return 0 if report.holds else 1


def cmd_check_fuzzy(args) -> int:
    lh, named = _load(args.file)
    if args.fuzzy not in named:
        raise UsageError(f"no fuzzy subset named {args.fuzzy!r} in {args.file}")
    f = named[args.fuzzy]
    report = FUZZY_PROPERTIES[args.property](lh, f)
    doc = reports.property_doc(report, lh, fuzzy=args.fuzzy, grades=f)
    _emit(doc, args.pretty, _pretty_property)
    return 0 if report.holds else 1


def cmd_char(args) -> int:
    lh, _ = _load(args.file)
    a = _subset(args.subset, lh.n, allow_empty=True)
    f = characteristic_function(lh, a)
    doc = {
        "subset": reports.plain(a),
        "grades": reports.plain(f),
        "structure_digest": structure_digest(lh),
        "tool_version": reports.__version__,
    }
    _emit(doc, args.pretty, lambda d: "f_A = (" + ", ".join(d["grades"]) + ")")
    return 0


def cmd_enumerate(args) -> int:
    lh, _ = _load(args.file)
    found = enumerate_ideals(lh, args.filter)
    doc = {
        "filter": args.filter,
        "count": len(found),
        "subsets": [reports.plain(a) for a in found],
        "structure_digest": structure_digest(lh),
        "tool_version": reports.__version__,
    }
    _emit(doc, args.pretty, lambda d: "\n".join(str(s) for s in d["subsets"]))
    return 0


def cmd_verify(args) -> int:
    universe = _universe(args)
    run = verify(
        THEOREMS[args.theorem],
        universe,
        grid=_grid(args.grid),
        max_failures=args.max_failures,
        workers=args.workers,
    )
    _emit(reports.run_doc(run), args.pretty, _pretty_run)
    return 0 if run.ok else 1


def cmd_search(args) -> int:
    structure = None
    if args.file is not None:
        structure, _ = _load(args.file)
    universe = _universe(args, structure)
    run = verify(
        CLAIMS[args.claim],
        universe,
        grid=_grid(args.grid),
        max_failures=args.max_witnesses,
        workers=args.workers,
    )
    _emit(reports.run_doc(run), args.pretty, _pretty_run)
    return 0 if run.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    parser = argparse.ArgumentParser(
        prog="hyperideal",
        description="Crisp and fuzzy ideals of finite ≤-hypergroupoids.",
        epilog="exit codes: 0 holds/clean, 1 fails/witnesses found, 2 usage or parse error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check structural invariants")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="decide a crisp property of a subset")
    p.add_argument("file")
    p.add_argument("--subset", required=True, help="comma-separated elements, e.g. 0,2")
    p.add_argument("--property", required=True, choices=sorted(CRISP_PROPERTIES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("check-fuzzy", parents=[common], help="decide a fuzzy property")
    p.add_argument("file")
    p.add_argument("--fuzzy", required=True, help="name of a fuzzy line in the file")
    p.add_argument("--property", required=True, choices=sorted(FUZZY_PROPERTIES))
    p.set_defaults(func=cmd_check_fuzzy)

    p = sub.add_parser("char", parents=[common], help="print the characteristic function")
    p.add_argument("file")
    p.add_argument("--subset", required=True)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("enumerate", parents=[common], help="list subsets with a property")
    p.add_argument("file")
    p.add_argument("--filter", default="ideal", choices=sorted(CRISP_PROPERTIES))
    p.set_defaults(func=cmd_enumerate)

    runner = argparse.ArgumentParser(add_help=False, parents=[common])
    runner.add_argument("--order", type=int)
    mode = runner.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    runner.add_argument("--seed", type=int, help=f"random seed (default ${SEED_ENV} or 0)")
    runner.add_argument("--relations", choices=["all", "identity"], default="all")
    runner.add_argument("--allow-large", action="store_true", help="permit exhaustive order > 2")
    runner.add_argument("--max-structures", type=int)
    runner.add_argument("--grid", help="fuzzy grade grid, e.g. 0,1/2,1")
    runner.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", parents=[runner], help="verify a theorem over a universe")
    p.add_argument("--theorem", required=True, choices=list(THEOREMS))
    p.add_argument("--max-failures", type=int, default=DEFAULT_MAX_FAILURES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[runner], help="search for counterexamples to a claim")
    p.add_argument("--claim", required=True, choices=list(CLAIMS))
    p.add_argument("--file", help="search a single structure file")
    p.add_argument("--max-witnesses", type=int, default=10)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ParseError, DomainError, ResourceCapExceeded) as exc:
        print(f"hyperideal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
