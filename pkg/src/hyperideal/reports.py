"""JSON report documents.

Keys are emitted in a fixed order and all values are plain integers, strings,
booleans and lists, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .core import LeHypergroupoid, PropertyReport, Subset, mask_elements
from .fuzzy import FuzzySubset
from .textformat import structure_digest
from .theorems import Failure, VerificationRun


def plain(value):
    """Convert witnesses and details to JSON-ready values."""
    if isinstance(value, Subset):
        return list(value.elements)
    if isinstance(value, FuzzySubset):
        return [str(g) for g in value.grades]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [plain(v) for v in value]
    if isinstance(value, dict):
        return {k: plain(v) for k, v in value.items()}
    return value


def structure_doc(lh: LeHypergroupoid) -> dict:
    return {
        "digest": structure_digest(lh),
        "n": lh.n,
        "table": [[list(mask_elements(c)) for c in row] for row in lh.table],
        "le": [list(p) for p in lh.le.sorted_pairs()],
    }


def property_doc(report: PropertyReport, lh: LeHypergroupoid, **extra) -> dict:
    doc = {"property": report.property_name, "holds": report.holds}
    if not report.holds:
        doc["witness"] = plain(report.witness)
        if report.clause is not None:
            doc["clause"] = report.clause
    doc.update(plain(extra))
    doc["structure_digest"] = structure_digest(lh)
    doc["tool_version"] = __version__
    return doc


def failure_doc(f: Failure) -> dict:
    doc = {"index": f.index, "check": f.check, "structure": structure_doc(f.structure)}
    if f.subset is not None:
        doc["subset"] = plain(f.subset)
    if f.fuzzy is not None:
        doc["fuzzy"] = plain(f.fuzzy)
    if f.detail:
        doc["detail"] = plain(f.detail)
    return doc


def run_doc(run: VerificationRun) -> dict:
    doc = {
        "theorem_id": run.theorem_id,
        "universe": run.universe,
        "structures_checked": run.structures_checked,
        "failure_count": run.failure_count,
        "failures": [failure_doc(f) for f in run.failures],
    }
    if run.seed is not None:
        doc["seed"] = run.seed
    if run.stats:
        doc["stats"] = run.stats
    doc["tool_version"] = __version__
    return doc


def dumps(doc: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, indent=2, ensure_ascii=False)
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)
