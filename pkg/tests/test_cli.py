import json
import subprocess
import sys
from pathlib import Path

import pytest

from hyperideal.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
MULT2 = str(DATA / "mult2.lh")
Z6 = str(DATA / "z6.lh")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_check_prime_ideal(capsys):
    code, doc = run_json(capsys, "check", MULT2, "--subset", "0", "--property", "prime-ideal")
    assert code == 0 and doc["holds"] is True
    assert list(doc) == ["property", "holds", "subset", "structure_digest", "tool_version"]
    assert doc["structure_digest"].startswith("sha256:")


def test_check_failure_reports_witness(capsys):
    code, doc = run_json(capsys, "check", Z6, "--subset", "0", "--property", "prime-ideal")
    assert code == 1 and doc["holds"] is False and doc["witness"] == [2, 3]
    code, doc = run_json(capsys, "check", Z6, "--subset", "0", "--property", "semiprime-ideal")
    assert code == 0


@pytest.mark.parametrize("subset", ["", "5", "a,b", "-1"])
def test_check_bad_subset(capsys, subset):
    code, out, err = run(capsys, "check", MULT2, "--subset", subset, "--property", "ideal")
    assert code == 2 and out == "" and "error" in err


def test_check_fuzzy(capsys):
    code, doc = run_json(capsys, "check-fuzzy", MULT2, "--fuzzy", "fA", "--property", "fuzzy-prime-ideal")
    assert code == 0 and doc["grades"] == ["1", "0"]
    code, doc = run_json(capsys, "check-fuzzy", MULT2, "--fuzzy", "half", "--property", "fuzzy-ideal")
    assert code == 1 and doc["witness"] == [0, 1, 0]
    code, _, err = run(capsys, "check-fuzzy", MULT2, "--fuzzy", "nope", "--property", "fuzzy-ideal")
    assert code == 2


def test_char(capsys):
    code, doc = run_json(capsys, "char", Z6, "--subset", "0,3")
    assert code == 0 and doc["grades"] == ["1", "0", "0", "1", "0", "0"]
    code, doc = run_json(capsys, "char", Z6, "--subset", "")
    assert doc["grades"] == ["0"] * 6


def test_enumerate(capsys):
    code, doc = run_json(capsys, "enumerate", MULT2, "--filter", "ideal")
    assert code == 0 and doc["subsets"] == [[0], [0, 1]]
    code, doc = run_json(capsys, "enumerate", Z6, "--filter", "prime-ideal")
    assert [0] not in doc["subsets"] and [0, 2, 4] in doc["subsets"] and [0, 3] in doc["subsets"]


def test_validate(capsys, tmp_path):
    code, doc = run_json(capsys, "validate", MULT2)
    assert code == 0 and doc["relation"]["reflexive"] is True
    bad = tmp_path / "bad.lh"
    bad.write_text("lehyper v1\nn 2\ncell 0 0 : 0\ncell 0 1 : 0\ncell 1 0 :\ncell 1 1 : 1\n")
    code, doc = run_json(capsys, "validate", str(bad))
    assert code == 1 and doc["witness"] == [1, 0]
    broken = tmp_path / "broken.lh"
    broken.write_text("lehyper v1\nn 2\n")
    code, _, err = run(capsys, "validate", str(broken))
    assert code == 2 and "line" in err


def test_verify_p7_exhaustive(capsys):
    code, doc = run_json(capsys, "verify", "--theorem", "P7", "--order", "2", "--exhaustive")
    assert code == 0 and doc["structures_checked"] == 1296 and doc["failures"] == []


def test_verify_sampled_is_byte_stable(capsys):
    argv = ["verify", "--theorem", "P10", "--order", "3", "--samples", "200", "--seed", "17"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second and json.loads(first)["seed"] == 17


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("HYPERIDEAL_SEED", "17")
    _, from_env, _ = run(capsys, "verify", "--theorem", "P10", "--order", "3", "--samples", "200")
    monkeypatch.delenv("HYPERIDEAL_SEED")
    _, explicit, _ = run(capsys, "verify", "--theorem", "P10", "--order", "3", "--samples", "200", "--seed", "17")
    assert from_env == explicit


def test_search_z6(capsys):
    code, doc = run_json(capsys, "search", "--claim", "p14-literal", "--order", "6", "--file", Z6)
    assert code == 1
    assert doc["failures"][0]["subset"] == [0]
    assert doc["failures"][0]["detail"]["prime_witness"] == [2, 3]


def test_search_order_mismatch(capsys):
    code, _, err = run(capsys, "search", "--claim", "p14-literal", "--order", "5", "--file", Z6)
    assert code == 2


def test_search_exhaustive_n2(capsys):
    code, doc = run_json(capsys, "search", "--claim", "p14-literal", "--order", "2", "--exhaustive")
    assert code == (1 if doc["failure_count"] else 0)


def test_cap_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "P8", "--order", "3", "--exhaustive")
    assert code == 2 and "exhaustive-order" in err


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["check", MULT2, "--subset", "0"], ["check", MULT2, "--subset", "0", "--property", "nah"],
     ["verify", "--theorem", "P7", "--bogus"], ["verify", "--theorem", "P7"]],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_pretty(capsys):
    code, out, _ = run(capsys, "check", Z6, "--subset", "0", "--property", "prime", "--pretty")
    assert code == 1 and out.startswith("prime: FAILS") and "(2, 3)" not in out and "[2, 3]" in out
    code, out, _ = run(capsys, "verify", "--theorem", "P8", "--order", "1", "--pretty")
    assert code == 0 and "structures checked: 2" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperideal", "check", MULT2, "--subset", "0", "--property", "ideal"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["holds"] is True
