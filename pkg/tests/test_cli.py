"""End-to-end CLI behavior: output shapes, exit codes, determinism."""

import json
import pathlib
import subprocess
import sys

import pytest
from jsonschema import Draft202012Validator

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parent.parent / "schemas" / "cli-output.schema.json")
    .read_text()
)
Draft202012Validator.check_schema(SCHEMA)
VALIDATOR = Draft202012Validator(SCHEMA)


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "powermonoid", *args],
        capture_output=True,
        text=True,
    )


def run_json(*args, expect_code=0):
    proc = run_cli(*args)
    assert proc.returncode == expect_code, proc.stderr
    payload = json.loads(proc.stdout)
    VALIDATOR.validate(payload)
    return payload


def test_sum():
    assert run_json("sum", "{-1,0,2}", "{0,1,3}") == {
        "op": "sum",
        "result": "{-1,0,1,2,3,5}",
    }
    proc = run_cli("sum", "--output", "plain", "{-1,0,2}", "{0,1,3}")
    assert proc.stdout == "{-1,0,1,2,3,5}\n"
    assert proc.returncode == 0


def test_sum_accepts_interval_shorthand():
    # "--" keeps argparse from reading a leading-minus literal as a flag
    assert run_json("sum", "--", "-1..1", "0..2")["result"] == "{-1,0,1,2,3}"


def test_kfold():
    assert run_json("kfold", "{-1,0,2}", "2")["result"] == "{-2,-1,0,1,2,4}"


def test_bdim():
    assert run_json("bdim", "{-5,-4,-2,0,1,5,6,7}") == {"op": "bdim", "result": 4}
    proc = run_cli("bdim", "--output", "plain", "{-5,-4,-2,0,1,5,6,7}")
    assert proc.stdout == "4\n"


def test_runs():
    payload = run_json("runs", "{-5,-4,-2,0,1,5,6,7}")
    assert payload["result"] == [[-5, -4], [-2, -2], [0, 1], [5, 7]]


def test_factor():
    payload = run_json("factor", "{-1,0,1,2}")
    assert payload == {
        "set": "{-1,0,1,2}",
        "atom": False,
        "factorizations": [
            ["{-1,0}", "{0,1,2}"],
            ["{-1,0}", "{0,2}"],
            ["{-1,0,1}", "{0,1}"],
        ],
    }
    assert run_json("factor", "{-1,0,2}") == {
        "set": "{-1,0,2}",
        "atom": True,
        "factorizations": [],
    }


def test_apply():
    assert run_json("apply", "negation", "{-1,0,2}")["result"] == "{-2,0,1}"
    assert run_json("apply", "max-reflection", "{0,2,3}")["result"] == "{0,1,3}"
    assert run_json("apply", "reversal:negation", "{-1,0,2}")["result"] == "{-1,0,2}"
    proc = run_cli("apply", "rotation", "{0,1}")
    assert proc.returncode == 2
    assert "rotation" in proc.stderr


def test_parse_error_exits_2_and_names_token():
    proc = run_cli("sum", "{-1,0,2}", "bad")
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert "bad" in proc.stderr and proc.stderr.count("\n") == 1


def test_usage_error_exits_2():
    assert run_cli("sum", "{0}").returncode == 2
    assert run_cli("no-such-command").returncode == 2
    assert run_cli("search-autos", "--window", "9").returncode == 2


@pytest.mark.parametrize("lemma", ["lemma21", "lemma22", "lemma23"])
def test_verify_suites(lemma):
    payload = run_json("verify", lemma, "--samples", "40")
    assert payload["lemma"] == lemma
    assert payload["checks"]
    assert all(c["pass"] for c in payload["checks"])


def test_verify_theorem_case1():
    payload = run_json("verify", "theorem", "--case", "1", "--A", "{-2,0,2,5}", "--B", "{-2,0,3,5}")
    assert payload == {
        "case": 1,
        "swapped": False,
        "helper": "{0,1}",
        "lhs": "{-2,-1,0,1,2,3,5,6}",
        "rhs": "{-2,-1,0,1,3,4,5,6}",
        "witness_point": 2,
        "pass": True,
    }


def test_verify_theorem_swap_annotation():
    payload = run_json("verify", "theorem", "--case", "1", "--A", "{-2,0,3,5}", "--B", "{-2,0,2,5}")
    assert payload["swapped"] is True
    assert payload["pass"] is True


def test_verify_theorem_case2():
    payload = run_json(
        "verify", "theorem", "--case", "2",
        "--A", "{-2,0,1,2,5}", "--B", "{-2,0,1,5}", "--c", "11",
    )
    assert payload["witness_point"] == 2
    assert payload["pass"] is True
    assert payload["helper"] == "{0,5,6,7,8,9,10,11}"


def test_verify_theorem_bad_padding_fails_with_exit_1():
    payload = run_json(
        "verify", "theorem", "--case", "2",
        "--A", "{-2,0,1,2,5}", "--B", "{-2,0,1,5}", "--c", "5",
        expect_code=1,
    )
    assert payload["pass"] is False
    assert "minimum padding width" in payload["error"]


def test_verify_theorem_requires_sets():
    assert run_cli("verify", "theorem", "--case", "1").returncode == 2


def test_search_autos_window_one():
    payload = run_json("search-autos", "--window", "1")
    assert payload["m"] == 1
    assert payload["survivors"] == 2
    assert payload["elements"] == ["{0}", "{-1,0}", "{0,1}", "{-1,0,1}"]
    assert payload["maps"][0] == payload["elements"]  # identity comes first
    assert payload["maps"][1] == ["{0}", "{0,1}", "{-1,0}", "{-1,0,1}"]


def test_search_autos_oracle_agreement():
    payload = run_json("search-autos", "--window", "2", "--oracle")
    assert payload["survivors"] == 4
    assert payload["oracle_survivors"] == 4
    assert payload["oracle_matches"] is True


def test_search_autos_prune_off():
    payload = run_json("search-autos", "--window", "2", "--prune", "off")
    assert payload["survivors"] == 4
    assert len(payload["maps"]) == 4


def test_search_autos_oracle_rejects_large_windows():
    assert run_cli("search-autos", "--window", "3", "--oracle").returncode == 2


def test_byte_identical_output():
    for args in (
        ("verify", "lemma21", "--seed", "5", "--samples", "30"),
        ("verify", "lemma23", "--seed", "5", "--samples", "30"),
        ("search-autos", "--window", "2"),
        ("factor", "{-2,-1,0,1,2}"),
    ):
        first, second = run_cli(*args), run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_seed_is_echoed_in_witnesses():
    a = run_json("verify", "lemma21", "--seed", "1", "--samples", "30")
    b = run_json("verify", "lemma21", "--seed", "2", "--samples", "30")
    assert a["checks"][0]["witness"]["seed"] == 1
    assert b["checks"][0]["witness"]["seed"] == 2


def test_plain_output_of_verify():
    proc = run_cli("verify", "lemma22", "--output", "plain")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert all(line.endswith(": pass") for line in lines)
