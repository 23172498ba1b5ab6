"""End-to-end CLI tests: exit codes, JSON schema, CSV sweep output."""

import csv
import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ["WEYLHOM_CLI"]
SCHEMA = json.loads(
    (Path(os.environ["WEYLHOM_SCHEMAS"]) / "cli_output.schema.json").read_text()
)


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def assert_sorted_keys(obj):
    if isinstance(obj, dict):
        assert list(obj.keys()) == sorted(obj.keys())
        for value in obj.values():
            assert_sorted_keys(value)
    elif isinstance(obj, list):
        for value in obj:
            assert_sorted_keys(value)


def run_json(*args):
    proc = run(*args, "--format", "json")
    assert proc.returncode == 0, proc.stderr
    record = json.loads(proc.stdout, object_pairs_hook=lambda pairs: dict(pairs))
    assert_sorted_keys(record)
    jsonschema.validate(record, SCHEMA)
    return record


def test_hom_json_matches_schema_and_text_mode():
    record = run_json("hom", "--lambda", "2,1,1,1", "--hook", "4,1", "--p", "2",
                      "--oracle")
    assert record["dim"] == 1
    assert record["oracle_dim"] == 1
    assert record["agree"] is True
    assert record["witness"] == {"(2)": 1, "(3)": 1, "(4)": 1}

    text = run("hom", "--lambda", "2,1,1,1", "--hook", "4,1", "--p", "2")
    assert text.returncode == 0
    assert "dim  = 1" in text.stdout

    zero = run_json("hom", "--lambda", "2,1,1,1", "--hook", "3,1,1", "--p", "2")
    assert zero["dim"] == 0
    assert "dim  = 0" in run("hom", "--lambda", "2,1,1,1", "--hook", "3,1,1",
                             "--p", "2").stdout


def test_hook_spellings_normalize_and_round_trip():
    a = run_json("hom", "--lambda", "5,1^4", "--hook", "6,1^3", "--p", "3")
    b = run_json("hom", "--lambda", "5,1,1,1,1", "--hook", "6,1,1,1", "--p", "3")
    for rec in (a, b):
        del rec["timing_ms"]
    assert a == b
    # every echoed string reparses to the same value
    c = run_json("hom", "--lambda", a["lambda"], "--hook", a["hook"], "--p", "3")
    del c["timing_ms"]
    assert c == a


def test_usage_errors_exit_2():
    assert run("hom", "--lambda", "2,1", "--hook", "4,1", "--p", "2").returncode == 2
    assert run("hom", "--lambda", "2,1,1,1", "--hook", "4,1", "--p", "9").returncode == 2
    assert run("hom", "--lambda", "purple", "--hook", "4,1", "--p", "2").returncode == 2
    assert run("hom", "--lambda", "2,1,1,1", "--hook", "2,2", "--p", "2").returncode == 2
    assert run("straighten", "--tableau", "2&1", "--shape", "1,1").returncode == 2
    assert run("straighten", "--tableau", "2/1", "--shape", "3,1").returncode == 2
    assert run("sweep", "--r", "99").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("--help").returncode == 0


def test_straighten_outputs():
    proc = run("straighten", "--tableau", "2/1", "--shape", "1,1")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-1 * 1 / 2"

    proc = run("straighten", "--tableau", "1/1 2", "--shape", "1,1,1")
    assert proc.stdout.strip() == "0"

    record = run_json("straighten", "--tableau", "2^(2)/1", "--shape", "2,1")
    assert record["result"] == [{"coeff": "-1", "tableau": "1 2 / 2"}]


def test_ext_and_classical():
    assert run("ext", "--hook", "3,1,1", "--d", "2").stdout.strip() == "Z/2"
    assert run("ext", "--hook", "2,1,1", "--d", "2").stdout.strip() == "0"
    assert run("ext", "--hook", "3,1", "--d", "2").returncode == 2
    record = run_json("ext", "--hook", "2,1,1,1", "--d", "3")
    assert record["ext1"] == "0"

    out = run("classical", "--lambda", "3,2,1", "--hook", "5,1", "--p", "3",
              "--type", "C", "--n", "3")
    assert out.stdout.strip() == "guaranteed_nonzero"
    record = run_json("classical", "--lambda", "3,2,1", "--hook", "5,1", "--p",
                      "3", "--type", "D", "--n", "3")
    assert record["verdict"] == "unknown"


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    proc = run("sweep", "--r", "6", "--primes", "2,3", "--out", str(out))
    assert proc.returncode == 0

    raw = out.read_bytes()
    assert b"\r" not in raw  # LF endings only
    lines = raw.decode("utf-8").splitlines()
    assert lines[0] == "lambda,hook,p,dim_theorem,dim_oracle,agree,case"

    with out.open(newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 11 * 6 * 2  # p(6) partitions x hooks x primes
    for row in rows:
        assert row["agree"] == "true"
        assert row["dim_theorem"] == row["dim_oracle"]
        assert int(row["dim_theorem"]) in (0, 1)
    # quoting keeps comma-bearing partitions as single fields
    assert any(row["lambda"] == "2,2,1,1" for row in rows)

    record = run_json("sweep", "--r", "4", "--primes", "2,3,5,7", "--out",
                      str(tmp_path / "s4.csv"))
    assert record["triples"] == 5 * 4 * 4
    assert record["disagreements"] == 0


def test_sweep_to_stdout():
    proc = run("sweep", "--r", "3", "--primes", "2")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "lambda,hook,p,dim_theorem,dim_oracle,agree,case"
    assert len(lines) == 1 + 3 * 3
    assert "disagreements=0" in proc.stderr
