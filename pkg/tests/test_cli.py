import json
import subprocess
import sys

import pytest

from hessk3.cli import main
from hessk3.suites import RunConfig, run


def test_periods_suite_has_finding(capsys):
    assert main(["--suite", "periods", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    statuses = {r["id"]: r["status"] for r in doc["results"]}
    assert statuses["periods.fc_scaling.claimed_scale"] == "finding"
    assert doc["summary"]["fail"] == 0
    assert all(r["citation"] for r in doc["results"])
    assert set(doc) == {"config", "results", "summary"}


def test_low_order_rejected(capsys):
    assert main(["--suite", "theta", "--order", "8"]) == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_suite(capsys):
    assert main(["--suite", "nope"]) == 2


def test_bad_flag(capsys):
    assert main(["--order", "ten"]) == 2


def test_full_run_seed_7(capsys):
    assert main(["--order", "64", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    total = sum(int(kv.split("=")[1]) for kv in out.strip().splitlines()[-1].split())
    assert total >= 40


def test_ids_unique_and_sorted(capsys):
    main(["--suite", "invariants", "--suite", "lattice", "--format", "json"])
    ids = [r["id"] for r in json.loads(capsys.readouterr().out)["results"]]
    assert ids == sorted(ids) and len(ids) == len(set(ids))


def test_samples_override():
    cfg = RunConfig(suites=("lattice",), samples=3)
    assert cfg.sample_count("words") == 3
    with pytest.raises(ValueError):
        RunConfig(samples=0)


def test_emit_series(tmp_path, capsys):
    path = tmp_path / "series.json"
    assert main(["--suite", "theta", "--order", "32", "--emit-series", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert doc["diagonal"]["vartheta"]["terms"][0] == [0, 1, 1]
    assert doc["forms"]["chi"]["weight"] == 6


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hessk3", "--suite", "periods"], capture_output=True, text=True)
    assert out.returncode == 0 and "finding=2" in out.stdout


def test_timings_flag(capsys):
    main(["--suite", "periods", "--format", "json", "--timings"])
    doc = json.loads(capsys.readouterr().out)
    assert "elapsed" in doc["results"][0]
