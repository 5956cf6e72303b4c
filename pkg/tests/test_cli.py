import copy
import io
import json
import os
import subprocess
import sys

import pytest

from conjseries.cli import run
from conjseries.registry import builtin_catalog, serialize_catalog


def _run(argv):
    buf = io.StringIO()
    rc = run(argv, out=buf)
    return rc, buf.getvalue()


def _stub_catalog(tmp_path, mutate):
    """Write a single-entry catalog derived from R3.8 with a mutation."""
    base = builtin_catalog().by_id("R3.8").as_dict()
    entry = copy.deepcopy(base)
    mutate(entry)
    doc = {"version": serialize_catalog(builtin_catalog())["version"],
           "entries": [entry]}
    path = tmp_path / "stub.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_list_and_constants():
    rc, out = _run(["list", "--kind", "congruence"])
    assert rc == 0
    assert "G2.2ii" in out
    rc, out = _run(["constants", "--digits", "20"])
    assert rc == 0
    assert "3.1415926535897932384" in out
    assert "zeta3" in out or "zeta(3)" in out


def test_verify_pass_exit_zero():
    rc, out = _run(["verify", "R3.8", "--digits", "15"])
    assert rc == 0
    assert "PASS" in out


def test_verify_fail_exit_one(tmp_path):
    def bad_rhs(e):
        e["rhs"] = {"re": ["add", e["rhs"]["re"], ["rat", 1, 1000]]}
    path = _stub_catalog(tmp_path, bad_rhs)
    rc, out = _run(["verify", "--all", "--catalog", path, "--digits", "10"])
    assert rc == 1
    assert "FAIL" in out


def test_verify_inconclusive_exit_two(tmp_path):
    def starve(e):
        e["max_terms_override"] = 16
    path = _stub_catalog(tmp_path, starve)
    rc, out = _run(["verify", "--all", "--catalog", path, "--digits", "45"])
    assert rc == 2
    assert "INCONCLUSIVE" in out


def test_usage_errors_exit_64():
    assert run(["verify"], out=io.StringIO()) == 64  # no ids, no --all
    assert run(["verify", "X1", "--digits", "2"], out=io.StringIO()) == 64
    assert run(["frobnicate"], out=io.StringIO()) == 64
    assert run([], out=io.StringIO()) == 64


def test_cong_and_integrality_subcommands():
    rc, out = _run(["cong", "G2.2ii", "--pmax", "60"])
    assert rc == 0
    assert "PASS" in out
    rc, out = _run(["integrality", "--all", "--nmax", "12"])
    assert rc == 0


def test_json_cache_byte_identical(tmp_path):
    env = dict(os.environ, CONJSERIES_CACHE=str(tmp_path / "cache"))
    cmd = [sys.executable, "-m", "conjseries", "verify", "X1", "R3.8",
           "--digits", "15", "--format", "json"]
    cold = subprocess.run(cmd, env=env, capture_output=True, text=True)
    warm = subprocess.run(cmd, env=env, capture_output=True, text=True)
    assert cold.returncode == 0 and warm.returncode == 0
    assert cold.stdout == warm.stdout  # byte-identical including timings
    assert any((tmp_path / "cache").iterdir())


def test_json_output_shape():
    rc, out = _run(["verify", "R3.8", "--digits", "12", "--format", "json"])
    assert rc == 0
    doc = json.loads(out)
    results = doc["results"] if isinstance(doc, dict) else doc
    rec = results[0]
    assert rec["id"] == "R3.8"
    assert rec["verdict"] == "PASS"
