from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from actlab.cli import EXIT_BOUNDED, EXIT_FALSE, EXIT_INPUT, EXIT_OK, EXIT_USAGE, run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_analyze_monoid():
    code, text = call("analyze", "monoid", str(DATA / "lz3.mon"))
    assert code == EXIT_OK
    assert "not left reversible" in text
    assert "\nregular\n" in text
    assert "left zeros: a b" in text
    assert "4 right ideals" in text and "3 right congruences" in text


def test_check_injective_prints_witness():
    code, text = call("check", "injective", str(DATA / "theta2.act"), "--monoid", str(DATA / "lz3.mon"))
    assert code == EXIT_FALSE
    assert "witness" in text and "[a] -> t1" in text


def test_check_exit_codes(tmp_path):
    args = [str(DATA / "theta2.act"), "--monoid", str(DATA / "lz3.mon")]
    assert call("check", "quasi", *args)[0] == EXIT_OK
    assert call("check", "c", *args)[0] == EXIT_BOUNDED
    out = tmp_path / "v.json"
    assert call("check", "pseudo", *args, "--bound", "3", "--out", str(out))[0] == EXIT_FALSE
    record = json.loads(out.read_text())
    assert record["value"] == "false" and record["witness"]["sub"]


def test_fixture_names_resolve():
    code, text = call("check", "injective", str(DATA / "theta2.act"), "--monoid", "LZ3")
    assert code == EXIT_FALSE
    code, _ = call("check", "injective", str(DATA / "theta2.act"))
    assert code == EXIT_FALSE


def test_verify_writes_json(tmp_path):
    out = tmp_path / "r.json"
    code, text = call("verify", "P8", "--max-monoid", "3", "--out", str(out))
    assert code == EXIT_OK
    lines = out.read_text().splitlines()
    assert len(lines) == 1
    report = json.loads(lines[0])
    assert report["status"] == "verified-within-bounds" and report["instances"] == 10
    assert set(report) >= {"claim", "bounds", "status", "witness", "instances", "skipped", "elapsed_ms"}


def test_verify_all_is_deterministic_under_jobs():
    a = call("verify", "all", "--max-monoid", "2", "--max-act", "2")
    b = call("verify", "all", "--max-monoid", "2", "--max-act", "2", "--jobs", "3")
    assert a == b
    assert a[1].count("\n") == 25


def test_decompose_and_dot():
    args = [str(DATA / "theta2.act"), "--monoid", str(DATA / "lz3.mon")]
    code, text = call("decompose", *args)
    assert code == EXIT_OK and text.startswith("2 component(s)")
    code, text = call("decompose", *args, "--dot")
    assert text.startswith("digraph")


def test_envelope_and_enumerate():
    code, text = call("envelope", str(DATA / "theta2.act"), "--monoid", str(DATA / "lz3.mon"))
    assert code == EXIT_OK and "embedding: t1 ->" in text
    code, text = call("enumerate", "monoids", "3")
    assert code == EXIT_OK and text.strip().endswith("# 7 monoid(s) of order 3")
    code, text = call("enumerate", "acts", "2", "--monoid", "C2")
    assert "# 2 act(s)" in text


def test_validate(tmp_path):
    code, text = call("validate", str(DATA / "lz3.mon"), str(DATA / "c2.mon"))
    assert code == EXIT_OK and text.count("ok") == 2
    bad = tmp_path / "bad.mon"
    bad.write_text("monoid X\nelements 1 a\ntable\n1 a\n")
    assert call("validate", str(bad))[0] == EXIT_INPUT


def test_usage_errors():
    assert call("verify", "ZZ")[0] == EXIT_USAGE
    assert call("frobnicate")[0] == EXIT_USAGE
    assert call("check", "injective", str(DATA / "theta2.act"), "--monoid", "NOPE")[0] == EXIT_USAGE


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "actlab.cli", "analyze", "monoid", str(DATA / "lz3.mon")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "4 right ideals" in proc.stdout
