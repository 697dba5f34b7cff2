"""HTTP service and command-line client behavior."""
import json

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from twistedmagnus.cli import main
from twistedmagnus.service import app

client = TestClient(app)


def test_health():
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json()["status"] == "ok"


def test_check_endpoint():
    resp = client.post("/check", json={
        "ring": "q", "deg": 5, "mu": "1", "g": "1",
        "tests": ["quad", "stabM", "dmr:stab"],
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["schema"] == "twistedmagnus-report/1"
    assert body["command"] == "check"
    assert body["ok"] is True
    names = [c["name"] for c in body["checks"]]
    assert names == sorted(names)
    assert all(c["status"] == "pass" for c in body["checks"])


def test_check_endpoint_failing():
    resp = client.post("/check", json={
        "ring": "q", "deg": 5, "mu": "1", "g": "X0 X1",
        "tests": ["dmr:stab"],
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is False
    assert any(c["status"] == "fail" for c in body["checks"])


def test_check_endpoint_padic_skips():
    resp = client.post("/check", json={
        "ring": "padic:3:2", "deg": 4, "mu": "1", "g": "1",
        "tests": ["quad"],
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["checks"][0]["status"] == "skipped"
    assert body["ok"] is True


def test_check_padic_endpoint():
    resp = client.post("/check-padic", json={
        "p": 3, "K": 3, "deg": 4, "lambda": -1, "f": "1",
        "tests": ["star-roundtrip", "gt"],
    })
    assert resp.status_code == 200
    assert resp.json()["ok"] is True


def test_bad_input_is_400():
    resp = client.post("/check", json={
        "ring": "padic:4:2", "deg": 4, "mu": "1", "g": "1", "tests": ["quad"],
    })
    assert resp.status_code == 400
    resp = client.post("/check", json={
        "ring": "q", "deg": 4, "mu": "1", "g": "X2", "tests": ["quad"],
    })
    assert resp.status_code == 400
    resp = client.post("/suite", json={"name": "nonesuch", "config": {}})
    assert resp.status_code == 400


def test_solve_lie_endpoint():
    resp = client.post("/solve-lie", json={
        "deg_max": 3, "conditions": ["quad", "stabM"],
        "compare": "primM", "check_inclusion": "stabW",
    })
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    dims = {c["name"]: c for c in body["checks"]}
    assert any("dim" in c["name"] or c.get("data") is not None
               for c in body["checks"])


def test_gamma_endpoint():
    resp = client.post("/gamma", json={"ring": "q", "deg": 5, "mu": "1", "g": "X1"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    data = {c["name"]: c for c in body["checks"]}
    gam = next(c for c in body["checks"] if "coeff" in c["name"] or c.get("data"))
    assert gam is not None


def test_report_deterministic():
    payload = {"name": "hopf", "config": {"seed": 7, "deg": 4, "count": 3}}
    a = client.post("/suite", json=payload).content
    b = client.post("/suite", json=payload).content
    assert a == b


def test_cli_exit_codes(tmp_path):
    runner = CliRunner()
    res = runner.invoke(main, ["check", "--mu", "1", "--g", "1"])
    assert res.exit_code == 0
    res = runner.invoke(main, ["check", "--mu", "1", "--g", "X0 X1",
                               "--tests", "dmr:stab"])
    assert res.exit_code == 1
    res = runner.invoke(main, ["check", "--ring", "padic:4:2"])
    assert res.exit_code == 2
    res = runner.invoke(main, ["suite", "nonesuch"])
    assert res.exit_code == 2


def test_cli_json_output(tmp_path):
    runner = CliRunner()
    out = tmp_path / "report.json"
    res = runner.invoke(main, ["check", "--json", str(out), "--mu", "-1", "--g", "1"])
    assert res.exit_code == 0
    body = json.loads(out.read_text())
    assert body["schema"] == "twistedmagnus-report/1"
    assert body["ok"] is True


def test_cli_stdout_is_json():
    runner = CliRunner()
    res = runner.invoke(main, ["gamma", "--mu", "1", "--g", "X1"])
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["command"] == "gamma"


def test_cli_suite_runs():
    runner = CliRunner()
    res = runner.invoke(main, ["--seed", "3", "suite", "cocycle", "--count", "2",
                               "--deg", "4"])
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["ok"] is True
