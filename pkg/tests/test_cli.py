from __future__ import annotations

import json

import pytest

from fsgraphs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fs_components_json(capsys):
    code, out, _ = run(capsys, "fs-components", "--x", "path:3", "--y", "path:3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["componentCount"] == 2
    assert [c["size"] for c in doc["components"]] == [3, 3]
    assert json.dumps(doc, indent=2) + "\n" == out


def test_predict_size(capsys):
    assert run(capsys, "predict-size", "--x", "theta0")[1].strip() == "840"


def test_verify_size(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "1.6", "--x", "cycle:6", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass" and doc["measured"] == doc["claimed"] == 30
    code, out, _ = run(capsys, "verify", "--theorem", "star-component-size", "--x", "cycle:6")
    assert "pass" in out


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "build", "--x", "nope:3")[0] == 2
    assert run(capsys, "build", "--x", "gnp:5:0.5")[0] == 2
    assert run(capsys, "experiment", "--n", "4", "--p", "0.5")[0] == 2
    assert run(capsys, "fs-components", "--x", "path:3", "--y", "path:4")[0] == 2
    assert run(capsys, "verify", "--theorem", "7.7", "--x", "path:3")[0] == 2
    assert run(capsys, "connectivity", "--x", "cycle:5", "--y", "star:5", "--paths", "1", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["fs-components", "--x", "path:3", "--y", "path:3", "--format", "csv"])
    assert exc.value.code == 2


def test_computational_failures_exit_1(capsys):
    code, _, err = run(capsys, "route", "--x", "path:3", "--from", "123", "--to", "213")
    assert code == 1 and "different components" in err
    assert run(capsys, "atomic", "--x", "complete:4")[0] == 1
    assert run(capsys, "blocks", "--x", "empty:3")[0] == 1


def test_route_and_blocks(capsys):
    code, out, _ = run(capsys, "route", "--x", "cycle:4", "--from", "1234", "--to", "3124",
                       "--format", "json")
    assert code == 0 and json.loads(out)["length"] == 4
    doc = json.loads(run(capsys, "blocks", "--x", "theta0", "--format", "json")[1])
    assert doc["predicted_size"] == 840 and doc["componentCount"] == 6
    assert doc["blocks"][0]["class"] == "Theta0"


def test_other_commands(capsys):
    assert json.loads(run(capsys, "build", "--x", "gnp:8:0.5", "--seed", "12345",
                          "--format", "json")[1])["edges"][0] == [1, 5]
    assert "kappa 2" in run(capsys, "connectivity", "--x", "theta0")[1]
    doc = json.loads(run(capsys, "connectivity", "--x", "grid:3x3", "--paths", "1", "9",
                         "--format", "json")[1])
    assert doc["count"] == 2 and all(p[0] == 1 and p[-1] == 9 for p in doc["paths"])
    doc = json.loads(run(capsys, "connectivity", "--x", "cycle:5", "--y", "star:5",
                         "--format", "json")[1])
    assert doc["component_size"] == 20 and doc["kappa"] == 2
    assert run(capsys, "wilson", "--x", "complete:4")[1].strip() == "wilsonian"
    assert json.loads(run(capsys, "atomic", "--x", "cycle:6", "--format", "json")[1])["rho"] == 1
    assert "pass" in run(capsys, "verify", "--theorem", "parity", "--x", "cycle:4",
                         "--y", "path:4")[1]
    code, out, _ = run(capsys, "verify", "--theorem", "starcle-paths", "--x", "starcle:8:3,5")
    assert code == 0 and "hypotheses not satisfied" in out


def test_experiment_outputs(capsys, tmp_path):
    args = ["experiment", "--n", "4", "--p", "0,1", "--trials", "3", "--seed", "5"]
    code, out, _ = run(capsys, *args, "--format", "csv", "--out", str(tmp_path / "r.csv"),
                       "--summary", str(tmp_path / "s.csv"), "--figures", str(tmp_path))
    assert code == 0
    assert out == (tmp_path / "r.csv").read_text()
    assert out.splitlines()[0].startswith("n,p1,p2,trial,seed")
    assert (tmp_path / "sweep.png").stat().st_size > 0
    assert (tmp_path / "s.csv").read_text().startswith("#")
    doc = json.loads(run(capsys, *args, "--format", "json")[1])
    assert [r["p_connected"] for r in doc["summary"]] == [0.0, 1.0]
