import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import gzkit

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schemas" / "jobspec.schema.json").read_text())
SPECS = sorted((ROOT / "tests" / "data" / "specs").glob("*.json"))
INVALID = sorted((ROOT / "tests" / "data" / "invalid_specs").glob("*.json"))
CLI = os.environ.get("GZKIT_CLI")


def test_apply_example():
    assert gzkit.apply([2, 1], "E1", "x[1,1]+x[1,2]") == "x[1,1]+x[1,2]+1"


def test_parse_expr_normalizes():
    assert gzkit.parse_expr("(x[1,1]^2 - x[1,2]^2)/(x[1,1]-x[1,2])") == "x[1,1]+x[1,2]"


def test_errors_carry_kind():
    with pytest.raises(gzkit.GzkitError) as err:
        gzkit.parse_expr("x[3,1]", [2, 1])
    assert err.value.kind == "NameError"
    assert err.value.exit_code == 2


@pytest.mark.parametrize("path", SPECS, ids=lambda p: p.name)
def test_example_specs_match_schema(path):
    spec = json.loads(path.read_text())
    jsonschema.validate(spec, SCHEMA)
    gzkit.validate_spec(path.read_text())


@pytest.mark.parametrize("path", INVALID, ids=lambda p: p.name)
def test_invalid_specs_rejected_by_both(path):
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(json.loads(path.read_text()), SCHEMA)
    with pytest.raises(gzkit.GzkitError) as err:
        gzkit.validate_spec(path.read_text())
    assert err.value.kind == "ValidationError"


def test_graph_job_has_two_components():
    spec = (ROOT / "tests" / "data" / "specs" / "wall_11.json").read_text()
    dot = gzkit.run_job("graph", spec)
    components = {line.split("component=")[1].rstrip("];") for line in dot.splitlines() if "component=" in line}
    assert components == {"0", "1"}
    assert dot == gzkit.run_job("graph", spec)


def test_walk():
    path = gzkit.find_path([0, 0, 0, 0], [2, 2, 1, 1])
    assert path[0][0] == [0, 0, 0, 0]
    assert path[-1][1] == [2, 2, 1, 1]
    assert all(kind in ("1", "2") for _, _, kind in path)
    assert gzkit.flagged_arrows("(0,0) -1-> (1,0) -1-> (1,0)") == [1]


def test_basis_json_round_trip():
    spec = json.loads((ROOT / "tests" / "data" / "specs" / "singular_21.json").read_text())
    spec["radius"] = 1
    out = json.loads(gzkit.run_job("basis", json.dumps(spec)))
    assert out["size"] == out["window_points"] == out["certified_rank"] == 9
    again = {"lambda": out["lambda"], "point": out["point"], "radius": out["radius"]}
    jsonschema.validate(again, SCHEMA)
    assert json.loads(gzkit.run_job("basis", json.dumps(again))) == out


@pytest.mark.skipif(CLI is None, reason="GZKIT_CLI not set")
def test_cli_exit_codes(tmp_path):
    ok = subprocess.run([CLI, "apply", "--lambda", "2,1", "--op", "E1", "--expr", "x[1,1]+x[1,2]"],
                        capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout == "x[1,1]+x[1,2]+1\n"
    bad = subprocess.run([CLI, "apply", "--lambda", "2,1", "--op", "E1", "--expr", "x[1,1] + * 2"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    assert json.loads(bad.stderr)["error"]["position"] == 9
    split = tmp_path / "split.json"
    split.write_text(json.dumps({"lambda": [3, 1], "radius": 1, "point": {
        "1,1": {"tag": 1}, "1,2": {"tag": 2}, "1,3": {"tag": 1}, "2,1": {"tag": 3}}}))
    kernel = subprocess.run([CLI, "basis", "--spec", str(split)], capture_output=True, text=True)
    assert kernel.returncode == 3
    assert json.loads(kernel.stderr)["error"]["kind"] == "InvalidSingularSetup"
