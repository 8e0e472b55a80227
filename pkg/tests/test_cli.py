import json

import pytest

from flagsplit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def scenario_file(tmp_path, doc, name="scenario.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


GOOD_SCENARIO = {
    "schema": 1,
    "shape": [1, 6],
    "V": [{"weight": [0, 0]}, {"weight": [1, 0]}],
    "N": {"split": [{"weight": [1, 0]}]},
}


def test_parse_helpers():
    assert cli.parse_flag("1,2:4").d == (1, 2, 4)
    assert cli.parse_range("-2..3") == range(-2, 4)
    with pytest.raises(cli.InputError):
        cli.parse_flag("1,2")
    with pytest.raises(cli.InputError):
        cli.parse_range("3..1")
    with pytest.raises(cli.InputError):
        cli.parse_range("3")
    with pytest.raises(cli.InputError):
        cli.parse_ints("1,x")


def test_cohomology_command(capsys):
    code, doc = run_json(
        capsys, "cohomology", "--flag", "1:3", "--weight", "3,0,0"
    )
    assert code == 0
    row = doc["rows"][0]
    assert row["zero"] is False
    assert row["degree"] == 0
    assert row["dimension"] == "10"


def test_cohomology_zero(capsys):
    code, doc = run_json(capsys, "cohomology", "--flag", "1:3", "--weight=-1,0,0")
    assert code == 0
    assert doc["rows"][0]["zero"] is True


def test_cohomology_bad_weight(capsys):
    code, _ = run(capsys, "cohomology", "--flag", "2:4", "--weight", "0,1,0,0")
    assert code == cli.EXIT_INPUT


def test_hsplit_command(capsys):
    code, doc = run_json(capsys, "hsplit", "--flag", "1:2", "--h", "1")
    assert code == 0
    row = doc["rows"][0]
    assert row["h_splitting"] is False
    assert row["witness"] == [-2, 0]
    code, doc = run_json(capsys, "hsplit", "--flag", "2,4:6", "--h", "1")
    assert doc["rows"][0]["h_splitting"] is True


def test_claim2_exit_codes(capsys):
    code, doc = run_json(
        capsys, "claim2", "--nu-range", "2..3", "--n-range", "2..3",
        "--k-range=-2..2",
    )
    assert code == 0
    assert doc["summary"]["theorem_failures"] == 0
    # the n = 1 control fails, but outside the theorem regime: still exit 0
    code, doc = run_json(
        capsys, "claim2", "--nu-range", "2..2", "--n-range", "1..1",
        "--k-range", "0..0",
    )
    assert code == 0
    assert doc["summary"]["nonvanishing"] == 1


def test_claim2_resource_guard(capsys):
    code = cli.main(
        [
            "--max-cases", "3",
            "claim2", "--nu-range", "2..3", "--n-range", "2..3",
            "--k-range", "0..0",
        ]
    )
    capsys.readouterr()
    assert code == cli.EXIT_RESOURCE


def test_cohom0_verify(capsys):
    code, doc = run_json(capsys, "cohom0-verify", "--max-n", "4")
    assert code == 0
    assert doc["summary"]["disagreements"] == 0


def test_resolution_command(capsys):
    code, doc = run_json(capsys, "resolution", "--nu", "3", "--m", "1")
    assert code == 0
    assert doc["rows"] == [
        {"position": 1, "rank": 3},
        {"position": 2, "rank": 3},
        {"position": 3, "rank": 1},
    ]
    assert doc["summary"]["euler_rank_check"] == 1


def test_chase_command(capsys):
    code, doc = run_json(
        capsys, "chase", "--grass", "3,7", "--twist", "0", "--m", "1", "--t", "1"
    )
    assert code == 0
    assert doc["summary"]["vanishes"] == 1
    code, doc = run_json(
        capsys, "chase", "--grass", "2,4", "--twist", "1", "--m", "4", "--t", "1"
    )
    assert doc["summary"]["vanishes"] == 0


def test_thresholds_command(tmp_path, capsys):
    path = scenario_file(tmp_path, GOOD_SCENARIO)
    code, doc = run_json(capsys, "thresholds", "--scenario", path)
    assert code == 0
    values = {row["threshold"]: row["value"] for row in doc["rows"]}
    assert values == {"m_V": 6, "m_F(End V)": 7}


def test_poset_command(tmp_path, capsys):
    path = scenario_file(tmp_path, GOOD_SCENARIO)
    code, doc = run_json(capsys, "poset", "--scenario", path)
    assert code == 0
    assert doc["summary"]["classes"] == 2
    assert doc["summary"]["maximal"] == "1"


def test_scenario_validation(tmp_path, capsys):
    bad = dict(GOOD_SCENARIO)
    bad["extra"] = 1
    code, _ = run(capsys, "poset", "--scenario", scenario_file(tmp_path, bad))
    assert code == cli.EXIT_INPUT

    bad = dict(GOOD_SCENARIO)
    bad["schema"] = 2
    code, _ = run(capsys, "poset", "--scenario", scenario_file(tmp_path, bad))
    assert code == cli.EXIT_INPUT

    bad = dict(GOOD_SCENARIO)
    bad["N"] = {"mystery": []}
    code, _ = run(capsys, "poset", "--scenario", scenario_file(tmp_path, bad))
    assert code == cli.EXIT_INPUT

    code, _ = run(capsys, "poset", "--scenario", str(tmp_path / "missing.json"))
    assert code == cli.EXIT_INPUT


def test_universal_quotient_scenario(tmp_path, capsys):
    doc = {
        "schema": 1,
        "shape": [2, 5],
        "V": [{"weight": [0, 0], "multiplicity": 2}],
        "N": "universal-quotient",
    }
    path = scenario_file(tmp_path, doc)
    code, _ = run(capsys, "thresholds", "--scenario", path)
    assert code == cli.EXIT_INPUT  # thresholds need a split ample N
    code, out = run_json(capsys, "poset", "--scenario", path)
    assert code == 0
    assert out["summary"]["classes"] == 1


def test_reduce_commands(capsys):
    code, doc = run_json(capsys, "reduce", "--grass", "3,7")
    assert code == 0
    assert doc["summary"] == {"steps": 4, "terminal": "(2;4)"}
    code, doc = run_json(capsys, "reduce", "--flag", "3,6:9")
    assert code == 0
    assert doc["summary"]["steps"] == 3
    assert all(r["target_one_splitting"] for r in doc["rows"])
    code, _ = run(capsys, "reduce")
    assert code == cli.EXIT_INPUT
    code, _ = run(capsys, "reduce", "--grass", "3,7", "--flag", "2,4:6")
    assert code == cli.EXIT_INPUT


def test_csv_output(capsys):
    code, out = run(
        capsys, "--format", "csv", "resolution", "--nu", "2", "--m", "1"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "position,rank"
    assert lines[1] == "1,2"
    assert lines[-1].startswith("# summary:")


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code = cli.main(
        ["--output", str(target), "resolution", "--nu", "2", "--m", "2"]
    )
    capsys.readouterr()
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["command"] == "resolution"


def test_threads_do_not_change_output(tmp_path):
    outputs = []
    for threads in ("1", "4"):
        target = tmp_path / f"out-{threads}.json"
        code = cli.main(
            [
                "--threads", threads, "--output", str(target),
                "claim2", "--nu-range", "2..3", "--n-range", "2..3",
                "--k-range=-3..3",
            ]
        )
        assert code == 0
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]


def test_bad_subcommand():
    assert cli.main(["no-such-command"]) == cli.EXIT_INPUT
