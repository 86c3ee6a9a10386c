"""Command-line surface: exit codes, JSON round trips, human output."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hamfix import builtin, config_from_dict, config_to_dict
from hamfix.cli import main
from hamfix.model import sort_key


@pytest.fixture()
def o_file(tmp_path):
    path = tmp_path / "o.json"
    path.write_text(json.dumps(config_to_dict(builtin("o"))))
    return str(path)


@pytest.fixture()
def mutated_file(tmp_path):
    doc = config_to_dict(builtin("o"))
    for e in doc["edges"]:
        if (e["lo"], e["hi"], e["w"]) == (0, 2, 4):
            e["w"] = 2
    path = tmp_path / "mutated.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_check_pass(o_file, capsys):
    assert main(["check", o_file]) == 0
    out = capsys.readouterr().out
    assert "pass: True" in out and "c1: 3" in out


def test_check_fail_exit_code(mutated_file, capsys):
    assert main(["check", mutated_file]) == 1
    doc = None
    capsys.readouterr()
    assert main(["check", mutated_file, "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is False
    assert doc["violations"]


def test_check_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["check", str(bad)]) == 2
    missing = tmp_path / "missing.json"
    assert main(["check", str(missing)]) == 2


def test_report_json(o_file, capsys):
    assert main(["report", o_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["c1"] == 3
    assert doc["ring_q"] == ["1", "1", "1/3", "1/6", "1/18", "1/18"]
    assert doc["chern_ordinary"] == [3, 13, 22, 30, 6]
    assert doc["integrals"]["omega5"] == "18"


def test_report_human_contains_core_values(o_file, capsys):
    assert main(["report", o_file]) == 0
    out = capsys.readouterr().out
    assert "1/18" in out and "3 13 22 30 6" in out


def test_report_on_failing_config(mutated_file, capsys):
    assert main(["report", mutated_file]) == 1
    out = capsys.readouterr().out
    assert "no cohomology report" in out


def test_enumerate_json(capsys):
    code = main(
        [
            "enumerate",
            "--max-weight", "5",
            "--max-width", "5",
            "--threads", "1",
            "--seed-stats",
            "--json",
        ]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["spec"]["maxWeight"] == 5
    assert len(doc["configurations"]) == 1
    restored = config_from_dict(doc["configurations"][0])
    assert sort_key(restored) == sort_key(builtin("cp5", 1, 1, 1, 1, 1))
    assert doc["statistics"]["nodes"] > 0


def test_enumerate_bad_prune_rule():
    assert main(["enumerate", "--max-weight", "2", "--max-width", "5", "--no-prune", "bogus"]) == 2


def test_verify_thm3(capsys):
    assert main(["verify", "thm3", "--threads", "1", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is True


def test_verify_thm4_requires_params(capsys):
    assert main(["verify", "thm4"]) == 2
    assert main(["verify", "thm4", "--a", "1", "--c", "4"]) == 2


def test_examples_list(capsys):
    assert main(["examples", "list"]) == 0
    assert capsys.readouterr().out.split() == ["o", "cp5", "grass", "remark_w7"]


def test_examples_export_round_trip(capsys):
    assert main(["examples", "export", "cp5", "1", "1", "1", "1", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert config_from_dict(doc) == builtin("cp5", 1, 1, 1, 1, 1)


def test_examples_show(capsys):
    assert main(["examples", "show", "o"]) == 0
    out = capsys.readouterr().out
    assert "gaps:      (1, 3, 2, 3, 1)" in out


def test_examples_missing_name(capsys):
    with pytest.raises(SystemExit) as err:
        main(["examples", "show"])
    assert err.value.code == 2


def test_examples_bad_params(capsys):
    assert main(["examples", "export", "grass", "1", "1", "3"]) == 2


def test_project_gkm(capsys):
    assert main(["project-gkm"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert config_from_dict(doc).moment == (0, 1, 4, 6, 9, 10)
    assert main(["project-gkm", "--xi", "1,0"]) == 2


def test_console_script_entry_point(o_file):
    proc = subprocess.run(
        [sys.executable, "-m", "hamfix.cli", "check", o_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "pass: True" in proc.stdout
