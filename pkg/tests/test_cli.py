import json

import pytest

from slorbits.cli import Report, main, run_suite


def write(tmp_path, name, n, rows):
    p = tmp_path / name
    p.write_text(json.dumps({"n": n, "entries": rows}))
    return str(p)


def test_invariants_command(tmp_path, capsys):
    f = write(tmp_path, "a.json", 2, [["1", "0"], ["0", "-1"]])
    assert main(["invariants", f, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["schema_version"] == "1"
    steps = {s["description"]: s["computed"] for s in out["steps"]}
    assert steps["T2"] == "2" and steps["genericity class"] == "Generic(2,0)"


def test_invariants_family_point(tmp_path, capsys):
    f = write(tmp_path, "t.json", 4, [["7/5", 0, 0, 0], [0, "-7/5", 0, 0], [0, 0, "1/5", 0], [0, 0, 0, "-1/5"]])
    assert main(["invariants", f]) == 0
    out = capsys.readouterr().out
    assert "T2" in out and "computed: 4" in out


def test_not_traceless_exits_2(tmp_path, capsys):
    f = write(tmp_path, "b.json", 2, [["1", "0"], ["0", "1"]])
    assert main(["invariants", f]) == 2
    assert "trace = 2" in capsys.readouterr().err


def test_separate_mismatch_exits_2(tmp_path):
    a = write(tmp_path, "a.json", 2, [["1", "0"], ["0", "-1"]])
    b = write(tmp_path, "b.json", 3, [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "0"]])
    assert main(["separate", a, b]) == 2


def test_separate_pair(tmp_path, capsys):
    a = write(tmp_path, "a.json", 2, [["1", "0"], ["0", "-1"]])
    b = write(tmp_path, "b.json", 2, [["0", "1"], ["1", "0"]])
    assert main(["separate", a, b]) == 0
    assert "SameInvariants_SingleOrbit" in capsys.readouterr().out


def test_unknown_suite_exits_2():
    with pytest.raises(SystemExit) as err:
        main(["verify", "nope"])
    assert err.value.code == 2


def test_json_round_trip(capsys):
    assert main(["verify", "dims", "--n", "3", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    rep = Report.from_dict(d)
    assert rep.to_dict() == d
    assert any("v0110" in s.description for s in rep.steps)


def test_seeded_suites_are_reproducible():
    a = run_suite("newton", n=4, samples=30, seed=42).to_dict()
    b = run_suite("newton", n=4, samples=30, seed=42).to_dict()
    assert a == b and a["overall"] == "pass"


@pytest.mark.parametrize("suite", ["hwv", "eliminate-deg2", "counterexample", "separate"])
def test_passing_suites(suite):
    assert run_suite(suite).overall == "pass"


def test_exit_code_follows_report():
    rep = run_suite("eliminate-deg3")
    assert rep.exit_code == (0 if rep.overall == "pass" else 1)
