"""Command line behavior: outputs, exit codes, cache identity."""

import json
import os

import pytest

from surgeon import _acceptance, cli
from surgeon.diagram import check_dt_text

ASSET = os.path.join(os.path.dirname(cli.__file__), "assets", "L.pd")


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_h1_example(capsys):
    code, out, _ = run(capsys, "h1", "--slopes", "0/1,-1/3,1/3,-1/1",
                       "--link", ASSET)
    assert code == 0
    assert out.strip() == "trivial"


def test_h1_unfilled_slots(capsys):
    code, out, _ = run(capsys, "h1", "--slopes", "*,*,*,*", "--link", ASSET)
    assert code == 0
    assert out.strip() == "Z^4"


def test_cable_reduce_example(capsys):
    code, out, _ = run(capsys, "cable-reduce", "--slope", "-3/1",
                       "--cable", "2,-1")
    assert code == 0
    assert out.strip() == "-3/4"


def test_slope_modes(capsys):
    code, out, _ = run(capsys, "slope", "--normalize", "-4/-6")
    assert code == 0 and out.strip() == "2/3"
    code, out, _ = run(capsys, "slope", "--m", "3", "--n", "-2", "--json")
    assert code == 0
    assert json.loads(out) == {"slope": "-2/1", "p": -2, "q": 1}
    code, _, err = run(capsys, "slope")
    assert code == 1
    assert "normalize" in err


def test_parse_summary(capsys):
    code, out, _ = run(capsys, "parse", "--link", ASSET)
    assert code == 0
    lines = out.splitlines()
    assert "name: L" in lines
    assert "components: k l1 l2 l3" in lines
    assert "crossings: 16" in lines


def test_lk_pair_and_table(capsys):
    code, out, _ = run(capsys, "lk", "--link", ASSET, "--comps", "k,l3")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "lk", "--link", ASSET, "--json")
    data = json.loads(out)
    assert data["components"] == ["k", "l1", "l2", "l3"]
    assert data["table"][0] == [0, 0, 0, 1]


def test_twist_script(capsys):
    code, out, _ = run(capsys, "twist", "--link", ASSET, "--tables-only",
                       "--slopes", "0/1,-1/2,1/2,-1/3",
                       "--move", "annulus:l1:l2:2",
                       "--move", "delete:l1", "--move", "delete:l2",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["steps"] == ["initial", "annulus l1,l2 t=2",
                             "delete l1", "delete l2"]
    assert len(set(data["homologies"])) == 1


def test_twist_domain_error(capsys):
    code, _, err = run(capsys, "twist", "--link", ASSET, "--tables-only",
                       "--move", "rolfsen:l3:1")
    assert code == 1
    assert "unknotted" in err or "unfilled" in err


def test_family_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out, _ = run(capsys, "family", "--n", "2", "--m-range", "0..3",
                       "--report", str(report))
    assert code == 0
    assert "all match" in out
    data = json.loads(report.read_text())
    assert data["all_match"] is True
    assert len(data["pairs"]) == 6
    assert data["pairs"][0]["h1_match"] is True


def test_export_writes_dt_file(tmp_path, capsys):
    code, out, _ = run(capsys, "export", "--m", "1", "--n", "2",
                       "--out", str(tmp_path))
    assert code == 0
    path = tmp_path / "k_2_1.dt"
    assert str(path) in out
    check_dt_text(path.read_text())


def test_alex_cache_identical_bytes(tmp_path, capsys):
    argv = ["alex", "--m", "1", "--n", "1", "--json",
            "--cache", str(tmp_path)]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["source"] == "k(1,1)"
    assert data["determinant"] % 2 == 1


def test_alex_text_and_link_mode(tmp_path, capsys):
    pd = tmp_path / "trefoil.pd"
    pd.write_text("# name: trefoil\nX[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n")
    code, out, _ = run(capsys, "alex", "--link", str(pd),
                       "--cache", str(tmp_path))
    assert code == 0
    assert "t - 1 + t^-1" in out
    assert "determinant 3" in out


def test_alex_sweep_csv(tmp_path, capsys):
    csv = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "alex", "--sweep", "--m-range", "0..1",
                     "--n-range", "0..1", "--csv", str(csv))
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "m,n,determinant,coeffs"
    assert len(lines) == 5


def test_usage_errors_exit_2(capsys):
    assert cli.run([]) == 2
    capsys.readouterr()
    assert cli.run(["alex", "--bogus"]) == 2
    capsys.readouterr()
    assert cli.run(["h1"]) == 2
    capsys.readouterr()


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "parse", "--link", "/no/such/file.pd")
    assert code == 1
    assert "surgeon:" in err


def test_bad_slope_exits_1(capsys):
    code, _, err = run(capsys, "h1", "--slopes", "nope", "--link", ASSET)
    assert code == 1
    assert "surgeon:" in err


def test_verify_exit_codes(monkeypatch, capsys):
    monkeypatch.setattr(_acceptance, "CRITERIA",
                        [(1, "stub", lambda: (True, "fine"))])
    assert cli.run(["verify"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    monkeypatch.setattr(_acceptance, "CRITERIA",
                        [(1, "stub", lambda: (False, "broken"))])
    assert cli.run(["verify"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_version_flag(capsys):
    code = cli.run(["--version"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("surgeon ")
