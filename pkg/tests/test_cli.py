import json
import subprocess
import sys

import pytest

from curvelab.cli import main


def _body(path):
    return json.loads(path.read_text())["body"]


def test_census_writes_files(tmp_path, capsys):
    assert main(["census", "--surface", "1,1", "--bound", "4", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "census_S1_1_W4.json").exists()
    types = _body(tmp_path / "types_S1_1_W4.json")
    assert types["histogram"] == {"nonseparating": len(types["types"])}
    inter = _body(tmp_path / "intersections_S1_1_W4.json")
    assert len(inter["intersections"]) == len(inter["curves"])
    assert "nonseparating" in capsys.readouterr().out


def test_report_body_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert main(["census", "--surface", "1,2", "--bound", "6", "--out", str(d)]) == 0
    for name in ("types_S1_2_W6.json", "intersections_S1_2_W6.json"):
        assert _body(a / name) == _body(b / name)
    assert (a / "census_S1_2_W6.json").read_text() == (b / "census_S1_2_W6.json").read_text()


def test_verify_pass(tmp_path, capsys):
    assert main(["verify", "--suite", "squares,linear-or-cyclic", "--bound", "8", "--n-range", "4..5",
                 "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "squares S_0,5: ok" in out and "squares S_1,2: ok" in out
    body = _body(tmp_path / "verify.json")
    assert [s["ok"] for s in body["suites"]] == [True, True, True]


def test_verify_counterexample_exit_one(tmp_path, capsys):
    code = main(["verify", "--suite", "duality", "--bound", "12", "--escalate-limit", "0", "--out", str(tmp_path)])
    assert code == 1
    assert "first counterexample" in capsys.readouterr().out
    suite = _body(tmp_path / "verify.json")["suites"][0]
    assert not suite["ok"] and suite["hard_failures"]


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "cover", "--surface", "1,3"],
    ["verify", "--suite", "squares", "--escalate-limit", "3"],
    ["verify", "--suite", "squares", "--n-range", "7..4"],
    ["census", "--surface", "0,2"],
    ["census", "--surface", "x"],
    ["census", "--bound", "-1"],
])
def test_usage_errors_exit_two(argv, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(argv + ["--out", str(tmp_path)])
    assert exc.value.code == 2


def test_env_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("CURVELAB_OUT", str(tmp_path / "env"))
    assert main(["pants", "--surface", "1,2"]) == 0
    body = _body(tmp_path / "env" / "pants_S1_2.json")
    assert len(body["classes"]) == 2


def test_export_abstract_and_empty(tmp_path):
    assert main(["export", "--surface", "1,5", "--out", str(tmp_path / "abs")]) == 0
    dots = sorted(p.name for p in (tmp_path / "abs").glob("*.dot"))
    assert len(dots) == 10
    assert any("linear" in n for n in dots) and any("cyclic" in n for n in dots)
    # no decomposition fits in a tiny census, so nothing is written
    assert main(["export", "--surface", "1,3", "--bound", "1", "--out", str(tmp_path / "none")]) == 0
    assert not (tmp_path / "none").exists()


def test_export_concrete(tmp_path):
    assert main(["export", "--surface", "1,2", "--bound", "6", "--out", str(tmp_path)]) == 0
    dots = list(tmp_path.glob("S1_2_W6_p*.dot"))
    assert dots and all(p.read_text().startswith("graph ") for p in dots)


def test_console_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "curvelab.cli", "verify", "--suite", "cover,squares", "--bound", "6",
                        "--threads", "2", "--out", str(tmp_path)], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert "cover: ok" in r.stdout and "squares S_0,5: ok" in r.stdout
