import io
import json
import subprocess
import sys

import pytest

from efdepth.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"k2": "A_", "e2": "A?", "c5": "Dhc", "empty0": "?", "p3": "Bg"}.items():
        p = tmp_path / f"{name}.g6"
        p.write_text(text + "\n")
        paths[name] = str(p)
    return paths


def test_ef_example(capsys, files):
    code, out, _ = run(capsys, "ef", "--left", files["k2"], "--right", files["e2"], "--rounds", "2")
    assert (code, out) == (0, "spoiler\n")


def test_ef_strategy_file(capsys, files, tmp_path):
    target = tmp_path / "s.json"
    code, out, _ = run(capsys, "ef", "--left", files["p3"], "--right", files["p3"], "--rounds", "2",
                       "--strategy", str(target))
    assert code == 0 and out == "duplicator\n"
    data = json.loads(target.read_text())
    assert data["winner"] == "duplicator" and data["moves"]


def test_ef_budget_exit(capsys):
    code, _, err = run(capsys, "ef", "--left", "g6:Jhc?GC@?GG_", "--right", "g6:KhEG?C@?G?_P", "--rounds", "3",
                       "--budget", "2")
    assert code == 4 and "budget" in err


def test_bound_example(capsys, files):
    assert run(capsys, "bound", "--pattern", files["c5"], "--complement")[:2] == (0, "3\n")
    assert run(capsys, "bound", "--pattern", "g6:D~{")[:2] == (0, "5\n")


def test_synth_pipeline_subprocess(files):
    synth = subprocess.run([sys.executable, "-m", "efdepth.cli", "synth", "--target", files["empty0"]],
                           capture_output=True, text=True, check=True)
    depth = subprocess.run([sys.executable, "-m", "efdepth.cli", "depth", "--formula", "-"],
                           input=synth.stdout, capture_output=True, text=True, check=True)
    assert depth.stdout == "3\n"


def test_gen_round_trip(capsys, monkeypatch):
    for args in (["cycle", "7"], ["almost_multipartite", "4", "3", "1"], ["thm3_g311"], ["thm2", "1", "2", "2", "2"]):
        _, g6, _ = run(capsys, "gen", *args)
        _, el, _ = run(capsys, "encode", "--to", "edgelist", stdin=g6, monkeypatch=monkeypatch)
        _, back, _ = run(capsys, "decode", "--from", "edgelist", stdin=el, monkeypatch=monkeypatch)
        assert back == g6


def test_gen_parts_and_output(capsys, tmp_path):
    out = tmp_path / "f.g6"
    assert run(capsys, "gen", "thm3_c5", "--part", "F", "-o", str(out))[0] == 0
    assert out.read_text() == "Dhc\n"
    assert run(capsys, "gen", "nosuch")[0] == 2


def test_eval_and_depth(capsys, files):
    assert run(capsys, "eval", "--formula", "Ex.Ey.x~y", "--graph", files["k2"])[:2] == (0, "true\n")
    assert run(capsys, "eval", "--formula", "Ex.Ey.x~y", "--graph", files["e2"])[:2] == (1, "false\n")
    assert run(capsys, "eval", "--formula", "x~y", "--graph", files["k2"], "--env", "x=0", "y=1")[0] == 2
    assert run(capsys, "depth", "--formula", "Ax.Ey.Ez.(y~z)")[:2] == (0, "3\n")
    assert run(capsys, "depth", "--formula", "Ex.(x~")[0] == 2


def test_verify_policy(capsys):
    code, out, _ = run(capsys, "verify-policy", "--name", "thm2", "--instance", "thm2", "1", "2", "2", "2")
    assert code == 0 and out.startswith("ok")
    code, out, _ = run(capsys, "verify-policy", "--name", "thm1_2", "--instance", "thm1_2", "1", "--rounds", "3")
    assert code == 3 and out.strip().endswith("winner: spoiler")
    assert run(capsys, "verify-policy", "--name", "thm2", "--instance", "thm1_2", "1")[0] == 2


def test_distinguish(capsys, files):
    code, out, _ = run(capsys, "distinguish", "--left", files["k2"], "--right", files["e2"], "--rounds", "2")
    assert code == 0
    assert run(capsys, "eval", "--formula", out.strip(), "--graph", files["k2"])[0] == 0
    assert run(capsys, "eval", "--formula", out.strip(), "--graph", files["e2"])[0] == 1
    assert run(capsys, "distinguish", "--left", files["k2"], "--right", files["e2"], "--rounds", "1")[:2] == (1, "none\n")


def test_certificates_through_files(capsys, files, tmp_path):
    cert = tmp_path / "c.json"
    code, _, _ = run(capsys, "certify-lower", "--pattern", "g6:Dhc", "--left", "g6:Jhc?GC@?GG_",
                     "--right", "g6:KhEG?C@?G?_P", "--rounds", "3", "-o", str(cert))
    assert code == 0 and json.loads(cert.read_text())["claimed_bound"] == 4
    assert run(capsys, "check-cert", str(cert))[:2] == (0, "verified\n")
    code, _, err = run(capsys, "certify-lower", "--pattern", files["k2"], "--left", files["k2"],
                       "--right", files["k2"], "--rounds", "1")
    assert code == 3 and "F-in-H" in err
    code, out, err = run(capsys, "certify-upper", "--pattern", "g6:Bw", "--formula", "Ex1.Ex2.(x1~x2)", "--max-n", "5")
    assert code == 3 and "counterexample" in err and json.loads(out)["verified"] is False
    code, out, err = run(capsys, "certify-upper", "--pattern", files["p3"],
                         "--formula", "Ex1.Ex2.Ex3.(x1~x2 & x2~x3 & !(x1~x3) & !(x1=x3))", "--max-n", "5")
    assert code == 0 and "not a proof" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "check-cert", str(bad))[0] == 2


def test_search_pair(capsys):
    code, out, _ = run(capsys, "search-pair", "--pattern", "g6:A_", "--rounds", "1", "--max-n", "3")
    assert code == 0 and json.loads(out)["verified"]
    assert run(capsys, "search-pair", "--pattern", "g6:@", "--rounds", "1", "--max-n", "4")[:2] == (1, "none\n")
    assert run(capsys, "search-pair", "--pattern", "g6:Cg", "--rounds", "2", "--max-n", "6", "--budget", "3")[0] == 4


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ef", "--left", "x"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert run(capsys, "bound", "--pattern", "g6:A")[0] == 2


def test_play_via_cli(capsys, files, monkeypatch):
    code, out, _ = run(capsys, "play", "--left", files["k2"], "--right", files["e2"], "--rounds", "2",
                       "--as", "spoiler", stdin="G 0\nG 1\n", monkeypatch=monkeypatch)
    assert code == 0 and "winner: spoiler" in out
