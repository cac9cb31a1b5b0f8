import json

from efdepth.suite import run_paper_suite


def test_core_suite_and_sabotage(tmp_path):
    report = run_paper_suite("core", tmp_path / "ok")
    assert report.passed, report.table()
    assert [r.criterion for r in report.rows] == list(range(1, 9))
    assert (tmp_path / "ok" / "report.json").exists()
    assert json.loads((tmp_path / "ok" / "thm3_c5.cert.json").read_text())["verified"]

    bad = run_paper_suite("core", tmp_path / "bad", sabotage_p0=0)
    assert not bad.passed
    failed = [r for r in bad.rows if not r.passed]
    assert [r.criterion for r in failed] == [4]
    assert "counterexample" in failed[0].detail
    assert any(p.endswith("counterexample.g6") for p in failed[0].artifacts)
    assert "FAIL" in bad.table()
