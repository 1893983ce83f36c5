import json
import subprocess
import sys

import pytest

from skewtca.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_q1(capsys):
    assert run(capsys, "q1", "--size", "4")[:2] == (0, "3,1\n")
    code, out, _ = run(capsys, "q1", "--size", "6", "--format", "json")
    assert json.loads(out) == {"schema": 1, "result": ["4,1,1", "3,3"]}


def test_q1_odd_size_warns(capsys):
    code, out, err = run(capsys, "q1", "--size", "5")
    assert code == 0 and out.strip() == "" and "warning" in err


def test_lr_and_decompose(capsys):
    assert run(capsys, "lr", "--lambda", "2", "--mu", "2", "--nu", "2,2")[1] == "1\n"
    code, out, _ = run(capsys, "decompose", "--op", "sym", "--d", "2", "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == [{"coeff": 1, "partition": "4"}, {"coeff": 1, "partition": "2,2"}]


def test_rect_passes(capsys):
    code, out, _ = run(capsys, "rect", "--n", "2", "--k", "2")
    assert code == 0 and out.startswith("PASS")


@pytest.mark.parametrize("argv", [["pn-top", "--n", "2"], ["unit-ideal", "--n", "1"],
                                  ["iwasawa", "--n", "3"], ["hwv", "--lambda", "1", "--n", "1"],
                                  ["ess-bound", "--lambda", "3,1", "--n0", "1"], ["nzd", "--n", "1"],
                                  ["phi", "localize", "--n", "2"], ["phi", "extend", "--n", "1"],
                                  ["phi", "inject", "--n", "2", "--degree", "2"],
                                  ["brauer", "associativity", "--max-size", "4"],
                                  ["brauer", "functor-check", "--trials", "20"]])
def test_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out


def test_brauer_compose_and_homdim(capsys):
    code, out, _ = run(capsys, "brauer", "compose", "--g", "2->0 : (1 2) map -",
                       "--f", "4->2 : (3 4) map 1:1 2:2")
    assert code == 0 and out == "- 4->0 : (1 2)(3 4) map -\n"
    assert run(capsys, "brauer", "homdim", "--p", "4", "--q", "2")[1] == "12\n"


def test_bad_diagram_is_usage_error(capsys):
    code, _, err = run(capsys, "brauer", "compose", "--g", "2->0 : (1 1) map -", "--f", "2->2 : - map 1:1 2:2")
    assert code == 64 and "error" in err


def test_phi_leading(capsys):
    code, out, _ = run(capsys, "phi", "leading", "--n", "2", "--gen", "x[1,2]", "--format", "json")
    assert json.loads(out)["result"]["x[1,2]"]["leading"] == "a[1,1] d[1,2]"


def test_ext(capsys):
    code, out, _ = run(capsys, "ext", "--side", "wedge", "--i", "1", "--lambda", "-", "--mu", "2")
    assert code == 0 and "mu_larger: 1" in out and "lambda_larger: 0" in out


def test_ext_table_csv(capsys):
    code, out, _ = run(capsys, "ext-table", "--side", "sym", "--max-i", "1", "--max-size", "2", "--csv")
    assert out.startswith("side,i,lambda,mu,branch,multiplicity\n")


def test_remark_warns_with_exit_zero(capsys):
    code, out, _ = run(capsys, "remark", "--dmax", "3")
    assert code == 0 and out.startswith("WARN") and "discrepancy" in out


def test_failure_exit_code(capsys):
    code, out, _ = run(capsys, "phi", "inject", "--n", "1", "--degree", "2", "--inject-duplicate")
    assert code == 2 and out.startswith("FAIL") and "witness" in out


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "phi", "inject", "--n", "4", "--degree", "2")
    assert code == 3 and "guard" in err


def test_out_of_range_value_is_usage(capsys):
    assert run(capsys, "remark", "--dmax", "9")[0] == 64


@pytest.mark.parametrize("argv", [["q1", "--bogus"], ["frobnicate"], ["q1"], ["hwv", "--lambda", "1,2", "--n", "1"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 64


def test_json_report_schema(capsys):
    code, out, _ = run(capsys, "pn-top", "--n", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == 1
    suite = doc["suites"][0]
    assert set(suite) == {"suite", "params", "status", "pass", "anchor", "witnesses", "details", "timing"}
    assert suite["anchor"] and suite["timing"] is None
    assert list(doc) == sorted(doc)


def test_timing_flag(capsys):
    _, out, _ = run(capsys, "pn-top", "--n", "1", "--format", "json", "--timing")
    assert isinstance(json.loads(out)["suites"][0]["timing"], float)


def test_output_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    assert main(["iwasawa", "--n", "2", "--format", "json", "--output", str(target)]) == 0
    assert json.loads(target.read_text())["suites"][0]["status"] == "pass"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewtca", "q1", "--bogus"], capture_output=True, text=True)
    assert proc.returncode == 64 and "usage" in proc.stderr


def test_worker_pool_preserves_output(monkeypatch, capsys):
    argv = ["verify-all", "--profile", "quick", "--format", "json"]
    from skewtca import suites
    jobs = [j for j in suites.plan("quick") if j[0] in ("pn-top", "iwasawa", "q1")]
    monkeypatch.setattr(suites, "plan", lambda profile, seed=0: jobs)
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("SKEWTCA_WORKERS", "3")
    _, pooled, _ = run(capsys, *argv)
    assert serial == pooled
