import json

import pytest

from agpoly.cli import main, render_graded
from agpoly.qpoly import GradedSeries, QPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,text",
    [
        (["multinomial", "--L", "2", "--a", "2", "--p", "0", "--k", "2"], "1 + q + q^2"),
        (["oracle", "--k", "1", "--i", "2", "--iprime", "2", "--L", "4"], "1 + q + q^2 + q^3 + q^4"),
        (["boson", "--L", "0", "--k", "2", "--i", "1", "--iprime", "1"], "1"),
        (["binomial", "--L", "4", "--a", "2"], "1 + q + 2*q^2 + q^3 + q^4"),
        (["fq", "--k", "1", "--i", "2", "--L", "2"], "1 + q"),
        (["tilde", "--L", "1", "--a", "1", "--p", "0", "--k", "2"], "q"),
        (["fermion", "--k", "1", "--i", "2", "--iprime", "2", "--L", "4", "--ell", "1"], "1 + q + q^2 + q^3 + q^4"),
    ],
)
def test_compute_text(capsys, argv, text):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == 0 and out.strip() == text


def test_compute_json_round_trips_with_text(capsys):
    argv = ["compute", "boson", "--k", "2", "--i", "3", "--iprime", "3", "--L", "4"]
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--json")
    assert QPoly.from_json(json.loads(js)) == QPoly.parse(text.strip())


def test_compute_e7_and_dual(capsys):
    code, out, _ = run(capsys, "compute", "e7", "--k", "1", "--i", "2", "--L", "4")
    assert code == 0 and out.splitlines()[0] == "true"
    code, out, _ = run(capsys, "compute", "dual", "--k", "1", "--i", "2", "--iprime", "2", "--form", "corrected")
    assert code == 0 and out.splitlines()[-1] == "equal: true"
    code, out, _ = run(capsys, "compute", "dual", "--k", "1", "--i", "2", "--iprime", "2")
    assert out.splitlines()[-1] == "equal: false"


def test_compute_usage_errors(capsys):
    assert run(capsys, "compute", "multinomial", "--L", "2")[0] == 2
    assert run(capsys, "compute", "fermion", "--k", "2", "--i", "1", "--iprime", "1", "--L", "0")[0] == 2
    assert run(capsys, "compute", "boson", "--k", "2", "--i", "9", "--iprime", "1", "--L", "3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "nonsense"])
    assert exc.value.code == 2


def test_verify_exit_codes(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "theorem5", "--k", "1..2", "--L", "0..8", "--workers", "1")
    assert code == 0 and json.loads(out)["pass"] is True and "PASS" in err
    code, out, _ = run(capsys, "verify", "theorem5", "--L", "", "--workers", "1", "--quiet")
    assert code == 0 and json.loads(out)["points"] == 0
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "selftest-corrupted", "--out", str(report), "--workers", "1")
    assert code == 1 and out == "" and len(json.loads(report.read_text())["witnesses"]) == 1
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "verify", "fq", "--iprime", "1")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_verify_config_files(capsys, tmp_path):
    toml = tmp_path / "sweep.toml"
    toml.write_text('suite = "e7"\nworkers = 1\n[grid]\nk = "1..2"\nL = "0..4"\na_max = "L"\n')
    code, out, _ = run(capsys, "verify", "--config", str(toml), "--quiet")
    js = json.loads(out)
    assert code == 1 and js["grid"]["a_max"] == "L" and js["grid"]["L"] == [0, 1, 2, 3, 4]
    cfg = tmp_path / "sweep.json"
    cfg.write_text(json.dumps({"suite": "e7", "workers": 1, "k": [1], "L": "0..3"}))
    assert run(capsys, "verify", "--config", str(cfg), "--quiet")[0] == 0
    # flags override the file
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--L", "2", "--quiet")
    assert json.loads(out)["grid"]["L"] == [2]


def test_verify_is_deterministic(capsys):
    argv = ["verify", "conjecture13", "--k", "1..2", "--L", "0..5", "--quiet"]
    first = run(capsys, *argv, "--workers", "1")[1]
    second = run(capsys, *argv, "--workers", "2")[1]
    assert first == second


def test_list_suites(capsys):
    code, out, _ = run(capsys, "list-suites")
    names = [line.split()[0] for line in out.splitlines()]
    assert code == 0 and len(names) == 12 and "theorem6" in names
    assert names == [line.split()[0] for line in run(capsys, "list-suites")[1].splitlines()]
    assert "selftest-corrupted" in run(capsys, "list-suites", "--all")[1]


def test_render_graded():
    s = GradedSeries(4, {0: 1, 2: -2, 4: 1}, 9)
    assert render_graded(s) == "1 - 2*q^(1/2) + q + O(q^(5/2))"
    assert render_graded(GradedSeries(4, {}, 3)) == "O(q^(1))"
