import json
import os
import subprocess
import sys

import pytest

from affschur import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def as_json(out):
    return json.loads(out)


def test_multiply_word(capsys):
    code, out, _ = run(capsys, "multiply", '["e1"]', "--n", "2", "--r", "1")
    assert code == 0
    assert as_json(out) == {"n": 2, "r": 1, "terms": [{"matrix": {"n": 2, "entries": [[1, 2, 1]]}, "coeff": "1/1"}]}


def test_multiply_idempotent_pairs(capsys):
    k11 = {"n": 2, "entries": [[1, 1, 1], [2, 2, 1]]}
    k20 = {"n": 2, "entries": [[1, 1, 2]]}
    code, out, _ = run(capsys, "multiply", json.dumps([k11, k11]))
    assert code == 0 and as_json(out)["terms"] == [{"matrix": k11, "coeff": "1/1"}]
    code, out, _ = run(capsys, "multiply", json.dumps({"left": k20, "right": k11}))
    assert code == 0 and as_json(out)["terms"] == []


def test_multiply_text_format(capsys):
    code, out, _ = run(capsys, "multiply", '["f1", "e1"]', "--n", "2", "--r", "1", "--format", "text")
    assert code == 0
    assert out.strip() == "S(2, 1): 1/1*[2,2:1]"


def test_normal_form(capsys):
    code, out, _ = run(capsys, "normal-form", json.dumps({"n": 2, "entries": [[1, 1, 1]]}))
    obj = as_json(out)
    assert code == 0 and obj["round_trip"] is True
    assert obj["coordinates"] == [{"Aplus": {"n": 2, "entries": []}, "lambda": [1, 0],
                                   "Aminus": {"n": 2, "entries": []}, "coeff": "1/1"}]
    code, out, _ = run(capsys, "normal-form", json.dumps({"n": 2, "entries": [[1, 1, 1], [1, 2, 1]]}))
    obj = as_json(out)
    assert [(c["Aplus"]["entries"], c["lambda"], c["coeff"]) for c in obj["coordinates"]] == [([[1, 2, 1]], [1, 1], "1/1")]


def test_verify_and_closed_form(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--r", "1")
    rep = as_json(out)
    assert code == 0 and rep["passed"] and rep["bounds"] == {"mmax": 2, "tmax": 3, "band": 4}
    code, out, _ = run(capsys, "closed-form-check", "--n", "2", "--r", "2", "--i", "1", "--tmax", "2")
    assert code == 0 and as_json(out)["checked"] == 4 + 16


def test_input_errors(capsys):
    code, _, err = run(capsys, "multiply", '{"n": 2, "entries": [[1, 2', "--n", "2", "--r", "1")
    assert code == 2 and "column" in err
    code, _, err = run(capsys, "multiply", '["q7"]', "--n", "2", "--r", "1")
    assert code == 2
    code, _, _ = run(capsys, "multiply", '["e1"]')
    assert code == 2
    code, _, _ = run(capsys, "verify", "--n", "2", "--r", "1", "--band", "-1")
    assert code == 2
    code, _, _ = run(capsys, "normal-form", '{"n": 2, "entries": [[1, 1, -1]]}')
    assert code == 2


def test_mismatch_exit_code(capsys):
    x = {"n": 2, "entries": [[1, 1, 1]]}
    y = {"n": 2, "entries": [[1, 1, 2]]}
    code, _, err = run(capsys, "multiply", json.dumps([x, y]))
    assert code == 3 and "mismatch" in err
    code, _, _ = run(capsys, "normal-form", json.dumps(x), "--r", "2")
    assert code == 3


def test_reads_file_and_stdin(capsys, tmp_path, monkeypatch):
    import io

    path = tmp_path / "word.json"
    path.write_text('["e1", "f1"]')
    code, out, _ = run(capsys, "multiply", str(path), "--n", "2", "--r", "1")
    assert code == 0
    monkeypatch.setattr(sys, "stdin", io.StringIO('["e1", "f1"]'))
    code, out2, _ = run(capsys, "multiply", "-", "--n", "2", "--r", "1")
    assert code == 0 and out2 == out


def _subprocess(args, env=None):
    full = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "affschur.cli", *args], capture_output=True, text=True, env=full)


def test_output_is_deterministic():
    args = ["verify", "--n", "2", "--r", "2", "--mmax", "1", "--tmax", "2"]
    a, b = _subprocess(args), _subprocess(args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_fault_injection_fails_verification():
    proc = _subprocess(["verify", "--n", "2", "--r", "1", "--mmax", "1", "--tmax", "2"], {cli.FAULT_ENV: "1"})
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["passed"] is False


@pytest.fixture(autouse=True)
def _clear_fault():
    yield
    cli.set_fault(False)
