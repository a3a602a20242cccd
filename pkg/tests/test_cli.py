from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from skeincalc.cli import main
from skeincalc.skein import SkeinElement

EMPTY_JSON = {"terms": [{"monomial": [0, 0, 0], "coeff": {"0": 1}}]}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    write.dir = tmp_path
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eta_empty(capsys, files):
    code, out, _ = run(capsys, "eta", "--k", "2", "2", "2", "--in", files("e.json", EMPTY_JSON))
    assert code == 0 and out.strip() == '{"a":16,"b":0}'


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "formula0", "--range", "k1=1:3", "k2=1:3", "n3=0:3")
    assert code == 0 and json.loads(out)["checked"] == 36
    code, out, _ = run(capsys, "verify", "--identity", "L1_1", "--range", "n1=0:1", "n2=0:1", "--residuals")
    report = json.loads(out)
    assert code == 1 and report["failures"][0]["residuals"][0]["equation"] == 1


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--identity", "bogus")[0] == 2
    assert run(capsys, "verify", "--identity", "formula0", "--range", "zz=0:1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--identity", "formula0", "--range", "k1=1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eta", "--k", "2", "2", "2", "--in", "x", "--frobnicate"])
    assert exc.value.code == 2


def test_reduce_d2_echo_and_cert(capsys, files):
    src = files("e.json", EMPTY_JSON)
    cert = str(files.dir / "c.json")
    code, out, _ = run(capsys, "reduce-d2", "--k", "1", "2", "--in", src, "--cert", cert)
    assert code == 0 and json.loads(out) == EMPTY_JSON
    assert json.loads(open(cert).read()) == {"steps": []}


def test_reduce_s2_then_check_cert(capsys, files):
    src = files("x.json", {"terms": [{"monomial": [1, 4, 6], "coeff": {"-1": 2, "3": 1}}]})
    cert = str(files.dir / "c.json")
    code, out, _ = run(capsys, "reduce-s2", "--k", "2", "3", "4", "--in", src, "--cert", cert)
    assert code == 0
    dst = files("y.json", out)
    code, out, _ = run(capsys, "check-cert", "--in", src, "--out", dst, "--cert", cert)
    assert code == 0 and json.loads(out)["balanced"] is True
    wrong = files("z.json", EMPTY_JSON)
    code, out, _ = run(capsys, "check-cert", "--in", src, "--out", wrong, "--cert", cert)
    assert code == 1 and json.loads(out)["balanced"] is False


def test_relator_basis_generators(capsys):
    code, out, _ = run(capsys, "relator", "--family", "12", "--n", "1", "0", "0", "--k", "1", "1")
    assert code == 0
    e = SkeinElement.from_json(json.loads(out))
    assert len(e) == 2
    assert run(capsys, "relator", "--family", "13", "--n", "1", "0", "0", "--k", "1", "1")[0] == 2
    code, out, _ = run(capsys, "basis", "--k", "1", "1", "--n3-max", "0")
    assert json.loads(out) == {"count": 2, "monomials": [[0, 0, 0], [1, 0, 0]]}
    code, out, _ = run(capsys, "generators", "--k", "2", "3", "4")
    assert json.loads(out)["count"] == 60


def test_input_errors(capsys, files):
    code, _, err = run(capsys, "eta", "--k", "2", "2", "2", "--in", str(files.dir / "missing.json"))
    assert code == 2 and "missing.json" in err
    bad = files("bad.json", '{"terms":[{"monomial":[0,0,0],"coeff":{"0":1.0}}]}')
    assert run(capsys, "eta", "--k", "2", "2", "2", "--in", bad)[0] == 2
    zero = files("zero.json", {"terms": [{"monomial": [0, 0, 0], "coeff": {"0": 0}}]})
    assert run(capsys, "reduce-d2", "--k", "1", "1", "--in", zero)[0] == 2
    assert run(capsys, "reduce-s2", "--k", "1", "2", "2", "--in", files("e.json", EMPTY_JSON))[0] == 2


def test_term_limit_aborts_cleanly(capsys, files, monkeypatch):
    monkeypatch.setenv("SKEINCALC_MAX_TERMS", "3")
    src = files("big.json", {"terms": [{"monomial": [9, 9, 9], "coeff": {"0": 1}}]})
    code, _, err = run(capsys, "reduce-s2", "--k", "2", "2", "2", "--in", src)
    assert code == 1 and "aborted" in err


def test_round_trip_and_determinism(files):
    src = files("x.json", {"terms": [{"monomial": [3, 5, 2], "coeff": {"0": 1}}]})
    cmd = [sys.executable, "-m", "skeincalc", "reduce-d2", "--k", "2", "3", "--in", src]
    outs = [subprocess.run(cmd, capture_output=True, text=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]
    e = SkeinElement.from_json(json.loads(outs[0]))
    assert json.dumps(e.to_json(), separators=(",", ":")) == outs[0].strip()
