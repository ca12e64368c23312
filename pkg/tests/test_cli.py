from __future__ import annotations

import io
import json

import pytest

from qhopf.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_normalize():
    assert run("normalize", "--preset", "glq2", "alpha*delta - q*beta*gamma") == (0, "c\n")


def test_parse_error_exit_code(capsys):
    code, _ = run("normalize", "--preset", "plane", "x^-1")
    assert code == 2
    assert "position 0" in capsys.readouterr().err


def test_usage_error_exit_code():
    assert run("verify", "--scenario", "nope")[0] == 2
    assert run("det")[0] == 2


def test_coproduct():
    code, text = run("coproduct", "--preset", "suq2", "beta")
    assert code == 0 and text.strip() == "alpha⊗beta + beta⊗delta"


def test_det():
    assert run("det", "--n", "2") == (0, "2*p^2+1\n")
    assert run("det", "--n", "3", "--as-polynomial") == (0, "1 + 4*x^1 + 3*x^2\n")


def test_quotient_basis_and_coinvariants():
    code, text = run("quotient-basis", "--scenario", "sphere", "--max-degree", "2")
    assert code == 0 and sorted(l.split("\t")[0] for l in text.splitlines()) == \
        ["1", "x1", "x2", "y1", "y2"]
    code, text = run("coinvariants", "--scenario", "plane", "--max-degree", "1")
    assert code == 0 and len(text.splitlines()) == 3


def test_verify_json_deterministic_and_exit_codes(tmp_path):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run("verify", "--scenario", "sphere-mu-eq-nu", "--max-degree", "2",
               "--out", str(f1))[0] == 0
    run("verify", "--scenario", "sphere-mu-eq-nu", "--max-degree", "2", "--out", str(f2))
    a, b = json.loads(f1.read_text()), json.loads(f2.read_text())
    a.pop("timing_ms"), b.pop("timing_ms")
    assert a == b
    assert a["summary"]["finding"] == len(a["checks"])


def test_verify_failing_report_exits_1():
    code, text = run("verify", "--scenario", "sphere", "--max-degree", "2", "--format", "text")
    assert code == 1
    assert "[        fail] sphere.i_kappa" in text


def test_unwritable_path_exits_2():
    assert run("verify", "--scenario", "axioms", "--preset", "cq2", "--max-degree", "1",
               "--out", "/nonexistent/dir/r.json")[0] == 2


def test_internal_error_exits_3(monkeypatch):
    from qhopf import cli
    from qhopf.scalar import InexactDivision

    def boom(args, out):
        raise InexactDivision("q-division left a remainder")

    monkeypatch.setattr(cli, "cmd_det", boom)
    assert run("det", "--n", "2")[0] == 3
