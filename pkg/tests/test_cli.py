import io
import json

import pytest

from qspec.cli import main
from qspec.families import FamilyParams, build_family
from qspec.formats import from_graph6, to_graph6
from qspec.graph import complement


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_k4(capsys):
    code, out, _ = run(capsys, "spectrum", "C~")
    rep = json.loads(out)
    assert code == 0
    assert rep["lambda"] == pytest.approx(2.0)
    assert rep["delta"] == 3 and rep["bipartite"] is False


def test_spectrum_stdin(capsys, monkeypatch):
    g = complement(build_family(FamilyParams("G1", 7, 0)))
    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(g) + "\n"))
    code, out, _ = run(capsys, "spectrum")
    assert json.loads(out)["lambda"] == pytest.approx(0.848853042, abs=1e-9)


def test_spectrum_bad_input(capsys):
    code, _, err = run(capsys, "spectrum", "zz!")
    assert code == 2 and "error" in err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "g1", "--p", "7", "--q", "0")
    g = from_graph6(out.strip())
    assert code == 0 and (g.n, g.m) == (12, 13)
    _, out, _ = run(capsys, "family", "theta", "--a", "1", "--b", "2", "--c", "2")
    assert from_graph6(out.strip()).n == 4
    _, out, _ = run(capsys, "family", "star2e", "--n", "12", "--complement")
    assert from_graph6(out.strip()).degree(0) == 0


def test_family_missing_param(capsys):
    code, _, err = run(capsys, "family", "g4", "--p", "1")
    assert code == 2 and "--q" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "identity27", "--p", "4", "--q", "3", "--samples", "50")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert rep["seed"] == 0 and rep["tol"] == 1e-10 and "version" in rep
    code, out, _ = run(capsys, "verify", "claimC", "--n", "12", "--grid", "10000")
    assert code == 3 and json.loads(out)["status"] == "finding"
    code, _, _ = run(capsys, "verify", "nope")
    assert code == 2
    code, _, _ = run(capsys, "verify", "claimA", "--p", "1", "--q", "1")
    assert code == 2


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["family", "h7"])
    assert info.value.code == 2


def test_census(capsys, tmp_path):
    out_path = tmp_path / "c7.csv"
    code, out, _ = run(capsys, "census", "--n", "7", "--out", str(out_path))
    summary = json.loads(out)
    assert code == 0 and summary["classes"] == 67
    assert summary["extremal"] == "G1(2,0)"
    assert out_path.read_text().startswith("canonical,n,base_kind,lambda_c,complement_connected")


def test_census_workers_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("QSPEC_WORKERS", "2")
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    from qspec.cli import build_parser
    assert build_parser().parse_args(["census", "--n", "6"]).workers == 2
    run(capsys, "census", "--n", "7", "--out", str(a), "--workers", "2")
    run(capsys, "census", "--n", "7", "--out", str(b), "--workers", "1")
    assert a.read_text() == b.read_text()
