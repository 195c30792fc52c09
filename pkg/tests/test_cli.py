"""The command-line front end: examples, exit codes, formats, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ssweil.cli import main

REPORT_KEYS = ["schema", "subcommand", "field", "inputs", "lpoly", "counts", "supersingular",
               "orders", "e_vector", "period", "parity", "type", "evidence"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert list(rep) == REPORT_KEYS and rep["schema"] == 1
    assert rep["type"] is None or "rule" in rep["type"]
    return rep


def test_elliptic_enumerate(capsys):
    rep = run_json(capsys, "elliptic", "--p", "2", "--r", "1", "--enumerate")
    assert [row["case"] for row in rep["evidence"]["rows"]] == ["W3", "W4a+", "W4a-"]


def test_elliptic_beta(capsys):
    rep = run_json(capsys, "elliptic", "--p", "7", "--r", "1", "--beta", "0")
    assert rep["evidence"]["case"] == "W3"
    assert (rep["period"], rep["parity"], rep["lpoly"]) == (2, 1, [1, 0, 7])


def test_elliptic_not_supersingular(capsys):
    code, out, err = run(capsys, "elliptic", "--p", "7", "--r", "1", "--beta", "3")
    assert code == 2 and "NotSupersingular" in err


def test_elliptic_model(capsys):
    rep = run_json(capsys, "elliptic", "--p", "5", "--coeffs", "0,0,0,0,1")
    assert rep["type"] == {"label": "FullyMaximal", "rule": "elliptic-j-field"}
    assert rep["supersingular"] is True


def test_elliptic_j_outside_prime_field(capsys):
    from ssweil import finitefield as ff
    from ssweil.twistlab.elliptic import supersingular_j
    j = next(x for x in supersingular_j(37) if not ff.contains(ff.make_field(37, 2), x, 1))
    rep = run_json(capsys, "elliptic", "--p", "37", "--j", str(j))
    assert rep["field"] == {"p": 37, "r": 2} and rep["type"]["label"] == "Mixed"


def test_surface(capsys):
    rep = run_json(capsys, "surface", "--p", "2", "--r", "1", "--a1", "0", "--a2", "-4")
    assert rep["type"]["label"] == "FullyMinimal" and rep["evidence"]["case"] == "7a"
    rep = run_json(capsys, "surface", "--p", "2", "--r", "2", "--a1", "0", "--a2", "0")
    assert rep["type"]["label"] == "FullyMaximal" and rep["evidence"]["case"] == "1a"
    code, _, err = run(capsys, "surface", "--p", "2", "--r", "1", "--a1", "1", "--a2", "0")
    assert code == 2 and "NotInTable" in err


def test_genus3(capsys):
    rep = run_json(capsys, "genus3", "--r", "1", "--c", "1", "--d", "1")
    assert rep["type"] == {"label": "Mixed", "rule": "genus3-twist-pipeline"}
    rep = run_json(capsys, "genus3", "--r", "2", "--c", "2", "--d", "1")
    assert rep["type"]["label"] == "FullyMinimal"
    rep = run_json(capsys, "genus3", "--r", "4", "--all")
    counts = rep["evidence"]["type_counts"]
    assert sum(counts.values()) == 225
    assert all(k.startswith("FullyMinimal/") for k in counts)


def test_curve(capsys):
    rep = run_json(capsys, "curve", "--family", "fermat", "--p", "3", "--coeffs", "4",
                   "--ext", "2")
    assert rep["evidence"]["ext"]["count"] == 28
    rep = run_json(capsys, "curve", "--family", "hyperelliptic", "--p", "7",
                   "--coeffs=-1,0,0,0,0,1")
    assert rep["evidence"]["a1a2"] == [0, 0]
    assert rep["type"]["label"] == "FullyMaximal"
    rep = run_json(capsys, "curve", "--family", "as34", "--p", "2", "--coeffs", "1,1")
    assert rep["counts"][0] == 3


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--p", "3", "--r", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["beta,class_count,period,parity", "-6,1,1,1", "-3,1,3,-1",
                                "0,2,2,1", "3,1,3,1", "6,1,1,-1"]


def test_table_format(capsys):
    code, out, _ = run(capsys, "elliptic", "--p", "2", "--enumerate")
    assert code == 0 and "W4a+" in out and "[elliptic-trace-table]" in out


@pytest.mark.parametrize("argv", [["census", "--p", "5", "--r", "2"],
                                  ["genus3", "--r", "3", "--all"]])
def test_threads_do_not_change_output(capsys, argv):
    outs = []
    for n in ("1", "3"):
        code, out, _ = run(capsys, *argv, "--format", "json", "--threads", n)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


@pytest.mark.parametrize("argv,code", [
    (["elliptic", "--p", "4", "--beta", "0"], 2),
    (["elliptic", "--p", "7"], 2),
    (["curve", "--family", "weierstrass", "--p", "3", "--coeffs", "0,0,0,0,0"], 2),
    (["curve", "--family", "as34", "--p", "3", "--coeffs", "1,1"], 2),
    (["genus3", "--r", "2", "--c", "0", "--d", "1"], 2),
    (["genus3", "--r", "2", "--c", "9", "--d", "1"], 2),
    (["bogus"], 2),
])
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:          # argparse usage errors
        got = exc.code
    capsys.readouterr()
    assert got == code


def test_json_error_is_structured(capsys):
    code, out, _ = run(capsys, "elliptic", "--p", "7", "--beta", "3", "--format", "json")
    err = json.loads(out)
    assert code == 2 and err["error"]["kind"] == "NotSupersingular" and err["schema"] == 1


def test_consistency_failure_exit_code(monkeypatch, capsys):
    from ssweil import cli
    from ssweil.errors import TableMismatch

    def boom(*args, **kwargs):
        raise TableMismatch("forced")
    monkeypatch.setattr(cli, "surface_table", boom)
    code, _, err = run(capsys, "surface", "--p", "2", "--a1", "0", "--a2", "-4")
    assert code == 3 and "TableMismatch" in err


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "ssweil.cli", "elliptic", "--p", "7",
                          "--beta", "0", "--format", "json"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["parity"] == 1
