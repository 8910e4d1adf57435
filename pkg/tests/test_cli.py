"""The command-line front end: exit codes, determinism, report shape."""

import json

from click.testing import CliRunner

from liekit.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_roots_json():
    res = run("roots", "--type", "A2")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["type"] == "A2"
    assert len(data["positive"]) == 3
    assert data["weyl_order"] == 6


def test_invalid_type_is_usage_error():
    res = run("roots", "--type", "H3")
    assert res.exit_code == 2
    res = run("verify", "all", "--type", "Z9")
    assert res.exit_code == 2


def test_csv_emission():
    res = run("roots", "--type", "A1", "--emit", "csv")
    assert res.exit_code == 0
    assert "weyl_order,2" in res.output


def test_rootcat_report():
    res = run("rootcat", "--type", "B2")
    data = json.loads(res.output)
    assert len(data["objects"]) == 8
    # shift is an involution on ids
    sh = data["shift"]
    assert all(sh[sh[i]] == i for i in range(len(sh)))


def test_liealg_gamma_and_killing():
    res = run("liealg", "--type", "A2", "--emit", "gamma")
    data = json.loads(res.output)
    assert all(v["gamma"] in (1, -1) for v in data["gamma"].values())
    res = run("liealg", "--type", "A1", "--emit", "killing")
    data = json.loads(res.output)
    assert data["killing"][2][2] == 8  # tr(ad h ad h) = 8 for sl2


def test_irrep_dims():
    res = run("irrep", "--type", "G2", "--weight", "1,0")
    data = json.loads(res.output)
    assert data["dim"] == 7 and data["weyl_dim"] == 7
    res = run("irrep", "--type", "A2", "--weight", "1,0,0")
    assert res.exit_code == 2


def test_verify_liealg_pass_and_mutation_fail():
    res = run("verify", "liealg", "--type", "A2")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["ok"] and all(c["ok"] for c in data["checks"])
    res = run("verify", "liealg", "--type", "A2", "--mutate-gamma", "0,2")
    assert res.exit_code == 1
    data = json.loads(res.output)
    jac = next(c for c in data["checks"] if c["check"] == "jacobi")
    assert not jac["ok"] and "witness" in jac


def test_verify_deterministic_output():
    a = run("verify", "group", "--type", "A2", "--seed", "5")
    b = run("verify", "group", "--type", "A2", "--seed", "5")
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output


def test_chevgroup_verify_exit():
    res = run("chevgroup", "verify", "--type", "A1", "--field", "q")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["ok"]


def test_peterweyl_schur_cli():
    res = run("peterweyl", "schur", "--j1", "1/2", "--j2", "1/2",
              "--grid", "8")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["schur_deviation"] < 1e-6
    res = run("peterweyl", "schur", "--j1", "x", "--j2", "1")
    assert res.exit_code == 2


def test_peterweyl_plancherel_cli():
    res = run("peterweyl", "plancherel", "--type", "A1", "--trunc", "1;2;3")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["exact_equal"]


def test_compact_exp_cli():
    res = run("compact", "exp", "--type", "A1", "--gen", "alpha",
              "--obj", "0", "--t", "0.0")
    data = json.loads(res.output)
    n = len(data["matrix"])
    assert data["matrix"] == [[float(i == j) for j in range(n)]
                              for i in range(n)]
