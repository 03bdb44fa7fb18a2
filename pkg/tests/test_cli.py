import json

from diamondgf.cli import VerifyReport, main

CHAIN_FILE = "elements 3\ncover 1 2\ncover 2 3\n"
DIAMOND_FILE = "elements 4\ncover 1 2\ncover 1 3\ncover 2 4\ncover 3 4\nassign a 2 3\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_em_command(capsys):
    code, out, _ = run(capsys, "em", "--d", "3")
    assert code == 0
    assert out.strip() == "1 + 2*x*y + 2*x*y^2 + x^2*y^3"

    code, out, _ = run(capsys, "em", "--d", "1")
    assert code == 0
    assert out.strip() == "1"


def test_em_json(capsys):
    code, out, _ = run(capsys, "em", "--d", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"truncation": None, "terms": [[0, 0, "1"], [1, 1, "1"]]}


def test_em_guard_exit_code(capsys):
    code, _, err = run(capsys, "em", "--d", "10")
    assert code == 2
    assert "guard" in err


def test_recursion_command(capsys):
    code, out, _ = run(capsys, "recursion", "--d", "2")
    assert code == 0
    assert out.strip() == "1 + x*y"


def test_sigma_bivariate(capsys):
    code, out, _ = run(capsys, "sigma", "--d", "1", "--M", "1", "--trunc", "2")
    assert code == 0
    assert out.strip() == "1 + b + b^2 + a*b"


def test_sigma_specialized(capsys):
    code, out, _ = run(
        capsys, "sigma", "--d", "2", "--M", "1", "--trunc", "4", "--a-eq-b"
    )
    assert code == 0
    assert out.strip() == "1, 1, 3, 4, 7"


def test_sigma_schmidt(capsys):
    code, out, _ = run(
        capsys, "sigma", "--d", "1", "--M", "1", "--trunc", "2", "--schmidt"
    )
    assert code == 0
    assert out.strip() == "1, 2, 4"


def test_sigma_multifold(capsys):
    # the (1,2) diamond: two degree-2 assignments put one fold of the top
    # block at 1 together with the closing link, hence coefficient 2 on ab
    code, out, _ = run(capsys, "sigma", "--folds", "1,2", "--trunc", "2")
    assert code == 0
    assert out.strip() == "1 + b + b^2 + 2*a*b"


def test_sigma_usage_errors(capsys):
    code, _, err = run(capsys, "sigma", "--folds", "1,2", "--d", "1", "--trunc", "2")
    assert code == 2 and "either" in err
    code, _, _ = run(capsys, "sigma", "--trunc", "2")
    assert code == 2
    code, _, _ = run(capsys, "sigma", "--folds", "1,x", "--trunc", "2")
    assert code == 2
    code, _, _ = run(
        capsys, "sigma", "--d", "1", "--trunc", "2", "--a-eq-b", "--schmidt"
    )
    assert code == 2
    code, _, _ = run(capsys, "sigma", "--folds", "1,2", "--trunc", "2", "--schmidt")
    assert code == 2


def test_verify_targets_pass(capsys):
    assert run(capsys, "verify", "theorem1", "--dmax", "4")[0] == 0
    assert run(capsys, "verify", "main", "--d", "2", "--M", "1", "--trunc", "6")[0] == 0
    assert run(capsys, "verify", "multifold", "--folds", "1,2", "--trunc", "5")[0] == 0
    assert run(capsys, "verify", "schmidt", "--d", "1", "--M", "6", "--trunc", "6")[0] == 0
    assert (
        run(
            capsys,
            "verify",
            "stanley",
            "--count",
            "5",
            "--max-size",
            "5",
            "--trunc",
            "5",
            "--seed",
            "3",
        )[0]
        == 0
    )
    assert run(capsys, "verify", "apr", "--trunc", "8")[0] == 0
    assert run(capsys, "verify", "djsw-product", "--d", "2", "--trunc", "8")[0] == 0


def test_verify_text_report_shape(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--dmax", "3")
    assert code == 0
    assert "command: verify theorem1" in out
    assert "status: pass" in out
    assert "d=3: equal" in out


def test_verify_json_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "main", "--d", "1", "--M", "2", "--trunc", "5", "--json")
    _, second, _ = run(capsys, "verify", "main", "--d", "1", "--M", "2", "--trunc", "5", "--json")
    assert first == second
    payload = json.loads(first)
    assert payload["status"] == "pass"
    assert payload["mismatch"] is None
    assert "elapsed" not in payload


def test_verify_main_needs_force_beyond_guard(capsys):
    # d=3, M=3 gives a 13-element poset, past the default extension guard
    code, _, err = run(capsys, "verify", "main", "--d", "3", "--M", "3", "--trunc", "4")
    assert code == 2
    assert "13" in err
    code, _, _ = run(
        capsys, "verify", "main", "--d", "3", "--M", "3", "--trunc", "4", "--force"
    )
    assert code == 0


def test_verify_unknown_target(capsys):
    code, _, _ = run(capsys, "verify", "nonsense")
    assert code == 2


def test_ppartition_command(capsys, tmp_path):
    path = tmp_path / "chain.poset"
    path.write_text(CHAIN_FILE)
    code, out, _ = run(capsys, "ppartition", str(path), "--trunc", "3")
    assert code == 0
    assert out.strip() == "1 + b + 2*b^2 + 3*b^3"


def test_ppartition_oracle_match(capsys, tmp_path):
    path = tmp_path / "diamond.poset"
    path.write_text(DIAMOND_FILE)
    code, out, _ = run(capsys, "ppartition", str(path), "--trunc", "6", "--oracle")
    assert code == 0
    assert out.strip().endswith("MATCH")

    code, out, _ = run(
        capsys, "ppartition", str(path), "--trunc", "4", "--oracle", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["match"] is True
    assert payload["stanley"] == payload["oracle"]


def test_ppartition_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.poset"
    path.write_text("elements 2\ncover 2 1\n")
    code, _, err = run(capsys, "ppartition", str(path), "--trunc", "3")
    assert code == 2
    assert "line 2" in err


def test_ppartition_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "ppartition", str(tmp_path / "absent"), "--trunc", "3")
    assert code == 2
    assert "cannot read" in err


def test_ppartition_guard_and_force(capsys, tmp_path):
    lines = ["elements 13"] + [f"cover {j} {j + 1}" for j in range(1, 13)]
    path = tmp_path / "long-chain.poset"
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run(capsys, "ppartition", str(path), "--trunc", "2")
    assert code == 2 and "guard" in err
    code, out, _ = run(capsys, "ppartition", str(path), "--trunc", "2", "--force")
    assert code == 0
    assert out.strip() == "1 + b + 2*b^2"


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    import diamondgf.cli as cli

    def fake_report(truncation):
        return VerifyReport(
            command="verify apr",
            parameters={"trunc": truncation},
            status="fail",
            mismatch={"power": 2, "lhs_coefficient": "3", "rhs_coefficient": "4"},
        )

    monkeypatch.setattr(cli, "verify_apr_report", fake_report)
    code, out, _ = run(capsys, "verify", "apr", "--trunc", "5")
    assert code == 1
    assert "status: fail" in out
    assert "mismatch" in out


def test_verify_report_invariant():
    passing = VerifyReport(command="verify x", parameters={}, status="pass")
    assert passing.passed and passing.mismatch is None
    failing = VerifyReport(
        command="verify x",
        parameters={},
        status="fail",
        mismatch={"monomial": [0, 1], "lhs_coefficient": "1", "rhs_coefficient": "2"},
    )
    assert not failing.passed
    assert (failing.status == "fail") == (failing.mismatch is not None)
    assert (passing.status == "fail") == (passing.mismatch is not None)


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
