import json

import pytest

from qcongr import cli, oracle
from qcongr.harness import CongruenceClaim, IndexForm, claim_to_json as congruence_json
from qcongr.identities import IdentityClaim, claim_to_json
from qcongr.qexpr import parse_expr


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_prints_csv(capsys):
    code, out, _ = run(capsys, "table", "PDt", "--max", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,PDt"
    assert lines[1:] == ["0,0", "1,1", "2,3", "3,6", "4,13", "5,24", "6,45"]


def test_table_other_sequences(capsys):
    assert run(capsys, "table", "PDOt", "--max", "7")[1].splitlines()[-2:] == ["6,16", "7,24"]
    assert run(capsys, "table", "PD", "--max", "4", "--order", "50")[1].splitlines()[-1] == "4,10"


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "PDt"],
        ["table", "XYZ", "--max", "3"],
        ["table", "PDt", "--max", "60", "--order", "40"],
        ["table", "PDt", "--max", "-1"],
        ["identities", "--order", "1"],
        ["identities", "--filter", "NOPE-*"],
        ["identities", "--identities", "/nonexistent.json"],
        ["claims", "--order", "8"],
        ["oracle", "--enum-max", "60"],
        ["oracle", "--dp-max", "9000"],
        ["oracle", "--enum-max", "30", "--dp-max", "20"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_identities_filter_text(capsys):
    code, out, _ = run(capsys, "identities", "--filter", "EQ-2.1?", "--order", "200")
    assert code == 0
    lines = out.splitlines()
    assert all("EQ-2.1" in line for line in lines[:-1])
    assert lines[-1].startswith(f"{len(lines) - 1} identities:")
    assert "PROBE-FAILED" in out  # the printed (-q;-q) line is kept as a probe


def test_identities_json(capsys):
    code, out, _ = run(capsys, "identities", "--filter", "GEN-*", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert {r["id"] for r in reports} == {"GEN-PD", "GEN-PDO", "GEN-PDT", "GEN-PDOT"}
    assert all(r["status"] == "passed" and r["order"] == 500 for r in reports)


def test_failing_registry_exits_one(capsys, tmp_path):
    bad = IdentityClaim("BAD", parse_expr("f1^2"), parse_expr("f2"), 4, "f1^2 = f2 mod 4", 100)
    path = tmp_path / "reg.json"
    path.write_text(json.dumps({"claims": [claim_to_json(bad)]}))
    code, out, _ = run(capsys, "identities", "--identities", str(path))
    assert code == 1
    assert "FAILED" in out and "first mismatch at q^" in out


def test_short_claim_scan_lists_untested(capsys):
    code, out, _ = run(capsys, "claims", "--order", "100")
    assert code == 0
    assert out.splitlines()[-1].startswith("untested: ")
    assert "T12-2592N1080" in out.splitlines()[-1]


def test_false_claim_exits_one(capsys, tmp_path):
    c = CongruenceClaim("FALSE", "", "PDt", IndexForm(3, 1), "zero", 3)
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"claims": [congruence_json(c)]}))
    code, out, _ = run(capsys, "claims", "--order", "500", "--claims", str(path))
    assert code == 1
    assert "first failure n=0" in out


def test_claims_json_output(capsys, tmp_path):
    c = CongruenceClaim("T", "", "PDOt", IndexForm(8, 6), "zero", 8)
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"claims": [congruence_json(c)]}))
    code, out, _ = run(capsys, "claims", "--order", "5000", "--claims", str(path), "--format", "json")
    assert code == 0
    (report,) = json.loads(out)
    assert report["status"] == "passed" and report["assignments"] == 625


def test_oracle_agrees(capsys):
    code, out, _ = run(capsys, "oracle", "--enum-max", "20", "--dp-max", "300")
    assert code == 0 and "agree" in out


def _corrupt(table, seq, n, delta=1):
    fields = {"PD": "pd", "PDO": "pdo", "PDt": "pd_t", "PDOt": "pdo_t"}
    values = list(getattr(table, fields[seq]))
    values[n] += delta
    kwargs = {f: getattr(table, f) for f in ("max_n", "pd", "pdo", "pd_t", "pdo_t", "method")}
    kwargs[fields[seq]] = tuple(values)
    return oracle.OracleTable(**kwargs)


def test_cross_check_flags_injected_fault():
    bad = _corrupt(oracle.weighted_dp(200), "PDOt", 15)
    problems = cli.cross_check(20, 200, bad)
    assert (15, "PDOt", "enumeration", bad.pdo_t[15] - 1, bad.pdo_t[15]) in problems
    assert any(p[:3] == (15, "PDOt", "series") for p in problems)
    assert cli.cross_check(20, 200, oracle.weighted_dp(200)) == []


def test_oracle_command_exits_one_on_fault(capsys, monkeypatch):
    real = oracle.weighted_dp
    monkeypatch.setattr(oracle, "weighted_dp", lambda n: _corrupt(real(n), "PDt", 150, 8))
    code, out, _ = run(capsys, "oracle", "--enum-max", "10", "--dp-max", "200")
    assert code == 1
    assert "MISMATCH n=150 PDt: series=" in out
