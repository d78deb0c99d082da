"""
tests/app_tests/test_cli.py
===========================
Testovi za CLI (kb_app.main.run):
  - izlaz svake podkomande upoređen sa fajlom u tests/golden/
  - izlazni kodovi 0 / 1 / 2
  - isti izlaz sa --jobs 1 i --jobs 4
"""

import io

import pytest

from kb_app.commands.schemas import VerdictReport
from kb_app.main import run
from kb_core.frontend.witness_format import parse_witness
from kb_core.translate import check_line, default_battery, verify_witness


@pytest.fixture
def cli(fixtures_dir):
    """cli('eval', '--model', 'mp.kbm', ...) -> (exit, stdout, stderr); *.kbm/.kbq/.kbw idu iz data/fixtures."""
    def call(*argv: str):
        args = [str(fixtures_dir / a) if a.endswith((".kbm", ".kbq", ".kbw")) else a for a in argv]
        out, err = io.StringIO(), io.StringIO()
        code = run(args, out, err)
        return code, out.getvalue(), err.getvalue()
    return call


# ---------------------------------------------------------------------------
# Golden izlazi
# ---------------------------------------------------------------------------

GOLDEN_CASES = [
    ("aut_mp", 0, ["aut", "--model", "mp.kbm", "--instance", "f1"]),
    ("eval_mp_pp", 0, ["eval", "--model", "mp.kbm", "--instance", "f1", "--query", "pp.kbq"]),
    ("entails_mp_diagonal", 0,
     ["entails", "--model", "mp.kbm", "--instance", "f1", "--query", "pp.kbq", "--formula", "x == y"]),
    ("entails_mp_negation", 1,
     ["entails", "--model", "mp.kbm", "--instance", "f1", "--query", "pp.kbq", "--formula", "not P(y)"]),
    ("closure_mp_pp", 0,
     ["closure", "--model", "mp.kbm", "--instance", "f1", "--query", "pp.kbq", "--probes", "pp_probes.kbq"]),
    ("orbits_path", 0, ["orbits", "--model", "path.kbm", "--instance", "p4", "--vars", "u:v"]),
    ("rf_mp", 0, ["rf", "--model", "mp.kbm", "--instance", "f1", "--vars", "x:s"]),
    ("equiv_mp_mq", 0, ["equiv", "--left", "mp.kbm", "--right", "mq.kbm"]),
    ("equiv_mp_m0", 1, ["equiv", "--left", "mp.kbm", "--right", "m0.kbm"]),
    ("verify_pq", 0, ["verify-witness", "--left", "mp.kbm", "--right", "mq.kbm", "--witness", "pq.kbw"]),
]


@pytest.mark.parametrize("name, expected_code, argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_output(cli, golden_dir, name, expected_code, argv):
    code, out, err = cli(*argv)
    assert code == expected_code, err
    assert out == (golden_dir / f"{name}.out").read_text(encoding="utf-8")


@pytest.mark.parametrize("name, expected_code, argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_output_does_not_depend_on_jobs(cli, name, expected_code, argv):
    assert cli(*argv, "--jobs", "1") == cli(*argv, "--jobs", "4")


# ---------------------------------------------------------------------------
# Mašinski izlaz
# ---------------------------------------------------------------------------

def test_machine_entails(cli):
    code, out, _ = cli("entails", "--model", "mp.kbm", "--instance", "f1", "--query", "pp.kbq",
                       "--formula", "not P(y)", "--machine")
    assert code == 1
    assert out == "CHECK entails FAIL x=e1 y=e1\n"


def test_machine_equiv(cli):
    assert cli("equiv", "--left", "mp.kbm", "--right", "mq.kbm", "--machine")[:2] == (0, "CHECK equiv PASS\n")
    code, out, _ = cli("equiv", "--left", "mp.kbm", "--right", "m0.kbm", "--machine")
    assert code == 1
    assert out == "CHECK equiv FAIL no perfect matching: group orders 2 vs 6\n"


def test_corrupted_witness_fails(cli):
    code, out, _ = cli("verify-witness", "--left", "mp.kbm", "--right", "mq.kbm",
                       "--witness", "pq_corrupted.kbw", "--machine")
    assert code == 1
    lines = out.splitlines()
    assert len(lines) == 9
    assert "CHECK identity-left/f1/probe-1/1 FAIL x=e1" in lines
    assert "CHECK conjugacy/f1 PASS" in lines


def test_verdict_lines_match_witness_report(load_fixture, fixtures_dir):
    mp, mq = load_fixture("mp"), load_fixture("mq")
    path = fixtures_dir / "pq_corrupted.kbw"
    witness = parse_witness(path.read_text(encoding="utf-8"), mp, mq, str(path))
    report = verify_witness(mp, mq, witness, default_battery(mp.signature), default_battery(mq.signature))
    assert not report.passed
    assert VerdictReport.from_witness_report(report).machine_lines() == report.machine_lines()
    assert VerdictReport.single("equiv", False, "x=e1").machine_lines() == [check_line("equiv", False, "x=e1")]
    assert check_line("equiv", True) == "CHECK equiv PASS"


def test_written_witness_verifies(cli, tmp_path):
    witness = tmp_path / "synth.kbw"
    code, out, _ = cli("equiv", "--left", "mp.kbm", "--right", "mq.kbm", "--synthesize-beta", "--depth", "2",
                       "--witness-out", str(witness))
    assert code == 0
    assert "beta f1: P(x1) := not Q(x1)" in out.splitlines()
    assert witness.read_text(encoding="utf-8") == out.split("\n", 1)[1]
    code, out, _ = cli("verify-witness", "--left", "mp.kbm", "--right", "mq.kbm", "--witness", str(witness))
    assert code == 0
    assert out.splitlines()[-1] == "9/9 checks passed"


# ---------------------------------------------------------------------------
# Greške -> izlazni kod 2
# ---------------------------------------------------------------------------

def test_bad_query_reports_location(cli, tmp_path):
    query = tmp_path / "bad.kbq"
    query.write_text("vars x:s;\nR(x)\n", encoding="utf-8")
    code, out, err = cli("eval", "--model", "mp.kbm", "--instance", "f1", "--query", str(query))
    assert code == 2
    assert out == ""
    assert err.startswith(f"{query}:2:")
    assert "unknown relation 'R'" in err


def test_model_file_that_is_not_utf8(cli, tmp_path):
    model = tmp_path / "binary.kbm"
    model.write_bytes(b"\xff\xfe")
    code, out, err = cli("aut", "--model", str(model), "--instance", "f1")
    assert code == 2
    assert out == ""
    assert err == f"{model}:1:1: error: file is not valid UTF-8: invalid start byte (byte 0xff)\n"


def test_undecodable_byte_is_located(cli, tmp_path):
    query = tmp_path / "latin.kbq"
    query.write_bytes(b"vars x:s;\nP(x) # caf\xe9\n")
    code, _, err = cli("eval", "--model", "mp.kbm", "--instance", "f1", "--query", str(query))
    assert code == 2
    assert err.startswith(f"{query}:2:11: error: file is not valid UTF-8")


def test_missing_file(cli, tmp_path):
    code, _, err = cli("aut", "--model", str(tmp_path / "missing.kbm"), "--instance", "f1")
    assert code == 2
    assert err.startswith("kb: error:")


def test_unknown_instance(cli):
    code, _, err = cli("aut", "--model", "mp.kbm", "--instance", "f9")
    assert code == 2
    assert "f9" in err


def test_invalid_limits(cli):
    code, _, err = cli("aut", "--model", "mp.kbm", "--instance", "f1", "--jobs", "0")
    assert code == 2
    assert err.startswith("kb: error: invalid configuration: jobs:")


def test_usage_error():
    assert run(["eval", "--model", "mp.kbm"], io.StringIO(), io.StringIO()) == 2


def test_unknown_sort_in_vars(cli):
    code, _, err = cli("orbits", "--model", "mp.kbm", "--instance", "f1", "--vars", "x:t")
    assert code == 2
    assert "unknown sort 't'" in err
