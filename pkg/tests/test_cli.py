import json
import subprocess
import sys

import pytest

from qwol import __version__
from qwol.cli import build_parser, claim_parameters, main, parse_range, run_verify
from qwol.errors import EmptyRange, ParseError
from qwol.polynomial import Polynomial
from qwol.report import CheckReport, format_report, parse_json_reports
from qwol.verifier import CongruenceVerdict


def test_parse_range_examples():
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("2..12:primes") == [2, 3, 5, 7, 11]
    assert parse_range("7") == [7]
    assert parse_range("9,3, 5..6,3") == [3, 5, 6, 9]
    with pytest.raises(EmptyRange):
        parse_range("5..3")


@pytest.mark.parametrize("spec", ["", "a..b", "2..", "1..3:odd", "2...5", "-1..3", "1;2"])
def test_parse_range_malformed(spec):
    with pytest.raises(ParseError):
        parse_range(spec)


def test_claim_parameters():
    assert claim_parameters("lemma-logderiv", {"n": "2..3", "k": "1..2"}) == [(2, 1), (2, 2), (3, 1), (3, 2)]
    assert claim_parameters("ramanujan", {"n": "2..3"}) == [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert claim_parameters("ramanujan", {"n": "4", "j": "2"}) == [(2, 4)]
    assert claim_parameters("shi-pan", {"p": None})[:3] == [5, 7, 11]


def _report(verdicts, claim="theorem1"):
    return CheckReport(__version__, claim, [v.parameter for v in verdicts], verdicts)


def test_format_empty_csv():
    assert format_report(_report([]), "csv") == b"claim,parameter,holds,notes\n"


def test_format_text_single_ok_row():
    text = format_report(run_verify("theorem1", [5]), "text").decode()
    rows = text.splitlines()[1:]
    assert len(rows) == 1 and rows[0].endswith("OK")


def test_format_json_failing_verdict():
    bad = CongruenceVerdict("theorem1", 5, False, Polynomial([1, 2]), Polynomial([1, 1, 1, 1, 1]))
    lines = format_report(_report([bad]), "json").decode().splitlines()
    assert '"holds": false' in lines[1]
    assert json.loads(lines[1])["residue_witness"] == ["1", "2"]
    assert json.loads(lines[0])["all_hold"] is False


def test_json_round_trip():
    for claim, params in (("theorem2", [2, 3, 4]), ("ramanujan", [(1, 4), (2, 4)]), ("classical", [3, 5])):
        report = run_verify(claim, params)
        (back,) = parse_json_reports(format_report(report, "json"))
        assert back == report
        assert back.verdicts == report.verdicts


def test_errors_become_failed_verdicts():
    report = run_verify("shi-pan", [5, 9, 11])
    assert [v.holds for v in report.verdicts] == [True, False, True]
    assert report.verdicts[1].notes.startswith("error: InvalidArgument")
    assert not report.all_hold


def test_fail_fast_stops_at_first_failure():
    report = run_verify("classical", [3, 5, 7], fail_fast=True)
    assert [v.parameter for v in report.verdicts] == [3]
    report = run_verify("classical", [3, 4, 5, 7], jobs=2, fail_fast=True)
    assert [v.parameter for v in report.verdicts] == [3]


def test_parallel_output_identical():
    a = format_report(run_verify("theorem1", list(range(2, 25)), jobs=1), "json")
    b = format_report(run_verify("theorem1", list(range(2, 25)), jobs=3), "json")
    assert a == b


def test_timing_flag_controls_elapsed():
    assert run_verify("theorem1", [3]).elapsed_ms == 0
    assert run_verify("theorem2", list(range(2, 40)), timing=True).elapsed_ms > 0


def test_exit_codes(capsysbinary):
    assert main(["verify", "theorem1", "--n", "2..10"]) == 0
    assert main(["verify", "classical", "--p", "3..20:primes"]) == 1
    out = capsysbinary.readouterr().out.decode()
    assert "FAIL" in out
    with pytest.raises(SystemExit) as exc:
        main(["verify", "theorem1", "--n", "5..3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_out_file_and_csv(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["verify", "ramanujan", "--n", "2..4", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_bytes().split(b"\n")
    assert lines[0] == b"claim,parameter,holds,notes"
    assert lines[1].startswith(b"ramanujan,1;2,true,")
    assert all(line.count(b",") == 3 for line in lines if line)


def test_jobs_env_default(monkeypatch):
    monkeypatch.setenv("QWOL_JOBS", "3")
    args = build_parser().parse_args(["verify", "theorem1"])
    assert args.jobs == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qwol", "verify", "shi-pan", "--p", "5..13:primes", "--format", "json"],
        capture_output=True,
    )
    assert proc.returncode == 0
    (report,) = parse_json_reports(proc.stdout)
    assert [v.parameter for v in report.verdicts] == [5, 7, 11, 13]
