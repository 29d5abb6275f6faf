import json

import pytest

from edszero.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_term(capsys):
    code, out, _ = _run(capsys, "term", "--rank", "12", "--alpha", "3", "--index", "2", "--method", "both")
    assert code == 0 and out.strip() == "-948480"


def test_period(capsys):
    code, out, _ = _run(capsys, "period", "--rank", "6", "--alpha", "1", "--prime", "5", "--method", "both")
    assert code == 0 and "period (direct)  = 12" in out and "period (formula) = 12" in out


def test_solve_json(capsys):
    code, out, _ = _run(capsys, "solve", "--condition", "eq8", "--bound", "10000", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["payload"]["alphas"] == ["-4900", "-144", "-4", "25", "841"]


def test_seq_json_one_record_per_line(capsys):
    code, out, _ = _run(capsys, "seq", "-N", "5", "-a", "2", "-M", "6", "--json")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1
    assert json.loads(lines[0])["payload"]["terms"][6] == "-16384"


def test_digits_abbreviation(capsys):
    code, out, _ = _run(capsys, "term", "-N", "12", "-a", "10", "-n", "119", "--digits", "20")
    assert code == 0 and out.strip().endswith("(70828 digits)")


def test_cap(capsys):
    code, _, err = _run(capsys, "term", "-N", "4", "-a", "2", "-n", "500")
    assert code == 2 and "cap" in err
    code, _, _ = _run(capsys, "term", "-N", "4", "-a", "2", "-n", "500", "--cap", "600")
    assert code == 0


def test_math_error_record(capsys):
    code, _, err = _run(capsys, "term", "-N", "4", "-a", "0", "-n", "3")
    assert code == 2 and json.loads(err)["error"] == "invalid-alpha"


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["term", "--rank", "4"])
    assert exc.value.code == 2


def test_period_table_dashes_and_cache(capsys, tmp_path):
    args = ["period-table", "-N", "6", "--alpha-range=-5..-4", "--primes", "5,7", "--cache-dir", str(tmp_path)]
    code, first, _ = _run(capsys, *args)
    assert code == 0 and "—" in first
    assert list(tmp_path.iterdir())
    code, second, _ = _run(capsys, *args)
    assert second == first


def test_classify_sweep(capsys):
    code, out, _ = _run(capsys, "classify", "-N", "8", "--power", "square", "-a", "25")
    assert code == 0 and "MISMATCH" not in out


def test_curve(capsys):
    code, out, _ = _run(capsys, "curve", "-N", "8", "-a", "2")
    assert code == 0 and "[1; -24; -6912; 11943936]" in out


def test_rank(capsys):
    code, out, _ = _run(capsys, "rank", "-N", "6", "-a", "2", "-p", "13")
    assert code == 0 and out.strip() == "rho = 6"


def test_tables_deterministic(capsys, tmp_path):
    code, out1, _ = _run(capsys, "tables")
    _, out2, _ = _run(capsys, "tables")
    assert code == 0 and out1 == out2
    _run(capsys, "tables", "--out", str(tmp_path))
    assert sorted(p.name for p in tmp_path.iterdir()) == ["closed_form.csv", "conditions.csv"]


def test_verify_small(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "closed-form", "--alpha-range=-2..2", "--max-index", "30")
    assert code == 0 and "closed-form  ok" in out


def test_verify_published_reports_misprints(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "published")
    assert code == 1
    assert "alpha 5 p 23: printed 132, computed 12" in out
    assert "h5 printed 41 digits, computed 51 digits" in out
