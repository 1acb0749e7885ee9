import json

import pytest

from coprime_lab.cli import analyze_record, main, parse_config, spectrum_record


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_analyze_json_n36(capsys):
    rc, out, _ = run(capsys, "analyze", "--n", "36", "--format", "json")
    rec = json.loads(out)
    assert rc == 0
    assert rec["kappa_upper_bound"] == 9 and rec["kappa_exact"] == 9
    assert rec["cut_witness"]["isolated_vertex"] == 30
    assert rec["diameter"] == 2 and rec["girth"] == 3


def test_analyze_text(capsys):
    rc, out, _ = run(capsys, "analyze", "--n", "7")
    assert rc == 0 and "planarity: nonplanar" in out and "all_hold: True" in out


def test_analyze_small_n_notes():
    rec = analyze_record(3)
    assert rec["diameter"] == 1 and "diameter_note" in rec and "kappa_upper_bound" not in rec
    assert analyze_record(1)["diameter"] == 0


def test_spectrum_n12(capsys):
    rc, out, _ = run(capsys, "spectrum", "--n", "12", "--format", "json")
    rec = json.loads(out)
    assert rc == 0
    assert rec["multiplicity"]["0"] == 4 and rec["bounds"]["0"] == 3
    assert len(rec["eigenvalues"]) == 12


def test_spectrum_text(capsys):
    rc, out, _ = run(capsys, "spectrum", "--n", "5")
    assert rc == 0 and "exact multiplicity" in out


def test_spectrum_record_stable():
    assert json.dumps(spectrum_record(15)) == json.dumps(spectrum_record(15))


def test_verify_reference_range(capsys):
    rc, out, _ = run(capsys, "verify", "--from", "3", "--to", "15")
    assert rc == 0
    assert "table 1: ok" in out and "0 failed checks" in out


def test_verify_json(capsys):
    rc, out, _ = run(capsys, "verify", "--from", "3", "--to", "15", "--format", "json")
    doc = json.loads(out)
    assert rc == 0 and doc["table1"]["ok"] and doc["summary"]["failures"] == 0


def test_verify_degenerate_range(capsys):
    rc, out, err = run(capsys, "verify", "--from", "0", "--to", "2")
    assert rc == 0 and "note" in err
    assert "n=1" in out and "n=2" in out


def test_verify_empty_range(capsys):
    rc, _, err = run(capsys, "verify", "--from", "5", "--to", "2")
    assert rc == 2 and "empty range" in err


def test_export_dot(capsys, tmp_path):
    path = tmp_path / "g.dot"
    assert main(["export", "--n", "7", "--format", "dot", "--out", str(path)]) == 0
    text = path.read_text()
    assert text.count(" -- ") == 17
    rc, out, _ = run(capsys, "export", "--n", "2", "--format", "dot")
    assert rc == 0 and out.count(" -- ") == 1


def test_export_csv(capsys):
    rc, out, _ = run(capsys, "export", "--n", "12", "--format", "csv")
    row = out.strip().split(",")
    assert rc == 0 and row[0] == "12" and len(row) == 13


def test_export_unwritable(capsys, tmp_path):
    rc, _, err = run(capsys, "export", "--n", "4", "--format", "dot", "--out", str(tmp_path / "missing" / "x.dot"))
    assert rc == 1 and "I/O error" in err


def test_export_bad_format(capsys):
    rc, _, err = run(capsys, "export", "--n", "4", "--format", "json")
    assert rc == 2 and "dot or csv" in err


def test_caps_refuse(capsys):
    rc, _, err = run(capsys, "spectrum", "--n", "20", "--max-matrix", "10")
    assert rc == 2 and "refused" in err


def test_env_fallbacks(monkeypatch):
    monkeypatch.setenv("TCG_SEED", "11")
    monkeypatch.setenv("TCG_MAX_MATRIX", "50")
    cfg = parse_config(["spectrum", "--n", "4"])
    assert cfg.seed == 11 and cfg.caps.max_matrix == 50
    assert parse_config(["spectrum", "--n", "4", "--seed", "2"]).seed == 2


def test_bad_tolerance_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        parse_config(["spectrum", "--n", "4", "--tol", "0.5"])
    assert exc.value.code == 2


def test_nonpositive_n(capsys):
    rc, _, err = run(capsys, "analyze", "--n", "0")
    assert rc == 2 and ">= 1" in err
