import csv
import io
import json
import subprocess
import sys
from importlib import resources

from bourbaki.cli import main
from bourbaki.curve import CurveReport

CORPUS = str(resources.files("bourbaki") / "data" / "examples.txt")


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_quintic_text(capsys):
    code, out, _ = run(["analyze", "-f", "x^5+x^4*y+x^3*z^2+y^2*z^3"], capsys)
    assert code == 0
    assert "e = 3" in out and "tau = 8" in out and "Bour = 5" in out
    assert "total:" in out  # Betti grid
    assert "bound Bour <= e^2: 5 <= 9 holds" in out


def test_analyze_rejects_non_reduced(capsys):
    code, _, err = run(["analyze", "-f", "x^2*y"], capsys)
    assert code == 2 and "NotReduced" in err


def test_analyze_rejects_parse_error_and_bad_field(capsys):
    code, _, err = run(["analyze", "-f", "x^2+"], capsys)
    assert code == 2 and "offset" in err
    code, _, _ = run(["analyze", "-f", "x*y*z", "--field", "fp:10"], capsys)
    assert code == 2


def test_analyze_sextic_json_roundtrip(capsys):
    code, out, _ = run(["analyze", "-f", "x*y^4*z+x^6+y^6", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["nearly_free"] is True and data["nearly_free_exponents"] == [2, 4]
    rep = CurveReport.from_dict(data)
    assert json.loads(rep.to_json()) == data


def test_analyze_is_deterministic(capsys):
    argv = ["analyze", "-f", "x*y*z", "--seed", "7", "--json"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_analyze_choice_flags(capsys):
    quartic = "x^2*y^2+x^2*z^2+y^2*z^2+2*x*y*z*(1/2*x+y+z)"
    code, _, err = run(["analyze", "-f", quartic, "--choice", "2"], capsys)
    assert code == 2 and "ChoiceError" in err
    code, out, _ = run(["analyze", "-f", quartic, "--choice", "2", "--allow-noninitial-choice"], capsys)
    assert code == 0 and "non-initial choice 2: deg R/I = 4" in out
    code, out, _ = run(["analyze", "-f", quartic, "--choice", "1", "--json"], capsys)
    assert json.loads(out)["choice"] == 1


def _rows(out):
    return list(csv.DictReader(io.StringIO(out)))


def test_batch_corpus_reproduces_examples(capsys):
    code, out, _ = run(["batch", CORPUS], capsys)
    assert code == 0
    rows = {r["input"]: r for r in _rows(out)}
    assert rows["x^5+x^4*y+x^3*z^2+y^2*z^3"]["bour"] == "5"
    assert rows["x^5+x^4*y+x^3*z^2+y^2*z^3"]["tau"] == "8"
    assert rows["x*y^4*z+x^6+y^6"]["bour"] == "1"
    assert "nearly_free(2,4)" in rows["x*y^4*z+x^6+y^6"]["flags"]
    assert rows["x*y*z"]["bour"] == "0"
    assert rows["x^6+y^6+z^6"]["bour"] == "25"
    assert all(r["status"] == "ok" for r in rows.values())


def test_batch_parallel_matches_serial(capsys, tmp_path):
    _, serial, _ = run(["batch", CORPUS], capsys)
    _, parallel, _ = run(["batch", CORPUS, "--jobs", "3"], capsys)
    assert serial == parallel


def test_batch_empty_file(capsys, tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("# only a comment\n\n")
    code, out, _ = run(["batch", str(p)], capsys)
    assert code == 0 and out.strip() == ",".join(
        ["input", "status", "D", "e", "tau", "mu", "sing", "bour", "flags"]
    )


def test_batch_flags_bad_line(capsys, tmp_path):
    p = tmp_path / "mixed.txt"
    p.write_text("x*y*z\nx^2+*y\ny^2*z+x^3\n")
    code, out, _ = run(["batch", str(p)], capsys)
    rows = _rows(out)
    assert code == 0 and len(rows) == 3
    assert rows[0]["status"] == "ok" and rows[2]["status"] == "ok"
    assert rows[1]["status"].startswith("rejected")


def test_batch_missing_file(capsys, tmp_path):
    code, _, err = run(["batch", str(tmp_path / "nope.txt")], capsys)
    assert code == 2 and "cannot read" in err


def test_scan_family_table(capsys):
    code, out, _ = run(["scan-family", "--from", "2", "--to", "4"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all(line.split()[-1] == "True" for line in lines[1:])


def test_scan_family_json_single(capsys):
    code, out, _ = run(["scan-family", "--from", "4", "--to", "4", "--json"], capsys)
    data = json.loads(out)
    assert code == 0 and data["bour"] == 15 and data["conjecture_ok"]


def test_scan_family_bad_range(capsys):
    code, _, _ = run(["scan-family", "--from", "5", "--to", "4"], capsys)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bourbaki", "analyze", "-f", "x*y*z", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["free"] is True


def test_usage_error_exit_code(capsys):
    assert main(["scan-family", "--from", "2"]) == 2
    capsys.readouterr()
