import json

from fibgf.cli import main
from fibgf.polynomials import CoeffPoly, build_product, fibonacci_product_spec
from fibgf.stats import CorrSpec, corr_series
from fibgf.triangle import format_row, triangle_rows


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_vsum_matches_library(capsys):
    code, out, _ = run_cli(capsys, "vsum", "--seq", "fib", "--alpha", "2", "--nmax", "5")
    assert code == 0
    assert json.loads(out) == ["1", "2", "4", "10", "24", "60"]
    lib = corr_series(fibonacci_product_spec(0), CorrSpec((2,)), 5)
    assert [int(v) for v in json.loads(out)] == lib


def test_vsum_symbolic(capsys):
    code, out, _ = run_cli(capsys, "vsum", "--seq", "fib", "--alpha", "2", "--nmax", "2", "--t", "symbolic")
    assert code == 0
    data = json.loads(out)
    assert data[2] == ["1", "0", "2", "0", "1"]  # 1 + 2t^2 + t^4


def test_congruence(capsys):
    code, out, _ = run_cli(capsys, "congruence", "--m", "2", "--a", "1", "--nmax", "2")
    assert code == 0
    assert json.loads(out) == ["1", "2", "4"]


def test_product_dump_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "product", "--seq", "fib", "--nmax", "4")
    assert code == 0
    data = json.loads(out)
    assert data["base"] == 0
    clone = CoeffPoly.from_json_dict(data)
    assert clone == build_product(fibonacci_product_spec(4))


def test_triangle_show_matches_library(capsys):
    code, out, _ = run_cli(capsys, "triangle", "show", "--rows", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines == [format_row(r) for r in triangle_rows(3, 1)]
    assert lines[2] == "1 1 • 1 2 1 • 1 1"


def test_triangle_dot(capsys):
    code, out, _ = run_cli(capsys, "triangle", "dot", "--rows", "3")
    assert code == 0
    assert out.startswith("digraph")


def test_guess_roundtrip(tmp_path, capsys):
    series = corr_series(fibonacci_product_spec(0), CorrSpec((2,)), 25)
    path = tmp_path / "seq.json"
    path.write_text(json.dumps([str(v) for v in series]))
    code, out, _ = run_cli(capsys, "guess", str(path), "--den-max", "10")
    assert code == 0
    data = json.loads(out)
    assert data == {"num": ["1", "0", "-2"], "den": ["1", "-2", "-2", "2"]}


def test_guess_reads_stdin(monkeypatch, capsys):
    import io

    series = corr_series(fibonacci_product_spec(0), CorrSpec((2,)), 20)
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(series)))
    code, out, _ = run_cli(capsys, "guess", "--den-max", "8")
    assert code == 0
    assert json.loads(out)["den"] == ["1", "-2", "-2", "2"]


def test_verify_all_json_lines(capsys):
    # restrict to a cheap subset by running two named checks; the all-mode
    # concurrency is exercised in the acceptance environment
    for name in ("q2", "upho"):
        code, out, _ = run_cli(capsys, "verify", name, "--json")
        assert code == 0
        assert json.loads(out)["status"] == "pass"


def test_guess_no_fit_exit_code(tmp_path, capsys):
    catalan = [1]
    for i in range(11):
        catalan.append(catalan[-1] * 2 * (2 * i + 1) // (i + 2))
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(catalan))
    code, out, _ = run_cli(capsys, "guess", str(path), "--den-max", "3")
    assert code == 3
    assert json.loads(out) is None


def test_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "vsum", "--seq", "nosuch", "--alpha", "2", "--nmax", "3")
    assert code == 2
    assert "error" in err


def test_unknown_verify_name(capsys):
    code, _, err = run_cli(capsys, "verify", "nosuch")
    assert code == 2


def test_verify_pass_and_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "q2")
    assert code == 0
    assert out.startswith("q2: pass")
    code, out, _ = run_cli(capsys, "verify", "flag-beta", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["check"] == "flag-beta" and rep["status"] == "pass"
    assert "elapsed_ms" in rep


def test_verify_exercise_note_reports_counterexample(capsys):
    code, out, _ = run_cli(capsys, "verify", "exercise-note", "--json")
    assert code == 1
    rep = json.loads(out)
    assert rep["status"] == "fail"
    assert rep["details"]["seed"] == [2, 1]


def test_scan_smoke(capsys):
    code, out, _ = run_cli(capsys, "scan", "conj-v3k", "--k", "2", "--terms", "12", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass"
    assert rep["details"]["mode"] == "pass-at-depth"


def test_custom_sequence_spec(tmp_path, capsys):
    path = tmp_path / "seq.json"
    path.write_text(json.dumps({"coeffs": ["1", "1"], "init": ["1", "2"]}))
    code, out, _ = run_cli(capsys, "vsum", "--seq", f"custom:{path}", "--alpha", "2", "--nmax", "4")
    assert code == 0
    vals = [int(v) for v in json.loads(out)]
    assert vals[0] == 1 and all(v > 0 for v in vals)
