import json
from fractions import Fraction

import pytest

from ginkit import cli
from ginkit.corpus import homogeneous_corpus
from ginkit.errors import ParseError
from ginkit.io import format_ideal, parse_ideal, render_report
from ginkit.poly import TermOrder
from ginkit.reduction import reduction_number
from ginkit.report import ReportConfig, invariant_report

from _util import WORKED_EXAMPLE, worked_example

REPORT_FIELDS = {
    "ring", "order", "seed", "trials", "gin", "dimension", "reg_profile", "astar_profile", "reg",
    "astar", "reg_ideal", "betti", "extremal_betti", "reduction_number", "routes_agree",
}


def test_parse_examples():
    ring, F = parse_ideal(WORKED_EXAMPLE)
    assert ring.var_names == ("x1", "x2", "x3") and ring.characteristic == 0
    assert [f.to_string() for f in F] == ["x1^2", "-x2^2 + x1*x3"]
    _, (f,) = parse_ideal("ring 0 x1\n1/2*x1^2")
    assert f.coefficient((2,)) == Fraction(1, 2)


def test_parse_comments_blank_lines_and_override():
    text = "# header\n\nring 7 a b   # two variables\n a^2 - 3*a*b \n\n 2/3 * b^2\n"
    ring, F = parse_ideal(text)
    assert ring.characteristic == 7 and len(F) == 2
    assert F[1].coefficient((0, 2)) == 3  # 2/3 = 2 * 5 mod 7
    ring, _ = parse_ideal(text, characteristic=0)
    assert ring.characteristic == 0


@pytest.mark.parametrize(
    "text, line, column, fragment",
    [
        ("ring 0 x1\nx2", 2, 1, "undeclared variable x2"),
        ("ring 0 x1 x2\nx1 + x2 - x1 - x2", 2, 1, "zero"),
        ("ring 0 x1 x2\nx1 x2", 2, 4, ""),
        ("ring 0 x1\nx1^", 2, 4, ""),
        ("ring 0 x1\nx1 + $", 2, 6, "unexpected character"),
        ("ring 4 x1\nx1", 1, 1, ""),
        ("ring 0 x1 x1\nx1", 1, 1, ""),
        ("x1 + x2", 1, 1, ""),
        ("", 1, 1, "missing ring"),
        ("ring 0 x1\n1/0*x1", 2, 3, "division by zero"),
    ],
)
def test_parse_errors(text, line, column, fragment):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.line == line
    assert info.value.column == column
    assert fragment in str(info.value)
    assert info.value.to_dict()["error"] == "parse_error"


@pytest.mark.parametrize("order", list(TermOrder))
def test_round_trip(order):
    for F in homogeneous_corpus(50):
        ring = F[0].ring
        ring2, G = parse_ideal(format_ideal(ring, F, order))
        assert ring2 == ring and G == F


def _report(order=TermOrder.LEX):
    return invariant_report(worked_example(), ReportConfig(order=order))


def test_render_json_fields():
    data = json.loads(render_report(_report(), "json"))
    assert REPORT_FIELDS <= set(data)
    assert data["gin"] == ["x1^2", "x1*x2", "x1*x3^2", "x2^4"]
    assert data["reduction_number"] == 3
    assert data["reg"] == 3 and data["reg_profile"][0] == 2
    assert "timings" not in data
    assert "timings" in json.loads(render_report(_report(), "json", timings=True))


def test_negative_infinity_rendering():
    rep = _report(TermOrder.DEGREVLEX)
    assert rep.colon.reg_q[0] == float("-inf")
    assert json.loads(render_report(rep, "json"))["reg_profile"][0] is None
    assert "-inf" in render_report(rep, "text")


def test_render_is_deterministic():
    rep = _report()
    assert render_report(rep, "json") == render_report(rep, "json")
    assert render_report(rep, "text") == render_report(rep, "text")
    assert render_report(_report(), "json") == render_report(rep, "json")


def test_render_reduction_result():
    res = reduction_number(worked_example())
    data = json.loads(render_report(res, "json"))
    assert data["reduction_number"] == 2 and data["dimension"] == 1
    assert "reduction number : 2" in render_report(res, "text")
    with pytest.raises(ValueError):
        render_report(res, "yaml")


@pytest.fixture
def s4file(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text(WORKED_EXAMPLE)
    return str(path)


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_report_lex(s4file, capsys):
    code, out, _ = _run(capsys, "report", s4file, "--order", "lex", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["gin"] == ["x1^2", "x1*x2", "x1*x3^2", "x2^4"]
    assert data["reduction_number"] == 3


def test_cli_is_reproducible(s4file, capsys):
    first = _run(capsys, "report", s4file, "--seed", "7", "--format", "json")[1]
    second = _run(capsys, "report", s4file, "--seed", "7", "--format", "json")[1]
    assert first == second


def test_cli_unknown_flag(s4file, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["report", s4file, "--bogus"])
    assert info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_cli_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("ring 0 x1\nx2\n")
    code, out, err = _run(capsys, "gb", str(bad), "--format", "json")
    assert code == 2
    assert json.loads(out)["line"] == 2
    assert "undeclared variable x2" in err


def test_cli_computation_error_exit_code(tmp_path, capsys):
    path = tmp_path / "inhom.txt"
    path.write_text("ring 0 x1 x2\nx1 + x2^2\n")
    code, out, _ = _run(capsys, "gin", str(path), "--format", "json")
    assert code == 1
    assert json.loads(out)["error"] == "not_homogeneous"
    path.write_text("ring 0 x1 x2\nx2^2\n")
    code, out, _ = _run(capsys, "invariants", str(path), "--no-gin", "--format", "json")
    assert code == 1
    err = json.loads(out)
    assert err["error"] == "not_filter_regular" and err["index"] == 2


def test_cli_missing_file(capsys):
    code, _, err = _run(capsys, "gb", "/nonexistent/ideal.txt")
    assert code == 2 and "ginkit:" in err


def test_cli_reads_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(WORKED_EXAMPLE))
    code, out, _ = _run(capsys, "in", "--order", "lex")
    assert code == 0 and out == "(x1^2, x1*x3, x1*x2^2, x2^4)\n"


def test_cli_subcommands(s4file, capsys):
    assert _run(capsys, "gb", s4file, "--order", "lex")[1].splitlines()[0] == "x2^4"
    assert json.loads(_run(capsys, "gin", s4file, "--format", "json")[1])["gin"] == ["x1^2", "x1*x2", "x2^3"]
    inv = json.loads(_run(capsys, "invariants", s4file, "--format", "json")[1])
    assert inv["reg_profile"] == [None, 2, 2] and "betti" not in inv
    betti = json.loads(_run(capsys, "betti", s4file, "--order", "lex", "--format", "json")[1])
    assert betti["extremal_betti"] == [[2, 3, 1], [3, 2, 1]]
    red = json.loads(_run(capsys, "reduction", s4file, "--format", "json")[1])
    assert red["reduction_number"] == 2


def test_cli_no_gin_and_char_override(tmp_path, capsys):
    path = tmp_path / "gin.txt"
    path.write_text("ring 0 x1 x2 x3\nx1^2\nx1*x2\nx1*x3^2\nx2^4\n")
    red = json.loads(_run(capsys, "reduction", str(path), "--no-gin", "--format", "json")[1])
    assert red["reduction_number"] == 3 and red["route"] == "bh"
    rep = json.loads(_run(capsys, "report", str(path), "--no-gin", "--format", "json")[1])
    assert rep["routes_agree"]["all"] is True and rep["used_gin"] is False
    rep = json.loads(_run(capsys, "report", str(path), "--no-gin", "--char", "101", "--format", "json")[1])
    assert rep["ring"]["characteristic"] == 101
    assert rep["notes"]["borel"].startswith("not applicable")


def test_cli_figures(s4file, tmp_path, capsys):
    outdir = tmp_path / "figs"
    code, out, _ = _run(capsys, "report", s4file, "--figures", str(outdir))
    assert code == 0 and out.startswith("ring")
    names = sorted(p.name for p in outdir.iterdir())
    assert names == ["report_betti.png", "report_hilbert.png", "report_profiles.png"]
    assert all((outdir / n).read_bytes()[:4] == b"\x89PNG" for n in names)


def test_module_entry_point(s4file):
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "ginkit", "gin", s4file, "--order", "lex"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "(x1^2, x1*x2, x1*x3^2, x2^4)\n"
