from pathlib import Path

import pytest

from tckit import catalog
from tckit.cli import run

GOLDEN = Path(__file__).parent / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_theta(capsys):
    assert call(capsys, "braid", "build", "theta", "--m", "2") == (0, "degree=4; word=2,1,3,2\n", "")


def test_build_garside(capsys):
    code, out, _ = call(capsys, "braid", "build", "garside", "--m", "3")
    assert code == 0 and out == "degree=3; word=1,2,1\n"


def test_braid_eq(capsys, tmp_path):
    a, b, c = tmp_path / "a.br", tmp_path / "b.br", tmp_path / "c.br"
    a.write_text("degree=3; word=1,2,1\n")
    b.write_text("degree=3; word=2,1,2\n")
    c.write_text("degree=3; word=1,2\n")
    assert call(capsys, "braid", "eq", str(a), str(b))[:2] == (0, "true\n")
    assert call(capsys, "braid", "eq", str(a), str(c))[:2] == (0, "false\n")


def test_compile_then_invariants(capsys, tmp_path):
    chart, movie = tmp_path / "t.tc", tmp_path / "t.tcm"
    code, out, _ = call(capsys, "catalog", "show", "turned-spun-trefoil")
    assert code == 0
    chart.write_text(out)
    assert call(capsys, "compile", str(chart), "-o", str(movie))[0] == 0
    assert "block=H_b" in movie.read_text()
    code, out, _ = call(capsys, "validate", str(movie))
    assert code == 0 and out.startswith("ok=true")
    code, out, _ = call(capsys, "invariants", str(movie))
    assert code == 0
    assert out == (GOLDEN / "turned-spun-trefoil.txt").read_text()


@pytest.mark.parametrize("name", catalog.NAMES)
def test_catalog_golden(capsys, tmp_path, name):
    code, text, _ = call(capsys, "catalog", "show", name)
    assert code == 0
    chart, movie = tmp_path / "c.tc", tmp_path / "c.tcm"
    chart.write_text(text)
    assert call(capsys, "compile", str(chart), "-o", str(movie))[0] == 0
    code, out, _ = call(capsys, "invariants", str(movie))
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_catalog_list(capsys):
    code, out, _ = call(capsys, "catalog", "list")
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == list(catalog.NAMES)


def test_classify_and_braid_index(capsys, tmp_path):
    chart = tmp_path / "c.tc"
    chart.write_text("degree=2\na=1,1,1\nb=1,1,1\n")
    code, out, _ = call(capsys, "classify", str(chart))
    assert code == 0 and out.splitlines()[0] == "kind=turned-spun"
    code, out, _ = call(capsys, "braid-index", str(chart))
    assert code == 0
    assert out.splitlines()[:3] == ["upper=4", "lower=4", "exact=4"]


def test_classify_unknown_exits_one(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TCKIT_SEARCH_BOUND", "2")
    chart = tmp_path / "c.tc"
    chart.write_text("degree=2\na=1,1,1,1,1\nb=1,1,1\n")
    code, out, _ = call(capsys, "classify", str(chart))
    assert code == 1 and out.startswith("kind=unknown")


def test_verify_steps(capsys):
    code, out, _ = call(capsys, "verify-steps", "--m", "2", "--b", "1,1,-1")
    assert code == 0 and out.startswith("ok=true")


def test_exit_code_two_on_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.br"
    bad.write_text("degree=3; word=1,zz\n")
    code, _, err = call(capsys, "braid", "eq", str(bad), str(bad))
    assert code == 2
    assert "line 1" in err


def test_exit_code_one_on_domain_errors(capsys, tmp_path):
    chart = tmp_path / "nc.tc"
    chart.write_text("degree=3\na=1\nb=2\n")
    code, _, err = call(capsys, "compile", str(chart))
    assert code == 1 and err.startswith("error:")
    assert call(capsys, "invariants", str(tmp_path / "missing.tcm"))[0] == 1
    assert call(capsys, "catalog", "show", "no-such-entry")[0] == 1


def test_validate_failure_exits_one(capsys, tmp_path):
    movie = tmp_path / "bad.tcm"
    movie.write_text("degree=3\nslice=\nevent=band ins 0 1 +1\nslice=1,2\nevent=eq\nslice=\n")
    code, out, _ = call(capsys, "validate", str(movie))
    assert code == 1
    assert "ok=false" in out and "failure=" in out


def test_usage_error_exits_two(capsys):
    assert call(capsys, "braid", "build", "nope", "--m", "2")[0] == 2
