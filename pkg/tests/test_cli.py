"""Command-line behavior: dispatch, exit codes, deterministic reports."""

import pytest

from finsemi.cli import run

B31_TEXT = """\
semiring
order 3
zero 0
one 1
add
0 1 2
1 2 1
2 1 2
mul
0 0 0
0 1 2
0 2 2
"""


@pytest.fixture()
def b31_file(tmp_path):
    path = tmp_path / "b31.sr"
    path.write_text(B31_TEXT, encoding="utf-8")
    return str(path)


def test_catalog_bni_emits_reference_block(capsys):
    assert run(["catalog", "bni", "--n", "3", "--i", "1"]) == 0
    assert capsys.readouterr().out == B31_TEXT


def test_validate_ok(b31_file, capsys):
    assert run(["validate", b31_file]) == 0
    out = capsys.readouterr().out
    assert "1 semiring(s)" in out


def test_validate_axiom_violation(tmp_path, capsys):
    bad = B31_TEXT.replace("0 2 2", "0 2 1")
    path = tmp_path / "bad.sr"
    path.write_text(bad, encoding="utf-8")
    assert run(["validate", str(path)]) == 1


def test_missing_file_is_input_error(capsys):
    assert run(["validate", "/nonexistent/x.sr"]) == 2


def test_malformed_file_is_input_error(tmp_path):
    path = tmp_path / "junk.sr"
    path.write_text("widget\norder 1\n", encoding="utf-8")
    assert run(["validate", str(path)]) == 2


def test_analyze_report(b31_file, capsys):
    assert run(["analyze", b31_file]) == 0
    out = capsys.readouterr().out
    assert "left ideals: 3" in out
    assert "subtractive ideals: 3" in out
    assert "congruences: 4" in out
    assert "ideal-semisimple: False" in out
    assert "congruence-semisimple: False" in out
    assert "C1: False  C2: True" in out


def test_decompose_report(b31_file, capsys):
    assert run(["decompose", b31_file]) == 0
    assert "irreducible summands: 1" in capsys.readouterr().out


def test_audit_small_green(capsys):
    assert run(["audit", "--order", "2"]) == 0
    out = capsys.readouterr().out
    assert "instances audited: 2" in out
    assert "fails: 0" in out


def test_audit_jsonl_deterministic_across_parallelism(tmp_path):
    out1 = tmp_path / "a.jsonl"
    out8 = tmp_path / "b.jsonl"
    assert run(["audit", "--order", "2", "--format", "jsonl",
                "--out", str(out1), "--parallel", "1"]) == 0
    assert run(["audit", "--order", "2", "--format", "jsonl",
                "--out", str(out8), "--parallel", "8"]) == 0
    assert out1.read_bytes() == out8.read_bytes()


def test_catalog_product(b31_file, capsys):
    assert run(["catalog", "product", b31_file, b31_file]) == 0
    assert "order 9" in capsys.readouterr().out


def test_catalog_matrix(b31_file, capsys):
    assert run(["catalog", "matrix", b31_file, "--k", "1"]) == 0
    assert capsys.readouterr().out == B31_TEXT


def test_limits_parsing_rejects_unknown_key(b31_file):
    assert run(["--limits", "bogus=3", "analyze", b31_file]) == 2


def test_limits_parsing_rejects_nonpositive(b31_file):
    assert run(["--limits", "max_results=0", "analyze", b31_file]) == 2


def test_catalog_end_from_lattice_file(tmp_path, capsys):
    from finsemi.catalog import diamond_m3
    from finsemi.textio import emit_lattice

    path = tmp_path / "m3.lat"
    path.write_text(emit_lattice(diamond_m3()), encoding="utf-8")
    assert run(["catalog", "end", str(path)]) == 0
    assert "order 50" in capsys.readouterr().out


def test_catalog_lattice_distributive_only(tmp_path, capsys):
    from finsemi.catalog import chain_lattice, diamond_m3
    from finsemi.textio import emit_lattice

    chain = tmp_path / "chain.lat"
    chain.write_text(emit_lattice(chain_lattice(3)), encoding="utf-8")
    assert run(["catalog", "lattice", str(chain)]) == 0
    capsys.readouterr()
    m3 = tmp_path / "m3.lat"
    m3.write_text(emit_lattice(diamond_m3()), encoding="utf-8")
    assert run(["catalog", "lattice", str(m3)]) == 1
