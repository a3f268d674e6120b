"""Command-line behavior: output shapes and the 0/1/2 exit-status contract."""

import pytest

from conftest import conjugation_quandle_s3, two_orbit_quandle_mod
from quandleworks import (dihedral_quandle, parse_table_text, relabel,
                          render_table_text, trivial_quandle)
from quandleworks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def d3_file(tmp_path):
    path = tmp_path / "d3.txt"
    path.write_text(render_table_text(dihedral_quandle(3)))
    return str(path)


def test_check_passes_on_valid_table(capsys, d3_file):
    code, out, _ = run(capsys, "check", d3_file)
    assert code == 0
    assert "idempotent=True" in out


def test_check_with_extra_properties(capsys, d3_file):
    code, out, _ = run(capsys, "check", d3_file, "--medial", "--nquandle", "2")
    assert code == 0
    assert "medial: True" in out and "2-quandle: True" in out


def test_check_fails_when_a_property_fails(capsys, d3_file):
    code, out, _ = run(capsys, "check", d3_file, "--nquandle", "3")
    assert code == 1
    assert "3-quandle: False" in out


def test_check_reports_axiom_witness(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("quandle v1\nn=2\n2 2\n1 1\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    assert "idempotent=False" in out and "witness=(0, 0, None)" in out


def test_check_reports_medial_witness(capsys, tmp_path):
    path = tmp_path / "conj.txt"
    path.write_text(render_table_text(conjugation_quandle_s3()))
    code, out, _ = run(capsys, "check", str(path), "--medial")
    assert code == 1
    assert "medial: False witness=" in out


def test_parse_errors_exit_two(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("quandle v1\nn=2\n1 1 1\n2 2\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2
    assert "line 3" in err


def test_missing_file_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "nope.txt"))
    assert code == 2
    assert "error:" in err


def test_orbits_output(capsys, tmp_path, d3_file):
    code, out, _ = run(capsys, "orbits", d3_file)
    assert code == 0 and out == "orbit 1: 1 2 3\n"
    path = tmp_path / "t3.txt"
    path.write_text(render_table_text(trivial_quandle(3)))
    code, out, _ = run(capsys, "orbits", str(path))
    assert code == 0
    assert out == "orbit 1: 1\norbit 2: 2\norbit 3: 3\n"


def test_orbits_rejects_non_quandle(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("quandle v1\nn=2\n2 2\n1 1\n")
    code, _, err = run(capsys, "orbits", str(path))
    assert code == 2
    assert "not a quandle" in err


def test_reverse_twice_restores_the_file(capsys, tmp_path, shadow_mod5):
    path = tmp_path / "shadow.txt"
    original = render_table_text(shadow_mod5)
    path.write_text(original)
    code, once, _ = run(capsys, "reverse", str(path), "--element", "6")
    assert code == 0
    assert once != original
    again = tmp_path / "reversed.txt"
    again.write_text(once)
    code, twice, _ = run(capsys, "reverse", str(again), "--element", "6")
    assert code == 0
    assert twice == original


def test_reverse_fixes_involutive_tables(capsys, d3_file):
    code, out, _ = run(capsys, "reverse", d3_file, "--element", "1")
    assert code == 0
    assert out == render_table_text(dihedral_quandle(3))


def test_reverse_element_out_of_range(capsys, d3_file):
    code, _, err = run(capsys, "reverse", d3_file, "--element", "9")
    assert code == 2
    assert "out of range" in err


def test_quotient_identity_projection(capsys, d3_file):
    code, out, _ = run(capsys, "quotient", d3_file, "--variety", "medial")
    assert code == 0
    head, _, table = out.partition("\n\n")
    assert head.splitlines() == ["1 -> 1", "2 -> 2", "3 -> 3"]
    assert parse_table_text(table) == [list(r) for r in dihedral_quandle(3).table]


def test_quotient_collapse_to_one_class(capsys, d3_file):
    code, out, _ = run(capsys, "quotient", d3_file, "--variety", "nquandle",
                       "--n", "1")
    assert code == 0
    assert out == "1 -> 1\n2 -> 1\n3 -> 1\n\nquandle v1\nn=1\n1\n"


def test_quotient_output_feeds_back_into_check(capsys, tmp_path):
    path = tmp_path / "conj.txt"
    path.write_text(render_table_text(conjugation_quandle_s3()))
    code, out, _ = run(capsys, "quotient", str(path), "--variety", "medial")
    assert code == 0
    table_text = out[out.index("quandle v1"):]
    quot = tmp_path / "quot.txt"
    quot.write_text(table_text)
    code, out, _ = run(capsys, "check", str(quot), "--medial")
    assert code == 0
    assert "medial: True" in out


def test_quotient_flag_validation(capsys, d3_file):
    code, _, err = run(capsys, "quotient", d3_file, "--variety", "nquandle")
    assert code == 2 and "requires --n" in err
    code, _, err = run(capsys, "quotient", d3_file, "--variety", "medial",
                       "--n", "2")
    assert code == 2 and "only applies" in err
    code, _, _ = run(capsys, "quotient", d3_file, "--variety", "abelian")
    assert code == 2


def test_verify_paper_succeeds(capsys):
    code, out, _ = run(capsys, "verify-paper", "--samples", "25")
    assert code == 0
    assert "total classes: 2" in out
    assert "index=1" in out


def test_verify_paper_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify-paper", "--samples", "25", "--seed", "7")
    _, second, _ = run(capsys, "verify-paper", "--samples", "25", "--seed", "7")
    assert first == second


def test_verify_paper_show_expansion(capsys):
    code, out, _ = run(capsys, "verify-paper", "--samples", "5",
                       "--show-expansion")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "expansion coefficients:"
    assert lines[1:6] == ["  constant (-1,0)", "  w (0,1)", "  x (1,-1)",
                          "  y (1,0)", "  z (-1,1)"]


def test_demo_affine_op(capsys):
    code, out, _ = run(capsys, "demo-affine", "--op", "(0,0)@1", "(0,0)@2")
    assert code == 0 and out == "(1,1)@1\n"
    code, out, _ = run(capsys, "demo-affine", "--op", "(0,0)@1", "(0,0)@1")
    assert code == 0 and out == "(0,0)@1\n"


def test_demo_affine_witness(capsys):
    code, out, _ = run(capsys, "demo-affine", "--witness", "(0,0)", "1")
    assert code == 0 and out == "(-3,-2)@2\n"
    code, out, _ = run(capsys, "demo-affine", "--witness", "(0,0)", "2")
    assert code == 0 and out == "(3,2)@1\n"


def test_demo_affine_rejects_bad_input(capsys):
    code, _, err = run(capsys, "demo-affine", "--op", "(0,0)@1", "oops")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "demo-affine", "--witness", "(0,0)", "3")
    assert code == 2
    code, _, _ = run(capsys, "demo-affine")
    assert code == 2


def _write_corpus(tmp_path, entries):
    root = tmp_path / "corpus"
    root.mkdir()
    for name, q in entries:
        (root / name).write_text(render_table_text(q))
    return str(root)


def test_reversal_experiment_reports_drops_and_collisions(capsys, tmp_path,
                                                          shadow_mod5):
    twin = relabel(shadow_mod5, [3, 1, 4, 0, 2, 8, 6, 9, 5, 7])
    assert twin != shadow_mod5
    root = _write_corpus(tmp_path, [
        ("d3.txt", dihedral_quandle(3)),
        ("d5.txt", dihedral_quandle(5)),
        ("shadow-a.txt", shadow_mod5),
        ("shadow-b.txt", twin),
    ])
    code, out, err = run(capsys, "reversal-experiment", root)
    assert code == 0
    lines = out.splitlines()
    assert "d3.txt 1 3 3 -" in lines
    assert "d5.txt 1 5 5 -" in lines
    assert "shadow-a.txt 6 10 2 drop" in lines
    assert "shadow-b.txt 6 10 2 drop" in lines
    collisions = [line for line in lines if line.startswith("collision:")]
    assert len(collisions) == 1
    assert "shadow-a.txt" in collisions[0] and "shadow-b.txt" in collisions[0]
    assert err == ""


def test_reversal_experiment_skips_unsuitable_files(capsys, tmp_path):
    root = _write_corpus(tmp_path, [
        ("conj.txt", conjugation_quandle_s3()),
        ("d3.txt", dihedral_quandle(3)),
    ])
    (tmp_path / "corpus" / "junk.txt").write_text("not a table\n")
    (tmp_path / "corpus" / "broken.txt").write_text("quandle v1\nn=2\n2 2\n1 1\n")
    code, out, err = run(capsys, "reversal-experiment", root)
    assert code == 0
    assert "d3.txt 1 3 3 -" in out
    assert "conj.txt" not in out
    assert "skipping broken.txt: not a quandle" in err
    assert "skipping conj.txt: not medial" in err
    assert "skipping junk.txt" in err


def test_reversal_experiment_empty_directory(capsys, tmp_path):
    root = tmp_path / "empty"
    root.mkdir()
    code, out, err = run(capsys, "reversal-experiment", str(root))
    assert code == 0
    assert "file orbit_rep order reversed_medial_order drop" in out
    assert err == ""
    code, _, err = run(capsys, "reversal-experiment", str(tmp_path / "nope"))
    assert code == 2


def test_usage_errors(capsys):
    code, _, _ = run(capsys, "no-such-command")
    assert code == 2
    code, _, _ = run(capsys)
    assert code == 2
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "quandleworks" in out
