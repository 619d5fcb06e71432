import io
import shutil
from pathlib import Path

import pytest

from rzsearch import catalog
from rzsearch.board import parse_overlay
from rzsearch.cli import EXIT_DECIDED, EXIT_ERROR, EXIT_UNKNOWN, main
from rzsearch.problem import to_sgf
from rzsearch.prooffile import read_proof

FIGURES = Path(__file__).resolve().parents[1] / "problems" / "figures"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_solve_corner_eye(tmp_path):
    proof = tmp_path / "corner.proof"
    code, text = run("solve", str(FIGURES / "corner_eye.sgf"), "--proof-out", str(proof))
    assert code == EXIT_DECIDED
    assert text.splitlines()[-1] == "WIN nodes=7 rz_size=11"
    zone = parse_overlay(text)
    assert zone.names() == ["D1", "E1", "F1", "G1", "D2", "E2", "F2", "G2", "E3", "F3", "G3"]
    assert read_proof(proof).get("verdict") == "WIN"


def test_proof_file_is_byte_stable(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run("solve", str(FIGURES / "killall_wall.sgf"), "--proof-out", str(a))
    run("solve", str(FIGURES / "killall_wall.sgf"), "--proof-out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_already_alive_one_node(tmp_path, corner_eye_lines):
    from rzsearch.problem import spec_from_position

    path = tmp_path / "alive.sgf"
    path.write_text(to_sgf(spec_from_position(corner_eye_lines["null"], "killall")))
    code, text = run("solve", str(path))
    assert code == EXIT_DECIDED
    assert text.splitlines()[-1].startswith("WIN nodes=1 ")


def test_tiny_budget_is_unknown():
    code, text = run("solve", str(FIGURES / "killall_wall.sgf"), "--max-nodes", "10")
    assert code == EXIT_UNKNOWN
    assert text.splitlines()[-1].startswith("UNKNOWN nodes=11 rz_size=0")


def test_hex_problem():
    code, text = run("solve", str(FIGURES / "hex_bridge.hex"))
    assert code == EXIT_DECIDED and text.splitlines()[-1].startswith("WIN ")


def test_missing_file_reports_path(capsys):
    code, _ = run("solve", "/nonexistent/problem.sgf")
    assert code == EXIT_ERROR
    assert "/nonexistent/problem.sgf" in capsys.readouterr().err


def test_orderings_and_flags():
    path = str(FIGURES / "corner_eye.sgf")
    for extra in (["--ordering", "lex"], ["--ordering", "liberty"], ["--no-rzs"], ["--pass-and", "off"],
                  ["--rules", "killall"]):
        code, text = run("solve", path, *extra)
        assert code == EXIT_DECIDED, extra
        assert text.splitlines()[-1].startswith("WIN ")


def test_captured_crucial_stone_fails(tmp_path):
    # White's only stone sits in atari with Black to move.
    path = tmp_path / "dead.sgf"
    path.write_text("(;SZ[3]AW[bb]AB[ab][cb][bc]MA[bb]PL[B])")
    code, text = run("solve", str(path), "--max-depth", "6")
    assert code == EXIT_DECIDED
    assert text.splitlines()[-1].startswith("FAIL ")


def test_bench_on_figures(tmp_path):
    report = tmp_path / "report.txt"
    code, text = run("bench", str(FIGURES), "--report", str(report))
    assert code == EXIT_DECIDED
    assert report.read_text() == text
    assert "rzs" in text and "plain" in text


def test_bench_empty_dir(tmp_path, capsys):
    code, _ = run("bench", str(tmp_path))
    assert code == EXIT_ERROR
    assert "no problem files" in capsys.readouterr().err


def test_bench_skips_bad_files(tmp_path, capsys):
    shutil.copy(FIGURES / "corner_eye.sgf", tmp_path)
    shutil.copy(FIGURES / "corner_eye.priors", tmp_path)
    (tmp_path / "broken.sgf").write_text("(;SZ[5]AB[")
    code, text = run("bench", str(tmp_path))
    assert code == EXIT_ERROR
    assert "skipped broken.sgf" in text
    assert "warning: skipped broken.sgf" in capsys.readouterr().err


def test_bench_wall_problem_needs_zones(tmp_path):
    shutil.copy(FIGURES / "killall_wall.sgf", tmp_path)
    shutil.copy(FIGURES / "killall_wall.priors", tmp_path)
    code, text = run("bench", str(tmp_path), "--max-nodes", "1000")
    assert code == EXIT_DECIDED
    row = [ln for ln in text.splitlines() if ln.startswith("killall_wall")][0]
    plain, rzs = row.split()[1:3], row.split()[3:5]
    assert plain[0] == "UNKNOWN" and rzs[0] == "WIN"
