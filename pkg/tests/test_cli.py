import io
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from graycalc.cli import main

GOLDEN = Path(__file__).parent / "golden"


def test_run_exit_codes(capsys):
    assert main(["run", str(GOLDEN / "05_eq.gc")]) == 0
    assert "equal: true" in capsys.readouterr().out
    assert main(["run", str(GOLDEN / "22_failing_check.gc")]) == 1
    assert main(["run", str(GOLDEN / "24_runtime_error.gc")]) == 1


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.gc"
    bad.write_text("0-cell x\n1-cell f : x -> nowhere\n")
    assert main(["run", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "bad.gc:2:" in err and "nowhere" in err


def test_missing_file(tmp_path):
    assert main(["run", str(tmp_path / "absent.gc")]) == 2


def test_fmt_to_file(tmp_path):
    out = tmp_path / "out.gc"
    assert main(["fmt", str(GOLDEN / "10_movie.gc"), "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("# graycalc document\n")
    again = tmp_path / "again.gc"
    assert main(["fmt", str(out), "-o", str(again)]) == 0
    assert again.read_text() == text


def test_fmt_does_not_resolve(tmp_path, capsys):
    doc = tmp_path / "loose.gc"
    doc.write_text("eq a   b\n")
    assert main(["fmt", str(doc)]) == 0
    assert capsys.readouterr().out == "# graycalc document\neq a b\n"


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO((GOLDEN / "05_eq.gc").read_text()))
    assert main(["run", "-"]) == 0
    assert capsys.readouterr().out.count("status: pass") == 3


def test_render_svg(tmp_path):
    out = tmp_path / "d.svg"
    assert main(["render", str(GOLDEN / "09_diagram.gc"), "--name", "D", "-o", str(out)]) == 0
    root = ET.parse(out).getroot()
    assert len(list(root.iter("{http://www.w3.org/2000/svg}circle"))) == 2


def test_render_movie_tikz(capsys):
    assert main(["render", str(GOLDEN / "10_movie.gc"), "--name", "Swap", "--format", "tikz",
                 "--labels", "inline"]) == 0
    assert capsys.readouterr().out.count("% frame") == 3


def test_render_errors(capsys):
    assert main(["render", str(GOLDEN / "05_eq.gc")]) == 2
    assert main(["render", str(GOLDEN / "09_diagram.gc"), "--name", "nope"]) == 2
    assert main(["render", str(GOLDEN / "09_diagram.gc"), "--wire-spacing", "0"]) == 2


def test_bad_arguments():
    with pytest.raises(SystemExit) as e:
        main(["render", "x.gc", "--format", "png"])
    assert e.value.code == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "graycalc.cli", "run", str(GOLDEN / "02_signature.gc")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "cells: 7" in proc.stdout


def test_render_defaults_to_first_drawable(capsys):
    assert main(["render", str(GOLDEN / "10_movie.gc")]) == 0
    assert capsys.readouterr().out.count('class="panel"') == 1
