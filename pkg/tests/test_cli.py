"""Tests for the command-line interface."""
import json

import pytest

from delaylab import main
from delaylab.core.lab.theorems import run_theorem_suite
from delaylab.main import EXIT_FAILS, EXIT_OK, EXIT_USAGE, cli
from delaylab.utils.logger import configure_logging, logger

SMALL_SUITE = {
    "suite": {"corpus_count": 10, "budget": 12, "window_grid": [["2", "1"]], "shifts": ["-2", "2"]},
    "corpus": {"max_edges": 3, "horizon": "6"},
}


def test_tdelay(capsys, data_path):
    """tdelay prints the transmission delay and its classification."""
    assert cli(["tdelay", data_path("waves.txt"), "u", "x"]) == EXIT_OK
    assert capsys.readouterr().out == "d = 3 (rising)\n"


def test_tdelay_unknown_signal(capsys, data_path):
    """An unknown signal name is a usage error."""
    assert cli(["tdelay", data_path("waves.txt"), "u", "y"]) == EXIT_USAGE
    assert "no signal named 'y'" in capsys.readouterr().err


def test_check_symmetry_fails(capsys):
    """A failing check exits 1 with its counterexample."""
    argv = ["check", "symmetry", "--dc", "window_all(2,2)", "--seed", "7", "--count", "200"]
    assert cli(argv) == EXIT_FAILS
    assert capsys.readouterr().out.startswith("symmetry: fails [u=")


def test_check_holds(capsys):
    """A holding check exits 0."""
    assert cli(["check", "determinism", "--dc", "pure(2)", "--count", "10"]) == EXIT_OK
    assert capsys.readouterr().out == "determinism: holds\n"


def test_check_time_invariance_with_shifts(capsys):
    """--shifts takes a comma-separated list of rationals."""
    argv = ["check", "time-invariance", "--dc", "solsc", "--count", "4", "--shifts=-2,1/2"]
    assert cli(argv) == EXIT_FAILS
    assert "time-invariance: fails" in capsys.readouterr().out


def test_check_inclusion(capsys):
    """Inclusion holds into Sol_SC and fails between distinct shifts."""
    argv = ["check", "inclusion", "--dc", "pure(2)", "--dc2", "solsc", "--count", "10"]
    assert cli(argv) == EXIT_OK
    assert cli(["check", "inclusion", "--dc", "pure(2)"]) == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["check", "liveness", "--dc", "ident"],
        ["check", "symmetry", "--dc", "pure(1"],
        ["check", "symmetry"],
        ["sim", "nowhere.net", "nowhere.txt"],
        ["sim", "x.net", "x.txt", "--horizon", "1.5"],
    ],
)
def test_usage_errors(argv, capsys):
    """Bad commands, expressions and files exit 2."""
    assert cli(argv) == EXIT_USAGE


def test_non_canonical_wavefile_is_a_usage_error(capsys, tmp_path):
    """A wave file with unordered edges is a parse error with its position."""
    bad = tmp_path / "bad.txt"
    bad.write_text("signal u 0 @ 1\nsignal b 0 @ 5 2\n")
    assert cli(["tdelay", str(bad), "u", "b"]) == EXIT_USAGE
    assert "line 2, column 16" in capsys.readouterr().err


def test_version(capsys):
    """--version prints the program name."""
    assert cli(["--version"]) == EXIT_OK
    assert "delaylab" in capsys.readouterr().out


def test_log_level_option(capsys, data_path):
    """--log-level lowers the console threshold and shows bound fields."""
    try:
        assert cli(["--log-level", "DEBUG", "tdelay", data_path("waves.txt"), "u", "x"]) == EXIT_OK
        logger.bind(law="sample.law").debug("sample message")
        err = capsys.readouterr().err
    finally:
        configure_logging()
    assert "[law=sample.law]" in err
    assert "sample message" in err


def test_sim(capsys, data_path, tmp_path):
    """sim prints every node as a wave-file line and writes the VCD."""
    vcd = tmp_path / "glitch.vcd"
    argv = ["sim", data_path("xor_glitch.net"), data_path("xor_glitch.waves"), "-o", str(vcd)]
    assert cli(argv) == EXIT_OK
    assert capsys.readouterr().out == "signal u 0 @ 2\nsignal a 0 @ 3\nsignal w 0 @ 2 3\nsignal x 0\n"
    assert "$enddefinitions" in vcd.read_text()


def test_sim_feedback(capsys, data_path):
    """Feedback netlists simulate with --horizon and fail without it."""
    argv = ["sim", data_path("sr_latch.net"), data_path("sr_latch.waves"), "--horizon", "8"]
    assert cli(argv) == EXIT_OK
    assert "signal q 0 @ 3/2 4\n" in capsys.readouterr().out
    assert cli(argv[:3]) == EXIT_FAILS
    assert "horizon" in capsys.readouterr().err


def test_sim_missing_input(capsys, data_path):
    """A wave file missing an input exits 2."""
    assert cli(["sim", data_path("sr_latch.net"), data_path("waves.txt"), "--horizon", "8"]) == EXIT_USAGE


def test_theorems(capsys, monkeypatch, tmp_path):
    """theorems prints the report and writes the JSON file."""
    monkeypatch.setattr(
        main, "run_theorem_suite", lambda seed, engine: run_theorem_suite(seed, engine, SMALL_SUITE)
    )
    report = tmp_path / "report.json"
    assert cli(["theorems", "--seed", "42", "--json", str(report)]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    payload = json.loads(report.read_text())
    assert len(lines) == len(payload["laws"]) + 1
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert payload["seed"] == 42 and payload["passed"] is True
