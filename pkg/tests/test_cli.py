import json
import logging

from click.testing import CliRunner
import pytest

from glpoly.cli import util
from glpoly.cli.main import main
from glpoly.config import DEFAULT_MAX_SANDWICH_DEGREE, LARGE_MAX_SANDWICH_DEGREE
from glpoly.series import PoincareSeries


@pytest.fixture
def runner():
    return CliRunner()


def _json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output.strip().splitlines()[-1])


def test_sym_json(runner):
    doc = _json(runner.invoke(main, ["sym", "--mu", "2", "--p", "2", "-f", "json"]))
    assert doc["kind"] == "sym"
    assert doc["params"] == {"mu": "2", "p": 2, "r": 1, "path": "orbit"}
    assert doc["series"] == [[0, 2], [2, 2], [4, 2]]
    assert doc["euler_char"] == 6
    assert doc["top_degree"] == 4
    assert set(doc["meta"]) == {"version"}
    assert "agree" not in doc


def test_sym_degree_one(runner):
    doc = _json(runner.invoke(main, ["sym", "--mu", "1", "--p", "5", "-f", "json"]))
    assert doc["series"] == [[0, 1], [2, 1], [4, 1], [6, 1], [8, 1]]


def test_sym_both_paths(runner):
    args = ["sym", "--mu", "2", "--p", "3", "--path", "both", "-f", "json"]
    doc = _json(runner.invoke(main, args))
    assert doc["agree"] is True
    assert doc["series"] == [[0, 2], [2, 2], [4, 4], [6, 2], [8, 2]]
    assert doc["series_orbit"] == doc["series_sandwich"] == doc["series"]
    series = PoincareSeries.from_pairs(doc["series"])
    assert series.evaluate(1) == 12


def test_sym_paths_disagree(runner, mocker):
    mocker.patch(
        "glpoly.cli.series.sandwich_series", return_value=PoincareSeries.zero()
    )
    args = ["sym", "--mu", "2", "--p", "3", "--path", "both", "-f", "json"]
    doc = _json(runner.invoke(main, args))
    assert doc["agree"] is False
    assert doc["series_sandwich"] == []


def test_sym_orbit_skips_sandwich(runner, mocker):
    sandwich = mocker.patch("glpoly.cli.series.sandwich_series")
    result = runner.invoke(main, ["sym", "--mu", "2,1", "--p", "2"])
    assert result.exit_code == 0
    sandwich.assert_not_called()


def test_sym_deterministic(runner):
    args = ["sym", "--mu", "2,1", "--p", "3", "-f", "json"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == second.exit_code == 0
    assert first.output == second.output


def test_sym_timing(runner):
    args = ["sym", "--mu", "2", "--p", "2", "--timing", "-f", "json"]
    doc = _json(runner.invoke(main, args))
    assert set(doc["meta"]) == {"version", "elapsed_s"}


def test_sym_csv(runner):
    result = runner.invoke(main, ["sym", "--mu", "2", "--p", "2", "-f", "csv"])
    assert result.exit_code == 0
    assert result.output == "degree,dimension\n0,2\n2,2\n4,2\n"


def test_sym_pretty(runner):
    result = runner.invoke(main, ["sym", "--mu", "2", "--p", "2"])
    assert result.exit_code == 0
    assert "2 + 2t^2 + 2t^4" in result.output
    assert "top degree: 4" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["sym", "--mu", "2,x", "--p", "2"],
        ["sym", "--mu", "1,2", "--p", "2"],
        ["sym", "--mu", "2", "--p", "4"],
        ["sym", "--mu", "2", "--p", "2", "--r", "-1"],
        ["gamma", "--p", "2", "--r", "0"],
        ["ext", "--left", "2", "--right", "1", "--p", "3"],
        ["verify", "--rmax", "9"],
    ],
)
def test_usage_errors(runner, args):
    assert runner.invoke(main, args).exit_code == 2


@pytest.mark.parametrize(
    "args, message",
    [
        (["sym", "--mu", "3,3", "--p", "2", "--path", "sandwich"], "--allow-large"),
        (["verify", "--dmax", "9"], "--allow-large"),
        (["sym", "--mu", "10,10", "--p", "7", "--r", "3", "--path", "orbit"], "summands"),
        (["tensor", "--d", "20", "--p", "7", "--r", "3"], "summands"),
    ],
)
def test_scale_guard(runner, args, message):
    result = runner.invoke(main, args)
    assert result.exit_code == 3
    assert message in result.output


def test_gamma(runner):
    doc = _json(runner.invoke(main, ["gamma", "--p", "2", "--r", "1", "-f", "json"]))
    assert doc["kind"] == "gamma"
    assert doc["series"] == [[0, 1], [2, 3], [4, 1], [6, 1]]
    assert doc["top_degree"] == 6
    assert doc["euler_char"] == 6


def test_tensor(runner):
    args = ["tensor", "--d", "2", "--p", "2", "-f", "csv"]
    result = runner.invoke(main, args)
    assert result.exit_code == 0
    assert result.output == "degree,dimension\n0,2\n2,4\n4,2\n"


def test_ext(runner):
    args = ["ext", "--left", "2", "--right", "1,1", "--p", "3", "-f", "json"]
    doc = _json(runner.invoke(main, args))
    assert doc["kind"] == "ext"
    assert doc["params"]["left"] == "((2))"
    assert doc["series"] == [[2, 1], [4, 1], [6, 1]]


def test_table(runner):
    args = ["table", "--dmax", "2", "--primes", "2", "--rmax", "1"]
    result = runner.invoke(main, args)
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[:4] == [
        "mu,p,r,degree,dimension",
        "(1),2,0,0,1",
        "(1),2,1,0,1",
        "(1),2,1,2,1",
    ]
    assert "(2),2,1,4,2" in lines
    assert '"(1,1)",2,1,2,4' in lines


def test_table_rejects_composite(runner):
    result = runner.invoke(main, ["table", "--dmax", "1", "--primes", "2,4"])
    assert result.exit_code == 2


def test_verify_small_grid(runner):
    args = [
        "verify",
        "--dmax", "2",
        "--primes", "2,3",
        "--rmax", "1",
        "--naive-dmax", "3",
        "--samples", "2",
    ]
    result = runner.invoke(main, args)
    assert result.exit_code == 0, result.output
    assert "all checks passed" in result.output


def test_verify_json(runner):
    args = ["verify", "--dmax", "1", "--primes", "2", "--rmax", "1", "-c", "d1_identity"]
    doc = _json(runner.invoke(main, args + ["-f", "json"]))
    assert doc["passed"] is True
    assert [c["name"] for c in doc["checks"]] == ["d1_identity"]


def test_verify_failure(runner):
    args = [
        "verify",
        "--convention", "same_groups",
        "-c", "path_equivalence",
        "--primes", "3",
        "--dmax", "2",
        "--rmax", "1",
    ]
    result = runner.invoke(main, args)
    assert result.exit_code == 1
    assert "mu=(2)" in result.output
    assert "path_equivalence: mu=(2)" in result.output


def test_allow_large_warns(caplog):
    with caplog.at_level(logging.WARNING):
        assert util.sandwich_limit(True) == LARGE_MAX_SANDWICH_DEGREE
    assert "Raising the sandwich degree limit" in caplog.text

    caplog.clear()
    assert util.sandwich_limit(False) == DEFAULT_MAX_SANDWICH_DEGREE
    assert not caplog.records
