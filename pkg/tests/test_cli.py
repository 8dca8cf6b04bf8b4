"""CLI contract: subcommands, output formats, exit codes, rendering."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from z2crossed.cli import main
from z2crossed.render import render_approx, render_scalar
from z2crossed.scalars import Cyclotomic, integer, root_of_unity, sqrt_int
from z2crossed.schemas import CheckResponse


def e(num: int, den: int):
    return root_of_unity(Fraction(num, den))


@pytest.fixture()
def runner():
    return CliRunner()


def test_render_scalar_shapes():
    assert render_scalar(integer(0)) == "0"
    assert render_scalar(integer(-3)) == "-3"
    assert render_scalar(integer(1) * Fraction(1, 2)) == "1/2"
    assert render_scalar(e(7, 8)) == "e(7/8)"
    assert render_scalar(e(9, 16)) == "e(9/16)"
    assert render_scalar(e(2, 3)) == "e(2/3)"
    assert render_scalar(e(1, 3) * 2) == "2*e(1/3)"
    assert render_scalar(sqrt_int(2)) == "sqrt(2)"
    assert render_scalar(-sqrt_int(2)) == "-sqrt(2)"
    assert render_scalar(sqrt_int(8)) == "2*sqrt(2)"
    assert render_scalar(sqrt_int(2) * e(1, 8)) == "sqrt(2)*e(1/8)"
    assert render_scalar(sqrt_int(3) * e(5, 6) * Fraction(1, 2)) == (
        "1/2*sqrt(3)*e(5/6)"
    )
    raw = render_scalar(integer(1) + e(1, 5))
    assert "e(" in raw and ("+" in raw or "-" in raw)


def test_render_approx():
    assert render_approx(integer(2)) == "2"
    assert render_approx(sqrt_int(2)) == "1.41421"
    assert render_approx(e(1, 4)) == "0+1i"


def test_check_table(runner):
    result = runner.invoke(main, ["check", "--jordan", "4_1^+1"])
    assert result.exit_code == 0
    assert "input: 4_1^+1" in result.output
    assert "alpha: e(7/16)" in result.output
    assert "beta: e(9/16)" in result.output
    assert "pentagon: pass" in result.output
    assert "checks passed" in result.output


def test_check_json_round_trip(runner):
    result = runner.invoke(main, ["check", "--jordan", "4_1^+1", "--format", "json"])
    assert result.exit_code == 0
    blob = json.loads(result.output)
    assert blob["ok"] is True
    assert Cyclotomic.from_terms(blob["alpha"]) == e(7, 16)
    assert Cyclotomic.from_terms(blob["beta"]) == e(9, 16)
    assert set(blob["checks"].values()) == {"pass"}


def test_check_epsilon_flag(runner):
    result = runner.invoke(
        main,
        ["check", "--jordan", "3^-1", "--epsilon", "-1", "--format", "json"],
    )
    assert result.exit_code == 0
    assert json.loads(result.output)["epsilon"] == -1


def test_check_gram_input_notes_delta(runner, tmp_path):
    gram = tmp_path / "a1.gram"
    gram.write_text("# rank then rows\n1\n2\n")
    result = runner.invoke(main, ["check", "--gram", str(gram)])
    assert result.exit_code == 0
    assert "delta: (1)" in result.output
    assert "milgram_full: pass" in result.output
    assert "milgram_partial: pass" in result.output


def test_modular_data_json_schema(runner):
    result = runner.invoke(
        main, ["modular-data", "--jordan", "3^-1", "--format", "json"]
    )
    assert result.exit_code == 0
    blob = json.loads(result.output)
    assert set(blob) == {
        "input",
        "epsilon",
        "alpha",
        "beta",
        "objects",
        "T",
        "S",
        "dims",
        "global_dim",
        "checks",
    }
    assert len(blob["objects"]) == 5
    assert blob["global_dim"] == 12
    assert set(blob["checks"].values()) == {"pass"}
    # emitted terms parse back to the exact entries
    s00 = Cyclotomic.from_terms(blob["S"][0][0])
    assert s00 == integer(1)


def test_modular_data_paper_order_table(runner):
    result = runner.invoke(
        main, ["modular-data", "--jordan", "4_1^+1", "--paper-order"]
    )
    assert result.exit_code == 0
    rows = [ln.split() for ln in result.output.splitlines()]
    first_s = ["1", "1", "1", "1"] + ["sqrt(2)"] * 4 + ["2"]
    last_s = ["2", "2", "-2", "-2", "0", "0", "0", "0", "0"]
    assert first_s in rows
    assert last_s in rows
    assert "global_dim: 16" in result.output


def test_modular_data_paper_order_rejected_elsewhere(runner):
    result = runner.invoke(
        main, ["modular-data", "--jordan", "3^-1", "--paper-order"]
    )
    assert result.exit_code == 2
    assert "4_1^+1" in result.output


def test_fusion_table(runner):
    result = runner.invoke(main, ["fusion", "--jordan", "2_1^+1"])
    assert result.exit_code == 0
    assert "simple objects: 8" in result.output
    assert "X((0),+1) * X((0),-1) = X((0),-1)" in result.output
    assert "Z((0),+1) * Z((1),+1) = " in result.output


def test_fusion_json_closed(runner):
    result = runner.invoke(
        main, ["fusion", "--jordan", "2_1^+1", "--format", "json"]
    )
    blob = json.loads(result.output)
    labels = set(blob["objects"])
    for row in blob["table"]:
        for cell in row:
            assert cell and set(cell) <= labels


def test_gauss_output(runner):
    result = runner.invoke(main, ["gauss", "--jordan", "4_1^+1"])
    assert result.exit_code == 0
    assert "G_delta(q^-1): e(7/8)" in result.output
    assert "signature: 1 (mod 8)" in result.output
    assert "milgram sum: 2*e(1/8)" in result.output


def test_gauss_gram_file(runner, tmp_path):
    gram = tmp_path / "n6.gram"
    gram.write_text("1\n6\n")
    result = runner.invoke(main, ["gauss", "--gram", str(gram)])
    assert result.exit_code == 0
    assert "G_delta(q^-1): e(7/8)" in result.output


def test_info_output(runner):
    result = runner.invoke(main, ["info", "--jordan", "2_1^+1+3^-1"])
    assert result.exit_code == 0
    assert "group: Z/2 x Z/3 (order 6)" in result.output
    assert "|2G|: 3" in result.output
    assert "delta: (1,0)" in result.output


def test_exit_2_on_bad_jordan(runner):
    result = runner.invoke(main, ["check", "--jordan", "4_1^+0"])
    assert result.exit_code == 2


def test_exit_2_on_order_one_modulus(runner):
    result = runner.invoke(main, ["modular-data", "--jordan", "1^+1"])
    assert result.exit_code == 2
    assert "modulus" in result.output


def test_exit_2_on_missing_input(runner):
    result = runner.invoke(main, ["check"])
    assert result.exit_code == 2
    assert "exactly one input" in result.output


def test_exit_2_on_both_inputs(runner, tmp_path):
    gram = tmp_path / "g.gram"
    gram.write_text("1\n2\n")
    result = runner.invoke(
        main, ["check", "--jordan", "3^-1", "--gram", str(gram)]
    )
    assert result.exit_code == 2


def test_exit_2_on_missing_gram_file(runner):
    result = runner.invoke(main, ["check", "--gram", "/nonexistent.gram"])
    assert result.exit_code == 2


def test_exit_2_on_odd_gram(runner, tmp_path):
    gram = tmp_path / "odd.gram"
    gram.write_text("1\n3\n")
    result = runner.invoke(main, ["check", "--gram", str(gram)])
    assert result.exit_code == 2
    assert "even" in result.output


def test_exit_1_on_verification_failure(runner, monkeypatch):
    import z2crossed.cli as cli_mod

    failing = CheckResponse(
        input="stub",
        epsilon=1,
        alpha=[[0, 1, 1, 1]],
        beta=[[0, 1, 1, 1]],
        delta="(0)",
        ok=False,
        checks={"pentagon": "fail: stub"},
    )
    monkeypatch.setattr(cli_mod, "run_check", lambda cfg: failing)
    result = runner.invoke(main, ["check", "--jordan", "4_1^+1"])
    assert result.exit_code == 1
    blob = json.loads(result.output)
    assert blob["ok"] is False
    assert blob["checks"]["pentagon"].startswith("fail")
