import json

import pytest

from main import build_parser, get_config, run


def invoke(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, "--output", "json", *argv)
    return code, json.loads(out)


def test_tits_homology_of_three_lines(capsys):
    code, report = invoke_json(capsys, "tits-homology", "--vectors", "(1,0);(0,1);(1,1)", "--degree", "2")
    assert code == 0
    assert report["command"] == "tits-homology"
    assert report["witness"]["betti"] == 2
    assert report["witness"]["torsion"] == []
    assert "elapsed" not in report


def test_timing_adds_elapsed(capsys):
    _, report = invoke_json(capsys, "--timing", "product", "--left", "(1,0)", "--right", "(0,1)")
    assert report["elapsed"] >= 0


def test_right_angled_dehn_tetra_reduces_to_zero(capsys):
    code, report = invoke_json(capsys, "dehn-tetra", "--side", "pi/2")
    assert code == 0
    assert report["witness"]["display"] == "0 (reduced)"
    assert report["witness"]["side"]["pi_rational"] == "1/2"


def test_text_output(capsys):
    code, out = invoke(capsys, "apartment", "--vectors", "(1,0);(0,1)")
    assert code == 0
    assert out.startswith("apartment: pass")


@pytest.mark.parametrize("argv", [
    ["product", "--left", "(1,0", "--right", "(0,1)"],
    ["coproduct"],
    ["frobnicate"],
    ["product", "--left", "(1,0)", "--right", "(1,0,0)"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out = invoke(capsys, *argv)
    assert code == 2


def test_usage_error_is_reported_as_json(capsys):
    code, out = invoke(capsys, "dehn-tetra", "--side", "x")
    assert code == 2
    error = json.loads(out)
    assert error["error"] == "UsageError"
    assert error["exit_code"] == 2


@pytest.mark.parametrize("argv", [
    ["dehn-tetra", "--side", "arccos(-1/3)"],
    ["locate", "--vectors", "(1,0);(1,1)", "--point", "(1,0,0)"],
    ["hopf-check", "--vectors", "(1,0);(2,0)"],
])
def test_domain_errors_exit_three(capsys, argv):
    code, _ = invoke(capsys, *argv)
    assert code == 3


def test_reruns_are_byte_identical(capsys):
    argv = ["--output", "json", "hopf-check", "--vectors", "(1,2);(3,-1)", "--samples", "100"]
    first = invoke(capsys, *argv)
    second = invoke(capsys, *argv)
    assert first == second
    assert first[0] == 0


def test_subcommand_flags_override_globals():
    args = build_parser().parse_args(["--bits", "256", "cocomm", "--side", "1", "--bits", "300", "--height", "1000"])
    config = get_config(args)
    assert config.precision_bits == 300
    assert config.relation_height == 1000
    args = build_parser().parse_args(["--samples", "7", "cover-check", "--vectors", "(1,0)"])
    assert get_config(args).samples == 7


def test_locate_takes_one_point(capsys):
    code, out = invoke(capsys, "locate", "--vectors", "(1,0);(0,1)", "--point", "(1,0);(0,1)")
    assert code == 2
    assert json.loads(out)["error"] == "UsageError"


def test_unbounded_closure_is_a_domain_error(capsys):
    code, out = invoke(capsys, "tits-homology", "--vectors", "(1,0,0);(0,1,0);(0,0,1);(1,1,1)", "--closed")
    assert code == 3
    assert json.loads(out)["error"] == "ComplexTooLargeError"


def test_explicit_zero_samples_are_kept(capsys):
    code, report = invoke_json(capsys, "cover-check", "--vectors", "(1,0);(1,1)", "--samples", "0")
    assert code == 0
    assert report["witness"]["samples"] == 0
    args = build_parser().parse_args(["--samples", "5", "hopf-check", "--vectors", "(1,0)", "--samples", "0"])
    assert get_config(args).samples == 0


@pytest.mark.parametrize("argv", [
    ["--height", "0", "cocomm", "--side", "1"],
    ["cocomm", "--side", "1", "--bits", "0"],
    ["--samples", "-1", "cover-check", "--vectors", "(1,0)"],
])
def test_out_of_range_settings_are_usage_errors(capsys, argv):
    code, _ = invoke(capsys, *argv)
    assert code == 2
