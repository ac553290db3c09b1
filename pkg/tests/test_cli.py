import io
import json

import pytest
from hypothesis import given, settings

from src.algebra_cs import format_element
from src.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, render_text, run
from src.wiener_fourier import CoeffSeq, encode_sequence
from tests.strategies import rational_elements


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, expected", [
    (("mul", "y", "x"), "x*y^2"),
    (("eval", "y*x - x*y^2"), "0"),
    (("mu-orbits", "3"), "N=7 k=3 exps=[1,2,4] angles=[1/7,2/7,4/7]\nN=7 k=3 exps=[3,5,6] angles=[3/7,5/7,6/7]"),
    (("separate", "y-1"), "pi(k=2,e=1,gamma=1) witness=diag(z3-1, z3^2-1)"),
    (("norm", "2x - 1/2*y"), "norm_A=2.5 norm_B=2.5 grid=256"),
    (("norm", "y^100"), "norm_A=1 norm_B=1 grid=404"),
    (("rep-eval", "2", "1", "1", "x(1-y)"), "pi(k=2,e=1,gamma=1) [[0, z3+2], [z3^2+2, 0]]"),
    (("irred-check", "2", "1", "1/2"), "pi(k=2,e=1,gamma=1/2) irreducible=true span_dimension=4"),
    (("chain-check", "1@2, -1@0", "1"), "V_1: true"),
    (("chain-check", "1@2, -1@0", "2"), "V_2: false"),
    (("witness", "1@1, (-z3)@0", "3", "1,2"), "1/3: 2\n2/3: 4\nminimal=true positive=true"),
    (("wiener-invert", "1@1, -1@0", "3", "1,2"), "1/3: -1/3*z3-2/3\n2/3: 1/3*z3-1/3"),
    (("spectrum", "1@1", "3", "2,1"), "{z3, -z3-1}"),
    (("choose-prime", "1/3"), "5"),
    (("choose-prime",), "3"),
    (("df-check", "y", "y^-1"), "both-identities"),
    (("df-check", "x", "y"), "neither"),
    (("g1-check", "1", "1/2"), "g1 invariant=true equivalent_to_rep=true"),
    (("g1-check", "1", "z5"), "g1 invariant=true equivalent_to_rep=n/a"),
    (("faithful-witness", "x - 1"), "j=1"),
    (("faithful-witness", "0"), "none"),
    (("converge", "1@0, 1@4", "0", "3"), "1@0 delta0=true depth=4"),
])
def test_text_output(argv, expected):
    code, out, err = invoke(*argv)
    assert code == EXIT_OK, err
    assert out == expected + "\n"


def test_structured_output():
    code, out, _ = invoke("--mode", "structured", "mul", "y", "x")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["verb"] == "mul"
    assert record["result"] == "x*y^2"
    assert record["terms"] == [{"m": 1, "n": "2", "coefficient": {"conductor": 1, "coeffs": ["1/1"]}}]


def test_g1_check_reports_no_equivalence_outside_gaussian_rationals():
    code, out, _ = invoke("--mode", "structured", "g1-check", "2", "z5")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["beta"] == "z5"
    assert record["invariant"] is True
    assert record["equivalent_to_rep"] is None


def test_converge_record_carries_the_sequence():
    code, out, _ = invoke("--mode", "structured", "converge", "1@0, 1@4", "0", "2")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["result"] == "1@0, 1@1"
    assert record["terms"] == encode_sequence(CoeffSeq.from_dict({0: 1, 1: 1}))
    assert [t["n"] for t in record["terms"]] == ["0", "1"]


def test_big_exponents_print_in_full():
    code, out, _ = invoke("mul", "y^" + "9" * 30, "x")
    assert code == EXIT_OK
    assert out.strip() == f"x*y^{2 * int('9' * 30)}"


@pytest.mark.parametrize("argv, message", [
    (("--grid", "100", "norm", "y^100"), "grid too coarse"),
    (("wiener-invert", "1@1, (-z3)@0", "3", "1,2"), "not invertible in W(K): vanishes at 1/3"),
    (("rep-eval", "--banach", "2", "1", "2", "x"), "banach"),
    (("rep-eval", "2", "0", "1", "x"), "has size 1"),
    (("separate", "0"), "zero element"),
    (("--max-k", "1", "separate", "y-1"), "k <= 1"),
    (("witness", "1@1, -1@0", "1", "0"), "vanishes identically"),
    (("mu-orbits", "30"), "guard"),
])
def test_domain_errors_exit_1(argv, message):
    code, out, err = invoke(*argv)
    assert code == EXIT_DOMAIN
    assert out == ""
    assert err.startswith("error: ")
    assert message in err


@pytest.mark.parametrize("argv", [
    ("frobnicate",),
    (),
    ("mu-orbits", "three"),
    ("--mode", "xml", "eval", "x"),
    ("eval", "x^-1"),
    ("eval", "(x"),
    ("chain-check", "1@a", "1"),
    ("witness", "1@0", "7", "1,b"),
])
def test_usage_and_parse_errors_exit_2(argv):
    code, out, err = invoke(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert err


def test_parse_error_message():
    _, _, err = invoke("eval", "x $")
    assert err.startswith("parse error: ")


def test_unknown_verb_prints_usage():
    _, _, err = invoke("frobnicate")
    assert "usage:" in err


@pytest.mark.parametrize("argv", [
    ("mul", "y", "x", "x"),
    ("norm", "1 + y"),
    ("rep-eval", "3", "3", "i", "x + y^-1"),
    ("separate", "x(1-y)"),
    ("mu-orbits", "4"),
    ("witness", "1@0, 1@1", "7", "1,2,4,3,6,5"),
    ("spectrum", "1@2", "7", "3,6,5"),
    ("choose-prime", "1/15", "3/4"),
    ("g1-check", "2", "1/3", "10"),
    ("faithful-witness", "x^2*y - x*y"),
    ("converge", "2@3, 1@9", "3", "5"),
])
def test_text_and_structured_modes_agree(argv):
    _, text, _ = invoke(*argv)
    _, structured, _ = invoke("--mode", "structured", *argv)
    records = [json.loads(line) for line in structured.splitlines()]
    assert "\n".join(render_text(r) for r in records) + "\n" == text


@settings(max_examples=50, deadline=None)
@given(rational_elements(max_terms=3), rational_elements(max_terms=3))
def test_modes_agree_on_random_products(a, b):
    argv = ("mul", f"({format_element(a)})", f"({format_element(b)})")
    _, text, _ = invoke(*argv)
    _, structured, _ = invoke("--mode", "structured", *argv)
    record = json.loads(structured)
    assert render_text(record) + "\n" == text
    assert text == format_element(a * b) + "\n"


def test_output_is_deterministic():
    argv = ("--mode", "structured", "separate", "x^2 - 3y + 1")
    assert invoke(*argv) == invoke(*argv)
