import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from qg2.cli import Gen, Mul, Pow, QBracket, main, parse, parse_element
from qg2.coeff.modes import GENERIC, RootOfUnity
from qg2.errors import ExprSyntaxError, InvalidArgs, UnknownSymbol
from qg2.pbw.ops import get_algebra
from qg2.pbw.render import render_element

GEN = get_algebra(GENERIC)
U5 = get_algebra(RootOfUnity(5, 1, 2), restricted=True, fast_paths=True)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parser_structure():
    e = parse("E1112*E112")
    assert isinstance(e, Mul) and e.a.name == "E1112"
    e = parse("w1^-2")
    assert isinstance(e, Pow) and e.n == -2 and isinstance(e.base, Gen)
    assert isinstance(parse("[e1, e2]_{r^3}"), QBracket)
    assert parse("omega1").name == "w1" and parse("ω2'").name == "w2'"


def test_juxtaposition_and_precedence():
    g = GEN.gen
    assert parse_element("e1 e2", GEN) == g("e1") * g("e2")
    assert parse_element("e1 + e2 f1", GEN) == g("e1") + g("e2") * g("f1")
    assert parse_element("-e1^2", GEN) == -(g("e1") * g("e1"))
    assert parse_element("[e1, e2]_{s^3}", GEN) == g("E12")
    assert parse_element("tau(E12)", GEN) == g("F12")


def test_syntax_errors_carry_position():
    with pytest.raises(ExprSyntaxError) as ei:
        parse("e1 +\n  * e2")
    assert (ei.value.line, ei.value.column) == (2, 3)
    with pytest.raises(ExprSyntaxError):
        parse("e1^x")
    with pytest.raises(ExprSyntaxError):
        parse("(e1")
    with pytest.raises(ExprSyntaxError):
        parse("e1 $ e2")
    with pytest.raises(UnknownSymbol):
        parse("E13")


def test_evaluation_errors():
    with pytest.raises(InvalidArgs):
        parse_element("e1 / e2", GEN)
    with pytest.raises(UnknownSymbol):
        parse_element("theta", GEN)
    assert parse_element("theta^5", U5) == U5.unit()


@st.composite
def expressions(draw):
    names = ["e1", "e2", "f1", "f2", "w1", "w2", "w1'", "w2'", "E12", "E112", "F1112", "r", "s", "2"]
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        factors = draw(st.lists(st.sampled_from(names), min_size=1, max_size=3))
        if draw(st.booleans()):
            factors[0] += f"^{draw(st.integers(-1, 2))}" if factors[0].startswith("w") else "^2"
        terms.append(" ".join(factors))
    return " + ".join(terms) + (" / (r - s)" if draw(st.booleans()) else "")


@settings(max_examples=30)
@given(expressions())
def test_render_parse_round_trip_generic(text):
    x = parse_element(text, GEN)
    assert parse_element(render_element(x), GEN) == x


@settings(max_examples=30)
@given(expressions())
def test_render_parse_round_trip_root(text):
    x = parse_element(text, U5)
    assert parse_element(render_element(x), U5) == x


def test_normalize_command(capsys):
    code, out, _ = run(capsys, "normalize", "E1112*E112")
    assert code == 0 and out.strip() == "r^3 * E112 E1112"
    code, out, _ = run(capsys, "normalize", "--mode", "root", "E1112*E112")
    assert code == 0 and out.strip() == "theta^3 * E112 E1112"


def test_json_outputs(capsys):
    code, out, _ = run(capsys, "normalize", "--json", "e2 e1")
    d = json.loads(out)
    assert code == 0 and set(d) == {"input", "result", "text"}
    code, out, _ = run(capsys, "delta", "--json", "e1")
    assert code == 0 and "result" in json.loads(out)
    code, out, _ = run(capsys, "pair", "--json", "--norm", "double", "f1", "e1")
    assert code == 0 and json.loads(out)["value"] == "1"
    code, out, _ = run(capsys, "dim", "--json", "--mode", "root", "--ell", "5")
    assert json.loads(out) == {"ell": 5, "dim": 5 ** 16}


def test_antipode_command(capsys):
    code, out, _ = run(capsys, "antipode", "w1")
    assert code == 0 and out.strip() == "w1^-1"
    code, out, _ = run(capsys, "antipode", "--inverse", "e1")
    assert code == 0


def test_exit_codes(capsys):
    assert run(capsys, "normalize", "e1 +")[0] == 2
    assert run(capsys, "normalize", "Q7")[0] == 2
    assert run(capsys, "dim")[0] == 2
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "verify", "--mode", "generic", "ribbon-6")[0] == 2
    assert run(capsys, "normalize", "e1 / (r - r)")[0] == 3
    assert run(capsys, "normalize", "--mode", "root", "--ell", "4", "e1")[0] == 2
    code, _, err = run(capsys, "normalize", "e1 +\n  * e2")
    assert code == 2 and "line 2" in err and "column 3" in err


def test_verify_pass_and_filter(capsys):
    code, out, _ = run(capsys, "verify", "ribbon-6", "--json")
    d = json.loads(out)
    assert code == 0 and d["suite"] == "ribbon-6"
    assert all(set(i) == {"id", "status", "detail"} for i in d["items"])
    code, out, _ = run(capsys, "verify", "ribbon-6", "--suite-filter", r"^S\^2\(E")
    assert code == 0 and "6/6 pass" in out


def test_verify_failure_exit(capsys, monkeypatch):
    from qg2 import suites
    monkeypatch.setitem(suites.SUITES, "ribbon-6",
                        (lambda ctx: [suites.check("forced", False, "x")], "root"))
    code, out, _ = run(capsys, "verify", "ribbon-6")
    assert code == 1 and "FAIL forced" in out


def test_deterministic_output(capsys):
    a = run(capsys, "delta", "--json", "E1112")
    b = run(capsys, "delta", "--json", "E1112")
    assert a == b


def test_console_script():
    p = subprocess.run([sys.executable, "-m", "qg2.cli", "normalize", "e2 e1"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == "E2 E1"
