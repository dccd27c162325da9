import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabsym.parse import ParseError, parse_class_expr, parse_equation, parse_equation_script
from stabsym.ring import kunneth, s2xs2, sphere


def test_examples():
    s = sphere()
    assert parse_class_expr("h", s) == s["h"]
    assert parse_class_expr("h*h", s) == 0
    r = s2xs2()
    assert parse_class_expr("2*u1+2*u2", r) == r.element("u1", 2) + r.element("u2", 2)
    assert parse_class_expr("u1*u2", r) == r["vol"]
    assert parse_class_expr("(u1 + u2)^2", r) == r.element("vol", 2)
    assert parse_class_expr("3 - 1", r) == r.element("1", 2)


@pytest.mark.parametrize("text,pos", [("2*+h", 2), ("h +", 3), ("x", 0), ("(h", 2), ("h $", 2)])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_class_expr(text, sphere())
    assert exc.value.pos == pos


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=8, max_size=8))
def test_round_trip_on_canonical_forms(coeffs):
    r = kunneth(sphere(), sphere(), sphere())
    c = r.zero()
    for (key, _), k in zip(r.basis, coeffs):
        c = c + r.element(key, k)
    assert parse_class_expr(str(c), r) == c


def test_equation_parsing():
    eq = parse_equation("2*c*t + GW(0, 1; h, h, h) = 3")
    assert str(eq.residual()) == "-2 + 2*c*t"


def test_script_errors_name_the_line():
    with pytest.raises(ParseError) as exc:
        parse_equation_script("x = 1\n# comment\ny = = 2\n")
    assert "line 3" in exc.value.message
