import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import integer_solution_in_box
from stabsym.gw import Equation, GWExpression
from stabsym.parse import parse_equation_script
from stabsym.solve import Feasible, Infeasible, NonlinearSystemError, solve_unknowns


def _solve(text):
    return solve_unknowns(parse_equation_script(text))


def test_parity_obstruction():
    r = _solve("1 = 2*c*t")
    assert isinstance(r, Infeasible) and r.reason == "parity" and r.modulus == 2


def test_feasible_with_witness():
    r = _solve("4 = 2*t")
    assert isinstance(r, Feasible) and r.witness == {"t": 2}


def test_forced_zero_kills_product():
    r = _solve("a = 0\na*b = 1")
    assert isinstance(r, Infeasible) and r.reason == "inconsistent" and r.forced == {"a": 0}


def test_modular_obstruction():
    r = _solve("3*x + 6*y = 2")
    assert isinstance(r, Infeasible) and r.reason == "modular" and r.modulus == 3


def test_gw_values_substituted():
    assert isinstance(_solve("GW(0, 1; h, h, h) * x = 3"), Feasible)
    assert isinstance(_solve("GW(3, 1; 1) * x = 4"), Infeasible)


def test_nonlinear_rejected():
    with pytest.raises(NonlinearSystemError):
        _solve("a*b + a = 1")
    with pytest.raises(NonlinearSystemError):
        _solve("a*a = 4")


@settings(max_examples=120, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_agrees_with_box_search(rows, rhs):
    rhs = rhs[:len(rows)]
    names = ["x", "y", "z"]
    eqs = []
    for r, c in zip(rows, rhs):
        lhs = GWExpression()
        for a, nm in zip(r, names):
            lhs = lhs + GWExpression.unknown(nm) * a
        eqs.append(Equation(lhs, GWExpression.constant(c)))
    res = solve_unknowns(eqs)
    found = integer_solution_in_box(rows, rhs, 3, 6)
    if found is not None:
        assert isinstance(res, Feasible)
    if isinstance(res, Feasible):
        y = [res.witness.get(nm, 0) for nm in names]
        assert all(sum(a * b for a, b in zip(r, y)) == c for r, c in zip(rows, rhs))
    else:
        # the certificate: an integer combination with coefficients divisible by m, rhs not
        assert res.reason in ("parity", "modular", "inconsistent")
