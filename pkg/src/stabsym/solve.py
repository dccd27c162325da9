"""Integer feasibility of linear systems in monomials of integer unknowns.

Each distinct monomial in the unknowns is treated as one integer variable.
That is exact when the monomials share no unknowns ("single-monomial form"):
any integer value of a monomial is then realized by setting its first factor
to the value and the remaining factors to 1. Unknowns pinned by an equation
of the form c*x = b are substituted first, which is how a forced zero kills
a product.

Feasibility of A y = b over Z is decided from a Smith normal form
U A V = D. When it fails, row i of U gives an integer combination of the
equations whose coefficients are all divisible by D_ii while its right-hand
side is not; the reduced modulus is the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .gw import Equation, GWExpression, GWSymbol
from .linalg import matvec, smith_normal_form


class NonlinearSystemError(ValueError):
    pass


@dataclass(frozen=True)
class Feasible:
    witness: dict[str, int]

    verdict = "Feasible"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "witness": dict(sorted(self.witness.items()))}


@dataclass(frozen=True)
class Infeasible:
    reason: str  # parity | modular | inconsistent | non-integral
    modulus: int | None
    combination: tuple[int, ...]
    detail: str
    forced: dict[str, int] = field(default_factory=dict)

    verdict = "Infeasible"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason, "modulus": self.modulus,
                "combination": list(self.combination), "detail": self.detail,
                "forced": dict(sorted(self.forced.items()))}


def _name(f) -> str:
    return f if isinstance(f, str) else str(f)


def _residuals(eqs: Sequence[Equation | GWExpression]) -> list[GWExpression]:
    out = []
    for e in eqs:
        out.append(e.residual() if isinstance(e, Equation) else GWExpression.coerce(e).evaluate())
    return out


def _substitute(exprs: list[GWExpression], values: dict) -> list[GWExpression]:
    look = lambda f: GWExpression.constant(values[f]) if f in values else None  # noqa: E731
    return [e.substitute(look) for e in exprs]


def _force(exprs: list[GWExpression]) -> tuple[list[GWExpression], dict]:
    """Substitute unknowns pinned by single-term equations c*x + b = 0."""
    forced: dict = {}
    while True:
        new = {}
        for e in exprs:
            var_terms = [(m, c) for m, c in e.terms.items() if m]
            if len(var_terms) != 1:
                continue
            (mono, c), = var_terms
            if len(mono) != 1:
                continue
            value = -e.terms.get((), Fraction(0)) / c
            if value.denominator == 1 and mono[0] not in forced and mono[0] not in new:
                new[mono[0]] = int(value)
        if not new:
            return exprs, forced
        forced.update(new)
        exprs = _substitute(exprs, new)


def solve_unknowns(eqs: Sequence[Equation | GWExpression]) -> Feasible | Infeasible:
    """Decide whether the equations admit an integer assignment of the unknowns."""
    original = _residuals(eqs)
    exprs, forced = _force(original)
    forced_names = {_name(k): v for k, v in forced.items()}

    monomials = sorted({m for e in exprs for m in e.terms if m},
                       key=lambda m: [_name(f) for f in m])
    owner: dict = {}
    for m in monomials:
        if len(set(m)) != len(m):
            raise NonlinearSystemError(f"monomial {'*'.join(map(_name, m))} repeats an unknown")
        for f in m:
            if f in owner:
                raise NonlinearSystemError(
                    f"unknown {_name(f)} occurs in two monomials; only single-monomial form is supported")
            owner[f] = m

    rows = len(exprs)
    # clear denominators row by row
    a, b = [], []
    for e in exprs:
        den = 1
        for c in e.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        a.append([int(e.terms.get(m, 0) * den) for m in monomials])
        b.append(int(-e.terms.get((), 0) * den))

    if not monomials:
        for i, rhs in enumerate(b):
            if rhs:
                return Infeasible("inconsistent", None, _unit(rows, i),
                                  f"equation {i + 1} reduces to 0 = {Fraction(rhs)}", forced_names)
        return Feasible(forced_names)

    d, u, v = smith_normal_form(a)
    ub = matvec(u, b)
    z = []
    for i in range(rows):
        dii = d[i][i] if i < len(monomials) else 0
        if dii == 0:
            if ub[i]:
                return Infeasible("inconsistent", None, tuple(u[i]),
                                  f"combination {u[i]} has zero coefficients but right-hand side {ub[i]}",
                                  forced_names)
            if i < len(monomials):
                z.append(0)
            continue
        if ub[i] % dii:
            modulus = dii // gcd(dii, ub[i])
            reason = "parity" if modulus == 2 else "modular"
            return Infeasible(reason, modulus, tuple(u[i]),
                              f"combination {u[i]} has coefficients divisible by {dii} "
                              f"but right-hand side {ub[i]} is not; obstruction mod {modulus}",
                              forced_names)
        z.append(ub[i] // dii)
    z += [0] * (len(monomials) - len(z))
    y = matvec(v, z)

    witness = dict(forced_names)
    values: dict = dict(forced)
    for m, val in zip(monomials, y):
        for j, f in enumerate(m):
            witness[_name(f)] = int(val) if j == 0 else 1
            values[f] = int(val) if j == 0 else 1
    for e in original:
        for f in e.unknowns() - values.keys():
            # unconstrained after forcing
            values[f] = 0
            witness[_name(f)] = 0
    for e in _substitute(original, values):
        assert e.is_constant() and e.constant_value() == 0, f"witness check failed: {e}"
    return Feasible(witness)


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


__all__ = ["Feasible", "Infeasible", "NonlinearSystemError", "solve_unknowns", "GWSymbol"]
