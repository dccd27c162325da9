"""Gromov-Witten invariants of S^2 and (S^2)^k from the Kontsevich-Manin axioms.

Invariants are capped either with the point class of M_{g,n} ("pt") or with
its fundamental class ("full"). Insertions for S^2 are classes in
Z[h]/(h^2); they are expanded multilinearly, so every symbol that reaches the
rewrite rules has insertions drawn from {"1", "h"}.

Rules for point-capped sphere symbols, written for GW_{g,n,d}(a_1..a_n):

    effective            d < 0                          -> 0
    dimension            sum |a_i| != 4d + 2 - 2g       -> 0
    fundamental_class    drop an insertion 1 if (g, n-1) is stable
    genus_reduction      g > 0: glue in PD(diagonal) = h x 1 + 1 x h
    splitting            split off a genus-0 three-pointed bubble carrying
                         two insertions, summing over degrees and the
                         diagonal
    mapping_to_point     g = 0, d = 0: integral of the product over S^2
    three_point          GW_{0,3,d}(h,h,h) = [d == 1]

The canonical order (first applicable wins) is: effective, dimension,
fundamental_class, genus_reduction (followed by dropping the new 1 when
stable), splitting on an (h, h) pair at genus 0, then the two base cases.
Every rule strictly lowers (g, d, n) lexicographically, so rewriting stops.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Callable, Iterable, Mapping, Sequence

from .ring import GradedClass, ProductRing, RingError, sphere

S2 = "S2"


class Cap(str, Enum):
    POINT = "pt"
    FULL = "full"


class GWError(ValueError):
    pass


class UnstableError(GWError):
    pass


def is_stable(g: int, n: int) -> bool:
    return 2 * g - 2 + n > 0


@dataclass(frozen=True)
class GWSymbol:
    """GW^{target}_{g,n,degree}(insertions)(cap).

    For ``S2`` the degree is ``(d,)`` and insertions are "1"/"h". For
    ``S2^k`` each insertion is a k-tuple of "1"/"h" (a cross product) and the
    degree has one entry per factor. Any other target is abstract: the symbol
    stands for an unknown integer.
    """

    target: str
    genus: int
    degree: tuple
    insertions: tuple
    cap: Cap = Cap.POINT

    def __post_init__(self):
        object.__setattr__(self, "insertions", tuple(sorted(self.insertions)))
        object.__setattr__(self, "cap", Cap(self.cap))
        if self.genus < 0:
            raise GWError("genus must be non-negative")

    @property
    def n(self) -> int:
        return len(self.insertions)

    @property
    def d(self) -> int:
        return self.degree[0]

    @property
    def evaluable(self) -> bool:
        return self.target == S2 or self.target.startswith(S2 + "^")

    def sort_key(self):
        return (self.target, self.genus, tuple(map(str, self.degree)), self.insertions, self.cap.value)

    def __str__(self):
        deg = ",".join(map(str, self.degree))
        ins = ",".join("x".join(i) if isinstance(i, tuple) else str(i) for i in self.insertions)
        return f"GW^{self.target}_{{{self.genus},{self.n},{deg}}}({ins})[{self.cap.value}]"

    def to_json(self) -> dict:
        return {"target": self.target, "genus": self.genus, "n": self.n,
                "degree": list(self.degree), "insertions": [list(i) if isinstance(i, tuple) else i
                                                            for i in self.insertions],
                "cap": self.cap.value}


def sphere_sym(g: int, d: int, insertions: Iterable[str], cap: Cap | str = Cap.POINT) -> GWSymbol:
    return GWSymbol(S2, g, (d,), tuple(insertions), Cap(cap))


# ---------------------------------------------------------------- expressions

def _factor_key(f):
    return (0, f, ()) if isinstance(f, str) else (1, "", f.sort_key())


class GWExpression:
    """Q-linear combination of monomials in GW symbols and named integer unknowns."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean: dict[tuple, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = tuple(sorted(mono, key=_factor_key))
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def constant(cls, c) -> "GWExpression":
        return cls({(): Fraction(c)})

    @classmethod
    def unknown(cls, name: str) -> "GWExpression":
        return cls({(name,): Fraction(1)})

    @classmethod
    def symbol(cls, s: GWSymbol, coeff=1) -> "GWExpression":
        return cls({(s,): Fraction(coeff)})

    @classmethod
    def coerce(cls, x) -> "GWExpression":
        if isinstance(x, GWExpression):
            return x
        if isinstance(x, GWSymbol):
            return cls.symbol(x)
        if isinstance(x, str):
            return cls.unknown(x)
        return cls.constant(x)

    def __add__(self, other):
        other = GWExpression.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return GWExpression(out)

    __radd__ = __add__

    def __neg__(self):
        return GWExpression({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-GWExpression.coerce(other))

    def __rsub__(self, other):
        return GWExpression.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GWExpression({m: c * other for m, c in self.terms.items()})
        other = GWExpression.coerce(other)
        out: dict[tuple, Fraction] = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            m = tuple(sorted(m1 + m2, key=_factor_key))
            out[m] = out.get(m, Fraction(0)) + c1 * c2
        return GWExpression(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = GWExpression.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise GWError(f"expression {self} is not constant")
        return self.terms.get((), Fraction(0))

    def symbols(self) -> set[GWSymbol]:
        return {f for m in self.terms for f in m if isinstance(f, GWSymbol)}

    def unknowns(self) -> set:
        """Factors that stand for unknown integers: names and abstract symbols."""
        return {f for m in self.terms for f in m
                if isinstance(f, str) or not f.evaluable}

    def substitute(self, values: Callable[[object], "GWExpression | None"]) -> "GWExpression":
        """Replace each factor f for which values(f) is not None."""
        out = GWExpression()
        for mono, c in self.terms.items():
            term = GWExpression.constant(c)
            for f in mono:
                v = values(f)
                term = term * (GWExpression.coerce(f) if v is None else GWExpression.coerce(v))
            out = out + term
        return out

    def evaluate(self) -> "GWExpression":
        """Replace every evaluable symbol by its value; unknowns remain."""
        return self.substitute(lambda f: evaluate_symbol(f) if isinstance(f, GWSymbol) and f.evaluable else None)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda mc: [_factor_key(f) for f in mc[0]]):
            body = "*".join(str(f) for f in mono)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GWExpression({self})"


@dataclass(frozen=True)
class Equation:
    lhs: GWExpression
    rhs: GWExpression

    def residual(self) -> GWExpression:
        """lhs - rhs with every evaluable symbol replaced by its value."""
        return (GWExpression.coerce(self.lhs) - GWExpression.coerce(self.rhs)).evaluate()

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


# ---------------------------------------------------------------- insertions

_S2 = sphere()


def _expand_insertion(x) -> list[tuple[Fraction, str]]:
    """An S^2 insertion as [(coeff, "1"|"h")]."""
    if isinstance(x, str):
        if x in ("1", "h"):
            return [(Fraction(1), x)]
        from .parse import parse_class_expr
        x = parse_class_expr(x, _S2)
    if isinstance(x, int):
        return [(Fraction(x), "1")] if x else []
    if isinstance(x, GradedClass):
        if x.ring != _S2:
            raise GWError(f"insertion {x} does not live in H*(S2)")
        return [(Fraction(c), k) for k, c in x]
    raise GWError(f"cannot use {x!r} as an S2 insertion")


def sphere_symbol(g: int, d: int, insertions: Sequence, cap: Cap | str = Cap.POINT) -> GWExpression:
    """Multilinear expansion of GW^{S2}_{g,n,d}(insertions) into basis symbols."""
    if not is_stable(g, len(insertions)):
        raise UnstableError(f"(g, n) = ({g}, {len(insertions)}) is unstable")
    out = GWExpression()
    for combo in itertools.product(*[_expand_insertion(x) for x in insertions]):
        coeff = prod((c for c, _ in combo), start=Fraction(1))
        out = out + GWExpression.symbol(sphere_sym(g, d, [k for _, k in combo], cap), coeff)
    return out


# ---------------------------------------------------------------- rewrite rules

@dataclass(frozen=True)
class Rewrite:
    """One axiom application: ``symbol`` equals ``result``."""

    symbol: GWSymbol
    rule: str
    detail: str
    result: GWExpression
    terminal: bool = False

    def to_json(self) -> dict:
        return {"symbol": str(self.symbol), "rule": self.rule, "detail": self.detail,
                "result": str(self.result), "terminal": self.terminal}


def _h_count(ins) -> int:
    return sum(1 for x in ins if x == "h")


def _dimension_ok(s: GWSymbol) -> bool:
    weight = 2 * _h_count(s.insertions)
    if s.cap is Cap.POINT:
        return weight == 4 * s.d + 2 - 2 * s.genus
    return weight == 4 * s.genus - 4 + 4 * s.d + 2 * s.n


def _check_sphere(s: GWSymbol):
    if s.target != S2:
        raise GWError(f"{s} is not a sphere symbol")
    if not is_stable(s.genus, s.n):
        raise UnstableError(f"{s} is unstable")
    if any(x not in ("1", "h") for x in s.insertions):
        raise GWError(f"{s} has an insertion outside {{1, h}}")


def _without(ins: tuple, *items: str) -> tuple:
    out = list(ins)
    for x in items:
        out.remove(x)
    return tuple(out)


def _zero(s, rule, detail) -> Rewrite:
    return Rewrite(s, rule, detail, GWExpression())


def sphere_rewrites(s: GWSymbol) -> list[Rewrite]:
    """Every admissible single axiom application to a sphere symbol."""
    _check_sphere(s)
    if s.cap is Cap.FULL:
        return _full_rewrites(s)
    g, n, d, ins = s.genus, s.n, s.d, s.insertions
    out: list[Rewrite] = []
    if d < 0:
        out.append(_zero(s, "effective", "negative degree"))
    if not _dimension_ok(s):
        out.append(_zero(s, "dimension", f"sum |a_i| = {2 * _h_count(ins)} != 4d+2-2g = {4 * d + 2 - 2 * g}"))
    if "1" in ins and is_stable(g, n - 1):
        out.append(Rewrite(s, "fundamental_class", "forget a marked point carrying 1",
                           GWExpression.symbol(sphere_sym(g, d, _without(ins, "1")))))
    if g > 0:
        # PD(diagonal) = h x 1 + 1 x h; both terms are the same symbol up to order
        raw = sphere_sym(g - 1, d, ins + ("h", "1"))
        out.append(Rewrite(s, "genus_reduction", "glue two points along PD(diagonal) = h x 1 + 1 x h",
                           GWExpression.symbol(raw, 2)))
        if is_stable(g - 1, n + 1):
            out.append(Rewrite(s, "genus_reduction+fundamental_class",
                               "genus reduction, then forget the new point carrying 1",
                               GWExpression.symbol(sphere_sym(g - 1, d, ins + ("h",)), 2)))
    if n >= 2 and is_stable(g, n - 1) and d >= 0:
        for pair in sorted({tuple(sorted(p)) for p in itertools.combinations(ins, 2)}):
            rest = _without(ins, *pair)
            total = GWExpression()
            for d1 in range(d + 1):
                for gamma, dual in (("h", "1"), ("1", "h")):
                    bubble = sphere_sym(0, d1, pair + (gamma,))
                    body = sphere_sym(g, d - d1, rest + (dual,))
                    total = total + GWExpression.symbol(bubble) * GWExpression.symbol(body)
            out.append(Rewrite(s, "splitting", f"split off a genus-0 bubble carrying ({pair[0]},{pair[1]})",
                               total))
    if g == 0 and d == 0:
        value = 1 if _h_count(ins) == 1 else 0
        out.append(Rewrite(s, "mapping_to_point", "integral of the product over S2",
                           GWExpression.constant(value)))
    if g == 0 and n == 3 and ins == ("h", "h", "h"):
        out.append(Rewrite(s, "three_point", "one line through three points: [d == 1]",
                           GWExpression.constant(int(d == 1))))
    return out


def _full_rewrites(s: GWSymbol) -> list[Rewrite]:
    g, n, d, ins = s.genus, s.n, s.d, s.insertions
    out: list[Rewrite] = []
    if d < 0:
        out.append(_zero(s, "effective", "negative degree"))
    if not _dimension_ok(s):
        out.append(_zero(s, "dimension", "insertion degree differs from the virtual dimension"))
    if "1" in ins and is_stable(g, n - 1):
        out.append(_zero(s, "fundamental_class", "forgetful pushforward of the fundamental class vanishes"))
    if "h" in ins and is_stable(g, n - 1):
        out.append(Rewrite(s, "divisor", f"<h, {d}[S2]> = {d}",
                           GWExpression.symbol(GWSymbol(S2, g, (d,), _without(ins, "h"), Cap.FULL), d)))
    if g == 0 and n == 3:
        out.append(Rewrite(s, "point_class", "M_{0,3} is a point",
                           GWExpression.symbol(sphere_sym(0, d, ins, Cap.POINT))))
    return out


_CANONICAL = ("effective", "dimension", "fundamental_class", "genus_reduction+fundamental_class",
              "genus_reduction", "splitting", "mapping_to_point", "three_point",
              "divisor", "point_class")


def _canonical(rewrites: list[Rewrite], s: GWSymbol) -> Rewrite | None:
    by_rule: dict[str, list[Rewrite]] = {}
    for r in rewrites:
        by_rule.setdefault(r.rule, []).append(r)
    for rule in _CANONICAL:
        options = by_rule.get(rule)
        if not options:
            continue
        if rule == "splitting":
            if s.genus != 0:
                continue
            options = [r for r in options if "(h,h)" in r.detail]
            if not options:
                continue
        return options[0]
    return None


def rewrite_step(s: GWSymbol) -> Rewrite:
    """Apply one axiom in canonical priority; terminal if none applies."""
    if not s.evaluable:
        return Rewrite(s, "none", "abstract target", GWExpression.symbol(s), terminal=True)
    if s.target != S2:
        return Rewrite(s, "product_formula", "factorwise product over S2 factors",
                       _product_split(s))
    chosen = _canonical(sphere_rewrites(s), s)
    if chosen is None:
        return Rewrite(s, "none", "no applicable axiom", GWExpression.symbol(s), terminal=True)
    return chosen


# ---------------------------------------------------------------- evaluation

@lru_cache(maxsize=None)
def _eval_sphere_symbol(s: GWSymbol) -> Fraction:
    step = rewrite_step(s)
    if step.terminal:
        raise GWError(f"cannot evaluate {s}: no axiom reduces it further")
    return _eval_expression(step.result)


def _eval_expression(e: GWExpression) -> Fraction:
    total = Fraction(0)
    for mono, c in e.terms.items():
        term = c
        for f in mono:
            if not isinstance(f, GWSymbol) or not f.evaluable:
                raise GWError(f"expression contains the unknown {f}")
            term *= evaluate_symbol(f)
            if not term:
                break
        total += term
    return total


def evaluate_symbol(s: GWSymbol) -> Fraction:
    if s.target == S2:
        return _eval_sphere_symbol(s)
    if s.evaluable:
        return _eval_expression(_product_split(s))
    raise GWError(f"{s} has an abstract target")


def eval_sphere(g: int, n: int, d: int, insertions: Sequence | None = None,
                cap: Cap | str = Cap.POINT) -> Fraction:
    """GW^{S2}_{g,n,d}(insertions)(cap), insertions default to n copies of 1."""
    if insertions is None:
        insertions = ["1"] * n
    if len(insertions) != n:
        raise GWError(f"expected {n} insertions, got {len(insertions)}")
    value = _eval_expression(sphere_symbol(g, d, insertions, cap))
    if Cap(cap) is Cap.POINT and all(isinstance(x, str) or isinstance(x, int)
                                     or all(c == int(c) for _, c in x) for x in insertions):
        # integral insertions must give integral point-capped invariants
        assert value.denominator == 1, f"non-integral invariant {value}"
    return value


# ---------------------------------------------------------------- products

@dataclass(frozen=True)
class FactorValue:
    """A factor invariant evaluated on [pt], tagged with its (g, n, cap)."""

    genus: int
    n: int
    value: Fraction
    cap: Cap = Cap.POINT


def product_gw(factors: Sequence[FactorValue | GWSymbol]) -> Fraction:
    """Product formula on [pt]: the degree-0 part of a product of classes is
    the product of the degree-0 parts."""
    if not factors:
        raise GWError("need at least one factor")
    vals = []
    for f in factors:
        if isinstance(f, GWSymbol):
            f = FactorValue(f.genus, f.n, evaluate_symbol(f), f.cap)
        vals.append(f)
    g, n, cap = vals[0].genus, vals[0].n, Cap(vals[0].cap)
    for f in vals[1:]:
        if (f.genus, f.n) != (g, n):
            raise GWError(f"factor (g, n) mismatch: ({g}, {n}) vs ({f.genus}, {f.n})")
        if Cap(f.cap) is not cap:
            raise GWError("factors are capped with different classes")
    if cap is not Cap.POINT and len(vals) > 1:
        raise GWError("the factorwise product formula is only available for [pt] caps")
    return prod((f.value for f in vals), start=Fraction(1))


def _product_split(s: GWSymbol) -> GWExpression:
    k = len(s.degree)
    if s.cap is not Cap.POINT:
        raise GWError("product targets support [pt] caps only")
    if any(len(i) != k for i in s.insertions):
        raise GWError(f"{s}: every insertion needs one component per factor")
    out = GWExpression.constant(1)
    for j in range(k):
        out = out * GWExpression.symbol(sphere_sym(s.genus, s.degree[j], [i[j] for i in s.insertions]))
    return out


def expand_product_with_sphere(target: str, g: int, degree, sphere_degree: int,
                               insertions: Sequence[Sequence[tuple]]) -> GWExpression:
    """Product formula for X x S2 with X abstract.

    Each insertion is a list of (coefficient, X-class word, S2 class) terms,
    read as sum coefficient * (word x class). The result is
    sum prod(coefficients) * GW^X_{g,n,degree}(words) * GW^S2_{g,n,d}(classes)
    with every sphere factor already evaluated.
    """
    if not is_stable(g, len(insertions)):
        raise UnstableError(f"(g, n) = ({g}, {len(insertions)}) is unstable")
    out = GWExpression()
    for combo in itertools.product(*insertions):
        coeff = GWExpression.constant(1)
        for c, _, _ in combo:
            coeff = coeff * GWExpression.coerce(c)
        abstract = GWSymbol(target, g, tuple(degree) if isinstance(degree, tuple) else (degree,),
                            tuple(w for _, w, _ in combo))
        sphere_value = evaluate_symbol(sphere_sym(g, sphere_degree, [k for _, _, k in combo]))
        out = out + coeff * GWExpression.symbol(abstract) * sphere_value
    return out


def sphere_power_ring(k: int) -> ProductRing:
    from .ring import kunneth
    return kunneth(*[_S2] * k)


def eval_sphere_power(g: int, degrees: Sequence[int], insertions: Sequence[GradedClass],
                      ring: ProductRing | None = None) -> Fraction:
    """GW of (S2)^k on [pt] with insertions in H*((S2)^k), via pure-tensor expansion."""
    k = len(degrees)
    ring = ring or sphere_power_ring(k)
    if len(ring.factors) != k:
        raise GWError("ring and degree vector disagree on k")
    if not is_stable(g, len(insertions)):
        raise UnstableError(f"(g, n) = ({g}, {len(insertions)}) is unstable")
    total = Fraction(0)
    for combo in itertools.product(*[ring.split(c) for c in insertions]):
        coeff = prod((c for c, _ in combo), start=1)
        sym = GWSymbol(f"{S2}^{k}", g, tuple(degrees), tuple(t for _, t in combo))
        factors = [sphere_sym(g, degrees[j], [t[j] for _, t in combo]) for j in range(k)]
        assert _product_split(sym) == GWExpression({tuple(factors): 1})
        total += coeff * product_gw(factors)
    return total


# ---------------------------------------------------------------- unstable range

def lift_unstable(g: int, n: int, d: int, insertions: Sequence, beta) -> Fraction:
    """Unstable invariant as (1/<beta, d>^2) GW_{g,n+2,d}(insertions, beta, beta)[M_{g,n+2}]."""
    if is_stable(g, n):
        raise GWError(f"(g, n) = ({g}, {n}) is already stable")
    if len(insertions) != n:
        raise GWError(f"expected {n} insertions, got {len(insertions)}")
    if not is_stable(g, n + 2):
        raise UnstableError(f"(g, n + 2) = ({g}, {n + 2}) is still unstable")
    terms = _expand_insertion(beta)
    if any(k != "h" for _, k in terms):
        raise GWError("beta must be a degree-2 class")
    m = sum((c for c, _ in terms), start=Fraction(0))
    pairing = m * d
    if pairing == 0:
        raise GWError("<beta, B> = 0; choose beta with nonzero pairing")
    value = eval_sphere(g, n + 2, d, list(insertions) + [beta, beta], Cap.FULL)
    return value / pairing ** 2


# ---------------------------------------------------------------- arbitrary orders

def evaluate_random_order(s: GWSymbol, rng: random.Random,
                          memo: dict | None = None) -> Fraction:
    """Evaluate with a randomly chosen admissible rule at every symbol."""
    memo = {} if memo is None else memo
    if s in memo:
        return memo[s]
    options = sphere_rewrites(s)
    if not options:
        raise GWError(f"no admissible rule for {s}")
    step = rng.choice(options)
    total = Fraction(0)
    for mono, c in step.result.terms.items():
        term = c
        for f in mono:
            term *= evaluate_random_order(f, rng, memo)
        total += term
    memo[s] = total
    return total


def admissible_first_steps(s: GWSymbol) -> list[tuple[Rewrite, Fraction]]:
    """Each admissible first step with the canonical value of its result."""
    return [(r, _eval_expression(r.result)) for r in sphere_rewrites(s)]


def measure(s: GWSymbol) -> tuple[int, int, int]:
    return (s.genus, s.d, s.n)


def closed_form_symbol(g: int, n: int) -> tuple[int, list[str]]:
    """Degree and insertions of the 2^g family: ceil((g-1)/2), and
    (1,..,1) for odd g or (1,..,1,h) for even g."""
    d = max(0, g // 2)
    ins = ["1"] * n if g % 2 else ["1"] * (n - 1) + ["h"]
    return d, ins


def gw_table(max_genus: int, n: int | None = None) -> list[dict]:
    rows = []
    for g in range(max_genus + 1):
        pts = n if n is not None else max(1, 3 - 2 * g)
        d, ins = closed_form_symbol(g, pts)
        value = eval_sphere(g, pts, d, ins)
        rows.append({"genus": g, "n": pts, "degree": d, "insertions": ins,
                     "value": int(value), "expected": 2 ** g, "match": value == 2 ** g})
    return rows


__all__ = [
    "Cap", "GWError", "UnstableError", "GWSymbol", "GWExpression", "Equation", "Rewrite", "FactorValue",
    "sphere_sym", "sphere_symbol", "sphere_rewrites", "rewrite_step", "evaluate_symbol",
    "eval_sphere", "product_gw", "expand_product_with_sphere", "eval_sphere_power", "sphere_power_ring", "lift_unstable",
    "evaluate_random_order", "admissible_first_steps", "measure", "gw_table", "is_stable",
    "closed_form_symbol", "RingError",
]
