"""Torsion-free, even-degree cohomology rings given by structure constants.

A ring is a graded basis of named classes, a multiplication table on basis
pairs and an integer functional on the top degree (evaluation on the
fundamental class). Products of rings are built factor by factor and are
flattened, so ``kunneth(kunneth(S2, S2), S2)`` and ``kunneth(S2, S2, S2)``
are the same ring.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import Counter
from math import prod
from typing import Mapping, Sequence

from .lattice import IntersectionLattice, diagonal_form, direct_sum, hyperbolic
from .linalg import det, gcd_list, inverse

UNIT = "1"


class RingError(ValueError):
    pass


class GradedClass:
    """An integer combination of basis classes of one ring. Immutable."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: "RingPresentation", coeffs: Mapping[str, int] | None = None):
        coeffs = coeffs or {}
        for key in coeffs:
            if key not in ring.degrees:
                raise RingError(f"{key!r} is not a basis class of {ring.name}")
        order = ring.index
        self.ring = ring
        self._terms = tuple(sorted(((k, int(c)) for k, c in coeffs.items() if c),
                                   key=lambda kc: order[kc[0]]))

    @property
    def coeffs(self) -> dict[str, int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def coefficient(self, key: str) -> int:
        return self.coeffs.get(key, 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def _same_ring(self, other: "GradedClass"):
        if self.ring != other.ring:
            raise RingError(f"classes live in different rings ({self.ring.name} vs {other.ring.name})")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._same_ring(other)
        c = Counter(self.coeffs)
        c.update(other.coeffs)
        return GradedClass(self.ring, c)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, {k: -c for k, c in self._terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedClass(self.ring, {k: other * c for k, c in self._terms})
        if isinstance(other, GradedClass):
            return cup(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise RingError("negative powers are undefined")
        out = self.ring.one()
        for _ in range(n):
            out = cup(out, self)
        return out

    def degrees(self) -> set[int]:
        return {self.ring.degrees[k] for k, _ in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a nonzero homogeneous class."""
        degs = self.degrees()
        if len(degs) != 1:
            raise RingError("class is zero or inhomogeneous")
        return degs.pop()

    def part(self, degree: int) -> "GradedClass":
        return GradedClass(self.ring, {k: c for k, c in self._terms if self.ring.degrees[k] == degree})

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for k, c in self._terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == UNIT:
                body = str(mag)
            else:
                body = k if mag == 1 else f"{mag}*{k}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"GradedClass({self}, ring={self.ring.name})"


class RingPresentation:
    """Graded basis, structure constants and fundamental pairing.

    ``products`` maps ordered pairs of basis ids to sparse results; the unit
    ``"1"`` (if present) acts as identity without being listed, and pairs
    absent from the table multiply to zero.
    """

    def __init__(self, name: str, basis: Sequence[tuple[str, int]],
                 products: Mapping[tuple[str, str], Mapping[str, int]] | None = None,
                 pairing: Mapping[str, int] | None = None, *,
                 euler_characteristic: int | None = None, check: bool = True):
        self.name = name
        self.basis = tuple((str(k), int(d)) for k, d in basis)
        self.degrees = dict(self.basis)
        self.index = {k: i for i, (k, _) in enumerate(self.basis)}
        if len(self.degrees) != len(self.basis):
            raise RingError("duplicate basis ids")
        for k, d in self.basis:
            if d < 0 or d % 2:
                raise RingError(f"basis class {k!r} has degree {d}; only even non-negative degrees are supported")
        self.top_degree = max((d for _, d in self.basis), default=0)
        self.pairing = {k: int(c) for k, c in (pairing or {}).items() if c}
        self.euler_characteristic = euler_characteristic
        self.factors: tuple[RingPresentation, ...] = ()
        self._table: dict[tuple[str, str], dict[str, int]] = {}
        for (a, b), res in (products or {}).items():
            res = {k: int(c) for k, c in res.items() if c}
            self._table[(a, b)] = res
            self._table[(b, a)] = res
        self._lattice = None
        if check:
            self._validate()

    def _validate(self):
        for (a, b), res in self._table.items():
            for k in (a, b, *res):
                if k not in self.degrees:
                    raise RingError(f"unknown basis id {k!r} in product table")
            for k in res:
                if self.degrees[k] != self.degrees[a] + self.degrees[b]:
                    raise RingError(f"product {a}*{b} -> {k} does not add degrees")
        for k in self.pairing:
            if k not in self.degrees:
                raise RingError(f"unknown basis id {k!r} in pairing")
            if self.degrees[k] != self.top_degree:
                raise RingError(f"pairing must live on the top degree, {k!r} has degree {self.degrees[k]}")

    # identity is by content so that reloading a JSON ring gives an equal ring
    def _key(self):
        return (self.basis, tuple(sorted((k, tuple(sorted(v.items())))
                                         for k, v in self.table().items())),
                tuple(sorted(self.pairing.items())))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, RingPresentation):
            return NotImplemented
        if self.name != other.name or self.basis != other.basis:
            return False
        return self._key() == other._key()

    def __hash__(self):
        return hash((self.name, self.basis))

    def __repr__(self):
        return f"RingPresentation({self.name}, ranks={self.ranks()})"

    def mul_basis(self, a: str, b: str) -> dict[str, int]:
        if a == UNIT and UNIT in self.degrees:
            return {b: 1}
        if b == UNIT and UNIT in self.degrees:
            return {a: 1}
        return self._table.get((a, b), {})

    def table(self) -> dict[tuple[str, str], dict[str, int]]:
        """All nonzero products of non-unit basis pairs with a <= b in basis order."""
        out = {}
        ids = [k for k, _ in self.basis if k != UNIT]
        for i, a in enumerate(ids):
            for b in ids[i:]:
                res = self.mul_basis(a, b)
                if res:
                    out[(a, b)] = dict(res)
        return out

    def element(self, key: str, coeff: int = 1) -> GradedClass:
        return GradedClass(self, {key: coeff})

    def __getitem__(self, key: str) -> GradedClass:
        return self.element(key)

    def zero(self) -> GradedClass:
        return GradedClass(self)

    def one(self) -> GradedClass:
        if UNIT not in self.degrees:
            raise RingError(f"{self.name} has no unit class '1'")
        return self.element(UNIT)

    def ids_of_degree(self, d: int) -> list[str]:
        return [k for k, deg in self.basis if deg == d]

    def ranks(self) -> dict[int, int]:
        return dict(sorted(Counter(d for _, d in self.basis).items()))

    def lattice(self) -> IntersectionLattice:
        """Intersection form on degree 2, for rings of top degree 4."""
        if self._lattice is None:
            if self.top_degree != 4:
                raise RingError(f"{self.name} is not a 4-manifold ring (top degree {self.top_degree})")
            ids = self.ids_of_degree(2)
            gram = [[integrate(cup(self[a], self[b])) for b in ids] for a in ids]
            self._lattice = IntersectionLattice(gram)
        return self._lattice

    def h2_vector(self, c: GradedClass) -> list[int]:
        if c.ring != self:
            raise RingError("class lives in a different ring")
        if c and c.degrees() != {2}:
            raise RingError("class is not of degree 2")
        coeffs = c.coeffs
        return [coeffs.get(k, 0) for k in self.ids_of_degree(2)]

    def from_h2_vector(self, v: Sequence[int]) -> GradedClass:
        ids = self.ids_of_degree(2)
        if len(v) != len(ids):
            raise RingError(f"expected {len(ids)} coordinates, got {len(v)}")
        return GradedClass(self, dict(zip(ids, v)))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "basis": [{"id": k, "deg": d} for k, d in self.basis],
            "products": [[a, b, res] for (a, b), res in self.table().items()],
            "pairing": dict(self.pairing),
        }


class ProductRing(RingPresentation):
    """Künneth product of torsion-free even rings; products computed on demand."""

    def __init__(self, factors: Sequence[RingPresentation], suffixes: Sequence[str] | None = None):
        flat: list[RingPresentation] = []
        for f in factors:
            flat.extend(f.factors if f.factors else (f,))
        if suffixes is None:
            suffixes = _default_suffixes(flat)
        if len(suffixes) != len(flat):
            raise RingError("one suffix per factor required")
        self._renames = [{k: _rename(k, s) for k, _ in f.basis} for f, s in zip(flat, suffixes)]
        tuples = list(itertools.product(*[[k for k, _ in f.basis] for f in flat]))
        tuples.sort(key=lambda t: (sum(f.degrees[k] for f, k in zip(flat, t)),
                                   tuple((f.index[k] == 0, f.index[k]) for f, k in zip(flat, t))))
        names = {}
        basis = []
        for t in tuples:
            name = self._join(t)
            if name in names:
                raise RingError(f"basis name clash {name!r}; pass explicit suffixes")
            names[name] = t
            basis.append((name, sum(f.degrees[k] for f, k in zip(flat, t))))
        chis = [f.euler_characteristic for f in flat]
        top = max(d for _, d in basis)
        pairing = {}
        for name, t in names.items():
            val = prod(f.pairing.get(k, 0) for f, k in zip(flat, t))
            if val:
                pairing[name] = val
        super().__init__(" x ".join(f.name for f in flat), basis, None, pairing,
                         euler_characteristic=None if None in chis else prod(chis), check=False)
        self.top_degree = top
        self.factors = tuple(flat)
        self._tuple_of = names
        self._name_of = {t: n for n, t in names.items()}
        self._cache: dict[tuple[str, str], dict[str, int]] = {}

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ProductRing):
            return False
        return self.factors == other.factors and self._renames == other._renames

    def __hash__(self):
        return hash((self.name, len(self.basis)))

    def _join(self, t) -> str:
        parts = [self._renames[i][k] for i, k in enumerate(t) if k != UNIT]
        return "*".join(parts) if parts else UNIT

    def mul_basis(self, a: str, b: str) -> dict[str, int]:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        ta, tb = self._tuple_of[a], self._tuple_of[b]
        partial = [((), 1)]
        for f, x, y in zip(self.factors, ta, tb):
            res = f.mul_basis(x, y)
            if not res:
                partial = []
                break
            partial = [(t + (k,), c * cc) for t, c in partial for k, cc in res.items()]
        out: dict[str, int] = {}
        for t, c in partial:
            n = self._name_of[t]
            out[n] = out.get(n, 0) + c
        out = {k: c for k, c in out.items() if c}
        self._cache[key] = self._cache[(b, a)] = out
        return out

    def inclusion(self, i: int) -> dict[str, str]:
        """Basis map H*(factor i) -> H*(product), x -> 1 x .. x x .. x 1."""
        f = self.factors[i]
        out = {}
        for k, _ in f.basis:
            t = tuple(k if j == i else UNIT for j in range(len(self.factors)))
            out[k] = self._name_of[t]
        return out

    def include(self, c: GradedClass, i: int) -> GradedClass:
        if c.ring != self.factors[i]:
            raise RingError(f"class does not live in factor {i} ({self.factors[i].name})")
        inc = self.inclusion(i)
        return GradedClass(self, {inc[k]: v for k, v in c})

    def cross(self, classes: Sequence[GradedClass]) -> GradedClass:
        """Cross product x_1 x ... x x_k of one class per factor."""
        if len(classes) != len(self.factors):
            raise RingError(f"need {len(self.factors)} classes, got {len(classes)}")
        out: dict[str, int] = {}
        for i, (c, f) in enumerate(zip(classes, self.factors)):
            if c.ring != f:
                raise RingError(f"class {i} does not live in {f.name}")
        for combo in itertools.product(*[list(c) for c in classes]):
            t = tuple(k for k, _ in combo)
            coeff = prod(c for _, c in combo)
            n = self._name_of[t]
            out[n] = out.get(n, 0) + coeff
        return GradedClass(self, out)

    def split(self, c: GradedClass) -> list[tuple[int, tuple[str, ...]]]:
        """Decompose a class into (coefficient, factor basis tuple) pure tensors."""
        if c.ring != self:
            raise RingError("class lives in a different ring")
        return [(coeff, self._tuple_of[k]) for k, coeff in c]


def _rename(key: str, suffix: str) -> str:
    if not suffix or key == UNIT:
        return key
    parts = []
    for part in key.split("*"):
        base, sep, exp = part.partition("^")
        parts.append(base + suffix + sep + exp)
    return "*".join(parts)


def _default_suffixes(factors: Sequence[RingPresentation]) -> list[str]:
    seen: Counter = Counter()
    for f in factors:
        seen.update({k for k, _ in f.basis if k != UNIT})
    clash = [any(seen[k] > 1 for k, _ in f.basis if k != UNIT) for f in factors]
    out, n = [], 0
    for c in clash:
        if c:
            n += 1
            out.append(str(n))
        else:
            out.append("")
    return out


def cup(a: GradedClass, b: GradedClass) -> GradedClass:
    """Bilinear cup product through the structure constants."""
    if a.ring != b.ring:
        raise RingError(f"classes live in different rings ({a.ring.name} vs {b.ring.name})")
    ring = a.ring
    out: dict[str, int] = {}
    for x, cx in a:
        for y, cy in b:
            for z, cz in ring.mul_basis(x, y).items():
                out[z] = out.get(z, 0) + cx * cy * cz
    return GradedClass(ring, out)


def integrate(a: GradedClass) -> int:
    """Evaluate the top-degree part of a class on the fundamental class."""
    pairing = a.ring.pairing
    return sum(c * pairing.get(k, 0) for k, c in a)


def kunneth(*rings: RingPresentation, suffixes: Sequence[str] | None = None) -> ProductRing:
    if not rings:
        raise RingError("kunneth needs at least one ring")
    return ProductRing(rings, suffixes)


def pairing_matrix(r: RingPresentation) -> list[list[int]]:
    ids = [k for k, _ in r.basis]
    return [[integrate(cup(r[a], r[b])) for b in ids] for a in ids]


def diagonal(r: RingPresentation) -> GradedClass:
    """Poincaré dual of the diagonal, sum_k g_k x g'_k with integrate(g_a g'_b) = delta_ab."""
    p = pairing_matrix(r)
    if abs(det(p)) != 1:
        raise RingError(f"pairing on {r.name} is not unimodular")
    inv = inverse(p)
    ids = [k for k, _ in r.basis]
    rr = kunneth(r, r)
    total = rr.zero()
    for a, ka in enumerate(ids):
        dual = {kc: int(inv[c][a]) for c, kc in enumerate(ids) if inv[c][a]}
        total = total + rr.cross([r[ka], GradedClass(r, dual)])
    return total


def divisibility(v: GradedClass) -> int:
    return gcd_list(c for _, c in v)


def check_associativity(r: RingPresentation) -> list[tuple[str, str, str]]:
    """Basis triples where (ab)c != a(bc); empty when associative."""
    bad = []
    for a, b, c in itertools.product([k for k, _ in r.basis], repeat=3):
        if cup(cup(r[a], r[b]), r[c]) != cup(r[a], cup(r[b], r[c])):
            bad.append((a, b, c))
    return bad


def check_commutativity(r: RingPresentation) -> list[tuple[str, str]]:
    ids = [k for k, _ in r.basis]
    return [(a, b) for a in ids for b in ids if r.mul_basis(a, b) != r.mul_basis(b, a)]


# ---------------------------------------------------------------- presets

def point() -> RingPresentation:
    return RingPresentation("pt", [(UNIT, 0)], {}, {UNIT: 1}, euler_characteristic=1)


def projective_space(k: int) -> RingPresentation:
    """H*(CP^k) = Z[h]/(h^{k+1})."""
    if k < 1:
        raise RingError("CP^k needs k >= 1")
    ids = [UNIT, "h"] + [f"h^{j}" for j in range(2, k + 1)]
    basis = [(x, 2 * j) for j, x in enumerate(ids)]
    products = {}
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            if i + j <= k:
                products[(ids[i], ids[j])] = {ids[i + j]: 1}
    return RingPresentation(f"CP{k}", basis, products, {ids[k]: 1}, euler_characteristic=k + 1)


def sphere() -> RingPresentation:
    return RingPresentation("S2", [(UNIT, 0), ("h", 2)], {}, {"h": 1}, euler_characteristic=2)


def surface(genus: int) -> RingPresentation:
    """Even part of H*(Sigma_g): odd classes are never multiplied in the computations here."""
    if genus < 0:
        raise RingError("genus must be non-negative")
    if genus == 0:
        return sphere()
    return RingPresentation(f"Sigma{genus}", [(UNIT, 0), ("h", 2)], {}, {"h": 1},
                            euler_characteristic=2 - 2 * genus)


def four_manifold(name: str, form: IntersectionLattice, names: Sequence[str],
                  top: str = "vol") -> RingPresentation:
    """Ring of a simply-connected closed 4-manifold with the given intersection form."""
    if len(names) != form.rank:
        raise RingError("one name per lattice basis vector")
    basis = [(UNIT, 0)] + [(n, 2) for n in names] + [(top, 4)]
    products = {}
    for i, a in enumerate(names):
        for j in range(i, len(names)):
            if form.gram[i][j]:
                products[(a, names[j])] = {top: form.gram[i][j]}
    ring = RingPresentation(name, basis, products, {top: 1}, euler_characteristic=2 + form.rank)
    ring._lattice = form
    return ring


def s2xs2() -> RingPresentation:
    return four_manifold("S2xS2", hyperbolic(), ["u1", "u2"])


def s2xs2_sum(m: int) -> RingPresentation:
    """#_m(S2 x S2) with basis u_i, u_i' dual to the sphere factors of the i-th summand."""
    if m < 1:
        raise RingError("need m >= 1 summands")
    names = [x for i in range(1, m + 1) for x in (f"u{i}", f"u{i}'")]
    return four_manifold(f"#{m}(S2xS2)", direct_sum(*[hyperbolic()] * m), names)


def cp2_cp2bar_sum(m: int) -> RingPresentation:
    """#_m(CP2 # -CP2): lines l_i of square +1, exceptional classes x_i of square -1."""
    if m < 1:
        raise RingError("need m >= 1 summands")
    names = [x for i in range(1, m + 1) for x in (f"l{i}", f"x{i}")]
    return four_manifold(f"#{m}(CP2#-CP2)", diagonal_form(*[1, -1] * m), names)


def rational_elliptic() -> RingPresentation:
    """E(1) = CP2 # 9(-CP2)."""
    return four_manifold("E(1)", diagonal_form(1, *[-1] * 9), ["l"] + [f"x{i}" for i in range(1, 10)])


_PRESET = re.compile(r"^(?:(point|pt)|(s2)|cp(\d+)|(?:sigma|surface)(\d+)|(t2)|(s2xs2)|(e1)"
                     r"|s2xs2_sum:(\d+)|cp2_cp2bar_sum:(\d+))$")


def preset(spec: str) -> RingPresentation:
    """Look up a preset by name: pt, S2, CP<k>, Sigma<g>, T2, S2xS2, E1,
    s2xs2_sum:<m>, cp2_cp2bar_sum:<m>."""
    m = _PRESET.match(spec.strip().lower())
    if not m:
        raise RingError(f"unknown preset {spec!r}")
    pt, s2, cp, sig, t2, sxs, e1, ssum, csum = m.groups()
    if pt:
        return point()
    if s2:
        return sphere()
    if cp:
        k = int(cp)
        if not 1 <= k <= 4:
            raise RingError("CP^k presets exist for 1 <= k <= 4")
        return projective_space(k)
    if sig is not None:
        return surface(int(sig))
    if t2:
        return surface(1)
    if sxs:
        return s2xs2()
    if e1:
        return rational_elliptic()
    if ssum:
        return s2xs2_sum(int(ssum))
    return cp2_cp2bar_sum(int(csum))


def ring_from_json(data: Mapping | str) -> RingPresentation:
    """Build a ring from {basis:[{id,deg}], products:[[id,id,{id:coeff}]], pairing:{id:coeff}}."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        basis = [(b["id"], b["deg"]) for b in data["basis"]]
        products = {}
        for entry in data.get("products", []):
            a, b, res = entry
            products[(a, b)] = res
        pairing = data.get("pairing", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise RingError(f"malformed ring description: {exc}") from exc
    ring = RingPresentation(data.get("name", "ring"), basis, products, pairing,
                            euler_characteristic=data.get("euler_characteristic"))
    bad = check_commutativity(ring)
    if bad:
        raise RingError(f"product table is not symmetric at {bad[0]}")
    bad = check_associativity(ring)
    if bad:
        raise RingError(f"product table is not associative at {bad[0]}")
    return ring

