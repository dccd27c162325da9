"""Unit balls of norms N(x) = sum_i |l_i(x)| and their facets.

The ball is {x : <u, x> <= 1} over the vertices u of the zonotope
sum_i [-l_i, l_i]. A sign vector e gives a vertex sum_i e_i l_i exactly when
some direction w has e_i <l_i, w> > 0 for every (merged) generator; that
strict homogeneous system is decided by Fourier-Motzkin elimination over the
rationals. Each zonotope vertex is the normal of one facet of the ball.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Sequence

from .linalg import inverse, matvec, transpose

Vector = tuple[int, ...]
Point = tuple[Fraction, ...]


class DegenerateNormError(ValueError):
    pass


def _rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class NormSpec:
    generators: tuple[Vector, ...]
    name: str = "custom"

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise DegenerateNormError("need at least one generator")
        if len({len(g) for g in gens}) != 1:
            raise DegenerateNormError("generators must have equal length")
        if _rank(gens) < len(gens[0]):
            raise DegenerateNormError("generators do not span; N vanishes on a nonzero vector")

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @classmethod
    def parse(cls, text: str, name: str = "custom") -> "NormSpec":
        """'1,0,0;0,1,0' -> generators."""
        try:
            gens = [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
        except ValueError as exc:
            raise DegenerateNormError(f"cannot parse generators {text!r}") from exc
        return cls(tuple(gens), name)

    def to_json(self) -> dict:
        return {"name": self.name, "generators": [list(g) for g in self.generators]}


def borromean() -> NormSpec:
    """Four classes with the fourth the sum of the first three."""
    return NormSpec(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)), "borromean")


def l1(n: int = 3) -> NormSpec:
    return NormSpec(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), f"l1_{n}")


PRESETS = {"borromean": borromean, "l1": l1}


def norm_value(spec: NormSpec, x: Sequence) -> Fraction:
    if len(x) != spec.dim:
        raise ValueError(f"expected a vector of length {spec.dim}")
    return sum((abs(_dot(g, map(Fraction, x))) for g in spec.generators), Fraction(0))


def merged_generators(spec: NormSpec) -> list[Vector]:
    """Parallel generators combined: sum of |multiples| times the primitive direction."""
    weight: dict[Vector, int] = {}
    for g in spec.generators:
        if not any(g):
            continue
        d = 0
        for x in g:
            d = gcd(d, x)
        prim = tuple(x // d for x in g)
        if next(x for x in prim if x) < 0:
            prim = tuple(-x for x in prim)
        weight[prim] = weight.get(prim, 0) + d
    return [tuple(w * x for x in p) for p, w in sorted(weight.items())]


def strictly_feasible(rows: Sequence[Sequence]) -> bool:
    """Is there w with <r, w> > 0 for every row? Fourier-Motzkin, exact."""
    system = [list(map(Fraction, r)) for r in rows]
    if any(not any(r) for r in system):
        return False
    n = len(system[0]) if system else 0
    for k in range(n):
        pos = [r for r in system if r[k] > 0]
        neg = [r for r in system if r[k] < 0]
        zero = [r for r in system if r[k] == 0]
        combined = []
        for p in pos:
            for q in neg:
                # eliminate w_k with positive multipliers; strictness survives
                row = [(-q[k]) * a + p[k] * b for a, b in zip(p, q)]
                if not any(row):
                    return False
                combined.append(row)
        system = _dedupe(zero + combined)
    return not system


def _dedupe(rows):
    seen, out = set(), []
    for r in rows:
        # scale so the first nonzero entry is +-1
        lead = next(abs(x) for x in r if x)
        key = tuple(x / lead for x in r)
        if key not in seen:
            seen.add(key)
            out.append(list(key))
    return out


def _vertex_signs(spec: NormSpec) -> dict[tuple[int, ...], Vector]:
    gens = merged_generators(spec)
    out = {}
    for eps in itertools.product((1, -1), repeat=len(gens)):
        if strictly_feasible([[e * x for x in g] for e, g in zip(eps, gens)]):
            out[eps] = tuple(sum(e * g[i] for e, g in zip(eps, gens)) for i in range(spec.dim))
    return out


def zonotope_vertices(spec: NormSpec) -> list[Vector]:
    return sorted(set(_vertex_signs(spec).values()))


@dataclass(frozen=True)
class Facet:
    normal: Vector
    polygon: tuple[Point, ...]
    euler_class: Vector

    @property
    def vertex_count(self) -> int:
        return len(self.polygon)

    def to_json(self) -> dict:
        return {"normal": list(self.normal), "euler_class": list(self.euler_class),
                "vertex_count": self.vertex_count,
                "polygon": [[str(c) for c in p] for p in self.polygon]}


def _solve3(rows, rhs) -> Point | None:
    try:
        inv = inverse(rows)
    except ZeroDivisionError:
        return None
    return tuple(matvec(inv, [Fraction(x) for x in rhs]))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def cyclic_order(points: Sequence[Point], normal: Sequence) -> list[Point]:
    """Counterclockwise order seen from the side the normal points to."""
    if len(points) < 3:
        return list(points)
    c = tuple(sum(p[i] for p in points) / len(points) for i in range(3))
    vecs = {p: tuple(p[i] - c[i] for i in range(3)) for p in points}
    start = min(points)
    ref = vecs[start]

    def half(v):
        s = _dot(_cross(ref, v), normal)
        return 0 if s > 0 or (s == 0 and _dot(ref, v) > 0) else 1

    def cmp(p, q):
        a, b = vecs[p], vecs[q]
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        s = _dot(_cross(a, b), normal)
        return -1 if s > 0 else 1 if s < 0 else 0

    return sorted(points, key=cmp_to_key(cmp))


def facets(spec: NormSpec) -> list[Facet]:
    """One facet per zonotope vertex; polygons only in dimension 3."""
    signs = _vertex_signs(spec)
    verts = sorted(set(signs.values()))
    if spec.dim != 3:
        return [Facet(u, (), tuple(-x for x in u)) for u in verts]
    gens = merged_generators(spec)
    out = []
    for eps, u in sorted(signs.items(), key=lambda kv: kv[1]):
        # neighbours: single sign flips that are still vertices
        nbrs = []
        for i in range(len(gens)):
            flipped = eps[:i] + (-eps[i],) + eps[i + 1:]
            if flipped in signs:
                nbrs.append(signs[flipped])
        pts = set()
        for u1, u2 in itertools.combinations(nbrs, 2):
            x = _solve3([u, u1, u2], [1, 1, 1])
            if x is not None and all(_dot(w, x) <= 1 for w in verts):
                pts.add(x)
        polygon = tuple(cyclic_order(sorted(pts), u))
        f = Facet(u, polygon, tuple(-x for x in u))
        euler_class_of_facet(f)
        out.append(f)
    return out


def euler_class_of_facet(f: Facet) -> Vector:
    e = tuple(-x for x in f.normal)
    for x in f.polygon:
        assert _dot(e, x) == -1, f"{x} does not pair to -1 with {e}"
    return e


def euler_characteristic(fs: Sequence[Facet]) -> int:
    """V - E + F of the boundary complex built from the facet polygons."""
    verts = {p for f in fs for p in f.polygon}
    edges = {frozenset((f.polygon[i], f.polygon[(i + 1) % len(f.polygon)]))
             for f in fs for i in range(len(f.polygon))}
    return len(verts) - len(edges) + len(fs)


# ------------------------------------------------------------ face equivalence

@dataclass(frozen=True)
class FaceVerdict:
    verdict: str  # Equivalent | Distinct | Unknown
    matrix: tuple[tuple[int, ...], ...] | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "matrix": [list(r) for r in self.matrix] if self.matrix else None,
                "reason": self.reason}


def _sign_class(v: Sequence[int]) -> Vector:
    v = tuple(v)
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else v


def generator_symmetries(spec: NormSpec, bound: int) -> list[tuple[tuple[int, ...], ...]]:
    """Integer M (acting on covectors) with |entries| <= bound that permute
    the multiset {+-l_i}; sorted lexicographically."""
    gens = spec.generators
    n = spec.dim
    target = Counter(_sign_class(g) for g in gens)
    basis_idx = _independent_subset(gens, n)
    basis = [gens[i] for i in basis_idx]
    inv = inverse(transpose(basis))  # columns are the chosen generators
    signed = sorted({tuple(s * x for x in g) for g in gens for s in (1, -1)})
    found = set()
    for images in itertools.product(signed, repeat=n):
        img_cols = transpose(list(images))
        m = [[sum(img_cols[i][k] * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        if any(x.denominator != 1 or abs(x) > bound for row in m for x in row):
            continue
        mi = tuple(tuple(int(x) for x in row) for row in m)
        if Counter(_sign_class(matvec(mi, g)) for g in gens) != target:
            continue
        if _rank(mi) < n:
            continue
        found.add(mi)
    return sorted(found)


def _independent_subset(gens, n) -> list[int]:
    chosen: list[int] = []
    for i, g in enumerate(gens):
        if _rank([gens[j] for j in chosen] + [g]) > len(chosen):
            chosen.append(i)
        if len(chosen) == n:
            return chosen
    raise DegenerateNormError("generators do not span")


def map_polygon(m: Sequence[Sequence[int]], polygon: Sequence[Point]) -> set[Point]:
    """Covector map M moves points by M^{-T}."""
    inv_t = transpose(inverse(m))
    return {tuple(matvec(inv_t, list(p))) for p in polygon}


def faces_equivalent(f0: Facet, f1: Facet, spec: NormSpec, bound: int = 1) -> FaceVerdict:
    if f0.vertex_count != f1.vertex_count:
        return FaceVerdict("Distinct", None,
                           f"polygons have {f0.vertex_count} and {f1.vertex_count} vertices")
    for m in generator_symmetries(spec, bound):
        if tuple(matvec(m, list(f0.normal))) == tuple(f1.normal):
            assert map_polygon(m, f0.polygon) == set(f1.polygon)
            return FaceVerdict("Equivalent", m, "symmetry of the generator multiset maps the normals")
    return FaceVerdict("Unknown", None,
                       f"same vertex count and no generator symmetry with entries <= {bound} maps the normals")


def facet_by_index(fs: Sequence[Facet], index: int) -> Facet:
    if not 0 <= index < len(fs):
        raise IndexError(f"facet index {index} out of range 0..{len(fs) - 1}")
    return fs[index]


__all__ = ["NormSpec", "Facet", "FaceVerdict", "DegenerateNormError", "borromean", "l1", "PRESETS",
           "norm_value", "merged_generators", "strictly_feasible", "zonotope_vertices", "facets",
           "euler_class_of_facet", "euler_characteristic", "faces_equivalent",
           "generator_symmetries", "map_polygon", "cyclic_order", "facet_by_index"]
