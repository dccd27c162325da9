"""First Chern class and Pontryagin number bookkeeping for 4-manifolds and
their stabilizations by CP^k or products of surfaces."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .ring import (GradedClass, ProductRing, RingError, RingPresentation, integrate,
                   kunneth, preset, projective_space, rational_elliptic, ring_from_json,
                   surface)


@dataclass(frozen=True)
class SymplecticData:
    """A closed symplectic 4-manifold as far as the obstructions here can see it.

    ``ring`` may be omitted for summands that only enter through their
    signature (T^4 in a fibre sum, for instance).
    """

    name: str
    sigma: int
    ring: RingPresentation | None = None
    c1: GradedClass | None = None
    p1_number: int | None = None
    simply_connected: bool = True

    def __post_init__(self):
        if self.ring is not None and self.ring.top_degree != 4:
            raise RingError(f"{self.name}: expected a 4-manifold ring, top degree is {self.ring.top_degree}")
        if self.c1 is not None:
            if self.ring is None or self.c1.ring != self.ring:
                raise RingError(f"{self.name}: c1 must live in the manifold's ring")
            if self.c1 and self.c1.degrees() != {2}:
                raise RingError(f"{self.name}: c1 must be homogeneous of degree 2")
        if self.ring is not None and self.ring.lattice().signature() != self.sigma:
            raise RingError(f"{self.name}: signature {self.sigma} disagrees with the intersection form")
        hirzebruch = 3 * self.sigma
        if self.p1_number is None:
            object.__setattr__(self, "p1_number", hirzebruch)
        elif self.p1_number != hirzebruch:
            raise RingError(f"{self.name}: p1 = {self.p1_number} violates p1 = 3*sigma = {hirzebruch}")

    def with_c1(self, c1: GradedClass, name: str | None = None) -> "SymplecticData":
        return SymplecticData(name or self.name, self.sigma, self.ring, c1, self.p1_number,
                              self.simply_connected)


@dataclass(frozen=True)
class Stabilizer:
    """CP^k, or a product of ``count`` copies of a genus-``genus`` surface."""

    kind: str
    k: int
    genus: int = 0
    rings: tuple[RingPresentation, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("cp", "surfaces"):
            raise ValueError(f"unknown stabilizer kind {self.kind!r}")
        if self.k < 1:
            raise ValueError("stabilizer needs k >= 1")
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        if self.kind == "cp":
            rings = (projective_space(self.k),)
        else:
            rings = tuple(surface(self.genus) for _ in range(self.k))
        object.__setattr__(self, "rings", rings)

    @classmethod
    def cp(cls, k: int) -> "Stabilizer":
        return cls("cp", k)

    @classmethod
    def surfaces(cls, k: int, genus: int = 0) -> "Stabilizer":
        return cls("surfaces", k, genus)

    @classmethod
    def parse(cls, text: str) -> "Stabilizer":
        """'CP3', 'S2', 'S2^3', 'T2^2', 'Sigma2^4'."""
        m = re.fullmatch(r"\s*(?:cp(\d+)|(s2|t2|sigma(\d+))(?:\^(\d+))?)\s*", text.lower())
        if not m:
            raise ValueError(f"cannot parse stabilizer {text!r}")
        cp, surf, g, power = m.groups()
        if cp:
            return cls.cp(int(cp))
        genus = 0 if surf == "s2" else 1 if surf == "t2" else int(g)
        return cls.surfaces(int(power or 1), genus)

    def factor_c1_coefficients(self) -> list[int]:
        """c1 of each factor as a multiple of its hyperplane / point-dual class."""
        if self.kind == "cp":
            return [self.k + 1]
        return [2 - 2 * self.genus] * self.k

    def label(self) -> str:
        if self.kind == "cp":
            return f"CP{self.k}"
        base = "S2" if self.genus == 0 else f"Sigma{self.genus}"
        return base if self.k == 1 else f"{base}^{self.k}"


def stabilized_ring(d: SymplecticData, stab: Stabilizer) -> ProductRing:
    if d.ring is None:
        raise RingError(f"{d.name} has no cohomology ring attached")
    return kunneth(d.ring, *stab.rings)


def c1_stabilize(d: SymplecticData, stab: Stabilizer) -> GradedClass:
    """c1 of the product form on X x Y: c1(X) plus the factors' c1 pulled back."""
    if d.c1 is None:
        raise RingError(f"{d.name} has no first Chern class attached")
    prod_ring = stabilized_ring(d, stab)
    total = prod_ring.include(d.c1, 0)
    for i, (r, coeff) in enumerate(zip(stab.rings, stab.factor_c1_coefficients()), start=1):
        total = total + prod_ring.include(r.element("h", coeff), i)
    return total


def p1_number_product_with_surfaces(d: SymplecticData, k: int) -> int:
    """Coefficient of PD[Sigma^k] in p1(X x Sigma^k); surfaces contribute nothing."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return 3 * d.sigma


def p1_class_product_with_surfaces(d: SymplecticData, k: int, genus: int = 0) -> GradedClass:
    """p1(X x Sigma^k) = 3 sigma(X) PD[{pt} x Sigma^k] as a class in the product ring."""
    if d.ring is None:
        raise RingError(f"{d.name} has no cohomology ring attached")
    top = next(key for key, deg in d.ring.basis if deg == 4 and d.ring.pairing.get(key))
    if k == 0:
        return d.ring.element(top, p1_number_product_with_surfaces(d, k))
    ring = kunneth(d.ring, *[surface(genus) for _ in range(k)])
    return ring.include(d.ring.element(top, p1_number_product_with_surfaces(d, k)), 0)


def fibre_sum_signature(summands: Sequence[SymplecticData]) -> int:
    """Signatures add over the torus fibre sums used here (Novikov additivity)."""
    if not summands:
        raise ValueError("need at least one summand")
    return sum(s.sigma for s in summands)


def fibre_sum(name: str, summands: Sequence[SymplecticData]) -> SymplecticData:
    """Numeric record (signature, p1) of a fibre sum; no ring is built."""
    return SymplecticData(name, fibre_sum_signature(summands), simply_connected=True)


def c1_orbit_fingerprint(d: SymplecticData) -> tuple[int, int, bool]:
    """(divisibility, |c1.c1|, c1 characteristic)."""
    if d.ring is None or d.c1 is None:
        raise RingError(f"{d.name}: no lattice / c1 attached")
    return d.ring.lattice().fingerprint(d.ring.h2_vector(d.c1))


def c1_square(d: SymplecticData) -> int:
    return integrate(d.c1 * d.c1)


# ------------------------------------------------------------ presets

def torus4() -> SymplecticData:
    return SymplecticData("T4", 0, p1_number=0, simply_connected=False)


def rational_elliptic_surface() -> SymplecticData:
    r = rational_elliptic()
    c1 = r.element("l", 3) - sum((r[f"x{i}"] for i in range(1, 10)), r.zero())
    return SymplecticData("E(1)", -8, r, c1)


def symplectic_from_json(data: Mapping | str | Path) -> SymplecticData:
    """Manifold spec: {"name", "preset" | "ring", "c1", "sigma"?, "simply_connected"?}."""
    from .parse import parse_class_expr

    if isinstance(data, Path):
        data = json.loads(data.read_text())
    elif isinstance(data, str):
        data = json.loads(data)
    if "preset" in data:
        ring = preset(data["preset"])
    elif "ring" in data:
        ring = ring_from_json(data["ring"])
    else:
        raise RingError("manifold spec needs a 'preset' or a 'ring'")
    c1 = data.get("c1")
    if isinstance(c1, str):
        c1 = parse_class_expr(c1, ring)
    elif isinstance(c1, list):
        c1 = ring.from_h2_vector(c1)
    sigma = data.get("sigma")
    if sigma is None:
        sigma = ring.lattice().signature()
    return SymplecticData(data.get("name", ring.name), sigma, ring, c1,
                          data.get("p1_number"), data.get("simply_connected", True))
