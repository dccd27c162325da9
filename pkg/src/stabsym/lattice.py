"""Unimodular symmetric bilinear forms over Z."""

from __future__ import annotations

from enum import Enum
from functools import cached_property
from typing import Sequence

from .linalg import det, gcd_list, inertia


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class IntersectionLattice:
    """A free Z-module with a symmetric unimodular Gram matrix."""

    def __init__(self, gram: Sequence[Sequence[int]], check: bool = True):
        self.gram = tuple(tuple(int(x) for x in row) for row in gram)
        self.rank = len(self.gram)
        if check:
            if any(len(row) != self.rank for row in self.gram):
                raise ValueError("Gram matrix must be square")
            for i in range(self.rank):
                for j in range(i):
                    if self.gram[i][j] != self.gram[j][i]:
                        raise ValueError("Gram matrix must be symmetric")
            if abs(det(self.gram)) != 1:
                raise ValueError("Gram matrix is not unimodular")

    def __eq__(self, other):
        return isinstance(other, IntersectionLattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"IntersectionLattice(rank={self.rank}, signature={self.signature()})"

    @cached_property
    def _rows(self):
        # sparse rows: large lattices (fibre-sum pipeline) are mostly zeros
        return tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in self.gram)

    def dot(self, v: Sequence[int], w: Sequence[int]) -> int:
        return sum(v[i] * x * w[j] for i, row in enumerate(self._rows) if v[i] for j, x in row)

    def square(self, v: Sequence[int]) -> int:
        return self.dot(v, v)

    def pair_with_basis(self, v: Sequence[int]) -> list[int]:
        """The vector (v . e_j)_j."""
        out = [0] * self.rank
        for i, row in enumerate(self._rows):
            if v[i]:
                for j, x in row:
                    out[j] += v[i] * x
        return out

    @cached_property
    def _inertia(self):
        return inertia(self.gram)

    def signature(self) -> int:
        pos, neg, _ = self._inertia
        return pos - neg

    def b_plus(self) -> int:
        return self._inertia[0]

    def b_minus(self) -> int:
        return self._inertia[1]

    def parity(self) -> Parity:
        return Parity.EVEN if all(self.gram[i][i] % 2 == 0 for i in range(self.rank)) else Parity.ODD

    def is_characteristic(self, v: Sequence[int]) -> bool:
        """v.x = x.x mod 2 for every basis vector x (hence for all x)."""
        p = self.pair_with_basis(v)
        return all((p[i] - self.gram[i][i]) % 2 == 0 for i in range(self.rank))

    def fingerprint(self, v: Sequence[int]) -> tuple[int, int, bool]:
        """(divisibility, |v.v|, characteristic) -- all invariant under isometries and v -> -v."""
        if len(v) != self.rank:
            raise ValueError(f"vector has length {len(v)}, lattice has rank {self.rank}")
        return gcd_list(v), abs(self.square(v)), self.is_characteristic(v)

    def direct_sum(self, other: "IntersectionLattice") -> "IntersectionLattice":
        return direct_sum(self, other)

    def scaled(self, s: int) -> "IntersectionLattice":
        if s not in (1, -1):
            raise ValueError("only +-1 rescaling keeps the form unimodular")
        return IntersectionLattice([[s * x for x in row] for row in self.gram], check=False)


def direct_sum(*lattices: IntersectionLattice) -> IntersectionLattice:
    n = sum(L.rank for L in lattices)
    gram = [[0] * n for _ in range(n)]
    off = 0
    for L in lattices:
        for i, row in enumerate(L.gram):
            for j, x in enumerate(row):
                gram[off + i][off + j] = x
        off += L.rank
    return IntersectionLattice(gram, check=False)


def diagonal_form(*entries: int) -> IntersectionLattice:
    return IntersectionLattice([[e if i == j else 0 for j in range(len(entries))]
                                for i, e in enumerate(entries)])


def hyperbolic() -> IntersectionLattice:
    return IntersectionLattice([[0, 1], [1, 0]])


_E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]


def e8() -> IntersectionLattice:
    """Positive-definite E8 (Cartan matrix of the E8 Dynkin diagram)."""
    g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = -1
    return IntersectionLattice(g)
