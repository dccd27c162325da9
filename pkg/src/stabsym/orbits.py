"""Orbit obstructions for characteristic classes under lattice isometries.

The obstruction compares (divisibility, |square|, characteristic flag), all
of which are preserved by isometries, anti-isometries and v -> -v. It is
sound and incomplete: a mismatch proves the classes lie in different orbits,
a match proves nothing. The bounded isometry search is the oracle used to
test that soundness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .chern import Stabilizer, SymplecticData, c1_stabilize
from .lattice import IntersectionLattice, diagonal_form, direct_sum, hyperbolic
from .linalg import matmul, matvec, transpose
from .ring import four_manifold, kunneth, projective_space

DISTINCT = "Distinct"
EQUIVALENT = "EquivalentWitness"
UNKNOWN = "Unknown"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class IsometryWitness:
    """M with M^T G M = form_sign * G and M v0 = vector_sign * v1."""

    matrix: tuple[tuple[int, ...], ...]
    form_sign: int
    vector_sign: int

    def to_json(self) -> dict:
        return {"matrix": [list(r) for r in self.matrix], "form_sign": self.form_sign,
                "vector_sign": self.vector_sign}


@dataclass(frozen=True)
class OrbitReport:
    verdict: str
    invariants_v0: tuple
    invariants_v1: tuple
    search_bound: int | None = None
    witness: IsometryWitness | None = None
    reason: str = ""

    def to_json(self) -> dict:
        names = ("divisibility", "abs_square", "characteristic")
        return {"verdict": self.verdict,
                "invariants_v0": dict(zip(names, self.invariants_v0)),
                "invariants_v1": dict(zip(names, self.invariants_v1)),
                "search_bound": self.search_bound,
                "witness": self.witness.to_json() if self.witness else None,
                "reason": self.reason}


def verify_witness(L: IntersectionLattice, v0, v1, w: IsometryWitness) -> bool:
    m = [list(r) for r in w.matrix]
    lhs = matmul(matmul(transpose(m), L.gram), m)
    if lhs != [[w.form_sign * x for x in row] for row in L.gram]:
        return False
    return matvec(m, list(v0)) == [w.vector_sign * x for x in v1]


def same_orbit_obstruction(L: IntersectionLattice, v0: Sequence[int], v1: Sequence[int],
                           search_bound: int | None = None) -> OrbitReport:
    """Distinct if the fingerprints differ; otherwise optionally search for a witness."""
    if len(v0) != L.rank or len(v1) != L.rank:
        raise ValueError(f"vectors must have length {L.rank}")
    f0, f1 = L.fingerprint(v0), L.fingerprint(v1)
    if f0 != f1:
        names = ("divisibility", "|square|", "characteristic flag")
        diff = [n for n, a, b in zip(names, f0, f1) if a != b]
        return OrbitReport(DISTINCT, f0, f1, search_bound, reason=f"{', '.join(diff)} differ")
    if search_bound is not None:
        w = bounded_isometry_search(L, v0, v1, search_bound)
        if w is not None:
            return OrbitReport(EQUIVALENT, f0, f1, search_bound, w, "bounded search found a witness")
        return OrbitReport(UNKNOWN, f0, f1, search_bound,
                           reason="fingerprints agree and no witness within the bound")
    return OrbitReport(UNKNOWN, f0, f1, reason="fingerprints agree")


@lru_cache(maxsize=4096)
def bounded_isometries(gram: tuple, bound: int, sign: int) -> np.ndarray:
    """All M with |entries| <= bound and M^T G M = sign*G, shape (K, r, r).

    Columns are filled left to right, each from the box vectors of the right
    norm, pruned by the inner products with earlier columns; the rows come
    out in lexicographic order of (column 1, column 2, ...).
    """
    g = np.array(gram, dtype=np.int64)
    r = len(g)
    box = np.array(list(itertools.product(range(-bound, bound + 1), repeat=r)), dtype=np.int64)
    norms = np.einsum("ni,ij,nj->n", box, g, box)
    frontier = np.zeros((1, 0, r), dtype=np.int64)
    for j in range(r):
        cand = box[norms == sign * g[j, j]]
        cand_g = cand @ g
        parts = []
        for start in range(0, len(frontier), 2048):
            blk = frontier[start:start + 2048]
            ok = np.ones((len(blk), len(cand)), dtype=bool)
            for i in range(j):
                ok &= (blk[:, i, :] @ cand_g.T) == sign * g[i, j]
            bi, ci = np.nonzero(ok)
            parts.append(np.concatenate([blk[bi], cand[ci][:, None, :]], axis=1))
        frontier = np.concatenate(parts) if parts else np.zeros((0, j + 1, r), dtype=np.int64)
    # frontier[k, j] is column j; return matrices
    return np.transpose(frontier, (0, 2, 1))


def bounded_isometry_search(L: IntersectionLattice, v0: Sequence[int], v1: Sequence[int],
                            bound: int) -> IsometryWitness | None:
    """First M (isometries before anti-isometries, then column-lexicographic)
    with |entries| <= bound, M^T G M = +-G and M v0 = +-v1."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if len(v0) != L.rank or len(v1) != L.rank:
        raise ValueError(f"vectors must have length {L.rank}")
    a = np.array(v0, dtype=np.int64)
    b = np.array(v1, dtype=np.int64)
    for form_sign in (1, -1):
        mats = bounded_isometries(L.gram, bound, form_sign)
        if not len(mats):
            continue
        img = mats @ a
        plus = np.all(img == b, axis=1)
        minus = np.all(img == -b, axis=1)
        hits = np.nonzero(plus | minus)[0]
        if len(hits):
            k = hits[0]
            w = IsometryWitness(tuple(tuple(int(x) for x in row) for row in mats[k]),
                                form_sign, 1 if plus[k] else -1)
            assert verify_witness(L, v0, v1, w)
            return w
    return None


# ------------------------------------------------------------ stabilization

@dataclass(frozen=True)
class TransferReport:
    verdict: str
    stabilizer: str
    base: OrbitReport | None
    failed_hypothesis: str | None = None
    stabilized_c1: tuple[str, str] | None = None

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "stabilizer": self.stabilizer,
                "base": self.base.to_json() if self.base else None,
                "failed_hypothesis": self.failed_hypothesis,
                "stabilized_c1": list(self.stabilized_c1) if self.stabilized_c1 else None}


def stabilization_transfer(x0: SymplecticData, x1: SymplecticData, stab: Stabilizer,
                           with_classes: bool = False) -> TransferReport:
    """Carry a base-level Distinct verdict to X x Y when the transfer hypotheses hold.

    Y = CP^k needs nothing extra. Y = a product of surfaces needs sigma(X) != 0
    and, in positive genus, X simply connected.
    """
    if x0.ring is None or x1.ring is None or x0.ring != x1.ring:
        raise ValueError("both forms must live on the same base ring")
    if x0.c1 is None or x1.c1 is None:
        raise ValueError("both forms need a first Chern class")
    label = stab.label()
    if stab.kind == "surfaces":
        if x0.sigma == 0:
            return TransferReport(INCONCLUSIVE, label, None, "signature of X is zero")
        if stab.genus > 0 and not (x0.simply_connected and x1.simply_connected):
            return TransferReport(INCONCLUSIVE, label, None,
                                  "X is not simply connected (needed for positive-genus factors)")
    ring = x0.ring
    L = ring.lattice()
    base = same_orbit_obstruction(L, ring.h2_vector(x0.c1), ring.h2_vector(x1.c1))
    classes = None
    if with_classes:
        classes = (str(c1_stabilize(x0, stab)), str(c1_stabilize(x1, stab)))
    if base.verdict == DISTINCT:
        return TransferReport(DISTINCT, label, base, None, classes)
    return TransferReport(UNKNOWN, label, base, None, classes)


# ------------------------------------------------------------ brute-force transfer check

def standard_forms(rank: int) -> list[IntersectionLattice]:
    """Diagonal forms p<1> + q<-1>, plus the even forms H and H + H where they fit."""
    out = [diagonal_form(*([1] * p + [-1] * (rank - p))) for p in range(rank, -1, -1)]
    if rank % 2 == 0 and rank <= 4:
        out.append(direct_sum(*[hyperbolic()] * (rank // 2)))
    return out


@dataclass(frozen=True)
class BruteForceResult:
    verdict: str  # Verified | Counterexample
    checked: int
    skipped: int
    counterexample: tuple | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "checked": self.checked, "skipped": self.skipped,
                "counterexample": [list(r) for r in self.counterexample] if self.counterexample else None,
                "detail": self.detail}


def verify_cp_transfer(rank: int, bound: int, k: int,
                       forms: Sequence[IntersectionLattice] | None = None) -> BruteForceResult:
    """Exhaustive check of the CP^k transfer argument in a box.

    Candidates are block matrices psi* = [[A, alpha], [0, a]] on
    H^2(X x CP^k) = H^2(X) + Z h, i.e. H^2(X) is mapped into itself. A must
    preserve the form up to sign and det(psi*) = +-1. Candidates for which
    (psi* h)^(k+1) != 0 in the Kunneth ring are skipped. For the rest, check
    that (k+1) alpha = 0 and that the H^2(X) part of psi*(c + (k+1)h) is A c
    for every c in the box.
    """
    if not (1 <= rank <= 3 and 1 <= bound <= 3 and 1 <= k <= 2):
        raise ValueError("desk scale: rank <= 3, bound <= 3, k <= 2")
    checked = skipped = 0
    for L in forms or standard_forms(rank):
        names = [f"e{i + 1}" for i in range(rank)]
        xr = four_manifold("X", L, names)
        cp = projective_space(k)
        prod_ring = kunneth(xr, cp)
        h = prod_ring.include(cp["h"], 1)
        basis = [prod_ring.include(xr[nm], 0) for nm in names]
        box = list(itertools.product(range(-bound, bound + 1), repeat=rank))
        iso = [m for s in (1, -1) for m in bounded_isometries(L.gram, bound, s)]
        # multiplicativity depends only on (alpha, a)
        admissible = {}
        for a in range(-bound, bound + 1):
            for alpha in box:
                image_h = h * a + sum((basis[i] * alpha[i] for i in range(rank)), prod_ring.zero())
                admissible[a, alpha] = not (image_h ** (k + 1))
        for m in iso:
            A = [[int(x) for x in row] for row in m]
            for (a, alpha), ok in admissible.items():
                if abs(a) != 1:
                    skipped += 1  # det(psi*) = det(A) * a is not a unit
                    continue
                if not ok:
                    skipped += 1
                    continue
                checked += 1
                psi = [row + [alpha[i]] for i, row in enumerate(A)] + [[0] * rank + [a]]
                if any((k + 1) * x for x in alpha):
                    return BruteForceResult("Counterexample", checked, skipped, tuple(map(tuple, psi)),
                                            "(k+1) alpha != 0 although psi* is multiplicative")
                for c in box:
                    stab = list(c) + [k + 1]
                    img = matvec(psi, stab)
                    if img[:rank] != matvec(A, list(c)):
                        return BruteForceResult("Counterexample", checked, skipped,
                                                tuple(map(tuple, psi)), f"c1 transfer fails for c = {c}")
    return BruteForceResult("Verified", checked, skipped)


def random_unimodular_lattice(rng, max_rank: int = 4, mix_steps: int = 2) -> IntersectionLattice:
    """A standard form of random rank conjugated by a few elementary moves."""
    rank = rng.randint(1, max_rank)
    forms = standard_forms(rank)
    g = [list(r) for r in rng.choice(forms).gram]
    for _ in range(mix_steps if rank > 1 else 0):
        i, j = rng.sample(range(rank), 2)
        s = rng.choice((1, -1))
        p = [[int(a == b) for b in range(rank)] for a in range(rank)]
        p[i][j] = s
        g = matmul(matmul(transpose(p), g), p)
    return IntersectionLattice(g)


__all__ = ["DISTINCT", "EQUIVALENT", "UNKNOWN", "INCONCLUSIVE", "IsometryWitness", "OrbitReport",
           "TransferReport", "BruteForceResult", "same_orbit_obstruction", "bounded_isometries",
           "bounded_isometry_search", "verify_witness", "stabilization_transfer", "standard_forms",
           "verify_cp_transfer", "random_unimodular_lattice"]
