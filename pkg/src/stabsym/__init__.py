"""Exact computations for stabilized symplectic 4-manifolds: cohomology rings,
first Chern class obstructions, Gromov-Witten invariants of spheres via the
Kontsevich-Manin axioms, and norm-ball face combinatorics."""

__version__ = "0.1.0"
