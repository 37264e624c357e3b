"""Exact orbit counting for GL(m,q) acting through algebraic families.

Derives the polynomial-on-residue-classes (PORC) formulas counting
orbits of GL(m,q) on a target space it acts on through a weight-
presented family of group homomorphisms, and cross-validates every
derived formula against brute-force enumeration over small fields.
"""

__version__ = "0.1.0"
