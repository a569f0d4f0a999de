"""Exact computations with finite-dimensional Hopf algebroids: axioms,
integrals, Maschke-type theorems, Frobenius and QF decisions."""

__version__ = "0.1.0"
