"""
Quadric Lattices

Exact lattice, cone and chamber computations for the blow-up X of P^n at
n+3 points and the variety G of m-planes in the base locus of a pencil of
quadrics in P^(n+2), n = 2m.
"""

__version__ = "0.1.0"

from quadric_lattices.core.constants import OutputFormat, Side, Suite

__all__ = ["OutputFormat", "Side", "Suite"]
