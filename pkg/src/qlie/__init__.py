"""Structure constants of quantum Lie algebras of types A, B, C, D.

Exact arithmetic over Q(sqrt2)(q^1/2)[s], s^2 = q + q^-1.  Tables are built
two ways: from tensor-product intertwiners of the vector representation, and
from closed formulas; the two are checked against each other.
"""
__version__ = "0.1.0"
