"""Exact-arithmetic toolkit for generalized coinvariant algebras.

Combinatorial statistics on ordered set partitions, Demazure characters via
skyline fillings, lex Groebner bases, monomial bases of the quotient rings,
and the graded Frobenius series with its cross-validating routes.
"""

from coinv.qseries import QPolynomial
from coinv.combinat import OrderedSetPartition

__all__ = ["QPolynomial", "OrderedSetPartition"]
__version__ = "0.1.0"
