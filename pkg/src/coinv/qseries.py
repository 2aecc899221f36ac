"""Univariate polynomials in q with integer coefficients, and q-analogs.

Everything here is exact integer arithmetic.  QPolynomial is the coefficient
type used throughout the package for Hilbert series, q-Stirling numbers, and
Kostka-Foulkes polynomials.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial


class QPolynomial:
    """Dense integer-coefficient polynomial in the single variable q.

    Coefficients are stored ascending by degree with trailing zeros trimmed,
    so the representation is canonical and equality is coefficientwise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        return cls((0,) * degree + (coeff,))

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(
            tuple(self[d] + other[d] for d in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "QPolynomial":
        """Multiply by q**m."""
        if self.is_zero():
            return self
        return QPolynomial((0,) * m + self.coeffs)

    def __call__(self, value):
        """Evaluate at a numeric value (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def reverse(self, degree: int | None = None) -> "QPolynomial":
        """Reverse the coefficient sequence about `degree` (default: deg).

        This is the rev_q operator: q**5 + 7q**3 - 8q maps to
        -8q**4 + 7q**2 + 1.  A zero polynomial reverses to itself.
        """
        if self.is_zero():
            return self
        if degree is None:
            degree = self.degree()
        if degree < self.degree():
            raise ValueError(
                f"reversal degree {degree} below polynomial degree {self.degree()}"
            )
        out = [0] * (degree + 1)
        for d, c in enumerate(self.coeffs):
            out[degree - d] = c
        return QPolynomial(out)

    # -- display / serialization --------------------------------------------

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for d in range(self.degree(), -1, -1):
            c = self[d]
            if c == 0:
                continue
            if d == 0:
                term = str(abs(c))
            else:
                qpow = "q" if d == 1 else f"q^{d}"
                term = qpow if abs(c) == 1 else f"{abs(c)}*{qpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        return cls(data["coeffs"])


Q = QPolynomial.monomial(1)


def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return QPolynomial((1,) * n)


def q_factorial(n: int) -> QPolynomial:
    """[n]!_q = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = QPolynomial.one()
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, a: int) -> QPolynomial:
    """Gaussian binomial [n choose a]_q via the q-Pascal recurrence.

    Stays in integer arithmetic; no polynomial division.
    """
    if n < 0 or a < 0 or a > n:
        raise ValueError(f"q_binomial undefined for (n, a) = ({n}, {a})")
    if a == 0 or a == n:
        return QPolynomial.one()
    # [n a] = [n-1 a] + q^(n-a) [n-1 a-1]
    return q_binomial(n - 1, a) + q_binomial(n - 1, a - 1).shift(n - a)


def q_multinomial(n: int, parts) -> QPolynomial:
    """[n choose a_1, ..., a_r]_q as a product of Gaussian binomials."""
    parts = [int(a) for a in parts]
    if any(a < 0 for a in parts):
        raise ValueError("q_multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"q_multinomial parts {parts} do not sum to {n}")
    out = QPolynomial.one()
    rest = n
    for a in parts:
        out = out * q_binomial(rest, a)
        rest -= a
    return out


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> QPolynomial:
    """q-Stirling number of the second kind.

    Recursion Stir_q(n,k) = Stir_q(n-1,k-1) + [k]_q Stir_q(n-1,k) with
    Stir_q(1,1) = 1 and Stir_q(1,k) = 0 for k > 1.
    """
    if n < 1 or k < 0:
        raise ValueError("q_stirling requires n >= 1 and k >= 0")
    if k > n or k == 0:
        return QPolynomial.zero()
    if n == 1:
        return QPolynomial.one() if k == 1 else QPolynomial.zero()
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


def stirling2(n: int, k: int) -> int:
    """Integer Stirling number of the second kind."""
    return q_stirling(n, k)(1) if 1 <= k <= n else (1 if n == k == 0 else 0)


def rev_q(p: QPolynomial) -> QPolynomial:
    """Reverse a q-polynomial about its own degree."""
    return p.reverse()


def mahonian_target(n: int, k: int) -> QPolynomial:
    """rev_q([k]!_q Stir_q(n,k)): the coinv/comaj distribution on k-block
    ordered set partitions of [n], and the Hilbert series of the quotient."""
    if not 1 <= k <= n:
        raise ValueError(f"mahonian_target requires 1 <= k <= n, got ({n}, {k})")
    return rev_q(q_factorial(k) * q_stirling(n, k))


def difference_count(n: int, k: int, s: int) -> int:
    """Number of functions [n] -> [k] whose image contains [s].

    sum_m C(n,m) s! Stir(m,s) (k-s)^(n-m); the s-th finite difference of
    k^n.  Gives k^n at s = 0 and k! Stir(n,k) at s = k.
    """
    if not 0 <= s <= k:
        raise ValueError(f"difference_count requires 0 <= s <= k, got s={s}, k={k}")
    if n < 0:
        raise ValueError("difference_count requires n >= 0")
    total = 0
    for m in range(n + 1):
        st = stirling2(m, s)
        if st == 0:
            continue
        total += comb(n, m) * factorial(s) * st * (k - s) ** (n - m)
    return total
