"""Symmetric functions with integer q-polynomial coefficients.

Bases: monomial (m), elementary (e), homogeneous (h), Schur (s), and the
dual Hall-Littlewood basis (qprime) whose Schur expansion is given by
Kostka-Foulkes polynomials.  Conversions route through the Schur basis and
are exact; the Kostka matrix is unitriangular with respect to dominance.

Charge is the classical Lascoux-Schutzenberger statistic: reading words go
right to left along rows, top row first; the index of a standard word bumps
when the next letter sits to the left.  This normalization has K_{ll} = 1
and is pinned by three facts checked in the tests: Kostka evaluations at
q = 1, unitriangularity, and the reproduction of the graded Frobenius
series of the classical coinvariant ring.

Also includes the symmetric group character table (Murnaghan-Nakayama),
Frobenius characters of (graded) class functions, the e_j-removal operator
adjoint to multiplication, and Gessel fundamental quasisymmetric expansions
in finitely many variables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from coinv.combinat import (
    conjugate,
    conjugacy_class_size,
    dominates,
    partitions,
)
from coinv.polyring import Poly
from coinv.qseries import QPolynomial

BASES = ("m", "e", "h", "s", "qprime")

MAX_DEGREE = 8  # keeps Kostka matrices tiny; acceptance needs degree <= 7


def _check_degree(d: int):
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the supported cap {MAX_DEGREE}")


def _as_qpoly(c) -> QPolynomial:
    if isinstance(c, QPolynomial):
        return c
    return QPolynomial((c,))


@dataclass(frozen=True)
class SymmetricFunction:
    """Basis-tagged map from partitions of `degree` to QPolynomial coeffs."""

    basis: str
    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = tuple(lam)
            if sum(lam) != self.degree:
                raise ValueError(
                    f"partition {lam} has size != degree {self.degree}"
                )
            c = _as_qpoly(c)
            if not c.is_zero():
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    # -- ring-ish operations -------------------------------------------------

    def _compat(self, other: "SymmetricFunction"):
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("basis/degree mismatch")

    def __add__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        self._compat(other)
        data = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            data[lam] = data.get(lam, QPolynomial.zero()) + c
        return SymmetricFunction(self.basis, self.degree, data)

    def __sub__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        return self + other.scale(-1)

    def scale(self, c) -> "SymmetricFunction":
        c = _as_qpoly(c)
        return SymmetricFunction(
            self.basis,
            self.degree,
            {lam: v * c for lam, v in self.coeffs.items()},
        )

    def coeff(self, lam) -> QPolynomial:
        return self.coeffs.get(tuple(lam), QPolynomial.zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        return sorted(self.coeffs.items(), key=lambda t: t[0], reverse=True)

    def max_q_degree(self) -> int:
        return max((c.degree() for c in self.coeffs.values()), default=0)

    def at_q1(self) -> dict:
        """Specialize the coefficients at q = 1."""
        return {lam: c(1) for lam, c in self.coeffs.items()}

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(
            f"({c})*{self.basis}{list(lam)}" for lam, c in self.terms()
        )

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeffs": list(c.coeffs)}
                for lam, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymmetricFunction":
        return cls(
            data["basis"],
            data["degree"],
            {
                tuple(t["partition"]): QPolynomial(t["coeffs"])
                for t in data["terms"]
            },
        )


# ---------------------------------------------------------------------------
# Kostka numbers and Kostka-Foulkes polynomials
# ---------------------------------------------------------------------------


def _ssyt(shape, content) -> list[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of the given shape and content, as row tuples.

    Rows weakly increase, columns strictly increase.
    """
    shape = tuple(shape)
    content = tuple(content)
    rows: list[list[int]] = [[] for _ in shape]
    remaining = list(content)
    out = []

    def fill(r: int):
        if r == len(shape):
            out.append(tuple(tuple(row) for row in rows))
            return
        target = shape[r]

        def cell(c: int):
            if c == target:
                fill(r + 1)
                return
            lo = rows[r][c - 1] if c else 1
            for v in range(lo, len(content) + 1):
                if remaining[v - 1] == 0:
                    continue
                if r and rows[r - 1][c] >= v:
                    continue
                rows[r].append(v)
                remaining[v - 1] -= 1
                cell(c + 1)
                remaining[v - 1] += 1
                rows[r].pop()

        cell(0)

    fill(0)
    return out


@lru_cache(maxsize=None)
def kostka_number(lam: tuple, mu: tuple) -> int:
    if sum(lam) != sum(mu):
        return 0
    if not dominates(lam, mu):
        return 0
    return len(_ssyt(lam, mu))


def _reading_word(tab) -> tuple[int, ...]:
    """Rows right to left, top row first."""
    return tuple(v for row in tab for v in reversed(row))


def charge(word) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are extracted by scanning cyclically leftward from
    the rightmost 1; the index of a standard word starts at 0 on the letter
    1 and bumps exactly when the next letter lies to the left.
    """
    w = list(word)
    total = 0
    while w:
        maxval = max(w)
        idx = max(i for i, v in enumerate(w) if v == 1)
        chosen = [idx]
        for target in range(2, maxval + 1):
            spots = [i for i, v in enumerate(w) if v == target]
            if not spots:
                raise ValueError(f"content of {word} is not a partition")
            lefts = [i for i in spots if i < idx]
            idx = max(lefts) if lefts else max(spots)
            chosen.append(idx)
        pos_of = {w[i]: rank for rank, i in enumerate(sorted(chosen))}
        c = 0
        for r in range(2, maxval + 1):
            if pos_of[r] < pos_of[r - 1]:
                c += 1
            total += c
        for i in sorted(chosen, reverse=True):
            w.pop(i)
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(lam: tuple, mu: tuple) -> QPolynomial:
    """Charge generating function over SSYT of shape lam, content mu.

    Zero unless lam dominates mu; one when lam == mu; evaluates to the
    Kostka number at q = 1.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_degree(sum(lam))
    if sum(lam) != sum(mu) or not dominates(lam, mu):
        return QPolynomial.zero()
    out = QPolynomial.zero()
    for tab in _ssyt(lam, mu):
        out = out + QPolynomial.monomial(charge(_reading_word(tab)))
    return out


# ---------------------------------------------------------------------------
# Monomial expansions of basis elements
# ---------------------------------------------------------------------------


def _pad(lam, d: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (d - len(lam))


def monomial_sym_poly(lam, nvars: int) -> Poly:
    """m_lam in nvars variables."""
    terms = {}
    for expo in set(itertools.permutations(_pad(lam, nvars))):
        terms[expo] = 1
    return Poly(nvars, terms)


@lru_cache(maxsize=None)
def _e_in_m(lam: tuple) -> dict:
    """m-expansion of e_lam as {partition: int}."""
    from coinv.polyring import elementary

    d = sum(lam)
    p = Poly.one(d) if d else Poly.one(1)
    for part in lam:
        p = p * elementary(part, range(1, d + 1), d)
    return _poly_to_m_dict(p, d)


@lru_cache(maxsize=None)
def _h_in_m(lam: tuple) -> dict:
    from coinv.polyring import homogeneous

    d = sum(lam)
    p = Poly.one(d) if d else Poly.one(1)
    for part in lam:
        p = p * homogeneous(part, range(1, d + 1), d)
    return _poly_to_m_dict(p, d)


def _poly_to_m_dict(p: Poly, degree: int) -> dict:
    """Read m-basis coefficients of a symmetric polynomial in `degree`
    variables off the partition-exponent monomials."""
    out = {}
    for lam in partitions(degree):
        c = p.coeff(_pad(lam, p.n))
        if c:
            if c.denominator != 1:
                raise AssertionError("non-integer monomial coefficient")
            out[lam] = int(c)
    return out


def _s_in_m(lam: tuple) -> dict:
    return {
        mu: kostka_number(lam, mu)
        for mu in partitions(sum(lam))
        if kostka_number(lam, mu)
    }


@lru_cache(maxsize=None)
def _m_in_s(lam: tuple) -> dict:
    """Schur expansion of m_lam (inverse Kostka row) as {partition: int}."""
    residual = {lam: 1}
    out: dict = {}
    for nu in partitions(sum(lam)):  # lex descending refines dominance
        c = residual.get(nu, 0)
        if not c:
            continue
        out[nu] = c
        for mu, k in _s_in_m(nu).items():
            residual[mu] = residual.get(mu, 0) - c * k
    if any(residual.values()):
        raise AssertionError("inverse Kostka solve left a residual")
    return out


# ---------------------------------------------------------------------------
# Basis conversions (Schur hub)
# ---------------------------------------------------------------------------


def _to_m_coeffs(f: SymmetricFunction) -> dict:
    """m-basis coefficients {partition: QPolynomial} of f."""
    if f.basis == "m":
        return dict(f.coeffs)
    if f.basis in ("e", "h", "s"):
        table = {"e": _e_in_m, "h": _h_in_m, "s": _s_in_m}[f.basis]
        out: dict = {}
        for lam, c in f.coeffs.items():
            for mu, k in table(lam).items():
                out[mu] = out.get(mu, QPolynomial.zero()) + c * k
        return {mu: c for mu, c in out.items() if not c.is_zero()}
    # qprime -> schur -> m
    return _to_m_coeffs(to_schur(f))


def to_schur(f: SymmetricFunction) -> SymmetricFunction:
    _check_degree(f.degree)
    if f.basis == "s":
        return f
    if f.basis == "qprime":
        out: dict = {}
        for mu, c in f.coeffs.items():
            for lam in partitions(f.degree):
                k = kostka_foulkes(lam, mu)
                if not k.is_zero():
                    out[lam] = out.get(lam, QPolynomial.zero()) + c * k
        return SymmetricFunction("s", f.degree, out)
    # peel the m-expansion against Kostka rows, lex-descending
    residual = _to_m_coeffs(f)
    out = {}
    for lam in partitions(f.degree):  # lex descending refines dominance
        c = residual.get(lam)
        if c is None or c.is_zero():
            continue
        out[lam] = c
        for mu, k in _s_in_m(lam).items():
            new = residual.get(mu, QPolynomial.zero()) - c * k
            residual[mu] = new
    if any(not c.is_zero() for c in residual.values()):
        raise AssertionError("m-to-Schur peel left a nonzero residual")
    return SymmetricFunction("s", f.degree, out)


def from_schur(f: SymmetricFunction, target: str) -> SymmetricFunction:
    if f.basis != "s":
        raise ValueError("from_schur expects Schur input")
    if target == "s":
        return f
    if target == "m":
        return SymmetricFunction("m", f.degree, _to_m_coeffs(f))
    if target == "qprime":
        # Q'_mu = s_mu + dominance-higher terms: peel lex-ascending
        residual = dict(f.coeffs)
        out = {}
        for mu in reversed(partitions(f.degree)):
            c = residual.get(mu)
            if c is None or c.is_zero():
                continue
            out[mu] = c
            for lam in partitions(f.degree):
                k = kostka_foulkes(lam, mu)
                if not k.is_zero():
                    new = residual.get(lam, QPolynomial.zero()) - c * k
                    residual[lam] = new
        if any(not c.is_zero() for c in residual.values()):
            raise AssertionError("Schur-to-qprime peel left a nonzero residual")
        return SymmetricFunction("qprime", f.degree, out)
    if target in ("e", "h"):
        # h-coefficients are Hall pairings with the m basis (<h_l, m_u> is
        # the identity matrix); e-coefficients are h-coefficients of omega
        g = omega(f) if target == "e" else f
        out = {}
        for lam in partitions(f.degree):
            acc = QPolynomial.zero()
            for nu, k in _m_in_s(lam).items():
                c = g.coeffs.get(nu)
                if c is not None:
                    acc = acc + c * k
            if not acc.is_zero():
                out[lam] = acc
        return SymmetricFunction(target, f.degree, out)
    raise ValueError(f"unknown basis {target!r}")


def convert(f: SymmetricFunction, target: str) -> SymmetricFunction:
    """Exact change of basis; round trips are identities."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    return from_schur(to_schur(f), target)


def to_monomial_polynomial(f: SymmetricFunction, nvars: int | None = None) -> Poly:
    """Expand a q-free symmetric function in deg(f) variables (faithful)."""
    nvars = f.degree if nvars is None else nvars
    if nvars < f.degree:
        raise ValueError("need at least deg(f) variables for faithfulness")
    out = Poly.zero(max(nvars, 1))
    for lam, c in _to_m_coeffs(f).items():
        if c.degree() > 0:
            raise ValueError("polynomial expansion needs q-free coefficients")
        out = out + monomial_sym_poly(lam, max(nvars, 1)).scale(c[0])
    return out


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def omega(f: SymmetricFunction) -> SymmetricFunction:
    """The involution sending s_lam to s_{lam'}."""
    s = to_schur(f)
    return SymmetricFunction(
        "s", s.degree, {conjugate(lam): c for lam, c in s.coeffs.items()}
    )


def rev_q_coeffs(f: SymmetricFunction, degree: int | None = None) -> SymmetricFunction:
    """Coefficientwise q-reversal about a global top degree (default: the
    maximum q-degree over all coefficients)."""
    if degree is None:
        degree = f.max_q_degree()
    return SymmetricFunction(
        f.basis,
        f.degree,
        {lam: c.reverse(degree) for lam, c in f.coeffs.items()},
    )


def qprime(mu) -> SymmetricFunction:
    """Dual Hall-Littlewood basis element in the Schur basis:
    sum_lam K_{lam,mu}(q) s_lam."""
    mu = tuple(mu)
    _check_degree(sum(mu))
    return SymmetricFunction(
        "s",
        sum(mu),
        {
            lam: kostka_foulkes(lam, mu)
            for lam in partitions(sum(mu))
            if not kostka_foulkes(lam, mu).is_zero()
        },
    )


def _vertical_strip_removals(lam, j: int):
    """Partitions mu with lam/mu a vertical strip of size j (at most one
    box removed per row)."""
    lam = tuple(lam)
    rows = len(lam)
    for drop in itertools.combinations(range(rows), j):
        mu = list(lam)
        for r in drop:
            mu[r] -= 1
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)) and all(
            v >= 0 for v in mu
        ):
            yield tuple(v for v in mu if v)


def e_perp(j: int, f: SymmetricFunction) -> SymmetricFunction:
    """Adjoint of multiplication by e_j: removes vertical j-strips from
    Schur indices."""
    if j < 0:
        raise ValueError("strip size must be nonnegative")
    s = to_schur(f)
    out: dict = {}
    for lam, c in s.coeffs.items():
        for mu in _vertical_strip_removals(lam, j):
            out[mu] = out.get(mu, QPolynomial.zero()) + c
    return SymmetricFunction("s", s.degree - j, out)


# ---------------------------------------------------------------------------
# Symmetric group characters and Frobenius images
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def sn_character(lam: tuple, mu: tuple) -> int:
    """Irreducible character chi^lam at cycle type mu (Murnaghan-Nakayama,
    via beta-number strip removal)."""
    if not lam and not mu:
        return 1
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    r = mu[0]
    rest = tuple(mu[1:])
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((x for x in beta if x != b), reverse=True)
        new.append(nb)
        new.sort(reverse=True)
        shape = tuple(v - (length - 1 - i) for i, v in enumerate(new))
        shape = tuple(v for v in shape if v)
        total += (-1) ** height * sn_character(shape, rest)
    return total


def character_table(n: int) -> dict:
    """{(lam, mu): chi^lam(mu)} over all partitions of n."""
    return {
        (lam, mu): sn_character(lam, mu)
        for lam in partitions(n)
        for mu in partitions(n)
    }


def frobenius(char: dict, n: int) -> SymmetricFunction:
    """Frobenius image of a class function on S_n, in the Schur basis.

    `char` maps cycle types to QPolynomial (or int) traces.  Multiplicities
    must come out as q-polynomials with nonnegative integer coefficients;
    anything else raises.
    """
    coeffs = {}
    order = factorial(n)
    for lam in partitions(n):
        acc: dict[int, Fraction] = {}
        for mu in partitions(n):
            tr = _as_qpoly(char.get(mu, 0))
            weight = conjugacy_class_size(mu) * sn_character(lam, mu)
            if weight == 0:
                continue
            for d, c in enumerate(tr.coeffs):
                if c:
                    acc[d] = acc.get(d, Fraction(0)) + Fraction(weight * c, order)
        top = max(acc, default=-1)
        out = []
        for d in range(top + 1):
            v = acc.get(d, Fraction(0))
            if v.denominator != 1 or v < 0:
                raise AssertionError(
                    f"multiplicity of s{list(lam)} at degree {d} is {v}"
                )
            out.append(int(v))
        poly = QPolynomial(out)
        if not poly.is_zero():
            coeffs[lam] = poly
    return SymmetricFunction("s", n, coeffs)


# ---------------------------------------------------------------------------
# Gessel fundamentals in finitely many variables
# ---------------------------------------------------------------------------


def fundamental_to_monomials(n: int, descents, nvars: int) -> Poly:
    """The fundamental quasisymmetric function F_{n,D} in nvars variables:
    the x-weight sum over weakly increasing sequences with strict rises at
    the positions of D.  Equals the weight sum over all length-n words
    whose standardization has inverse descent set D (checked in tests)."""
    descents = frozenset(descents)
    if not descents <= set(range(1, n)):
        raise ValueError(f"descent set {sorted(descents)} out of range")
    terms: dict[tuple[int, ...], int] = {}
    expo = [0] * nvars

    def walk(pos: int, minval: int):
        if pos == n:
            key = tuple(expo)
            terms[key] = terms.get(key, 0) + 1
            return
        for v in range(minval, nvars + 1):
            expo[v - 1] += 1
            walk(pos + 1, v + 1 if (pos + 1) in descents else v)
            expo[v - 1] -= 1

    walk(0, 1)
    return Poly(nvars, terms)
