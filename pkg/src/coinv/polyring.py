"""Multivariate polynomials over exact rationals with lexicographic order.

Monomials are exponent tuples of a fixed ambient length n; x1 is the most
significant variable, so plain tuple comparison of exponent vectors IS the
lex order.  Polynomials are immutable term maps.  Includes multivariate
division (normal forms), S-polynomials, a desk-scale Buchberger, Groebner
reduction/verification, the generator lists of the studied ideals, and the
alternating elementary/homogeneous vanishing sums used to show membership
of symmetric functions in point-set ideals.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction


# -- monomial helpers (exponent tuples) -------------------------------------


def mono_one(n: int) -> tuple[int, ...]:
    return (0,) * n


def mono_mul(a, b) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b) -> tuple[int, ...]:
    """Exponent vector of x^a / x^b; requires divisibility."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError(f"{b} does not divide {a}")
    return out


def mono_lcm(a, b) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a) -> int:
    return sum(a)


def lex_compare(a, b) -> int:
    """-1, 0, 1 as x^a <, =, > x^b in lex order (x1 most significant)."""
    if a == b:
        return 0
    return -1 if a < b else 1


class Poly:
    """Polynomial with Fraction coefficients in a fixed number of variables.

    Terms are kept in a dict keyed by exponent tuple; zero coefficients are
    never stored.  Iteration (`.terms()`) is lex-descending, so leading data
    and serialization are deterministic.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        data = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if len(mono) != n:
                    raise ValueError(f"monomial {mono} has wrong length for n={n}")
                coeff = Fraction(coeff)
                if coeff:
                    new = data.get(mono, 0) + coeff
                    if new:
                        data[mono] = new
                    else:
                        data.pop(mono, None)
        self._terms = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls(n, {mono_one(n): 1})

    @classmethod
    def constant(cls, n: int, c) -> "Poly":
        return cls(n, {mono_one(n): Fraction(c)})

    @classmethod
    def variable(cls, i: int, n: int) -> "Poly":
        """x_i (1-based) in ambient n."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, expo, coeff=1) -> "Poly":
        return cls(len(expo), {tuple(expo): Fraction(coeff)})

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def terms(self):
        """(monomial, coefficient) pairs, lex-descending."""
        return [(m, self._terms[m]) for m in sorted(self._terms, reverse=True)]

    def monomials(self):
        return sorted(self._terms, reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Lex-leading (monomial, coefficient); rejects the zero polynomial."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self._terms)
        return m, self._terms[m]

    def leading_monomial(self) -> tuple[int, ...]:
        return self.leading_term()[0]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(mono_deg(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self._terms}
        return len(degs) <= 1

    def top_component(self) -> "Poly":
        """Homogeneous component of top total degree."""
        d = self.total_degree()
        return Poly(self.n, {m: c for m, c in self._terms.items() if mono_deg(m) == d})

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly(self.n, {m: c for m, c in self._terms.items() if mono_deg(m) == d})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.n, other)
        self._check(other)
        data = dict(self._terms)
        for m, c in other._terms.items():
            new = data.get(m, 0) + c
            if new:
                data[m] = new
            else:
                data.pop(m, None)
        out = Poly(self.n)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = Poly(self.n)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        data = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                new = data.get(m, 0) + c1 * c2
                if new:
                    data[m] = new
                else:
                    data.pop(m, None)
        out = Poly(self.n)
        out._terms = data
        return out

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        out = Poly(self.n)
        if c:
            out._terms = {m: c * v for m, v in self._terms.items()}
        return out

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_term()[1])

    def mul_monomial(self, mono, coeff=1) -> "Poly":
        out = Poly(self.n)
        coeff = Fraction(coeff)
        out._terms = {mono_mul(m, mono): c * coeff for m, c in self._terms.items()}
        return out

    def substitute_variables(self, images: list["Poly"]) -> "Poly":
        """Replace x_i by images[i-1] (all in the same ambient ring)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        out = Poly.zero(images[0].n if images else self.n)
        for m, c in self._terms.items():
            term = Poly.constant(out.n, c)
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * images[i]
            out = out + term
        return out

    # -- display / serialization ----------------------------------------------

    def __repr__(self) -> str:
        return f"Poly(n={self.n}, {str(self)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for mono, coeff in self.terms():
            vars_part = "*".join(
                f"x{i+1}" if e == 1 else f"x{i+1}^{e}"
                for i, e in enumerate(mono)
                if e
            )
            mag = abs(coeff)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exp": list(m), "num": c.numerator, "den": c.denominator}
                for m, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        return cls(
            data["n"],
            {
                tuple(t["exp"]): Fraction(t["num"], t.get("den", 1))
                for t in data["terms"]
            },
        )

    _TERM_RE = re.compile(r"^\s*([+-])?\s*([^+-]+)")

    @classmethod
    def parse(cls, text: str, n: int) -> "Poly":
        """Parse the text form, e.g. 'x1^2*x3 - 1/2*x2'."""
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        terms = {}
        pos = 0
        while pos < len(text):
            m = cls._TERM_RE.match(text[pos:])
            if not m:
                raise ValueError(f"parse error at offset {pos} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2).strip()
            pos += m.end()
            coeff = Fraction(sign)
            expo = [0] * n
            for factor in body.split("*"):
                factor = factor.strip()
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                if factor[0] == "x":
                    if "^" in factor:
                        var, power = factor[1:].split("^")
                    else:
                        var, power = factor[1:], "1"
                    idx = int(var)
                    if not 1 <= idx <= n:
                        raise ValueError(f"variable x{idx} out of range for n={n}")
                    expo[idx - 1] += int(power)
                else:
                    coeff *= Fraction(factor)
            key = tuple(expo)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(n, terms)


# -- symmetric polynomial generators ----------------------------------------


def elementary(d: int, var_indices, n: int) -> Poly:
    """e_d in the given variables (1-based indices), ambient n.

    e_0 = 1; e_d = 0 when d exceeds the number of variables.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    idx = sorted(var_indices)
    if d > len(idx):
        return Poly.zero(n)
    terms = {}
    for combo in itertools.combinations(idx, d):
        e = [0] * n
        for i in combo:
            e[i - 1] = 1
        terms[tuple(e)] = 1
    return Poly(n, terms)


def homogeneous(d: int, var_indices, n: int) -> Poly:
    """h_d in the given variables (1-based indices), ambient n."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    idx = sorted(var_indices)
    if d > 0 and not idx:
        return Poly.zero(n)
    terms = {}
    for combo in itertools.combinations_with_replacement(idx, d):
        e = [0] * n
        for i in combo:
            e[i - 1] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return Poly(n, terms)


# -- division and Groebner machinery -----------------------------------------


def normal_form(f: Poly, gens) -> Poly:
    """Remainder of f under multivariate division by `gens`.

    Deterministic strategy: repeatedly reduce the lex-largest reducible
    monomial, using the first generator (in listed order) whose leading
    monomial divides it.  No monomial of the result is divisible by any
    generator's leading monomial.
    """
    gens = [g for g in gens if not g.is_zero()]
    leads = [g.leading_term() for g in gens]
    work = dict(f._terms)
    result = {}

    while work:
        m = max(work)
        c = work.pop(m)
        for g, (lm, lc) in zip(gens, leads):
            if mono_divides(lm, m):
                u = mono_div(m, lm)
                factor = c / lc
                for gm, gc in g._terms.items():
                    if gm == lm:
                        continue
                    key = mono_mul(u, gm)
                    new = work.get(key, 0) - factor * gc
                    if new:
                        work[key] = new
                    else:
                        work.pop(key, None)
                break
        else:
            result[m] = c
    out = Poly(f.n)
    out._terms = result
    return out


class MonomialReducer:
    """Memoized normal forms of single monomials against a fixed basis.

    Used by the quotient-ring computations, where thousands of monomial
    normal forms against the same (homogeneous) Groebner basis are needed.
    Results agree with normal_form because remainders against a Groebner
    basis are unique; for non-Groebner inputs use normal_form directly.
    """

    def __init__(self, gens):
        self.gens = [g for g in gens if not g.is_zero()]
        self.leads = [g.leading_term() for g in self.gens]
        self.n = self.gens[0].n if self.gens else 0
        self._cache: dict[tuple[int, ...], dict] = {}

    def reduce_monomial(self, mono) -> dict:
        """Normal form of x^mono as a dict {standard monomial: Fraction}."""
        cached = self._cache.get(mono)
        if cached is not None:
            return cached
        # iterative post-order DFS over the reduction dag
        stack = [mono]
        while stack:
            m = stack[-1]
            if m in self._cache:
                stack.pop()
                continue
            for g, (lm, lc) in zip(self.gens, self.leads):
                if mono_divides(lm, m):
                    u = mono_div(m, lm)
                    children = []
                    expansion = []
                    for gm, gc in g._terms.items():
                        if gm == lm:
                            continue
                        key = mono_mul(u, gm)
                        expansion.append((key, -gc / lc))
                        if key not in self._cache:
                            children.append(key)
                    if children:
                        stack.extend(children)
                    else:
                        combined: dict = {}
                        for key, coeff in expansion:
                            for sm, sc in self._cache[key].items():
                                new = combined.get(sm, 0) + coeff * sc
                                if new:
                                    combined[sm] = new
                                else:
                                    combined.pop(sm, None)
                        self._cache[m] = combined
                        stack.pop()
                    break
            else:
                self._cache[m] = {m: Fraction(1)}
                stack.pop()
        return self._cache[mono]

    def reduce_poly(self, f: Poly) -> Poly:
        data: dict = {}
        for m, c in f._terms.items():
            for sm, sc in self.reduce_monomial(m).items():
                new = data.get(sm, 0) + c * sc
                if new:
                    data[sm] = new
                else:
                    data.pop(sm, None)
        out = Poly(f.n)
        out._terms = data
        return out


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """S(f, g) = (lcm/in f) f / lc(f) - (lcm/in g) g / lc(g)."""
    lmf, lcf = f.leading_term()
    lmg, lcg = g.leading_term()
    lcm = mono_lcm(lmf, lmg)
    return f.mul_monomial(mono_div(lcm, lmf), Fraction(1) / lcf) - g.mul_monomial(
        mono_div(lcm, lmg), Fraction(1) / lcg
    )


def is_groebner(gens, progress=None) -> bool:
    """Check that every S-polynomial of the list reduces to 0."""
    gens = [g for g in gens if not g.is_zero()]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not normal_form(s_polynomial(gens[i], gens[j]), gens).is_zero():
                return False
            if progress is not None:
                progress(i, j)
    return True


def buchberger(gens) -> list[Poly]:
    """Desk-scale Buchberger with the coprime-leading-term and chain
    criteria.  Deterministic pair selection by lcm in lex order."""
    basis = [g.monic() for g in gens if not g.is_zero()]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lead(i):
        return basis[i].leading_monomial()

    while pairs:
        i, j = min(pairs, key=lambda p: (mono_lcm(lead(p[0]), lead(p[1])), p))
        pairs.discard((i, j))
        lcm = mono_lcm(lead(i), lead(j))
        # coprime criterion
        if lcm == mono_mul(lead(i), lead(j)):
            continue
        # chain criterion: some l with lead(l) | lcm and both other pairs done
        if any(
            l not in (i, j)
            and mono_divides(lead(l), lcm)
            and (min(i, l), max(i, l)) not in pairs
            and (min(j, l), max(j, l)) not in pairs
            for l in range(len(basis))
        ):
            continue
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not r.is_zero():
            basis.append(r.monic())
            new = len(basis) - 1
            pairs.update((i2, new) for i2 in range(new))
    return basis


def reduce_gb(gens) -> list[Poly]:
    """Autoreduce a Groebner basis to the unique reduced basis.

    Repeatedly replaces each element by its normal form against the others
    until a fixpoint; zeros are dropped and leading coefficients normalized.
    Output is sorted by leading monomial (lex ascending).
    """
    basis = [g.monic() for g in gens if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            g = basis[i]
            if g is None:
                continue
            others = [h for j, h in enumerate(basis) if j != i and h is not None]
            r = normal_form(g, others)
            r = r.monic()
            if r != g:
                changed = True
                basis[i] = r if not r.is_zero() else None
        basis = [g for g in basis if g is not None]
    basis.sort(key=lambda g: g.leading_monomial())
    return basis


def is_reduced_gb(gens) -> bool:
    """Monic leading coefficients and no monomial of g_j divisible by the
    leading monomial of g_i for i != j."""
    gens = list(gens)
    for g in gens:
        if g.is_zero() or g.leading_term()[1] != 1:
            return False
    for i, g in enumerate(gens):
        lm = g.leading_monomial()
        for j, h in enumerate(gens):
            if i == j:
                continue
            if any(mono_divides(lm, m) for m in h._terms):
                return False
    return True


# -- ideals -------------------------------------------------------------------


class IdealPresentation:
    """A named generator list for an ideal of Q[x_1..x_n]."""

    def __init__(self, n: int, generators):
        self.n = n
        self.generators = [g for g in generators if not g.is_zero()]
        if not self.generators:
            raise ValueError("ideal presentation needs at least one nonzero generator")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def ideal_generators(n: int, k: int, s: int | None = None) -> IdealPresentation:
    """Generators of the studied ideal: the variable powers x_i^k together
    with e_n, e_{n-1}, ..., e_{n-s+1} (s = k for the one-parameter family).

    s = 0 is allowed and gives the powers alone.
    """
    if s is None:
        s = k
    if not (0 <= s <= k <= n):
        raise ValueError(f"require 0 <= s <= k <= n, got ({n}, {k}, {s})")
    all_vars = range(1, n + 1)
    gens = []
    for i in all_vars:
        e = [0] * n
        e[i - 1] = k
        gens.append(Poly(n, {tuple(e): 1}))
    for r in range(n, n - s, -1):
        gens.append(elementary(r, all_vars, n))
    return IdealPresentation(n, gens)


# -- vanishing sums -----------------------------------------------------------


def _elementary_values(values, upto: int) -> list[Fraction]:
    """Coefficients e_0..e_upto of prod (1 + t v) for numeric values."""
    coeffs = [Fraction(1)] + [Fraction(0)] * upto
    for v in values:
        v = Fraction(v)
        for d in range(upto, 0, -1):
            coeffs[d] += v * coeffs[d - 1]
    return coeffs


def _homogeneous_values(values, upto: int) -> list[Fraction]:
    """h_0..h_upto of the given numeric values."""
    coeffs = [Fraction(1)] + [Fraction(0)] * upto
    for v in values:
        v = Fraction(v)
        for d in range(1, upto + 1):
            coeffs[d] += v * coeffs[d - 1]
    return coeffs


def vanishing_sum(alphas, betas, r: int) -> Fraction:
    """sum_j (-1)^j e_{r-j}(betas) h_j(alphas); zero whenever the beta
    multiset has value set equal to {alphas} and r > len(betas) - len(alphas).
    """
    alphas = [Fraction(a) for a in alphas]
    if len(set(alphas)) != len(alphas):
        raise ValueError("alphas must be distinct")
    e = _elementary_values(betas, r)
    h = _homogeneous_values(alphas, r)
    return sum((-1) ** j * e[r - j] * h[j] for j in range(r + 1))


def vanishing_poly(alphas, r: int, n: int) -> Poly:
    """sum_j (-1)^j h_j(alphas) e_{r-j}(x_1..x_n): a polynomial whose top
    degree component is e_r(x_n) and which vanishes on points with
    coordinate set {alphas}."""
    alphas = [Fraction(a) for a in alphas]
    if len(set(alphas)) != len(alphas):
        raise ValueError("alphas must be distinct")
    h = _homogeneous_values(alphas, r)
    out = Poly.zero(n)
    for j in range(r + 1):
        coeff = (-1) ** j * h[j]
        if coeff:
            out = out + elementary(r - j, range(1, n + 1), n).scale(coeff)
    return out
