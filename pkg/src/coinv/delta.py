"""The graded Frobenius series of the quotient rings, by four routes.

Route "delta": the inversion generating function over ordered multiset
partitions, twisted by the omega involution and a global q-reversal.
Route "fundamental": coinversion-weighted Gessel fundamentals over ordered
set partitions.  Route "syt": the Schur expansion over standard Young
tableaux with Gaussian binomial multiplicities.  Route "hl": the q-reversal
of a dual Hall-Littlewood expansion.  Route "bruteforce": the Frobenius
image of the graded character computed from normal forms.

All routes agree exactly; the agreement is the acceptance gate for the
whole construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from coinv.combinat import (
    OrderedSetPartition,
    enumerate_omps,
    enumerate_osps,
    enumerate_syt,
    ides,
    multiplicities,
    omp_inv,
    partitions,
    revword,
    syt_stats,
)
from coinv.qseries import QPolynomial, q_binomial, q_multinomial
from coinv.quotient import graded_character
from coinv.symfunc import (
    SymmetricFunction,
    convert,
    e_perp,
    frobenius,
    fundamental_to_monomials,
    omega,
    qprime,
    rev_q_coeffs,
    to_schur,
)

ROUTES = ("delta", "fundamental", "syt", "hl", "bruteforce")


def max_coinv(n: int, k: int) -> int:
    """Shared maximum of inv/coinv/maj/comaj; the global q-reversal degree."""
    return (n - k) * (k - 1) + comb(k, 2)


# ---------------------------------------------------------------------------
# Symmetric-function assembly from monomial-indexed q-counts
# ---------------------------------------------------------------------------


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def _assemble_symmetric(counts: dict, n: int) -> SymmetricFunction:
    """Build a monomial-basis symmetric function of degree n from
    {exponent vector: {q-degree: multiplicity}}, verifying symmetry.

    A failure of symmetry signals an enumeration bug and raises.
    """
    qcoeffs = {}
    for expo, per_q in counts.items():
        top = max(per_q)
        qcoeffs[expo] = QPolynomial([per_q.get(d, 0) for d in range(top + 1)])
    for expo, c in qcoeffs.items():
        sorted_expo = tuple(sorted(expo, reverse=True))
        if qcoeffs.get(sorted_expo, QPolynomial.zero()) != c:
            raise AssertionError(
                f"symmetry failure at exponent {expo}: enumeration bug"
            )
    out = {}
    for lam in partitions(n):
        if len(lam) > n:
            continue
        c = qcoeffs.get(lam + (0,) * (n - len(lam)))
        if c is not None and not c.is_zero():
            out[lam] = c
    f = SymmetricFunction("m", n, out)
    # full reconstruction check: every composition coefficient must match
    for expo, c in qcoeffs.items():
        lam = tuple(sorted((e for e in expo if e), reverse=True))
        if f.coeff(lam) != c:
            raise AssertionError(
                f"symmetry failure at exponent {expo}: enumeration bug"
            )
    return f


# ---------------------------------------------------------------------------
# Routes
# ---------------------------------------------------------------------------


def omp_inversion_series(n: int, k: int) -> SymmetricFunction:
    """Inversion generating function over all ordered multiset partitions
    of size n with k blocks, as a Schur-basis symmetric function.

    This is the common t = 0 specialization of the two combinatorial sides
    of the Delta Conjecture (inv branch).
    """
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got ({n}, {k})")
    counts: dict[tuple[int, ...], dict[int, int]] = {}
    for content in _weak_compositions(n, n):
        for mu in enumerate_omps(content, k):
            d = omp_inv(mu)
            per = counts.setdefault(content, {})
            per[d] = per.get(d, 0) + 1
    return to_schur(_assemble_symmetric(counts, n))


def grfrob_delta(n: int, k: int) -> SymmetricFunction:
    """rev_q (about the coinv maximum) of omega of the inversion series:
    the twisted Delta-Conjecture side equal to the graded Frobenius."""
    return rev_q_coeffs(omega(omp_inversion_series(n, k)), max_coinv(n, k))


def grfrob_fundamental(n: int, k: int) -> SymmetricFunction:
    """Coinversion-weighted sum of Gessel fundamentals over ordered set
    partitions, indexed by inverse descents of reverse reading words."""
    counts: dict[tuple[int, ...], dict[int, int]] = {}
    for sigma in enumerate_osps(n, k):
        d = sigma.coinv()
        word = revword(sigma.blocks)
        poly = fundamental_to_monomials(n, ides(word), n)
        for expo, c in poly._terms.items():
            per = counts.setdefault(expo, {})
            per[d] = per.get(d, 0) + int(c)
    return to_schur(_assemble_symmetric(counts, n))


def grfrob_syt(n: int, k: int) -> SymmetricFunction:
    """Schur expansion over standard Young tableaux:
    sum_T q^maj(T) [n - des(T) - 1 choose n - k]_q s_shape(T)."""
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got ({n}, {k})")
    coeffs: dict[tuple[int, ...], QPolynomial] = {}
    for tab in enumerate_syt(n):
        st = syt_stats(tab)
        if st["des"] > k - 1:
            continue
        weight = q_binomial(n - st["des"] - 1, n - k).shift(st["maj"])
        lam = st["shape"]
        coeffs[lam] = coeffs.get(lam, QPolynomial.zero()) + weight
    return SymmetricFunction("s", n, coeffs)


def hl_bracket(n: int, k: int) -> SymmetricFunction:
    """The dual Hall-Littlewood sum before reversal:
    sum over partitions of n with k parts of
    q^(sum (i-1)(lam_i - 1)) [k choose m_1, ..., m_n]_q Q'_lam."""
    total = SymmetricFunction("s", n, {})
    for lam in partitions(n):
        if len(lam) != k:
            continue
        shift = sum(i * (part - 1) for i, part in enumerate(lam))
        weight = q_multinomial(k, multiplicities(lam, upto=n)).shift(shift)
        total = total + qprime(lam).scale(weight)
    return total


def grfrob_hl(n: int, k: int) -> SymmetricFunction:
    """q-reversal of the dual Hall-Littlewood expansion; the bracket's top
    q-degree is the coinv maximum, about which the reversal is taken."""
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got ({n}, {k})")
    bracket = hl_bracket(n, k)
    top = bracket.max_q_degree()
    if top != max_coinv(n, k):
        raise AssertionError(
            f"HL bracket degree {top} != coinv maximum {max_coinv(n, k)}"
        )
    return rev_q_coeffs(bracket, top)


def grfrob_bruteforce(n: int, k: int) -> SymmetricFunction:
    """Frobenius image of the graded character computed from normal forms
    against the predicted Groebner basis."""
    return frobenius(graded_character(n, k), n)


def graded_frobenius(n: int, k: int, route: str = "delta") -> SymmetricFunction:
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    return {
        "delta": grfrob_delta,
        "fundamental": grfrob_fundamental,
        "syt": grfrob_syt,
        "hl": grfrob_hl,
        "bruteforce": grfrob_bruteforce,
    }[route](n, k)


@dataclass(frozen=True)
class DeltaResult:
    """All requested routes with the pairwise agreement matrix."""

    n: int
    k: int
    routes: dict
    agreement: dict

    def all_agree(self) -> bool:
        return all(self.agreement.values())


def compare_routes(n: int, k: int, routes=ROUTES) -> DeltaResult:
    computed = {r: graded_frobenius(n, k, r) for r in routes}
    agreement = {}
    names = list(routes)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            agreement[f"{a}~{b}"] = computed[a].coeffs == computed[b].coeffs
    return DeltaResult(n, k, computed, agreement)


# ---------------------------------------------------------------------------
# Recursions and the ungraded check
# ---------------------------------------------------------------------------


def e_perp_recursion_check(
    n: int, k: int, j: int
) -> tuple[SymmetricFunction, SymmetricFunction]:
    """Image of the graded Frobenius under the e_j-removal operator versus
    the branching sum over smaller quotients:

      lhs = e_j^perp grfrob(n, k)
      rhs = q^C(j,2) [k choose j]_q * sum_m q^((k-m)(n-j-m)) [j choose k-m]_q
            grfrob(n - j, m)

    The m = 0 term only contributes in the degenerate case j = n = k, where
    the empty symmetric function 1 stands in for grfrob(0, 0).
    """
    if not 1 <= j <= n:
        raise ValueError(f"require 1 <= j <= n, got ({n}, {j})")
    lhs = e_perp(j, grfrob_delta(n, k))
    prefix = q_binomial(k, j).shift(comb(j, 2)) if j <= k else QPolynomial.zero()
    rhs = SymmetricFunction("s", n - j, {})
    if not prefix.is_zero():
        for m in range(max(0, k - j), min(k, n - j) + 1):
            if m == 0:
                if n - j == 0:
                    inner = SymmetricFunction("s", 0, {(): QPolynomial.one()})
                else:
                    continue
            else:
                inner = grfrob_delta(n - j, m)
            weight = prefix * q_binomial(j, k - m).shift((k - m) * (n - j - m))
            rhs = rhs + inner.scale(weight)
    return lhs, rhs


def ungraded_frobenius(n: int, k: int) -> SymmetricFunction:
    """sum over partitions of n with k parts of the multinomial
    k!/(m_1! m_2! ...) times h_lam; equals the graded series at q = 1."""
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got ({n}, {k})")
    coeffs = {}
    for lam in partitions(n):
        if len(lam) != k:
            continue
        from math import factorial

        mult = factorial(k)
        for m in multiplicities(lam):
            mult //= factorial(m)
        coeffs[lam] = QPolynomial((mult,))
    return SymmetricFunction("h", n, coeffs)
