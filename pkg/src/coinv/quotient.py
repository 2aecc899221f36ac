"""Quotient rings of Q[x_n] by the generalized coinvariant ideals.

Provides the standard (nonskip) monomial basis, the staircase (Artin) and
descent (Garsia-Stanton) bases, Hilbert series, the insertion bijection
between ordered set partitions and standard monomials, graded characters by
normal forms, antisymmetrization ranks, and the ABR straightening data.

The predicted lex Groebner basis is the variable powers x_i^k together with
reverse Demazure characters indexed by skip compositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from coinv.combinat import (
    OrderedSetPartition,
    conjugate,
    dominates,
    partitions,
    perm_descents,
    perm_inv,
    class_representative,
    permutations_of_cycle_type,
    conjugacy_class_size,
)
from coinv.demazure import reverse_demazure_char, skip_composition
from coinv.polyring import MonomialReducer, Poly, mono_divides
from coinv.qseries import QPolynomial


# ---------------------------------------------------------------------------
# Skip divisibility helpers
# ---------------------------------------------------------------------------


def max_skip_size(expo) -> int:
    """Largest r such that some skip monomial x(S) with |S| = r divides the
    monomial with exponent vector `expo`.

    Greedy left-to-right selection: with c indices already selected,
    position i is selectable iff expo[i-1] >= i - c.  Selecting whenever
    possible maximizes the count (a standard exchange argument; verified
    against brute force in the tests).
    """
    c = 0
    for i, e in enumerate(expo, start=1):
        if e >= i - c:
            c += 1
    return c


def skip_divides(subset, expo) -> bool:
    """Does x(S) divide the monomial with exponents `expo`?"""
    return all(e >= s - j for j, (s, e) in enumerate(
        (s, expo[s - 1]) for s in sorted(subset)
    ))


# ---------------------------------------------------------------------------
# Monomial bases
# ---------------------------------------------------------------------------


def nonskip_monomials(n: int, k: int, s: int | None = None) -> list[tuple[int, ...]]:
    """All monomials divisible by no x_i^k and by no skip monomial x(S)
    with |S| = n - s + 1; the standard monomial basis of the quotient.

    s defaults to k; s = 0 drops the skip condition entirely.  Monomials
    are exponent vectors, lex ascending.
    """
    if s is None:
        s = k
    if not 0 <= s <= k <= n:
        raise ValueError(f"require 0 <= s <= k <= n, got ({n}, {k}, {s})")
    if n == 0:
        return [()]
    limit = n - s  # maximum allowed skip size
    out: list[tuple[int, ...]] = []
    expo = [0] * n

    def extend(i: int, c: int):
        # c = greedy-selected skip count among positions 1..i-1
        if c > limit:
            return
        if i > n:
            out.append(tuple(expo))
            return
        for e in range(k):
            expo[i - 1] = e
            extend(i + 1, c + 1 if e >= i - c else c)
        expo[i - 1] = 0

    extend(1, 0)
    out.sort()
    return out


def artin_monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Monomials whose exponent vector fits under some (n,k)-staircase."""
    from coinv.combinat import staircases

    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got ({n}, {k})")
    seen: set[tuple[int, ...]] = set()
    for stair in staircases(n, k):
        for expo in itertools.product(*(range(a + 1) for a in stair)):
            seen.add(expo)
    return sorted(seen)


def descent_monomial(pi) -> tuple[int, ...]:
    """Garsia-Stanton monomial of a permutation: the product over descents
    i of x_{pi_1} ... x_{pi_i}.  Exponent of x_{pi_j} is the number of
    descents at or after position j."""
    n = len(pi)
    des = perm_descents(pi)
    expo = [0] * n
    for j in range(n):
        expo[pi[j] - 1] = sum(1 for d in des if d >= j + 1)
    return tuple(expo)


def gs_monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """The generalized Garsia-Stanton monomials: gs_pi times a weakly
    decreasing tail of powers on the first n-k letters of pi, with
    des(pi) < k and tail exponents below k - des(pi)."""
    if not 1 <= k <= n:
        raise ValueError(f"require 1 <= k <= n, got ({n}, {k})")
    out = []
    for pi in itertools.permutations(range(1, n + 1)):
        des = len(perm_descents(pi))
        if des >= k:
            continue
        base = descent_monomial(pi)
        cap = k - des
        for tail in _weakly_decreasing(n - k, cap):
            expo = list(base)
            for j, e in enumerate(tail):
                expo[pi[j] - 1] += e
            out.append(tuple(expo))
    out.sort()
    return out


def _weakly_decreasing(length: int, cap: int):
    """Sequences cap > i_1 >= ... >= i_length >= 0."""
    if length == 0:
        yield ()
        return

    def build(prefix, bound):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for v in range(bound, -1, -1):
            prefix.append(v)
            yield from build(prefix, v)
            prefix.pop()

    yield from build([], cap - 1)


def hilbert_series(n: int, k: int, s: int | None = None) -> QPolynomial:
    """Degree generating function of the standard monomial basis."""
    counts: dict[int, int] = {}
    for m in nonskip_monomials(n, k, s):
        d = sum(m)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts, default=0)
    return QPolynomial([counts.get(d, 0) for d in range(top + 1)])


# ---------------------------------------------------------------------------
# The insertion bijection
# ---------------------------------------------------------------------------


def canonical_skip_set(expo, n: int, k: int) -> tuple[int, ...]:
    """The unique S of size n - k with x(S) | m(S) * m and no skip monomial
    of size n - k + 1 dividing m(S) * m; only defined for standard
    monomials.  Equals the lexicographically final valid subset."""
    if max_skip_size(expo) > n - k or any(e >= k for e in expo):
        raise ValueError(f"{expo} is not a standard monomial for ({n}, {k})")
    best = None
    for subset in itertools.combinations(range(1, n + 1), n - k):
        boosted = list(expo)
        for v in subset:
            boosted[v - 1] += 1
        if skip_divides(subset, boosted) and max_skip_size(boosted) <= n - k:
            if best is None or subset > best:
                best = subset
    if best is None:
        raise AssertionError(f"no canonical skip set for {expo}; not standard?")
    return best


def osp_to_monomial(sigma: OrderedSetPartition) -> tuple[int, ...]:
    """Recursive insertion map onto standard monomials; degree equals the
    coinversion statistic.

    Star insertions (largest letter joins block i+1) multiply by x_n^i;
    bar insertions (largest letter is the singleton block i+1) multiply by
    m(S) x_n^i for the canonical skip set S of the smaller monomial.
    """
    n, k = sigma.n, sigma.k
    if n == 1:
        return (0,)
    where = next(i for i, b in enumerate(sigma.blocks) if n in b)
    singleton = len(sigma.blocks[where]) == 1
    if singleton:
        rest = tuple(b for i, b in enumerate(sigma.blocks) if i != where)
        prev = osp_to_monomial(OrderedSetPartition(rest))
        boosted = list(prev)
        for v in canonical_skip_set(prev, n - 1, k - 1):
            boosted[v - 1] += 1
        return tuple(boosted) + (where,)
    rest = tuple(
        tuple(v for v in b if v != n) if i == where else b
        for i, b in enumerate(sigma.blocks)
    )
    prev = osp_to_monomial(OrderedSetPartition(rest))
    return prev + (where,)


def monomial_to_osp(expo, n: int, k: int) -> OrderedSetPartition:
    """Inverse of osp_to_monomial; rejects non-standard monomials."""
    expo = tuple(expo)
    if len(expo) != n:
        raise ValueError("exponent vector has wrong length")
    if any(e >= k for e in expo) or max_skip_size(expo) > n - k:
        raise ValueError(f"{expo} is not a standard monomial for ({n}, {k})")
    if n == 1:
        return OrderedSetPartition(((1,),))
    head, i = expo[:-1], expo[-1]
    if max_skip_size(head) <= (n - 1) - k:
        smaller = monomial_to_osp(head, n - 1, k)
        blocks = list(smaller.blocks)
        blocks[i] = tuple(sorted(blocks[i] + (n,)))
        return OrderedSetPartition(tuple(blocks))
    subset = _unique_skip_subset(head, n - 1, n - k)
    reduced = list(head)
    for v in subset:
        reduced[v - 1] -= 1
    smaller = monomial_to_osp(tuple(reduced), n - 1, k - 1)
    blocks = list(smaller.blocks)
    blocks.insert(i, (n,))
    return OrderedSetPartition(tuple(blocks))


def _unique_skip_subset(expo, n: int, size: int) -> tuple[int, ...]:
    found = [
        s
        for s in itertools.combinations(range(1, n + 1), size)
        if skip_divides(s, expo)
    ]
    if len(found) != 1:
        raise AssertionError(
            f"expected a unique size-{size} skip divisor of {expo}, found {found}"
        )
    return found[0]


# ---------------------------------------------------------------------------
# Two-parameter ordered set partitions
# ---------------------------------------------------------------------------


def enumerate_osps_pinned(n: int, k: int, s: int) -> list[OrderedSetPartition]:
    """Ordered set partitions of [n + k - s] with k blocks in which each big
    letter n + i sits in block s + i."""
    if not 1 <= s <= k <= n:
        raise ValueError(f"require 1 <= s <= k <= n, got ({n}, {k}, {s})")
    total = n + k - s
    out = []

    def assign(v: int, blocks: list[list[int]]):
        if v > n:
            if all(blocks):
                out.append(OrderedSetPartition(tuple(tuple(b) for b in blocks)))
            return
        remaining = n - v + 1
        empties = sum(1 for b in blocks if not b)
        if empties > remaining:
            return
        for b in blocks:
            b.append(v)
            assign(v + 1, blocks)
            b.pop()

    start = [[] for _ in range(k)]
    for i in range(1, k - s + 1):
        start[s + i - 1].append(n + i)
    assign(1, start)
    out.sort(key=lambda o: o.blocks)
    return out


# ---------------------------------------------------------------------------
# Groebner presentation of the quotient
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientPresentation:
    """The predicted lex Groebner basis and standard monomials of a
    quotient ring, with a shared monomial reducer."""

    n: int
    k: int
    s: int
    groebner: tuple[Poly, ...]
    labels: tuple[dict, ...]

    @property
    def reducer(self) -> MonomialReducer:
        red = getattr(self, "_reducer", None)
        if red is None:
            red = MonomialReducer(list(self.groebner))
            object.__setattr__(self, "_reducer", red)
        return red

    def standard_monomials(self) -> list[tuple[int, ...]]:
        return nonskip_monomials(self.n, self.k, self.s)

    def normal_form(self, f: Poly) -> Poly:
        return self.reducer.reduce_poly(f)


def groebner_subsets(n: int, k: int, s: int) -> list[tuple[int, ...]]:
    """Index sets of the reverse Demazure characters in the basis: size
    n - s + 1 subsets of [n - 1] when s = k, of [n] when s < k."""
    universe = range(1, n) if s == k else range(1, n + 1)
    return sorted(itertools.combinations(universe, n - s + 1))


def quotient_presentation(n: int, k: int, s: int | None = None) -> QuotientPresentation:
    """Build the predicted Groebner basis: variable powers first, then the
    reverse Demazure characters of reversed skip compositions."""
    if s is None:
        s = k
    if not 1 <= s <= k <= n:
        raise ValueError(f"require 1 <= s <= k <= n, got ({n}, {k}, {s})")
    gens: list[Poly] = []
    labels: list[dict] = []
    for i in range(1, n + 1):
        e = [0] * n
        e[i - 1] = k
        gens.append(Poly(n, {tuple(e): 1}))
        labels.append({"kind": "power", "variable": i, "exponent": k})
    for subset in groebner_subsets(n, k, s):
        gamma_rev = tuple(reversed(skip_composition(subset, n)))
        gens.append(reverse_demazure_char(gamma_rev))
        labels.append(
            {
                "kind": "demazure",
                "subset": list(subset),
                "composition": list(gamma_rev),
            }
        )
    return QuotientPresentation(n, k, s, tuple(gens), tuple(labels))


# ---------------------------------------------------------------------------
# Graded characters
# ---------------------------------------------------------------------------


def permute_monomial(pi, expo) -> tuple[int, ...]:
    """Action of a permutation on a monomial: x_i -> x_{pi(i)}."""
    out = [0] * len(expo)
    for i, e in enumerate(expo):
        out[pi[i] - 1] = e
    return tuple(out)


def graded_trace(pres: QuotientPresentation, pi) -> QPolynomial:
    """Trace of the permutation action on the quotient, graded by degree."""
    counts: dict[int, Fraction] = {}
    for m in pres.standard_monomials():
        image = pres.reducer.reduce_monomial(permute_monomial(pi, m))
        c = image.get(m)
        if c:
            d = sum(m)
            counts[d] = counts.get(d, 0) + c
    top = max(counts, default=0)
    coeffs = []
    for d in range(top + 1):
        c = counts.get(d, Fraction(0))
        if c.denominator != 1:
            raise AssertionError(f"non-integer trace {c} at degree {d}")
        coeffs.append(int(c))
    return QPolynomial(coeffs)


def graded_character(
    n: int, k: int, s: int | None = None, check_classes: bool = True
) -> dict[tuple[int, ...], QPolynomial]:
    """Graded character of the quotient: cycle type -> trace polynomial.

    Traces are computed on one representative per conjugacy class; with
    check_classes a second representative is verified to agree.
    """
    pres = quotient_presentation(n, k, s)
    out: dict[tuple[int, ...], QPolynomial] = {}
    for mu in partitions(n):
        rep = class_representative(mu)
        tr = graded_trace(pres, rep)
        if check_classes:
            for other in permutations_of_cycle_type(mu, limit=2):
                if other != rep:
                    if graded_trace(pres, other) != tr:
                        raise AssertionError(
                            f"trace not constant on class {mu}"
                        )
                    break
        out[mu] = tr
    return out


def character_by_degree(char: dict) -> dict[int, dict[tuple[int, ...], int]]:
    """Reshape a graded character into degree -> {cycle type: trace}."""
    top = max((p.degree() for p in char.values()), default=0)
    return {
        d: {mu: p[d] for mu, p in char.items()} for d in range(top + 1)
    }


# ---------------------------------------------------------------------------
# Antisymmetrization
# ---------------------------------------------------------------------------


def antisymmetrize_hilbert(n: int, k: int, j: int) -> QPolynomial:
    """Rank per degree of the antisymmetrizer over the last j letters
    applied to the quotient; exact Gaussian elimination over rationals."""
    if not 1 <= j <= n:
        raise ValueError(f"require 1 <= j <= n, got ({n}, {j})")
    pres = quotient_presentation(n, k, k)
    basis = pres.standard_monomials()
    index = {m: idx for idx, m in enumerate(basis)}
    by_degree: dict[int, list] = {}
    for m in basis:
        by_degree.setdefault(sum(m), []).append(m)

    last = list(range(n - j + 1, n + 1))
    group = []
    for perm in itertools.permutations(last):
        pi = list(range(1, n + 1))
        for src, dst in zip(last, perm):
            pi[src - 1] = dst
        sign = _perm_sign(perm, last)
        group.append((tuple(pi), sign))

    coeffs = []
    for d in sorted(by_degree):
        rows = []
        for m in by_degree[d]:
            acc: dict[int, Fraction] = {}
            for pi, sign in group:
                image = pres.reducer.reduce_monomial(permute_monomial(pi, m))
                for sm, sc in image.items():
                    idx = index[sm]
                    new = acc.get(idx, 0) + sign * sc
                    if new:
                        acc[idx] = new
                    else:
                        acc.pop(idx, None)
            if acc:
                rows.append(acc)
        coeffs.append(_rank(rows))
    return QPolynomial(coeffs)


def _perm_sign(image, domain) -> int:
    inv = 0
    for a in range(len(domain)):
        for b in range(a + 1, len(domain)):
            if image[a] > image[b]:
                inv += 1
    return -1 if inv % 2 else 1


def _rank(rows: list[dict]) -> int:
    """Rank of sparse rational rows by Gaussian elimination."""
    pivots: dict[int, dict] = {}
    rank = 0
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            if col in pivots:
                pivot = pivots[col]
                factor = row[col] / pivot[col]
                for c, v in pivot.items():
                    new = row.get(c, 0) - factor * v
                    if new:
                        row[c] = new
                    else:
                        row.pop(c, None)
            else:
                pivots[col] = row
                rank += 1
                break
    return rank


def gs_rank(n: int, k: int) -> int:
    """Rank of the descent-monomial images in the quotient."""
    pres = quotient_presentation(n, k, k)
    index = {m: idx for idx, m in enumerate(pres.standard_monomials())}
    rows = []
    for m in gs_monomials(n, k):
        image = pres.reducer.reduce_monomial(m)
        rows.append({index[sm]: sc for sm, sc in image.items()})
    return _rank(rows)


# ---------------------------------------------------------------------------
# ABR straightening
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StraighteningData:
    """Exponent partition, index permutation, descent vector, and the
    complementary partition of the ABR straightening step."""

    lambda_m: tuple[int, ...]
    pi_m: tuple[int, ...]
    d_m: tuple[int, ...]
    mu_m: tuple[int, ...]


def straightening_data(expo) -> StraighteningData:
    """lambda(m): sorted exponents; pi(m): variables by decreasing exponent
    (ties to the smaller index); d(m): suffix descent counts of pi(m);
    mu(m): conjugate of lambda(m) - d(m)."""
    n = len(expo)
    lam = tuple(sorted(expo, reverse=True))
    pi = tuple(sorted(range(1, n + 1), key=lambda i: (-expo[i - 1], i)))
    des = perm_descents(pi)
    d = tuple(sum(1 for t in des if t >= j + 1) for j in range(n))
    diff = tuple(a - b for a, b in zip(lam, d))
    if any(diff[i] < diff[i + 1] for i in range(n - 1)) or any(v < 0 for v in diff):
        raise AssertionError(f"lambda(m) - d(m) = {diff} is not a partition")
    mu = conjugate(tuple(v for v in diff if v))
    return StraighteningData(lam, pi, d, mu)


def straighten_check(expo) -> bool:
    """Verify the straightening relation: every monomial of
    gs_{pi(m)} e_{mu(m)}(x_n) - m is strictly below m in the ABR order
    (dominance drop, or equal shape with larger inv of the index word)."""
    from coinv.polyring import elementary

    n = len(expo)
    data = straightening_data(expo)
    prod = Poly.monomial(descent_monomial(data.pi_m))
    for part in data.mu_m:
        prod = prod * elementary(part, range(1, n + 1), n)
    diff = prod - Poly.monomial(tuple(expo))
    lam = tuple(v for v in data.lambda_m if v)
    inv_pi = perm_inv(data.pi_m)
    for mono, _ in diff.terms():
        other = straightening_data(mono)
        olam = tuple(v for v in other.lambda_m if v)
        if olam == lam:
            if not perm_inv(other.pi_m) > inv_pi:
                return False
        elif not (dominates(lam, olam) and olam != lam):
            return False
    return True
