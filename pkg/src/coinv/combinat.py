"""Core combinatorial objects and statistics.

Permutations, integer partitions, weak compositions, ordered set partitions,
ordered multiset partitions, and standard Young tableaux, together with the
statistics (inv, coinv, maj, comaj, descents, reading words) that drive the
rest of the package.

Conventions: permutations are tuples in one-line notation with values 1..n;
partitions are weakly decreasing tuples; ordered set partitions store blocks
as ascending tuples (canonical form).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


def perm_descents(pi) -> tuple[int, ...]:
    """Positions i (1-based) with pi_i > pi_{i+1}."""
    return tuple(i + 1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1])


def perm_ascents(pi) -> tuple[int, ...]:
    """Positions i (1-based) with pi_i < pi_{i+1}."""
    return tuple(i + 1 for i in range(len(pi) - 1) if pi[i] < pi[i + 1])


def perm_maj(pi) -> int:
    return sum(perm_descents(pi))


def perm_inv(pi) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def lehmer_code(pi) -> tuple[int, ...]:
    """c(pi)_i = #{j < i : pi_i < pi_j}; componentwise < (0, 1, ..., n-1)."""
    return tuple(
        sum(1 for j in range(i) if pi[i] < pi[j]) for i in range(len(pi))
    )


def perm_inverse(pi) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for i, v in enumerate(pi):
        inv[v - 1] = i + 1
    return tuple(inv)


def ides(pi) -> frozenset[int]:
    """Descent set of the inverse permutation."""
    return frozenset(perm_descents(perm_inverse(pi)))


def perm_stats(pi) -> dict:
    """All standard permutation statistics in one dictionary."""
    des = perm_descents(pi)
    return {
        "des": des,
        "asc": perm_ascents(pi),
        "maj": sum(des),
        "inv": perm_inv(pi),
        "lehmer_code": lehmer_code(pi),
    }


def standardize(word) -> tuple[int, ...]:
    """The unique permutation with w_i < w_j iff pi_i < pi_j (ties go left
    to right).  The standardization of 131 is 132."""
    if not word:
        raise ValueError("cannot standardize an empty word")
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    pi = [0] * len(word)
    for rank, i in enumerate(order):
        pi[i] = rank + 1
    return tuple(pi)


def complement(pi) -> tuple[int, ...]:
    """Apply i -> n - i + 1 letterwise."""
    n = len(pi)
    return tuple(n - v + 1 for v in pi)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, lexicographically decreasing ((n,) first)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(lam) -> tuple[int, ...]:
    """Transpose of a partition."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominates(lam, mu) -> bool:
    """True iff lam >= mu in dominance order (partial sums)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicities(lam, upto: int | None = None) -> tuple[int, ...]:
    """(m_1, m_2, ...): multiplicity of each part size in lam."""
    top = upto if upto is not None else (lam[0] if lam else 0)
    out = [0] * top
    for p in lam:
        out[p - 1] += 1
    return tuple(out)


def hook_length_count(lam) -> int:
    """Number of standard Young tableaux of shape lam (hook lengths)."""
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return factorial(n) // prod


def cycle_type(pi) -> tuple[int, ...]:
    """Cycle type of a permutation as a partition."""
    n = len(pi)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = pi[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def conjugacy_class_size(mu) -> int:
    """Size of the conjugacy class of cycle type mu in S_n."""
    n = sum(mu)
    z = 1
    for part, mult in zip(*_part_mult_pairs(mu)):
        z *= part**mult * factorial(mult)
    return factorial(n) // z


def _part_mult_pairs(mu):
    parts = sorted(set(mu))
    mults = [sum(1 for p in mu if p == q) for q in parts]
    return parts, mults


def class_representative(mu) -> tuple[int, ...]:
    """A permutation of cycle type mu (consecutive cycles)."""
    pi = []
    start = 1
    for part in mu:
        cycle = list(range(start + 1, start + part)) + [start]
        pi.extend(cycle)
        start += part
    return tuple(pi)


def permutations_of_cycle_type(mu, limit: int | None = None):
    """Yield permutations of cycle type mu (up to `limit` of them)."""
    n = sum(mu)
    count = 0
    for pi in itertools.permutations(range(1, n + 1)):
        if cycle_type(pi) == tuple(mu):
            yield pi
            count += 1
            if limit is not None and count >= limit:
                return


# ---------------------------------------------------------------------------
# Ordered set partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrderedSetPartition:
    """An ordered sequence of disjoint nonempty blocks covering [n].

    Blocks are stored ascending within each block, so equality and hashing
    are canonical.  Bar and star renderings are derived views.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            for v in b:
                if v in seen:
                    raise ValueError(f"letter {v} repeated across blocks")
                seen.add(v)
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError(f"letters {sorted(seen)} do not cover [n]")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    # -- renderings ---------------------------------------------------------

    def __str__(self) -> str:
        if self.n <= 9:
            return "|".join("".join(str(v) for v in b) for b in self.blocks)
        return "|".join(",".join(str(v) for v in b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "OrderedSetPartition":
        """Parse the bar form, e.g. '24|6|135' or '2,4|6|1,3,5'."""
        blocks = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"empty block in {text!r}")
            if "," in chunk:
                blocks.append(tuple(int(v) for v in chunk.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in chunk))
        return cls(tuple(blocks))

    # -- ascent-starred encoding ---------------------------------------------

    def to_stars(self) -> tuple[tuple[int, ...], frozenset[int]]:
        """The ascent-starred pair (pi, S): pi concatenates the blocks and S
        marks the within-block joins; S is a subset of Asc(pi) of size n-k."""
        pi = tuple(v for b in self.blocks for v in b)
        stars = set()
        pos = 0
        for b in self.blocks:
            for i in range(len(b) - 1):
                stars.add(pos + i + 1)
            pos += len(b)
        return pi, frozenset(stars)

    @classmethod
    def from_stars(cls, pi, stars) -> "OrderedSetPartition":
        """Inverse of to_stars; rejects stars off the ascent set."""
        stars = frozenset(stars)
        if not stars <= set(perm_ascents(pi)):
            raise ValueError(f"stars {sorted(stars)} not contained in Asc(pi)")
        blocks: list[list[int]] = [[pi[0]]]
        for i in range(1, len(pi)):
            if i in stars:
                blocks[-1].append(pi[i])
            else:
                blocks.append([pi[i]])
        return cls(tuple(tuple(b) for b in blocks))

    # -- statistics ----------------------------------------------------------

    def max_stat(self) -> int:
        """(n-k)(k-1) + C(k,2): the shared maximum of inv and maj."""
        return (self.n - self.k) * (self.k - 1) + comb(self.k, 2)

    def inv(self) -> int:
        """Pairs i < j with i minimal in a block strictly right of j's."""
        count = 0
        for m, bm in enumerate(self.blocks):
            i = bm[0]
            for ell in range(m):
                count += sum(1 for j in self.blocks[ell] if j > i)
        return count

    def coinv(self) -> int:
        return self.max_stat() - self.inv()

    def coinv_pairs(self) -> int:
        """coinv computed by the direct pair rule (independent of inv):
        pairs a < b in different blocks, at least one minimal in its block,
        and if a's block is right of b's, only b is minimal in its block."""
        where = {}
        minimal = set()
        for idx, b in enumerate(self.blocks):
            minimal.add(b[0])
            for v in b:
                where[v] = idx
        count = 0
        for a in range(1, self.n + 1):
            for b in range(a + 1, self.n + 1):
                if where[a] == where[b]:
                    continue
                a_min, b_min = a in minimal, b in minimal
                if not (a_min or b_min):
                    continue
                if where[a] > where[b] and not (b_min and not a_min):
                    continue
                count += 1
        return count

    def maj(self) -> int:
        """maj of the ascent-starred pair: maj of the complemented word minus
        the star corrections."""
        pi, stars = self.to_stars()
        n = len(pi)
        asc = perm_ascents(pi)
        correction = sum(
            sum(1 for a in asc if a >= i) for i in stars
        )
        return perm_maj(complement(pi)) - correction

    def comaj(self) -> int:
        return self.max_stat() - self.maj()


def enumerate_osps(n: int, k: int) -> list[OrderedSetPartition]:
    """All ordered set partitions of [n] with k blocks, in lexicographic
    order of their canonical block form."""
    if k < 1 or k > n:
        raise ValueError(f"enumerate_osps requires 1 <= k <= n, got ({n}, {k})")
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

    assign(1, [[] for _ in range(k)])
    out.sort(key=lambda s: s.blocks)
    return out


# ---------------------------------------------------------------------------
# Ordered multiset partitions
# ---------------------------------------------------------------------------
# Represented as tuples of ascending tuples; blocks are sets (no repeats
# inside a block) and letters may repeat across blocks.


def omp_content(mu) -> tuple[int, ...]:
    top = max((v for b in mu for v in b), default=0)
    out = [0] * top
    for b in mu:
        for v in b:
            out[v - 1] += 1
    return tuple(out)


def enumerate_omps(content, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """All ordered multiset partitions with the given letter multiplicities
    and exactly k blocks.  Empty list when impossible."""
    if k < 0:
        raise ValueError("block count must be nonnegative")
    letters = [(i + 1, c) for i, c in enumerate(content) if c > 0]
    if sum(c for _, c in letters) < k or (k == 0 and letters):
        return []
    results = []
    blocks: list[list[int]] = [[] for _ in range(k)]

    def place(idx: int):
        if idx == len(letters):
            if all(blocks):
                results.append(tuple(tuple(b) for b in blocks))
            return
        letter, mult = letters[idx]
        if mult > k:
            return
        for chosen in itertools.combinations(range(k), mult):
            for b in chosen:
                blocks[b].append(letter)
            place(idx + 1)
            for b in chosen:
                blocks[b].pop()

    place(0)
    results.sort()
    return results


def omp_inv(mu) -> int:
    """Inversions with the same minimal-letter rule as on ordered set
    partitions: letter instances i < j with i minimal in a later block."""
    count = 0
    for m, bm in enumerate(mu):
        i = min(bm)
        for ell in range(m):
            count += sum(1 for j in mu[ell] if j > i)
    return count


def rword(mu) -> tuple[int, ...]:
    """Diagonal reading word: row r of the picture holds the r-th smallest
    letter of each block; rows are read top down, each left to right.

    rword(247|1|35|3) = 7452133.
    """
    height = max(len(b) for b in mu)
    word = []
    for r in range(height, 0, -1):
        for b in mu:
            if len(b) >= r:
                word.append(sorted(b)[r - 1])
    return tuple(word)


def revword(mu) -> tuple[int, ...]:
    return tuple(reversed(rword(mu)))


# ---------------------------------------------------------------------------
# Standard Young tableaux
# ---------------------------------------------------------------------------


def enumerate_syt_shape(lam) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux of shape lam (rows as tuples)."""
    n = sum(lam)
    rows = [[] for _ in lam]
    out = []

    def place(v: int):
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) >= lam[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue
            row.append(v)
            place(v + 1)
            row.pop()

    place(1)
    return out


def enumerate_syt(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All standard Young tableaux with n boxes, over every shape of n."""
    if n < 1:
        raise ValueError("enumerate_syt requires n >= 1")
    out = []
    for lam in partitions(n):
        out.extend(enumerate_syt_shape(lam))
    return out


def syt_shape(tab) -> tuple[int, ...]:
    return tuple(len(r) for r in tab)


def syt_descents(tab) -> tuple[int, ...]:
    """Letters i that sit in a strictly higher row than i+1."""
    row_of = {}
    for r, row in enumerate(tab):
        for v in row:
            row_of[v] = r
    n = sum(len(r) for r in tab)
    return tuple(i for i in range(1, n) if row_of[i] < row_of[i + 1])


def syt_stats(tab) -> dict:
    des = syt_descents(tab)
    return {"des": len(des), "maj": sum(des), "shape": syt_shape(tab)}


def involution_count(n: int) -> int:
    """Telephone numbers: independent oracle for the SYT count."""
    if n <= 1:
        return 1
    return involution_count(n - 1) + (n - 1) * involution_count(n - 2)


# ---------------------------------------------------------------------------
# Staircases
# ---------------------------------------------------------------------------


def staircases(n: int, k: int) -> list[tuple[int, ...]]:
    """All distinct shuffles of (0, 1, ..., k-1) with n-k copies of k-1.

    Shuffles with repeated letters are deduplicated as sequences; the
    (5,3)-staircases are the six sequences (0,1,2,2,2) ... (2,2,0,1,2).
    """
    if not 1 <= k <= n:
        raise ValueError(f"staircases requires 1 <= k <= n, got ({n}, {k})")
    ramp = tuple(range(k))
    pad = (k - 1,) * (n - k)
    seen = set()
    for positions in itertools.combinations(range(n), n - k):
        seq = []
        ramp_iter = iter(ramp)
        pos = set(positions)
        for i in range(n):
            seq.append(k - 1 if i in pos else next(ramp_iter))
        seen.add(tuple(seq))
    return sorted(seen)
