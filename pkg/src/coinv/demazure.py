"""Skyline diagrams, semistandard skyline fillings, and Demazure characters.

A composition gamma of length n has an augmented skyline diagram: column i
(left to right, 1-based) has height gamma_i and sits on a basement cell with
value n - i + 1.  A semistandard skyline filling (SSK) assigns a positive
integer to every non-basement cell so that

  1. entries weakly decrease reading up each column, starting from the
     basement value, and
  2. every type A and type B triple of cells (basement cells included) is an
     inversion triple.

For columns i < j, a type A triple (requires gamma_i >= gamma_j) is
a = (i, r), b = (j, r), c = (i, r-1); a type B triple (requires
gamma_i < gamma_j) is a = (j, r+1), b = (i, r), c = (j, r).  A triple with
values a <= b <= c is a coinversion triple and is forbidden; triples with a
missing cell are skipped.

The Demazure character kappa_gamma(x_n) is the content generating function
of SSK of the REVERSED shape gamma*; reverse Demazure characters substitute
x_i -> x_{n+1-i} afterwards.  The divided-difference recursion is kept as an
independent cross-check oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from coinv.polyring import Poly


# ---------------------------------------------------------------------------
# Diagrams and fillings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkylineDiagram:
    """Column heights plus the implicit basement n, n-1, ..., 1."""

    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(int(h) for h in self.heights))
        if any(h < 0 for h in self.heights):
            raise ValueError("column heights must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.heights)

    def basement(self, col: int) -> int:
        """Basement value of column `col` (1-based)."""
        return self.n - col + 1


@dataclass(frozen=True)
class SkylineFilling:
    """A filling of a skyline diagram; columns stored bottom-to-top."""

    diagram: SkylineDiagram
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.columns) != self.diagram.n:
            raise ValueError("one entry tuple per column required")
        for h, col in zip(self.diagram.heights, self.columns):
            if len(col) != h:
                raise ValueError("column entries must match column height")

    def entry(self, col: int, row: int) -> int:
        """Value at (col, row); row 0 is the basement."""
        if row == 0:
            return self.diagram.basement(col)
        return self.columns[col - 1][row - 1]

    def content(self) -> tuple[int, ...]:
        """Multiplicity vector of the values 1..n over non-basement cells."""
        out = [0] * self.diagram.n
        for col in self.columns:
            for v in col:
                out[v - 1] += 1
        return tuple(out)

    def to_grid(self) -> list[list[int]]:
        """Row-major grid, basement row first; 0 marks absent cells."""
        d = self.diagram
        top = max(d.heights, default=0)
        grid = [[d.basement(c) for c in range(1, d.n + 1)]]
        for r in range(1, top + 1):
            grid.append(
                [
                    self.columns[c][r - 1] if r <= d.heights[c] else 0
                    for c in range(d.n)
                ]
            )
        return grid

    def is_valid(self) -> bool:
        return _columns_ok(self.diagram, self.columns) and _triples_ok(
            self.diagram, self.columns
        )


def _columns_ok(diagram: SkylineDiagram, columns) -> bool:
    for c, col in enumerate(columns, start=1):
        prev = diagram.basement(c)
        for v in col:
            if not 1 <= v <= prev:
                return False
            prev = v
    return True


def _pair_triples_ok(heights, cols, entry, i: int, j: int) -> bool:
    """Check all triples between columns i < j (1-based)."""
    gi, gj = heights[i - 1], heights[j - 1]
    if gi >= gj:
        for r in range(1, gj + 1):
            a = entry(i, r)
            b = entry(j, r)
            c = entry(i, r - 1)
            if a <= b <= c:
                return False
    else:
        for r in range(0, min(gi, gj - 1) + 1):
            a = entry(j, r + 1)
            b = entry(i, r)
            c = entry(j, r)
            if a <= b <= c:
                return False
    return True


def _triples_ok(diagram: SkylineDiagram, columns) -> bool:
    def entry(c, r):
        if r == 0:
            return diagram.basement(c)
        return columns[c - 1][r - 1]

    n = diagram.n
    return all(
        _pair_triples_ok(diagram.heights, columns, entry, i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )


def enumerate_ssk(gamma) -> list[SkylineFilling]:
    """All semistandard skyline fillings of the given shape."""
    diagram = SkylineDiagram(tuple(gamma))
    n = diagram.n
    heights = diagram.heights
    filled: list[tuple[int, ...]] = []
    out = []

    def entry(c, r):
        if r == 0:
            return diagram.basement(c)
        return filled[c - 1][r - 1]

    def column_candidates(c: int):
        top = diagram.basement(c)
        h = heights[c - 1]

        def build(prefix, bound):
            if len(prefix) == h:
                yield tuple(prefix)
                return
            for v in range(bound, 0, -1):
                prefix.append(v)
                yield from build(prefix, v)
                prefix.pop()

        yield from build([], top)

    def place(c: int):
        if c > n:
            out.append(SkylineFilling(diagram, tuple(filled)))
            return
        for col in column_candidates(c):
            filled.append(col)
            if all(
                _pair_triples_ok(heights, filled, entry, i, c)
                for i in range(1, c)
            ):
                place(c + 1)
            filled.pop()

    place(1)
    return out


# ---------------------------------------------------------------------------
# Demazure characters
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def demazure_char(gamma: tuple[int, ...]) -> Poly:
    """kappa_gamma(x_n): content generating function of SSK of shape
    gamma* (the reverse of gamma), in n = len(gamma) variables.

    Dominant gamma gives the single monomial x^gamma.
    """
    gamma = tuple(gamma)
    n = len(gamma)
    terms: dict[tuple[int, ...], int] = {}
    for filling in enumerate_ssk(tuple(reversed(gamma))):
        key = filling.content()
        terms[key] = terms.get(key, 0) + 1
    return Poly(n, terms)


def reverse_vars(f: Poly) -> Poly:
    """Substitute x_i -> x_{n+1-i}; an involution fixing symmetric polys."""
    return Poly(f.n, {tuple(reversed(m)): c for m, c in f._terms.items()})


def reverse_demazure_char(gamma: tuple[int, ...]) -> Poly:
    """kappa_gamma(x_n^*) = kappa_gamma evaluated in reversed variables."""
    return reverse_vars(demazure_char(tuple(gamma)))


@lru_cache(maxsize=None)
def demazure_char_divided_difference(gamma: tuple[int, ...]) -> Poly:
    """Independent oracle: the isobaric divided-difference recursion.

    kappa of a dominant composition is x^gamma; if gamma has an ascent at
    position i, kappa_gamma = d_i(x_i * kappa_{gamma with i, i+1 swapped}).
    """
    gamma = tuple(gamma)
    n = len(gamma)
    for i in range(n - 1):
        if gamma[i] < gamma[i + 1]:
            swapped = list(gamma)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            prev = demazure_char_divided_difference(tuple(swapped))
            xi = [0] * n
            xi[i] = 1
            return divided_difference(prev.mul_monomial(tuple(xi)), i + 1)
    return Poly(n, {gamma: 1})


def divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}) with s_i swapping x_i and x_{i+1}."""
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"divided difference index {i} out of range")
    out = Poly.zero(f.n)
    for m, c in f._terms.items():
        p, r = m[i - 1], m[i]
        if p == r:
            continue
        lo, hi, sign = (r, p, 1) if p > r else (p, r, -1)
        base = list(m)
        terms = {}
        for t in range(lo, hi):
            base[i - 1], base[i] = t, hi + lo - 1 - t
            terms[tuple(base)] = sign * c
        out = out + Poly(f.n, terms)
    return out


# ---------------------------------------------------------------------------
# Skip data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SkipData:
    """Skip monomial and skip composition of a subset S of [n].

    The skip monomial is x_{s_1}^{s_1} x_{s_2}^{s_2 - 1} ... ; its exponent
    vector is the skip composition.
    """

    subset: tuple[int, ...]
    n: int

    def __post_init__(self):
        s = tuple(sorted(set(self.subset)))
        object.__setattr__(self, "subset", s)
        if not s:
            raise ValueError("skip data needs a nonempty subset")
        if s[0] < 1 or s[-1] > self.n:
            raise ValueError(f"subset {s} not contained in [{self.n}]")

    @property
    def composition(self) -> tuple[int, ...]:
        gamma = [0] * self.n
        for j, s in enumerate(self.subset):
            gamma[s - 1] = s - j
        return tuple(gamma)

    @property
    def monomial(self) -> tuple[int, ...]:
        return self.composition


def skip_data(subset, n: int) -> SkipData:
    return SkipData(tuple(subset), n)


def skip_monomial(subset, n: int) -> tuple[int, ...]:
    return SkipData(tuple(subset), n).monomial


def skip_composition(subset, n: int) -> tuple[int, ...]:
    return SkipData(tuple(subset), n).composition


def decrement(gamma) -> tuple[int, ...]:
    """Subtract one from every nonzero part."""
    return tuple(g - 1 if g > 0 else 0 for g in gamma)


# ---------------------------------------------------------------------------
# Cell collections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CellCollection:
    """A set of (column, row) cells flagged as right-biased or left-leaning."""

    cells: frozenset[tuple[int, int]]
    kind: str  # "RB" or "LL"


def rb_collections(gamma, d: int) -> list[CellCollection]:
    """All right-biased collections of exactly d cells for gamma.

    At most one cell atop any column; within each class of equal-height
    columns the chosen columns form a suffix (right-justified).
    """
    gamma = tuple(gamma)
    if d < 0:
        raise ValueError("collection size must be nonnegative")
    classes: dict[int, list[int]] = {}
    for col, h in enumerate(gamma, start=1):
        classes.setdefault(h, []).append(col)
    class_list = sorted(classes.items())
    choices_per_class = []
    for _, cols in class_list:
        choices_per_class.append(
            [tuple(cols[len(cols) - t :]) for t in range(len(cols) + 1)]
        )
    out = []
    for pick in itertools.product(*choices_per_class):
        chosen = tuple(itertools.chain.from_iterable(pick))
        if len(chosen) != d:
            continue
        cells = frozenset((col, gamma[col - 1] + 1) for col in chosen)
        out.append(CellCollection(cells, "RB"))
    out.sort(key=lambda cc: sorted(cc.cells))
    return out


def add_collection(gamma, collection: CellCollection) -> tuple[int, ...]:
    """Union of the diagram with an RB collection: heights grow by one on
    the chosen columns."""
    out = list(gamma)
    for col, row in collection.cells:
        if row != out[col - 1] + 1:
            raise ValueError("collection does not sit atop the diagram")
        out[col - 1] += 1
    return tuple(out)


def ll_collections(gamma) -> list[CellCollection]:
    """All left-leaning collections for gamma, of every size (empty one
    included).

    Cells are top-justified runs in their columns, no two cells share a
    row, and no cell can legally move to a column further left.
    """
    gamma = tuple(gamma)
    n = len(gamma)
    out = []

    def rows(col: int, t: int) -> range:
        return range(gamma[col - 1] - t + 1, gamma[col - 1] + 1)

    def movable(ts) -> bool:
        # bottom cell of column i's run may move to column i' < i exactly
        # when it would extend i''s run from below (same row)
        for i in range(1, n + 1):
            if ts[i - 1] == 0:
                continue
            r = gamma[i - 1] - ts[i - 1] + 1
            for ip in range(1, i):
                if gamma[ip - 1] - ts[ip - 1] == r:
                    return True
        return False

    def build(col: int, ts: list[int], used_rows: set[int]):
        if col > n:
            if not movable(ts):
                cells = frozenset(
                    (c, r) for c in range(1, n + 1) for r in rows(c, ts[c - 1])
                )
                out.append(CellCollection(cells, "LL"))
            return
        for t in range(gamma[col - 1] + 1):
            rr = set(rows(col, t))
            if rr & used_rows:
                continue
            ts.append(t)
            build(col + 1, ts, used_rows | rr)
            ts.pop()

    build(1, [], set())
    out.sort(key=lambda cc: sorted(cc.cells))
    return out


def remove_collection(gamma, collection: CellCollection) -> tuple[int, ...]:
    """Set difference of the diagram with an LL collection: heights shrink
    by the run length in each column."""
    out = list(gamma)
    per_col: dict[int, int] = {}
    for col, row in collection.cells:
        per_col[col] = per_col.get(col, 0) + 1
    for col, t in per_col.items():
        top_rows = {(col, gamma[col - 1] - i) for i in range(t)}
        if not top_rows <= collection.cells:
            raise ValueError("collection is not top-justified for the diagram")
        out[col - 1] -= t
    if any(h < 0 for h in out):
        raise ValueError("collection does not fit inside the diagram")
    return tuple(out)


# ---------------------------------------------------------------------------
# The two polynomial identities
# ---------------------------------------------------------------------------


def dual_pieri(gamma, d: int) -> tuple[Poly, Poly]:
    """Demazure dual Pieri rule: returns (lhs, rhs) with
    lhs = e_d(x_n) kappa_gamma(x_n) and rhs the sum of kappa over all
    size-d right-biased additions to gamma.  The contract is lhs == rhs."""
    from coinv.polyring import elementary

    gamma = tuple(gamma)
    n = len(gamma)
    lhs = elementary(d, range(1, n + 1), n) * demazure_char(gamma)
    rhs = Poly.zero(n)
    for rho in rb_collections(gamma, d):
        rhs = rhs + demazure_char(add_collection(gamma, rho))
    return lhs, rhs


def demazure_identity_check(subset, n: int, k: int) -> tuple[Poly, Poly]:
    """The alternating-sum identity expanding kappa of a reversed skip
    composition over left-leaning removals of its decrement:

      kappa_{gamma(S)*} = sum_lam (-1)^|lam|
          kappa_{dec(gamma(S)*) - lam} * e_{n-k+1+|lam|}(x_n).

    Requires |S| = n - k + 1; returns (lhs, rhs).
    """
    from coinv.polyring import elementary

    subset = tuple(sorted(subset))
    if len(subset) != n - k + 1:
        raise ValueError(
            f"subset size {len(subset)} must equal n - k + 1 = {n - k + 1}"
        )
    gamma_rev = tuple(reversed(skip_composition(subset, n)))
    lhs = demazure_char(gamma_rev)
    dec = decrement(gamma_rev)
    rhs = Poly.zero(n)
    for lam in ll_collections(dec):
        size = len(lam.cells)
        term = demazure_char(remove_collection(dec, lam)) * elementary(
            n - k + 1 + size, range(1, n + 1), n
        )
        rhs = rhs + (term if size % 2 == 0 else -term)
    return lhs, rhs


def big_filling(gamma) -> SkylineFilling:
    """The filling with every column constant at its basement value."""
    diagram = SkylineDiagram(tuple(gamma))
    cols = tuple(
        (diagram.basement(c),) * diagram.heights[c - 1]
        for c in range(1, diagram.n + 1)
    )
    return SkylineFilling(diagram, cols)
