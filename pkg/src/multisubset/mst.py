"""Multi-subset transform of a family of set functions.

Given f_1, ..., f_n on subsets of {0, ..., n-1}, the transform is

    g(T) = sum over S subseteq T of ( prod over i in T of f_i(S) ).

`mst_naive` evaluates the definition directly.  The three fast variants
route all or part of the work through rectangular matrix multiplication
after splitting the ground set in half: each (T, S) term factors as a
product of a part-1 bracket and a part-2 bracket, so summing over a set
of columns S is a rectangular product between the two bracket matrices.

* `mst_columns` sends every column of popcount <= floor(sigma*n) through
  one big rectangular multiplication and finishes the large columns by a
  direct superset scan.
* `mst_rows_columns` additionally trims the matrix rows: the product is
  only taken over row halves larger than a threshold, and the remaining
  (small-row, small-column) pairs are folded into the direct scan.
* `mst_cover_columns` chops the small-column work into blocks indexed by
  greedy covering designs so each rectangular product is dense.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bitops import bits_of, subsets_of_size
from .cover import greedy_cover
from .ring import Ring
from .rmm import ClassicalBackend, RmmBackend, SubMatrix
from .setfn import Family, SetFunction

# Optimized column-fraction for the plain columns algorithm, and the
# (row, column) fractions for the row-trimmed variant.  See analysis.py
# for the optimization that produces them.
COLUMNS_SIGMA = 0.3642045
ROWS_COLUMNS_TAU = 0.59777
ROWS_COLUMNS_SIGMA = 0.38185

ALGORITHMS = ("naive", "columns", "rows-columns", "cover")


@dataclass(frozen=True)
class GroundSplit:
    """Halving of the ground set: part 1 = low bits, part 2 = high bits."""

    n: int
    h1: int

    @classmethod
    def for_n(cls, n: int) -> "GroundSplit":
        return cls(n, (n + 1) // 2)

    @property
    def h2(self) -> int:
        return self.n - self.h1

    @property
    def u1_mask(self) -> int:
        return (1 << self.h1) - 1

    @property
    def u2_mask(self) -> int:
        return ((1 << self.n) - 1) ^ self.u1_mask


@dataclass
class PipelineStats:
    """Structural work counters (not ring operations; see CountingRing)."""

    pair_iterations: int = 0
    rmm_muls: int = 0
    columns_processed: int = 0


@dataclass
class PartialResult:
    """Transform contribution from a subset of (T, S) pairs."""

    n: int
    values: list

    def add_into(self, ring: Ring, acc: list) -> None:
        for idx, v in enumerate(self.values):
            acc[idx] = ring.add(acc[idx], v)


def _guarded_floor(x: float) -> int:
    # floor() after nudging past float error, so e.g. 0.6 * 5 lands on 3.
    return math.floor(x + 1e-9)


def _require_open(value: float, lo: float, hi: float, name: str) -> None:
    if not (lo < value < hi):
        raise ValueError(f"{name} must lie strictly between {lo:.4g} and {hi:.4g}")


def mst_naive(fam: Family, stats: PipelineStats | None = None) -> SetFunction:
    """Direct evaluation over all 3^n (T, S subseteq T) pairs."""
    ring = fam.ring
    n = fam.n
    members = [m.values for m in fam.members]
    add, mul = ring.add, ring.mul
    one = ring.one
    g = []
    pairs = 0
    for t_mask in range(1 << n):
        bits = bits_of(t_mask)
        acc = ring.zero
        s_mask = t_mask
        while True:
            prod = one
            for i in bits:
                prod = mul(prod, members[i][s_mask])
            acc = add(acc, prod)
            pairs += 1
            if s_mask == 0:
                break
            s_mask = (s_mask - 1) & t_mask
        g.append(acc)
    if stats is not None:
        stats.pair_iterations += pairs
    return SetFunction(ring, n, g)


def build_submatrix(
    fam: Family, split: GroundSplit, part: int, rows: list[int], cols: list[int]
) -> SubMatrix:
    """Bracket matrix for one half of the split.

    Entry (T_p, S) is prod over i in T_p of f_i(S) when S's part-p bits
    lie inside T_p, and zero otherwise (the bracket).  Row masks must
    stay within their own half of the ground set.
    """
    if part not in (1, 2):
        raise ValueError("part must be 1 or 2")
    ring = fam.ring
    part_mask = split.u1_mask if part == 1 else split.u2_mask
    members = [m.values for m in fam.members]
    mul = ring.mul
    zero, one = ring.zero, ring.one
    entries = []
    for t_mask in rows:
        if t_mask & ~part_mask:
            raise ValueError(f"row mask {t_mask:#x} is not within part {part}")
        bits = bits_of(t_mask)
        row = []
        for s_mask in cols:
            if (s_mask & part_mask) & ~t_mask:
                row.append(zero)
            elif not bits:
                row.append(one)
            else:
                v = members[bits[0]][s_mask]
                for i in bits[1:]:
                    v = mul(v, members[i][s_mask])
                row.append(v)
        entries.append(row)
    return SubMatrix(list(rows), list(cols), entries)


def _fast_rmm_into(
    fam: Family,
    split: GroundSplit,
    rows1: list[int],
    cols: list[int],
    rows2: list[int],
    backend: RmmBackend,
    g: list,
    stats: PipelineStats | None,
) -> None:
    if not rows1 or not rows2 or not cols:
        return
    e1 = build_submatrix(fam, split, 1, rows1, cols)
    e2 = build_submatrix(fam, split, 2, rows2, cols)
    product = backend.multiply(fam.ring, e1, e2, stats)
    add = fam.ring.add
    for i, t1 in enumerate(rows1):
        row = product[i]
        for j, t2 in enumerate(rows2):
            idx = t1 | t2
            g[idx] = add(g[idx], row[j])


def fast_rmm(
    fam: Family,
    split: GroundSplit,
    rows1: list[int],
    cols: list[int],
    rows2: list[int],
    backend: RmmBackend | None = None,
    stats: PipelineStats | None = None,
) -> PartialResult:
    """Sum the contribution of the given columns to every T1 | T2 cell."""
    backend = backend or ClassicalBackend()
    g = [fam.ring.zero] * (1 << fam.n)
    _fast_rmm_into(fam, split, rows1, cols, rows2, backend, g, stats)
    return PartialResult(fam.n, g)


def _direct_scan(
    fam: Family,
    cols: list[int],
    g: list,
    stats: PipelineStats | None,
    split: GroundSplit | None = None,
    thresholds: tuple[int, int] | None = None,
) -> None:
    """Accumulate g[T] += prod_{i in T} f_i(S) for each S in cols, T superset S.

    Supersets are enumerated by a DFS that extends the running product by
    one factor per added element.  When row thresholds (t1, t2) are given,
    any T whose half-sizes both exceed them is skipped along with its whole
    superset subtree (the condition is monotone), because the trimmed
    matrix product covers those pairs.
    """
    ring = fam.ring
    n = fam.n
    members = [m.values for m in fam.members]
    add, mul = ring.add, ring.mul
    pairs = 0
    for s_mask in cols:
        col = [mv[s_mask] for mv in members]
        base = ring.one
        for i in bits_of(s_mask):
            base = mul(base, col[i])
        free = [i for i in range(n) if not (s_mask >> i) & 1]
        nfree = len(free)

        if thresholds is None:

            def visit(t_mask, prod, start):
                nonlocal pairs
                g[t_mask] = add(g[t_mask], prod)
                pairs += 1
                for idx in range(start, nfree):
                    b = free[idx]
                    visit(t_mask | (1 << b), mul(prod, col[b]), idx + 1)

            visit(s_mask, base, 0)
        else:
            t1, t2 = thresholds
            u1 = split.u1_mask
            in_part1 = [(1 << b) & u1 != 0 for b in free]
            c1_root = (s_mask & u1).bit_count()
            c2_root = s_mask.bit_count() - c1_root

            def visit_trimmed(t_mask, prod, start, c1, c2):
                nonlocal pairs
                if c1 > t1 and c2 > t2:
                    return
                g[t_mask] = add(g[t_mask], prod)
                pairs += 1
                for idx in range(start, nfree):
                    b = free[idx]
                    if in_part1[idx]:
                        visit_trimmed(t_mask | (1 << b), mul(prod, col[b]), idx + 1, c1 + 1, c2)
                    else:
                        visit_trimmed(t_mask | (1 << b), mul(prod, col[b]), idx + 1, c1, c2 + 1)

            visit_trimmed(s_mask, base, 0, c1_root, c2_root)
    if stats is not None:
        stats.pair_iterations += pairs


def columns_directly(
    fam: Family, cols: list[int], stats: PipelineStats | None = None
) -> PartialResult:
    """Contribution of the given columns via the superset scan."""
    g = [fam.ring.zero] * (1 << fam.n)
    _direct_scan(fam, cols, g, stats)
    return PartialResult(fam.n, g)


def rows_trimmed(
    fam: Family,
    split: GroundSplit,
    tau: float,
    cols: list[int],
    backend: RmmBackend | None = None,
    stats: PipelineStats | None = None,
) -> PartialResult:
    """Contribution of the given columns with row-threshold trimming."""
    if not 0.0 <= tau <= 1.0:
        raise ValueError("tau must lie in [0, 1]")
    backend = backend or ClassicalBackend()
    g = [fam.ring.zero] * (1 << fam.n)
    _rows_trimmed_into(fam, split, tau, cols, backend, g, stats)
    return PartialResult(fam.n, g)


def row_thresholds(split: GroundSplit, tau: float) -> tuple[int, int]:
    return _guarded_floor(tau * split.h1), _guarded_floor(tau * split.h2)


def _rows_trimmed_into(
    fam: Family,
    split: GroundSplit,
    tau: float,
    cols: list[int],
    backend: RmmBackend,
    g: list,
    stats: PipelineStats | None,
) -> None:
    t1, t2 = row_thresholds(split, tau)
    _direct_scan(fam, cols, g, stats, split=split, thresholds=(t1, t2))
    rows1 = [t for t in range(1 << split.h1) if t.bit_count() > t1]
    rows2 = [t << split.h1 for t in range(1 << split.h2) if t.bit_count() > t2]
    _fast_rmm_into(fam, split, rows1, cols, rows2, backend, g, stats)


def small_large_columns(n: int, s0: int) -> tuple[list[int], list[int]]:
    small, large = [], []
    for s_mask in range(1 << n):
        (small if s_mask.bit_count() <= s0 else large).append(s_mask)
    return small, large


def mst_columns(
    fam: Family,
    sigma: float = COLUMNS_SIGMA,
    backend: RmmBackend | None = None,
    stats: PipelineStats | None = None,
) -> SetFunction:
    """Columns algorithm: small columns via one rectangular product."""
    _require_open(sigma, 1.0 / 3.0, 1.0 / 2.0, "sigma")
    backend = backend or ClassicalBackend()
    n = fam.n
    split = GroundSplit.for_n(n)
    s0 = _guarded_floor(sigma * n)
    small, large = small_large_columns(n, s0)
    g = [fam.ring.zero] * (1 << n)
    rows1 = list(range(1 << split.h1))
    rows2 = [t << split.h1 for t in range(1 << split.h2)]
    _fast_rmm_into(fam, split, rows1, small, rows2, backend, g, stats)
    if stats is not None:
        stats.columns_processed += len(small)
    _direct_scan(fam, large, g, stats)
    return SetFunction(fam.ring, n, g)


def mst_rows_columns(
    fam: Family,
    sigma: float = ROWS_COLUMNS_SIGMA,
    tau: float = ROWS_COLUMNS_TAU,
    backend: RmmBackend | None = None,
    stats: PipelineStats | None = None,
) -> SetFunction:
    """Rows-and-columns algorithm: trimmed rows on the small columns."""
    _require_open(sigma, 1.0 / 3.0, 1.0 / 2.0, "sigma")
    _require_open(tau, 1.0 / 2.0, 2.0 / 3.0, "tau")
    backend = backend or ClassicalBackend()
    n = fam.n
    split = GroundSplit.for_n(n)
    s0 = _guarded_floor(sigma * n)
    small, large = small_large_columns(n, s0)
    g = [fam.ring.zero] * (1 << n)
    _rows_trimmed_into(fam, split, tau, small, backend, g, stats)
    if stats is not None:
        stats.columns_processed += len(small)
    _direct_scan(fam, large, g, stats)
    return SetFunction(fam.ring, n, g)


class TrivialCoverPlanner:
    """Always uses the whole half as the single block (k_p = h_p)."""

    def select(self, split: GroundSplit, s1: int, s2: int) -> tuple[int, int]:
        return split.h1, split.h2


class MeasuredCostPlanner:
    """Chooses block sizes by grid-searching a classical cost model.

    The model charges (estimated blocks_1 * blocks_2) block pairs, each
    costing R1*C*R2 kernel products plus C*(R1 + R2) matrix-build work,
    where R_p counts rows meeting the block and C counts in-block column
    pairs.  Ties go to the lexicographically smallest (k1, k2).
    """

    def select(self, split: GroundSplit, s1: int, s2: int) -> tuple[int, int]:
        best = (split.h1, split.h2)
        best_cost = None
        for k1 in range(s1, split.h1 + 1):
            for k2 in range(s2, split.h2 + 1):
                cost = _block_cost(split.h1, split.h2, s1, s2, k1, k2)
                if best_cost is None or cost < best_cost:
                    best = (k1, k2)
                    best_cost = cost
        return best


def _cover_size_estimate(v: int, k: int, s: int) -> int:
    per_block = math.comb(k, s)
    lower = math.comb(v, s) / per_block
    if per_block > 1:
        est = math.ceil((1.0 + math.log(per_block)) * lower)
    else:
        est = math.ceil(lower)
    return max(1, min(math.comb(v, k), est))


def _rows_meeting(h: int, k: int, s: int) -> int:
    # rows T_p with |T_p intersect K_p| >= s, for any fixed k-subset K_p
    hits = sum(math.comb(k, j) for j in range(s, k + 1))
    return hits << (h - k)


def _block_cost(h1: int, h2: int, s1: int, s2: int, k1: int, k2: int) -> float:
    r1 = _rows_meeting(h1, k1, s1)
    r2 = _rows_meeting(h2, k2, s2)
    width = math.comb(k1, s1) * math.comb(k2, s2)
    blocks = _cover_size_estimate(h1, k1, s1) * _cover_size_estimate(h2, k2, s2)
    return blocks * (r1 * width * r2 + width * (r1 + r2))


def mst_cover_columns(
    fam: Family,
    planner=None,
    backend: RmmBackend | None = None,
    stats: PipelineStats | None = None,
) -> SetFunction:
    """Cover-columns algorithm: dense blocks from greedy covering designs.

    Columns are processed in rounds by (popcount in part 1, popcount in
    part 2); covering designs tile each round into block pairs, and a
    covered-set keeps every column's contribution counted exactly once.
    """
    planner = planner or MeasuredCostPlanner()
    backend = backend or ClassicalBackend()
    ring = fam.ring
    n = fam.n
    split = GroundSplit.for_n(n)
    h1, h2 = split.h1, split.h2
    g = [ring.zero] * (1 << n)
    covered = bytearray(1 << n)
    for s1 in range(h1 + 1):
        for s2 in range(h2 + 1):
            k1, k2 = planner.select(split, s1, s2)
            if not (s1 <= k1 <= h1 and s2 <= k2 <= h2):
                raise ValueError(f"planner chose invalid block sizes ({k1}, {k2})")
            design1 = greedy_cover(h1, k1, s1)
            design2 = greedy_cover(h2, k2, s2)
            for key1 in design1.blocks:
                cols1 = list(subsets_of_size(key1, s1))
                rows1 = [t for t in range(1 << h1) if (t & key1).bit_count() >= s1]
                for key2 in design2.blocks:
                    cols = []
                    for m1 in cols1:
                        for m2 in subsets_of_size(key2, s2):
                            c = m1 | (m2 << h1)
                            if not covered[c]:
                                cols.append(c)
                    if not cols:
                        continue
                    rows2 = [
                        t << h1
                        for t in range(1 << h2)
                        if (t & key2).bit_count() >= s2
                    ]
                    _fast_rmm_into(fam, split, rows1, cols, rows2, backend, g, stats)
                    for c in cols:
                        covered[c] = 1
                    if stats is not None:
                        stats.columns_processed += len(cols)
    return SetFunction(ring, n, g)


def run_transform(
    algo: str,
    fam: Family,
    sigma: float | None = None,
    tau: float | None = None,
    backend: RmmBackend | None = None,
    planner=None,
    stats: PipelineStats | None = None,
) -> SetFunction:
    """Dispatch by algorithm name (see ALGORITHMS)."""
    if algo == "naive":
        return mst_naive(fam, stats)
    if algo == "columns":
        return mst_columns(
            fam, COLUMNS_SIGMA if sigma is None else sigma, backend, stats
        )
    if algo == "rows-columns":
        return mst_rows_columns(
            fam,
            ROWS_COLUMNS_SIGMA if sigma is None else sigma,
            ROWS_COLUMNS_TAU if tau is None else tau,
            backend,
            stats,
        )
    if algo == "cover":
        return mst_cover_columns(fam, planner, backend, stats)
    raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")
