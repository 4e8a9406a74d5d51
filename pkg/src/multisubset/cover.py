"""Greedy covering designs.

A (v, k, s) covering design is a family of k-element blocks of a
v-element ground set such that every s-element subset lies inside at
least one block.  The greedy construction repeatedly picks the block
covering the most uncovered s-sets (lowest bitmask wins ties), which
keeps the design size within the classical (1 + ln C(k,s)) factor of
the C(v,s)/C(k,s) counting lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

MAX_V = 28


@dataclass(frozen=True)
class CoverDesign:
    v: int
    k: int
    s: int
    blocks: tuple[int, ...]


def _check_params(v: int, k: int, s: int):
    if not 0 <= s <= k <= v <= MAX_V:
        raise ValueError(
            f"need 0 <= s <= k <= v <= {MAX_V}, got (v, k, s) = ({v}, {k}, {s})"
        )


def _masks_of_size(v: int, k: int) -> list[int]:
    out = []
    for combo in combinations(range(v), k):
        m = 0
        for b in combo:
            m |= 1 << b
        out.append(m)
    out.sort()
    return out


def _subsets_within(mask: int, s: int) -> frozenset[int]:
    bits = [i for i in range(mask.bit_length()) if (mask >> i) & 1]
    out = []
    for combo in combinations(bits, s):
        m = 0
        for b in combo:
            m |= 1 << b
        out.append(m)
    return frozenset(out)


@lru_cache(maxsize=None)
def greedy_cover(v: int, k: int, s: int) -> CoverDesign:
    """Greedy (v, k, s) covering design with deterministic tie-breaking."""
    _check_params(v, k, s)
    targets = _masks_of_size(v, s)
    candidates = _masks_of_size(v, k)
    cand_sets = [_subsets_within(c, s) for c in candidates]
    uncovered = set(targets)
    blocks: list[int] = []
    while uncovered:
        best_idx = -1
        best_gain = 0
        for idx, ts in enumerate(cand_sets):
            gain = len(ts & uncovered)
            if gain > best_gain:
                best_idx = idx
                best_gain = gain
        if best_idx < 0:
            raise RuntimeError("greedy cover stalled; unreachable for s <= k <= v")
        blocks.append(candidates[best_idx])
        uncovered -= cand_sets[best_idx]
    return CoverDesign(v, k, s, tuple(blocks))


def verify_cover(design: CoverDesign) -> bool:
    """True iff every s-subset of the v-set is inside some block."""
    _check_params(design.v, design.k, design.s)
    for block in design.blocks:
        if block.bit_count() != design.k or block >> design.v:
            return False
    covered = set()
    for block in design.blocks:
        covered |= _subsets_within(block, design.s)
    return len(covered) == math.comb(design.v, design.s)


def cover_size_bound(v: int, k: int, s: int) -> float:
    """Greedy-size guarantee: (1 + ln C(k,s)) * C(v,s)/C(k,s) + 1."""
    _check_params(v, k, s)
    per_block = math.comb(k, s)
    return (1.0 + math.log(per_block)) * math.comb(v, s) / per_block + 1.0
