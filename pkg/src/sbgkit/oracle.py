"""Exhaustive ground truth for identifying code counts, independent of the
solver and of the PB encoding.

Every k-subset of the nodes is enumerated in colexicographic order as a
bitmask; a subset qualifies when all per-node signatures ``N+(v) & subset``
are nonempty and pairwise distinct.  The scan is vectorized with numpy and
chunked so that memory stays proportional to the chunk size, with a sound
prefilter (small distinguishing sets and the domination masks must all be
hit) discarding almost all candidates before the exact distinctness check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, bits
from .ics import MotifSet, motif_class_sets

_CHUNK = 1 << 20


class OracleError(ValueError):
    pass


def _mask_dtype(n: int):
    if n <= 32:
        return np.uint32
    if n <= 64:
        return np.uint64
    raise OracleError(f"bitmask oracle supports at most 64 nodes, got {n}")


def _level_masks(n: int, k: int, dtype) -> np.ndarray:
    """All k-subset masks of range(n) in colex order.

    Built level by level: the k-subsets with maximum element j are exactly
    the (k-1)-subsets of range(j), which in colex order are a prefix of the
    previous level.
    """
    cur = np.zeros(1, dtype=dtype)
    for level in range(1, k + 1):
        parts = [
            cur[: math.comb(j, level - 1)] | dtype(1 << j)
            for j in range(level - 1, n)
        ]
        cur = np.concatenate(parts) if parts else np.zeros(0, dtype=dtype)
    return cur


def _prefilters(g: Graph, cap: int = 48) -> list[int]:
    """Node sets every dominating identifying code must intersect.

    The closed neighborhoods (domination) plus the smallest distinguishing
    sets of pairs within distance two; an empty distinguishing set means no
    code of any size works.
    """
    masks = [g.closed_neighborhood(v) for v in range(g.n)]
    ds = []
    for u in range(g.n):
        reach = g.closed_two_neighborhood(u)
        for v in bits(reach >> (u + 1) << (u + 1)):
            ds.append(g.distinguishing_set(u, v))
    ds.sort(key=lambda m: m.bit_count())
    masks.extend(ds[: max(0, cap - len(masks))])
    return masks


def count_ics(
    g: Graph, k: int, collect: bool = False
) -> tuple[int, list[int] | None]:
    """Exact number of size-k dominating identifying codes of *g*.

    Returns ``(count, solutions)`` where solutions is the full list of code
    bitmasks in colex order when *collect* is set, else None.
    """
    n = g.n
    if not 0 <= k <= n:
        raise OracleError(f"k must be in 0..{n}, got {k}")
    dtype = _mask_dtype(max(n, 1))
    nb = np.array([g.closed_neighborhood(v) for v in range(n)], dtype=dtype)
    solutions: list[int] | None = [] if collect else None

    if n == 0 or k == 0:
        # the empty code identifies nothing unless the graph is empty
        count = 1 if n == 0 else 0
        if solutions is not None and count:
            solutions.append(0)
        return count, solutions

    filters = _prefilters(g)
    if any(m == 0 for m in filters):
        return 0, solutions
    filter_arr = np.array(filters, dtype=dtype)

    prev = _level_masks(n, k - 1, dtype) if k > 1 else np.zeros(1, dtype=dtype)
    total = 0
    for top in range(k - 1, n):
        block = prev[: math.comb(top, k - 1)] | dtype(1 << top)
        for lo in range(0, len(block), _CHUNK):
            chunk = block[lo : lo + _CHUNK]
            alive = np.ones(len(chunk), dtype=bool)
            for m in filter_arr:
                alive &= (chunk & m) != 0
            cand = chunk[alive]
            if len(cand) == 0:
                continue
            sig = cand[:, None] & nb[None, :]
            sig.sort(axis=1)
            good = (np.diff(sig, axis=1) != 0).all(axis=1)
            total += int(good.sum())
            if solutions is not None:
                solutions.extend(int(m) for m in cand[good])
    return total, solutions


def min_ics_size(g: Graph, k_max: int) -> int | None:
    """Smallest k <= k_max admitting a dominating identifying code, if any."""
    for k in range(0, min(k_max, g.n) + 1):
        count, _ = count_ics(g, k)
        if count > 0:
            return k
    return None


@dataclass(frozen=True)
class ClassHistogram:
    """Family counts for a batch of size-10 SBG codes, plus any strays."""

    counts: dict[str, int]
    matched: dict[int, MotifSet]
    unmatched: list[int]


def classify_solutions(solutions: list[int]) -> ClassHistogram:
    """Match each code against the named SBG families (I, II, III, IV)."""
    by_mask = {m.members: m for m in motif_class_sets()}
    counts: dict[str, int] = {}
    matched: dict[int, MotifSet] = {}
    unmatched: list[int] = []
    for mask in solutions:
        motif = by_mask.get(mask)
        if motif is None:
            unmatched.append(mask)
        else:
            matched[mask] = motif
            counts[motif.family] = counts.get(motif.family, 0) + 1
    return ClassHistogram(counts, matched, unmatched)
