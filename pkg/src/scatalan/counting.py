"""Exact counting: the fundamental recurrence, the fitting-partition
determinant, and Narayana refinements.

All arithmetic is exact integer arithmetic; the determinant is evaluated by
fraction-free elimination so no rationals appear.
"""

from __future__ import annotations

import threading
from math import comb
from typing import Iterator

from .signatures import Composition, Partition, lambda_of


class CountCache:
    """Signature -> count map; concurrent reads, serialized writes."""

    def __init__(self) -> None:
        self._data: dict[tuple[int, ...], int] = {(): 1}
        self._lock = threading.Lock()

    def get(self, s: tuple[int, ...]) -> int | None:
        return self._data.get(s)

    def put(self, s: tuple[int, ...], value: int) -> None:
        with self._lock:
            self._data[s] = value

    def __len__(self) -> int:
        return len(self._data)


_cache = CountCache()


def count_recurrence(s: Composition) -> int:
    """Number of objects for the signature s by the fundamental recurrence:
    split off the first part k = s(1) and sum, over all ways to cut the tail
    into k contiguous (possibly empty) factors, the product of the factor
    counts.

    Subproblems are contiguous factors of s, so the memo is keyed by
    (offset, length) pairs; results are shared across calls through a
    signature-keyed cache.
    """
    s = Composition(s)
    cached = _cache.get(tuple(s))
    if cached is not None:
        return cached

    memo: dict[tuple[int, int], int] = {}
    split_memo: dict[tuple[int, int, int], int] = {}

    def count(off: int, length: int) -> int:
        if length == 0:
            return 1
        key = (off, length)
        if key in memo:
            return memo[key]
        shared = _cache.get(tuple(s[off : off + length]))
        if shared is not None:
            memo[key] = shared
            return shared
        k = s[off]
        total = _splits(off + 1, length - 1, k)
        memo[key] = total
        _cache.put(tuple(s[off : off + length]), total)
        return total

    def _splits(off: int, length: int, pieces: int) -> int:
        # sum over the first factor's length of count(first) * splits(rest)
        if pieces == 0:
            return 1 if length == 0 else 0
        if pieces == 1:
            return count(off, length)
        key = (off, length, pieces)
        if key in split_memo:
            return split_memo[key]
        total = 0
        for first in range(length + 1):
            left = count(off, first)
            if left:
                total += left * _splits(off + first, length - first, pieces - 1)
        split_memo[key] = total
        return total

    return count(0, len(s))


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Divisions are exact at every step; intermediate values stay integral.
    """
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def kreweras_fitting_count(shape: Partition) -> int:
    """Number of partitions fitting inside the given partition, as the
    determinant of binomial(shape_j + 1, j - i + 1)."""
    shape = Partition(shape)
    n = len(shape)
    matrix = [
        [comb(shape[j] + 1, j - i + 1) if j - i + 1 >= 0 else 0 for j in range(n)]
        for i in range(n)
    ]
    return bareiss_determinant(matrix)


def fitting_partitions(shape: Partition) -> Iterator[Partition]:
    """Brute-force enumeration of the partitions fitting inside shape; the
    independent oracle for the determinant."""
    shape = Partition(shape)

    def rec(i: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(shape):
            yield Partition(tuple(p for p in acc if p > 0))
            return
        for p in range(min(cap, shape[i]) + 1):
            acc.append(p)
            yield from rec(i + 1, p, acc)
            acc.pop()

    seen = set()
    top = shape[0] if shape else 0
    for lam in rec(0, top, []):
        if lam not in seen:
            seen.add(lam)
            yield lam


def count_determinant(s: Composition) -> int:
    """Count via the determinant formula applied to the staircase partition
    of s."""
    s = Composition(s)
    if not s:
        return 1
    return kreweras_fitting_count(lambda_of(s))


def classical_narayana(n: int, k: int) -> int:
    """binomial(n,k) * binomial(n,k-1) / n, exactly."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    num = comb(n, k) * comb(n, k - 1)
    quot, rem = divmod(num, n)
    if rem:
        raise ArithmeticError("narayana formula did not divide exactly")
    return quot


NARAYANA_STATISTICS = (
    "peaks",
    "leftmost-leaves",
    "ascents+1",
    "partition-blocks",
    "matching-min-plus-one",
)


def narayana_distribution(s: Composition, statistic: str) -> dict[int, int]:
    """Histogram of the chosen statistic over the family for s.

    The ascent and partition statistics require every part of s to be at
    least 2.
    """
    from . import bijections
    from .stirling import ascents
    from .trees import enumerate_trees, leftmost_leaf_count

    s = Composition(s)
    if statistic not in NARAYANA_STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; choose from {NARAYANA_STATISTICS}")
    if statistic in ("ascents+1", "partition-blocks") and any(p < 2 for p in s):
        raise ValueError(f"statistic {statistic!r} needs all parts of s >= 2")
    if not s:
        return {0: 1}  # the identity object has no peak, leaf, or block

    hist: dict[int, int] = {}
    for tree in enumerate_trees(s):
        if statistic == "peaks":
            k = bijections.tree_to_path(tree).peaks()
        elif statistic == "leftmost-leaves":
            k = leftmost_leaf_count(tree)
        elif statistic == "ascents+1":
            k = ascents(bijections.tree_to_stirling(tree)) + 1
        elif statistic == "partition-blocks":
            k = len(bijections.tree_to_partition(tree).blocks)
        else:
            matching = bijections.tree_to_matching(tree)
            k = sum(1 for block in matching.blocks if block[0] + 1 in block)
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))
