"""Brute-force Greene invariants, independent of row insertion.

The largest union of k increasing subsequences is found by scanning every
subset of positions and keeping those whose longest decreasing subsequence
has length at most k (a set splits into k increasing chains exactly when it
has no decreasing run of length k + 1).  Decreasing unions are symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

import numpy as np

from .partitions import Partition, conjugate
from .permutations import Permutation
from .tableaux import shape

#: Largest permutation length the subset oracle accepts by default.
ORACLE_BOUND = 16


def lis(pi: Permutation | tuple[int, ...]) -> int:
    """Longest increasing subsequence by the quadratic DP."""
    vals = tuple(pi)
    best = [1] * len(vals)
    for i in range(len(vals)):
        for j in range(i):
            if vals[j] < vals[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best, default=0)


def lds(pi: Permutation | tuple[int, ...]) -> int:
    return lis(tuple(-v for v in pi))


def _check_bound(pi: Permutation, bound: int) -> None:
    if len(pi) > bound:
        raise ValueError(f"length {len(pi)} exceeds the oracle bound {bound}")


def _subset_tables(values: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(size, lis, lds) of the pattern on every subset mask of positions."""
    n = len(values)
    masks = np.arange(1 << n, dtype=np.int64)
    member = [((masks >> i) & 1).astype(bool) for i in range(n)]
    size = np.zeros(1 << n, dtype=np.int16)
    for m in member:
        size += m

    def longest(less) -> np.ndarray:
        # ending[i][mask]: longest chain within mask that ends at position i.
        ending: list[np.ndarray] = []
        overall = np.zeros(1 << n, dtype=np.int16)
        for i in range(n):
            best = np.zeros(1 << n, dtype=np.int16)
            for j in range(i):
                if less(values[j], values[i]):
                    np.maximum(best, ending[j], out=best)
            cur = np.where(member[i], best + 1, 0).astype(np.int16)
            ending.append(cur)
            np.maximum(overall, cur, out=overall)
        return overall

    return size, longest(lambda a, b: a < b), longest(lambda a, b: a > b)


def _max_unions(size: np.ndarray, limit: np.ndarray, n: int) -> tuple[int, ...]:
    return tuple(int(size[limit <= k].max()) for k in range(1, n + 1))


def max_union_increasing(pi: Permutation, k: int, bound: int = ORACLE_BOUND) -> int:
    """Largest union of `k` increasing subsequences of `pi`."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_bound(pi, bound)
    size, _, dec = _subset_tables(pi.values)
    return int(size[dec <= k].max())


def max_union_decreasing(pi: Permutation, k: int, bound: int = ORACLE_BOUND) -> int:
    """Largest union of `k` decreasing subsequences of `pi`."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_bound(pi, bound)
    size, inc, _ = _subset_tables(pi.values)
    return int(size[inc <= k].max())


@dataclass(frozen=True)
class GreeneProfile:
    """Maximum union sizes for k = 1..n, increasing and decreasing."""

    inc_sums: tuple[int, ...]
    dec_sums: tuple[int, ...]

    @staticmethod
    def _differences(sums: tuple[int, ...]) -> Partition:
        diffs = [b - a for a, b in zip((0,) + sums, sums)]
        return Partition(tuple(d for d in diffs if d))

    def row_shape(self) -> Partition:
        """The partition read off from successive increasing-union gains."""
        return self._differences(self.inc_sums)

    def column_shape(self) -> Partition:
        return self._differences(self.dec_sums)


def greene_profile(pi: Permutation, bound: int = ORACLE_BOUND) -> GreeneProfile:
    _check_bound(pi, bound)
    n = len(pi)
    if n == 0:
        return GreeneProfile((), ())
    size, inc, dec = _subset_tables(pi.values)
    return GreeneProfile(_max_unions(size, dec, n), _max_unions(size, inc, n))


def _padded_prefix_sums(p: Partition, n: int) -> tuple[int, ...]:
    sums = list(accumulate(p.parts))[:n]
    return tuple(sums + [p.size] * (n - len(sums)))


def greene_mismatch(pi: Permutation, bound: int = ORACLE_BOUND) -> dict | None:
    """None when the oracle agrees with sh(pi); otherwise the disagreeing data."""
    prof = greene_profile(pi, bound)
    sh = shape(pi)
    n = len(pi)
    rows = _padded_prefix_sums(sh, n)
    cols = _padded_prefix_sums(conjugate(sh), n)
    if prof.inc_sums == rows and prof.dec_sums == cols:
        return None
    return {
        "permutation": str(pi),
        "shape": str(sh),
        "inc_sums": list(prof.inc_sums),
        "dec_sums": list(prof.dec_sums),
    }


def check_greene(pi: Permutation, bound: int = ORACLE_BOUND) -> bool:
    """True when the union sizes are the prefix sums of sh(pi) and its conjugate."""
    return greene_mismatch(pi, bound) is None
