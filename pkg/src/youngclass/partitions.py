"""Integer partitions, dominance and double dominance.

A partition is stored as a tuple of strictly positive, weakly decreasing
parts.  Prefix-sum comparisons treat missing parts as trailing zeros, so
partitions of different sizes can be compared directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"part {i + 1} of {parts} is not positive")
            if i and x > parts[i - 1]:
                raise ValueError(f"parts of {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def prefix_sums(self, length: int | None = None) -> list[int]:
        """Row prefix sums, padded with the total up to `length` entries."""
        sums = list(accumulate(self.parts))
        if length is not None and length > len(sums):
            sums.extend([self.size] * (length - len(sums)))
        return sums

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


def hook(arm: int, leg: int) -> Partition:
    """The hook (arm, 1^leg)."""
    if arm < 1 or leg < 0:
        raise ValueError("a hook needs arm >= 1 and leg >= 0")
    return Partition((arm,) + (1,) * leg)


_PARTITION_RE = re.compile(r"\s*\[\s*(.*?)\s*\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse the bracketed literal form, e.g. ``[3,3,2,1]`` or ``[]``."""
    m = _PARTITION_RE.match(text)
    if not m:
        raise ValueError(f"malformed partition literal {text!r} at position 0: expected '[...]'")
    body = m.group(1)
    if not body:
        return Partition()
    parts = []
    pos = m.start(1)
    for token in body.split(","):
        stripped = token.strip()
        if not stripped.isdigit():
            raise ValueError(f"malformed partition literal {text!r} at position {pos}: "
                             f"{stripped!r} is not a positive integer")
        parts.append(int(stripped))
        pos += len(token) + 1
    try:
        return Partition(parts)
    except ValueError as exc:
        raise ValueError(f"malformed partition literal {text!r}: {exc}") from None


def _conj(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x >= i) for i in range(1, parts[0] + 1))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: the i-th part counts parts >= i."""
    return Partition(_conj(p.parts))


def add(p: Partition, q: Partition) -> Partition:
    """Elementwise sum (rows concatenated horizontally)."""
    n = max(len(p), len(q))
    return Partition(tuple(p.part(i) + q.part(i) for i in range(1, n + 1)))


def conj_add(p: Partition, q: Partition) -> Partition:
    """Conjugate sum: the sorted union of the parts of `p` and `q`."""
    return Partition(tuple(sorted(p.parts + q.parts, reverse=True)))


def _dominated(lo: Sequence[int], hi: Sequence[int]) -> bool:
    a = b = 0
    for i in range(max(len(lo), len(hi))):
        a += lo[i] if i < len(lo) else 0
        b += hi[i] if i < len(hi) else 0
        if a > b:
            return False
    return True


def dominates(p: Partition, q: Partition) -> bool:
    """True when every prefix sum of `p` is at most that of `q` (p ⊴ q)."""
    return _dominated(p.parts, q.parts)


def doubly_dominates(p: Partition, q: Partition) -> bool:
    """True when p ⊴ q and conjugate(p) ⊴ conjugate(q) (p ⊑ q)."""
    return _dominated(p.parts, q.parts) and _dominated(_conj(p.parts), _conj(q.parts))


def is_cover(p: Partition, q: Partition) -> bool:
    return q.size == p.size + 1 and doubly_dominates(p, q)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of `n` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    for parts in gen(n, n):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions_of(m)


def covers_below(q: Partition) -> list[Partition]:
    """Every p with p ⊑ q and |q| = |p| + 1, in `partitions_of` order."""
    if q.size < 1:
        raise ValueError("the empty partition covers nothing")
    return [p for p in partitions_of(q.size - 1) if doubly_dominates(p, q)]


# Cover refinement.  All helpers work on raw tuples of parts.

def _first_tie(lo: Sequence[int], hi: Sequence[int]) -> int | None:
    """Least k >= 1 with equal prefix sums of length k, or None."""
    a = b = 0
    for k in range(1, max(len(lo), len(hi)) + 1):
        a += lo[k - 1] if k <= len(lo) else 0
        b += hi[k - 1] if k <= len(hi) else 0
        if a == b:
            return k
    return None


def _drop_last_column_corner(parts: tuple[int, ...]) -> tuple[int, ...]:
    # Lowest cell of the rightmost column sits in the last row of maximal length.
    rows = list(parts)
    i = sum(1 for x in rows if x == rows[0]) - 1
    rows[i] -= 1
    return tuple(x for x in rows if x)


def _between(lo: tuple[int, ...], mid: tuple[int, ...], hi: tuple[int, ...]) -> bool:
    lo_c, mid_c, hi_c = _conj(lo), _conj(mid), _conj(hi)
    return (_dominated(lo, mid) and _dominated(mid, hi)
            and _dominated(lo_c, mid_c) and _dominated(mid_c, hi_c))


def _interval_level(lam: tuple[int, ...], mu: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions of `size` whose row prefix sums lie between those of lam and mu.

    Yielded in decreasing lexicographic order.
    """
    depth = max(len(lam), len(mu), size)
    lo = Partition(lam).prefix_sums(depth)
    hi = Partition(mu).prefix_sums(depth)

    def gen(k: int, total: int, cap: int) -> Iterator[tuple[int, ...]]:
        if total == size:
            if all(lo[j] <= size for j in range(k, depth)):
                yield ()
            return
        if k == depth:
            return
        for x in range(min(cap, size - total, hi[k] - total), 0, -1):
            if total + x < lo[k]:
                break
            for tail in gen(k + 1, total + x, x):
                yield (x,) + tail

    yield from gen(0, 0, size)


def _refine(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[int, ...]:
    if lam and lam[0] == mu[0]:
        return (mu[0],) + _refine(lam[1:], mu[1:])
    lam_c, mu_c = _conj(lam), _conj(mu)
    if lam_c and lam_c[0] == mu_c[0]:
        return _conj((mu_c[0],) + _refine(lam_c[1:], mu_c[1:]))

    r = _first_tie(lam, mu)
    if r is None:
        return _drop_last_column_corner(mu)
    c = _first_tie(lam_c, mu_c)
    if c is None:
        return _conj(_drop_last_column_corner(mu_c))

    if mu[r - 1] >= c and mu_c[c - 1] >= r:
        # mu (hence lam) holds the r x c rectangle: recurse on the region
        # strictly below row r and right of column c.
        lam_d = tuple(x - c for x in lam[r:] if x > c)
        mu_d = tuple(x - c for x in mu[r:] if x > c)
        sub = _refine(lam_d, mu_d)
        rows = list(mu[:r])
        for i in range(r, len(mu)):
            j = i - r
            rows.append(min(mu[i], c) + (sub[j] if j < len(sub) else 0))
        candidate = tuple(rows)
        # Shrinking D alone can break the comparison for rows or columns that
        # cross B or C (first seen at lam=(6,6,2,2), mu=(8,4,4,1,1)).
        if _between(lam, candidate, mu):
            return candidate
        return next(x for x in _interval_level(lam, mu, sum(mu) - 1)
                    if _between(lam, x, mu))

    # Some cell of the r x c rectangle is missing from mu.  Move one cell from
    # the rightmost column and one from the bottom row into the rectangle.
    rows = list(mu)
    top = sum(1 for x in rows if x == rows[0]) - 1
    rows[top] -= 1
    rows[-1] -= 1
    a = next(i for i in range(r) if rows[i] < c)
    rows[a] += 1
    return tuple(x for x in rows if x)


def cover_refine(p: Partition, q: Partition) -> Partition:
    """One step down from `q` towards `p` in the double dominance order.

    Requires p ⊑ q with |q| - |p| > 1; returns q' of size |q| - 1 with
    p ⊑ q' ⊑ q.  The choice of q' is deterministic.
    """
    if q.size - p.size < 2 or not doubly_dominates(p, q):
        raise ValueError(f"cover_refine needs {p} ⊑ {q} with a size gap above 1")
    return Partition(_refine(p.parts, q.parts))


def cover_chain(p: Partition, q: Partition) -> list[Partition]:
    """A saturated chain p = v_0 ⊑ v_1 ⊑ ... ⊑ v_m = q of covers."""
    if not doubly_dominates(p, q):
        raise ValueError(f"{p} is not doubly dominated by {q}")
    chain = [q]
    while chain[-1].size - p.size > 1:
        chain.append(cover_refine(p, chain[-1]))
    if chain[-1] != p:
        chain.append(p)
    chain.reverse()
    return chain


def hook_envelope(p: Partition) -> Partition:
    """The smallest hook (n, 1^m) that doubly dominates `p`."""
    if not p.parts:
        raise ValueError("hook_envelope needs a nonempty partition")
    arm = max(s - k for k, s in enumerate(accumulate(p.parts)))
    height = max(s - k for k, s in enumerate(accumulate(_conj(p.parts))))
    return hook(arm, height - 1)


def as_partition(x: Partition | Iterable[int]) -> Partition:
    return x if isinstance(x, Partition) else Partition(tuple(x))
