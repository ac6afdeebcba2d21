"""Permutations in one-line notation and classical pattern involvement."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

#: Default cap on the length for exhaustive enumeration.
ENUMERATION_BOUND = 10


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on {1..n} given by its values pi(1), ..., pi(n)."""

    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.values))

    def __repr__(self) -> str:
        if len(self.values) <= 9:
            return f"Permutation('{''.join(map(str, self.values))}')"
        return f"Permutation({self.values})"

    @classmethod
    def of(cls, text: str | Iterable[int]) -> "Permutation":
        """Build from values or from a literal such as ``"25314"`` or ``"2 5 3 1 4"``."""
        if isinstance(text, str):
            return parse_permutation(text)
        return cls(tuple(text))


_SEP = re.compile(r"[\s,]+")


def parse_permutation(text: str) -> Permutation:
    """Parse space- or comma-separated one-line notation.

    A single run of digits with no separator, e.g. ``54123``, is read one
    digit per value; this only makes sense for lengths up to 9.
    """
    body = text.strip()
    if not body:
        return Permutation()
    tokens = [t for t in _SEP.split(body) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit() and "0" not in tokens[0]:
        tokens = list(tokens[0])
    values = []
    pos = 0
    for tok in tokens:
        pos = text.index(tok, pos)
        if not tok.isdigit():
            raise ValueError(f"malformed permutation literal {text!r} at position {pos}: "
                             f"{tok!r} is not a positive integer")
        values.append(int(tok))
        pos += len(tok)
    try:
        return Permutation(tuple(values))
    except ValueError as exc:
        raise ValueError(f"malformed permutation literal {text!r}: {exc}") from None


def pattern_of(seq: Sequence[int]) -> Permutation:
    """Rank-normalize distinct values into a permutation of the same relative order."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return Permutation(tuple(ranks[v] for v in seq))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def decreasing(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def _search(sigma: Sequence[int], pi: Sequence[int]) -> tuple[int, ...] | None:
    # For each step j, the earlier sigma-indices holding the nearest smaller and
    # nearest larger value bound the admissible window for pi at step j.
    k, n = len(sigma), len(pi)
    if k == 0:
        return ()
    if k > n:
        return None
    below: list[int | None] = []
    above: list[int | None] = []
    for j in range(k):
        lo = hi = None
        for i in range(j):
            if sigma[i] < sigma[j] and (lo is None or sigma[i] > sigma[lo]):
                lo = i
            if sigma[i] > sigma[j] and (hi is None or sigma[i] < sigma[hi]):
                hi = i
        below.append(lo)
        above.append(hi)

    chosen: list[int] = []

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        lo_v = pi[chosen[below[j]]] if below[j] is not None else 0
        hi_v = pi[chosen[above[j]]] if above[j] is not None else n + 1
        for pos in range(start, n - (k - j) + 1):
            if lo_v < pi[pos] < hi_v:
                chosen.append(pos)
                if extend(j + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if extend(0, 0) else None


def occurrence(sigma: Permutation, pi: Permutation) -> tuple[int, ...] | None:
    """Lexicographically least 1-based positions of `pi` forming a copy of `sigma`."""
    found = _search(sigma.values, pi.values)
    return None if found is None else tuple(p + 1 for p in found)


def involves(sigma: Permutation, pi: Permutation) -> bool:
    """True when some subsequence of `pi` is order-isomorphic to `sigma`."""
    return _search(sigma.values, pi.values) is not None


def avoids(pi: Permutation, pattern: Permutation) -> bool:
    return not involves(pattern, pi)


def direct_sum(a: Permutation, b: Permutation) -> Permutation:
    """a ⊕ b: b placed above and to the right of a."""
    n = len(a)
    return Permutation(a.values + tuple(n + v for v in b.values))


def skew_sum(a: Permutation, b: Permutation) -> Permutation:
    """a ⊖ b: b placed below and to the right of a."""
    k = len(b)
    return Permutation(tuple(k + v for v in a.values) + b.values)


def inflate(skeleton: Permutation, blocks: Sequence[Permutation]) -> Permutation:
    """Replace point i of `skeleton` by an interval copy of ``blocks[i]``.

    Blocks keep their left-to-right order; the value interval of each block
    is ordered by the skeleton value it replaces.
    """
    if len(blocks) != len(skeleton):
        raise ValueError(f"inflate needs {len(skeleton)} blocks, got {len(blocks)}")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("inflate blocks must be nonempty")
    size_by_value = {skeleton[i]: len(blocks[i]) for i in range(len(skeleton))}
    offset = {}
    running = 0
    for v in range(1, len(skeleton) + 1):
        offset[v] = running
        running += size_by_value[v]
    out: list[int] = []
    for i, block in enumerate(blocks):
        base = offset[skeleton[i]]
        out.extend(base + v for v in block.values)
    return Permutation(tuple(out))


def theta(k: int) -> Permutation:
    """1 ⊕ 21 ⊕ 321 ⊕ ... ⊕ k(k-1)...1, of length k(k+1)/2; empty for k = 0."""
    if k < 0:
        raise ValueError("theta needs k >= 0")
    out = Permutation()
    for j in range(1, k + 1):
        out = direct_sum(out, decreasing(j))
    return out


def reverse(p: Permutation) -> Permutation:
    return Permutation(p.values[::-1])


def complement(p: Permutation) -> Permutation:
    n = len(p)
    return Permutation(tuple(n + 1 - v for v in p.values))


def delete_points(p: Permutation, positions: Iterable[int]) -> Permutation:
    """Pattern of `p` after removing the given 1-based positions."""
    drop = set(positions)
    bad = [i for i in drop if not 1 <= i <= len(p)]
    if bad:
        raise ValueError(f"positions {sorted(bad)} out of range 1..{len(p)}")
    return pattern_of([v for i, v in enumerate(p.values, 1) if i not in drop])


def one_point_deletions(p: Permutation) -> Iterator[Permutation]:
    for i in range(1, len(p) + 1):
        yield delete_points(p, (i,))


def all_permutations(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[Permutation]:
    """Every permutation of length `n`, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise ValueError(f"refusing to enumerate S_{n}: bound is {bound}")
    for values in _itertools_permutations(range(1, n + 1)):
        yield Permutation(values)


def permutations_up_to(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[Permutation]:
    for m in range(n + 1):
        yield from all_permutations(m, bound)
