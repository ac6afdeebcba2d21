"""Permutation witnesses for covering pairs of the double dominance order.

For every cover lam ⊑ mu there are permutations sigma ≼ pi with
sh(sigma) = lam and sh(pi) = mu.  `witness_for_cover` builds them
recursively: a part shared by lam and mu is peeled off with a skew sum
against an increasing run, a shared column is handled by reversal, and the
remaining pairs are exactly the staircase family built from inflations of
2413 and 25314.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .partitions import Partition, _conj, doubly_dominates, is_cover
from .permutations import (
    ENUMERATION_BOUND,
    Permutation,
    all_permutations,
    delete_points,
    identity,
    inflate,
    reverse,
    skew_sum,
    theta,
)
from .tableaux import shape

#: Default cap on |mu| for the exhaustive witness search.
SEARCH_BOUND = 9

SIGMA_BASE = Permutation((2, 4, 1, 3))
PI_BASE = Permutation((2, 5, 3, 1, 4))


@dataclass(frozen=True)
class CoverWitness:
    sigma: Permutation
    pi: Permutation
    lam: Partition
    mu: Partition

    def failures(self) -> list[str]:
        """Names of the witness invariants that do not hold."""
        bad = []
        if shape(self.sigma) != self.lam:
            bad.append("shape(sigma) != lambda")
        if shape(self.pi) != self.mu:
            bad.append("shape(pi) != mu")
        if self.mu.size != self.lam.size + 1:
            bad.append("|mu| != |lambda| + 1")
        if not any(delete_points(self.pi, (i,)) == self.sigma for i in range(1, len(self.pi) + 1)):
            bad.append("sigma is not involved in pi")
        return bad

    def is_valid(self) -> bool:
        return not self.failures()


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be a positive integer")


def lambda_k(k: int) -> Partition:
    """(2k, 2k, 2k-2, 2k-2, ..., 2, 2)."""
    _check_k(k)
    return Partition(tuple(2 * j for j in range(k, 0, -1) for _ in range(2)))


def mu_k(k: int) -> Partition:
    """(2k+1, 2k-1, 2k-1, ..., 3, 3, 1, 1), one cell larger than lambda_k(k)."""
    _check_k(k)
    return Partition((2 * k + 1,) + tuple(2 * j - 1 for j in range(k, 0, -1) for _ in range(2)))


def sigma_witness(k: int) -> Permutation:
    """2413 with every point inflated to theta(k)."""
    _check_k(k)
    t = theta(k)
    return inflate(SIGMA_BASE, [t] * 4)


def pi_witness(k: int) -> Permutation:
    """25314 with every point except the central 3 inflated to theta(k)."""
    _check_k(k)
    t = theta(k)
    return inflate(PI_BASE, [t, t, Permutation((1,)), t, t])


def central_position(k: int) -> int:
    """1-based position of the singleton point in pi_witness(k)."""
    return k * (k + 1) + 1


def _build(lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple[Permutation, Permutation]:
    if not lam:
        return Permutation(), Permutation((1,))
    for i, (x, y) in enumerate(zip(lam, mu)):
        if x == y:
            s, p = _build(lam[:i] + lam[i + 1:], mu[:i] + mu[i + 1:])
            run = identity(x)
            return skew_sum(run, s), skew_sum(run, p)
    lam_c, mu_c = _conj(lam), _conj(mu)
    if any(x == y for x, y in zip(lam_c, mu_c)):
        s, p = _build(lam_c, mu_c)
        return reverse(s), reverse(p)
    k = lam[0] // 2
    if lam != lambda_k(k).parts or mu != mu_k(k).parts:
        raise AssertionError(f"cover {lam} ⊑ {mu} shares no part yet is not a staircase pair")
    return sigma_witness(k), pi_witness(k)


def witness_for_cover(lam: Partition, mu: Partition) -> CoverWitness:
    """Permutations sigma ≼ pi with sh(sigma) = lam and sh(pi) = mu."""
    if not is_cover(lam, mu):
        raise ValueError(f"{lam} ⊑ {mu} is not a covering pair")
    sigma, pi = _build(lam.parts, mu.parts)
    return CoverWitness(sigma, pi, lam, mu)


def reaches_staircase(lam: Partition, mu: Partition) -> int | None:
    """The k of the staircase base case the construction ends in, if it gets there."""
    a, b = lam.parts, mu.parts
    while a:
        for i, (x, y) in enumerate(zip(a, b)):
            if x == y:
                a, b = a[:i] + a[i + 1:], b[:i] + b[i + 1:]
                break
        else:
            ac, bc = _conj(a), _conj(b)
            if any(x == y for x, y in zip(ac, bc)):
                a, b = ac, bc
                continue
            return a[0] // 2
    return None


def exists_witness(
    lam: Partition,
    mu: Partition,
    bound: int = SEARCH_BOUND,
    candidates: Iterable[Permutation] | None = None,
) -> tuple[Permutation, Permutation] | None:
    """Exhaustively look for sigma ≼ pi with sh(sigma) = lam and sh(pi) = mu.

    Scans every pi of shape mu (or only `candidates`, when given) in
    lexicographic order and every deletion set of the right size.
    """
    if not doubly_dominates(lam, mu):
        raise ValueError(f"{lam} is not doubly dominated by {mu}")
    if mu.size > bound:
        raise ValueError(f"|mu| = {mu.size} exceeds the search bound {bound}")
    gap = mu.size - lam.size
    pool = candidates if candidates is not None else all_permutations(mu.size, max(bound, ENUMERATION_BOUND))
    for pi in pool:
        if len(pi) != mu.size or shape(pi) != mu:
            continue
        for drop in combinations(range(1, mu.size + 1), gap):
            sigma = delete_points(pi, drop)
            if shape(sigma) == lam:
                return sigma, pi
    return None
