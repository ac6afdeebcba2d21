"""Exhaustive verification suites with shard-independent reports.

Each suite enumerates its items in a fixed order and checks them one by
one.  Work may be split into contiguous shards across processes; shards are
merged by summing the checked counts and keeping the counterexample of the
earliest failing item, so the report does not depend on the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Sequence

from .classes import ShapeSet, downward_close, find_young_violation
from .greene import greene_mismatch
from .partitions import (
    Partition,
    add,
    conj_add,
    conjugate,
    cover_refine,
    doubly_dominates,
    partitions_of,
    partitions_up_to,
)
from .permutations import (
    Permutation,
    all_permutations,
    delete_points,
    direct_sum,
    one_point_deletions,
    permutations_up_to,
    skew_sum,
)
from .tableaux import shape, shape_of_values
from .witnesses import (
    central_position,
    lambda_k,
    mu_k,
    pi_witness,
    sigma_witness,
    witness_for_cover,
)

#: k values of the staircase witnesses checked by the `witnesses` suite.
STAIRCASE_KS = (1, 2, 3)


@dataclass
class Report:
    claim: str
    parameters: dict
    verdict: bool
    checked: int
    counterexample: dict | None
    elapsed_seconds: float = 0.0

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "parameters": self.parameters,
            "verdict": "pass" if self.verdict else "fail",
            "checked": self.checked,
            "counterexample": self.counterexample,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


# Item checks.  Each returns None on success or a JSON-ready counterexample.

def check_deletions(pi: Permutation) -> dict | None:
    """Every one-point deletion of pi has a shape doubly dominated by sh(pi)."""
    top = shape(pi)
    for sigma in one_point_deletions(pi):
        if not doubly_dominates(shape(sigma), top):
            return {"pi": str(pi), "sigma": str(sigma),
                    "shape_pi": str(top), "shape_sigma": str(shape(sigma))}
    return None


def check_refinement(lam: Partition, mu: Partition) -> dict | None:
    """cover_refine lands in the brute-force set of valid intermediates."""
    valid = {x for x in partitions_of(mu.size - 1)
             if doubly_dominates(lam, x) and doubly_dominates(x, mu)}
    got = cover_refine(lam, mu)
    if got in valid:
        return None
    return {"lambda": str(lam), "mu": str(mu), "refined": str(got),
            "valid": [str(x) for x in sorted(valid, reverse=True)]}


def _gaps(lo: Partition, hi: Partition) -> list[int]:
    depth = max(len(lo), len(hi))
    return [b - a for a, b in zip(lo.prefix_sums(depth), hi.prefix_sums(depth))]


def check_prefix_gaps(lam: Partition, mu: Partition) -> dict | None:
    """For a cover, every row and column prefix-sum gap is 0 or 1."""
    rows = _gaps(lam, mu)
    cols = _gaps(conjugate(lam), conjugate(mu))
    if all(g in (0, 1) for g in rows + cols):
        return None
    return {"lambda": str(lam), "mu": str(mu), "row_gaps": rows, "column_gaps": cols}


@lru_cache(maxsize=None)
def _sum_laws(sa: Partition, sb: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return add(sa, sb).parts, conj_add(sa, sb).parts


def check_sum_shapes(alpha: Permutation, beta: Permutation) -> dict | None:
    sa, sb = shape(alpha), shape(beta)
    a, b = alpha.values, beta.values
    plus = shape_of_values(a + tuple(len(a) + v for v in b))
    minus = shape_of_values(tuple(len(b) + v for v in a) + b)
    if (plus, minus) == _sum_laws(sa, sb):
        return None
    return {"alpha": str(alpha), "beta": str(beta),
            "shape_direct_sum": str(shape(direct_sum(alpha, beta))), "expected_direct_sum": str(add(sa, sb)),
            "shape_skew_sum": str(shape(skew_sum(alpha, beta))), "expected_skew_sum": str(conj_add(sa, sb))}


def check_cover_witness(lam: Partition, mu: Partition) -> dict | None:
    w = witness_for_cover(lam, mu)
    bad = w.failures()
    if not bad:
        return None
    return {"lambda": str(lam), "mu": str(mu), "sigma": str(w.sigma), "pi": str(w.pi), "failures": bad}


def check_staircase(k: int) -> dict | None:
    s, p = sigma_witness(k), pi_witness(k)
    bad = []
    if shape(s) != lambda_k(k):
        bad.append("shape(sigma_k) != lambda_k")
    if shape(p) != mu_k(k):
        bad.append("shape(pi_k) != mu_k")
    if delete_points(p, (central_position(k),)) != s:
        bad.append("deleting the central point of pi_k does not give sigma_k")
    if not bad:
        return None
    return {"k": k, "sigma": str(s), "pi": str(p), "failures": bad}


def check_principal_class(mu: Partition, n_max: int) -> dict | None:
    """The class of shapes below mu passes the Young class test up to n_max."""
    s = downward_close([mu], max(n_max, mu.size))
    v = find_young_violation(s.contains_shape_of, n_max)
    if v is None:
        return None
    return {"generator": str(mu), "violation": v.as_dict()}


def check_converse(lam: Partition, mu: Partition) -> dict | None:
    """Dropping lam from the down-set of mu breaks closure, witnessed by a cover pair."""
    s = downward_close([mu], mu.size)
    broken = ShapeSet(s.max_size, s.members - {lam})
    w = witness_for_cover(lam, mu)
    if (broken.contains_shape_of(w.pi) and not broken.contains_shape_of(w.sigma)
            and w.sigma in set(one_point_deletions(w.pi))):
        return None
    return {"lambda": str(lam), "mu": str(mu), "sigma": str(w.sigma), "pi": str(w.pi)}


# Suite definitions.

def _ddom_pairs(n: int, min_gap: int, max_gap: int | None = None) -> list[tuple[Partition, Partition]]:
    parts = list(partitions_up_to(n))
    out = []
    for mu in parts:
        for lam in parts:
            gap = mu.size - lam.size
            if gap >= min_gap and (max_gap is None or gap <= max_gap) and doubly_dominates(lam, mu):
                out.append((lam, mu))
    return out


def _cover_pairs(n: int) -> list[tuple[Partition, Partition]]:
    return _ddom_pairs(n, 1, 1)


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    items: Callable[[int], Sequence[Any]]
    check: Callable[[Any, int], dict | None]
    unit: str


def _covers_check(item, n):
    lam, mu = item
    if mu.size - lam.size == 1:
        return check_prefix_gaps(lam, mu)
    return check_refinement(lam, mu)


def _witness_items(n):
    return [("cover", lam, mu) for lam, mu in _cover_pairs(n)] + [("staircase", k) for k in STAIRCASE_KS]


def _witness_check(item, n):
    if item[0] == "cover":
        return check_cover_witness(item[1], item[2])
    return check_staircase(item[1])


def _young_items(n):
    return [("closed", mu) for mu in partitions_up_to(n)] + [("converse", lam, mu) for lam, mu in _cover_pairs(n)]


def _young_check(item, n):
    if item[0] == "closed":
        return check_principal_class(item[1], n)
    return check_converse(item[1], item[2])


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("greene", "union sizes of k monotone subsequences equal the shape prefix sums",
              lambda n: list(all_permutations(n)), lambda pi, n: greene_mismatch(pi), "permutations"),
        Suite("monotone", "sigma involved in pi implies sh(sigma) ⊑ sh(pi)",
              lambda n: [pi for pi in permutations_up_to(n) if len(pi)], lambda pi, n: check_deletions(pi),
              "permutations"),
        Suite("covers", "covers have size gap 1 and prefix gaps in {0,1}; refinement lands in the interval",
              lambda n: _ddom_pairs(n, 1), _covers_check, "pairs"),
        Suite("sums", "sh(a⊕b) = sh(a)+sh(b) and sh(a⊖b) = sh(a)+*sh(b)",
              lambda n: [(a, b) for a in permutations_up_to(n) for b in permutations_up_to(n)],
              lambda item, n: check_sum_shapes(*item), "pairs"),
        Suite("witnesses", "every cover is realized by a witness pair sigma ≼ pi",
              _witness_items, _witness_check, "items"),
        Suite("young", "shape down-sets are exactly the Young classes",
              _young_items, _young_check, "items"),
    ]
}


def _run_chunk(name: str, n: int, start: int, stop: int) -> tuple[int, int | None, dict | None]:
    suite = SUITES[name]
    items = suite.items(n)[start:stop]
    first = None
    example = None
    for offset, item in enumerate(items):
        bad = suite.check(item, n)
        if bad is not None and first is None:
            first, example = start + offset, bad
    return len(items), first, example


def run_suite(name: str, n: int, workers: int = 1) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    suite = SUITES[name]
    t0 = time.perf_counter()
    total = len(suite.items(n))
    workers = max(1, workers)
    bounds = [(total * i // workers, total * (i + 1) // workers) for i in range(workers)]
    if workers == 1:
        results = [_run_chunk(name, n, 0, total)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_chunk, name, n, a, b) for a, b in bounds]
            results = [f.result() for f in futures]
    checked = sum(r[0] for r in results)
    failures = [(r[1], r[2]) for r in results if r[1] is not None]
    example = min(failures, key=lambda f: f[0])[1] if failures else None
    return Report(
        claim=name,
        parameters={"n": n, suite.unit: total},
        verdict=example is None,
        checked=checked,
        counterexample=example,
        elapsed_seconds=time.perf_counter() - t0,
    )
