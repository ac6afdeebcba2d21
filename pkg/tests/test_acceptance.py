"""Acceptance gate: nine exact, exhaustive checks.

Each test carries a ``criterion`` marker; the conftest prints one PASS/FAIL
line per criterion at the end of the run.
"""

from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngclass.classes import (
    ShapeSet,
    class_members,
    downward_close,
    find_young_violation,
    monotone_bound,
    verify_young_class,
)
from youngclass.greene import lds, lis, max_union_increasing
from youngclass.partitions import Partition, partitions_up_to
from youngclass.permutations import Permutation, all_permutations, avoids, delete_points, permutations_up_to
from youngclass.suites import (
    STAIRCASE_KS,
    _cover_pairs,
    _ddom_pairs,
    check_prefix_gaps,
    check_refinement,
    run_suite,
)
from youngclass.tableaux import shape
from youngclass.witnesses import (
    central_position,
    exists_witness,
    lambda_k,
    mu_k,
    pi_witness,
    sigma_witness,
    witness_for_cover,
)

P = Partition
W = Permutation.of
criterion = pytest.mark.criterion


def assert_report(report, checked):
    assert report.counterexample is None, report.counterexample
    assert report.verdict
    assert report.checked == checked


@criterion(1, "Greene invariants equal shape prefix sums on all of S_8")
def test_greene_s8():
    assert_report(run_suite("greene", 8), factorial(8))


@criterion(2, "one-point deletions never leave the double dominance down-set, length <= 7")
def test_deletion_monotone():
    assert_report(run_suite("monotone", 7), sum(factorial(k) for k in range(1, 8)))


@criterion(3, "cover refinement lands in the brute-force interval, |mu| <= 10, gap > 1")
def test_cover_refinement():
    pairs = _ddom_pairs(10, 2)
    assert len(pairs) == 2711
    bad = [(lam, mu) for lam, mu in pairs if check_refinement(lam, mu) is not None]
    assert bad == []


@criterion(4, "cover prefix gaps lie in {0,1}, |mu| <= 12")
def test_cover_prefix_gaps():
    pairs = _cover_pairs(12)
    assert len(pairs) == 837
    assert [p for p in pairs if check_prefix_gaps(*p) is not None] == []


@criterion(5, "shape of direct and skew sums, all lengths <= 5")
def test_sum_shapes():
    exactly_five = sum(1 for a in all_permutations(5) for b in all_permutations(5))
    assert exactly_five == 14400
    assert_report(run_suite("sums", 5), sum(factorial(k) for k in range(6)) ** 2)


@criterion(6, "cover witnesses for |mu| <= 9 and staircase witnesses for k <= 3")
def test_cover_witnesses():
    covers = _cover_pairs(9)
    for lam, mu in covers:
        assert witness_for_cover(lam, mu).failures() == [], (lam, mu)
    for k in STAIRCASE_KS:
        assert shape(sigma_witness(k)) == lambda_k(k)
        assert shape(pi_witness(k)) == mu_k(k)
        assert delete_points(pi_witness(k), (central_position(k),)) == sigma_witness(k)
    assert len(pi_witness(3)) == 25
    assert pi_witness(3).values == (7, 9, 8, 12, 11, 10, 20, 22, 21, 25, 24, 23, 13,
                                    1, 3, 2, 6, 5, 4, 14, 16, 15, 19, 18, 17)


@criterion(7, "fixtures: 54123, 348951267 and the absent (2,2,2) / (4,1,1,1,1) witness")
class TestFixtures:
    def test_54123(self):
        pi = W("54123")
        assert shape(pi) == P((3, 1, 1))
        subs = {delete_points(pi, (i,)) for i in range(1, 6)}
        assert all(shape(s) != P((2, 2)) for s in subs)
        assert exists_witness(P((2, 2)), P((3, 1, 1)), candidates=[pi]) is None

    def test_348951267(self):
        pi = W("348951267")
        v = pi.values
        runs = [c for c in combinations(v, 5) if all(a < b for a, b in zip(c, c[1:]))]
        assert runs == [(3, 4, 5, 6, 7)]
        assert lis(pi) == 5
        first, second = (3, 4, 8, 9), (1, 2, 6, 7)
        assert set(first).isdisjoint(second)
        for run in (first, second):
            assert list(run) == [x for x in v if x in run] and list(run) == sorted(run)
        assert max_union_increasing(pi, 2) == 8 == len(first) + len(second)

    def test_no_witness_in_s8(self):
        assert exists_witness(P((2, 2, 2)), P((4, 1, 1, 1, 1))) is None


UP_TO_7 = list(partitions_up_to(7))


@criterion(8, "closed shape sets up to size 7 give Young classes; avoiding 231 does not")
class TestYoungClasses:
    @pytest.mark.parametrize("mu", UP_TO_7, ids=str)
    def test_principal(self, mu):
        # Every down-set is a union of these, and a union of Young classes is one.
        s = downward_close([mu], 7)
        assert find_young_violation(s.contains_shape_of, 7) is None

    @settings(max_examples=30, deadline=None, derandomize=True)
    @given(st.sets(st.sampled_from(UP_TO_7), min_size=2, max_size=5))
    def test_unions(self, gens):
        s = downward_close(gens, 7)
        assert verify_young_class(s.contains_shape_of, 7)

    def test_avoids_231_fails(self):
        v = find_young_violation(lambda pi: avoids(pi, W("231")), 7)
        assert v is not None and v.kind == "shape"
        assert shape(v.first) == shape(v.second) == P((2, 1))
        assert avoids(v.first, W("231")) != avoids(v.second, W("231"))


@criterion(9, "hook bound of the class with all parts < 3, checked on members of length <= 7")
def test_hook_bound():
    s = ShapeSet.from_predicate(lambda p: all(x < 3 for x in p.parts), 8)
    assert s.closed
    bound = monotone_bound(s)
    assert bound == (3, 1)
    a, d = bound
    checked = 0
    for n in range(8):
        for pi in class_members(s, n):
            assert lis(pi) < a or lds(pi) < d
            checked += 1
    assert checked == sum(1 for pi in permutations_up_to(7) if lis(pi) <= 2)
