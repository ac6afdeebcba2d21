import pytest

from youngclass.greene import greene_profile
from youngclass.partitions import Partition, conjugate, covers_below, is_cover, partitions_up_to
from youngclass.permutations import Permutation, delete_points, involves
from youngclass.tableaux import shape
from youngclass.witnesses import (
    CoverWitness,
    central_position,
    exists_witness,
    lambda_k,
    mu_k,
    pi_witness,
    reaches_staircase,
    sigma_witness,
    witness_for_cover,
)

P = Partition
W = Permutation.of


def covers_up_to(n):
    return [(lam, mu) for mu in partitions_up_to(n) if mu.size for lam in covers_below(mu)]


class TestStaircase:
    def test_lambda_and_mu(self):
        assert lambda_k(1) == P((2, 2))
        assert lambda_k(2) == P((4, 4, 2, 2))
        assert lambda_k(3).size == 24
        assert mu_k(1) == P((3, 1, 1))
        assert mu_k(2) == P((5, 3, 3, 1, 1))

    @pytest.mark.parametrize("k", range(1, 5))
    def test_sizes_and_cover(self, k):
        assert lambda_k(k).size == 2 * k * k + 2 * k
        assert len(lambda_k(k)) == 2 * k
        assert mu_k(k).size == lambda_k(k).size + 1
        assert len(mu_k(k)) == 2 * k + 1
        assert is_cover(lambda_k(k), mu_k(k))

    @pytest.mark.parametrize("fn", [lambda_k, mu_k, sigma_witness, pi_witness])
    def test_k_zero_rejected(self, fn):
        with pytest.raises(ValueError):
            fn(0)

    def test_base_pair(self):
        assert sigma_witness(1) == W("2413")
        assert pi_witness(1) == W("25314")

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_shapes_and_central_point(self, k):
        s, p = sigma_witness(k), pi_witness(k)
        assert len(s) == 2 * k * k + 2 * k and len(p) == len(s) + 1
        assert shape(s) == lambda_k(k)
        assert shape(p) == mu_k(k)
        assert delete_points(p, (central_position(k),)) == s

    def test_pi_2_shape(self):
        assert shape(pi_witness(2)) == P((5, 3, 3, 1, 1))

    def test_pi_3_has_25_points(self):
        assert len(pi_witness(3)) == 25
        assert pi_witness(3).values[12] == 13

    @pytest.mark.parametrize("k", [1, 2])
    def test_staircases_against_greene_oracle(self, k):
        for perm, expected in ((sigma_witness(k), lambda_k(k)), (pi_witness(k), mu_k(k))):
            prof = greene_profile(perm)
            assert prof.row_shape() == expected
            assert prof.column_shape() == conjugate(expected)


class TestWitnessForCover:
    def test_base_case(self):
        w = witness_for_cover(P((2, 2)), P((3, 1, 1)))
        assert (w.sigma, w.pi) == (W("2413"), W("25314"))

    def test_single_cell(self):
        w = witness_for_cover(P((1,)), P((2,)))
        assert (w.sigma, w.pi) == (W("1"), W("12"))

    def test_shared_part(self):
        w = witness_for_cover(P((3, 2, 2)), P((3, 3, 2)))
        assert (len(w.sigma), len(w.pi)) == (7, 8)
        assert (w.sigma, w.pi) == (W("5673412"), W("67845123"))
        assert w.is_valid()

    def test_from_empty(self):
        w = witness_for_cover(P(()), P((1,)))
        assert w.is_valid()

    def test_rejects_non_cover(self):
        with pytest.raises(ValueError):
            witness_for_cover(P((2, 2)), P((4, 1, 1, 1, 1)))

    def test_all_covers_up_to_9(self):
        for lam, mu in covers_up_to(9):
            w = witness_for_cover(lam, mu)
            assert w.failures() == [], (lam, mu)
            assert involves(w.sigma, w.pi)

    def test_failures_are_reported(self):
        bad = CoverWitness(W("12"), W("321"), P((2,)), P((3, 1)))
        assert bad.failures() == ["shape(pi) != mu", "|mu| != |lambda| + 1", "sigma is not involved in pi"]

    def test_staircase_case_only_for_staircases_up_to_10(self):
        # The construction asserts the staircase form whenever nothing is shared.
        reached = set()
        for lam, mu in covers_up_to(10):
            assert witness_for_cover(lam, mu).is_valid()
            k = reaches_staircase(lam, mu)
            if k is not None:
                reached.add(k)
        assert reached == {1}


def test_staircase_is_reached_directly():
    assert reaches_staircase(P((2, 2)), P((3, 1, 1))) == 1
    assert reaches_staircase(P((4, 4, 2, 2)), P((5, 3, 3, 1, 1))) == 2
    assert reaches_staircase(P((1,)), P((2,))) is None


class TestExistsWitness:
    def test_present(self):
        found = exists_witness(P((2, 2)), P((3, 1, 1)))
        assert found is not None
        sigma, pi = found
        assert shape(sigma) == P((2, 2)) and shape(pi) == P((3, 1, 1)) and involves(sigma, pi)

    def test_absent_for_a_single_candidate(self):
        assert exists_witness(P((2, 2)), P((3, 1, 1)), candidates=[W("54123")]) is None

    def test_errors(self):
        with pytest.raises(ValueError):
            exists_witness(P((2, 2)), P((3, 1)))
        with pytest.raises(ValueError, match="bound"):
            exists_witness(P((5, 5)), P((6, 5)), bound=9)

    @pytest.mark.slow
    def test_absent_over_s8(self):
        assert exists_witness(P((2, 2, 2)), P((4, 1, 1, 1, 1))) is None
