import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngclass.greene import lds, lis
from youngclass.partitions import Partition, add, conj_add, conjugate
from youngclass.permutations import (
    Permutation,
    all_permutations,
    direct_sum,
    permutations_up_to,
    reverse,
    skew_sum,
    theta,
)
from youngclass.tableaux import StandardTableau, TableauPair, rsk, shape

P = Permutation.of

permutations_st = st.integers(0, 12).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda v: Permutation(tuple(v)))


class TestRsk:
    def test_spec_example(self):
        pair = rsk(P("54123"))
        assert pair.p_tableau.rows == ((1, 2, 3), (4,), (5,))
        assert pair.q_tableau.rows == ((1, 4, 5), (2,), (3,))
        assert pair.shape == Partition((3, 1, 1))

    def test_small(self):
        assert rsk(P("2413")).p_tableau.rows == ((1, 3), (2, 4))
        assert rsk(P("2413")).q_tableau.rows == ((1, 2), (3, 4))
        assert rsk(Permutation()).shape == Partition()

    def test_tableaux_are_standard_up_to_7(self):
        for pi in permutations_up_to(7):
            pair = rsk(pi)  # construction validates both tableaux
            assert pair.shape == shape(pi)
            assert pair.shape.size == len(pi)

    def test_bijective_at_6(self):
        pairs = {(rsk(pi).p_tableau, rsk(pi).q_tableau) for pi in all_permutations(6)}
        assert len(pairs) == 720

    def test_text(self):
        assert str(rsk(P("54123")).p_tableau) == "1 2 3\n4\n5"


class TestTableauValidation:
    @pytest.mark.parametrize("rows", [
        ((2, 1),),
        ((1, 2), (3, 2)),
        ((1,), (2, 3)),
        ((1, 3),),
    ])
    def test_rejects(self, rows):
        with pytest.raises(ValueError):
            StandardTableau(rows)

    def test_pair_shapes_must_agree(self):
        with pytest.raises(ValueError):
            TableauPair(StandardTableau(((1, 2),)), StandardTableau(((1,), (2,))))


class TestShapeLaws:
    def test_schensted_up_to_8(self):
        for pi in permutations_up_to(8):
            sh = shape(pi)
            assert lis(pi) == sh.part(1)
            assert lds(pi) == conjugate(sh).part(1)

    def test_reverse_transposes_up_to_8(self):
        for pi in permutations_up_to(8):
            assert shape(reverse(pi)) == conjugate(shape(pi))

    def test_sums_up_to_5(self):
        small = list(permutations_up_to(5))
        for a in small:
            for b in small:
                assert shape(direct_sum(a, b)) == add(shape(a), shape(b))
                assert shape(skew_sum(a, b)) == conj_add(shape(a), shape(b))

    @pytest.mark.parametrize("k", range(1, 7))
    def test_theta_is_a_staircase(self, k):
        assert shape(theta(k)) == Partition(tuple(range(k, 0, -1)))

    @settings(max_examples=200, deadline=None)
    @given(permutations_st)
    def test_random_schensted(self, pi):
        sh = shape(pi)
        assert rsk(pi).shape == sh
        assert lis(pi) == sh.part(1)
        assert lds(pi) == len(sh)
