
import pytest
from hypothesis import given, strategies as st

from braidgwp.core import (
    BraidError,
    IndexMismatch,
    Move,
    OutOfRangeLetter,
    apply_move,
    apply_random_relation,
    artin,
    band,
    band_to_artin,
    concatenate,
    expand_band,
    free_reduce,
    fuzz,
    identity,
    invert,
    make_word,
    power,
    relation_moves,
)
from braidgwp.normalform import equal
from braidgwp.oracle import handle_equal, permutation_projection

from conftest import s, words


class TestMakeWord:
    def test_single_letter(self):
        w = make_word(3, [artin(1)])
        assert len(w) == 1
        assert w.letters == (artin(1),)

    def test_empty_is_identity(self):
        w = make_word(3, [])
        assert len(w) == 0
        assert w.is_identity_word()
        assert str(w) == "1"

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeLetter) as exc:
            make_word(3, [artin(5)])
        assert exc.value.position == 0

    def test_out_of_range_reports_position(self):
        with pytest.raises(OutOfRangeLetter) as exc:
            make_word(4, [artin(1), band(4, 2), band(2, 3)])
        assert exc.value.position == 2

    @pytest.mark.parametrize("n", [1, 0, -3])
    def test_bad_index(self, n):
        with pytest.raises(BraidError):
            identity(n)

    def test_band_range(self):
        make_word(4, [band(4, 1), band(2, 1, -1)])
        with pytest.raises(OutOfRangeLetter):
            make_word(4, [band(5, 1)])
        with pytest.raises(OutOfRangeLetter):
            make_word(4, [band(1, 1)])

    def test_immutable(self):
        w = s(3, 1, 2)
        with pytest.raises(AttributeError):
            w.letters = ()


class TestInvert:
    def test_reverse_and_flip(self):
        assert invert(s(3, 1, -2)) == s(3, 2, -1)

    def test_identity(self):
        assert invert(identity(3)) == identity(3)

    def test_run(self):
        assert invert(s(3, 1, 1, 1, 1)) == s(3, -1, -1, -1, -1)

    def test_band_letters(self):
        w = make_word(4, [band(4, 1), artin(2, -1)])
        assert invert(w).letters == (artin(2), band(4, 1, -1))

    @given(words())
    def test_involution(self, w):
        assert invert(invert(w)) == w


class TestConcatenate:
    def test_basic(self):
        assert concatenate(s(3, 1), s(3, 2)) == s(3, 1, 2)

    def test_identity_neutral(self):
        w = s(4, 1, -3, 2)
        assert concatenate(w, identity(4)) == w
        assert concatenate(identity(4), w) == w

    def test_no_cancellation(self):
        w = concatenate(s(3, 1), s(3, -1))
        assert len(w) == 2

    def test_index_mismatch(self):
        with pytest.raises(IndexMismatch):
            concatenate(s(3, 1), s(4, 1))


class TestPower:
    def test_positive(self):
        assert power(s(3, 1, 2), 3) == s(3, 1, 2, 1, 2, 1, 2)

    def test_zero_is_identity(self):
        assert power(s(3, 1), 0) == identity(3)

    def test_negative(self):
        assert power(s(3, 1), -2) == s(3, -1, -1)

    def test_negative_uses_inverse(self):
        assert power(s(3, 1, 2), -2) == s(3, -2, -1, -2, -1)

    @given(words(max_len=8), st.integers(0, 6), st.integers(0, 6))
    def test_additive_in_exponent(self, w, k1, k2):
        assert power(w, k1 + k2) == concatenate(power(w, k1), power(w, k2))


class TestFreeReduce:
    def test_pair(self):
        assert free_reduce(s(3, 1, -1)) == identity(3)

    def test_inner_pair(self):
        assert free_reduce(s(3, 1, 2, -2, 1)) == s(3, 1, 1)

    def test_nothing_to_do(self):
        assert free_reduce(s(3, 1, 2)) == s(3, 1, 2)

    def test_nested(self):
        assert free_reduce(s(4, 1, 2, 3, -3, -2, -1, 2)) == s(4, 2)

    @given(words())
    def test_idempotent(self, w):
        once = free_reduce(w)
        assert free_reduce(once) == once

    @given(words())
    def test_no_adjacent_inverse_pairs(self, w):
        r = free_reduce(w).letters
        assert all(a != b.inverse() for a, b in zip(r, r[1:]))

    @given(words(max_len=14))
    def test_same_braid(self, w):
        assert handle_equal(free_reduce(w), w)


class TestBandToArtin:
    def test_adjacent_band_is_artin(self):
        assert band_to_artin(make_word(3, [band(2, 1)])) == s(3, 1)

    def test_a31(self):
        assert band_to_artin(make_word(3, [band(3, 1)])) == s(3, 2, 1, -2)

    def test_a31_alternative_form(self):
        # relation 2 also gives a31 = s1^-1 s2 s1
        w = band_to_artin(make_word(3, [band(3, 1)]))
        assert permutation_projection(w).image == (3, 2, 1)
        assert handle_equal(w, s(3, -1, 2, 1))
        assert equal(w, s(3, -1, 2, 1))

    def test_inverse_adjacent(self):
        assert band_to_artin(make_word(3, [band(3, 2, -1)])) == s(3, -2)

    def test_artin_passthrough(self):
        w = s(4, 1, -3)
        assert band_to_artin(w) is w

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_all_bands_match_other_conjugate(self, n):
        for t in range(2, n + 1):
            for lo in range(1, t):
                mine = make_word(n, expand_band(t, lo))
                # (s_lo^-1 ... s_{t-2}^-1) s_{t-1} (s_{t-2} ... s_lo)
                other = s(n, *[-j for j in range(lo, t - 1)], t - 1,
                          *range(t - 2, lo - 1, -1))
                assert equal(mine, other)
                assert handle_equal(mine, other)
                assert sum(x.sign for x in mine) == 1

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_bkl_relations(self, n):
        def a(t, lo, sign=1):
            return make_word(n, [band(t, lo, sign)])

        for t in range(1, n + 1):
            for s_ in range(1, t):
                for r in range(1, s_):
                    lhs = a(t, s_) * a(s_, r)
                    assert equal(lhs, a(t, r) * a(t, s_))
                    assert equal(lhs, a(s_, r) * a(t, r))
        pairs = [(t, lo) for t in range(2, n + 1) for lo in range(1, t)]
        for t, s_ in pairs:
            for r, q in pairs:
                if (t - r) * (t - q) * (s_ - r) * (s_ - q) > 0:
                    assert equal(a(t, s_) * a(r, q), a(r, q) * a(t, s_))


class TestRelationMoves:
    def test_commutation(self):
        w = s(4, 1, 3)
        assert Move("commute", 0) in relation_moves(w)
        assert apply_move(w, Move("commute", 0)) == s(4, 3, 1)

    def test_braid_move(self):
        w = s(3, 1, 2, 1)
        assert Move("braid", 0) in relation_moves(w)
        assert apply_move(w, Move("braid", 0)) == s(3, 2, 1, 2)

    def test_negative_braid_move(self):
        assert apply_move(s(3, -1, -2, -1), Move("braid", 0)) == s(3, -2, -1, -2)

    def test_insertion_on_identity(self):
        assert relation_moves(identity(2)) == [Move("insert", 0)]
        assert apply_random_relation(identity(2), 5) == s(2, 1, -1)

    def test_insertion_general_index(self):
        w = apply_random_relation(identity(5), 11)
        assert len(w) == 2 and w[0] == w[1].inverse()

    def test_no_commutation_for_neighbours(self):
        kinds = {m.kind for m in relation_moves(s(3, 1, 2))}
        assert kinds == {"insert"}

    def test_mixed_sign_triple_not_braid_move(self):
        assert Move("braid", 0) not in relation_moves(s(3, 1, -2, 1))

    def test_seed_reaches_each_move(self):
        seen = {apply_random_relation(s(4, 1, 3), seed) for seed in range(200)}
        assert s(4, 3, 1) in seen
        seen = {apply_random_relation(s(3, 1, 2, 1), seed) for seed in range(200)}
        assert s(3, 2, 1, 2) in seen

    def test_deterministic(self):
        w = s(5, 1, 3, -2, 4, 4, -1)
        assert apply_random_relation(w, 42) == apply_random_relation(w, 42)
        assert fuzz(w, 30, 9) == fuzz(w, 30, 9)

    @given(words(max_len=12), st.integers(0, 2**32))
    def test_projection_preserved(self, w, seed):
        assert permutation_projection(apply_random_relation(w, seed)) == \
            permutation_projection(w)

    @given(words(max_len=10), st.integers(0, 2**32))
    def test_same_braid(self, w, seed):
        v = fuzz(w, 10, seed)
        assert handle_equal(v, w)
