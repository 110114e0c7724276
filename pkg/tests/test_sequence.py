import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_lines.errors import BadParamsError, DegenerateInputError
from balanced_lines.geometry import Color
from balanced_lines.harness import random_instance, separated_instance
from balanced_lines.sequence import (
    AllowableSequence,
    build_from_points,
    permutation_at,
    random_sequence,
    reverse_sequence,
    sequence_from_text,
    sequence_to_text,
    transposition_at,
    validate,
)
from balanced_lines.balance import scan_balanced_transpositions

from conftest import all_permutations, make_instance


class TestBuildFromPoints:
    def test_two_points(self, t1):
        seq = build_from_points(t1)
        assert seq.n == 2
        assert sorted(seq.pi0) == [0, 1]
        assert seq.word == (0,)

    def test_triangle(self):
        inst = make_instance([(0, 0, "B"), (4, 1, "R"), (1, 3, "B"), (9, 17, "R")])
        seq = build_from_points(inst)
        assert len(seq.word) == 6
        assert validate(seq).clean

    def test_separated_word_length(self, t2):
        seq = build_from_points(t2)
        assert len(seq.word) == 15
        assert validate(seq).clean

    def test_degenerate_refused(self):
        inst = make_instance([(0, 0, "B"), (1, 1, "R"), (2, 2, "B"), (5, 0, "R")])
        with pytest.raises(DegenerateInputError):
            build_from_points(inst)

    def test_swap_step_has_pair_adjacent(self, t2):
        # Each word step swaps the pair whose spanned line is perpendicular to
        # the sweep at that moment; the pair must be adjacent just before.
        seq = build_from_points(t2)
        perms = all_permutations(seq)
        for t in range(1, seq.half_period + 1):
            prev, cur = perms[t - 1], perms[t]
            p = seq.word[t - 1]
            assert prev[p] == cur[p + 1] and prev[p + 1] == cur[p]

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000))
    def test_random_instances_build_valid_sequences(self, seed):
        inst = random_instance(3, 3, 30, seed=seed)
        seq = build_from_points(inst)
        assert validate(seq).clean

    def test_sub_float_angle_gaps_sorted_exactly(self):
        # Two spanned directions differing by ~1e-61 radians collide as float
        # keys; the exact-sign fallback must still order the sweep correctly.
        big = 10**30
        inst = make_instance([
            (0, 0, "B"), (big, 1, "B"), (5, 7, "R"), (5 + 2 * big + 1, 9, "R"),
        ])
        seq = build_from_points(inst)
        assert validate(seq).clean


class TestPermutationAt:
    def test_time_zero(self, t2):
        seq = build_from_points(t2)
        assert permutation_at(seq, 0) == seq.pi0

    def test_half_period_reversal(self, t2):
        seq = build_from_points(t2)
        n_half = seq.half_period
        assert permutation_at(seq, n_half) == tuple(reversed(seq.pi0))

    def test_full_period(self, t2):
        seq = build_from_points(t2)
        assert permutation_at(seq, seq.period) == seq.pi0

    def test_negative_times(self):
        seq = random_sequence(6, 3, seed=11)
        for t in range(-2 * seq.period, 2 * seq.period):
            assert permutation_at(seq, t) == permutation_at(seq, t + seq.period)
            assert permutation_at(seq, t + seq.half_period) == tuple(
                reversed(permutation_at(seq, t))
            )

    def test_agrees_with_naive_replay(self):
        seq = random_sequence(8, 5, seed=3)
        perms = all_permutations(seq)
        for t in range(seq.period + 1):
            assert permutation_at(seq, t) == tuple(perms[t])


class TestValidate:
    def test_build_output_clean(self, t2):
        assert validate(build_from_points(t2)).clean

    def test_repeated_pair_named(self):
        # word [0, 0] swaps the same pair twice
        seq = AllowableSequence([Color.BLUE, Color.RED], [0, 1], [0, 0])
        report = validate(seq)
        assert "REPEATED_PAIR" in report.codes
        assert (0, 1) in report.repeated_pairs

    def test_length_mismatch(self):
        seq = AllowableSequence([Color.BLUE, Color.RED], [0, 1], [])
        report = validate(seq)
        assert "LENGTH_MISMATCH" in report.codes

    def test_position_out_of_range(self):
        seq = AllowableSequence(
            [Color.BLUE, Color.BLUE, Color.RED, Color.RED], [0, 1, 2, 3], [0, 5, 1, 0, 1, 2]
        )
        assert "POSITION_RANGE" in validate(seq).codes

    def test_red_majority_flagged(self):
        seq = AllowableSequence([Color.RED, Color.RED], [0, 1], [0])
        assert "RED_MAJORITY" in validate(seq).codes


class TestRandomSequence:
    def test_two_elements(self):
        for seed in range(5):
            assert random_sequence(2, 1, seed=seed).word == (0,)

    def test_four_elements_valid(self):
        seq = random_sequence(4, 2, seed=0)
        assert len(seq.word) == 6
        assert validate(seq).clean

    def test_many_samples_all_valid(self):
        for seed in range(1000):
            assert validate(random_sequence(8, 5, seed=seed)).clean

    def test_deterministic(self):
        a = random_sequence(10, 6, seed=42)
        b = random_sequence(10, 6, seed=42)
        assert a.word == b.word and a.colors == b.colors

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            random_sequence(5, 3, seed=0)
        with pytest.raises(BadParamsError):
            random_sequence(6, 2, seed=0)

    def test_weight_sum_is_twice_delta(self):
        seq = random_sequence(10, 7, seed=1)
        assert sum(seq.weights) == 2 * seq.delta


class TestReverseSequence:
    def test_reverse_matches_negated_time(self):
        seq = random_sequence(6, 4, seed=9)
        rev = reverse_sequence(seq)
        for t in range(seq.period):
            assert permutation_at(rev, t) == permutation_at(seq, -t)

    def test_involution(self):
        seq = random_sequence(8, 4, seed=2)
        back = reverse_sequence(reverse_sequence(seq))
        for t in range(seq.period):
            assert permutation_at(back, t) == permutation_at(seq, t)

    def test_two_points(self):
        seq = random_sequence(2, 1, seed=0)
        assert reverse_sequence(seq).word == (0,)

    def test_balanced_pairs_preserved(self):
        seq = random_sequence(8, 5, seed=77)
        rev = reverse_sequence(seq)
        assert validate(rev).clean
        pairs = {w.pair for w in scan_balanced_transpositions(seq)}
        rev_pairs = {w.pair for w in scan_balanced_transpositions(rev)}
        assert pairs == rev_pairs


class TestTranspositionAt:
    def test_matches_naive(self):
        seq = random_sequence(6, 3, seed=5)
        perms = all_permutations(seq)
        for t in range(1, seq.period + 1):
            tr = transposition_at(seq, t)
            prev = perms[t - 1]
            assert prev[tr.pos] == tr.lo_id and prev[tr.pos + 1] == tr.hi_id
            assert tr.left_weight == sum(seq.weights[v] for v in prev[: tr.pos])


class TestTextFormat:
    def test_round_trip(self):
        seq = random_sequence(8, 6, seed=13)
        text = sequence_to_text(seq)
        again = sequence_from_text(text)
        assert again.colors == seq.colors
        assert again.pi0 == seq.pi0
        assert again.word == seq.word
        assert sequence_to_text(again) == text

    def test_layout(self):
        seq = random_sequence(2, 1, seed=0)
        assert sequence_to_text(seq) == "2\nBR\n0 1\n0\n" or sequence_to_text(seq) == "2\nRB\n0 1\n0\n"
