"""Unit tests for the data model and exact moment computations.

Expected values for the worked examples were computed by hand from the
distance definition before being frozen here.
"""

from fractions import Fraction

import pytest

from cycleseq.core import (
    Cycle,
    SequencingProblem,
    base_cycle,
    canonical_rotation,
    central_moment,
    distances,
    mean,
    raw_moment,
    sub_moment,
    variance,
)

P84 = SequencingProblem(("a1", "a2"), (8, 4))
# interleavings of P84 used across the examples
C1 = Cycle.from_labels(
    P84, "a1 a2 a2 a1 a1 a2 a1 a1 a1 a2 a1 a1".split()
)
C2 = Cycle.from_labels(P84, "a1 a1 a2".split() * 4)


class TestSequencingProblem:
    def test_basic_accessors(self):
        assert P84.n == 2
        assert P84.total == 12
        assert P84.index_of("a2") == 1

    def test_rejects_empty_alphabet(self):
        with pytest.raises(ValueError):
            SequencingProblem((), ())

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError):
            SequencingProblem(("a", "a"), (1, 2))

    def test_rejects_nonpositive_multiplicity(self):
        with pytest.raises(ValueError):
            SequencingProblem(("a", "b"), (3, 0))

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            SequencingProblem(("a", "b"), (1,))

    def test_rejects_empty_label(self):
        with pytest.raises(ValueError):
            SequencingProblem(("a", ""), (1, 1))

    def test_json_round_trip(self):
        doc = P84.to_json_dict()
        assert doc == {"symbols": ["a1", "a2"], "multiplicities": [8, 4]}
        assert SequencingProblem.from_json_dict(doc) == P84


class TestCycle:
    def test_rejects_wrong_counts(self):
        with pytest.raises(ValueError):
            Cycle(P84, [0] * 12)

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError):
            Cycle(P84, [0] * 11 + [2])

    def test_labels_round_trip(self):
        assert Cycle.from_labels(P84, C1.labels()) == C1

    def test_compact_requires_distinct_heads(self):
        # a1 and a2 share the head character
        with pytest.raises(ValueError):
            C1.to_compact()

    def test_compact_round_trip(self):
        p = SequencingProblem(("a", "b"), (2, 2))
        c = Cycle.from_compact(p, "abab")
        assert c.to_compact() == "abab"
        assert c.positions == (0, 1, 0, 1)

    def test_from_string_infers_alphabet(self):
        c = Cycle.from_string("01101101")
        assert c.problem.symbols == ("0", "1")
        assert c.problem.multiplicities == (3, 5)

    def test_from_string_rejects_empty(self):
        with pytest.raises(ValueError):
            Cycle.from_string("")

    def test_rotate(self):
        p = SequencingProblem(("a", "b"), (2, 1))
        assert Cycle.from_compact(p, "aab").rotate(1).to_compact() == "aba"
        assert Cycle.from_compact(p, "aab").rotate(-1).to_compact() == "baa"

    def test_rotational_equality(self):
        p = SequencingProblem(("a", "b"), (2, 1))
        assert Cycle.from_compact(p, "aab").rotationally_equal(
            Cycle.from_compact(p, "aba")
        )
        q = SequencingProblem(("a", "b"), (2, 2))
        assert not Cycle.from_compact(q, "aabb").rotationally_equal(
            Cycle.from_compact(q, "abab")
        )
        # positional equality stays strict
        assert Cycle.from_compact(p, "aab") != Cycle.from_compact(p, "aba")

    def test_json_round_trip(self):
        assert Cycle.from_json_dict(C1.to_json_dict()) == C1


class TestDistances:
    def test_blocked_arrangement(self):
        profile = distances(base_cycle(P84))
        assert profile.by_symbol[0] == (1, 1, 1, 1, 1, 1, 1, 5)
        assert profile.by_symbol[1] == (1, 1, 1, 9)

    def test_interleaved_arrangement(self):
        assert distances(C1).deltas == (3, 1, 3, 1, 2, 4, 1, 1, 2, 4, 1, 1)

    def test_repeating_pattern(self):
        assert distances(C2).deltas == (1, 2, 3) * 4

    def test_singleton_symbol_goes_all_the_way_round(self):
        p = SequencingProblem(("a", "b"), (4, 1))
        profile = distances(Cycle.from_compact(p, "aabaa"))
        assert profile.by_symbol[1] == (5,)

    def test_one_item_cycle(self):
        p = SequencingProblem(("a",), (1,))
        assert distances(Cycle(p, (0,))).deltas == (1,)

    def test_per_symbol_sums_equal_total(self):
        for cycle in (C1, C2, base_cycle(P84)):
            profile = distances(cycle)
            for group in profile.by_symbol:
                assert sum(group) == 12


class TestMoments:
    def test_sub_moment_values(self):
        assert sub_moment(C2, 1, 0) == 1
        assert sub_moment(C2, 2, 1) == 3

    def test_sub_moments_sum_to_raw(self):
        for p in (1, 2, 3):
            assert sub_moment(C1, p, 0) + sub_moment(C1, p, 1) == raw_moment(C1, p)

    def test_raw_moment_values(self):
        assert raw_moment(C2, 1) == 2
        assert raw_moment(C2, 2) == Fraction(14, 3)

    def test_mean_is_symbol_count(self):
        assert mean(C1) == 2
        assert mean(C2) == 2
        assert mean(base_cycle(P84)) == 2
        p3 = SequencingProblem(("x", "y", "z"), (2, 1, 3))
        assert mean(base_cycle(p3)) == 3

    def test_central_moment_values(self):
        assert central_moment(C2, 1) == 0
        assert central_moment(C2, 2) == Fraction(2, 3)

    def test_variance_reference_cycles(self):
        assert variance(Cycle.from_string("01101101")) == Fraction(1, 2)
        assert variance(Cycle.from_string("01110101")) == Fraction(3, 4)

    def test_variance_of_perfectly_even_cycle(self):
        p = SequencingProblem(("a", "b"), (3, 3))
        assert variance(Cycle.from_compact(p, "ababab")) == 0

    def test_variance_identity(self):
        for cycle in (C1, C2, base_cycle(P84)):
            assert variance(cycle) == raw_moment(cycle, 2) - 4

    def test_moment_order_validation(self):
        with pytest.raises(ValueError):
            raw_moment(C1, 0)
        with pytest.raises(ValueError):
            sub_moment(C1, -1, 0)
        with pytest.raises(ValueError):
            sub_moment(C1, 2, 5)


class TestCanonicalRotation:
    def test_moves_least_block_first(self):
        p = SequencingProblem(("a", "b"), (2, 1))
        assert canonical_rotation(Cycle.from_compact(p, "baa")).to_compact() == "aab"

    def test_fixed_point(self):
        p = SequencingProblem(("a", "b"), (2, 2))
        c = Cycle.from_compact(p, "abab")
        assert canonical_rotation(c) == c

    def test_reference_string(self):
        c = canonical_rotation(Cycle.from_string("01101101"))
        assert "".join(c.labels()) == "01011011"

    def test_repeating_pattern(self):
        p = SequencingProblem(("A", "B"), (8, 4))
        c = Cycle.from_compact(p, "ABAABAABAABA")
        assert canonical_rotation(c).to_compact() == "AABAABAABAAB"

    def test_idempotent(self):
        for cycle in (C1, C2, Cycle.from_string("01110101")):
            once = canonical_rotation(cycle)
            assert canonical_rotation(once) == once

    def test_rotation_invariant(self):
        for r in range(12):
            assert canonical_rotation(C1.rotate(r)) == canonical_rotation(C1)
