"""Tests for the variance vs per-pulse-variance comparison."""

from fractions import Fraction

import pytest

from cycleseq.core import Cycle, SequencingProblem, variance
from cycleseq.metrics import (
    compare_report,
    comparison_csv,
    comparison_json,
    comparison_table,
    pulse_variance,
)

P35 = SequencingProblem(("0", "1"), (3, 5))
GOOD = Cycle.from_compact(P35, "01101101")
WORSE = Cycle.from_compact(P35, "01110101")


class TestPulseVariance:
    def test_reference_pair_ties(self):
        # the per-pulse statistic cannot separate these two cycles
        assert pulse_variance(GOOD, 1) == Fraction(6, 25)
        assert pulse_variance(WORSE, 1) == Fraction(6, 25)
        # the cycle variance can
        assert variance(GOOD) < variance(WORSE)

    def test_even_cycle_scores_zero(self):
        p = SequencingProblem(("a", "b"), (4, 4))
        c = Cycle.from_compact(p, "abababab")
        assert pulse_variance(c, 0) == 0
        assert pulse_variance(c, 1) == 0

    def test_rotation_invariant(self):
        for r in range(8):
            assert pulse_variance(GOOD.rotate(r), 1) == Fraction(6, 25)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            pulse_variance(GOOD, 2)


class TestCompareReport:
    def test_rows(self):
        rows = compare_report(P35, [GOOD, WORSE])
        assert [r["cycle"] for r in rows] == ["01101101", "01110101"]
        assert [r["variance"] for r in rows] == [Fraction(1, 2), Fraction(3, 4)]
        assert [r["pulse_variance"]["1"] for r in rows] == [
            Fraction(6, 25),
            Fraction(6, 25),
        ]
        assert [r["optimal"] for r in rows] == [True, False]

    def test_rejects_foreign_cycle(self):
        stray = Cycle.from_compact(SequencingProblem(("0", "1"), (1, 1)), "01")
        with pytest.raises(ValueError):
            compare_report(P35, [stray])

    def test_rejects_wide_alphabets(self):
        p = SequencingProblem(("x", "y", "z"), (1, 1, 1))
        with pytest.raises(ValueError):
            compare_report(p, [Cycle.from_compact(p, "xyz")])


class TestRenderers:
    def test_csv(self):
        import csv
        import io

        text = comparison_csv(compare_report(P35, [GOOD, WORSE]))
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == [
            "cycle_string",
            "variance",
            "pulse_variance_sym0",
            "pulse_variance_sym1",
            "optimal",
        ]
        assert rows[1][0] == "01101101"
        assert float(rows[1][1]) == 0.5
        assert float(rows[1][2]) == pytest.approx(2 / 9)
        assert float(rows[1][3]) == 0.24
        assert rows[1][4] == "true"
        assert rows[2][0] == "01110101"
        assert float(rows[2][1]) == 0.75
        assert float(rows[2][2]) == pytest.approx(8 / 9)
        assert rows[2][4] == "false"

    def test_table_mentions_every_cycle(self):
        text = comparison_table(compare_report(P35, [GOOD, WORSE]))
        assert "01101101" in text and "01110101" in text
        assert "yes" in text and "no" in text

    def test_json_uses_exact_strings(self):
        import json

        doc = json.loads(comparison_json(compare_report(P35, [GOOD])))
        assert doc[0]["variance"] == "1/2"
        assert doc[0]["pulse_variance"] == {"0": "2/9", "1": "6/25"}

    def test_empty_report(self):
        assert comparison_csv([]).splitlines()[0].startswith("cycle_string")
        assert comparison_table([]) == "(no cycles)\n"
