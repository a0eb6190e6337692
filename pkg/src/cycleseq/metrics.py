"""Side-by-side comparison of the cycle variance with a per-pulse variance.

The per-pulse statistic fixes one symbol as the pulse and measures how
evenly that symbol alone is spaced: deviations of its gaps from the ideal
gap N/m, averaged over the pulse count m.  It ignores the other symbol
entirely, so distinct cycles can tie on it while the cycle variance still
separates them; ``compare_report`` lines the two up per cycle.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .core import Cycle, SequencingProblem, distances, variance
from .optimality import verify_optimal

__all__ = [
    "pulse_variance",
    "compare_report",
    "comparison_table",
    "comparison_csv",
    "comparison_json",
]


def pulse_variance(cycle: Cycle, pulse: int) -> Fraction:
    """Spread of one symbol's gaps around their ideal value N/m.

    Note the 1/m normalization: this averages over the pulse's own
    occurrences, unlike the cycle variance which averages over all N
    positions.
    """
    if not 0 <= pulse < cycle.problem.n:
        raise ValueError(f"symbol index {pulse} out of range")
    m = cycle.problem.multiplicities[pulse]
    ideal = Fraction(cycle.problem.total, m)
    gaps = distances(cycle).by_symbol[pulse]
    return sum(((d - ideal) ** 2 for d in gaps), start=Fraction(0)) / m


def _cycle_string(cycle: Cycle) -> str:
    heads = [s[0] for s in cycle.problem.symbols]
    if len(set(heads)) == len(heads):
        return cycle.to_compact()
    return " ".join(cycle.labels())


def compare_report(
    problem: SequencingProblem, cycles: list[Cycle]
) -> list[dict]:
    """One row per cycle: its string, variance, per-symbol pulse variances,
    and the exact optimality verdict.  Two-symbol problems only (the verdict
    is exact there); all cycles must belong to the given problem."""
    rows = []
    for cycle in cycles:
        if cycle.problem != problem:
            raise ValueError("cycle list mixes problems")
        rows.append(
            {
                "cycle": _cycle_string(cycle),
                "variance": variance(cycle),
                "pulse_variance": {
                    label: pulse_variance(cycle, k)
                    for k, label in enumerate(problem.symbols)
                },
                "optimal": verify_optimal(cycle).optimal,
            }
        )
    return rows


def comparison_table(rows: list[dict]) -> str:
    """Aligned text rendering of a comparison report."""
    if not rows:
        return "(no cycles)\n"
    pulse_labels = list(rows[0]["pulse_variance"])
    header = ["cycle", "variance", *(f"pulse[{s}]" for s in pulse_labels), "optimal"]
    table = [header]
    for row in rows:
        table.append(
            [
                row["cycle"],
                f"{row['variance']} ({float(row['variance']):g})",
                *(
                    f"{row['pulse_variance'][s]} ({float(row['pulse_variance'][s]):g})"
                    for s in pulse_labels
                ),
                "yes" if row["optimal"] else "no",
            ]
        )
    widths = [max(len(r[c]) for r in table) for c in range(len(header))]
    lines = [
        "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(r)).rstrip()
        for r in table
    ]
    return "\n".join(lines) + "\n"


def comparison_csv(rows: list[dict]) -> str:
    """CSV rendering, one line per cycle, floats for the numeric columns."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if rows:
        num_pulses = len(rows[0]["pulse_variance"])
    else:
        num_pulses = 2
    writer.writerow(
        [
            "cycle_string",
            "variance",
            *(f"pulse_variance_sym{k}" for k in range(num_pulses)),
            "optimal",
        ]
    )
    for row in rows:
        writer.writerow(
            [
                row["cycle"],
                float(row["variance"]),
                *(float(v) for v in row["pulse_variance"].values()),
                "true" if row["optimal"] else "false",
            ]
        )
    return out.getvalue()


def comparison_json(rows: list[dict]) -> str:
    """JSON rendering with exact rationals as strings."""
    doc = [
        {
            "cycle": row["cycle"],
            "variance": str(row["variance"]),
            "variance_float": float(row["variance"]),
            "pulse_variance": {
                label: str(v) for label, v in row["pulse_variance"].items()
            },
            "optimal": row["optimal"],
        }
        for row in rows
    ]
    return json.dumps(doc, indent=2)
