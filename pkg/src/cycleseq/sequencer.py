"""Euclidean construction of variance-minimizing two-symbol cycles.

The construction mirrors the subtraction-free form of Euclid's algorithm on
the two multiplicities.  It maintains a pair of composite words (A, B).  At
every step the more abundant word absorbs the other, quotient times, exactly
as the larger number absorbs the smaller in one division step; the final
word, repeated gcd-many times, closes the cycle.

The full division trace is kept so callers can render it as a table or
serialize it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .core import Cycle, SequencingProblem

__all__ = [
    "EsaStep",
    "EsaTrace",
    "esa_solve",
    "single_symbol_cycle",
    "uniform_cycle",
    "gcd",
    "render_trace_table",
    "trace_to_json",
]


@dataclass(frozen=True)
class EsaStep:
    """One division step.

    ``dividend`` and ``divisor`` are the current word counts (the larger
    first); ``total`` is their sum, the number of words being arranged at
    this step.  The expansions record each composite word flattened to base
    symbol indices.
    """

    index: int
    total: int
    dividend: int
    divisor: int
    quotient: int
    remainder: int
    a_formal: str
    b_formal: str
    a_expansion: tuple[int, ...]
    b_expansion: tuple[int, ...]


@dataclass(frozen=True)
class EsaTrace:
    """Complete run of the construction: seed words, steps, and the result."""

    problem: SequencingProblem
    a0: int
    b0: int
    steps: tuple[EsaStep, ...]
    final_power: int
    result: Cycle


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError("arguments must be positive integers")
    return math.gcd(a, b)


def esa_solve(problem: SequencingProblem) -> EsaTrace:
    """Run the Euclidean construction on a two-symbol problem.

    The seed word A0 is the symbol of larger multiplicity (ties go to the
    first symbol), B0 the other.  Each step replaces (A, B) with
    (A^quotient B, A) and the multiplicity pair with (divisor, remainder),
    stopping when the remainder hits zero; the result is the last A word
    repeated ``final_power`` = gcd(m1, m2) times.
    """
    if problem.n != 2:
        raise ValueError("the construction is defined for two-symbol problems")
    m1, m2 = problem.multiplicities
    a0, b0 = (0, 1) if m1 >= m2 else (1, 0)
    dividend = problem.multiplicities[a0]
    divisor = problem.multiplicities[b0]
    a_word: tuple[int, ...] = (a0,)
    b_word: tuple[int, ...] = (b0,)
    steps: list[EsaStep] = []
    i = 0
    remainder = 1
    while remainder > 0:
        i += 1
        total = dividend + divisor
        quotient, remainder = divmod(dividend, divisor)
        a_next = a_word * quotient + b_word
        steps.append(
            EsaStep(
                index=i,
                total=total,
                dividend=dividend,
                divisor=divisor,
                quotient=quotient,
                remainder=remainder,
                a_formal=f"A{i}=A{i - 1}^{quotient} B{i - 1}",
                b_formal=f"B{i}=A{i - 1}",
                a_expansion=a_next,
                b_expansion=a_word,
            )
        )
        a_word, b_word = a_next, a_word
        dividend, divisor = divisor, remainder
    final_power = steps[-1].divisor
    result = Cycle(problem, steps[-1].a_expansion * final_power)
    return EsaTrace(
        problem=problem,
        a0=a0,
        b0=b0,
        steps=tuple(steps),
        final_power=final_power,
        result=result,
    )


def single_symbol_cycle(problem: SequencingProblem) -> Cycle:
    """The only arrangement of a one-symbol problem."""
    if problem.n != 1:
        raise ValueError("expected a one-symbol problem")
    return Cycle(problem, (0,) * problem.multiplicities[0])


def uniform_cycle(problem: SequencingProblem) -> Cycle:
    """Round-robin arrangement for equal multiplicities: (a1 a2 ... an)^m."""
    m = problem.multiplicities[0]
    if any(mk != m for mk in problem.multiplicities):
        raise ValueError("uniform arrangement requires equal multiplicities")
    return Cycle(problem, tuple(range(problem.n)) * m)


def render_trace_table(trace: EsaTrace) -> str:
    """Render the division trace as an aligned text table.

    Row 0 defines the seed words; each later row shows the live alphabet,
    the item count N, the division P = Q*D + R, and the word rewrites.  The
    footer states the closing power.
    """
    header = ("i", "alphabet", "N", "P", "D", "Q", "R", "A", "B")
    rows: list[tuple[str, ...]] = [
        (
            "0",
            "",
            "",
            "",
            "",
            "",
            "",
            f"A0={trace.problem.symbols[trace.a0]}",
            f"B0={trace.problem.symbols[trace.b0]}",
        )
    ]
    last = trace.steps[-1].index
    for s in trace.steps:
        rows.append(
            (
                str(s.index),
                f"[A{s.index - 1},B{s.index - 1}]",
                str(s.total),
                str(s.dividend),
                str(s.divisor),
                str(s.quotient),
                str(s.remainder),
                s.a_formal,
                s.b_formal if s.index != last else "",
            )
        )
    widths = [
        max(len(header[c]), *(len(r[c]) for r in rows)) for c in range(len(header))
    ]
    numeric = {0, 2, 3, 4, 5, 6}

    def fmt(cells: tuple[str, ...]) -> str:
        out = []
        for c, cell in enumerate(cells):
            out.append(cell.rjust(widths[c]) if c in numeric else cell.ljust(widths[c]))
        return ("  ".join(out)).rstrip()

    lines = [fmt(header)]
    lines.extend(fmt(r) for r in rows)
    lines.append(f"C=A{last}^{trace.final_power}")
    return "\n".join(lines) + "\n"


def trace_to_json(trace: EsaTrace) -> str:
    """Serialize the trace for machine consumption."""
    doc = {
        "problem": trace.problem.to_json_dict(),
        "seed": {
            "A0": trace.problem.symbols[trace.a0],
            "B0": trace.problem.symbols[trace.b0],
        },
        "steps": [
            {
                "i": s.index,
                "N": s.total,
                "P": s.dividend,
                "D": s.divisor,
                "Q": s.quotient,
                "R": s.remainder,
                "A": s.a_formal,
                "B": s.b_formal,
            }
            for s in trace.steps
        ],
        "final_power": trace.final_power,
        "cycle": list(trace.result.labels()),
    }
    return json.dumps(doc, indent=2)
