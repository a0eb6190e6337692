"""Optimality certificates for cycle variance.

For two-symbol problems the variance-minimizing arrangements are exactly the
cycles whose per-symbol distance multisets are as balanced as the integers
allow: if the symbol count divides the cycle length every distance equals the
quotient, otherwise the distances take the two nearest integers with the
unique counts that sum correctly.  ``verify_optimal`` checks that condition
and is a complete test for two symbols.

``distance_conformance`` runs the same per-symbol comparison for any number
of symbols, as an advisory report only: with three or more symbols the
balanced multiset may be unattainable, so conformance is sufficient but not
necessary there.

``lower_bound`` gives the matching bound on the sum of squared distances for
any alphabet size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .core import Cycle, SequencingProblem, distances

__all__ = [
    "DistanceSpec",
    "SymbolCheck",
    "OptimalityVerdict",
    "distance_spec",
    "distance_conformance",
    "verify_optimal",
    "lower_bound",
    "lower_bound_variance",
    "is_unclustered",
]


@dataclass(frozen=True)
class DistanceSpec:
    """Most-balanced distance multiset for one symbol.

    When ``divisible`` the multiset is {single: multiplicity}; otherwise the
    distances split between ``lower`` = floor(N/m) and ``upper`` = lower + 1
    with counts ``count_lower`` = m*upper - N and ``count_upper`` = N - m*lower.
    """

    symbol: str
    multiplicity: int
    divisible: bool
    single: int | None = None
    lower: int | None = None
    upper: int | None = None
    count_lower: int | None = None
    count_upper: int | None = None

    def expected_counts(self) -> dict[int, int]:
        """The multiset as a distance -> count mapping."""
        if self.divisible:
            return {self.single: self.multiplicity}
        return {self.lower: self.count_lower, self.upper: self.count_upper}


@dataclass(frozen=True)
class SymbolCheck:
    label: str
    expected: dict[int, int]
    actual: dict[int, int]
    conforms: bool


@dataclass(frozen=True)
class OptimalityVerdict:
    optimal: bool
    symbols: tuple[SymbolCheck, ...]

    def to_json_dict(self) -> dict:
        return {
            "optimal": self.optimal,
            "symbols": [
                {
                    "label": c.label,
                    "expected": {str(d): v for d, v in sorted(c.expected.items())},
                    "actual": {str(d): v for d, v in sorted(c.actual.items())},
                    "conforms": c.conforms,
                }
                for c in self.symbols
            ],
        }


def distance_spec(problem: SequencingProblem, symbol: int) -> DistanceSpec:
    """Balanced distance multiset for one symbol of the problem."""
    if not 0 <= symbol < problem.n:
        raise ValueError(f"symbol index {symbol} out of range")
    total = problem.total
    m = problem.multiplicities[symbol]
    label = problem.symbols[symbol]
    if total % m == 0:
        return DistanceSpec(label, m, divisible=True, single=total // m)
    lower = total // m
    upper = lower + 1
    return DistanceSpec(
        label,
        m,
        divisible=False,
        lower=lower,
        upper=upper,
        count_lower=m * upper - total,
        count_upper=total - m * lower,
    )


def distance_conformance(cycle: Cycle) -> OptimalityVerdict:
    """Compare every symbol's distance multiset against its balanced spec.

    Advisory for three or more symbols: conformance certifies minimal
    variance, but non-conformance does not refute it there.
    """
    profile = distances(cycle)
    checks = []
    for k in range(cycle.problem.n):
        spec = distance_spec(cycle.problem, k)
        expected = spec.expected_counts()
        actual = dict(Counter(profile.by_symbol[k]))
        checks.append(
            SymbolCheck(
                label=cycle.problem.symbols[k],
                expected=expected,
                actual=actual,
                conforms=actual == expected,
            )
        )
    return OptimalityVerdict(all(c.conforms for c in checks), tuple(checks))


def verify_optimal(cycle: Cycle) -> OptimalityVerdict:
    """Decide variance minimality of a two-symbol cycle.

    The balanced-multiset condition is both necessary and sufficient for two
    symbols, so the verdict is exact.
    """
    if cycle.problem.n != 2:
        raise ValueError(
            "exact verification covers two-symbol problems; "
            "use distance_conformance for an advisory check"
        )
    return distance_conformance(cycle)


def lower_bound(problem: SequencingProblem) -> Fraction:
    """Bound on the sum of squared distances: sum over symbols of N^2/m_k.

    Attained exactly when every symbol admits a perfectly even spacing.
    """
    total = problem.total
    return sum(
        (Fraction(total * total, m) for m in problem.multiplicities),
        start=Fraction(0),
    )


def lower_bound_variance(problem: SequencingProblem) -> Fraction:
    """Same bound on the variance scale: bound/N - n^2.  May be negative;
    callers that display it should clamp at zero, the stored value is raw."""
    n = problem.n
    return lower_bound(problem) / problem.total - n * n


def is_unclustered(cycle: Cycle, symbol: int) -> bool:
    """True when no two instances of the symbol are adjacent."""
    if not 0 <= symbol < cycle.problem.n:
        raise ValueError(f"symbol index {symbol} out of range")
    profile = distances(cycle)
    return all(d > 1 for d in profile.by_symbol[symbol])
