"""Data model for cyclic sequencing problems and exact cycle statistics.

A sequencing problem is an alphabet of distinct symbols together with a
positive multiplicity for each symbol.  A cycle is an arrangement of all
symbol instances around a circle; two arrangements that differ by rotation
describe the same circle, so a canonical-rotation helper is provided.

The central statistic is the forward recurrence distance: for each position,
the number of steps until the same symbol next appears (scanning cyclically,
so a symbol occurring once has distance equal to the cycle length).  All
moments of that distance are exact rationals; no floating point is used
anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "SequencingProblem",
    "Cycle",
    "DistanceProfile",
    "base_cycle",
    "distances",
    "sub_moment",
    "raw_moment",
    "mean",
    "central_moment",
    "variance",
    "canonical_rotation",
]


@dataclass(frozen=True)
class SequencingProblem:
    """An alphabet of distinct symbol labels with per-symbol multiplicities."""

    symbols: tuple[str, ...]
    multiplicities: tuple[int, ...]

    def __init__(self, symbols: Iterable[str], multiplicities: Iterable[int]):
        symbols = tuple(symbols)
        multiplicities = tuple(int(m) for m in multiplicities)
        if not symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(symbols) != len(multiplicities):
            raise ValueError("one multiplicity is required per symbol")
        if any(not isinstance(s, str) or not s for s in symbols):
            raise ValueError("symbol labels must be non-empty strings")
        if len(set(symbols)) != len(symbols):
            raise ValueError("symbol labels must be distinct")
        if any(m < 1 for m in multiplicities):
            raise ValueError("multiplicities must be positive integers")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "multiplicities", multiplicities)

    @property
    def n(self) -> int:
        """Number of distinct symbols."""
        return len(self.symbols)

    @property
    def total(self) -> int:
        """Total number of symbol instances (the cycle length)."""
        return sum(self.multiplicities)

    def index_of(self, label: str) -> int:
        try:
            return self.symbols.index(label)
        except ValueError:
            raise ValueError(f"unknown symbol label {label!r}") from None

    def to_json_dict(self) -> dict:
        return {
            "symbols": list(self.symbols),
            "multiplicities": list(self.multiplicities),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SequencingProblem":
        if not isinstance(data, dict):
            raise ValueError("problem document must be a JSON object")
        try:
            return cls(data["symbols"], data["multiplicities"])
        except KeyError as exc:
            raise ValueError(f"problem document is missing key {exc}") from None


@dataclass(frozen=True)
class Cycle:
    """A cyclic arrangement, stored as symbol indices in fixed-position form.

    Equality of two Cycle values is positional; use ``rotationally_equal``
    or compare canonical rotations to test equality as circles.
    """

    problem: SequencingProblem
    positions: tuple[int, ...]

    def __init__(self, problem: SequencingProblem, positions: Iterable[int]):
        positions = tuple(int(x) for x in positions)
        counts = [0] * problem.n
        for x in positions:
            if not 0 <= x < problem.n:
                raise ValueError(f"symbol index {x} out of range")
            counts[x] += 1
        if tuple(counts) != problem.multiplicities:
            raise ValueError("arrangement does not realise the multiplicities")
        object.__setattr__(self, "problem", problem)
        object.__setattr__(self, "positions", positions)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.problem.symbols[x] for x in self.positions)

    def rotate(self, offset: int) -> "Cycle":
        r = offset % self.problem.total
        return Cycle(self.problem, self.positions[r:] + self.positions[:r])

    def rotationally_equal(self, other: "Cycle") -> bool:
        if self.problem != other.problem:
            return False
        return (
            canonical_rotation(self).positions == canonical_rotation(other).positions
        )

    def to_compact(self) -> str:
        """Render as one character per instance, using each label's first character.

        Only defined when the first characters of the labels are pairwise
        distinct, otherwise the string would be ambiguous.
        """
        heads = [s[0] for s in self.problem.symbols]
        if len(set(heads)) != len(heads):
            raise ValueError("labels do not have distinct first characters")
        return "".join(heads[x] for x in self.positions)

    @classmethod
    def from_labels(
        cls, problem: SequencingProblem, labels: Iterable[str]
    ) -> "Cycle":
        return cls(problem, (problem.index_of(s) for s in labels))

    @classmethod
    def from_compact(cls, problem: SequencingProblem, text: str) -> "Cycle":
        heads = {s[0]: k for k, s in enumerate(problem.symbols)}
        if len(heads) != problem.n:
            raise ValueError("labels do not have distinct first characters")
        try:
            return cls(problem, (heads[c] for c in text))
        except KeyError as exc:
            raise ValueError(f"character {exc} is not a symbol") from None

    @classmethod
    def from_string(cls, text: str) -> "Cycle":
        """Build a cycle from a compact string, inferring the alphabet.

        Symbols are single characters, ordered by first appearance in the
        string.
        """
        if not text:
            raise ValueError("cycle string must be non-empty")
        order: list[str] = []
        for c in text:
            if c not in order:
                order.append(c)
        counts = [text.count(c) for c in order]
        problem = SequencingProblem(order, counts)
        return cls(problem, (order.index(c) for c in text))

    def to_json_dict(self) -> dict:
        return {
            "problem": self.problem.to_json_dict(),
            "sequence": list(self.labels()),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Cycle":
        if not isinstance(data, dict):
            raise ValueError("cycle document must be a JSON object")
        try:
            problem = SequencingProblem.from_json_dict(data["problem"])
            return cls.from_labels(problem, data["sequence"])
        except KeyError as exc:
            raise ValueError(f"cycle document is missing key {exc}") from None


@dataclass(frozen=True)
class DistanceProfile:
    """Forward recurrence distances of a cycle.

    ``deltas`` is indexed by cycle position; ``by_symbol`` groups the same
    values by symbol, in order of the symbol's occurrences around the cycle.
    """

    deltas: tuple[int, ...]
    by_symbol: tuple[tuple[int, ...], ...]


def base_cycle(problem: SequencingProblem) -> Cycle:
    """The arrangement that lists every symbol's instances consecutively."""
    seq: list[int] = []
    for k, m in enumerate(problem.multiplicities):
        seq.extend([k] * m)
    return Cycle(problem, seq)


def distances(cycle: Cycle) -> DistanceProfile:
    """Compute the forward recurrence distance at every position.

    For a symbol occurring once the next occurrence is the position itself
    after a full revolution, hence distance N.
    """
    total = cycle.problem.total
    occurrences: list[list[int]] = [[] for _ in range(cycle.problem.n)]
    for j, k in enumerate(cycle.positions):
        occurrences[k].append(j)
    deltas = [0] * total
    for js in occurrences:
        m = len(js)
        for idx, j in enumerate(js):
            step = (js[(idx + 1) % m] - j) % total
            deltas[j] = step if step else total
    by_symbol = tuple(tuple(deltas[j] for j in js) for js in occurrences)
    return DistanceProfile(tuple(deltas), by_symbol)


def _check_order(p: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError("moment order must be a positive integer")


def sub_moment(cycle: Cycle, p: int, symbol: int) -> Fraction:
    """Contribution of one symbol to the p-th raw moment: (1/N) * sum of d^p
    over that symbol's positions."""
    _check_order(p)
    if not 0 <= symbol < cycle.problem.n:
        raise ValueError(f"symbol index {symbol} out of range")
    profile = distances(cycle)
    return Fraction(
        sum(d**p for d in profile.by_symbol[symbol]), cycle.problem.total
    )


def raw_moment(cycle: Cycle, p: int) -> Fraction:
    """(1/N) * sum of d^p over all positions."""
    _check_order(p)
    profile = distances(cycle)
    return Fraction(sum(d**p for d in profile.deltas), cycle.problem.total)


def mean(cycle: Cycle) -> Fraction:
    """First raw moment.  Always equals the number of distinct symbols."""
    return raw_moment(cycle, 1)


def central_moment(cycle: Cycle, p: int) -> Fraction:
    """(1/N) * sum of (d - mu)^p, with mu the (integer) mean distance."""
    _check_order(p)
    mu = cycle.problem.n
    profile = distances(cycle)
    return Fraction(
        sum((d - mu) ** p for d in profile.deltas), cycle.problem.total
    )


def variance(cycle: Cycle) -> Fraction:
    """Second central moment of the forward recurrence distance."""
    return central_moment(cycle, 2)


def _least_rotation_start(seq: Sequence[int]) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    doubled = tuple(seq) + tuple(seq)
    fail = [-1] * len(doubled)
    start = 0
    for j in range(1, len(doubled)):
        c = doubled[j]
        i = fail[j - start - 1]
        while i != -1 and c != doubled[start + i + 1]:
            if c < doubled[start + i + 1]:
                start = j - i - 1
            i = fail[i]
        if c != doubled[start + i + 1]:
            if c < doubled[start]:
                start = j
            fail[j - start] = -1
        else:
            fail[j - start] = i + 1
    return start % len(seq)


def canonical_rotation(cycle: Cycle) -> Cycle:
    """The rotation whose index sequence is lexicographically least."""
    return cycle.rotate(_least_rotation_start(cycle.positions))
