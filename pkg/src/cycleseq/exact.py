"""Brute-force minimization over all admissible cycles.

Rotation symmetry is quotiented out by pinning position 1 to the first
instance of the first symbol, which leaves
(N-1)! / ((m_1 - 1)! * m_2! * ... * m_n!) arrangements to visit.  That count
grows factorially, so enumeration is guarded by a hard cap on N and refuses
larger problems rather than hanging.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import Cycle, SequencingProblem, canonical_rotation, distances

__all__ = [
    "CapExceeded",
    "ExactResult",
    "DEFAULT_CAP",
    "enumerate_admissible",
    "exact_min",
]

DEFAULT_CAP = 16


class CapExceeded(RuntimeError):
    """Problem size exceeds the enumeration cap."""


@dataclass(frozen=True)
class ExactResult:
    """Outcome of exhaustive minimization of the sum of squared distances."""

    problem: SequencingProblem
    min_objective: int
    min_variance: Fraction
    witnesses: tuple[Cycle, ...]
    enumerated_count: int

    def to_json_dict(self) -> dict:
        return {
            "problem": self.problem.to_json_dict(),
            "min_objective": self.min_objective,
            "min_variance": str(self.min_variance),
            "min_variance_float": float(self.min_variance),
            "enumerated_count": self.enumerated_count,
            "witnesses": [list(c.labels()) for c in self.witnesses],
        }


def _multiset_permutations(counts: list[int]) -> Iterator[tuple[int, ...]]:
    """All distinct arrangements of a multiset, in lexicographic order."""
    remaining = sum(counts)
    if remaining == 0:
        yield ()
        return
    for k, c in enumerate(counts):
        if c == 0:
            continue
        counts[k] -= 1
        for rest in _multiset_permutations(counts):
            yield (k,) + rest
        counts[k] += 1


def enumerate_admissible(
    problem: SequencingProblem, cap: int = DEFAULT_CAP
) -> Iterator[Cycle]:
    """Yield one representative per rotation class, first symbol pinned first."""
    if problem.total > cap:
        raise CapExceeded(
            f"problem has {problem.total} items, enumeration cap is {cap}"
        )
    counts = list(problem.multiplicities)
    counts[0] -= 1
    for rest in _multiset_permutations(counts):
        yield Cycle(problem, (0,) + rest)


def exact_min(problem: SequencingProblem, cap: int = DEFAULT_CAP) -> ExactResult:
    """Minimize the sum of squared distances by exhaustive enumeration.

    Witnesses are every minimizer, reduced to canonical rotations,
    de-duplicated, and sorted.
    """
    best: int | None = None
    argmins: list[Cycle] = []
    count = 0
    for cycle in enumerate_admissible(problem, cap):
        count += 1
        objective = sum(d * d for d in distances(cycle).deltas)
        if best is None or objective < best:
            best = objective
            argmins = [cycle]
        elif objective == best:
            argmins.append(cycle)
    canon = {canonical_rotation(c).positions for c in argmins}
    witnesses = tuple(
        Cycle(problem, pos) for pos in sorted(canon)
    )
    total = problem.total
    n = problem.n
    return ExactResult(
        problem=problem,
        min_objective=best,
        min_variance=Fraction(best, total) - n * n,
        witnesses=witnesses,
        enumerated_count=count,
    )
