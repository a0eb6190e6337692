"""Quadratic assignment model of the sequencing problem, with LP-file export.

Items 1..N are the symbol instances, block k holding instances
block_start[k]..block_end[k] of symbol k.  Binary x_i_j says item j directly
follows item i around the circle; continuous t_i is the position of item i
and d_i its forward recurrence distance.  The objective is the sum of the
d_i squared.  Rows:

  degA_i     every item has one successor
  degB_j     every item has one predecessor
  mtz_i_j    subtour elimination on positions, items 2..N only
  ord_i      instances of one symbol keep their index order
  dist_i     in-block distance equals the position gap
  wrap_k     the block's last instance wraps around to its first

The exported text follows the common LP file dialect; docs/miqp-format.md in
the repository root describes the exact grammar.  The quadratic objective is
written in the half-form ``[ 2 d ^ 2 + ... ] / 2`` that both major solvers
accept.

``minimize_over_tours`` solves the model exhaustively for small N and exists
as an independent check of the encoding, not as a practical solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Cycle, SequencingProblem

__all__ = [
    "LinearRow",
    "MiqpModel",
    "EvaluationResult",
    "build_model",
    "write_lp",
    "cycle_assignment",
    "check_assignment",
    "evaluate_assignment",
    "minimize_over_tours",
]


@dataclass(frozen=True)
class LinearRow:
    """One linear constraint: sum of coeff*var  (sense)  rhs."""

    name: str
    coeffs: tuple[tuple[str, int], ...]
    sense: str
    rhs: int


@dataclass(frozen=True)
class MiqpModel:
    problem: SequencingProblem
    binaries: tuple[str, ...]
    thetas: tuple[str, ...]
    deltas: tuple[str, ...]
    rows: tuple[LinearRow, ...]
    block_start: tuple[int, ...]
    block_end: tuple[int, ...]

    def count_rows(self, prefix: str) -> int:
        return sum(1 for row in self.rows if row.name.startswith(prefix))


@dataclass(frozen=True)
class EvaluationResult:
    feasible: bool
    objective: int | float
    violations: tuple[str, ...]


def _merged(coeffs: list[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    acc: dict[str, int] = {}
    for var, c in coeffs:
        acc[var] = acc.get(var, 0) + c
    return tuple((var, c) for var, c in acc.items() if c != 0)


def build_model(problem: SequencingProblem) -> MiqpModel:
    """Assemble variables and rows for the given problem (requires N >= 2)."""
    num = problem.total
    if num < 2:
        raise ValueError("the model needs at least two items")
    starts: list[int] = []
    ends: list[int] = []
    acc = 0
    for m in problem.multiplicities:
        starts.append(acc + 1)
        acc += m
        ends.append(acc)
    items = range(1, num + 1)
    binaries = tuple(f"x_{i}_{j}" for i in items for j in items if j != i)
    thetas = tuple(f"t_{i}" for i in items)
    deltas = tuple(f"d_{i}" for i in items)
    rows: list[LinearRow] = []
    for i in items:
        rows.append(
            LinearRow(
                f"degA_{i}",
                tuple((f"x_{i}_{j}", 1) for j in items if j != i),
                "=",
                1,
            )
        )
    for j in items:
        rows.append(
            LinearRow(
                f"degB_{j}",
                tuple((f"x_{i}_{j}", 1) for i in items if i != j),
                "=",
                1,
            )
        )
    for i in items:
        for j in items:
            if i == 1 or j == 1 or i == j:
                continue
            rows.append(
                LinearRow(
                    f"mtz_{i}_{j}",
                    ((f"t_{i}", 1), (f"t_{j}", -1), (f"x_{i}_{j}", num)),
                    "<=",
                    num - 1,
                )
            )
    for k in range(problem.n):
        for i in range(starts[k], ends[k]):
            rows.append(
                LinearRow(f"ord_{i}", ((f"t_{i}", 1), (f"t_{i + 1}", -1)), "<=", 0)
            )
    for k in range(problem.n):
        for i in range(starts[k], ends[k]):
            rows.append(
                LinearRow(
                    f"dist_{i}",
                    ((f"d_{i}", 1), (f"t_{i + 1}", -1), (f"t_{i}", 1)),
                    "=",
                    0,
                )
            )
    for k in range(problem.n):
        rows.append(
            LinearRow(
                f"wrap_{ends[k]}",
                _merged(
                    [
                        (f"d_{ends[k]}", 1),
                        (f"t_{ends[k]}", 1),
                        (f"t_{starts[k]}", -1),
                    ]
                ),
                "=",
                num,
            )
        )
    return MiqpModel(
        problem=problem,
        binaries=binaries,
        thetas=thetas,
        deltas=deltas,
        rows=tuple(rows),
        block_start=tuple(starts),
        block_end=tuple(ends),
    )


def _row_text(row: LinearRow) -> str:
    parts: list[str] = []
    for var, c in row.coeffs:
        sign, mag = ("-", -c) if c < 0 else ("+", c)
        term = var if mag == 1 else f"{mag} {var}"
        if not parts:
            parts.append(term if sign == "+" else f"- {term}")
        else:
            parts.append(f"{sign} {term}")
    return f"{' '.join(parts)} {row.sense} {row.rhs}"


def write_lp(model: MiqpModel) -> str:
    """Serialize the model as LP-format text.  Output is deterministic."""
    problem = model.problem
    lines = [
        "\\ cyclic sequencing quadratic model",
        f"\\ symbols: {','.join(problem.symbols)}",
        f"\\ multiplicities: {','.join(str(m) for m in problem.multiplicities)}",
        "Minimize",
        " obj: [ " + " + ".join(f"2 {d} ^ 2" for d in model.deltas) + " ] / 2",
        "Subject To",
    ]
    lines.extend(f" {row.name}: {_row_text(row)}" for row in model.rows)
    lines.append("Binary")
    names = model.binaries
    for at in range(0, len(names), 12):
        lines.append(" " + " ".join(names[at : at + 12]))
    lines.append("End")
    return "\n".join(lines) + "\n"


def _ordering_values(model: MiqpModel, order: tuple[int, ...]) -> dict[str, int]:
    """Variable values induced by visiting the items in the given order.

    Position h goes to the h-th visited item, successor binaries follow the
    order cyclically, and every d is completed from its defining equation.
    """
    num = model.problem.total
    values: dict[str, int] = {}
    for h, item in enumerate(order):
        values[f"t_{item}"] = h
        values[f"x_{item}_{order[(h + 1) % num]}"] = 1
    for k in range(model.problem.n):
        lo, hi = model.block_start[k], model.block_end[k]
        for i in range(lo, hi):
            values[f"d_{i}"] = values[f"t_{i + 1}"] - values[f"t_{i}"]
        values[f"d_{hi}"] = num - values[f"t_{hi}"] + values[f"t_{lo}"]
    return values


def cycle_assignment(model: MiqpModel, cycle: Cycle) -> dict[str, int]:
    """Variable values that encode the cycle.

    Instances of each symbol are numbered in order of appearance, so the
    cycle must start with the first symbol (rotate it there first);
    otherwise the anchor convention of the model cannot hold.
    """
    if cycle.problem != model.problem:
        raise ValueError("cycle does not belong to the model's problem")
    if cycle.positions[0] != 0:
        raise ValueError("cycle must start with an instance of the first symbol")
    next_item = list(model.block_start)
    order: list[int] = []
    for k in cycle.positions:
        order.append(next_item[k])
        next_item[k] += 1
    return _ordering_values(model, tuple(order))


def check_assignment(
    model: MiqpModel, values: dict[str, int]
) -> EvaluationResult:
    """Evaluate every row and variable domain; missing variables count as 0."""
    violations: list[str] = []
    for name in model.binaries:
        if values.get(name, 0) not in (0, 1):
            violations.append(f"domain_{name}")
    for name in model.thetas + model.deltas:
        if values.get(name, 0) < 0:
            violations.append(f"domain_{name}")
    for row in model.rows:
        lhs = sum(c * values.get(var, 0) for var, c in row.coeffs)
        ok = lhs == row.rhs if row.sense == "=" else lhs <= row.rhs
        if not ok:
            violations.append(row.name)
    objective = sum(values.get(d, 0) ** 2 for d in model.deltas)
    return EvaluationResult(not violations, objective, tuple(violations))


def evaluate_assignment(model: MiqpModel, cycle: Cycle) -> EvaluationResult:
    """Encode the cycle and evaluate it against the full model."""
    return check_assignment(model, cycle_assignment(model, cycle))


def minimize_over_tours(model: MiqpModel) -> int:
    """Solve the model by exhausting the binary assignments (tiny N only).

    The degree rows force the binaries to encode a successor permutation.
    A permutation that splits into several cycles admits no position values
    at all: adding the mtz rows around a subtour that avoids item 1 gives
    N*L <= (N-1)*L for the subtour length L, a contradiction.  So only
    single tours through item 1 remain.  Each tour is completed with the
    canonical positions 0..N-1 in visiting order (the mtz rows force that
    order, though not the exact values); the d variables then equal the
    tour's recurrence distances, so the minimum over tours is the exhaustive
    minimum over admissible cycles.  Leaving the positions continuous would
    relax that value, which is why the canonical completion is fixed here.
    """
    num = model.problem.total
    best: int | None = None
    for perm in itertools.permutations(range(2, num + 1)):
        values = _ordering_values(model, (1,) + perm)
        outcome = check_assignment(model, values)
        if outcome.feasible and (best is None or outcome.objective < best):
            best = outcome.objective
    if best is None:
        raise ValueError("model admits no feasible tour")
    return best
