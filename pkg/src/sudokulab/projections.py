"""Continuous-relaxation solver via cyclic projection onto simplex slices.

The relaxation places a probability p_ijk on digit k at cell (i,j): a
9x9x9 tensor subject to 324 sum-to-one constraints (each digit once per
row, once per column, once per subgrid, and a distribution per cell) plus
nonnegativity.  Each constraint restricted to the nonnegative orthant is
a unit simplex over a 9-entry slice, so one sweep projects every active
slice in a fixed order.  Clues fix variables to 0 or 1 up front and void
the constraints they satisfy outright.  The relaxed fixed point is
rounded to a board by imputing each cell's most probable digit.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .board import Board, ClueMask, PuzzleError, is_solved, violation_cost
from .report import SolveReport

FREE = 0
FIXED_ZERO = 1
FIXED_ONE = 2


@dataclass
class ProbabilityTensor:
    values: np.ndarray   # (9,9,9) float64, [i-1, j-1, k-1]
    status: np.ndarray   # (9,9,9) int8, FREE / FIXED_ZERO / FIXED_ONE

    @classmethod
    def zeros(cls) -> "ProbabilityTensor":
        return cls(np.zeros((9, 9, 9)), np.zeros((9, 9, 9), dtype=np.int8))


@dataclass(frozen=True)
class ConstraintSlice:
    kind: str                  # "row" | "column" | "subgrid" | "cell"
    members: tuple[int, ...]   # 9 flat indices into the 729-vector
    free: tuple[int, ...]      # members still free after clue elimination

    @property
    def free_idx(self) -> np.ndarray:
        return np.asarray(self.free, dtype=np.intp)


@dataclass(frozen=True)
class ConstraintPlan:
    slices: tuple[ConstraintSlice, ...]
    fixed_count: int
    _free_idx: tuple[np.ndarray, ...] = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class ProjectionConfig:
    max_sweeps: int = 2000
    stall_tolerance: float = 1e-9
    check_every: int = 1

    def __post_init__(self) -> None:
        if self.max_sweeps < 1 or self.check_every < 1:
            raise ValueError("max_sweeps and check_every must be positive")
        if self.stall_tolerance < 0:
            raise ValueError("stall_tolerance must be nonnegative")


def project_rectangle(point, lower, upper) -> np.ndarray:
    """Componentwise clamp onto the box [lower, upper]."""
    y = np.asarray(point, dtype=float)
    a = np.asarray(lower, dtype=float)
    b = np.asarray(upper, dtype=float)
    if y.shape != a.shape or y.shape != b.shape:
        raise ValueError("point, lower, and upper must share a shape")
    if np.any(a > b):
        raise ValueError("lower bound exceeds upper bound")
    return np.minimum(np.maximum(a, y), b)


def project_hyperplane(point, normal, offset: float) -> np.ndarray:
    """Orthogonal projection onto {x : normal . x = offset}."""
    y = np.asarray(point, dtype=float)
    v = np.asarray(normal, dtype=float)
    nrm2 = float(v @ v)
    if nrm2 == 0.0:
        raise ValueError("normal must be nonzero")
    return y - ((v @ y - offset) / nrm2) * v


def project_simplex(point) -> np.ndarray:
    """Euclidean projection onto {x : x >= 0, sum(x) = 1}.

    Sort descending, keep the largest k with w_k > (sum of the top k - 1)/k,
    and clip at the resulting threshold.  O(d log d), exact up to round-off.
    """
    y = np.asarray(point, dtype=float)
    if y.ndim != 1 or y.size == 0:
        raise ValueError("point must be a nonempty 1-d vector")
    w = np.sort(y)[::-1]
    css = np.cumsum(w)
    j = np.arange(1, y.size + 1)
    # w_1 > w_1 - 1 always holds, so the feasible set is nonempty
    k = int(np.nonzero(w > (css - 1.0) / j)[0][-1]) + 1
    lam = (css[k - 1] - 1.0) / k
    return np.maximum(y - lam, 0.0)


def _flat(i: int, j: int, k: int) -> int:
    # 0-based flat index into the 729-vector
    return (i * 9 + j) * 9 + k


def _all_slices() -> list[tuple[str, tuple[int, ...]]]:
    """The 324 constraint slices in the fixed sweep order: rows, columns,
    subgrids, then cell distributions."""
    out: list[tuple[str, tuple[int, ...]]] = []
    for i in range(9):
        for k in range(9):
            out.append(("row", tuple(_flat(i, j, k) for j in range(9))))
    for j in range(9):
        for k in range(9):
            out.append(("column", tuple(_flat(i, j, k) for i in range(9))))
    for a in (0, 3, 6):
        for b in (0, 3, 6):
            for k in range(9):
                out.append(
                    ("subgrid", tuple(_flat(a + i, b + j, k) for i in range(3) for j in range(3)))
                )
    for i in range(9):
        for j in range(9):
            out.append(("cell", tuple(_flat(i, j, k) for k in range(9))))
    return out


def build_constraint_plan(puzzle: Board, clue_mask: ClueMask) -> tuple[ProbabilityTensor, ConstraintPlan]:
    """Fix the tensor entries forced by each clue and drop the constraints
    a clue satisfies outright.

    A clue k at (i,j) fixes p_ijk = 1 and zeroes the other eight digits of
    the cell, digit k elsewhere in the row, in the column, and in the rest
    of the subgrid.  Any slice containing a fixed-one member is voided;
    surviving slices keep only their free members.
    """
    tensor = ProbabilityTensor.zeros()
    status = tensor.status.reshape(-1)
    values = tensor.values.reshape(-1)

    def fix(idx: int, mark: int) -> None:
        cur = status[idx]
        if cur != FREE and cur != mark:
            raise PuzzleError("clue conflict: tensor entry forced to both 0 and 1")
        status[idx] = mark
        values[idx] = 1.0 if mark == FIXED_ONE else 0.0

    for cell in range(81):
        if not clue_mask[cell]:
            continue
        i, j = cell // 9, cell % 9
        k = puzzle[cell] - 1
        fix(_flat(i, j, k), FIXED_ONE)
        for l in range(9):
            if l != k:
                fix(_flat(i, j, l), FIXED_ZERO)
        for i2 in range(9):
            if i2 != i:
                fix(_flat(i2, j, k), FIXED_ZERO)
        for j2 in range(9):
            if j2 != j:
                fix(_flat(i, j2, k), FIXED_ZERO)
        a, b = 3 * (i // 3), 3 * (j // 3)
        for i2 in range(a, a + 3):
            for j2 in range(b, b + 3):
                if i2 != i and j2 != j:
                    fix(_flat(i2, j2, k), FIXED_ZERO)

    slices = []
    for kind, members in _all_slices():
        if any(status[m] == FIXED_ONE for m in members):
            continue
        free = tuple(m for m in members if status[m] == FREE)
        if free:
            slices.append(ConstraintSlice(kind, members, free))
    fixed_count = int(np.count_nonzero(status))
    plan = ConstraintPlan(
        slices=tuple(slices),
        fixed_count=fixed_count,
        _free_idx=tuple(s.free_idx for s in slices),
    )
    return tensor, plan


def sweep(tensor: ProbabilityTensor, plan: ConstraintPlan) -> tuple[ProbabilityTensor, float]:
    """Project every active slice once, in plan order; returns the tensor
    and the largest absolute entry change of the sweep.  Fixed entries are
    never touched (the projection acts on the free sub-vector only)."""
    flat = tensor.values.reshape(-1)
    max_change = 0.0
    free_lists = plan._free_idx if plan._free_idx else tuple(s.free_idx for s in plan.slices)
    for idx in free_lists:
        y = flat[idx]
        x = project_simplex(y)
        change = float(np.max(np.abs(x - y)))
        if change > max_change:
            max_change = change
        flat[idx] = x
    return tensor, max_change


def round_tensor(tensor: ProbabilityTensor) -> Board:
    """Impute to each cell the digit of maximal probability; ties go to
    the smallest digit."""
    return tuple(int(d) for d in (np.argmax(tensor.values, axis=2) + 1).reshape(-1))


def solve_by_projection(
    puzzle: Board,
    clue_mask: ClueMask,
    config: ProjectionConfig | None = None,
    diagnostics: list[tuple[int, float, int]] | None = None,
) -> SolveReport:
    """Alternating projections from the origin, rounding after every
    ``check_every`` sweeps; stops on a solved rounding, a stalled sweep,
    or the sweep cap.  ``diagnostics`` collects (sweep, max_change,
    rounded_cost) rows when supplied."""
    cfg = config or ProjectionConfig()
    start = time.perf_counter()
    tensor, plan = build_constraint_plan(puzzle, clue_mask)

    board = round_tensor(tensor)
    if is_solved(board):
        return SolveReport(
            "projection", True, board, time.perf_counter() - start, 0, final_cost=0
        )

    sweeps = 0
    solved = False
    while sweeps < cfg.max_sweeps:
        tensor, max_change = sweep(tensor, plan)
        sweeps += 1
        if sweeps % cfg.check_every == 0:
            board = round_tensor(tensor)
            if diagnostics is not None:
                diagnostics.append((sweeps, max_change, violation_cost(board)))
            if is_solved(board):
                solved = True
                break
        if max_change < cfg.stall_tolerance:
            break

    board = round_tensor(tensor)
    solved = is_solved(board)
    return SolveReport(
        "projection",
        solved,
        board,
        time.perf_counter() - start,
        sweeps,
        final_cost=violation_cost(board),
    )
