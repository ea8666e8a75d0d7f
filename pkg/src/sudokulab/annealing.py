"""Stochastic solver: Metropolis annealing over clue-respecting full boards.

The state space is the set of full boards that respect the clues and use
each digit exactly nine times.  A move swaps two non-clue cells, chosen
with probability proportional to exp(violation degree), and is accepted
with probability min{exp((cost_current - cost_proposed)/temperature), 1}
against a single uniform deviate.  Temperature follows a geometric
cooling schedule with a single mid-run reset to the initial temperature
(the board is kept across the reset).
"""
from __future__ import annotations

import itertools
import math
import random
import time
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Callable

from .board import (
    Board,
    CellRef,
    CELL_UNITS,
    ClueMask,
    UNITS,
    cell_ref,
    digit_histogram,
    violation_cost,
)
from .report import SolveReport

#: exp(degree) proposal weights; a cell sits in 3 units so degree <= 3.
_EXP_DEGREE = [math.exp(i) for i in range(4)]


@dataclass(frozen=True)
class AnnealConfig:
    initial_temperature: float = 200.0
    cooling_factor: float = 0.99
    cooling_period: int = 50
    max_iterations: int = 200_000
    reset_at: int = 100_000
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.initial_temperature > 0:
            raise ValueError("initial_temperature must be positive")
        if not 0 < self.cooling_factor < 1:
            raise ValueError("cooling_factor must lie in (0,1)")
        if self.cooling_period < 1 or self.max_iterations < 1:
            raise ValueError("cooling_period and max_iterations must be positive")
        if not 1 <= self.reset_at <= self.max_iterations:
            raise ValueError("reset_at must lie in [1, max_iterations]")


@dataclass
class AnnealState:
    board: list[int]
    clue_mask: ClueMask
    cost: int
    temperature: float
    iteration: int
    rng: random.Random
    # caches kept consistent by the annealing loop
    _counts: list[list[int]] = field(repr=False, default_factory=list)  # 27 x 10 digit counts
    _free: list[int] = field(repr=False, default_factory=list)          # non-clue cell indices
    _fpos: list[int] = field(repr=False, default_factory=list)          # cell -> slot in _free, -1 for clues
    _fw: list[float] = field(repr=False, default_factory=list)          # weight per free slot
    _fw_total: float = field(repr=False, default=0.0)

    @classmethod
    def create(
        cls, board: Board, clue_mask: ClueMask, config: AnnealConfig, rng: random.Random | None = None
    ) -> "AnnealState":
        state = cls(
            board=list(board),
            clue_mask=clue_mask,
            cost=violation_cost(board),
            temperature=config.initial_temperature,
            iteration=0,
            rng=rng if rng is not None else random.Random(config.seed),
        )
        state._rebuild_caches()
        return state

    def _rebuild_caches(self) -> None:
        self._counts = [[0] * 10 for _ in range(27)]
        for i, d in enumerate(self.board):
            for u in CELL_UNITS[i]:
                self._counts[u][d] += 1
        self._free = [i for i in range(81) if not self.clue_mask[i]]
        self._fpos = [-1] * 81
        for slot, i in enumerate(self._free):
            self._fpos[i] = slot
        self._fw = [_EXP_DEGREE[self._degree(i)] for i in self._free]
        self._fw_total = sum(self._fw)

    def _degree(self, i: int) -> int:
        d = self.board[i]
        counts = self._counts
        return sum(1 for u in CELL_UNITS[i] if counts[u][d] >= 2)

    def _draw_slot(self) -> int:
        target = self.rng.random() * self._fw_total
        acc = 0.0
        fw = self._fw
        for slot in range(len(fw)):
            acc += fw[slot]
            if acc > target:
                return slot
        return len(fw) - 1  # float round-off on the final bin


def initial_board(puzzle: Board, clue_mask: ClueMask, rng: random.Random) -> Board:
    """Fill the empty cells with a random permutation of the digits still
    needed to give every digit exactly nine occurrences."""
    hist = digit_histogram(puzzle[i] for i in range(81) if clue_mask[i])
    for d, count in enumerate(hist, start=1):
        if count > 9:
            raise ValueError(f"digit {d} appears {count} times among clues")
    pool = [d for d, count in enumerate(hist, start=1) for _ in range(9 - count)]
    rng.shuffle(pool)
    filled = list(puzzle)
    pos = 0
    for i in range(81):
        if not clue_mask[i]:
            filled[i] = pool[pos]
            pos += 1
    return tuple(filled)


def propose_swap(state: AnnealState) -> tuple[CellRef, CellRef]:
    """Draw two distinct non-clue cells, each weighted by exp(degree);
    the second draw repeats until it differs from the first."""
    if len(state._free) < 2:
        raise ValueError("need at least two non-clue cells to propose a swap")
    a = state._draw_slot()
    b = state._draw_slot()
    while b == a:
        b = state._draw_slot()
    return cell_ref(state._free[a]), cell_ref(state._free[b])


def acceptance_probability(cost_current: int, cost_proposed: int, temperature: float) -> float:
    if not temperature > 0:
        raise ValueError("temperature must be positive")
    if cost_proposed <= cost_current:
        return 1.0
    return math.exp((cost_current - cost_proposed) / temperature)


def anneal(
    puzzle: Board,
    clue_mask: ClueMask,
    config: AnnealConfig | None = None,
    observer: Callable[[AnnealState], None] | None = None,
) -> SolveReport:
    """Run one annealing chain; deterministic for a fixed (puzzle, config)."""
    cfg = config or AnnealConfig()
    rng = random.Random(cfg.seed)
    state = AnnealState.create(initial_board(puzzle, clue_mask, rng), clue_mask, cfg, rng=rng)
    start = time.perf_counter()

    if state.cost == 0:
        return SolveReport(
            "annealing", True, tuple(state.board), time.perf_counter() - start, 0, final_cost=0
        )

    # local bindings for the hot loop
    board = state.board
    counts = state._counts
    free = state._free
    fpos = state._fpos
    fw = state._fw
    rnd = rng.random
    exp = math.exp
    accumulate = itertools.accumulate
    bisect = bisect_right
    cell_units = CELL_UNITS
    units = UNITS
    exp_degree = _EXP_DEGREE
    t0, cool, period = cfg.initial_temperature, cfg.cooling_factor, cfg.cooling_period
    max_iters, reset_at = cfg.max_iterations, cfg.reset_at
    nfree = len(free)

    reset_base = 0
    temp = t0
    cost = state.cost
    cum = list(accumulate(fw))
    total = cum[-1]
    last = nfree - 1
    solved = False
    n = 0
    while n < max_iters:
        if n == reset_at:
            reset_base = n
        steps = n - reset_base
        if steps % period == 0:
            temp = t0 * cool ** (steps // period)

        # weighted draws; the second repeats until distinct
        sa = bisect(cum, rnd() * total)
        if sa > last:
            sa = last  # float round-off on the final bin
        while True:
            sb = bisect(cum, rnd() * total)
            if sb > last:
                sb = last
            if sb != sa:
                break
        a, b = free[sa], free[sb]
        da, db = board[a], board[b]

        if da == db:
            rnd()  # the uniform acceptance deviate; exp(0) = 1 always accepts
        else:
            units_a, units_b = cell_units[a], cell_units[b]
            delta = 0
            for u in units_a:
                row = counts[u]
                if row[da] == 1:
                    delta += 1
                row[da] -= 1
                if row[db] == 0:
                    delta -= 1
                row[db] += 1
            for u in units_b:
                row = counts[u]
                if row[db] == 1:
                    delta += 1
                row[db] -= 1
                if row[da] == 0:
                    delta -= 1
                row[da] += 1

            if rnd() <= (1.0 if delta <= 0 else exp(-delta / temp)):
                board[a], board[b] = db, da
                cost += delta
                for u in units_a + tuple(x for x in units_b if x not in units_a):
                    for i in units[u]:
                        slot = fpos[i]
                        if slot >= 0:
                            u0, u1, u2 = cell_units[i]
                            d = board[i]
                            fw[slot] = exp_degree[
                                (counts[u0][d] >= 2)
                                + (counts[u1][d] >= 2)
                                + (counts[u2][d] >= 2)
                            ]
                cum = list(accumulate(fw))
                total = cum[-1]
            else:
                # revert the tentative count shift
                for u in units_a:
                    row = counts[u]
                    row[db] -= 1
                    row[da] += 1
                for u in units_b:
                    row = counts[u]
                    row[da] -= 1
                    row[db] += 1

        n += 1
        if observer is not None:
            state.cost = cost
            state.temperature = temp
            state.iteration = n
            state._fw_total = total
            observer(state)
        if cost == 0:
            solved = True
            break

    state.cost = cost
    state.temperature = temp
    state.iteration = n
    state._fw_total = total
    elapsed = time.perf_counter() - start
    return SolveReport(
        "annealing", solved, tuple(board), elapsed, n, final_cost=cost
    )
