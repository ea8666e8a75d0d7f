"""Exact solver: cardinality-ordered depth-first search over partial solutions.

Empty cells are ordered once, on the initial board, by ascending candidate
list size (ties broken row-major).  The search grows a digit string along
that order in dictionary order, abandoning a prefix the moment a placed
digit duplicates a digit in one of its three units.  Enumeration therefore
yields complete solutions in the dictionary order induced by the cell
ordering, and exhausting the tree proves uniqueness or unsatisfiability.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .board import (
    Board,
    CellRef,
    ClueMask,
    PEERS,
    candidates,
    cell_index,
    cell_ref,
)
from .report import SolveReport

#: Called once per placement attempt with the grown prefix string (the
#: digits placed so far, in search order) and whether the placement was
#: feasible.  Infeasible placements are rejected and their subtree pruned.
TraceHook = Callable[[str, bool], None]


@dataclass(frozen=True)
class SearchOrder:
    cells: list[CellRef]          # empty cells, sorted by |candidates| then row-major
    lists: list[tuple[int, ...]]  # initial candidate list per cell, ascending digits


def order_cells(board: Board) -> SearchOrder:
    """Static search order: empty cells by ascending initial candidate count."""
    entries = []
    for i in range(81):
        if board[i] == 0:
            cands = tuple(sorted(candidates(board, cell_ref(i))))
            entries.append((len(cands), i, cands))
    entries.sort()
    return SearchOrder(
        cells=[cell_ref(i) for _, i, _ in entries],
        lists=[cands for _, _, cands in entries],
    )


def enumerate_solutions(
    board: Board,
    clue_mask: ClueMask,
    cap: int,
    trace: TraceHook | None = None,
) -> list[Board]:
    """Return up to ``cap`` complete solutions in dictionary order.

    Returns fewer than ``cap`` boards iff the whole search tree was
    exhausted, which proves no further solution exists.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    order = order_cells(board)
    cells = [cell_index(r, c) for r, c in order.cells]
    lists = order.lists
    grid = list(board)
    solutions: list[Board] = []
    prefix: list[str] = []
    n = len(cells)

    def dfs(depth: int) -> bool:
        if depth == n:
            solutions.append(tuple(grid))
            return len(solutions) >= cap
        i = cells[depth]
        peers = PEERS[i]
        for d in lists[depth]:
            ok = all(grid[j] != d for j in peers)
            if trace is not None:
                trace("".join(prefix) + str(d), ok)
            if ok:
                grid[i] = d
                prefix.append(str(d))
                if dfs(depth + 1):
                    return True
                prefix.pop()
                grid[i] = 0
        return False

    dfs(0)
    return solutions


def solve(board: Board, clue_mask: ClueMask) -> SolveReport:
    """First solution (or failure) with a node-visit work count."""
    nodes = 0

    def count(prefix: str, ok: bool) -> None:
        nonlocal nodes
        nodes += 1

    start = time.perf_counter()
    found = enumerate_solutions(board, clue_mask, cap=1, trace=count)
    elapsed = time.perf_counter() - start
    if found:
        return SolveReport("backtracking", True, found[0], elapsed, nodes, final_cost=0)
    return SolveReport("backtracking", False, board, elapsed, nodes)
