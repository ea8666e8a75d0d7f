"""Canonical 9x9 board representation shared by every solver.

A board is a flat tuple of 81 integers in row-major order, 0 marking an
empty cell.  Coordinates in the public API are 1-based (row, col) pairs.
All values are immutable; solvers copy before modifying.
"""
from __future__ import annotations

from typing import Iterable

Board = tuple[int, ...]
ClueMask = tuple[bool, ...]
CellRef = tuple[int, int]

DIGITS = frozenset(range(1, 10))


class PuzzleError(ValueError):
    """Raised for malformed or internally inconsistent puzzle input."""


def cell_index(row: int, col: int) -> int:
    """Flat index of 1-based (row, col)."""
    if not (1 <= row <= 9 and 1 <= col <= 9):
        raise PuzzleError(f"cell ({row},{col}) out of range")
    return (row - 1) * 9 + (col - 1)


def cell_ref(index: int) -> CellRef:
    return index // 9 + 1, index % 9 + 1


def _build_units() -> list[tuple[int, ...]]:
    rows = [tuple(range(r * 9, r * 9 + 9)) for r in range(9)]
    cols = [tuple(range(c, 81, 9)) for c in range(9)]
    boxes = []
    for br in (0, 3, 6):
        for bc in (0, 3, 6):
            boxes.append(tuple((br + r) * 9 + (bc + c) for r in range(3) for c in range(3)))
    return rows + cols + boxes


#: 27 units: rows 0-8, columns 9-17, subgrids 18-26.
UNITS: list[tuple[int, ...]] = _build_units()

#: For each flat cell index, the ids of the 3 units containing it.
CELL_UNITS: list[tuple[int, int, int]] = [
    tuple(u for u, unit in enumerate(UNITS) if i in unit) for i in range(81)
]

#: For each flat cell index, the union of the other 20 cells sharing a unit.
PEERS: list[tuple[int, ...]] = [
    tuple(sorted({j for u in CELL_UNITS[i] for j in UNITS[u]} - {i})) for i in range(81)
]

_IGNORED = set(" \t\r\n|+-")


def parse_puzzle(text: str) -> tuple[Board, ClueMask]:
    """Parse line or grid format into a (board, clue mask) pair.

    Whitespace and the grid separators '|', '-', '+' are ignored.  The
    remaining 81 characters must each be '1'-'9', '0', or '.'; nonzero
    entries become clues.  Clue sets with a duplicated digit inside any
    unit are rejected.
    """
    chars = [ch for ch in text if ch not in _IGNORED]
    if len(chars) != 81:
        raise PuzzleError(f"expected 81 significant characters, got {len(chars)}")
    cells = []
    for pos, ch in enumerate(chars):
        if ch == "." or ch == "0":
            cells.append(0)
        elif "1" <= ch <= "9":
            cells.append(int(ch))
        else:
            raise PuzzleError(f"illegal character {ch!r} at index {pos}")
    board = tuple(cells)
    for u, unit in enumerate(UNITS):
        seen: set[int] = set()
        for i in unit:
            d = board[i]
            if d == 0:
                continue
            if d in seen:
                raise PuzzleError(f"inconsistent puzzle: digit {d} repeated in unit {u}")
            seen.add(d)
    mask = tuple(d != 0 for d in board)
    return board, mask


def render_board(board: Board, style: str = "grid") -> str:
    """Serialize a board; 'line' gives the 81-char form, 'grid' a 9-row block."""
    sym = ["." if d == 0 else str(d) for d in board]
    if style == "line":
        return "".join(sym)
    if style == "grid":
        out = []
        for r in range(9):
            row = sym[r * 9 : r * 9 + 9]
            out.append("".join(row[0:3]) + "|" + "".join(row[3:6]) + "|" + "".join(row[6:9]))
            if r in (2, 5):
                out.append("---+---+---")
        return "\n".join(out)
    raise ValueError(f"unknown style {style!r}")


def violation_cost(board: Board) -> int:
    """Total unit deficiency: sum over the 27 units of 9 minus the number
    of distinct nonzero digits present.  Zero iff the board is solved."""
    cost = 0
    for unit in UNITS:
        distinct = {board[i] for i in unit} - {0}
        cost += 9 - len(distinct)
    return cost


def cell_violation_degree(board: Board, cell: CellRef) -> int:
    """Number of the cell's three units in which its digit occurs more than once."""
    i = cell_index(*cell)
    d = board[i]
    if d == 0:
        return 0
    deg = 0
    for u in CELL_UNITS[i]:
        count = sum(1 for j in UNITS[u] if board[j] == d)
        if count > 1:
            deg += 1
    return deg


def candidates(board: Board, cell: CellRef) -> set[int]:
    """Digits placeable at an empty cell without duplicating any digit in
    the cell's row, column, or subgrid."""
    i = cell_index(*cell)
    if board[i] != 0:
        raise PuzzleError(f"cell {cell} is not empty")
    used = {board[j] for j in PEERS[i]}
    return set(DIGITS) - used


def is_solved(board: Board) -> bool:
    return 0 not in board and violation_cost(board) == 0


def clue_count(mask: ClueMask) -> int:
    return sum(mask)


def clues_respected(board: Board, puzzle: Board, mask: ClueMask) -> bool:
    """True when every clue cell of the puzzle is unchanged on the board."""
    return all(board[i] == puzzle[i] for i in range(81) if mask[i])


def empty_cells(board: Board) -> list[CellRef]:
    return [cell_ref(i) for i in range(81) if board[i] == 0]


def digit_histogram(board: Iterable[int]) -> list[int]:
    """Counts of digits 1-9 (index 0 = digit 1)."""
    hist = [0] * 9
    for d in board:
        if d:
            hist[d - 1] += 1
    return hist
