"""Bundled boards and puzzle suites (see data/*.txt)."""
from __future__ import annotations

from importlib import resources

from .board import Board, ClueMask, parse_puzzle

#: 35-clue puzzle used throughout the tests; it has a unique solution.
SAMPLE_PUZZLE_LINE = (
    "15764..8..4........329..14.7.41.52..2..86..74....7...1.8..21......3.4.19...5.682."
)

#: A full board two swaps away from a solution: cost 2 from two column
#: duplicates, and no single clue-respecting swap lowers the cost.  Used
#: as a violation-accounting fixture, not as a puzzle.
TRAPPED_BOARD_LINE = (
    "417962835"
    "632158749"
    "958734612"
    "825497361"
    "391586427"
    "746312598"
    "289653174"
    "573241986"
    "164879253"
)

#: The four cells causing the trapped board's two column duplicates.
TRAPPED_DUPLICATE_CELLS = ((1, 6), (2, 5), (6, 6), (7, 5))


def sample_puzzle() -> tuple[Board, ClueMask]:
    return parse_puzzle(SAMPLE_PUZZLE_LINE)


def trapped_board() -> Board:
    # deliberately violates unit constraints, so it bypasses parse_puzzle
    return tuple(int(ch) for ch in TRAPPED_BOARD_LINE)


def suite_path(name: str):
    """Filesystem path of a bundled suite file ('easy', 'medium', 'hard')."""
    return resources.files("sudokulab.data") / f"suite_{name}.txt"
