import random

import pytest

from sudokulab.backtracking import solve
from sudokulab.bench import load_suite
from sudokulab.datasets import sample_puzzle, suite_path, trapped_board


@pytest.fixture(scope="session")
def sample():
    """The bundled 35-clue puzzle: (board, clue_mask)."""
    return sample_puzzle()


@pytest.fixture(scope="session")
def sample_solution(sample):
    board, mask = sample
    report = solve(board, mask)
    assert report.solved
    return report.board


@pytest.fixture(scope="session")
def trapped():
    return trapped_board()


@pytest.fixture(scope="session")
def easy_suite():
    return load_suite(suite_path("easy"), "easy")


@pytest.fixture(scope="session")
def medium_suite():
    return load_suite(suite_path("medium"), "medium")


@pytest.fixture(scope="session")
def unsat_puzzle(easy_suite):
    """A parse-consistent but unsatisfiable puzzle: a unique-solution
    puzzle plus one extra clue contradicting its solution."""
    _, puzzle, mask = easy_suite.puzzles[0]
    solution = solve(puzzle, mask).board
    rng = random.Random(1)
    from sudokulab.board import candidates, cell_ref, parse_puzzle, render_board

    cells = [i for i in range(81) if not mask[i]]
    rng.shuffle(cells)
    for i in cells:
        wrong = candidates(puzzle, cell_ref(i)) - {solution[i]}
        if wrong:
            poisoned = list(puzzle)
            poisoned[i] = min(wrong)
            return parse_puzzle(render_board(tuple(poisoned), "line"))
    raise AssertionError("could not poison the puzzle")
