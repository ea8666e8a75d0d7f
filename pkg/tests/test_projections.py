import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sudokulab.board import PuzzleError, is_solved, violation_cost
from sudokulab.projections import (
    FIXED_ONE,
    FIXED_ZERO,
    FREE,
    ProbabilityTensor,
    ProjectionConfig,
    build_constraint_plan,
    project_hyperplane,
    project_rectangle,
    project_simplex,
    round_tensor,
    solve_by_projection,
    sweep,
)

from oracles import brute_force_simplex, solve_all

_FULL = solve_all((0,) * 81, cap=1)[0]

vectors = st.lists(
    st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False), min_size=1, max_size=9
).map(np.asarray)


def _indicator(board) -> ProbabilityTensor:
    t = ProbabilityTensor.zeros()
    for i in range(9):
        for j in range(9):
            t.values[i, j, board[i * 9 + j] - 1] = 1.0
    return t


class TestRectangle:
    def test_clamps(self):
        out = project_rectangle([-1.0, 0.5, 2.0], [0.0, 0.0, 0.0], [1.0, 1.0, 1.0])
        assert out.tolist() == [0.0, 0.5, 1.0]

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            project_rectangle([1.0, 2.0], [0.0], [1.0])

    def test_inverted_bounds(self):
        with pytest.raises(ValueError):
            project_rectangle([0.0], [1.0], [0.0])

    @given(vectors)
    def test_interior_point_fixed(self, y):
        lo, hi = np.full(y.shape, -10.0), np.full(y.shape, 10.0)
        assert np.array_equal(project_rectangle(y, lo, hi), y)


class TestHyperplane:
    def test_unit_normal(self):
        out = project_hyperplane([2.0, 0.0], [1.0, 0.0], 0.5)
        assert out.tolist() == [0.5, 0.0]

    def test_zero_normal(self):
        with pytest.raises(ValueError):
            project_hyperplane([1.0], [0.0], 1.0)

    @given(vectors)
    def test_result_on_plane(self, y):
        v = np.ones(y.shape)
        out = project_hyperplane(y, v, 1.0)
        assert float(v @ out) == pytest.approx(1.0, abs=1e-9)


class TestSimplex:
    def test_centroid_preserved(self):
        y = np.full(9, 1.0 / 9.0)
        assert np.allclose(project_simplex(y), y)

    def test_dominant_coordinate(self):
        out = project_simplex(np.array([10.0, 0.0, 0.0]))
        assert out.tolist() == [1.0, 0.0, 0.0]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            project_simplex(np.array([]))

    def test_matrix_rejected(self):
        with pytest.raises(ValueError):
            project_simplex(np.zeros((3, 3)))

    @given(vectors)
    def test_feasible(self, y):
        x = project_simplex(y)
        assert float(np.sum(x)) == pytest.approx(1.0, abs=1e-9)
        assert np.all(x >= 0.0)

    @given(vectors)
    def test_idempotent(self, y):
        x = project_simplex(y)
        assert np.allclose(project_simplex(x), x, atol=1e-9)

    @given(vectors)
    def test_order_preserved(self, y):
        # the projection is a translate-and-clip, so it cannot swap ranks
        x = project_simplex(y)
        order = np.argsort(y, kind="stable")
        assert np.all(np.diff(x[order]) >= -1e-12)

    @given(vectors, vectors)
    def test_nonexpansive(self, y, z):
        if y.shape != z.shape:
            return
        dist_in = float(np.linalg.norm(y - z))
        dist_out = float(np.linalg.norm(project_simplex(y) - project_simplex(z)))
        assert dist_out <= dist_in + 1e-9

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False),
            min_size=1,
            max_size=7,
        )
    )
    def test_matches_brute_force(self, y):
        y = np.asarray(y)
        assert np.allclose(project_simplex(y), brute_force_simplex(y), atol=1e-8)

    def test_kkt_threshold(self):
        y = np.array([0.9, 0.6, -0.4])
        x = project_simplex(y)
        # active support {0, 1}: threshold lam = (0.9 + 0.6 - 1) / 2
        assert np.allclose(x, [0.65, 0.35, 0.0])


class TestConstraintPlan:
    def test_empty_puzzle(self):
        tensor, plan = build_constraint_plan((0,) * 81, (False,) * 81)
        assert plan.fixed_count == 0
        assert len(plan.slices) == 324
        assert all(len(s.free) == 9 for s in plan.slices)
        assert [s.kind for s in plan.slices[:81]] == ["row"] * 81
        assert plan.slices[-1].kind == "cell"
        assert np.count_nonzero(tensor.values) == 0

    def test_single_clue(self):
        board = [0] * 81
        board[0] = 5
        mask = [False] * 81
        mask[0] = True
        tensor, plan = build_constraint_plan(tuple(board), tuple(mask))
        # one fixed one plus 8 + 8 + 8 + 4 fixed zeros
        assert plan.fixed_count == 29
        assert int(np.sum(tensor.status.reshape(-1) == FIXED_ONE)) == 1
        assert int(np.sum(tensor.status.reshape(-1) == FIXED_ZERO)) == 28
        # the four slices through the fixed one are voided
        assert len(plan.slices) == 320

    def test_full_board(self):
        tensor, plan = build_constraint_plan(_FULL, (True,) * 81)
        assert plan.fixed_count == 729
        assert plan.slices == ()
        assert np.array_equal(tensor.values, _indicator(_FULL).values)

    def test_conflicting_clues(self):
        board = [0] * 81
        board[0] = board[1] = 5  # same row, contradictory fixes
        mask = [False] * 81
        mask[0] = mask[1] = True
        with pytest.raises(PuzzleError):
            build_constraint_plan(tuple(board), tuple(mask))

    def test_free_members_disjoint_from_fixed(self, sample):
        board, mask = sample
        tensor, plan = build_constraint_plan(board, mask)
        status = tensor.status.reshape(-1)
        for s in plan.slices:
            assert all(status[m] == FREE for m in s.free)
            assert set(s.free) <= set(s.members)


class TestSweep:
    def test_solution_indicator_is_fixed_point(self):
        tensor = _indicator(_FULL)
        plan = build_constraint_plan((0,) * 81, (False,) * 81)[1]
        _, change = sweep(tensor, plan)
        assert change == pytest.approx(0.0, abs=1e-12)
        assert round_tensor(tensor) == _FULL

    def test_first_sweep_from_origin(self):
        tensor, plan = build_constraint_plan((0,) * 81, (False,) * 81)
        _, change = sweep(tensor, plan)
        # the first row slice moves each entry from 0 to 1/9
        assert change > 0.0
        # every cell distribution was projected last, so it sums to one
        assert np.allclose(tensor.values.sum(axis=2), 1.0)

    def test_fixed_entries_untouched(self, sample):
        board, mask = sample
        tensor, plan = build_constraint_plan(board, mask)
        before = tensor.values.copy()
        fixed = tensor.status != FREE
        for _ in range(3):
            sweep(tensor, plan)
        assert np.array_equal(tensor.values[fixed], before[fixed])


class TestRoundTensor:
    def test_solution_indicator(self):
        assert round_tensor(_indicator(_FULL)) == _FULL

    def test_tie_breaks_to_smallest_digit(self):
        tensor = ProbabilityTensor.zeros()
        tensor.values[0, 0, 3] = 0.5
        tensor.values[0, 0, 6] = 0.5
        assert round_tensor(tensor)[0] == 4

    def test_zero_tensor_rounds_to_ones(self):
        assert round_tensor(ProbabilityTensor.zeros()) == (1,) * 81


class TestConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [{"max_sweeps": 0}, {"check_every": 0}, {"stall_tolerance": -1.0}],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            ProjectionConfig(**kwargs)


class TestSolveByProjection:
    def test_full_board_zero_sweeps(self):
        report = solve_by_projection(_FULL, (True,) * 81)
        assert report.solved and report.work == 0 and report.board == _FULL

    def test_one_missing_cell(self):
        board = list(_FULL)
        board[40] = 0
        mask = tuple(d != 0 for d in board)
        report = solve_by_projection(tuple(board), mask)
        assert report.solved
        assert report.board == _FULL
        assert report.work <= 2

    def test_solves_bundled_easy(self, easy_suite):
        for _, board, mask in easy_suite.puzzles[:3]:
            report = solve_by_projection(board, mask)
            assert report.solved
            assert is_solved(report.board)
            assert report.final_cost == 0

    def test_deterministic(self, easy_suite):
        _, board, mask = easy_suite.puzzles[0]
        r1 = solve_by_projection(board, mask)
        r2 = solve_by_projection(board, mask)
        assert (r1.board, r1.work, r1.solved) == (r2.board, r2.work, r2.solved)

    def test_sweep_cap(self, medium_suite):
        _, board, mask = medium_suite.puzzles[0]
        report = solve_by_projection(board, mask, ProjectionConfig(max_sweeps=1))
        assert report.work <= 1

    def test_diagnostics_rows(self, easy_suite):
        _, board, mask = easy_suite.puzzles[0]
        diag = []
        report = solve_by_projection(board, mask, diagnostics=diag)
        assert len(diag) == report.work
        sweeps = [row[0] for row in diag]
        assert sweeps == list(range(1, report.work + 1))
        # rounded cost reaches zero exactly when the solver reports success
        assert (diag[-1][2] == 0) == report.solved

    def test_unsolved_reports_cost(self, unsat_puzzle):
        board, mask = unsat_puzzle
        report = solve_by_projection(board, mask, ProjectionConfig(max_sweeps=200))
        assert not report.solved
        assert report.final_cost > 0
