"""Tests for the interface reconstructions: MP5, C5/C6, E6, WENO-Z, MUSCL and THINC."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.mesh import ZeroGradient
from src.reconstruction import (
    InterfaceStates,
    LineView,
    TriDiag,
    average_c6,
    banded_solve,
    linear5,
    minmod,
    mp5_limit,
    muscl_tvd,
    reconstruct_c5,
    reconstruct_e6,
    reconstruct_mp5,
    reconstruct_muscl,
    reconstruct_thinc,
    reconstruct_wenoz,
    thinc,
    thomas_solve,
    weno_z,
)
from src.reconstruction.compact import c5_right_hand_sides
from src.reconstruction.weno import wenoz_weights
from src.utils.errors import ConfigurationError, SingularSystemError
from tests.conftest import make_line


def _ramp_line(n=12):
    """Padded values equal to their padded index, so interface k sits at g + k - 1/2."""
    return LineView(np.arange(n + 6, dtype=float)[np.newaxis])


class TestLineView:
    def test_windows_shape_and_centering(self):
        line = _ramp_line(5)
        windows = line.windows()
        assert windows.shape == (1, 6, 6)
        # interface 0 sits between padded cells 2 and 3
        assert_allclose(windows[0, 0], [0, 1, 2, 3, 4, 5])

    def test_adjacent_cells(self):
        left, right = _ramp_line(5).adjacent()
        assert_allclose(left[0], [2, 3, 4, 5, 6, 7])
        assert_allclose(right[0], [3, 4, 5, 6, 7, 8])

    def test_too_short_line_rejected(self):
        with pytest.raises(ConfigurationError):
            LineView(np.zeros((1, 6)))


class TestTridiagonal:
    def _system(self, n=8, seed=1):
        rng = np.random.default_rng(seed)
        sub = rng.uniform(-1.0, 1.0, n)
        sup = rng.uniform(-1.0, 1.0, n)
        diag = 3.0 + rng.uniform(0.0, 1.0, n)
        rhs = rng.uniform(-1.0, 1.0, n)
        return TriDiag(sub, diag, sup, rhs)

    def test_identity(self):
        n = 5
        rhs = np.arange(n, dtype=float)
        system = TriDiag(np.zeros(n), np.ones(n), np.zeros(n), rhs)
        assert_allclose(thomas_solve(system), rhs)

    def test_matches_dense_solve(self):
        system = self._system()
        expected = np.linalg.solve(system.dense(), system.rhs)
        assert_allclose(thomas_solve(system), expected, atol=1e-12)
        assert_allclose(banded_solve(system), expected, atol=1e-12)

    def test_constant_solution_of_compact_rows(self):
        n = 10
        system = TriDiag(np.full(n, 0.5), np.ones(n), np.full(n, 1.0 / 6.0), np.full(n, 5.0 / 3.0))
        system.sub[0] = system.sup[-1] = 0.0
        system.rhs[0] = system.rhs[-1] = 1.0
        assert_allclose(thomas_solve(system), np.ones(n), atol=1e-13)

    def test_zero_pivot(self):
        system = TriDiag(np.zeros(3), np.array([0.0, 1.0, 1.0]), np.zeros(3), np.ones(3))
        with pytest.raises(SingularSystemError):
            thomas_solve(system)


class TestLinear5AndMP5:
    def test_linear5_constant(self):
        assert linear5([1, 1, 1, 1, 1]) == pytest.approx(1.0)

    def test_linear5_linear_data(self):
        assert linear5([-2, -1, 0, 1, 2]) == pytest.approx(0.5)

    def test_linear5_step(self):
        assert linear5([0, 0, 0, 1, 1]) == pytest.approx(0.4)

    def test_mp5_unlimited_on_linear_data(self):
        assert mp5_limit([1, 2, 3, 4, 5], alpha=4.0) == pytest.approx(3.5)

    def test_mp5_fully_limits_step(self):
        assert mp5_limit([0, 0, 0, 1, 1], alpha=4.0) == pytest.approx(0.0, abs=1e-15)

    def test_mp5_constant(self):
        assert mp5_limit([2.5] * 5) == pytest.approx(2.5)

    def test_reconstruct_mp5_exact_on_linear_data(self):
        line = _ramp_line()
        states = reconstruct_mp5(line)
        expected = np.arange(line.n_interfaces) + line.n_ghost - 0.5
        assert_allclose(states.left[0], expected, atol=1e-12)
        assert_allclose(states.right[0], expected, atol=1e-12)

    def test_reconstruct_mp5_no_new_extrema_on_step(self, step_line):
        states = reconstruct_mp5(step_line)
        for values in (states.left, states.right):
            assert values.min() >= -1e-14
            assert values.max() <= 1.0 + 1e-14

    def test_reconstruct_mp5_matches_pointwise_limiter(self, sine_line):
        states = reconstruct_mp5(sine_line, alpha=4.0)
        values = sine_line.values[0]
        g = sine_line.n_ghost
        for k in range(sine_line.n_interfaces):
            c = g + k - 1
            assert states.left[0, k] == pytest.approx(mp5_limit(values[c - 2:c + 3], 4.0), abs=1e-14)
            assert states.right[0, k] == pytest.approx(
                mp5_limit(values[c - 1:c + 4][::-1], 4.0), abs=1e-14)


class TestCompact:
    def test_constant_line(self):
        line = make_line(np.full(16, 3.0))
        states = reconstruct_c5(line)
        assert_allclose(states.left, 3.0, atol=1e-13)
        assert_allclose(states.right, 3.0, atol=1e-13)

    def test_linear_line_is_exact(self):
        line = _ramp_line()
        states = reconstruct_c5(line)
        expected = np.arange(line.n_interfaces) + line.n_ghost - 0.5
        assert_allclose(states.left[0], expected, atol=1e-12)
        assert_allclose(states.right[0], expected, atol=1e-12)

    def test_matches_dense_solve(self, sine_line):
        n = sine_line.n_interfaces
        closure = reconstruct_mp5(sine_line, alpha=4.0)
        rhs_left, rhs_right = c5_right_hand_sides(sine_line)
        for rhs, side, (sub, sup) in ((rhs_left, "left", (0.5, 1.0 / 6.0)),
                                      (rhs_right, "right", (1.0 / 6.0, 0.5))):
            matrix = np.eye(n) + np.diag(np.full(n - 1, sub), -1) + np.diag(np.full(n - 1, sup), 1)
            matrix[0] = 0.0
            matrix[-1] = 0.0
            matrix[0, 0] = matrix[-1, -1] = 1.0
            b = rhs[0].copy()
            b[0] = getattr(closure, side)[0, 0]
            b[-1] = getattr(closure, side)[0, -1]
            expected = np.linalg.solve(matrix, b)
            actual = getattr(reconstruct_c5(sine_line, closure=closure), side)[0]
            assert_allclose(actual, expected, atol=1e-12)

    def test_default_closure_follows_projection(self):
        cells = np.arange(16)
        line = make_line(np.stack([np.where(cells < 8, 1.0, 0.2), np.sin(0.4 * cells)]))
        mixing = np.array([[1.0, 1.0], [1.0, -1.0]])[:, :, np.newaxis]
        left_vectors = np.broadcast_to(mixing, (2, 2, line.n_interfaces))
        eigen = (left_vectors, 0.5 * left_vectors)
        closure = reconstruct_mp5(line, 4.0, eigen)
        states = reconstruct_c5(line, alpha=4.0, eigen=eigen)
        for k in (0, -1):
            assert_allclose(states.left[:, k], closure.left[:, k], atol=1e-14)
            assert_allclose(states.right[:, k], closure.right[:, k], atol=1e-14)

    def test_backends_agree(self, sine_line):
        banded = reconstruct_c5(sine_line, backend="banded")
        thomas = reconstruct_c5(sine_line, backend="thomas")
        assert_allclose(banded.left, thomas.left, atol=1e-13)
        assert_allclose(banded.right, thomas.right, atol=1e-13)

    def test_batched_lines_match_single_lines(self, sine_line):
        stacked = LineView(np.stack([sine_line.values, 2.0 * sine_line.values]))
        states = reconstruct_c5(stacked)
        single = reconstruct_c5(sine_line)
        assert_allclose(states.left[0], single.left, atol=1e-13)
        assert_allclose(states.left[1], 2.0 * single.left, atol=1e-12)

    def test_c6_is_central(self, sine_line):
        states = average_c6(reconstruct_c5(sine_line))
        assert np.array_equal(states.left, states.right)
        assert np.all(states.dissipation == 0.0)

    def test_c6_symmetric_data(self):
        interior = np.array([0.0, 1.0, 3.0, 6.0, 6.0, 3.0, 1.0, 0.0])
        states = average_c6(reconstruct_c5(make_line(interior)))
        # mirror image about interface 4 maps interface k onto 8 - k
        assert_allclose(states.left[0], states.left[0, ::-1], atol=1e-12)


class TestE6:
    def test_central_and_exact_on_linear_data(self):
        line = _ramp_line()
        states = reconstruct_e6(line)
        expected = np.arange(line.n_interfaces) + line.n_ghost - 0.5
        assert np.array_equal(states.left, states.right)
        assert_allclose(states.left[0], expected, atol=1e-12)


class TestWenoZ:
    def test_constant_stencil(self):
        assert weno_z([2.0] * 5) == pytest.approx(2.0)
        assert_allclose(wenoz_weights(*[2.0] * 5), (0.1, 0.6, 0.3))

    def test_linear_data(self):
        assert weno_z([-2.0, -1.0, 0.0, 1.0, 2.0]) == pytest.approx(0.5)

    def test_step_picks_smooth_substencil(self):
        assert weno_z([0.0, 0.0, 0.0, 1.0, 1.0]) == pytest.approx(0.0, abs=1e-6)

    def test_reconstruct_linear_line(self):
        line = _ramp_line()
        states = reconstruct_wenoz(line)
        expected = np.arange(line.n_interfaces) + line.n_ghost - 0.5
        assert_allclose(states.left[0], expected, atol=1e-12)
        assert_allclose(states.right[0], expected, atol=1e-12)


class TestMUSCL:
    def test_minmod(self):
        assert minmod(1.0, 2.0) == 1.0
        assert minmod(-1.0, 2.0) == 0.0

    def test_constant(self):
        left, right = muscl_tvd([4.0, 4.0, 4.0, 4.0])
        assert left == pytest.approx(4.0)
        assert right == pytest.approx(4.0)

    def test_uniform_ramp(self):
        left, right = muscl_tvd([0.0, 1.0, 2.0, 3.0])
        assert left == pytest.approx(1.5)
        assert right == pytest.approx(1.5)

    def test_step(self, step_line):
        states = reconstruct_muscl(step_line)
        assert states.left[0, 10] == pytest.approx(0.0)
        assert states.right[0, 10] == pytest.approx(1.0)


class TestTHINC:
    def test_non_monotone_falls_back(self):
        plus, minus = thinc([0.0, 1.0, 0.0], beta=1.6)
        assert plus == 1.0
        assert minus == 1.0

    def test_constant(self):
        plus, minus = thinc([0.3, 0.3, 0.3], beta=1.6)
        assert plus == pytest.approx(0.3)
        assert minus == pytest.approx(0.3)

    def test_monotone_values_stay_inside(self):
        plus, minus = thinc([0.0, 0.5, 1.0], beta=1.6)
        assert 0.0 < minus < plus < 1.0

    def test_steeper_beta_sharpens(self):
        soft, _ = thinc([0.0, 0.5, 1.0], beta=1.1)
        sharp, _ = thinc([0.0, 0.5, 1.0], beta=1.6)
        assert sharp > soft

    def test_step_line(self, step_line):
        states = reconstruct_thinc(step_line, beta=1.6)
        assert states.left[0, 10] == 0.0
        assert states.right[0, 10] == 1.0


class TestInterfaceStates:
    def test_jump_and_counts(self):
        states = InterfaceStates(np.array([0.0, 1.0]), np.array([0.5, 0.25]),
                                 np.array([True]))
        assert_allclose(states.jump, [0.5, 0.75])
        assert states.triggered_count() == 1
        assert states.n_cells == 1

    def test_zero_gradient_line_helper(self):
        line = make_line(np.arange(5.0), ZeroGradient)
        assert_allclose(line.values[0, :3], 0.0)
        assert_allclose(line.values[0, -3:], 4.0)
