"""Tests for scheme settings, the semi-discrete residual, sources and TVD-RK3 stepping."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.config.settings import RIEMANN_NAMES, SCHEME_NAMES
from src.mesh import BoundarySpec, CellField, Grid1D, Grid2D, Periodic, fill_ghosts
from src.physics import EulerEquations, LinearAdvection
from src.reconstruction import LineView, reconstruct_c5
from src.solver import (
    SchemeConfig,
    SemiDiscretization,
    SourceTerm,
    apply_source,
    compute_dt,
    convergence_dt,
    gravity,
    integrate,
    rhs_1d,
    rhs_2d,
    rk3_step,
)
from src.utils.errors import ConfigurationError, InvalidStateError
from src.utils.validators import ValidationError

PERIODIC_1D = BoundarySpec(Periodic(), Periodic())
PERIODIC_2D = BoundarySpec.uniform(Periodic, 2)


def _euler_field(grid, gas, density, u=0.0, p=1.0):
    law = EulerEquations(gas)
    w = np.stack([density, np.full_like(density, u), np.zeros_like(density),
                  np.full_like(density, p)])
    return CellField.from_interior(grid, law.to_conservative(w)), law


class TestSchemeConfig:
    def test_names_are_canonicalised(self):
        assert SchemeConfig(scheme="hocus-tvd").scheme == "HOCUS_TVD"
        assert SchemeConfig(scheme="weno-z", riemann="glf").riemann == "GLF"

    def test_unknown_scheme(self):
        with pytest.raises(ValidationError):
            SchemeConfig(scheme="PPM")

    @pytest.mark.parametrize("cfl", [0.0, 1.0, -0.3])
    def test_cfl_range(self, cfl):
        with pytest.raises(ValidationError):
            SchemeConfig(cfl=cfl)

    def test_unknown_backend(self):
        with pytest.raises(ValidationError):
            SchemeConfig(c5_backend="lu")

    def test_from_dict_rejects_unknown_keys(self):
        with pytest.raises(ValidationError, match="bogus"):
            SchemeConfig.from_dict({"scheme": "MP5", "bogus": 1})

    def test_alpha_defaults_and_override(self):
        assert SchemeConfig(scheme="HOCUS6").mp5_alpha == 7.0
        assert SchemeConfig(scheme="MP5").mp5_alpha == 4.0
        assert SchemeConfig(scheme="HOCUS5", alpha=3.0).to_dict()["alpha"] == 3.0

    def test_projection_rules(self):
        assert SchemeConfig(scheme="MP5").uses_projection(True)
        assert not SchemeConfig(scheme="MP5").uses_projection(False)
        assert not SchemeConfig(scheme="C6").uses_projection(True)
        assert not SchemeConfig(scheme="HOCUS6", characteristic_projection=False).uses_projection(True)

    def test_describe(self):
        assert SchemeConfig(scheme="HOCUS6").describe().startswith("HOCUS6/HLLC")


class TestRK3:
    def test_linear_decay_amplification(self):
        grid = Grid1D(0.0, 1.0, 4)
        state = CellField.from_interior(grid, np.ones(4))
        z = -0.1
        result = rk3_step(state, 0.1, lambda field, t: -1.0 * np.array(field.interior))
        assert_allclose(result.interior, 1.0 + z + z ** 2 / 2 + z ** 3 / 6, rtol=1e-14)

    def test_stage_times(self):
        grid = Grid1D(0.0, 1.0, 4)
        seen = []

        def rhs(field, t):
            seen.append(t)
            return np.zeros_like(field.interior)

        rk3_step(CellField.zeros(grid, 1), 0.2, rhs, t=1.0)
        assert seen == pytest.approx([1.0, 1.2, 1.1])

    def test_input_field_is_not_modified(self):
        grid = Grid1D(0.0, 1.0, 4)
        state = CellField.from_interior(grid, np.ones(4))
        rk3_step(state, 0.1, lambda field, t: np.ones_like(field.interior))
        assert_allclose(state.interior, 1.0)

    def test_rejects_non_positive_step(self):
        with pytest.raises(ConfigurationError):
            rk3_step(CellField.zeros(Grid1D(0.0, 1.0, 4), 1), 0.0, lambda f, t: 0.0)


class TestTimeStep:
    def test_euler_uniform_state(self, gas):
        grid = Grid1D(0.0, 1.0, 100)
        state, law = _euler_field(grid, gas, np.ones(100), u=1.0)
        expected = 0.2 * 0.01 / (1.0 + math.sqrt(1.4))
        assert compute_dt(state, law, 0.2) == pytest.approx(expected, rel=1e-12)

    def test_two_dimensional_takes_smallest_direction(self):
        grid = Grid2D.from_extents((0.0, 1.0), (0.0, 0.5), 10, 10)
        state = CellField.zeros(grid, 1)
        assert compute_dt(state, LinearAdvection((1.0, 1.0)), 0.4) == pytest.approx(0.4 * 0.05)

    def test_no_signal_speed(self):
        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        with pytest.raises(InvalidStateError):
            compute_dt(state, LinearAdvection((0.0, 0.0)), 0.2)

    def test_convergence_step(self):
        assert convergence_dt(Grid1D(0.0, 1.0, 10)) == pytest.approx(1e-3)


def _still(field, t):
    return np.zeros_like(field.interior)


class TestIntegrate:
    def test_last_step_clipped_to_end_time(self):
        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        _, history = integrate(state, _still, LinearAdvection(), 1.0, 0.5, fixed_dt=0.3)
        assert history.steps == 4
        assert history.t == 1.0
        assert history.dt_min == pytest.approx(0.1)
        assert history.dt_max == pytest.approx(0.3)

    def test_cfl_controlled_steps(self):
        state = CellField.zeros(Grid1D(0.0, 1.0, 10), 1)
        _, history = integrate(state, _still, LinearAdvection(), 0.12, 0.5)
        assert history.steps == 3
        assert history.t == 0.12

    def test_end_before_start(self):
        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        with pytest.raises(ConfigurationError):
            integrate(state, _still, LinearAdvection(), 0.5, 0.5, t_start=1.0)

    def test_failure_carries_time_and_step(self):
        def failing(field, t):
            raise InvalidStateError("Negative pressure", {"cell": (2,)})

        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        with pytest.raises(InvalidStateError) as info:
            integrate(state, failing, LinearAdvection(), 1.0, 0.5, fixed_dt=0.1)
        assert info.value.location == {"cell": (2,), "t": 0.0, "step": 0}
        assert "Negative pressure" in str(info.value)

    def test_non_finite_solution(self):
        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        with pytest.raises(InvalidStateError) as info:
            integrate(state, lambda f, t: np.full_like(f.interior, np.nan),
                      LinearAdvection(), 1.0, 0.5, fixed_dt=0.1)
        assert info.value.location["cell"] == (0,)

    def test_step_limit(self):
        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        with pytest.raises(InvalidStateError, match="Step limit"):
            integrate(state, _still, LinearAdvection(), 1.0, 0.5, fixed_dt=0.1, max_steps=3)

    def test_records_trigger_counts_and_calls_back(self):
        class CountingRhs:
            last_triggered = 5

            def __call__(self, field, t):
                return np.zeros_like(field.interior)

        calls = []
        state = CellField.zeros(Grid1D(0.0, 1.0, 8), 1)
        _, history = integrate(state, CountingRhs(), LinearAdvection(), 0.2, 0.5, fixed_dt=0.1,
                               on_step=lambda field, h: calls.append(h.steps))
        assert history.triggered == [5, 5]
        assert calls == [1, 2]


class TestSources:
    def test_gravity(self):
        prim = np.array([[2.0] * 3, [0.0] * 3, [-0.1] * 3, [1.0] * 3])
        assert_allclose(gravity()(prim, None)[:, 0], [0.0, 0.0, 2.0, -0.2])

    def test_no_source_leaves_residual(self):
        residual = np.ones((1, 4))
        assert apply_source(residual, np.zeros((1, 4)), None) is residual

    def test_shape_mismatch(self):
        source = SourceTerm(lambda prim, grid, t: np.zeros(3), "broken")
        with pytest.raises(ConfigurationError, match="broken"):
            source(np.zeros((4, 3)), None)

    def test_callback_required(self):
        with pytest.raises(ConfigurationError):
            SourceTerm("gravity")


class TestSemiDiscretization:
    @pytest.mark.parametrize("scheme", ["MP5", "C6", "HOCUS6", "HOCUS_TVD", "C5T2", "HOCUS_WENOZ"])
    def test_free_stream_is_preserved(self, gas, scheme):
        grid = Grid1D(0.0, 1.0, 16)
        field, law = _euler_field(grid, gas, np.ones(16), u=0.3)
        residual = rhs_1d(field, grid, PERIODIC_1D, SchemeConfig(scheme=scheme), law)
        assert_allclose(residual, 0.0, atol=1e-12)

    @pytest.mark.parametrize("riemann", ["HLLC", "GLF"])
    def test_periodic_residual_is_conservative(self, gas, riemann):
        grid = Grid1D(0.0, 1.0, 32)
        density = 1.0 + 0.2 * np.sin(2.0 * np.pi * grid.centers)
        field, law = _euler_field(grid, gas, density, u=0.5)
        residual = rhs_1d(field, grid, PERIODIC_1D, SchemeConfig(riemann=riemann), law)
        assert_allclose(residual.sum(axis=1) * grid.dx, 0.0, atol=1e-12)

    @pytest.mark.parametrize("riemann", RIEMANN_NAMES)
    @pytest.mark.parametrize("scheme", SCHEME_NAMES)
    def test_periodic_residual_is_conservative_across_jumps(self, gas, scheme, riemann):
        grid = Grid1D(0.0, 1.0, 32)
        x = grid.centers
        noise = np.random.default_rng(3).standard_normal(32)
        density = np.where((x < 0.1) | (x > 0.6), 1.0, 0.3) + 0.01 * noise
        field, law = _euler_field(grid, gas, density, u=0.5)
        rhs = SemiDiscretization(law, grid, PERIODIC_1D, SchemeConfig(scheme=scheme, riemann=riemann))
        residual = rhs(field)
        assert_allclose(residual.sum(axis=1) * grid.dx, 0.0, atol=1e-12)

    @pytest.mark.parametrize("scheme", SCHEME_NAMES)
    def test_periodic_advection_residual_is_conservative(self, scheme):
        grid = Grid1D(0.0, 1.0, 32)
        x = grid.centers
        noise = np.random.default_rng(5).standard_normal(32)
        u = np.sin(2.0 * np.pi * x) + 0.3 * np.cos(6.0 * np.pi * x) + 0.05 * noise
        field = CellField.from_interior(grid, u)
        residual = rhs_1d(field, grid, PERIODIC_1D, SchemeConfig(scheme=scheme), LinearAdvection())
        assert abs(residual.sum() * grid.dx) < 1e-12

    @pytest.mark.parametrize("scheme", ["MP5", "HOCUS6", "C5T2", "HOCUS_WENOZ"])
    def test_free_stream_survives_many_steps(self, gas, scheme):
        grid = Grid2D.from_extents((0.0, 1.0), (0.0, 1.0), 8, 8)
        state, law = _euler_field(grid, gas, np.ones((8, 8)), u=0.3)
        initial = np.array(state.interior)
        rhs = SemiDiscretization(law, grid, PERIODIC_2D, SchemeConfig(scheme=scheme))
        t = 0.0
        for _ in range(100):
            dt = compute_dt(state, law, 0.4)
            state = rk3_step(state, dt, rhs, t)
            t += dt
        assert_allclose(state.interior, initial, atol=1e-12)

    @pytest.mark.parametrize("scheme", ["HOCUS6", "C5T2", "HOCUS_WENOZ"])
    def test_totals_hold_over_many_steps_across_jumps(self, gas, scheme):
        grid = Grid1D(0.0, 1.0, 64)
        density = np.where(np.abs(grid.centers - 0.5) < 0.45, 0.3, 1.0)
        state, law = _euler_field(grid, gas, density, u=0.5)
        before = state.totals()
        rhs = SemiDiscretization(law, grid, PERIODIC_1D, SchemeConfig(scheme=scheme))
        state, history = integrate(state, rhs, law, 0.2, 0.4)
        assert history.steps > 20
        assert_allclose(state.totals(), before, rtol=1e-12)

    def test_upwind_c5_residual(self):
        grid = Grid1D(0.0, 1.0, 20)
        field = CellField.from_interior(grid, np.sin(2.0 * np.pi * grid.centers))
        states = reconstruct_c5(LineView(fill_ghosts(field, PERIODIC_1D).data))
        expected = -(states.left[:, 1:] - states.left[:, :-1]) / grid.dx
        residual = rhs_1d(field, grid, PERIODIC_1D, SchemeConfig(scheme="C5"), LinearAdvection())
        assert_allclose(residual, expected, atol=1e-12)

    def test_two_dimensional_rows_match_one_dimensional(self, gas):
        nx, ny = 24, 6
        grid_1d = Grid1D(0.0, 1.0, nx)
        density = 1.0 + 0.2 * np.sin(2.0 * np.pi * grid_1d.centers)
        field_1d, law = _euler_field(grid_1d, gas, density, u=0.4)
        config = SchemeConfig(scheme="HOCUS6")
        expected = rhs_1d(field_1d, grid_1d, PERIODIC_1D, config, law)

        grid_2d = Grid2D(grid_1d, Grid1D(0.0, 0.25, ny))
        field_2d, _ = _euler_field(grid_2d, gas, np.tile(density[:, np.newaxis], (1, ny)), u=0.4)
        residual = rhs_2d(field_2d, grid_2d, PERIODIC_2D, config, law)
        for j in range(ny):
            assert_allclose(residual[:, :, j], expected, atol=1e-12)

    def test_dimension_checks(self, gas):
        grid = Grid1D(0.0, 1.0, 8)
        field = CellField.zeros(grid, 1)
        with pytest.raises(ConfigurationError):
            rhs_2d(field, grid, PERIODIC_1D, SchemeConfig(), LinearAdvection())

    def test_negative_pressure_is_reported(self, gas):
        grid = Grid1D(0.0, 1.0, 8)
        q = np.tile(np.array([1.0, 0.0, 0.0, -1.0])[:, np.newaxis], (1, 8))
        field = CellField.from_interior(grid, q)
        with pytest.raises(InvalidStateError):
            rhs_1d(field, grid, PERIODIC_1D, SchemeConfig(), EulerEquations(gas))

    def test_trigger_count_is_exposed(self, gas):
        grid = Grid1D(0.0, 1.0, 32)
        density = np.where(grid.centers < 0.5, 1.0, 0.125)
        field, law = _euler_field(grid, gas, density)
        rhs = SemiDiscretization(law, grid, PERIODIC_1D, SchemeConfig(scheme="HOCUS6"))
        rhs(field)
        assert rhs.projects
        assert rhs.last_triggered > 0

    def test_gravity_adds_to_residual(self, gas):
        grid = Grid2D.from_extents((0.0, 1.0), (0.0, 1.0), 8, 8)
        field, law = _euler_field(grid, gas, np.full((8, 8), 2.0))
        rhs = SemiDiscretization(law, grid, PERIODIC_2D, SchemeConfig(scheme="MP5"), gravity())
        residual = rhs(field)
        assert_allclose(residual[2], 2.0, atol=1e-12)
        assert_allclose(residual[[0, 1, 3]], 0.0, atol=1e-12)
