"""Tests for the benchmark catalog and reference solutions."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.cases import (
    CASES,
    fine_grid_solution,
    instantiate_case,
    list_cases,
    reference_solution,
    restrict,
)
from src.cases import reference
from src.cases.library import dmr_shock_position
from src.mesh import Grid1D, Grid2D
from src.physics import EulerEquations, LinearAdvection
from src.utils.errors import CaseLookupError, ConfigurationError, UnsupportedCaseError

RUNNABLE = [name for name in CASES if name != "viscous_shock_tube"]


def _coarse(name):
    spec = instantiate_case(name)
    return spec.with_overrides(cells=(16,) * spec.ndim)


class TestCatalog:
    def test_listing(self):
        listing = list_cases()
        assert len(listing) == 19
        assert "double_mach" in listing
        assert all(isinstance(text, str) and text for text in listing.values())

    def test_unknown_name(self):
        with pytest.raises(CaseLookupError, match="Unknown case: nope"):
            instantiate_case("nope")

    def test_lookup_error_is_a_key_error(self):
        with pytest.raises(KeyError):
            instantiate_case("nope")

    def test_viscous_case_is_listed_but_unsupported(self):
        assert "viscous_shock_tube" in list_cases()
        with pytest.raises(UnsupportedCaseError):
            instantiate_case("viscous_shock_tube")

    @pytest.mark.parametrize("name, gamma", [("sod", 1.4), ("le_blanc", 5.0 / 3.0),
                                             ("rayleigh_taylor", 5.0 / 3.0)])
    def test_gamma(self, name, gamma):
        assert instantiate_case(name).gamma == pytest.approx(gamma)

    def test_laws(self):
        assert isinstance(instantiate_case("gaussian_advect").law(), LinearAdvection)
        assert isinstance(instantiate_case("lax").law(), EulerEquations)

    def test_rayleigh_taylor_carries_gravity(self):
        assert instantiate_case("rayleigh_taylor").source is not None
        assert instantiate_case("sod").source is None


class TestKnobsAndOverrides:
    def test_titarev_toro_sub_case(self):
        spec = instantiate_case("titarev_toro", case=2)
        assert spec.cells == (400,)
        assert spec.knobs == {"case": 2}

    def test_titarev_toro_bad_sub_case(self):
        with pytest.raises(ConfigurationError):
            instantiate_case("titarev_toro", case=3)

    def test_unknown_knob(self):
        with pytest.raises(ConfigurationError, match="sod"):
            instantiate_case("sod", amplitude=0.2)

    def test_t_end_through_factory(self):
        assert instantiate_case("henrick_critical", t_end=2.0).t_end == 2.0
        assert instantiate_case("advection_complex", t_end=8.0).cells == (400,)

    def test_t_end_override(self):
        assert instantiate_case("sod", t_end=0.1).t_end == 0.1

    def test_non_positive_t_end(self):
        with pytest.raises(ConfigurationError):
            instantiate_case("sod", t_end=0.0)

    def test_cells_override(self):
        assert instantiate_case("sod", cells=(50,)).grid().n_cells == 50
        assert instantiate_case("explosion_2d", cells=(32,)).cells == (32, 32)

    def test_cell_count_must_match_dimension(self):
        with pytest.raises(ConfigurationError):
            instantiate_case("sod", cells=(10, 10))

    def test_richtmyer_meshkov_knobs(self):
        spec = instantiate_case("richtmyer_meshkov", amplitude=0.05)
        assert spec.knobs["amplitude"] == 0.05


class TestInitialConditions:
    @pytest.mark.parametrize("name", RUNNABLE)
    def test_initial_state_is_physical(self, name):
        spec = _coarse(name)
        grid = spec.grid()
        prim = spec.initial_primitive(grid)
        assert prim.shape == (spec.law().n_comp, *grid.shape)
        assert np.all(np.isfinite(prim))
        if spec.law_kind == "euler":
            assert np.all(prim[0] > 0.0)
            assert np.all(prim[3] > 0.0)
        field = spec.initial_field(grid)
        assert np.all(np.isfinite(field.data))

    def test_sod_orientation(self):
        prim = instantiate_case("sod").initial_primitive(Grid1D(0.0, 1.0, 4))
        assert_allclose(prim[:, 0], [0.125, 0.0, 0.0, 0.1])
        assert_allclose(prim[:, -1], [1.0, 0.0, 0.0, 1.0])

    def test_rayleigh_taylor_pressure_is_continuous(self):
        spec = instantiate_case("rayleigh_taylor")
        grid = Grid2D.from_extents((0.0, 0.25), (0.0, 1.0), 2, 1000)
        p = spec.initial_primitive(grid)[3, 0]
        assert np.max(np.abs(np.diff(p))) < 0.01

    def test_double_mach_shock_position(self):
        assert dmr_shock_position(0.0, 0.0) == pytest.approx(1.0 / 6.0)
        assert dmr_shock_position(1.0, 0.0) == pytest.approx(1.0 / 6.0 + 1.0 / math.sqrt(3.0))


class TestReferences:
    def test_analytic_after_one_period(self):
        spec = instantiate_case("gaussian_advect")
        grid = spec.grid()
        assert_allclose(reference_solution(spec, grid), spec.initial_primitive(grid), atol=1e-12)

    def test_smooth_euler_reference_moves(self):
        spec = instantiate_case("euler2d_smooth", cells=(8,))
        grid = spec.grid()
        later = reference_solution(spec, grid, t=0.25)
        assert later.shape == (4, 8, 8)
        assert not np.allclose(later[0], spec.initial_primitive(grid)[0])
        assert_allclose(later[1:], 1.0)

    def test_sod_reference_keeps_far_states(self):
        spec = instantiate_case("sod")
        values = reference_solution(spec)
        assert values.shape == (4, 100)
        assert values[0, 0] == pytest.approx(0.125)
        assert values[0, -1] == pytest.approx(1.0)

    def test_riemann_reference_at_time_zero(self):
        spec = instantiate_case("lax")
        grid = spec.grid()
        assert_allclose(reference_solution(spec, grid, t=0.0), spec.initial_primitive(grid))

    def test_case_without_reference(self):
        with pytest.raises(UnsupportedCaseError):
            reference_solution(instantiate_case("riemann2d_config3"))

    def test_fine_grid_only_at_end_time(self):
        with pytest.raises(UnsupportedCaseError):
            reference_solution(instantiate_case("shu_osher"), t=1.0)

    def test_fine_grid_runs_are_cached(self, monkeypatch):
        calls = []

        def fake_run(case, scheme):
            calls.append((case.name, scheme))
            grid = case.grid((8,))
            return np.ones((3, 8)), grid

        monkeypatch.setattr(reference, "_run_fine_grid", fake_run)
        reference._cached_fine_grid.cache_clear()
        try:
            first, _ = fine_grid_solution(instantiate_case("shu_osher"))
            first[:] = 0.0
            second, grid = fine_grid_solution(instantiate_case("shu_osher"))
            assert calls == [("shu_osher", "WENO_Z")]
            assert_allclose(second, 1.0)
            assert grid.n_cells == 8

            fine_grid_solution(instantiate_case("shu_osher", t_end=0.5))
            fine_grid_solution(instantiate_case("shu_osher"), scheme="MP5")
            assert len(calls) == 3
        finally:
            reference._cached_fine_grid.cache_clear()

    def test_fine_grid_needs_recipe(self):
        with pytest.raises(UnsupportedCaseError):
            fine_grid_solution(instantiate_case("sod"))


class TestRestrict:
    def test_block_average_1d(self):
        values = np.arange(8.0)[np.newaxis]
        coarse = restrict(values, Grid1D(0.0, 1.0, 8), Grid1D(0.0, 1.0, 4))
        assert_allclose(coarse, [[0.5, 2.5, 4.5, 6.5]])

    def test_block_average_2d(self):
        fine = Grid2D.from_extents((0.0, 1.0), (0.0, 1.0), 4, 4)
        coarse = Grid2D.from_extents((0.0, 1.0), (0.0, 1.0), 2, 2)
        values = np.arange(16.0).reshape(1, 4, 4)
        assert_allclose(restrict(values, fine, coarse), [[[2.5, 4.5], [10.5, 12.5]]])

    def test_interpolation_for_non_integer_ratio(self):
        fine, coarse = Grid1D(0.0, 1.0, 3), Grid1D(0.0, 1.0, 2)
        values = fine.centers[np.newaxis]
        assert_allclose(restrict(values, fine, coarse), [coarse.centers])

    def test_non_integer_ratio_in_2d(self):
        fine = Grid2D.from_extents((0.0, 1.0), (0.0, 1.0), 3, 3)
        coarse = Grid2D.from_extents((0.0, 1.0), (0.0, 1.0), 2, 2)
        with pytest.raises(ConfigurationError):
            restrict(np.zeros((1, 3, 3)), fine, coarse)
