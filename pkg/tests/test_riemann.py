"""Tests for the HLLC / GLF interface fluxes and the exact Riemann solver."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.physics import GasModel, exact_riemann, glf_flux, hllc_flux, physical_flux, solve_riemann
from src.utils.errors import UnsupportedCaseError


def _hllc_reference(wl, wr, gamma):
    """Scalar HLLC flux in x with Einfeldt/Roe speed bounds, written out term by term."""
    rho_l, u_l, v_l, p_l = wl
    rho_r, u_r, v_r, p_r = wr
    e_l = p_l / (gamma - 1) + 0.5 * rho_l * (u_l ** 2 + v_l ** 2)
    e_r = p_r / (gamma - 1) + 0.5 * rho_r * (u_r ** 2 + v_r ** 2)
    c_l = math.sqrt(gamma * p_l / rho_l)
    c_r = math.sqrt(gamma * p_r / rho_r)
    h_l = (e_l + p_l) / rho_l
    h_r = (e_r + p_r) / rho_r
    sl, sr = math.sqrt(rho_l), math.sqrt(rho_r)
    u_t = (sl * u_l + sr * u_r) / (sl + sr)
    v_t = (sl * v_l + sr * v_r) / (sl + sr)
    h_t = (sl * h_l + sr * h_r) / (sl + sr)
    c_t = math.sqrt((gamma - 1) * (h_t - 0.5 * (u_t ** 2 + v_t ** 2)))
    s_l = min(u_l - c_l, u_t - c_t)
    s_r = max(u_r + c_r, u_t + c_t)
    s_m = (p_r - p_l + rho_l * u_l * (s_l - u_l) - rho_r * u_r * (s_r - u_r)) / (
        rho_l * (s_l - u_l) - rho_r * (s_r - u_r))

    def flux(rho, u, v, p, e):
        return np.array([rho * u, rho * u * u + p, rho * u * v, (e + p) * u])

    def star(rho, u, v, p, e, s):
        factor = rho * (s - u) / (s - s_m)
        return factor * np.array([1.0, s_m, v, e / rho + (s_m - u) * (s_m + p / (rho * (s - u)))])

    f_l = flux(rho_l, u_l, v_l, p_l, e_l)
    f_r = flux(rho_r, u_r, v_r, p_r, e_r)
    q_l = np.array([rho_l, rho_l * u_l, rho_l * v_l, e_l])
    q_r = np.array([rho_r, rho_r * u_r, rho_r * v_r, e_r])
    if s_l >= 0:
        return f_l
    if s_m >= 0:
        return f_l + s_l * (star(rho_l, u_l, v_l, p_l, e_l, s_l) - q_l)
    if s_r > 0:
        return f_r + s_r * (star(rho_r, u_r, v_r, p_r, e_r, s_r) - q_r)
    return f_r


class TestPhysicalFlux:
    def test_stagnant_state(self, gas):
        assert_allclose(physical_flux([1.0, 0.0, 0.0, 1.0], (1.0, 0.0), gas), [0.0, 1.0, 0.0, 0.0])

    def test_moving_state(self, gas):
        assert_allclose(physical_flux([1.0, 1.0, 0.0, 1.0], (1.0, 0.0), gas), [1.0, 2.0, 0.0, 4.0])

    def test_rotation_consistency(self, gas):
        w = np.array([1.3, 0.4, -0.7, 2.1])
        swapped = np.array([1.3, -0.7, 0.4, 2.1])
        f_y = physical_flux(w, (0.0, 1.0), gas)
        f_x = physical_flux(swapped, (1.0, 0.0), gas)
        assert_allclose(f_y, f_x[[0, 2, 1, 3]])


class TestHLLC:
    def test_consistency(self, gas):
        w = np.array([0.8, 0.3, -0.2, 1.1])
        for normal in ((1.0, 0.0), (0.0, 1.0)):
            assert_allclose(hllc_flux(w, w, normal, gas), physical_flux(w, normal, gas), atol=1e-14)

    def test_sod_jump_matches_reference(self, gas, sod_states):
        left, right = sod_states
        flux = hllc_flux(left, right, (1.0, 0.0), gas)
        assert np.all(np.isfinite(flux))
        assert flux[0] > 0.0
        assert_allclose(flux, _hllc_reference(left, right, 1.4), rtol=1e-13, atol=1e-14)

    def test_random_pairs_match_reference(self, gas):
        rng = np.random.default_rng(7)
        for _ in range(200):
            wl = np.array([rng.uniform(0.1, 2.0), rng.uniform(-2, 2), rng.uniform(-1, 1), rng.uniform(0.1, 3.0)])
            wr = np.array([rng.uniform(0.1, 2.0), rng.uniform(-2, 2), rng.uniform(-1, 1), rng.uniform(0.1, 3.0)])
            assert_allclose(hllc_flux(wl, wr, (1.0, 0.0), gas), _hllc_reference(wl, wr, 1.4),
                            rtol=1e-12, atol=1e-13)

    def test_supersonic_left_moving_takes_right_flux(self, gas):
        wl = np.array([1.0, -3.0, 0.0, 1.0])
        wr = np.array([1.2, -3.1, 0.0, 1.1])
        assert_allclose(hllc_flux(wl, wr, (1.0, 0.0), gas), physical_flux(wr, (1.0, 0.0), gas))

    def test_vectorised_over_interfaces(self, gas, sod_states):
        left, right = sod_states
        wl = np.stack([left, right], axis=1)
        wr = np.stack([right, right], axis=1)
        flux = hllc_flux(wl, wr, (1.0, 0.0), gas)
        assert flux.shape == (4, 2)
        assert_allclose(flux[:, 1], physical_flux(right, (1.0, 0.0), gas))


class TestGLF:
    def test_equal_states(self, gas):
        w = np.array([1.0, 0.5, 0.1, 1.0])
        assert_allclose(glf_flux(w, w, (1.0, 0.0), gas, 3.0), physical_flux(w, (1.0, 0.0), gas))

    def test_zero_alpha_is_central(self, gas, sod_states):
        left, right = sod_states
        expected = 0.5 * (physical_flux(left, (1.0, 0.0), gas) + physical_flux(right, (1.0, 0.0), gas))
        assert_allclose(glf_flux(left, right, (1.0, 0.0), gas, 0.0), expected)

    def test_sod_mass_flux(self, gas, sod_states):
        left, right = sod_states
        alpha = math.sqrt(1.4)
        flux = glf_flux(left, right, (1.0, 0.0), gas, alpha)
        assert flux[0] == pytest.approx(-0.5 * alpha * (0.125 - 1.0))


class TestExactRiemann:
    def test_sod_star_state(self, gas, sod_states):
        solution = solve_riemann(*sod_states, gas)
        assert solution.p_star == pytest.approx(0.30313, abs=1e-5)
        assert solution.u_star == pytest.approx(0.92745, abs=1e-5)
        assert solution.residual <= 1e-12

    def test_uniform_data(self, gas):
        w = np.array([1.0, 0.2, 0.0, 1.0])
        sampled = exact_riemann(w, w, gas, np.linspace(-2.0, 2.0, 11))
        assert_allclose(sampled, np.tile(w[:, np.newaxis], (1, 11)), atol=1e-10)

    def test_mirror_symmetry(self, gas):
        left = np.array([1.0, 0.3, 0.0, 1.0])
        right = np.array([0.3, -0.1, 0.0, 0.2])
        xi = np.linspace(-3.0, 3.0, 41)
        direct = exact_riemann(left, right, gas, xi)
        mirrored = exact_riemann(right * [1, -1, 1, 1], left * [1, -1, 1, 1], gas, -xi)
        assert_allclose(mirrored[[0, 3]], direct[[0, 3]], atol=1e-10)
        assert_allclose(mirrored[1], -direct[1], atol=1e-10)

    def test_random_residuals(self, gas):
        rng = np.random.default_rng(3)
        for _ in range(100):
            wl = [rng.uniform(0.1, 2.0), rng.uniform(-0.5, 0.5), 0.0, rng.uniform(0.1, 3.0)]
            wr = [rng.uniform(0.1, 2.0), rng.uniform(-0.5, 0.5), 0.0, rng.uniform(0.1, 3.0)]
            assert solve_riemann(wl, wr, gas).residual <= 1e-12

    def test_vacuum_generation_is_unsupported(self, gas):
        with pytest.raises(UnsupportedCaseError):
            solve_riemann([1.0, -20.0, 0.0, 1.0], [1.0, 20.0, 0.0, 1.0], gas)

    def test_le_blanc_stays_positive(self):
        gas = GasModel(5.0 / 3.0)
        sampled = exact_riemann([1.0, 0.0, 0.0, 2.0 / 30.0], [1e-3, 0.0, 0.0, 2.0 / 3.0 * 1e-10],
                                gas, np.linspace(-1.0, 1.0, 101))
        assert np.all(sampled[0] > 0.0)
        assert np.all(sampled[3] > 0.0)
