"""Shared fixtures for the HOCUS test suite."""

import numpy as np
import pytest

from src.mesh import BoundarySpec, Grid1D, Periodic, ZeroGradient, apply_boundaries
from src.physics import GasModel
from src.reconstruction import LineView
from src.utils.logger import Logger


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long accuracy studies and benchmark runs")


@pytest.fixture(autouse=True)
def normal_verbosity():
    yield
    Logger().reset_verbosity()


@pytest.fixture
def gas():
    return GasModel(1.4)


@pytest.fixture
def sod_states():
    return np.array([1.0, 0.0, 0.0, 1.0]), np.array([0.125, 0.0, 0.0, 0.1])


def make_line(interior, condition=Periodic, n_ghost=3):
    """LineView over ``interior`` (last axis) with ghosts filled by ``condition``."""
    interior = np.atleast_2d(np.asarray(interior, dtype=float))
    grid = Grid1D(0.0, 1.0, interior.shape[-1], n_ghost)
    data = np.zeros((interior.shape[0], grid.padded_size))
    data[:, grid.interior] = interior
    apply_boundaries(data, BoundarySpec(condition(), condition()), grid)
    return LineView(data, n_ghost, periodic=condition().is_periodic)


@pytest.fixture
def sine_line():
    x = (np.arange(40) + 0.5) / 40
    return make_line(np.sin(2.0 * np.pi * x))


@pytest.fixture
def step_line():
    """Cells 0..9 hold 0 and cells 10..19 hold 1; the jump is at interface 10."""
    return make_line(np.where(np.arange(20) < 10, 0.0, 1.0), ZeroGradient)
