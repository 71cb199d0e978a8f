"""
Catalog of benchmark problems.

Each entry is built by a small factory so a few per-case knobs (sub-case,
perturbation amplitude, end time, resolution) can be overridden from the CLI:

    spec = instantiate_case("titarev_toro", case=2)
    spec = instantiate_case("henrick_critical", t_end=2.0)
"""

import inspect
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from ..mesh import (
    BoundarySpec,
    CellField,
    FixedState,
    Grid1D,
    Grid2D,
    Periodic,
    Reflective,
    SplitCondition,
    TimeDependent,
    ZeroGradient,
    apply_boundaries,
)
from ..physics import ConservationLaw, EulerEquations, GasModel, LinearAdvection
from ..solver.sources import SourceTerm, gravity
from ..utils.errors import CaseLookupError, ConfigurationError, UnsupportedCaseError

BoundaryFactory = Callable[[ConservationLaw], BoundarySpec]


@dataclass(frozen=True)
class ReferenceRecipe:
    """
    How a reference solution is obtained.

    kind: 'analytic' (``exact(t, *mesh)`` gives primitive values), 'riemann'
    (exact solver between ``states`` split at ``split``), 'fine_grid' (WENO-Z
    run on ``fine_cells``) or 'none'.
    """

    kind: str = "none"
    exact: Optional[Callable] = None
    states: Optional[Tuple[Tuple[float, ...], Tuple[float, ...]]] = None
    split: float = 0.0
    fine_cells: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class CaseSpec:
    """A fully described initial-boundary value problem."""

    name: str
    description: str
    law_kind: str                       # 'advection' or 'euler'
    x_range: Tuple[float, float]
    cells: Tuple[int, ...]
    t_end: float
    initial: Callable                    # (*mesh) -> primitive values (n_comp, ...)
    boundaries: BoundaryFactory
    y_range: Optional[Tuple[float, float]] = None
    gamma: float = 1.4
    cfl: float = 0.2
    source: Optional[SourceTerm] = None
    reference: ReferenceRecipe = ReferenceRecipe()
    knobs: Dict[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.t_end > 0:
            raise ConfigurationError(f"{self.name}: t_end must be positive")
        if len(self.cells) != self.ndim:
            raise ConfigurationError(f"{self.name}: expected {self.ndim} cell counts")

    @property
    def ndim(self) -> int:
        return 1 if self.y_range is None else 2

    def law(self) -> ConservationLaw:
        if self.law_kind == "advection":
            return LinearAdvection()
        return EulerEquations(GasModel(self.gamma))

    def grid(self, cells: Optional[Tuple[int, ...]] = None):
        cells = tuple(cells or self.cells)
        if self.ndim == 1:
            return Grid1D(self.x_range[0], self.x_range[1], int(cells[0]))
        if len(cells) == 1:
            cells = (cells[0], cells[0])
        return Grid2D.from_extents(self.x_range, self.y_range, cells[0], cells[1])

    def boundary_spec(self) -> BoundarySpec:
        return self.boundaries(self.law())

    def initial_primitive(self, grid) -> np.ndarray:
        """Midpoint samples of the initial primitive state, shape (n_comp, *grid.shape)."""
        values = np.asarray(self.initial(*grid.mesh()), dtype=float)
        if values.ndim == grid.ndim:
            values = values[np.newaxis]
        return values

    def initial_field(self, grid=None) -> CellField:
        """Stored variables at t = 0 with ghosts filled."""
        grid = grid or self.grid()
        law = self.law()
        field_ = CellField.from_interior(grid, law.to_conservative(self.initial_primitive(grid)))
        data = field_.data.copy()
        apply_boundaries(data, self.boundary_spec(), grid, 0.0)
        return CellField(data, grid)

    def with_overrides(self, t_end: Optional[float] = None,
                       cells: Optional[Tuple[int, ...]] = None) -> "CaseSpec":
        changes = {}
        if t_end is not None:
            changes["t_end"] = float(t_end)
        if cells is not None:
            cells = tuple(int(c) for c in cells)
            if self.ndim == 2 and len(cells) == 1:
                cells = (cells[0], cells[0])
            changes["cells"] = cells
        return replace(self, **changes) if changes else self


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _euler1d(rho, u, p):
    rho, u, p = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (rho, u, p)))
    return np.stack([rho, u, np.zeros_like(rho), p])


def _euler2d(rho, u, v, p):
    rho, u, v, p = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (rho, u, v, p)))
    return np.stack([rho, u, v, p])


def _select(conditions, states, shape):
    """Piecewise-constant primitive states; first matching condition wins."""
    out = np.empty((len(states[0]),) + shape)
    out[:] = np.asarray(states[-1], dtype=float).reshape((-1,) + (1,) * len(shape))
    for condition, state in reversed(list(zip(conditions, states[:-1]))):
        out[:, condition] = np.asarray(state, dtype=float)[:, np.newaxis]
    return out


def _uniform(factory, ndim):
    def build(law: ConservationLaw) -> BoundarySpec:
        return BoundarySpec.uniform(factory, ndim, law.to_conservative)
    return build


def _shock_tube(left, right, split):
    left_state = (left[0], left[1], 0.0, left[2])
    right_state = (right[0], right[1], 0.0, right[2])

    def initial(x):
        return _select([x < split], [left_state, right_state], x.shape)

    return initial, ReferenceRecipe("riemann", states=(left_state, right_state), split=split)


def _periodic_shift(profile, lo, hi, velocity=1.0):
    period = hi - lo

    def exact(t, x):
        return profile(lo + np.mod(x - velocity * t - lo, period))

    return exact


# ---------------------------------------------------------------------------
# Scalar advection
# ---------------------------------------------------------------------------

def _complex_waves(x):
    u = np.zeros_like(x)
    gauss = (x >= -0.8) & (x <= -0.6)
    u[gauss] = np.exp(-math.log(2.0) * (x[gauss] + 0.7) ** 2 / 0.0009)
    u[(x >= -0.4) & (x <= -0.2)] = 1.0
    tri = (x >= 0.0) & (x <= 0.2)
    u[tri] = 1.0 - np.abs(10.0 * (x[tri] - 0.1))
    ell = (x >= 0.4) & (x <= 0.6)
    u[ell] = np.sqrt(np.maximum(1.0 - 100.0 * (x[ell] - 0.5) ** 2, 0.0))
    return u


def advection_complex(t_end: float = 2.0) -> CaseSpec:
    return CaseSpec(
        name="advection_complex",
        description="Square wave, Gaussian, triangle and semi-ellipse advected on [-1, 1]",
        law_kind="advection",
        x_range=(-1.0, 1.0),
        cells=(200,) if t_end <= 2.0 else (400,),
        t_end=t_end,
        initial=_complex_waves,
        boundaries=_uniform(Periodic, 1),
        cfl=0.1,
        reference=ReferenceRecipe("analytic", exact=_periodic_shift(_complex_waves, -1.0, 1.0)),
    )


def _gaussian(x):
    return np.exp(-300.0 * (x - 0.5) ** 2)


def gaussian_advect() -> CaseSpec:
    return CaseSpec(
        name="gaussian_advect",
        description="Gaussian pulse exp(-300(x-0.5)^2), one period on [0, 1]",
        law_kind="advection",
        x_range=(0.0, 1.0),
        cells=(80,),
        t_end=1.0,
        initial=_gaussian,
        boundaries=_uniform(Periodic, 1),
        reference=ReferenceRecipe("analytic", exact=_periodic_shift(_gaussian, 0.0, 1.0)),
    )


def _critical(x):
    return np.sin(np.pi * x - np.sin(np.pi * x) / np.pi)


def henrick_critical(t_end: float = 8.0) -> CaseSpec:
    return CaseSpec(
        name="henrick_critical",
        description="sin(pi x - sin(pi x)/pi) with critical points, periodic on [-1, 1]",
        law_kind="advection",
        x_range=(-1.0, 1.0),
        cells=(80,),
        t_end=t_end,
        initial=_critical,
        boundaries=_uniform(Periodic, 1),
        reference=ReferenceRecipe("analytic", exact=_periodic_shift(_critical, -1.0, 1.0)),
    )


# ---------------------------------------------------------------------------
# One-dimensional Euler
# ---------------------------------------------------------------------------

MACH3_POST_SHOCK = (3.857143, 2.629369, 0.0, 10.3333)


def titarev_toro(case: int = 1) -> CaseSpec:
    if case not in (1, 2):
        raise ConfigurationError("titarev_toro has sub-cases 1 and 2")
    frequency = 20.0 if case == 1 else 10.0
    post_shock = (1.515695, 0.523326, 0.0, 1.805)

    def initial(x):
        out = _euler1d(1.0 + 0.1 * np.sin(frequency * np.pi * x), 0.0, 1.0)
        out[:, x < -4.5] = np.asarray(post_shock)[:, np.newaxis]
        return out

    return CaseSpec(
        name="titarev_toro",
        description=f"Shock meeting a high-frequency entropy wave (case {case})",
        law_kind="euler",
        x_range=(-5.0, 5.0),
        cells=(1000,) if case == 1 else (400,),
        t_end=5.0,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 1),
        reference=ReferenceRecipe("fine_grid", fine_cells=(3000,) if case == 1 else (1600,)),
        knobs={"case": case},
    )


def sod() -> CaseSpec:
    initial, reference = _shock_tube((0.125, 0.0, 0.1), (1.0, 0.0, 1.0), 0.5)
    return CaseSpec(
        name="sod",
        description="Sod shock tube, low-pressure state on the left",
        law_kind="euler",
        x_range=(0.0, 1.0),
        cells=(100,),
        t_end=0.2,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 1),
        reference=reference,
    )


def lax() -> CaseSpec:
    initial, reference = _shock_tube((0.445, 0.698, 3.528), (0.5, 0.0, 0.571), 0.5)
    return CaseSpec(
        name="lax",
        description="Lax shock tube",
        law_kind="euler",
        x_range=(0.0, 1.0),
        cells=(200,),
        t_end=0.14,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 1),
        reference=reference,
    )


def le_blanc() -> CaseSpec:
    initial, reference = _shock_tube((1.0, 0.0, 2.0 / 3.0 * 1e-1),
                                     (1e-3, 0.0, 2.0 / 3.0 * 1e-10), 3.0)
    return CaseSpec(
        name="le_blanc",
        description="Le Blanc extreme shock tube, gamma = 5/3",
        law_kind="euler",
        x_range=(0.0, 9.0),
        cells=(200,),
        t_end=6.0,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 1),
        gamma=5.0 / 3.0,
        reference=reference,
    )


def shu_osher() -> CaseSpec:
    def initial(x):
        out = _euler1d(1.0 + 0.2 * np.sin(5.0 * x), 0.0, 1.0)
        out[:, x < -4.0] = np.asarray(MACH3_POST_SHOCK)[:, np.newaxis]
        return out

    return CaseSpec(
        name="shu_osher",
        description="Mach 3 shock interacting with a density sine wave",
        law_kind="euler",
        x_range=(-5.0, 5.0),
        cells=(300,),
        t_end=1.8,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 1),
        reference=ReferenceRecipe("fine_grid", fine_cells=(1600,)),
    )


def blast_waves() -> CaseSpec:
    def initial(x):
        return _select(
            [x < 0.1, x < 0.9],
            [(1.0, 0.0, 0.0, 1000.0), (1.0, 0.0, 0.0, 0.01), (1.0, 0.0, 0.0, 100.0)],
            x.shape,
        )

    return CaseSpec(
        name="blast_waves",
        description="Interacting blast waves between reflective walls",
        law_kind="euler",
        x_range=(0.0, 1.0),
        cells=(400,),
        t_end=0.038,
        initial=initial,
        boundaries=_uniform(Reflective, 1),
        reference=ReferenceRecipe("fine_grid", fine_cells=(1600,)),
    )


# ---------------------------------------------------------------------------
# Two-dimensional Euler
# ---------------------------------------------------------------------------

def explosion_2d() -> CaseSpec:
    def initial(x, y):
        inside = (x - 1.0) ** 2 + (y - 1.0) ** 2 < 0.4 ** 2
        return _select([inside], [(1.0, 0.0, 0.0, 1.0), (0.125, 0.0, 0.0, 0.1)], x.shape)

    return CaseSpec(
        name="explosion_2d",
        description="Circular explosion of radius 0.4 centred at (1, 1)",
        law_kind="euler",
        x_range=(0.0, 2.0),
        y_range=(0.0, 2.0),
        cells=(400, 400),
        t_end=0.25,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 2),
        reference=ReferenceRecipe("fine_grid", fine_cells=(1000, 1000)),
    )


def euler2d_smooth(wavenumber: float = math.pi) -> CaseSpec:
    def density(x, y, t=0.0):
        return 1.0 + 0.5 * np.sin(wavenumber * (x + y - 2.0 * t))

    def exact(t, x, y):
        return _euler2d(density(x, y, t), 1.0, 1.0, 1.0)

    return CaseSpec(
        name="euler2d_smooth",
        description="Density wave advected diagonally at unit velocity, periodic",
        law_kind="euler",
        x_range=(-1.0, 1.0),
        y_range=(-1.0, 1.0),
        cells=(40, 40),
        t_end=2.0,
        initial=lambda x, y: exact(0.0, x, y),
        boundaries=_uniform(Periodic, 2),
        reference=ReferenceRecipe("analytic", exact=exact),
        knobs={"wavenumber": wavenumber},
    )


def _quadrants(x, y, cx, cy, upper_right, upper_left, lower_left, lower_right):
    right, top = x > cx, y > cy
    return _select(
        [right & top, ~right & top, ~right & ~top],
        [upper_right, upper_left, lower_left, lower_right],
        x.shape,
    )


def riemann2d_config3() -> CaseSpec:
    s = 4.0 / math.sqrt(11.0)

    def initial(x, y):
        return _quadrants(x, y, 0.8, 0.8,
                          (1.5, 0.0, 0.0, 1.5),
                          (33.0 / 62.0, s, 0.0, 0.3),
                          (77.0 / 558.0, s, s, 9.0 / 310.0),
                          (33.0 / 62.0, 0.0, s, 0.3))

    return CaseSpec(
        name="riemann2d_config3",
        description="Four-shock two-dimensional Riemann problem",
        law_kind="euler",
        x_range=(0.0, 1.0),
        y_range=(0.0, 1.0),
        cells=(400, 400),
        t_end=0.8,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 2),
    )


def riemann2d_appendixB() -> CaseSpec:
    def initial(x, y):
        return _quadrants(x, y, 0.0, 0.0,
                          (0.5197, 0.1, 0.1, 0.4),
                          (1.0, -0.6259, 0.1, 1.0),
                          (0.8, 0.1, 0.1, 1.0),
                          (1.0, 0.1, -0.6259, 1.0))

    return CaseSpec(
        name="riemann2d_appendixB",
        description="Two-dimensional Riemann problem with slip lines",
        law_kind="euler",
        x_range=(-0.5, 0.5),
        y_range=(-0.5, 0.5),
        cells=(1000, 1000),
        t_end=0.25,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 2),
    )


def shock_entropy_2d(theta: float = math.pi / 6.0) -> CaseSpec:
    def initial(x, y):
        wave = _euler2d(1.0 + 0.2 * np.sin(10.0 * x * math.cos(theta) + 10.0 * y * math.sin(theta)),
                        0.0, 0.0, 1.0)
        wave[:, x < -4.0] = np.asarray(MACH3_POST_SHOCK)[:, np.newaxis]
        return wave

    return CaseSpec(
        name="shock_entropy_2d",
        description="Shock meeting an oblique entropy wave",
        law_kind="euler",
        x_range=(-5.0, 5.0),
        y_range=(-1.0, 1.0),
        cells=(400, 80),
        t_end=1.8,
        initial=initial,
        boundaries=_uniform(ZeroGradient, 2),
        reference=ReferenceRecipe("fine_grid", fine_cells=(1600, 320)),
        knobs={"theta": theta},
    )


RM_HEAVY = (5.04, 0.0, 0.0, 1.0)
RM_SHOCKED = (1.4112, -665.0 / 1556.0, 0.0, 1.628)


def richtmyer_meshkov(amplitude: float = 0.1, phase: float = 0.25) -> CaseSpec:
    def initial(x, y):
        interface = 2.9 - amplitude * np.sin(2.0 * np.pi * (y + phase))
        return _select([x < interface, x < 3.2],
                       [RM_HEAVY, (1.0, 0.0, 0.0, 1.0), RM_SHOCKED], x.shape)

    def boundaries(law):
        return BoundarySpec(FixedState(RM_HEAVY), FixedState(RM_SHOCKED),
                            Periodic(), Periodic(), to_stored=law.to_conservative)

    return CaseSpec(
        name="richtmyer_meshkov",
        description="Shock hitting a perturbed heavy/light interface",
        law_kind="euler",
        x_range=(0.0, 4.0),
        y_range=(0.0, 1.0),
        cells=(320, 80),
        t_end=9.0,
        initial=initial,
        boundaries=boundaries,
        knobs={"amplitude": amplitude, "phase": phase},
    )


def rayleigh_taylor() -> CaseSpec:
    gamma = 5.0 / 3.0

    def initial(x, y):
        lower = y < 0.5
        rho = np.where(lower, 2.0, 1.0)
        p = np.where(lower, 2.0 * y + 1.0, y + 1.5)
        v = -0.025 * np.sqrt(gamma * p / rho) * np.cos(8.0 * np.pi * x)
        return _euler2d(rho, 0.0, v, p)

    def boundaries(law):
        return BoundarySpec(Reflective(), Reflective(),
                            FixedState((2.0, 0.0, 0.0, 1.0)), FixedState((1.0, 0.0, 0.0, 2.5)),
                            to_stored=law.to_conservative)

    return CaseSpec(
        name="rayleigh_taylor",
        description="Heavy fluid below light fluid under upward unit gravity",
        law_kind="euler",
        x_range=(0.0, 0.25),
        y_range=(0.0, 1.0),
        cells=(80, 320),
        t_end=1.95,
        initial=initial,
        boundaries=boundaries,
        gamma=gamma,
        source=gravity(),
    )


BUBBLE_POST_SHOCK = (1.3764, -0.3947, 0.0, 1.5698)


def shock_bubble() -> CaseSpec:
    def initial(x, y):
        bubble = (x - 3.5) ** 2 + (y - 0.89) ** 2 < 0.5 ** 2
        return _select([bubble, x > 4.5],
                       [(0.1819, 0.0, 0.0, 1.0), BUBBLE_POST_SHOCK, (1.0, 0.0, 0.0, 1.0)],
                       x.shape)

    def boundaries(law):
        return BoundarySpec(ZeroGradient(), FixedState(BUBBLE_POST_SHOCK),
                            Reflective(), Reflective(), to_stored=law.to_conservative)

    return CaseSpec(
        name="shock_bubble",
        description="Mach 1.22 shock passing a light bubble",
        law_kind="euler",
        x_range=(0.0, 6.5),
        y_range=(0.0, 1.78),
        cells=(2600, 712),
        t_end=3.25,
        initial=initial,
        boundaries=boundaries,
    )


DMR_SHOCKED = (8.0, 8.25 * math.cos(math.pi / 6.0), -8.25 * math.sin(math.pi / 6.0), 116.5)
DMR_AMBIENT = (1.4, 0.0, 0.0, 1.0)
DMR_WALL_START = 1.0 / 6.0


def dmr_shock_position(y, t):
    """x-position of the incident Mach 10 shock at height y and time t."""
    return DMR_WALL_START + (y + 20.0 * t) / math.sqrt(3.0)


def _dmr_top(x, t):
    behind = x < dmr_shock_position(1.0, t)
    return np.where(behind[np.newaxis], np.asarray(DMR_SHOCKED)[:, np.newaxis],
                    np.asarray(DMR_AMBIENT)[:, np.newaxis])


def double_mach() -> CaseSpec:
    def initial(x, y):
        return _select([x < dmr_shock_position(y, 0.0)], [DMR_SHOCKED, DMR_AMBIENT], x.shape)

    def boundaries(law):
        bottom = SplitCondition(DMR_WALL_START, FixedState(DMR_SHOCKED), Reflective())
        return BoundarySpec(FixedState(DMR_SHOCKED), ZeroGradient(), bottom,
                            TimeDependent(_dmr_top), to_stored=law.to_conservative)

    return CaseSpec(
        name="double_mach",
        description="Mach 10 shock reflecting off a 30 degree wedge",
        law_kind="euler",
        x_range=(0.0, 4.0),
        y_range=(0.0, 1.0),
        cells=(1024, 256),
        t_end=0.2,
        initial=initial,
        boundaries=boundaries,
    )


def viscous_shock_tube() -> CaseSpec:
    raise UnsupportedCaseError("viscous_shock_tube needs viscous fluxes, which are not available")


CASES: Dict[str, Tuple[Callable[..., CaseSpec], str]] = {
    "advection_complex": (advection_complex, "Complex wave profiles, linear advection"),
    "gaussian_advect": (gaussian_advect, "Gaussian pulse accuracy test"),
    "henrick_critical": (henrick_critical, "Accuracy at critical points"),
    "titarev_toro": (titarev_toro, "Shock / high-frequency entropy wave (case=1|2)"),
    "sod": (sod, "Sod shock tube"),
    "lax": (lax, "Lax shock tube"),
    "le_blanc": (le_blanc, "Le Blanc extreme shock tube"),
    "shu_osher": (shu_osher, "Shu-Osher shock / sine wave"),
    "blast_waves": (blast_waves, "Interacting blast waves"),
    "explosion_2d": (explosion_2d, "Cylindrical explosion"),
    "euler2d_smooth": (euler2d_smooth, "Smooth 2D Euler accuracy test"),
    "riemann2d_config3": (riemann2d_config3, "2D Riemann problem, four shocks"),
    "shock_entropy_2d": (shock_entropy_2d, "2D shock / entropy wave"),
    "richtmyer_meshkov": (richtmyer_meshkov, "Richtmyer-Meshkov instability"),
    "rayleigh_taylor": (rayleigh_taylor, "Rayleigh-Taylor instability"),
    "shock_bubble": (shock_bubble, "Shock / light bubble interaction"),
    "double_mach": (double_mach, "Double Mach reflection"),
    "riemann2d_appendixB": (riemann2d_appendixB, "2D Riemann problem with slip lines"),
    "viscous_shock_tube": (viscous_shock_tube, "Viscous shock tube (not available)"),
}


def list_cases() -> Dict[str, str]:
    """Stable case names with one-line descriptions."""
    return {name: description for name, (_, description) in CASES.items()}


def instantiate_case(name: str, t_end: Optional[float] = None,
                     cells: Optional[Tuple[int, ...]] = None, **knobs) -> CaseSpec:
    """
    Build a case by name.

    Raises:
        CaseLookupError: Unknown name
        UnsupportedCaseError: Listed case that cannot be run
        ConfigurationError: Unknown or invalid knob
    """
    try:
        factory, _ = CASES[name]
    except KeyError:
        raise CaseLookupError(f"Unknown case: {name}. Known cases: {', '.join(CASES)}") from None
    if t_end is not None and "t_end" in inspect.signature(factory).parameters:
        knobs["t_end"] = t_end
        t_end = None
    try:
        spec = factory(**knobs)
    except TypeError as exc:
        raise ConfigurationError(f"Invalid settings for case {name}: {exc}") from exc
    return spec.with_overrides(t_end=t_end, cells=cells)
