"""Scheme configuration shared by the semi-discretization and the harness."""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from ..bvd import BVD_VARIANTS, BvdPolicy
from ..config.settings import (
    ALPHA_DEFAULTS,
    ALPHA_FALLBACK,
    DEFAULT_CFL,
    THINC_BETA_STAGE1,
    THINC_BETA_STAGE2,
    WENOZ_SMOOTHNESS_THRESHOLD,
)
from ..utils.validators import (
    ValidationError,
    validate_cfl,
    validate_positive_float,
    validate_riemann_name,
    validate_scheme_name,
)

# Variants that stay linear and never use a characteristic frame
LINEAR_VARIANTS = ("C5", "C6", "E6")
C5_BACKENDS = ("banded", "thomas")


@dataclass(frozen=True)
class SchemeConfig:
    """
    Reconstruction variant, flux and time-step settings for one run.

    ``characteristic_projection`` left as None means: on for every nonlinear
    variant when the law has eigenvectors.
    """

    scheme: str = "HOCUS6"
    riemann: str = "HLLC"
    alpha: Optional[float] = None
    cfl: float = DEFAULT_CFL
    characteristic_projection: Optional[bool] = None
    beta_stage1: float = THINC_BETA_STAGE1
    beta_stage2: float = THINC_BETA_STAGE2
    s_threshold: float = WENOZ_SMOOTHNESS_THRESHOLD
    c5_backend: str = "banded"

    def __post_init__(self):
        object.__setattr__(self, "scheme", validate_scheme_name(self.scheme))
        object.__setattr__(self, "riemann", validate_riemann_name(self.riemann))
        object.__setattr__(self, "cfl", validate_cfl(self.cfl))
        if self.alpha is not None:
            object.__setattr__(self, "alpha", validate_positive_float(self.alpha, "alpha"))
        if self.c5_backend not in C5_BACKENDS:
            raise ValidationError(f"Unknown C5 backend: {self.c5_backend}")

    @classmethod
    def from_dict(cls, values: Dict[str, Any]) -> "SchemeConfig":
        """Build from a config-file mapping; unknown keys are rejected."""
        known = set(cls.__dataclass_fields__)
        unknown = set(values) - known
        if unknown:
            raise ValidationError(f"Unknown scheme settings: {', '.join(sorted(unknown))}")
        return cls(**values)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["alpha"] = self.mp5_alpha
        return data

    @property
    def mp5_alpha(self) -> float:
        if self.alpha is not None:
            return self.alpha
        return ALPHA_DEFAULTS.get(self.scheme, ALPHA_FALLBACK)

    @property
    def is_bvd(self) -> bool:
        return self.scheme in BVD_VARIANTS

    def uses_projection(self, has_eigenvectors: bool) -> bool:
        if not has_eigenvectors or self.scheme in LINEAR_VARIANTS:
            return False
        if self.characteristic_projection is None:
            return True
        return self.characteristic_projection

    def policy(self) -> BvdPolicy:
        return BvdPolicy(
            variant=self.scheme,
            alpha=self.alpha,
            beta_stage1=self.beta_stage1,
            beta_stage2=self.beta_stage2,
            s_threshold=self.s_threshold,
        )

    def describe(self) -> str:
        return f"{self.scheme}/{self.riemann} alpha={self.mp5_alpha:g} cfl={self.cfl:g}"
