"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

Vector3 = list[float]

MODES = ("kappa-theta", "kappa-tau", "oracle", "closed-form", "compare")


class ProfileSpec(BaseModel):
    """One scalar-of-arc-length input; parameters depend on the kind."""

    kind: Literal["constant", "linear", "gaussian", "tabulated"]
    value: Optional[float] = None
    slope: Optional[float] = None
    intercept: Optional[float] = None
    amplitude: Optional[float] = None
    samples: Optional[list[tuple[float, float]]] = None
    domain: Optional[tuple[float, float]] = None

    @model_validator(mode="after")
    def _required_params(self):
        needed = {"constant": ("value",), "linear": ("slope", "intercept"),
                  "gaussian": ("amplitude",), "tabulated": ("samples",)}[self.kind]
        for name in needed:
            if getattr(self, name) is None:
                raise ValueError(f"profile kind {self.kind!r} requires {name!r}")
        return self

    def to_dict(self) -> dict:
        return self.model_dump(exclude_none=True)


class GridSpec(BaseModel):
    s0: float
    s_end: float
    h: float = Field(gt=0.0)

    @model_validator(mode="after")
    def _ordered(self):
        if not self.s_end > self.s0:
            raise ValueError(f"grid needs s_end > s0, got [{self.s0}, {self.s_end}]")
        return self


class CaseParams(BaseModel):
    """Parameters of a closed-form case; constant_theta carries a full profile."""

    kappa0: Optional[float] = None
    theta0: Optional[float] = None
    kappa: Optional[ProfileSpec] = None


class RunConfig(BaseModel):
    """One run request; exactly the fields required by the mode must be present."""

    mode: Literal["kappa-theta", "kappa-tau", "oracle", "closed-form", "compare"]
    kappa: Optional[ProfileSpec] = None
    theta: Optional[ProfileSpec] = None
    tau: Optional[ProfileSpec] = None
    t0: Optional[Vector3] = Field(default=None, min_length=3, max_length=3)
    n0: Optional[Vector3] = Field(default=None, min_length=3, max_length=3)
    r0: Vector3 = Field(default=[0.0, 0.0, 0.0], min_length=3, max_length=3)
    grid: Optional[GridSpec] = None
    case: Optional[Literal["constant_theta", "gaussian_kappa",
                           "constant_kappa_linear_theta",
                           "constant_kappa_theta"]] = None
    case_params: Optional[CaseParams] = None
    a: Optional[str] = None  # compare mode: trace paths, resolved by the CLI
    b: Optional[str] = None
    out: Optional[str] = None  # output path hint, used by the CLI only
    format: Optional[Literal["csv", "json"]] = None

    @model_validator(mode="after")
    def _mode_fields(self):
        required = {
            "kappa-theta": ("kappa", "theta", "t0", "grid"),
            "kappa-tau": ("kappa", "tau", "t0", "n0", "grid"),
            "oracle": ("kappa", "tau", "t0", "n0", "grid"),
            "closed-form": ("case", "case_params", "grid"),
            "compare": ("a", "b"),
        }[self.mode]
        forbidden = {
            "kappa-theta": ("tau", "n0", "case", "case_params", "a", "b"),
            "kappa-tau": ("theta", "case", "case_params", "a", "b"),
            "oracle": ("theta", "case", "case_params", "a", "b"),
            "closed-form": ("kappa", "theta", "tau", "t0", "n0", "a", "b"),
            "compare": ("kappa", "theta", "tau", "t0", "n0", "grid",
                        "case", "case_params"),
        }[self.mode]
        for name in required:
            if getattr(self, name) is None:
                raise ValueError(f"mode {self.mode!r} requires field {name!r}")
        for name in forbidden:
            if getattr(self, name) is not None:
                raise ValueError(f"mode {self.mode!r} does not accept field {name!r}")
        return self


class CompareRequest(BaseModel):
    """Two trace CSV documents to compare sample by sample."""

    a_csv: str
    b_csv: str


class ReportGrid(BaseModel):
    s0: float
    s_end: float
    h: float


class CompareReport(BaseModel):
    max_position_dev: float
    max_tangent_dev: float
    max_torsion_dev: float
    mean_position_dev: float
    mean_tangent_dev: float
    mean_torsion_dev: float
    max_chart_angle_dev: Optional[float]
    samples: int
    grid: ReportGrid


class HealthResponse(BaseModel):
    status: str
    version: str
