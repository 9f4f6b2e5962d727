"""Domain types and report models shared by every module."""

from __future__ import annotations

import math
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    PositiveFloat,
    field_serializer,
    field_validator,
    model_validator,
)
from typing_extensions import Annotated

Verdict = Literal["pass", "fail"]


def parse_complex(value: Any) -> complex:
    """Accept complex, real, ``[re, im]`` or ``a+bi`` text."""
    if isinstance(value, bool):
        raise ValueError("booleans are not complex numbers")
    if isinstance(value, (complex, int, float, np.number)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, str):
        text = value.strip().replace(" ", "").replace("i", "j")
        try:
            return complex(text)
        except ValueError:
            raise ValueError(f"cannot parse complex number '{value}'")
    raise ValueError(f"cannot parse complex number from {value!r}")


def format_complex(value: complex) -> List[float]:
    return [value.real, value.imag]


ComplexValue = Annotated[
    complex,
    BeforeValidator(parse_complex),
    PlainSerializer(format_complex, return_type=list, when_used="json"),
]


class ComplexPoint2(BaseModel):
    """A point (z, w) of C^2."""

    model_config = ConfigDict(frozen=True)

    z: ComplexValue = Field(..., description="First coordinate.")
    w: ComplexValue = Field(..., description="Second coordinate.")

    @field_validator("z", "w")
    @classmethod
    def _finite(cls, value: complex) -> complex:
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ValueError("coordinates must be finite")
        return value

    @classmethod
    def from_array(cls, vector: Any) -> "ComplexPoint2":
        return cls(z=complex(vector[0]), w=complex(vector[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.z, self.w], dtype=complex)

    def norm(self) -> float:
        return math.sqrt(abs(self.z) ** 2 + abs(self.w) ** 2)

    def inner(self, other: "ComplexPoint2") -> complex:
        """Hermitian product <self|other>."""
        return self.z * other.z.conjugate() + self.w * other.w.conjugate()

    def describe(self) -> str:
        return f"({_short(self.z)},{_short(self.w)})"


def _short(value: complex) -> str:
    return f"{value.real:.6g}{value.imag:+.6g}i"


class LineFamily(BaseModel):
    """A pencil of complex lines: through a point, or parallel."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["through", "parallel"] = Field(
        ..., description="Pencil kind."
    )
    point: Optional[ComplexPoint2] = Field(
        None, description="Common point of a 'through' pencil."
    )
    direction: Optional[ComplexPoint2] = Field(
        None, description="Common direction of a 'parallel' pencil."
    )

    @model_validator(mode="after")
    def _check_kind(self) -> "LineFamily":
        if self.kind == "through" and self.point is None:
            raise ValueError("a 'through' pencil needs a point")
        if self.kind == "parallel":
            if self.direction is None or self.direction.norm() == 0.0:
                raise ValueError("a 'parallel' pencil needs a direction")
        return self

    @classmethod
    def through(cls, z: complex, w: complex) -> "LineFamily":
        return cls(kind="through", point=ComplexPoint2(z=z, w=w))

    @classmethod
    def parallel(cls, z: complex, w: complex) -> "LineFamily":
        return cls(kind="parallel", direction=ComplexPoint2(z=z, w=w))

    def describe(self) -> str:
        anchor = self.point if self.kind == "through" else self.direction
        assert anchor is not None
        return f"{self.kind}:{anchor.describe()}"


class ComplexLine(BaseModel):
    """The complex line {base + zeta * direction}."""

    model_config = ConfigDict(frozen=True)

    base: ComplexPoint2
    direction: ComplexPoint2
    tag: Optional[LineFamily] = Field(
        None, description="Pencil the line was drawn from."
    )

    @field_validator("direction")
    @classmethod
    def _nonzero(cls, value: ComplexPoint2) -> ComplexPoint2:
        if value.norm() == 0.0:
            raise ValueError("direction must be nonzero")
        return value

    @classmethod
    def through(
        cls,
        a: ComplexPoint2,
        b: ComplexPoint2,
        tag: Optional[LineFamily] = None,
    ) -> "ComplexLine":
        direction = ComplexPoint2.from_array(b.as_array() - a.as_array())
        return cls(base=a, direction=direction, tag=tag)

    def point_at(self, zeta: complex) -> ComplexPoint2:
        return ComplexPoint2.from_array(
            self.base.as_array() + zeta * self.direction.as_array()
        )

    def distance_to(self, point: ComplexPoint2) -> float:
        d = self.direction.as_array()
        offset = point.as_array() - self.base.as_array()
        along = np.vdot(d, offset) / np.vdot(d, d)
        return float(np.linalg.norm(offset - along * d))

    def describe(self) -> str:
        return (
            f"line base={self.base.describe()}"
            f" direction={self.direction.describe()}"
        )


class Circle(BaseModel):
    model_config = ConfigDict(frozen=True)

    center: ComplexValue
    radius: PositiveFloat

    def nodes(self, order: int) -> np.ndarray:
        """Uniform nodes center + radius * exp(2 pi i k / order)."""
        theta = 2.0 * np.pi * np.arange(order) / order
        return self.center + self.radius * np.exp(1j * theta)

    def describe(self) -> str:
        return f"circle center={_short(self.center)} radius={self.radius:.6g}"


class LineSphereCircle(BaseModel):
    """zeta -> (p + zeta q, r + zeta s), |zeta| = 1, traces L meet bB."""

    model_config = ConfigDict(frozen=True)

    p: ComplexValue
    q: ComplexValue
    r: ComplexValue
    s: ComplexValue
    offset: ComplexValue = Field(
        ..., description="Line parameter of the disc center."
    )
    scale: ComplexValue = Field(
        ..., description="Line parameter = offset + scale * zeta."
    )
    radius: float = Field(
        ..., description="Radius of the disc L meet B in C^2."
    )

    def points(self, order: int) -> Tuple[np.ndarray, np.ndarray]:
        zeta = np.exp(2j * np.pi * np.arange(order) / order)
        return self.p + zeta * self.q, self.r + zeta * self.s

    def projection(self) -> Optional[Circle]:
        """The circle pi_1(L meet bB), or None if it is a point."""
        if abs(self.q) == 0.0:
            return None
        return Circle(center=self.p, radius=abs(self.q))


class BallAutomorphism(BaseModel):
    """The involution exchanging 0 and a."""

    model_config = ConfigDict(frozen=True)

    a: ComplexPoint2

    @field_validator("a")
    @classmethod
    def _inside(cls, value: ComplexPoint2) -> ComplexPoint2:
        if value.norm() >= 1.0:
            raise ValueError("the automorphism point must lie in the ball")
        return value

    @property
    def s_a(self) -> float:
        return math.sqrt(1.0 - self.a.norm() ** 2)


class TransformStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["ball_automorphism", "unitary"]
    label: str = ""
    automorphism: Optional[BallAutomorphism] = None
    matrix: Optional[List[List[ComplexValue]]] = None

    @model_validator(mode="after")
    def _check_payload(self) -> "TransformStep":
        if self.kind == "ball_automorphism" and self.automorphism is None:
            raise ValueError("missing automorphism")
        if self.kind == "unitary":
            if self.matrix is None or np.shape(self.matrix) != (2, 2):
                raise ValueError("a unitary step needs a 2x2 matrix")
        return self


class NormalizingTransform(BaseModel):
    """Composition of steps, applied first to last."""

    model_config = ConfigDict(frozen=True)

    steps: List[TransformStep] = Field(default_factory=list)


PairCase = Literal["A1", "A2", "B1", "B2", "tangent-excluded"]
CanonicalConfiguration = Literal[
    "origin-and-point",
    "two-boundary-points",
    "parallel-and-point",
    "origin-and-parallel",
    "two-parallel",
    "none",
]


class PairClassification(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: PairCase
    configuration: CanonicalConfiguration
    transform: Optional[NormalizingTransform] = None
    swapped: bool = Field(
        False,
        description="True when the first canonical pencil comes from b.",
    )
    t: Optional[float] = None
    alpha: Optional[ComplexValue] = None
    beta: Optional[ComplexValue] = None
    directions: Optional[List[ComplexPoint2]] = None
    image_a: Optional[ComplexPoint2] = Field(
        None, description="Image of a, None when sent to infinity."
    )
    image_b: Optional[ComplexPoint2] = Field(
        None, description="Image of b, None when sent to infinity."
    )

    def pencils(self) -> List[LineFamily]:
        """The two canonical pencils of the normalized configuration."""
        from .geometry import canonical_pencils

        return canonical_pencils(
            self.configuration,
            t=self.t,
            alpha=self.alpha,
            beta=self.beta,
            directions=self.directions,
        )


FamilyKind = Literal[
    "through-two-boundary-points",
    "concentric-plus-through-1",
    "concentric-plus-moebius",
    "moebius-pair",
]


class FamilySpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    params: Dict[str, ComplexValue] = Field(default_factory=dict)
    density: int = Field(64, description="Circles per sub-family.")


class Provenance(BaseModel):
    model_config = ConfigDict(frozen=True)

    subfamily: str
    parameter: float


class FamilySample(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: FamilySpec
    circles: List[Circle]
    provenance: List[Provenance]


class Semiquadric(BaseModel):
    """{(z, w): (z - a)(w - conj a) = r^2, 0 < |z - a| < r}."""

    model_config = ConfigDict(frozen=True)

    a: ComplexValue
    r: PositiveFloat

    def circle(self) -> Circle:
        return Circle(center=self.a, radius=self.r)


class ExtendedComplex(BaseModel):
    """A complex number or the point at infinity."""

    model_config = ConfigDict(frozen=True)

    value: Optional[ComplexValue] = None

    @classmethod
    def infinity(cls) -> "ExtendedComplex":
        return cls(value=None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None


class SeparationProfile(BaseModel):
    """Fiber values y(T) of S_T over a real point x."""

    model_config = ConfigDict(frozen=True)

    x: float
    t: float
    T0: float

    @property
    def sigma(self) -> float:
        return self.t + 1.0 / self.t

    def y_of_T(self, T: Any) -> Any:
        T = np.asarray(T, dtype=float)
        with np.errstate(divide="ignore"):
            y = T + (1.0 - self.sigma * T + T * T) / (self.x - T)
        return y if y.ndim else float(y)

    def dy_dT(self, T: Any) -> Any:
        T = np.asarray(T, dtype=float)
        numerator = self.x * self.x - self.sigma * self.x + 1.0
        with np.errstate(divide="ignore"):
            slope = numerator / (self.x - T) ** 2
        return slope if slope.ndim else float(slope)


class SeparationCounterexample(BaseModel):
    x: float
    family: Literal["T_R", "S_T"]
    parameter: float
    y: float
    violation: float


class SeparationReport(BaseModel):
    subject: str = "separation"
    t: float
    eta: float
    eta_bound: float
    eta_admissible: bool
    grid: List[int]
    max_violation: float
    violations: int
    min_positivity: float = Field(
        ..., description="Minimum of x^2 - (t + 1/t) x + 1 over the grid."
    )
    verdict: Verdict
    counterexamples: List[SeparationCounterexample] = Field(
        default_factory=list
    )


class FiberDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    z: ComplexValue
    t: float
    eta: float
    real_axis: bool = Field(
        False, description="Real base point: the fiber is the real axis."
    )
    segment: Optional[Tuple[ComplexValue, ComplexValue]] = None
    circle: Optional[Circle] = None
    arc_endpoints: Optional[Tuple[ComplexValue, ComplexValue]] = None
    arc_parameter_end: Optional[float] = Field(
        None, description="T(z), where the arc reaches conj(z)."
    )

    def w_of_T(self, T: Any) -> Any:
        T = np.asarray(T, dtype=float)
        rho2 = (T - self.t) * (T - 1.0 / self.t)
        return T + rho2 / (self.z - T)

    def arc_points(self, count: int) -> np.ndarray:
        """Points w(T), T uniform on [0, T(z)], from 1/z to conj(z)."""
        if self.real_axis or self.arc_parameter_end is None:
            raise ValueError("the real fiber has no arc")
        return self.w_of_T(np.linspace(0.0, self.arc_parameter_end, count))

    def segment_points(self, count: int) -> np.ndarray:
        """Points R^2 / z, |z| <= R <= 1."""
        if self.real_axis:
            raise ValueError("the real fiber has no segment")
        radii = np.linspace(abs(self.z), 1.0, count)
        return radii**2 / self.z


class ExtensionReport(BaseModel):
    subject: str
    residual: float = Field(..., ge=0.0)
    tolerance: float
    order: int
    verdict: Verdict
    label: str = ""
    skipped: int = Field(0, description="Near-tangent or missing lines.")
    details: List[Dict[str, Any]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> "ExtensionReport":
        expected = "pass" if self.residual <= self.tolerance else "fail"
        if self.verdict != expected:
            raise ValueError("verdict must be pass iff residual <= tol")
        return self


class DiscAnalyticityReport(BaseModel):
    subject: str
    radii: List[float]
    order: int
    negative_residuals: List[float]
    consistency: List[Dict[str, Any]] = Field(
        default_factory=list,
        description="Rows {m, a_m}: fitted a_m(R) per radius.",
    )
    consistency_defect: float
    tolerance: float
    consistency_tolerance: float
    verdict: Verdict
    details: List[Dict[str, Any]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> "DiscAnalyticityReport":
        ok = (
            max(self.negative_residuals) <= self.tolerance
            and self.consistency_defect <= self.consistency_tolerance
        )
        if (self.verdict == "pass") != ok:
            raise ValueError("verdict disagrees with residuals")
        return self


class BallVerdictReport(BaseModel):
    subject: str
    n_range: Tuple[int, int]
    radii: List[float]
    angles: int
    order: int
    tolerance: float
    consistency_tolerance: float
    verdict: Verdict
    offending_n: Optional[int] = None
    offending_location: Optional[ComplexValue] = None
    offending_reason: Optional[str] = None
    details: List[Dict[str, Any]] = Field(default_factory=list)


class SliceCoefficients(BaseModel):
    """c_n on a polar grid; values[n - n_lo, radius, angle]."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n_lo: int
    n_hi: int
    radii: List[float]
    angles: int
    order: int
    values: np.ndarray

    @model_validator(mode="after")
    def _order_covers_range(self) -> "SliceCoefficients":
        needed = 2 * max(abs(self.n_lo), abs(self.n_hi)) + 8
        if self.order < needed:
            raise ValueError(f"quadrature order must be at least {needed}")
        return self

    @field_serializer("values")
    def _serialize_values(self, values: np.ndarray) -> List[Any]:
        return np.stack([values.real, values.imag], axis=-1).tolist()

    def grid_points(self) -> np.ndarray:
        theta = 2.0 * np.pi * np.arange(self.angles) / self.angles
        return np.asarray(self.radii)[:, None] * np.exp(1j * theta)[None, :]

    def of(self, n: int) -> np.ndarray:
        if not self.n_lo <= n <= self.n_hi:
            raise KeyError(n)
        return self.values[n - self.n_lo]


class SliceReport(BaseModel):
    subject: str
    n: int
    z: ComplexValue
    order: int
    value: ComplexValue


class ProbeReport(BaseModel):
    subject: str
    n: int
    radii: List[float]
    order: int
    phi_nodes: int
    differences: List[float]
    monotone: bool
    final_difference: float
    verdict: Verdict


class FamilyExpectation(BaseModel):
    family: LineFamily
    verdict: Verdict


class ExpectedBehavior(BaseModel):
    families: List[FamilyExpectation] = Field(default_factory=list)
    ball: Verdict
    real_analytic: bool
    notes: str = ""


class GalleryEntry(BaseModel):
    name: str
    id_format: str
    description: str
    parameters: Dict[str, str] = Field(
        default_factory=dict, description="Parameter name -> type."
    )
    kind: Literal["boundary", "disc"] = "boundary"


class GalleryListing(BaseModel):
    subject: str = "gallery"
    entries: List[GalleryEntry]


class SemiquadricIntersectionReport(BaseModel):
    subject: str
    first: Semiquadric
    second: Semiquadric
    surrounds: bool
    point: Optional[ComplexPoint2] = None


class FiberReport(BaseModel):
    subject: str
    fiber: FiberDecomposition
    details: List[Dict[str, Any]] = Field(
        default_factory=list,
        description="Sampled fiber points {piece, parameter, re, im}.",
    )
