from typing import Any, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, BeforeValidator, Field, PositiveFloat
from typing_extensions import Annotated

from .configuration import (
    DEFAULT_CONSISTENCY_TOLERANCE,
    DEFAULT_DENSITY,
    DEFAULT_DISC_ORDER,
    DEFAULT_N_RANGE,
    DEFAULT_ORDER,
    DEFAULT_RADII,
    DEFAULT_TOLERANCE,
)
from .models import (
    ComplexPoint2,
    ComplexValue,
    FamilyKind,
    LineFamily,
    parse_complex,
)


def _split(value: str, separator: str = ",") -> List[str]:
    text = value.strip().strip("()[]")
    return [part.strip() for part in text.split(separator) if part.strip()]


def parse_point(value: Any) -> Any:
    """``z,w`` text to a point."""
    if not isinstance(value, str):
        return value
    parts = _split(value)
    if len(parts) != 2:
        raise ValueError(f"expected 'z,w', got '{value}'")
    return ComplexPoint2(z=parse_complex(parts[0]), w=parse_complex(parts[1]))


def parse_family(value: Any) -> Any:
    """``through:z,w`` or ``parallel:z,w`` to a pencil."""
    if not isinstance(value, str):
        return value
    kind, _, rest = value.partition(":")
    if kind not in ("through", "parallel"):
        raise ValueError(
            f"family must be through:<z>,<w> or parallel:<z>,<w>, got"
            f" '{value}'"
        )
    point = parse_point(rest)
    if kind == "through":
        return LineFamily(kind="through", point=point)
    return LineFamily(kind="parallel", direction=point)


def parse_pair(value: Any) -> Any:
    """``z,w;z,w`` to two points."""
    if not isinstance(value, str):
        return value
    parts = _split(value, ";")
    if len(parts) != 2:
        raise ValueError(f"expected 'z,w;z,w', got '{value}'")
    return [parse_point(part) for part in parts]


def parse_floats(value: Any) -> Any:
    if isinstance(value, str):
        return [float(part) for part in _split(value)]
    return value


def parse_range(value: Any) -> Any:
    """``lo..hi`` to an integer pair."""
    if not isinstance(value, str):
        return value
    lo, sep, hi = value.partition("..")
    if not sep:
        raise ValueError(f"expected 'lo..hi', got '{value}'")
    return (int(lo), int(hi))


def parse_grid(value: Any) -> Any:
    if isinstance(value, str):
        sizes = [int(part) for part in _split(value)]
        return sizes[0] if len(sizes) == 1 else tuple(sizes)
    return value


Point = Annotated[ComplexPoint2, BeforeValidator(parse_point)]
Family = Annotated[LineFamily, BeforeValidator(parse_family)]
PointPair = Annotated[List[Point], BeforeValidator(parse_pair)]
FloatList = Annotated[List[float], BeforeValidator(parse_floats)]
IntRange = Annotated[Tuple[int, int], BeforeValidator(parse_range)]
GridSizes = Annotated[
    Union[int, Tuple[int, int, int]], BeforeValidator(parse_grid)
]

OutputFormat = Literal["json", "csv"]
Expectation = Literal["pass", "fail"]


class Output(BaseModel):
    """Arguments shared by every command."""

    out: Optional[str] = Field(
        None,
        description="Report path. The report goes to stdout if omitted.",
    )
    format: OutputFormat = Field(
        "json",
        description="Report format, json or csv.",
    )
    expect: Optional[Expectation] = Field(
        None,
        description=(
            "Expected verdict. The exit status is 0 when the verdict"
            " matches and 1 otherwise."
        ),
    )


class Quadrature(BaseModel):
    order: int = Field(
        DEFAULT_ORDER,
        gt=0,
        description="Number of uniform quadrature nodes.",
    )
    tol: PositiveFloat = Field(
        DEFAULT_TOLERANCE,
        description="Largest admissible negative Fourier coefficient.",
    )


class TestCircle(Quadrature, Output):
    """Schema for the ``test_circle`` operation."""

    disc: str = Field(
        ...,
        description="Disc function id, e.g. zpow:m=2 or cn:n=0.",
    )
    fn: Optional[str] = Field(
        None,
        description="Boundary function for cn: gallery:<id> or grid:<path>.",
    )
    center: ComplexValue = Field(0, description="Circle center.")
    radius: PositiveFloat = Field(1.0, description="Circle radius.")


class TestLine(Quadrature, Output):
    """Schema for the ``test_line`` operation."""

    fn: str = Field(
        ...,
        description="Boundary function: gallery:<id> or grid:<path>.",
    )
    base: Point = Field(..., description="A point of the line, as z,w.")
    direction: Point = Field(
        ..., description="Direction of the line, as z,w."
    )


class TestFamily(Quadrature, Output):
    """Schema for the ``test_family`` operation."""

    fn: str = Field(
        ...,
        description="Boundary function: gallery:<id> or grid:<path>.",
    )
    family: Optional[Family] = Field(
        None,
        description="Pencil: through:<z>,<w> or parallel:<z>,<w>.",
    )
    pair: Optional[PointPair] = Field(
        None,
        description=(
            "Two points z,w;z,w. Tests the pencils through both points."
        ),
    )
    density: int = Field(
        DEFAULT_DENSITY,
        ge=2,
        description="Sampling density of each pencil.",
    )
    threads: Optional[int] = Field(
        None,
        gt=0,
        description="Worker threads; HOLEXT_THREADS if omitted.",
    )


class TestCircleFamily(Quadrature, Output):
    """Schema for the ``test_circle_family`` operation."""

    disc: str = Field(..., description="Disc function id.")
    fn: Optional[str] = Field(
        None, description="Boundary function for cn."
    )
    kind: FamilyKind = Field(..., description="Circle family kind.")
    alpha: Optional[ComplexValue] = Field(
        None, description="First family parameter."
    )
    beta: Optional[ComplexValue] = Field(
        None, description="Second family parameter."
    )
    t: Optional[float] = Field(
        None, description="Real parameter of concentric-plus-moebius."
    )
    density: int = Field(
        DEFAULT_DENSITY, ge=2, description="Circles per sub-family."
    )
    order: int = Field(
        DEFAULT_DISC_ORDER, gt=0, description="Nodes per circle."
    )


class DiscAnalyticity(Quadrature, Output):
    """Schema for the ``disc_analyticity`` operation."""

    disc: str = Field(..., description="Disc function id.")
    fn: Optional[str] = Field(
        None, description="Boundary function for cn."
    )
    radii: FloatList = Field(
        list(DEFAULT_RADII),
        description="At least three distinct radii in (0, 1].",
    )
    order: int = Field(
        DEFAULT_DISC_ORDER, gt=0, description="Nodes per circle."
    )
    consistency_tol: PositiveFloat = Field(
        DEFAULT_CONSISTENCY_TOLERANCE,
        description="Largest admissible radial-consistency defect.",
    )


class BallVerdict(Quadrature, Output):
    """Schema for the ``ball_verdict`` operation."""

    fn: str = Field(
        ...,
        description="Boundary function: gallery:<id> or grid:<path>.",
    )
    nrange: IntRange = Field(
        DEFAULT_N_RANGE,
        description="Slice indices lo..hi, covering at least -4..8.",
    )
    radii: FloatList = Field(
        list(DEFAULT_RADII),
        description="Radii of the z-grid, in (0, 1).",
    )
    angles: int = Field(
        DEFAULT_DISC_ORDER,
        gt=0,
        description="Angles of the z-grid.",
    )
    consistency_tol: PositiveFloat = Field(
        DEFAULT_CONSISTENCY_TOLERANCE,
        description="Largest admissible radial-consistency defect.",
    )


class Slice(Output):
    """Schema for the ``slice`` operation."""

    fn: str = Field(
        ...,
        description="Boundary function: gallery:<id> or grid:<path>.",
    )
    n: int = Field(..., description="Slice index.")
    z: ComplexValue = Field(..., description="Base point, |z| < 1.")
    order: int = Field(
        DEFAULT_ORDER, gt=0, description="Quadrature order."
    )


class BoundaryProbe(Output):
    """Schema for the ``boundary_probe`` operation."""

    fn: str = Field(
        ...,
        description="Boundary function: gallery:<id> or grid:<path>.",
    )
    n: int = Field(0, description="Slice index.")
    radii: FloatList = Field(
        [2.0 ** -k for k in range(1, 11)],
        description="Strictly decreasing radii R; c_n is taken at |z|^2 ="
        " 1 - R^2.",
    )
    order: int = Field(
        DEFAULT_ORDER, gt=0, description="Quadrature order."
    )
    phi_nodes: int = Field(64, gt=0, description="Angular nodes.")
    limit_tol: PositiveFloat = Field(
        1e-3, description="Bound for the final sup-difference."
    )


class NormalizePair(Output):
    """Schema for the ``normalize_pair`` operation."""

    a: Point = Field(..., description="First point, as z,w.")
    b: Point = Field(..., description="Second point, as z,w.")


class Prop71(Output):
    """Schema for the ``prop71`` operation."""

    t: float = Field(..., description="Family parameter in (0, 1).")
    eta: float = Field(..., description="Upper end of the x-range.")
    grid: GridSizes = Field(
        50, description="Grid sizes n or nx,nR,nT."
    )


class Fiber(Output):
    """Schema for the ``fiber`` operation."""

    z: ComplexValue = Field(..., description="Base point in the disc.")
    t: float = Field(..., description="Family parameter in (0, 1).")
    eta: float = Field(..., description="Start of the right slit.")
    samples: int = Field(
        16, ge=2, description="Sampled points on the arc and segment."
    )


class SemiquadricIntersect(Output):
    """Schema for the ``semiquadric_intersect`` operation."""

    a1: ComplexValue = Field(..., description="Center of the first.")
    r1: PositiveFloat = Field(..., description="Radius of the first.")
    a2: ComplexValue = Field(..., description="Center of the second.")
    r2: PositiveFloat = Field(..., description="Radius of the second.")


class GalleryList(Output):
    """Schema for the ``gallery_list`` operation."""
