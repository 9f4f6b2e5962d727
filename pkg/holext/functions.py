from typing import Any, List, Optional, Tuple, Union

import numpy as np

from .configuration import (
    DEFAULT_CONSISTENCY_TOLERANCE,
    DEFAULT_DENSITY,
    DEFAULT_DISC_ORDER,
    DEFAULT_N_RANGE,
    DEFAULT_ORDER,
    DEFAULT_RADII,
    DEFAULT_TOLERANCE,
    Configuration,
)
from .errors import InvalidInputError, InvalidSpecError
from .extension_tests import (
    ball_extension_verdict,
    circle_extension_test,
    circle_family_test,
    disc_analyticity_test,
    family_extension_test,
    line_extension_test,
    pencil_pair_test,
)
from .gallery import disc_function, gallery_listing, resolve_function
from .geometry import normalize_pair as classify_pair
from .models import (
    BallVerdictReport,
    Circle,
    ComplexLine,
    ComplexPoint2,
    DiscAnalyticityReport,
    ExtensionReport,
    FamilySpec,
    FiberReport,
    GalleryListing,
    LineFamily,
    PairClassification,
    ProbeReport,
    Semiquadric,
    SemiquadricIntersectionReport,
    SeparationReport,
    SliceReport,
)
from .semiquadrics import fiber_M, intersection_report
from .semiquadrics import prop71_separation_check
from .slicing import boundary_limit_probe, slice_coefficient


def _setting(
    configuration: Configuration, key: str, value: Any, default: Any
) -> Any:
    if value is not None:
        return value
    configured = configuration.get(key)
    return default if configured is None else configured


def _disc(text: str, fn: Optional[str], order: int):
    f = resolve_function(fn) if fn else None
    return disc_function(text, f, max(order, DEFAULT_ORDER))


def test_circle(
    configuration: Configuration,
    disc: str,
    fn: Optional[str] = None,
    center: complex = 0,
    radius: float = 1.0,
    order: Optional[int] = None,
    tol: Optional[float] = None,
) -> ExtensionReport:
    """
    Test a disc function on one circle.

    Parameters:
        disc (str): Disc function id.
        fn (str, optional): Boundary function, needed by ``cn``.
        center (complex): Circle center.
        radius (float): Circle radius.
        order (int, optional): Nodes on the circle.
        tol (float, optional): Residual tolerance.

    Returns:
        ExtensionReport: The circle verdict.
    """
    order = _setting(configuration, "order", order, DEFAULT_ORDER)
    tol = _setting(configuration, "tolerance", tol, DEFAULT_TOLERANCE)
    phi = _disc(disc, fn, order)
    circle = Circle(center=center, radius=radius)
    report = circle_extension_test(
        phi(circle.nodes(order)),
        circle=circle,
        tol=tol,
        subject=f"{circle.describe()} [{phi.name}]",
    )
    return report


def test_line(
    configuration: Configuration,
    fn: str,
    base: ComplexPoint2,
    direction: ComplexPoint2,
    order: Optional[int] = None,
    tol: Optional[float] = None,
) -> ExtensionReport:
    """
    Test a boundary function along one complex line.

    Parameters:
        fn (str): Boundary function source.
        base (ComplexPoint2): A point of the line.
        direction (ComplexPoint2): The line direction.
        order (int, optional): Nodes on the circle L meet bB.
        tol (float, optional): Residual tolerance.

    Returns:
        ExtensionReport: The line verdict.
    """
    f = resolve_function(fn)
    line = ComplexLine(base=base, direction=direction)
    report = line_extension_test(
        f,
        line,
        _setting(configuration, "order", order, DEFAULT_ORDER),
        _setting(configuration, "tolerance", tol, DEFAULT_TOLERANCE),
    )
    report.details[0].update(f.metadata())
    return report


def test_family(
    configuration: Configuration,
    fn: str,
    family: Optional[LineFamily] = None,
    pair: Optional[List[ComplexPoint2]] = None,
    density: Optional[int] = None,
    order: Optional[int] = None,
    tol: Optional[float] = None,
    threads: Optional[int] = None,
) -> ExtensionReport:
    """
    Test a boundary function along a pencil, or the two pencils through
    a pair of points.

    Parameters:
        fn (str): Boundary function source.
        family (LineFamily, optional): The pencil.
        pair (list, optional): Two points; their pencils are tested.
        density (int, optional): Pencil sampling density.
        order (int, optional): Nodes per line.
        tol (float, optional): Residual tolerance.
        threads (int, optional): Worker threads.

    Returns:
        ExtensionReport: Aggregated verdict with one row per line (or per
        pencil for a pair).
    """
    if (family is None) == (pair is None):
        raise InvalidInputError("give exactly one of family and pair")
    f = resolve_function(fn)
    density = _setting(configuration, "density", density, DEFAULT_DENSITY)
    order = _setting(configuration, "order", order, DEFAULT_ORDER)
    tol = _setting(configuration, "tolerance", tol, DEFAULT_TOLERANCE)
    threads = _setting(configuration, "threads", threads, None)
    if family is not None:
        return family_extension_test(
            f, family, density, order, tol, threads
        )
    assert pair is not None
    if len(pair) != 2 or pair[0] == pair[1]:
        raise InvalidInputError("pair needs two distinct points")
    pencils = [
        LineFamily(kind="through", point=point) for point in pair
    ]
    return pencil_pair_test(f, pencils, density, order, tol, threads)


def _family_spec(
    kind: str,
    alpha: Optional[complex],
    beta: Optional[complex],
    t: Optional[float],
    density: int,
) -> FamilySpec:
    params = {}
    for key, value in (("alpha", alpha), ("beta", beta), ("t", t)):
        if value is not None:
            params[key] = value
    try:
        return FamilySpec(kind=kind, params=params, density=density)
    except ValueError as error:
        raise InvalidSpecError(str(error))


def test_circle_family(
    configuration: Configuration,
    disc: str,
    kind: str,
    fn: Optional[str] = None,
    alpha: Optional[complex] = None,
    beta: Optional[complex] = None,
    t: Optional[float] = None,
    density: Optional[int] = None,
    order: int = DEFAULT_DISC_ORDER,
    tol: Optional[float] = None,
) -> ExtensionReport:
    """Run the circle test over every circle of a circle family."""
    density = _setting(configuration, "density", density, DEFAULT_DENSITY)
    spec = _family_spec(kind, alpha, beta, t, density)
    return circle_family_test(
        _disc(disc, fn, order),
        spec,
        density,
        order,
        _setting(configuration, "tolerance", tol, DEFAULT_TOLERANCE),
    )


def disc_analyticity(
    configuration: Configuration,
    disc: str,
    fn: Optional[str] = None,
    radii: Optional[List[float]] = None,
    order: int = DEFAULT_DISC_ORDER,
    tol: Optional[float] = None,
    consistency_tol: Optional[float] = None,
) -> DiscAnalyticityReport:
    """Concentric-circle and radial-consistency test of a disc function."""
    return disc_analyticity_test(
        _disc(disc, fn, order),
        DEFAULT_RADII if radii is None else radii,
        order,
        _setting(configuration, "tolerance", tol, DEFAULT_TOLERANCE),
        _setting(
            configuration,
            "consistency_tolerance",
            consistency_tol,
            DEFAULT_CONSISTENCY_TOLERANCE,
        ),
    )


def ball_verdict(
    configuration: Configuration,
    fn: str,
    nrange: Tuple[int, int] = DEFAULT_N_RANGE,
    radii: Optional[List[float]] = None,
    angles: int = DEFAULT_DISC_ORDER,
    order: Optional[int] = None,
    tol: Optional[float] = None,
    consistency_tol: Optional[float] = None,
) -> BallVerdictReport:
    """
    Decide holomorphic extension through the ball.

    Parameters:
        fn (str): Boundary function source.
        nrange (tuple): Slice indices, covering at least -4..8.
        radii (list, optional): Radii of the z-grid.
        angles (int): Angles of the z-grid.
        order (int, optional): Slice quadrature order.
        tol (float, optional): Residual tolerance.
        consistency_tol (float, optional): Radial-consistency tolerance.

    Returns:
        BallVerdictReport: The verdict, with the first offending n.
    """
    f = resolve_function(fn)
    report = ball_extension_verdict(
        f,
        nrange,
        DEFAULT_RADII if radii is None else radii,
        angles,
        _setting(configuration, "order", order, DEFAULT_ORDER),
        _setting(configuration, "tolerance", tol, DEFAULT_TOLERANCE),
        _setting(
            configuration,
            "consistency_tolerance",
            consistency_tol,
            DEFAULT_CONSISTENCY_TOLERANCE,
        ),
    )
    return report


def slice_at(
    configuration: Configuration,
    fn: str,
    n: int,
    z: complex,
    order: Optional[int] = None,
) -> SliceReport:
    f = resolve_function(fn)
    order = _setting(configuration, "order", order, DEFAULT_ORDER)
    return SliceReport(
        subject=f"c_{n}[{f.name}]",
        n=n,
        z=z,
        order=order,
        value=slice_coefficient(f, n, z, order),
    )


def boundary_probe(
    configuration: Configuration,
    fn: str,
    n: int = 0,
    radii: Optional[List[float]] = None,
    order: Optional[int] = None,
    phi_nodes: int = 64,
    limit_tol: float = 1e-3,
) -> ProbeReport:
    """Convergence of c_n toward the unit circle."""
    if radii is None:
        radii = [2.0**-k for k in range(1, 11)]
    return boundary_limit_probe(
        resolve_function(fn),
        n,
        radii,
        _setting(configuration, "order", order, DEFAULT_ORDER),
        phi_nodes,
        limit_tol,
    )


def normalize_pair(
    configuration: Configuration, a: ComplexPoint2, b: ComplexPoint2
) -> PairClassification:
    """Classify a point pair and normalize it to a canonical one."""
    return classify_pair(a, b)


def prop71(
    configuration: Configuration,
    t: float,
    eta: float,
    grid: Union[int, Tuple[int, int, int]] = 50,
) -> SeparationReport:
    return prop71_separation_check(t, eta, grid)


def fiber(
    configuration: Configuration,
    z: complex,
    t: float,
    eta: float,
    samples: int = 16,
) -> FiberReport:
    """
    The fiber of the glued manifold over z, with sampled points.

    Parameters:
        z (complex): Base point.
        t (float): Family parameter.
        eta (float): Start of the right slit.
        samples (int): Points sampled on the arc and on the segment.

    Returns:
        FiberReport: The decomposition and its sampled points.
    """
    decomposition = fiber_M(z, t, eta)
    details = []
    if not decomposition.real_axis:
        assert decomposition.arc_parameter_end is not None
        T = np.linspace(0.0, decomposition.arc_parameter_end, samples)
        for parameter, w in zip(T, decomposition.arc_points(samples)):
            details.append(
                {
                    "piece": "arc",
                    "parameter": float(parameter),
                    "re": float(w.real),
                    "im": float(w.imag),
                }
            )
        R = np.linspace(abs(decomposition.z), 1.0, samples)
        for parameter, w in zip(R, decomposition.segment_points(samples)):
            details.append(
                {
                    "piece": "segment",
                    "parameter": float(parameter),
                    "re": float(w.real),
                    "im": float(w.imag),
                }
            )
    return FiberReport(
        subject=f"fiber over {z} (t={t}, eta={eta})",
        fiber=decomposition,
        details=details,
    )


def semiquadric_intersect(
    configuration: Configuration,
    a1: complex,
    r1: float,
    a2: complex,
    r2: float,
) -> SemiquadricIntersectionReport:
    return intersection_report(
        Semiquadric(a=a1, r=r1), Semiquadric(a=a2, r=r2)
    )


def gallery_list(configuration: Configuration) -> GalleryListing:
    return gallery_listing()
