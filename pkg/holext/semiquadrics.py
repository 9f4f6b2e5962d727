"""Semiquadrics, their intersections and the fibers of the glued manifold.

A semiquadric is the punctured graph w = conj(a) + r^2 / (z - a) over the
disc |z - a| < r. Two semiquadrics meet in at most one point, which is
found by eliminating w.
"""

import logging
from typing import List, Optional, Tuple, Union

import numpy as np

from .circle_families import surrounds
from .configuration import ROOT_TOLERANCE
from .errors import (
    DegenerateIntersectionError,
    DomainError,
    InvalidInputError,
    PreconditionError,
)
from .models import (
    Circle,
    ComplexPoint2,
    ExtendedComplex,
    FiberDecomposition,
    Semiquadric,
    SemiquadricIntersectionReport,
    SeparationCounterexample,
    SeparationProfile,
    SeparationReport,
)

LOGGER = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 20
VIOLATION_SLACK = 1e-12


def semiquadric_graph(S: Semiquadric, z: complex) -> ExtendedComplex:
    """The fiber value over z; infinity at the puncture z = a."""
    distance = abs(z - S.a)
    if distance >= S.r:
        raise DomainError(
            f"z = {z} is outside the disc |z - {S.a}| < {S.r}"
        )
    if distance == 0.0:
        return ExtendedComplex.infinity()
    return ExtendedComplex(value=S.a.conjugate() + S.r**2 / (z - S.a))


def _constraint(z: complex, S: Semiquadric) -> str:
    distance = abs(z - S.a)
    if distance > S.r + ROOT_TOLERANCE:
        return "outside"
    if ROOT_TOLERANCE < distance < S.r - ROOT_TOLERANCE:
        return "inside"
    return "grazing"


def semiquadrics_intersect(
    S1: Semiquadric, S2: Semiquadric
) -> Optional[ComplexPoint2]:
    """
    The common point of two semiquadrics, if there is one.

    Parameters:
        S1 (Semiquadric): First semiquadric.
        S2 (Semiquadric): Second semiquadric, with different parameters.

    Returns:
        ComplexPoint2: The intersection point, or None.
    """
    if S1.a == S2.a and S1.r == S2.r:
        raise InvalidInputError("the semiquadrics are identical")
    k = S1.a.conjugate() - S2.a.conjugate()
    if k == 0:
        return None

    r1, r2 = S1.r**2, S2.r**2
    coefficients = [
        k,
        -k * (S1.a + S2.a) + r1 - r2,
        k * S1.a * S2.a - r1 * S2.a + r2 * S1.a,
    ]
    found: List[complex] = []
    for root in np.roots(coefficients):
        states = {_constraint(root, S1), _constraint(root, S2)}
        if "outside" in states:
            continue
        if states == {"grazing"}:
            # crossing point of the two circles, on the diagonal
            continue
        if "grazing" in states:
            raise DegenerateIntersectionError(
                f"root {root} lies on a constraint boundary"
            )
        found.append(complex(root))
    if not found:
        return None
    if len(found) > 1:
        raise DegenerateIntersectionError("two admissible roots")
    z = found[0]
    graph = semiquadric_graph(S1, z)
    assert graph.value is not None
    return ComplexPoint2(z=z, w=graph.value)


def intersection_report(
    S1: Semiquadric, S2: Semiquadric
) -> SemiquadricIntersectionReport:
    nested = surrounds(S1.circle(), S2.circle()) or surrounds(
        S2.circle(), S1.circle()
    )
    return SemiquadricIntersectionReport(
        subject=f"semiquadrics ({S1.a}, {S1.r}) and ({S2.a}, {S2.r})",
        first=S1,
        second=S2,
        surrounds=nested,
        point=semiquadrics_intersect(S1, S2),
    )


def eta_bound(t: float) -> float:
    return 1.0 / (2.0 * (t + 1.0 / t))


def _check_t(t: float) -> None:
    if not 0.0 < t < 1.0:
        raise PreconditionError(f"t must be in (0, 1), got {t}")


def separation_profile(
    x: float, t: float, eta: Optional[float] = None
) -> SeparationProfile:
    """
    The fiber profile y(T) of the family S_T over the real point x.

    Parameters:
        x (float): The base point, in (0, eta).
        t (float): The family parameter, in (0, 1).
        eta (float): Upper bound for x; defaults to 1 / (2 (t + 1/t)).

    Returns:
        SeparationProfile: T0 together with y(T) and dy/dT.
    """
    _check_t(t)
    bound = eta_bound(t)
    if eta is None:
        eta = bound
    elif eta >= bound:
        raise PreconditionError(f"eta must be below {bound}, got {eta}")
    if not 0.0 < x < eta:
        raise PreconditionError(f"x must be in (0, {eta}), got {x}")
    sigma = t + 1.0 / t
    T0 = (1.0 - x * x) / (sigma - 2.0 * x)
    return SeparationProfile(x=x, t=t, T0=T0)


def _grid_sizes(grid: Union[int, Tuple[int, int, int]]) -> List[int]:
    sizes = [grid] * 3 if isinstance(grid, int) else list(grid)
    if len(sizes) != 3 or min(sizes) < 1:
        raise PreconditionError(f"grid must be three positive sizes: {grid}")
    return sizes


def prop71_separation_check(
    t: float, eta: float, grid: Union[int, Tuple[int, int, int]] = 50
) -> SeparationReport:
    """
    Scan the real fibers of T_R and S_T over x in (0, eta).

    Over the T_R fibers the values must satisfy x < y < 1/x, over the S_T
    fibers y < x or y > 1/x. A positive violation breaks one of these.
    """
    _check_t(t)
    if eta <= 0.0:
        raise PreconditionError(f"eta must be positive, got {eta}")
    nx, nR, nT = _grid_sizes(grid)
    x = eta * np.arange(1, nx + 1) / (nx + 1)
    R = np.arange(1, nR + 1) / (nR + 1)
    T = t * np.arange(1, nT + 1) / (nT + 1)
    sigma = t + 1.0 / t

    rows = []

    # T_R: y = R^2 / x exists only for R > x
    xs, Rs = np.meshgrid(x, R, indexing="ij")
    mask = xs < Rs
    y = Rs**2 / xs
    violation = np.maximum(xs - y, y - 1.0 / xs)
    rows.append(("T_R", xs[mask], Rs[mask], y[mask], violation[mask]))

    # S_T: y = T + rho^2 / (x - T) when x sits in the disc of S_T
    xs, Ts = np.meshgrid(x, T, indexing="ij")
    rho2 = (Ts - t) * (Ts - 1.0 / t)
    gap = np.abs(xs - Ts)
    mask = (gap < np.sqrt(rho2)) & (gap > 1e-14)
    with np.errstate(divide="ignore", invalid="ignore"):
        y = Ts + rho2 / (xs - Ts)
    violation = np.minimum(y - xs, 1.0 / xs - y)
    rows.append(("S_T", xs[mask], Ts[mask], y[mask], violation[mask]))

    counterexamples: List[SeparationCounterexample] = []
    max_violation = -np.inf
    count = 0
    for family, xv, pv, yv, vv in rows:
        if vv.size == 0:
            continue
        max_violation = max(max_violation, float(vv.max()))
        bad = np.flatnonzero(vv > VIOLATION_SLACK)
        count += bad.size
        for i in bad[np.argsort(-vv[bad], kind="stable")]:
            counterexamples.append(
                SeparationCounterexample(
                    x=float(xv[i]),
                    family=family,  # type: ignore[arg-type]
                    parameter=float(pv[i]),
                    y=float(yv[i]),
                    violation=float(vv[i]),
                )
            )
    counterexamples.sort(key=lambda c: -c.violation)
    bound = eta_bound(t)
    LOGGER.debug("prop71 t=%s eta=%s: %d violations", t, eta, count)
    return SeparationReport(
        t=t,
        eta=eta,
        eta_bound=bound,
        eta_admissible=eta < bound,
        grid=[nx, nR, nT],
        max_violation=float(max_violation),
        violations=count,
        min_positivity=float(np.min(x * x - sigma * x + 1.0)),
        verdict="pass" if count == 0 else "fail",
        counterexamples=counterexamples[:MAX_COUNTEREXAMPLES],
    )


def circumcircle(p1: complex, p2: complex, p3: complex) -> Circle:
    """The circle through three points."""
    a, b = p2 - p1, p3 - p1
    d = 2.0 * (a.conjugate() * b).imag
    if abs(d) < 1e-15:
        raise DomainError("the three points are collinear")
    center = p1 - 1j * (abs(a) ** 2 * b - abs(b) ** 2 * a) / d
    return Circle(center=center, radius=abs(center - p1))


def fiber_M(z: complex, t: float, eta: float) -> FiberDecomposition:
    """
    The fiber M_z of the glued manifold over a base point z.

    Parameters:
        z (complex): A point of the disc off the slits (-1, 0] and
            [eta, 1).
        t (float): The family parameter, in (0, 1).
        eta (float): The slit start.

    Returns:
        FiberDecomposition: The segment from conj(z) to 1/z and the arc
        of C_z between the same points, or the real-axis flag.
    """
    _check_t(t)
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"z = {z} is outside the unit disc")
    if z.imag == 0.0:
        if z.real <= 0.0 or z.real >= eta:
            raise DomainError(f"z = {z} lies on a slit")
        return FiberDecomposition(z=z, t=t, eta=eta, real_axis=True)

    sigma = t + 1.0 / t
    end = (1.0 - abs(z) ** 2) / (sigma - 2.0 * z.real)
    return FiberDecomposition(
        z=z,
        t=t,
        eta=eta,
        segment=(z.conjugate(), 1.0 / z),
        circle=circumcircle(t, 1.0 / t, z.conjugate()),
        arc_endpoints=(z.conjugate(), 1.0 / z),
        arc_parameter_end=end,
    )
