"""Circle families in the closed unit disc."""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from .errors import InvalidSpecError
from .models import Circle, FamilySample, FamilySpec, Provenance

LOGGER = logging.getLogger(__name__)

CONTAINMENT_SLACK = 1e-12
UNIT_CIRCLE_SLACK = 1e-12


def moebius_circle(alpha: complex, r: float) -> Circle:
    """Image of |z| = r under z -> (alpha - z) / (1 - conj(alpha) z)."""
    a2 = abs(alpha) ** 2
    denominator = 1.0 - a2 * r * r
    return Circle(
        center=alpha * (1.0 - r * r) / denominator,
        radius=r * (1.0 - a2) / denominator,
    )


def concentric_radius(t: float, T: float) -> float:
    """Radius R of the concentric circle mapped onto the (C3) circle at T."""
    return math.sqrt((t - T) / (t * (1.0 - T * t)))


def circle_membership(circle: Circle, point: complex) -> float:
    """Signed distance: negative inside, zero on the circle."""
    return abs(point - circle.center) - circle.radius


def surrounds(outer: Circle, inner: Circle) -> bool:
    """True when the closed disc of ``inner`` lies in the open disc of
    ``outer``."""
    return circle_membership(outer, inner.center) + inner.radius < 0.0


def _real_param(spec: FamilySpec, name: str) -> float:
    value = _param(spec, name)
    if value.imag != 0.0:
        raise InvalidSpecError(f"'{name}' must be real for {spec.kind}")
    return value.real


def _param(spec: FamilySpec, name: str) -> complex:
    if name not in spec.params:
        raise InvalidSpecError(f"{spec.kind} needs the parameter '{name}'")
    return spec.params[name]


def _distinct_pair(spec: FamilySpec) -> Tuple[complex, complex]:
    alpha, beta = _param(spec, "alpha"), _param(spec, "beta")
    if abs(alpha - beta) < 1e-14:
        raise InvalidSpecError("alpha and beta must differ")
    return alpha, beta


def _through_boundary_point(
    alpha: complex, density: int, name: str
) -> List[Tuple[Circle, Provenance]]:
    # a circle in the closed disc through alpha touches bD there
    rows = []
    for k in range(density):
        s = k / density
        circle = Circle(center=s * alpha, radius=1.0 - s)
        rows.append((circle, Provenance(subfamily=name, parameter=s)))
    return rows


def _concentric(density: int) -> List[Tuple[Circle, Provenance]]:
    return [
        (
            Circle(center=0, radius=k / density),
            Provenance(subfamily="concentric", parameter=k / density),
        )
        for k in range(1, density + 1)
    ]


def _moebius_images(
    alpha: complex, density: int, name: str
) -> List[Tuple[Circle, Provenance]]:
    return [
        (
            moebius_circle(alpha, k / density),
            Provenance(subfamily=name, parameter=k / density),
        )
        for k in range(1, density + 1)
    ]


def _projection_family(
    t: float, density: int
) -> List[Tuple[Circle, Provenance]]:
    rows = []
    for k in range(density):
        T = t * k / density
        radius = math.sqrt((T - t) * (T - 1.0 / t))
        rows.append(
            (
                Circle(center=T, radius=radius),
                Provenance(subfamily="moebius-t", parameter=T),
            )
        )
    return rows


def enumerate_family(
    spec: FamilySpec, density: Optional[int] = None
) -> FamilySample:
    """
    Sample every sub-family of a circle family.

    Parameters:
        spec (FamilySpec): The family kind and its parameters.
        density (int): Circles per sub-family; ``spec.density`` if omitted.

    Returns:
        FamilySample: The circles in sub-family order, each with the
        parameter that produced it.
    """
    density = spec.density if density is None else density
    if density < 2:
        raise InvalidSpecError(f"density must be at least 2, got {density}")

    rows: List[Tuple[Circle, Provenance]]
    if spec.kind == "through-two-boundary-points":
        alpha, beta = _distinct_pair(spec)
        for name, value in (("alpha", alpha), ("beta", beta)):
            if abs(abs(value) - 1.0) > UNIT_CIRCLE_SLACK:
                raise InvalidSpecError(f"|{name}| must be 1")
        rows = _through_boundary_point(alpha, density, "through-alpha")
        rows += _through_boundary_point(beta, density, "through-beta")
    elif spec.kind == "concentric-plus-through-1":
        rows = _concentric(density)
        rows += _through_boundary_point(1.0, density, "through-1")
    elif spec.kind == "concentric-plus-moebius":
        t = _real_param(spec, "t")
        if not 0.0 < t < 1.0:
            raise InvalidSpecError(f"t must be in (0, 1), got {t}")
        rows = _concentric(density) + _projection_family(t, density)
    else:
        alpha, beta = _distinct_pair(spec)
        if max(abs(alpha), abs(beta)) >= 1.0:
            raise InvalidSpecError("alpha and beta must lie in the disc")
        rows = _moebius_images(alpha, density, "moebius-alpha")
        rows += _moebius_images(beta, density, "moebius-beta")

    for circle, _ in rows:
        if abs(circle.center) + circle.radius > 1.0 + CONTAINMENT_SLACK:
            raise InvalidSpecError(f"{circle.describe()} leaves the disc")
    LOGGER.debug("%s: %d circles", spec.kind, len(rows))
    return FamilySample(
        spec=spec.model_copy(update={"density": density}),
        circles=[circle for circle, _ in rows],
        provenance=[provenance for _, provenance in rows],
    )


def coverage_gap(sample: FamilySample, points: np.ndarray) -> float:
    """Largest distance from ``points`` to the nearest sampled trace."""
    centers = np.array([c.center for c in sample.circles])
    radii = np.array([c.radius for c in sample.circles])
    distance = np.abs(
        np.abs(points.reshape(-1, 1) - centers[None, :]) - radii[None, :]
    )
    return float(distance.min(axis=1).max())
