"""Complex lines, ball automorphisms and the normalization of point pairs.

Points of C^2 are ``ComplexPoint2`` values; array routines take the last
axis as the (z, w) pair so whole boundary samples move in one call.
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from .configuration import TANGENCY_THRESHOLD
from .errors import (
    DomainError,
    InvalidInputError,
    NoIntersectionError,
    SingularInputError,
    TangencyError,
)
from .models import (
    BallAutomorphism,
    CanonicalConfiguration,
    Circle,
    ComplexLine,
    ComplexPoint2,
    LineFamily,
    LineSphereCircle,
    NormalizingTransform,
    PairClassification,
    TransformStep,
)

LOGGER = logging.getLogger(__name__)

# Below this |1 - <x|a>| a point is on the polar hyperplane of a.
SINGULAR_THRESHOLD = 1e-13
POLAR_THRESHOLD = 1e-12
BOUNDARY_THRESHOLD = 1e-10

SWAP = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def disc_moebius(alpha: complex, zeta: complex) -> complex:
    """
    The disc involution exchanging 0 and alpha.

    Parameters:
        alpha (complex): A point of the open unit disc.
        zeta (complex): The argument.

    Returns:
        complex: (alpha - zeta) / (1 - conj(alpha) zeta).
    """
    if abs(alpha) >= 1.0:
        raise DomainError(f"|alpha| must be < 1, got {abs(alpha)}")
    denominator = 1.0 - alpha.conjugate() * zeta
    if abs(denominator) < SINGULAR_THRESHOLD:
        raise DomainError("zeta is the pole 1/conj(alpha)")
    return (alpha - zeta) / denominator


def _automorphism_parts(a: np.ndarray, x: np.ndarray):
    """Numerator a - P_a x - s_a Q_a x and denominator 1 - <x|a>."""
    a_norm2 = float(np.real(np.vdot(a, a)))
    s_a = math.sqrt(1.0 - a_norm2)
    inner = x @ a.conj()
    if a_norm2 == 0.0:
        projected = np.zeros_like(x)
    else:
        projected = np.asarray(inner / a_norm2)[..., None] * a
    numerator = a - projected - s_a * (x - projected)
    return numerator, 1.0 - inner


def ball_auto_array(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Vectorized phi_a over the last axis of ``x``."""
    numerator, denominator = _automorphism_parts(a, x)
    if np.any(np.abs(denominator) < SINGULAR_THRESHOLD):
        raise SingularInputError("<x|a> = 1 for some sample")
    return numerator / denominator[..., None]


def ball_auto_apply(
    auto: BallAutomorphism, x: ComplexPoint2
) -> ComplexPoint2:
    """
    Apply the ball automorphism phi_a to a point.

    Parameters:
        auto (BallAutomorphism): The automorphism.
        x (ComplexPoint2): A point with <x|a> != 1.

    Returns:
        ComplexPoint2: phi_a(x).
    """
    numerator, denominator = _automorphism_parts(
        auto.a.as_array(), x.as_array()
    )
    if abs(denominator) < SINGULAR_THRESHOLD:
        raise SingularInputError(
            f"{x.describe()} lies on the polar hyperplane <x|a> = 1"
        )
    return ComplexPoint2.from_array(numerator / denominator)


def line_sphere_circle(line: ComplexLine) -> LineSphereCircle:
    """
    Parameterize L meet bB as zeta -> (p + zeta q, r + zeta s), |zeta| = 1.

    The line parameter of the circle is offset + scale * zeta. The phase
    of zeta is fixed by making q real and positive (s when q = 0).
    """
    b = line.base.as_array()
    d = line.direction.as_array()
    d_norm2 = float(np.real(np.vdot(d, d)))
    offset = -np.vdot(d, b) / d_norm2
    center = b + offset * d
    center_norm = float(np.linalg.norm(center))
    if center_norm > 1.0 + TANGENCY_THRESHOLD:
        raise NoIntersectionError(
            f"{line.describe()} misses the closed ball"
            f" (distance {center_norm:.6g})"
        )
    radius = math.sqrt(max(1.0 - center_norm**2, 0.0))
    if radius / math.sqrt(d_norm2) < TANGENCY_THRESHOLD:
        raise TangencyError(f"{line.describe()} is tangent to the sphere")
    anchor = d[0] if abs(d[0]) > 0.0 else d[1]
    scale = (radius / math.sqrt(d_norm2)) * anchor.conjugate() / abs(anchor)
    return LineSphereCircle(
        p=complex(center[0]),
        q=complex(scale * d[0]),
        r=complex(center[1]),
        s=complex(scale * d[1]),
        offset=complex(offset),
        scale=complex(scale),
        radius=radius,
    )


def projection_circle(t: float, R: float) -> Circle:
    """
    The projection pi_1(L meet bB) for a line L through (t, 0).

    ``R`` is the radius of the concentric circle whose Moebius image this
    is. For t > 1 the circles are those of the reciprocal point 1/t.
    """
    if t <= 0.0:
        raise DomainError(f"t must be positive, got {t}")
    if t == 1.0:
        raise DomainError(
            "t = 1 has no projection circles; use the"
            " concentric-plus-through-1 family"
        )
    if not 0.0 < R <= 1.0:
        raise DomainError(f"R must be in (0, 1], got {R}")
    tt = 1.0 / t if t > 1.0 else t
    denominator = 1.0 - tt * tt * R * R
    center = tt * (1.0 - R * R) / denominator
    radius = R * (1.0 - tt * tt) / denominator
    return Circle(center=center, radius=radius)


def unitary_to_axis(vector: np.ndarray) -> np.ndarray:
    """A unitary sending ``vector`` to (|vector|, 0)."""
    e1 = vector / np.linalg.norm(vector)
    e2 = np.array([-e1[1].conjugate(), e1[0].conjugate()])
    return np.array([e1.conj(), e2.conj()])


def _unitary_step(matrix: np.ndarray, label: str) -> List[TransformStep]:
    if np.allclose(matrix, np.eye(2), rtol=0.0, atol=1e-15):
        return []
    rows = [[complex(v) for v in row] for row in matrix]
    return [TransformStep(kind="unitary", label=label, matrix=rows)]


def _automorphism_step(a: np.ndarray, label: str) -> List[TransformStep]:
    if np.linalg.norm(a) == 0.0:
        return []
    auto = BallAutomorphism(a=ComplexPoint2.from_array(a))
    step = TransformStep(
        kind="ball_automorphism", label=label, automorphism=auto
    )
    return [step]


def apply_step(
    step: TransformStep, x: Optional[ComplexPoint2]
) -> Optional[ComplexPoint2]:
    """Image of a point under one step; None is the point at infinity."""
    if step.kind == "unitary":
        if x is None:
            return None
        matrix = np.array(step.matrix, dtype=complex)
        return ComplexPoint2.from_array(matrix @ x.as_array())
    assert step.automorphism is not None
    if x is None:
        raise SingularInputError("a point at infinity has no finite image")
    try:
        return ball_auto_apply(step.automorphism, x)
    except SingularInputError:
        return None


def apply_transform(
    transform: NormalizingTransform, x: ComplexPoint2
) -> Optional[ComplexPoint2]:
    """Image of a point; None when it is sent to infinity."""
    image: Optional[ComplexPoint2] = x
    for step in transform.steps:
        image = apply_step(step, image)
    return image


def transform_family(step: TransformStep, family: LineFamily) -> LineFamily:
    """Image of a pencil under one step."""
    if step.kind == "unitary":
        matrix = np.array(step.matrix, dtype=complex)
        if family.kind == "through":
            assert family.point is not None
            return LineFamily.through(*(matrix @ family.point.as_array()))
        assert family.direction is not None
        return LineFamily.parallel(*(matrix @ family.direction.as_array()))

    assert step.automorphism is not None
    a = step.automorphism.a.as_array()
    s_a = step.automorphism.s_a
    if family.kind == "through":
        assert family.point is not None
        numerator, denominator = _automorphism_parts(
            a, family.point.as_array()
        )
        if abs(denominator) < SINGULAR_THRESHOLD:
            # lines through a polar point become parallel to phi's numerator
            return LineFamily.parallel(*numerator)
        return LineFamily.through(*(numerator / denominator))

    assert family.direction is not None
    d = family.direction.as_array()
    a_norm2 = float(np.real(np.vdot(a, a)))
    along = np.vdot(a, d)
    projected = (along / a_norm2) * a if a_norm2 > 0.0 else 0.0 * d
    image = projected + s_a * (d - projected)
    if abs(along) < POLAR_THRESHOLD * np.linalg.norm(d):
        return LineFamily.parallel(*image)
    # every line of the pencil runs off to the same point at infinity
    return LineFamily.through(*(image / along))


def transform_line(
    transform: NormalizingTransform, line: ComplexLine
) -> ComplexLine:
    """Image of a complex line, its pencil tag mapped along with it."""
    for step in transform.steps:
        line = _step_line(step, line)
    return line


def _step_line(step: TransformStep, line: ComplexLine) -> ComplexLine:
    tag = transform_family(step, line.tag) if line.tag else None
    b = line.base.as_array()
    d = line.direction.as_array()
    if step.kind == "unitary":
        matrix = np.array(step.matrix, dtype=complex)
        return ComplexLine(
            base=ComplexPoint2.from_array(matrix @ b),
            direction=ComplexPoint2.from_array(matrix @ d),
            tag=tag,
        )
    assert step.automorphism is not None
    a = step.automorphism.a.as_array()
    candidates = b + np.array([0.0, 1.0, -1.0, 1.0j])[:, None] * d
    numerator, denominator = _automorphism_parts(a, candidates)
    order = np.argsort(-np.abs(denominator))[:2]
    if abs(denominator[order[1]]) < SINGULAR_THRESHOLD:
        raise SingularInputError(
            f"{line.describe()} lies in a polar hyperplane"
        )
    images = numerator[order] / denominator[order][:, None]
    direction = images[1] - images[0]
    return ComplexLine(
        base=ComplexPoint2.from_array(images[0]),
        direction=ComplexPoint2.from_array(
            direction / np.linalg.norm(direction)
        ),
        tag=tag,
    )


def canonical_pencils(
    configuration: CanonicalConfiguration,
    t: Optional[float] = None,
    alpha: Optional[complex] = None,
    beta: Optional[complex] = None,
    directions: Optional[Sequence[ComplexPoint2]] = None,
) -> List[LineFamily]:
    """The pencil pair of a canonical configuration."""
    if configuration == "origin-and-point":
        return [LineFamily.through(0, 0), LineFamily.through(_need(t), 0)]
    if configuration == "two-boundary-points":
        return [
            LineFamily.through(_need(alpha), 0),
            LineFamily.through(_need(beta), 0),
        ]
    if configuration == "parallel-and-point":
        return [LineFamily.parallel(1, 0), LineFamily.through(_need(t), 0)]
    if configuration == "origin-and-parallel":
        return [LineFamily.through(0, 0), LineFamily.parallel(1, 0)]
    if configuration == "two-parallel":
        if not directions or len(directions) != 2:
            raise InvalidInputError("two directions are required")
        return [
            LineFamily(kind="parallel", direction=direction)
            for direction in directions
        ]
    return []


def _need(value):
    if value is None:
        raise InvalidInputError("missing canonical parameter")
    return value


def _finish(
    a: ComplexPoint2,
    b: ComplexPoint2,
    steps: List[TransformStep],
    **fields,
) -> PairClassification:
    transform = NormalizingTransform(steps=steps)
    classification = PairClassification(
        transform=transform,
        image_a=apply_transform(transform, a),
        image_b=apply_transform(transform, b),
        **fields,
    )
    LOGGER.debug(
        "pair %s %s -> %s (%s, %d steps)",
        a.describe(),
        b.describe(),
        classification.case,
        classification.configuration,
        len(steps),
    )
    return classification


def normalize_pair(a: ComplexPoint2, b: ComplexPoint2) -> PairClassification:
    """
    Classify a pair of points and move it to its canonical configuration.

    Parameters:
        a (ComplexPoint2): First point.
        b (ComplexPoint2): Second point, distinct from ``a``.

    Returns:
        PairClassification: The case, the normalizing transform and the
        canonical parameters. ``swapped`` is set when the first canonical
        pencil is the image of the pencil through ``b``.
    """
    xa, xb = a.as_array(), b.as_array()
    if np.linalg.norm(xa - xb) < 1e-14:
        raise InvalidInputError("the two points must be distinct")

    if a.norm() < 1.0 or b.norm() < 1.0:
        swapped = a.norm() >= 1.0
        inside, other = (xb, xa) if swapped else (xa, xb)
        return _normalize_inside(a, b, inside, other, swapped)
    return _normalize_outside(a, b, xa, xb)


def _normalize_inside(
    a: ComplexPoint2,
    b: ComplexPoint2,
    inside: np.ndarray,
    other: np.ndarray,
    swapped: bool,
) -> PairClassification:
    steps = _automorphism_step(inside, "move the inner point to 0")
    numerator, denominator = _automorphism_parts(inside, other)
    if abs(denominator) < POLAR_THRESHOLD:
        steps += _unitary_step(
            unitary_to_axis(numerator), "turn the direction to (1, 0)"
        )
        return _finish(
            a,
            b,
            steps,
            case="A2",
            configuration="origin-and-parallel",
            swapped=swapped,
            directions=[ComplexPoint2(z=1, w=0)],
        )

    image = numerator / denominator if steps else other
    steps += _unitary_step(unitary_to_axis(image), "rotate onto (t, 0)")
    return _finish(
        a,
        b,
        steps,
        case="A1",
        configuration="origin-and-point",
        swapped=swapped,
        t=float(np.linalg.norm(image)),
    )


def _normalize_outside(
    a: ComplexPoint2, b: ComplexPoint2, xa: np.ndarray, xb: np.ndarray
) -> PairClassification:
    d = xb - xa
    d_norm2 = float(np.real(np.vdot(d, d)))
    closest = xa - (np.vdot(d, xa) / d_norm2) * d
    delta = float(np.linalg.norm(closest))
    if abs(delta - 1.0) < BOUNDARY_THRESHOLD:
        LOGGER.warning("the line through the pair is tangent to the sphere")
        return PairClassification(
            case="tangent-excluded", configuration="none"
        )

    e2 = d / math.sqrt(d_norm2)
    anchor = e2[1] if abs(e2[1]) > 0.0 else e2[0]
    e2 = e2 * anchor.conjugate() / abs(anchor)
    if delta > 0.0:
        e1 = closest / delta
    else:
        e1 = np.array([-e2[1].conjugate(), e2[0].conjugate()])
    frame = np.array([e1.conj(), e2.conj()])
    steps = _unitary_step(frame, "line to {z = delta}")
    wa = complex(frame[1] @ xa)
    wb = complex(frame[1] @ xb)

    if delta > 1.0:
        steps += _automorphism_step(
            np.array([1.0 / delta, 0.0]), "send the line to infinity"
        )
        root = math.sqrt(delta * delta - 1.0)
        return _finish(
            a,
            b,
            steps,
            case="B2",
            configuration="two-parallel",
            directions=[
                ComplexPoint2(z=1, w=wa / root),
                ComplexPoint2(z=1, w=wb / root),
            ],
        )

    steps += _automorphism_step(
        np.array([delta, 0.0]), "move the line through 0"
    )
    steps += _unitary_step(SWAP, "swap coordinates")
    # phi_(delta, 0) sends (delta, w) to (0, -w / s_delta)
    factor = -1.0 / math.sqrt(1.0 - delta * delta) if delta > 0.0 else 1.0
    alpha, beta = wa * factor, wb * factor
    if (
        abs(abs(alpha) - 1.0) < BOUNDARY_THRESHOLD
        and abs(abs(beta) - 1.0) < BOUNDARY_THRESHOLD
    ):
        return _finish(
            a,
            b,
            steps,
            case="B1",
            configuration="two-boundary-points",
            alpha=alpha,
            beta=beta,
        )

    swapped = abs(beta) > abs(alpha)
    far, near = (beta, alpha) if swapped else (alpha, beta)
    steps += _automorphism_step(
        np.array([1.0 / far.conjugate(), 0.0]), "send the far point off"
    )
    image = disc_moebius(1.0 / far.conjugate(), near)
    steps += _unitary_step(
        np.diag([abs(image) / image, 1.0]), "rotate onto (t, 0)"
    )
    return _finish(
        a,
        b,
        steps,
        case="B1",
        configuration="parallel-and-point",
        swapped=swapped,
        t=abs(image),
    )


def collinearity_defect(points: np.ndarray) -> float:
    """Smallest singular value of the differences, relative to the largest.

    Zero when the rows of ``points`` lie on one complex line.
    """
    differences = points[1:] - points[0]
    values = np.linalg.svd(differences, compute_uv=False)
    if values[0] == 0.0:
        return 0.0
    return float(values[-1] / values[0])
