from typing import Literal, Optional, Tuple
from typing_extensions import TypedDict

from . import env

# Define Command type
Command = Literal[
    "test-circle",
    "test-line",
    "test-family",
    "test-circle-family",
    "disc-analyticity",
    "ball-verdict",
    "slice",
    "boundary-probe",
    "normalize-pair",
    "prop71",
    "fiber",
    "semiquadric-intersect",
    "gallery-list",
]


DEFAULT_ORDER = 256
DEFAULT_TOLERANCE = 1e-8
DEFAULT_CONSISTENCY_TOLERANCE = 1e-6
DEFAULT_DENSITY = 64
DEFAULT_DISC_ORDER = 64
DEFAULT_RADII: Tuple[float, ...] = (0.3, 0.5, 0.7, 0.9)
DEFAULT_N_RANGE: Tuple[int, int] = (-4, 8)

SPHERE_TOLERANCE = 1e-9
TANGENCY_THRESHOLD = 1e-10
NEAR_TANGENT_THRESHOLD = 1e-6
AMPLIFICATION_FLOOR = 1e-12
RADIAL_NOISE_FLOOR = 1e-6
ROOT_TOLERANCE = 1e-10

THREADS_VARIABLE = "HOLEXT_THREADS"


# Define Configuration type
class Configuration(TypedDict, total=False):
    order: Optional[int]
    tolerance: Optional[float]
    consistency_tolerance: Optional[float]
    density: Optional[int]
    threads: Optional[int]


def thread_count() -> int:
    """Worker count for concurrent sweeps, from ``HOLEXT_THREADS``."""
    raw = env.get_or(THREADS_VARIABLE, "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"'{THREADS_VARIABLE}' must be an integer, got '{raw}'"
        )
    return max(1, value)


def resolve_configuration(
    overrides: Optional[Configuration] = None,
) -> Configuration:
    """Merge per-run overrides over the package defaults."""
    resolved = Configuration(
        order=DEFAULT_ORDER,
        tolerance=DEFAULT_TOLERANCE,
        consistency_tolerance=DEFAULT_CONSISTENCY_TOLERANCE,
        density=DEFAULT_DENSITY,
        threads=thread_count(),
    )
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if value <= 0:
            raise ValueError(f"'{key}' must be positive, got {value}")
        resolved[key] = value  # type: ignore[literal-required]
    return resolved
