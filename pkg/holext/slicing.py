"""Fourier slices of boundary functions.

A boundary function f on the unit sphere is cut along the w-phase: for a
fixed z in the disc, theta -> f(z, s e^(i theta)) with s = sqrt(1 - |z|^2)
is a periodic function whose n-th Fourier coefficient, divided by s^n, is
the slice coefficient c_n(z). Coefficients are computed with the uniform
trapezoid rule, i.e. one FFT per base point.
"""

import json
import logging
import math
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np
import pandas as pd
from scipy.interpolate import RegularGridInterpolator

from .configuration import (
    AMPLIFICATION_FLOOR,
    DEFAULT_ORDER,
    DEFAULT_TOLERANCE,
    SPHERE_TOLERANCE,
)
from .errors import (
    AmplificationError,
    DomainError,
    GridFileError,
    OffSphereError,
    PreconditionError,
)
from .geometry import ball_auto_array
from .models import (
    BallAutomorphism,
    ComplexPoint2,
    ProbeReport,
    SliceCoefficients,
)

LOGGER = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]

GRID_COLUMNS = ("x", "y", "theta", "re_f", "im_f")
NOISE_FACTOR = 64.0
EPS = np.finfo(float).eps


class BoundaryFunction:
    """
    A function on the unit sphere of C^2.

    Parameters:
        name (str): Identifier echoed into reports.
        evaluator (Callable): Vectorized (z, w) -> values.
        source (str): ``gallery``, ``grid`` or ``derived``.
        interpolation (str): How sampled values are interpolated.
        error_bound (float): Estimated interpolation error.
    """

    def __init__(
        self,
        name: str,
        evaluator: Evaluator,
        source: str = "gallery",
        interpolation: Optional[str] = None,
        error_bound: Optional[float] = None,
    ):
        self.name = name
        self._evaluator = evaluator
        self.source = source
        self.interpolation = interpolation
        self.error_bound = error_bound

    def __call__(self, z, w) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        defect = np.abs(np.abs(z) ** 2 + np.abs(w) ** 2 - 1.0)
        if defect.size and float(defect.max()) > SPHERE_TOLERANCE:
            raise OffSphereError(
                f"{self.name} evaluated {defect.max():.3g} off the sphere"
            )
        values = np.asarray(self._evaluator(z, w), dtype=complex)
        # an evaluator that ignores z or w returns a smaller array
        shape = np.broadcast_shapes(z.shape, w.shape)
        return np.array(np.broadcast_to(values, shape))

    def at(self, point: ComplexPoint2) -> complex:
        return complex(self(point.z, point.w))

    def metadata(self) -> dict:
        meta = {"function": self.name, "source": self.source}
        if self.interpolation is not None:
            meta["interpolation"] = self.interpolation
            meta["interpolation_error"] = self.error_bound
        return meta

    def __repr__(self) -> str:
        return f"BoundaryFunction({self.name!r})"


class DiscFunction:
    """A function on the closed unit disc, vectorized in z."""

    def __init__(
        self, name: str, evaluator: Callable[[np.ndarray], np.ndarray]
    ):
        self.name = name
        self._evaluator = evaluator

    def __call__(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        values = np.asarray(self._evaluator(z), dtype=complex)
        return np.array(np.broadcast_to(values, z.shape))

    def __repr__(self) -> str:
        return f"DiscFunction({self.name!r})"


def _check_order(n: int, order: int) -> None:
    needed = 2 * abs(n) + 8
    if order < needed:
        raise PreconditionError(
            f"quadrature order {order} is below {needed} for n = {n}"
        )


def _theta(order: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(order) / order


def _spectrum(f: BoundaryFunction, z: np.ndarray, s: np.ndarray, order: int):
    """FFT over the w-phase at each base point; returns (coeffs, scale)."""
    phase = np.exp(1j * _theta(order))
    samples = f(z[..., None], s[..., None] * phase)
    coefficients = np.fft.fft(samples, axis=-1) / order
    scale = np.abs(samples).max(axis=-1)
    return coefficients, scale


def _amplification(s: np.ndarray, n: int) -> np.ndarray:
    if n > 0 and float(np.min(s)) ** n < AMPLIFICATION_FLOOR:
        raise AmplificationError(
            f"(1 - |z|^2)^({n}/2) falls below {AMPLIFICATION_FLOOR:g}"
        )
    return s**n


def slice_coefficient(
    f: BoundaryFunction, n: int, z: complex, order: int = DEFAULT_ORDER
) -> complex:
    """
    The slice coefficient c_n(z).

    Parameters:
        f (BoundaryFunction): The boundary function.
        n (int): Fourier index.
        z (complex): Base point, |z| < 1.
        order (int): Trapezoid nodes, at least 2|n| + 8.

    Returns:
        complex: c_n(z).
    """
    _check_order(n, order)
    if abs(z) >= 1.0:
        raise DomainError(f"|z| must be < 1, got {abs(z)}")
    s = np.array(math.sqrt(1.0 - abs(z) ** 2))
    coefficients, _ = _spectrum(f, np.array(complex(z)), s, order)
    return complex(coefficients[n % order] / _amplification(s, n))


def slice_coefficients(
    f: BoundaryFunction,
    n_lo: int,
    n_hi: int,
    radii: Sequence[float],
    angles: int,
    order: int = DEFAULT_ORDER,
) -> SliceCoefficients:
    """c_n for every n in [n_lo, n_hi] on a polar grid, one FFT per node."""
    if n_lo > n_hi:
        raise PreconditionError(f"empty n-range {n_lo}..{n_hi}")
    _check_order(max(abs(n_lo), abs(n_hi)), order)
    r = np.asarray(radii, dtype=float)
    if r.size == 0 or r.min() < 0.0 or r.max() >= 1.0:
        raise DomainError("slice radii must lie in [0, 1)")
    phi = 2.0 * np.pi * np.arange(angles) / angles
    z = r[:, None] * np.exp(1j * phi)[None, :]
    s = np.broadcast_to(np.sqrt(1.0 - r * r)[:, None], z.shape)
    coefficients, _ = _spectrum(f, z, s, order)
    values = np.empty((n_hi - n_lo + 1,) + z.shape, dtype=complex)
    for index, n in enumerate(range(n_lo, n_hi + 1)):
        values[index] = coefficients[..., n % order] / _amplification(s, n)
    LOGGER.debug(
        "sliced %s: n=%d..%d on %d radii x %d angles, order %d",
        f.name,
        n_lo,
        n_hi,
        r.size,
        angles,
        order,
    )
    return SliceCoefficients(
        n_lo=n_lo,
        n_hi=n_hi,
        radii=[float(v) for v in r],
        angles=angles,
        order=order,
        values=values,
    )


def coefficient_function(
    f: BoundaryFunction, n: int, order: int = DEFAULT_ORDER
) -> DiscFunction:
    """c_n as a function on the open disc."""
    _check_order(n, order)

    def evaluate(z: np.ndarray) -> np.ndarray:
        if z.size and float(np.abs(z).max()) >= 1.0:
            raise DomainError("c_n is evaluated only inside the disc")
        s = np.sqrt(1.0 - np.abs(z) ** 2)
        coefficients, _ = _spectrum(f, z, s, order)
        return coefficients[..., n % order] / _amplification(s, n)

    return DiscFunction(f"c_{n}[{f.name}]", evaluate)


def averaged_function(
    f: BoundaryFunction, n: int, order: int = DEFAULT_ORDER
) -> BoundaryFunction:
    """
    Psi_n(z, w), the n-th Fourier coefficient of theta -> f(z, w e^(i theta)).

    On the sphere Psi_n(z, w) = w^n c_n(z) wherever w != 0.
    """
    _check_order(n, order)
    phase = np.exp(1j * _theta(order))

    def evaluate(z: np.ndarray, w: np.ndarray) -> np.ndarray:
        samples = f(z[..., None], w[..., None] * phase)
        return np.fft.fft(samples, axis=-1)[..., n % order] / order

    return BoundaryFunction(
        f"psi_{n}[{f.name}]",
        evaluate,
        source="derived",
        interpolation=f.interpolation,
        error_bound=f.error_bound,
    )


def pull_back(f: BoundaryFunction, auto: BallAutomorphism) -> BoundaryFunction:
    """f composed with the ball automorphism phi_a."""
    a = auto.a.as_array()

    def evaluate(z: np.ndarray, w: np.ndarray) -> np.ndarray:
        z, w = np.broadcast_arrays(z, w)
        image = ball_auto_array(a, np.stack([z, w], axis=-1))
        return f(image[..., 0], image[..., 1])

    return BoundaryFunction(
        f"{f.name}@phi[{auto.a.describe()}]",
        evaluate,
        source="derived",
        interpolation=f.interpolation,
        error_bound=f.error_bound,
    )


def boundary_limit_probe(
    f: BoundaryFunction,
    n: int,
    radii: Sequence[float],
    order: int = DEFAULT_ORDER,
    phi_nodes: int = 64,
    limit_tolerance: float = 1e-3,
) -> ProbeReport:
    """
    Watch phi -> c_n(sqrt(1 - R^2) e^(i phi)) as R decreases to 0.

    Successive sup-norm differences must decrease; differences below the
    rounding level of the quadrature count as zero.
    """
    _check_order(n, order)
    r = np.asarray(radii, dtype=float)
    if r.size < 2 or r.min() <= 0.0 or r.max() > 1.0:
        raise PreconditionError("need at least two radii in (0, 1]")
    if np.any(np.diff(r) >= 0.0):
        raise PreconditionError("radii must be strictly decreasing")
    phi = 2.0 * np.pi * np.arange(phi_nodes) / phi_nodes
    z = np.sqrt(1.0 - r * r)[:, None] * np.exp(1j * phi)[None, :]
    s = np.broadcast_to(r[:, None], z.shape)
    coefficients, scale = _spectrum(f, z, s, order)
    amplification = _amplification(s, n)
    values = coefficients[..., n % order] / amplification
    noise = NOISE_FACTOR * EPS * (scale / np.abs(amplification)).max(axis=1)

    differences = []
    for k in range(r.size - 1):
        gap = float(np.abs(values[k + 1] - values[k]).max())
        differences.append(0.0 if gap <= noise[k] + noise[k + 1] else gap)
    monotone = all(
        later <= earlier + 1e-15
        for earlier, later in zip(differences, differences[1:])
    )
    final = differences[-1]
    verdict = "pass" if monotone and final < limit_tolerance else "fail"
    LOGGER.debug("probe %s n=%d: %s", f.name, n, differences)
    return ProbeReport(
        subject=f"boundary-probe {f.name} n={n}",
        n=n,
        radii=[float(v) for v in r],
        order=order,
        phi_nodes=phi_nodes,
        differences=differences,
        monotone=monotone,
        final_difference=final,
        verdict=verdict,
    )


def _read_grid_table(path: Path) -> pd.DataFrame:
    try:
        if path.suffix.lower() == ".json":
            with open(path) as handle:
                table = pd.DataFrame(json.load(handle))
        else:
            table = pd.read_csv(path)
    except (OSError, ValueError) as error:
        raise GridFileError(f"cannot read grid file {path}: {error}")
    missing = [c for c in GRID_COLUMNS if c not in table.columns]
    if missing:
        raise GridFileError(f"{path} lacks columns {missing}")
    try:
        return table[list(GRID_COLUMNS)].astype(float)
    except ValueError as error:
        raise GridFileError(f"{path} has non-numeric entries: {error}")


def load_grid(path, tolerance: float = DEFAULT_TOLERANCE) -> BoundaryFunction:
    """
    A boundary function from samples on a (x, y) x theta product grid.

    Coefficients in theta come from an FFT at each (x, y) node and are
    interpolated bilinearly in (x, y); the value at (z, w) is the
    trigonometric sum at arg(w).
    """
    path = Path(path)
    table = _read_grid_table(path)
    if table.empty:
        raise GridFileError(f"{path} has no rows")
    if float((table.x**2 + table.y**2).max()) > 1.0 + SPHERE_TOLERANCE:
        raise GridFileError(f"{path} has nodes outside the closed disc")

    xs = np.unique(table.x.to_numpy())
    ys = np.unique(table.y.to_numpy())
    thetas = np.unique(table.theta.to_numpy())
    count = thetas.size
    if count < 4 or xs.size < 2 or ys.size < 2:
        raise GridFileError(f"{path} is too coarse for interpolation")
    if not np.allclose(thetas, _theta(count), rtol=0.0, atol=1e-9):
        raise GridFileError(f"{path}: theta must be uniform on [0, 2 pi)")

    samples = np.full((xs.size, ys.size, count), np.nan, dtype=complex)
    ix = np.searchsorted(xs, table.x.to_numpy())
    iy = np.searchsorted(ys, table.y.to_numpy())
    it = np.searchsorted(thetas, table.theta.to_numpy())
    samples[ix, iy, it] = table.re_f.to_numpy() + 1j * table.im_f.to_numpy()
    present = np.isfinite(samples)
    partial = present.any(axis=-1) & ~present.all(axis=-1)
    if partial.any():
        raise GridFileError(f"{path} has nodes with missing theta samples")

    coefficients = np.fft.fft(samples, axis=-1) / count
    stacked = np.concatenate([coefficients.real, coefficients.imag], axis=-1)
    interpolator = RegularGridInterpolator(
        (xs, ys),
        stacked,
        method="linear",
        bounds_error=False,
        fill_value=np.nan,
    )
    frequencies = np.fft.fftfreq(count, 1.0 / count)
    error = _grid_error(samples, coefficients)
    if error > tolerance:
        LOGGER.warning(
            "grid %s: interpolation error estimate %.3g exceeds %.3g",
            path,
            error,
            tolerance,
        )

    def evaluate(z: np.ndarray, w: np.ndarray) -> np.ndarray:
        z, w = np.broadcast_arrays(z, w)
        points = np.stack([z.real.ravel(), z.imag.ravel()], axis=-1)
        raw = interpolator(points)
        local = raw[:, :count] + 1j * raw[:, count:]
        theta = np.angle(w.ravel())
        values = (local * np.exp(1j * np.outer(theta, frequencies))).sum(-1)
        if np.isnan(values).any():
            raise DomainError(f"{path} does not cover the requested points")
        return values.reshape(z.shape)

    return BoundaryFunction(
        f"grid:{path}",
        evaluate,
        source="grid",
        interpolation="trigonometric in theta, bilinear in (x, y)",
        error_bound=error,
    )


def _grid_error(samples: np.ndarray, coefficients: np.ndarray) -> float:
    """Nyquist tail plus the bilinear second-difference bound."""
    count = samples.shape[-1]
    tail = np.nanmax(np.abs(coefficients[..., count // 2]))
    bound = float(tail)
    for axis in (0, 1):
        second = np.diff(samples, n=2, axis=axis)
        if np.isfinite(second).any():
            bound += float(np.nanmax(np.abs(second))) / 8.0
    return bound
