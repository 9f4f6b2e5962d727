"""Built-in boundary and disc functions with their expected verdicts.

Identifiers are stable and used on the command line:

    example11:k=3      z^(k+2) / conj(z), 0 at z = 0
    absw2              |w|^2
    km:p=1:q=-1        the product form extending along two parallel pencils
    mono:a=2:b=1       z^a w^b
    cmono:a=:b=:c=:d=  z^a w^b conj(z)^c conj(w)^d
    poly:2.0=1:1.1=1   sum of c z^a w^b, one ``a.b=c`` term per field
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .configuration import DEFAULT_ORDER, SPHERE_TOLERANCE
from .errors import InvalidSpecError, OffSphereError
from .models import (
    ComplexPoint2,
    ExpectedBehavior,
    FamilyExpectation,
    GalleryEntry,
    GalleryListing,
    LineFamily,
    parse_complex,
)
from .slicing import (
    BoundaryFunction,
    DiscFunction,
    coefficient_function,
    load_grid,
)

LOGGER = logging.getLogger(__name__)

Params = Dict[str, str]

GALLERY: List[GalleryEntry] = [
    GalleryEntry(
        name="example11",
        id_format="example11:k=<int>",
        description=(
            "z^(k+2)/conj(z), 0 at z=0. Of class C^k on the sphere; extends"
            " along every line meeting {0} x D but not through the ball."
        ),
        parameters={"k": "int >= 1"},
    ),
    GalleryEntry(
        name="absw2",
        id_format="absw2",
        description=(
            "|w|^2. Constant on the slices of lines through the origin and"
            " of lines parallel to the z-axis; not holomorphic in the ball."
        ),
    ),
    GalleryEntry(
        name="km",
        id_format="km:p=<complex>:q=<complex>",
        description=(
            "conj(z) [z(1+|p|^2) + conj(p)(w-pz)] [z(1+|q|^2) +"
            " conj(q)(w-qz)]. Extends along lines parallel to (1,p) and"
            " (1,q) but not through the ball."
        ),
        parameters={"p": "complex", "q": "complex, != p"},
    ),
    GalleryEntry(
        name="mono",
        id_format="mono:a=<int>:b=<int>",
        description="Holomorphic monomial z^a w^b.",
        parameters={"a": "int >= 0", "b": "int >= 0"},
    ),
    GalleryEntry(
        name="cmono",
        id_format="cmono:a=<int>:b=<int>:c=<int>:d=<int>",
        description=(
            "z^a w^b conj(z)^c conj(w)^d; holomorphic only when c = d = 0."
        ),
        parameters={"a": "int", "b": "int", "c": "int", "d": "int"},
    ),
    GalleryEntry(
        name="poly",
        id_format="poly:<a>.<b>=<complex>:...",
        description="Holomorphic polynomial, sum of coefficient z^a w^b.",
        parameters={"<a>.<b>": "complex coefficient"},
    ),
    GalleryEntry(
        name="zpow",
        id_format="zpow:m=<int>",
        description="z^m on the disc.",
        parameters={"m": "int >= 0"},
        kind="disc",
    ),
    GalleryEntry(
        name="conj",
        id_format="conj",
        description="conj(z) on the disc.",
        kind="disc",
    ),
    GalleryEntry(
        name="ex11disc",
        id_format="ex11disc:k=<int>",
        description="z^(k+2)/conj(z) on the disc, 0 at z=0.",
        parameters={"k": "int >= 1"},
        kind="disc",
    ),
    GalleryEntry(
        name="abs2c",
        id_format="abs2c",
        description="1 - |z|^2, the zeroth slice coefficient of |w|^2.",
        kind="disc",
    ),
    GalleryEntry(
        name="cn",
        id_format="cn:n=<int>",
        description="The slice coefficient c_n of the --fn boundary function.",
        parameters={"n": "int"},
        kind="disc",
    ),
]

_ENTRIES = {entry.name: entry for entry in GALLERY}


def parse_gallery_id(text: str) -> Tuple[str, Params]:
    """Split ``name:key=value:...`` into the name and its parameters."""
    name, *fields = text.strip().split(":")
    params: Params = {}
    for field in fields:
        key, sep, value = field.partition("=")
        if not sep or not key or not value:
            raise InvalidSpecError(f"malformed gallery parameter '{field}'")
        params[key] = value
    if name not in _ENTRIES:
        raise InvalidSpecError(f"unknown gallery entry '{name}'")
    return name, params


def _int(params: Params, key: str, minimum: Optional[int] = 0) -> int:
    if key not in params:
        raise InvalidSpecError(f"missing gallery parameter '{key}'")
    try:
        value = int(params[key])
    except ValueError:
        raise InvalidSpecError(f"'{key}' must be an integer")
    if minimum is not None and value < minimum:
        raise InvalidSpecError(f"'{key}' must be at least {minimum}")
    return value


def _complex(params: Params, key: str) -> complex:
    if key not in params:
        raise InvalidSpecError(f"missing gallery parameter '{key}'")
    try:
        return parse_complex(params[key])
    except ValueError as error:
        raise InvalidSpecError(str(error))


def _only(params: Params, *keys: str) -> None:
    extra = set(params) - set(keys)
    if extra:
        raise InvalidSpecError(f"unexpected parameters {sorted(extra)}")


def _example11(z: np.ndarray, k: int) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore"):
        values = z ** (k + 2) / np.conj(z)
    return np.where(z == 0, 0.0, values)


def _km_factor(z: np.ndarray, w: np.ndarray, p: complex) -> np.ndarray:
    return z * (1.0 + abs(p) ** 2) + p.conjugate() * (w - p * z)


def _poly_terms(params: Params) -> List[Tuple[int, int, complex]]:
    terms = []
    for key, value in params.items():
        a, sep, b = key.partition(".")
        try:
            degrees = int(a), int(b)
        except ValueError:
            raise InvalidSpecError(f"poly term '{key}' must read <a>.<b>")
        if not sep or min(degrees) < 0:
            raise InvalidSpecError(f"poly term '{key}' must read <a>.<b>")
        terms.append((degrees[0], degrees[1], _complex(params, key)))
    if not terms:
        raise InvalidSpecError("poly needs at least one term")
    return terms


def _evaluator(
    name: str, params: Params
) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    if name == "example11":
        _only(params, "k")
        k = _int(params, "k", 1)
        return lambda z, w: _example11(z, k)
    if name == "absw2":
        _only(params)
        return lambda z, w: np.abs(w) ** 2
    if name == "km":
        _only(params, "p", "q")
        p, q = _complex(params, "p"), _complex(params, "q")
        if p == q:
            raise InvalidSpecError("km needs p != q")
        return lambda z, w: (
            np.conj(z) * _km_factor(z, w, p) * _km_factor(z, w, q)
        )
    if name == "mono":
        _only(params, "a", "b")
        a, b = _int(params, "a"), _int(params, "b")
        return lambda z, w: z**a * w**b
    if name == "cmono":
        _only(params, "a", "b", "c", "d")
        a, b, c, d = (_int(params, key) for key in "abcd")
        return lambda z, w: z**a * w**b * np.conj(z) ** c * np.conj(w) ** d
    if name == "poly":
        terms = _poly_terms(params)
        return lambda z, w: sum(
            coefficient * z**a * w**b for a, b, coefficient in terms
        )
    raise InvalidSpecError(f"'{name}' is not a boundary function")


def gallery_function(name: str, params: Params) -> BoundaryFunction:
    """The gallery entry as an evaluatable boundary function."""
    evaluator = _evaluator(name, params)
    label = ":".join([name] + [f"{k}={v}" for k, v in params.items()])
    return BoundaryFunction(label, evaluator, source="gallery")


def km_line_form(p: complex, q: complex, c: complex, zeta):
    """The km entry on the line {(zeta, c + zeta p)}, polynomial in zeta."""
    return (1.0 - abs(c) ** 2 - zeta * p * np.conj(c)) * (
        zeta * (1.0 + abs(q) ** 2) + np.conj(q) * (c + zeta * p - zeta * q)
    )


def gallery_eval(name: str, params: Params, point: ComplexPoint2) -> complex:
    """
    Evaluate a gallery entry at a point of the sphere.

    Parameters:
        name (str): Entry name, e.g. ``example11``.
        params (dict): Entry parameters as strings, e.g. ``{"k": "3"}``.
        point (ComplexPoint2): A point with |z|^2 + |w|^2 = 1.

    Returns:
        complex: The closed-form value.
    """
    if name not in _ENTRIES:
        raise InvalidSpecError(f"unknown gallery entry '{name}'")
    if abs(point.norm() ** 2 - 1.0) > SPHERE_TOLERANCE:
        raise OffSphereError(f"{point.describe()} is not on the sphere")
    return gallery_function(name, params).at(point)


def _holomorphic_expectation(notes: str) -> ExpectedBehavior:
    return ExpectedBehavior(
        families=[
            FamilyExpectation(family=family, verdict="pass")
            for family in (
                LineFamily.through(0, 0),
                LineFamily.through(0.5, 0),
                LineFamily.parallel(1, 0),
                LineFamily.through(1, 0),
                LineFamily.through(2, 0),
            )
        ],
        ball="pass",
        real_analytic=True,
        notes=notes,
    )


def gallery_expected(name: str, params: Params) -> ExpectedBehavior:
    """The verdicts the theory asserts for a gallery entry."""
    _evaluator(name, params)
    if name == "example11":
        return ExpectedBehavior(
            families=[
                FamilyExpectation(family=family, verdict="pass")
                for family in (
                    LineFamily.through(0, 0),
                    LineFamily.through(0, 0.5),
                    LineFamily.through(0, 0.5j),
                )
            ],
            ball="fail",
            real_analytic=False,
            notes="passes every pencil through a point of {0} x D",
        )
    if name == "absw2":
        return ExpectedBehavior(
            families=[
                FamilyExpectation(
                    family=LineFamily.through(0, 0), verdict="pass"
                ),
                FamilyExpectation(
                    family=LineFamily.parallel(1, 0), verdict="pass"
                ),
            ],
            ball="fail",
            real_analytic=True,
            notes="constant on every slice of both pencils",
        )
    if name == "km":
        p, q = _complex(params, "p"), _complex(params, "q")
        return ExpectedBehavior(
            families=[
                FamilyExpectation(
                    family=LineFamily.parallel(1, p), verdict="pass"
                ),
                FamilyExpectation(
                    family=LineFamily.parallel(1, q), verdict="pass"
                ),
            ],
            ball="fail",
            real_analytic=True,
            notes="holomorphic in the line parameter on both pencils",
        )
    if name == "cmono" and (_int(params, "c") or _int(params, "d")):
        return ExpectedBehavior(
            families=[],
            ball="fail",
            real_analytic=True,
            notes="c_n carries conj(z) or (1-|z|^2) factors",
        )
    return _holomorphic_expectation("holomorphic control")


def gallery_listing() -> GalleryListing:
    return GalleryListing(entries=GALLERY)


def disc_function(
    text: str,
    f: Optional[BoundaryFunction] = None,
    order: int = DEFAULT_ORDER,
) -> DiscFunction:
    """A one-variable disc function from its gallery identifier."""
    name, params = parse_gallery_id(text)
    if _ENTRIES[name].kind != "disc":
        raise InvalidSpecError(f"'{name}' is not a disc function")
    if name == "zpow":
        _only(params, "m")
        m = _int(params, "m")
        return DiscFunction(text, lambda z: z**m)
    if name == "conj":
        _only(params)
        return DiscFunction(text, np.conj)
    if name == "ex11disc":
        _only(params, "k")
        k = _int(params, "k", 1)
        return DiscFunction(text, lambda z: _example11(z, k))
    if name == "abs2c":
        _only(params)
        return DiscFunction(text, lambda z: 1.0 - np.abs(z) ** 2)
    _only(params, "n")
    if f is None:
        raise InvalidSpecError("cn needs a boundary function (--fn)")
    n = _int(params, "n", minimum=None)
    return coefficient_function(f, n, order)


def resolve_function(source: str) -> BoundaryFunction:
    """``gallery:<id>`` or ``grid:<path>`` to a boundary function."""
    kind, sep, rest = source.partition(":")
    if not sep or not rest:
        raise InvalidSpecError(
            f"function source '{source}' must be gallery:<id> or grid:<path>"
        )
    if kind == "gallery":
        name, params = parse_gallery_id(rest)
        if _ENTRIES[name].kind != "boundary":
            raise InvalidSpecError(f"'{name}' is a disc function")
        return gallery_function(name, params)
    if kind == "grid":
        return load_grid(rest)
    raise InvalidSpecError(f"unknown function source '{kind}'")
