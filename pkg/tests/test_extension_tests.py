import math
import unittest
from concurrent.futures import ThreadPoolExecutor
from unittest import mock

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from holext.errors import (
    InvalidInputError,
    NoIntersectionError,
    PreconditionError,
)
from holext.extension_tests import (
    ball_extension_verdict,
    circle_extension_test,
    circle_family_test,
    disc_analyticity_test,
    family_extension_test,
    line_extension_test,
    pencil_lines,
    pencil_pair_test,
    prop33_factor_test,
)
from holext.gallery import disc_function, resolve_function
from holext.geometry import canonical_pencils, transform_line
from holext.models import (
    BallAutomorphism,
    Circle,
    ComplexLine,
    ComplexPoint2,
    FamilySpec,
    LineFamily,
    NormalizingTransform,
    TransformStep,
)
from holext.slicing import BoundaryFunction, coefficient_function, pull_back


def line(base, direction):
    return ComplexLine(
        base=ComplexPoint2(z=base[0], w=base[1]),
        direction=ComplexPoint2(z=direction[0], w=direction[1]),
    )


def complexes(bound):
    part = st.floats(-bound, bound)
    return st.builds(complex, part, part)


def ball_points(radius):
    part = st.floats(-1.0, 1.0)
    return (
        st.tuples(part, part, part, part)
        .filter(lambda v: 0.01 <= sum(x * x for x in v) <= 1.0)
        .map(
            lambda v: ComplexPoint2(
                z=radius * complex(v[0], v[1]), w=radius * complex(v[2], v[3])
            )
        )
    )


class TestCircleExtension(unittest.TestCase):
    def setUp(self):
        self.zeta = Circle(center=0, radius=1).nodes(64)

    def test_holomorphic_samples(self):
        report = circle_extension_test(self.zeta**2)
        self.assertEqual(report.verdict, "pass")
        self.assertLess(report.residual, 1e-14)

    def test_conjugate_samples(self):
        report = circle_extension_test(np.conj(self.zeta))
        self.assertEqual(report.verdict, "fail")
        self.assertAlmostEqual(report.residual, 1.0)
        self.assertEqual(report.details[0]["worst_m"], 1)

    @settings(max_examples=200, deadline=None)
    @given(eps=st.floats(1e-6, 1.0), m=st.integers(1, 31))
    def test_added_conjugate_power_raises_residual(self, eps, m):
        zeta = Circle(center=0, radius=1).nodes(64)
        samples = zeta**2 + 0.3 * np.conj(zeta) ** m
        before = circle_extension_test(samples)
        after = circle_extension_test(samples + eps * np.conj(zeta) ** m)
        self.assertLess(abs(after.residual - before.residual - eps), 1e-13)
        self.assertEqual(after.details[0]["worst_m"], m)

    def test_too_few_samples(self):
        with self.assertRaises(PreconditionError):
            circle_extension_test(self.zeta[:8] ** 2)

    def test_nodes_are_checked(self):
        circle = Circle(center=0.1, radius=0.5)
        nodes = circle.nodes(32)
        report = circle_extension_test(nodes**3, circle=circle, nodes=nodes)
        self.assertEqual(report.details[0]["radius"], 0.5)
        with self.assertRaises(InvalidInputError):
            circle_extension_test(nodes**3, nodes=nodes)
        with self.assertRaises(InvalidInputError):
            circle_extension_test(
                nodes**3, circle=circle, nodes=np.roll(nodes, 1)
            )

    def test_example11_on_circles(self):
        phi = disc_function("ex11disc:k=3")
        for circle, verdict in (
            (Circle(center=0, radius=0.7), "pass"),
            (Circle(center=0.1, radius=0.5), "pass"),
            (Circle(center=0.5, radius=0.2), "fail"),
        ):
            report = circle_extension_test(
                phi(circle.nodes(256)), circle=circle
            )
            self.assertEqual(report.verdict, verdict, circle.describe())


class TestLineExtension(unittest.TestCase):
    def test_abs_w_squared_through_origin(self):
        f = resolve_function("gallery:absw2")
        report = line_extension_test(f, line((0, 0), (1, 0.5j)), 64)
        self.assertEqual(report.verdict, "pass")
        self.assertFalse(report.details[0]["skipped"])

    def test_conjugate_on_horizontal_line(self):
        f = resolve_function("gallery:cmono:a=0:b=0:c=1:d=0")
        report = line_extension_test(f, line((0, 0.6), (1, 0)), 64)
        self.assertEqual(report.verdict, "fail")
        self.assertAlmostEqual(report.residual, 0.8)
        self.assertAlmostEqual(report.details[0]["radius"], 0.8)

    def test_line_missing_the_ball(self):
        f = resolve_function("gallery:absw2")
        with self.assertRaises(NoIntersectionError):
            line_extension_test(f, line((0, 2), (1, 0)), 64)


class TestPencils(unittest.TestCase):
    def test_pencil_sizes(self):
        through = pencil_lines(LineFamily.through(0.2, 0), 9)
        self.assertEqual(len(through), 2 * (1 + 9))
        parallel = pencil_lines(LineFamily.parallel(1, 1), 9)
        self.assertEqual(len(parallel), 1 + 2 * 3)
        with self.assertRaises(PreconditionError):
            pencil_lines(LineFamily.through(0, 0), 1)

    def test_lines_belong_to_their_pencil(self):
        point = ComplexPoint2(z=0.2, w=-0.1j)
        family = LineFamily(kind="through", point=point)
        for member in pencil_lines(family, 16):
            self.assertLess(member.distance_to(point), 1e-12)
        direction = np.array([1, 1j]) / np.sqrt(2)
        for member in pencil_lines(LineFamily.parallel(1, 1j), 16):
            d = member.direction.as_array()
            self.assertAlmostEqual(abs(np.vdot(direction, d)), np.sqrt(2))
            self.assertLess(np.linalg.norm(member.base.as_array()), 1.0)


class TestFamilyExtension(unittest.TestCase):
    def test_holomorphic_polynomial(self):
        f = resolve_function("gallery:poly:2.0=1:1.1=1")
        report = family_extension_test(
            f, LineFamily.through(0.5, 0), density=9, order=64, threads=1
        )
        self.assertEqual(report.verdict, "pass")
        self.assertEqual(report.label, "necessary-condition pass at density 9")
        self.assertEqual(
            [row["index"] for row in report.details],
            list(range(len(report.details))),
        )

    def test_conjugate_w(self):
        f = resolve_function("gallery:cmono:a=0:b=0:c=0:d=1")
        report = family_extension_test(
            f, LineFamily.through(0, 0), density=9, order=64, threads=1
        )
        self.assertEqual(report.verdict, "fail")
        self.assertTrue(report.label.startswith("failed on "))

    def test_abs_w_squared_pencils(self):
        f = resolve_function("gallery:absw2")
        for family in (LineFamily.through(0, 0), LineFamily.parallel(1, 0)):
            report = family_extension_test(
                f, family, density=9, order=64, threads=1
            )
            self.assertEqual(report.verdict, "pass", family.describe())

    def test_example11_through_the_w_axis(self):
        f = resolve_function("gallery:example11:k=3")
        report = family_extension_test(
            f, LineFamily.through(0, 0.5), density=9, order=128, threads=1
        )
        self.assertEqual(report.verdict, "pass")

    def test_km_parallel_pencils(self):
        f = resolve_function("gallery:km:p=1:q=-1")
        report = pencil_pair_test(
            f,
            [LineFamily.parallel(1, 1), LineFamily.parallel(1, -1)],
            density=9,
            order=64,
            threads=1,
        )
        self.assertEqual(report.verdict, "pass")
        self.assertEqual(len(report.details), 2)

    def test_example11_over_points_of_the_w_axis(self):
        f = resolve_function("gallery:example11:k=3")
        tested = 0
        for k in range(10):
            angle = k * math.pi / 5
            b = 0.06 * k * complex(math.cos(angle), math.sin(angle))
            report = family_extension_test(
                f, LineFamily.through(0, b), density=9, order=256, threads=1
            )
            self.assertEqual(report.verdict, "pass", b)
            self.assertLess(report.residual, 1e-8)
            tested += len(report.details) - report.skipped
        self.assertEqual(tested, 200)

    @settings(max_examples=10, deadline=None)
    @given(a=ball_points(0.5))
    def test_verdicts_survive_pull_back(self, a):
        auto = BallAutomorphism(a=a)
        transform = NormalizingTransform(
            steps=[TransformStep(kind="ball_automorphism", automorphism=auto)]
        )
        family = LineFamily.through(0.2, -0.1j)
        for fn in (
            "gallery:poly:2.0=1:1.1=1",
            "gallery:cmono:a=0:b=0:c=1:d=0",
        ):
            f = resolve_function(fn)
            pulled = pull_back(f, auto)
            for member in pencil_lines(family, 9):
                direct = line_extension_test(f, member, 128)
                moved = line_extension_test(
                    pulled, transform_line(transform, member), 128, tol=1e-7
                )
                self.assertEqual(
                    moved.verdict, direct.verdict, member.describe()
                )

    def test_every_line_misses(self):
        f = resolve_function("gallery:absw2")
        with self.assertRaises(NoIntersectionError):
            family_extension_test(
                f, LineFamily.through(50, 50), density=9, order=64, threads=1
            )

    def test_threads_from_environment(self):
        f = resolve_function("gallery:cmono:a=1:b=0:c=0:d=1")
        family = LineFamily.through(0.1, 0.2)
        serial = family_extension_test(f, family, 9, 64, threads=1)
        with mock.patch.dict("os.environ", {"HOLEXT_THREADS": "4"}):
            with mock.patch(
                "holext.extension_tests.ThreadPoolExecutor",
                wraps=ThreadPoolExecutor,
            ) as executor:
                threaded = family_extension_test(f, family, 9, 64)
        executor.assert_called_with(max_workers=4)
        self.assertEqual(threaded.details, serial.details)
        self.assertEqual(threaded.residual, serial.residual)


class TestCanonicalFamilies(unittest.TestCase):
    families = {
        "origin-and-point": canonical_pencils("origin-and-point", t=0.5),
        "two-boundary-points": canonical_pencils(
            "two-boundary-points", alpha=1, beta=1j
        ),
        "parallel-and-point": canonical_pencils("parallel-and-point", t=1.5),
    }

    def check_holomorphic(self, f):
        for name, pencils in self.families.items():
            report = pencil_pair_test(
                f, pencils, density=9, order=64, tol=1e-10, threads=1
            )
            self.assertEqual(report.verdict, "pass", name)
        self.assertEqual(ball_extension_verdict(f).verdict, "pass")

    def test_quadratic_control(self):
        self.check_holomorphic(resolve_function("gallery:poly:2.0=1:1.1=1"))

    @settings(max_examples=5, deadline=None)
    @given(
        st.dictionaries(
            st.tuples(st.integers(0, 3), st.integers(0, 3)),
            complexes(2.0),
            min_size=1,
            max_size=4,
        )
    )
    def test_random_holomorphic_polynomials(self, terms):
        f = BoundaryFunction(
            "polynomial",
            lambda z, w: sum(
                c * z**a * w**b for (a, b), c in terms.items()
            ),
        )
        self.check_holomorphic(f)


class TestCircleFamily(unittest.TestCase):
    spec = FamilySpec(kind="concentric-plus-through-1")

    def test_holomorphic(self):
        report = circle_family_test(disc_function("zpow:m=3"), self.spec, 8)
        self.assertEqual(report.verdict, "pass")
        self.assertEqual(len(report.details), 16)

    def test_conjugate(self):
        report = circle_family_test(disc_function("conj"), self.spec, 8)
        self.assertEqual(report.verdict, "fail")

    def test_example11(self):
        report = circle_family_test(
            disc_function("ex11disc:k=3"), self.spec, 8
        )
        self.assertEqual(report.verdict, "fail")
        concentric = [
            row for row in report.details if row["subfamily"] == "concentric"
        ]
        self.assertTrue(all(row["verdict"] == "pass" for row in concentric))


class TestDiscAnalyticity(unittest.TestCase):
    def test_monomial(self):
        report = disc_analyticity_test(disc_function("zpow:m=3"))
        self.assertEqual(report.verdict, "pass")
        self.assertLess(report.consistency_defect, 1e-10)

    def test_conjugate(self):
        report = disc_analyticity_test(disc_function("conj"))
        self.assertEqual(report.verdict, "fail")
        self.assertGreater(max(report.negative_residuals), 0.1)

    def test_example11_fails_radial_consistency(self):
        report = disc_analyticity_test(disc_function("ex11disc:k=3"))
        self.assertEqual(report.verdict, "fail")
        self.assertLess(max(report.negative_residuals), 1e-8)
        self.assertGreater(report.consistency_defect, 1e-6)

    def test_radii(self):
        phi = disc_function("zpow:m=1")
        with self.assertRaises(InvalidInputError):
            disc_analyticity_test(phi, [0.3, 0.6])
        with self.assertRaises(InvalidInputError):
            disc_analyticity_test(phi, [0.3, 0.6, 1.5])


class TestBallVerdict(unittest.TestCase):
    def test_holomorphic_polynomial(self):
        f = resolve_function("gallery:poly:2.0=1:0.3=1")
        report = ball_extension_verdict(f)
        self.assertEqual(report.verdict, "pass")
        self.assertIsNone(report.offending_n)
        self.assertEqual(len(report.details), 13)

    def test_fails_at_zero(self):
        for fn in ("gallery:absw2", "gallery:example11:k=3"):
            report = ball_extension_verdict(resolve_function(fn))
            self.assertEqual(report.verdict, "fail", fn)
            self.assertEqual(report.offending_n, 0, fn)
            self.assertIn("radial consistency", report.offending_reason)

    def test_km_fails(self):
        f = resolve_function("gallery:km:p=1:q=-1")
        report = ball_extension_verdict(f)
        self.assertEqual(report.verdict, "fail")
        self.assertEqual(report.offending_n, 0)

    def test_example11_radial_defect(self):
        f = resolve_function("gallery:example11:k=3")
        report = ball_extension_verdict(f)
        row = next(r for r in report.details if r["n"] == 0)
        self.assertGreater(row["consistency_defect"], 0.1)
        disc = disc_analyticity_test(
            coefficient_function(f, 0), radii=(0.5, 0.7, 0.9)
        )
        a6 = next(r for r in disc.consistency if r["m"] == 6)
        np.testing.assert_allclose(
            a6["re"], [0.5**-2, 0.7**-2, 0.9**-2], rtol=1e-10
        )

    def test_negative_coefficient(self):
        f = resolve_function("gallery:cmono:a=0:b=0:c=0:d=1")
        report = ball_extension_verdict(f)
        self.assertEqual(report.offending_n, -1)
        self.assertIn("does not vanish", report.offending_reason)

    def test_short_range(self):
        f = resolve_function("gallery:absw2")
        with self.assertRaises(PreconditionError):
            ball_extension_verdict(f, (-2, 8))


class TestFactorTest(unittest.TestCase):
    def test_holomorphic_factor(self):
        f = resolve_function("gallery:mono:a=0:b=1")
        report = prop33_factor_test(f, 0.2, 1, line((0.2, 0), (1, 1)), 64)
        self.assertEqual(report.verdict, "pass")

    def test_example11_through_origin(self):
        f = resolve_function("gallery:example11:k=3")
        report = prop33_factor_test(f, 0, 0, line((0, 0), (1, 0.5)), 64)
        self.assertEqual(report.verdict, "pass")

    def test_abs_w_squared_off_center(self):
        f = resolve_function("gallery:absw2")
        report = prop33_factor_test(f, 0.2, 0, line((0.2, 0), (1, 1)), 64)
        self.assertEqual(report.verdict, "fail")

    def test_line_preconditions(self):
        f = resolve_function("gallery:absw2")
        with self.assertRaises(InvalidInputError):
            prop33_factor_test(f, 0.2, 0, line((0.3, 0), (1, 1)))
        with self.assertRaises(InvalidInputError):
            prop33_factor_test(f, 0.2, 0, line((0.2, 0), (1, 0)))


if __name__ == "__main__":
    unittest.main()
