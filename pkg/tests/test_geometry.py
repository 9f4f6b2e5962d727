import math
import unittest

import numpy as np

from holext.errors import (
    DomainError,
    InvalidInputError,
    NoIntersectionError,
    SingularInputError,
    TangencyError,
)
from holext.geometry import (
    ball_auto_apply,
    ball_auto_array,
    collinearity_defect,
    disc_moebius,
    line_sphere_circle,
    normalize_pair,
    projection_circle,
    transform_line,
)
from holext.models import (
    BallAutomorphism,
    ComplexLine,
    ComplexPoint2,
    LineFamily,
)
from holext.semiquadrics import circumcircle


def random_ball_points(rng, count, radius=1.0):
    x = rng.normal(size=(count, 2)) + 1j * rng.normal(size=(count, 2))
    x /= np.linalg.norm(x, axis=1)[:, None]
    return x * radius * rng.uniform(size=(count, 1)) ** 0.25


def point(z, w):
    return ComplexPoint2(z=z, w=w)


class TestDiscMoebius(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(
            disc_moebius(0, 0.3 + 0.4j), -0.3 - 0.4j, places=15
        )
        self.assertAlmostEqual(disc_moebius(0.5, 0), 0.5, places=15)
        self.assertAlmostEqual(disc_moebius(0.5, 0.2), 1 / 3, places=15)

    def test_unit_circle_preserved(self):
        zeta = np.exp(2j * np.pi * np.arange(32) / 32)
        for z in zeta:
            self.assertAlmostEqual(abs(disc_moebius(0.3 - 0.6j, z)), 1.0)

    def test_pole(self):
        with self.assertRaises(DomainError):
            disc_moebius(0.5, 2.0)

    def test_alpha_outside_disc(self):
        with self.assertRaises(DomainError):
            disc_moebius(1.0, 0.2)


class TestBallAutomorphism(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(7)

    def test_exchanges_zero_and_a(self):
        auto = BallAutomorphism(a=point(0.6, 0))
        image = ball_auto_apply(auto, point(0.6, 0))
        self.assertLess(image.norm(), 1e-15)
        image = ball_auto_apply(auto, point(0, 0))
        self.assertAlmostEqual(image.z, 0.6, places=15)
        self.assertEqual(image.w, 0)

    def test_closed_form_for_axis_point(self):
        lam = 0.4 + 0.3j
        s = math.sqrt(1 - abs(lam) ** 2)
        auto = BallAutomorphism(a=point(lam, 0))
        z, w = 0.2 - 0.5j, 0.1 + 0.7j
        image = ball_auto_apply(auto, point(z, w))
        denominator = 1 - lam.conjugate() * z
        self.assertAlmostEqual(image.z, (lam - z) / denominator, places=14)
        self.assertAlmostEqual(image.w, -s * w / denominator, places=14)

    def test_involution(self):
        a_values = random_ball_points(self.rng, 200, 0.95)
        for a in a_values:
            x = random_ball_points(self.rng, 50)
            twice = ball_auto_array(a, ball_auto_array(a, x))
            self.assertLess(np.abs(twice - x).max(), 1e-12)

    def test_sphere_preserved(self):
        for a in random_ball_points(self.rng, 100, 0.9):
            x = random_ball_points(self.rng, 50)
            x /= np.linalg.norm(x, axis=1)[:, None]
            image = ball_auto_array(a, x)
            defect = np.abs(np.linalg.norm(image, axis=1) - 1.0)
            self.assertLess(defect.max(), 1e-12)

    def test_lines_map_to_lines(self):
        for a in random_ball_points(self.rng, 100, 0.9):
            base = random_ball_points(self.rng, 1, 0.5)[0]
            direction = random_ball_points(self.rng, 1)[0]
            zeta = np.array([0.0, 0.3, -0.2 + 0.4j])
            points = base + zeta[:, None] * direction
            image = ball_auto_array(a, points)
            self.assertLess(collinearity_defect(image), 1e-10)

    def test_polar_point_is_singular(self):
        auto = BallAutomorphism(a=point(0.5, 0))
        with self.assertRaises(SingularInputError):
            ball_auto_apply(auto, point(2, 0))

    def test_automorphism_point_inside(self):
        with self.assertRaises(ValueError):
            BallAutomorphism(a=point(0.8, 0.6))


class TestLineSphereCircle(unittest.TestCase):
    def test_line_through_origin(self):
        R = 0.6
        line = ComplexLine(
            base=point(0, 0), direction=point(R, math.sqrt(1 - R * R))
        )
        circle = line_sphere_circle(line)
        self.assertAlmostEqual(circle.p, 0)
        self.assertAlmostEqual(circle.r, 0)
        self.assertAlmostEqual(circle.q, R)
        self.assertAlmostEqual(circle.s, math.sqrt(1 - R * R))

    def test_w_axis(self):
        line = ComplexLine(base=point(0, 0), direction=point(0, 1))
        circle = line_sphere_circle(line)
        self.assertEqual(
            (circle.p, circle.q, circle.r, circle.s), (0, 0, 0, 1)
        )

    def test_points_on_sphere(self):
        line = ComplexLine.through(point(2, 0), point(0.5, 0.5))
        z, w = line_sphere_circle(line).points(256)
        residual = np.abs(np.abs(z) ** 2 + np.abs(w) ** 2 - 1.0)
        self.assertLess(residual.max(), 1e-12)

    def test_points_on_line(self):
        line = ComplexLine.through(point(2, 0), point(0.5, 0.5))
        circle = line_sphere_circle(line)
        zeta = np.exp(2j * np.pi * np.arange(8) / 8)
        for k, (z, w) in enumerate(zip(*circle.points(8))):
            expected = line.point_at(circle.offset + circle.scale * zeta[k])
            self.assertAlmostEqual(z, expected.z, places=12)
            self.assertAlmostEqual(w, expected.w, places=12)

    def test_random_lines(self):
        rng = np.random.default_rng(3)
        for base in random_ball_points(rng, 200, 0.99):
            direction = random_ball_points(rng, 1)[0]
            line = ComplexLine(
                base=ComplexPoint2.from_array(base),
                direction=ComplexPoint2.from_array(direction),
            )
            z, w = line_sphere_circle(line).points(256)
            residual = np.abs(np.abs(z) ** 2 + np.abs(w) ** 2 - 1.0)
            self.assertLess(residual.max(), 1e-12)

    def test_missing_line(self):
        line = ComplexLine(base=point(2, 0), direction=point(0, 1))
        with self.assertRaises(NoIntersectionError):
            line_sphere_circle(line)

    def test_tangent_line(self):
        line = ComplexLine(base=point(1, 0), direction=point(0, 1))
        with self.assertRaises(TangencyError):
            line_sphere_circle(line)

    def test_tangency_is_judged_in_the_parameter_plane(self):
        short = ComplexLine(base=point(0.6, 0), direction=point(0, 1))
        self.assertAlmostEqual(abs(line_sphere_circle(short).scale), 0.8)
        long = ComplexLine(base=point(0.6, 0), direction=point(0, 1e11))
        with self.assertRaises(TangencyError):
            line_sphere_circle(long)


class TestProjectionCircle(unittest.TestCase):
    def test_values(self):
        circle = projection_circle(0.5, 0.5)
        self.assertAlmostEqual(circle.center, 0.4, places=15)
        self.assertAlmostEqual(circle.radius, 0.4, places=15)
        circle = projection_circle(0.5, 1.0)
        self.assertAlmostEqual(circle.center, 0.0, places=15)
        self.assertAlmostEqual(circle.radius, 1.0, places=15)
        circle = projection_circle(0.5, 1e-9)
        self.assertAlmostEqual(circle.center, 0.5, places=8)

    def test_radius_identity(self):
        for t in np.linspace(0.1, 0.9, 17):
            for R in np.linspace(0.05, 1.0, 20):
                circle = projection_circle(t, R)
                T = circle.center.real
                rho2 = (T - t) * (T - 1.0 / t)
                self.assertLess(abs(circle.radius**2 - rho2), 1e-14)

    def test_center_decreases_with_R(self):
        centers = [
            projection_circle(0.3, R).center.real
            for R in np.linspace(0.01, 1.0, 100)
        ]
        self.assertTrue(np.all(np.diff(centers) < 0))

    def test_fits_projected_sphere_points(self):
        t, R = 0.5, 0.5
        zeta = np.exp(2j * np.pi * np.arange(64) / 64)
        sphere = np.stack([R * zeta, math.sqrt(1 - R * R) * zeta], axis=1)
        z = ball_auto_array(np.array([t, 0]), sphere)[:, 0]
        fitted = circumcircle(z[0], z[21], z[42])
        expected = projection_circle(t, R)
        self.assertAlmostEqual(fitted.center, expected.center, places=12)
        self.assertAlmostEqual(fitted.radius, expected.radius, places=12)
        self.assertLess(np.abs(np.abs(z - 0.4) - 0.4).max(), 1e-12)

    def test_reciprocal_point(self):
        circle = projection_circle(2.0, 0.5)
        self.assertEqual(circle, projection_circle(0.5, 0.5))

    def test_t_equal_one(self):
        with self.assertRaises(DomainError):
            projection_circle(1.0, 0.5)


class TestNormalizePair(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_already_canonical(self):
        result = normalize_pair(point(0, 0), point(0.5, 0))
        self.assertEqual(result.case, "A1")
        self.assertEqual(result.configuration, "origin-and-point")
        self.assertEqual(result.transform.steps, [])
        self.assertAlmostEqual(result.t, 0.5)
        self.assertEqual(
            result.pencils(),
            [LineFamily.through(0, 0), LineFamily.through(0.5, 0)],
        )

    def test_polar_pair(self):
        result = normalize_pair(point(0.5, 0), point(2, 0))
        self.assertEqual(result.case, "A2")
        self.assertEqual(result.configuration, "origin-and-parallel")
        self.assertLess(result.image_a.norm(), 1e-14)
        self.assertIsNone(result.image_b)

    def test_line_missing_the_ball(self):
        result = normalize_pair(point(2, 0.3), point(2, -0.7))
        self.assertEqual(result.case, "B2")
        self.assertEqual(result.configuration, "two-parallel")
        first, second = result.directions
        root = math.sqrt(3.0)
        self.assertAlmostEqual(first.z, 1)
        self.assertAlmostEqual(first.w, 0.3 / root)
        self.assertAlmostEqual(second.w, -0.7 / root)

    def test_two_sphere_points(self):
        result = normalize_pair(point(0.6, 0.8), point(0.6, -0.8))
        self.assertEqual(result.case, "B1")
        self.assertEqual(result.configuration, "two-boundary-points")
        self.assertAlmostEqual(abs(result.alpha), 1.0)
        self.assertAlmostEqual(abs(result.beta), 1.0)
        self.assertAlmostEqual(result.image_a.z, result.alpha)
        self.assertAlmostEqual(result.image_b.z, result.beta)

    def test_two_outer_points(self):
        result = normalize_pair(point(0.5, 2), point(0.5, -2))
        self.assertEqual(result.case, "B1")
        self.assertEqual(result.configuration, "parallel-and-point")
        self.assertGreaterEqual(result.t, 1.0)
        self.assertIsNone(result.image_a)
        self.assertAlmostEqual(result.image_b.z, result.t)
        self.assertAlmostEqual(abs(result.image_b.w), 0.0)

    def test_tangent_line(self):
        result = normalize_pair(point(1, 1), point(1, -1))
        self.assertEqual(result.case, "tangent-excluded")
        self.assertEqual(result.pencils(), [])

    def test_identical_points(self):
        with self.assertRaises(InvalidInputError):
            normalize_pair(point(0.2, 0), point(0.2, 0))

    def test_lines_through_a_pass_through_its_image(self):
        for _ in range(10):
            a, b = random_ball_points(self.rng, 2, 0.9)
            pa = ComplexPoint2.from_array(a)
            result = normalize_pair(pa, ComplexPoint2.from_array(b))
            self.assertEqual(result.case, "A1")
            self.assertLess(result.image_a.norm(), 1e-12)
            self.assertAlmostEqual(abs(result.image_b.w), 0.0, places=12)
            self.assertAlmostEqual(result.image_b.z, result.t, places=12)
            for direction in random_ball_points(self.rng, 20):
                line = ComplexLine(
                    base=pa,
                    direction=ComplexPoint2.from_array(direction),
                    tag=LineFamily(kind="through", point=pa),
                )
                image = transform_line(result.transform, line)
                self.assertLess(image.distance_to(result.image_a), 1e-10)
                self.assertLess(image.tag.point.norm(), 1e-12)

    def test_lines_through_far_point_become_parallel(self):
        a = point(2, 0.3)
        result = normalize_pair(a, point(2, -0.7))
        target = result.directions[0].as_array()
        for direction in random_ball_points(self.rng, 20):
            direction[0] += 0.5
            line = ComplexLine(
                base=a,
                direction=ComplexPoint2.from_array(direction),
                tag=LineFamily(kind="through", point=a),
            )
            image = transform_line(result.transform, line)
            d = image.direction.as_array()
            cross = abs(d[0] * target[1] - d[1] * target[0])
            self.assertLess(
                cross / (np.linalg.norm(d) * np.linalg.norm(target)), 1e-10
            )
            self.assertEqual(image.tag.kind, "parallel")


if __name__ == "__main__":
    unittest.main()
