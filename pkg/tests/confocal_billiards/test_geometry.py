import math
from unittest import TestCase

import numpy as np

from confocal_billiards.exceptions import InvalidInputError
from confocal_billiards.geometry import (Branch, ConfocalFamily, QuadricKind, caustic_directions, caustic_parameter,
                                         classify_motion_region, elliptic_coords, focus_incidence, ray_quadric_intersection,
                                         reflect, tangency_defect)


class TestConfocalFamily(TestCase):
    def setUp(self):
        self._family = ConfocalFamily(2, 1)

    def test_focal_distance(self):
        self.assertAlmostEqual(self._family.c, 1.0)
        self.assertEqual(self._family.foci, ((-1.0, 0.0), (1.0, 0.0)))

    def test_invalid_parameters(self):
        self.assertRaises(InvalidInputError, ConfocalFamily, 1, 2)
        self.assertRaises(InvalidInputError, ConfocalFamily, 1, 0)

    def test_kind_of(self):
        self.assertEqual(self._family.kind_of(0.0), QuadricKind.ELLIPSE)
        self.assertEqual(self._family.kind_of(1.0), QuadricKind.DEGENERATE)
        self.assertEqual(self._family.kind_of(1.5), QuadricKind.HYPERBOLA)
        self.assertEqual(self._family.kind_of(2.0), QuadricKind.VERTICAL_LINE)
        self.assertRaises(InvalidInputError, self._family.kind_of, 2.5)

    def test_branch_of_ellipse(self):
        self.assertRaises(InvalidInputError, self._family.quadric, 0.0, Branch.LEFT)
        self.assertRaises(InvalidInputError, self._family.quadric, 1.5, Branch.BETWEEN_FOCI)

    def test_equality(self):
        self.assertEqual(ConfocalFamily(2, 1), self._family)
        self.assertNotEqual(ConfocalFamily(3, 1), self._family)


class TestEllipticCoords(TestCase):
    def setUp(self):
        self._family = ConfocalFamily(2, 1)

    def test_origin(self):
        self.assertEqual(tuple(elliptic_coords(self._family, (0.0, 0.0))), (1.0, 2.0))

    def test_axes(self):
        self.assertEqual(tuple(elliptic_coords(self._family, (2.0, 0.0))), (-2.0, 1.0))
        self.assertEqual(tuple(elliptic_coords(self._family, (0.0, 1.0))), (0.0, 2.0))

    def test_generic_point(self):
        coords = elliptic_coords(self._family, (1.0, 1.0))
        self.assertAlmostEqual(coords.lambda_h, (1.0 + math.sqrt(5.0)) / 2.0)
        self.assertAlmostEqual(coords.lambda_e, (1.0 - math.sqrt(5.0)) / 2.0)


class TestCausticParameter(TestCase):
    def setUp(self):
        self._family = ConfocalFamily(2, 1)

    def test_focal_line(self):
        self.assertAlmostEqual(caustic_parameter(self._family, (0.0, 0.0), (1.0, 0.0)).lam, 1.0)

    def test_y_axis(self):
        self.assertAlmostEqual(caustic_parameter(self._family, (0.0, 0.0), (0.0, 1.0)).lam, 2.0)

    def test_tangent_line(self):
        self.assertAlmostEqual(caustic_parameter(self._family, (0.0, 1.0), (3.0, 0.0)).lam, 0.0)

    def test_zero_velocity(self):
        self.assertRaises(InvalidInputError, caustic_parameter, self._family, (0.0, 0.0), (0.0, 0.0))

    def test_tangency_defect(self):
        self.assertAlmostEqual(tangency_defect(self._family, (0.0, 1.0), (1.0, 0.0)), 0.0)
        self.assertAlmostEqual(focus_incidence(self._family, (0.0, 0.0), (1.0, 0.0)), 0.0)

    def test_caustic_directions(self):
        directions = caustic_directions(self._family, (0.0, 1.0), 0.0)
        self.assertTrue(directions)
        for direction in directions:
            self.assertAlmostEqual(caustic_parameter(self._family, (0.0, 1.0), direction).lam, 0.0)

    def test_no_directions_inside_ellipse(self):
        self.assertEqual(caustic_directions(self._family, (0.0, 0.0), 0.0), [])


class TestMotion(TestCase):
    def setUp(self):
        self._family = ConfocalFamily(2, 1)

    def test_ray_hits_ellipse(self):
        hits = ray_quadric_intersection(self._family, (0.0, 0.0), (1.0, 0.0), self._family.quadric(0.0))
        self.assertEqual(len(hits), 1)
        self.assertAlmostEqual(hits[0][0], math.sqrt(2.0))

    def test_ray_hits_right_branch_only(self):
        hits = ray_quadric_intersection(self._family, (-2.0, 0.0), (1.0, 0.0),
                                        self._family.quadric(1.5, Branch.RIGHT))
        self.assertEqual(len(hits), 1)
        self.assertGreater(hits[0][1][0], 0.0)

    def test_reflect(self):
        reflected = reflect(np.array([1.0, -1.0]) / math.sqrt(2.0), np.array([1.0, 0.0]))
        self.assertTrue(np.allclose(reflected, np.array([1.0, 1.0]) / math.sqrt(2.0)))

    def test_elliptic_region(self):
        inside = classify_motion_region(self._family, 0.0)
        self.assertFalse(inside((0.0, 0.0)))
        self.assertTrue(inside((2.0, 0.0)))

    def test_hyperbolic_region(self):
        inside = classify_motion_region(self._family, 1.5)
        self.assertTrue(inside((0.0, 0.0)))
        self.assertFalse(inside((2.0, 0.0)))

    def test_region_above_a(self):
        self.assertRaises(InvalidInputError, classify_motion_region, self._family, 3.0)
