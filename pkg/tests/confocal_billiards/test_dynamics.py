import math
from unittest import TestCase

import numpy as np
from mock import Mock

from confocal_billiards import canonical
from confocal_billiards.chart import from_chart, phi_of_lambda_h, u_of_lambda_e
from confocal_billiards.dynamics import Event, phase_point, random_phase_point, reverse, step, trajectory
from confocal_billiards.exceptions import InvalidInputError


def planar(family, lambda_e, lambda_h):
    return from_chart(family, u_of_lambda_e(family, lambda_e), phi_of_lambda_h(family, lambda_h))


class TestStep(TestCase):
    def setUp(self):
        self._domain = canonical.a2()
        self._family = self._domain.family

    def test_reflection_on_major_axis(self):
        record, following = step(phase_point(self._family, (0.0, 0.0), (1.0, 0.0)), self._domain)
        self.assertEqual(record.event, Event.REFLECTION)
        self.assertAlmostEqual(record.segment.length, math.sqrt(2.0))
        self.assertTrue(np.allclose(following.v, [-1.0, 0.0]))
        self.assertAlmostEqual(following.caustic.lam, 1.0)

    def test_reflection_on_minor_axis(self):
        record, following = step(phase_point(self._family, (0.0, 0.0), (0.0, 2.0)), self._domain)
        self.assertAlmostEqual(record.segment.length, 1.0)
        self.assertTrue(np.allclose(following.v, [0.0, -1.0]))

    def test_zero_velocity(self):
        self.assertRaises(InvalidInputError, phase_point, self._family, (0.0, 0.0), (0.0, 0.0))

    def test_reverse(self):
        point = phase_point(self._family, (0.1, 0.2), (1.0, 1.0))
        back = reverse(point)
        self.assertTrue(np.allclose(back.v, -point.v))
        self.assertEqual(back.caustic, point.caustic)

    def test_quarter_corner_returns_backwards(self):
        domain = canonical.nc1()
        corner = [corner for corner in domain.corners if np.allclose(corner.point, planar(domain.family, 0.0, 1.2))]
        self.assertEqual(len(corner), 1)
        start = planar(domain.family, 0.02, 1.22)
        velocity = np.asarray(corner[0].point) - start
        record, following = step(phase_point(domain.family, start, velocity), domain)
        self.assertEqual(record.event, Event.QUARTER_CORNER)
        self.assertTrue(np.allclose(following.v, -velocity / np.linalg.norm(velocity)))

    def test_singular_vertex_terminates(self):
        domain = canonical.nc1()
        start = planar(domain.family, 0.35, 1.45)
        velocity = planar(domain.family, 0.3, 1.5) - start
        steps, report = trajectory(phase_point(domain.family, start, velocity), domain, 10)
        self.assertEqual(len(steps), 1)
        self.assertEqual(report.termination, Event.TERMINATED)
        self.assertTrue(report.terminated)


class TestTrajectory(TestCase):
    def test_caustic_is_conserved(self):
        domain = canonical.a2()
        point = phase_point(domain.family, (0.3, 0.2), (math.cos(0.7), math.sin(0.7)))
        steps, report = trajectory(point, domain, 300)
        self.assertEqual(report.steps, 300)
        self.assertEqual(report.termination, Event.INTERIOR_STOP)
        self.assertLess(report.max_drift, 1e-8)
        self.assertLess(report.max_tangency_defect, 1e-6)
        self.assertLess(report.max_region_excess, 1e-6)

    def test_conserved_in_nonconvex_domain(self):
        domain = canonical.nc1()
        point = random_phase_point(domain, np.random.RandomState(3))
        steps, report = trajectory(point, domain, 200)
        self.assertLess(report.max_drift, 1e-8)

    def test_logs_summary(self):
        logger = Mock()
        domain = canonical.a2()
        trajectory(phase_point(domain.family, (0.0, 0.0), (1.0, 0.0)), domain, 4, logger=logger)
        self.assertEqual(logger.debug.call_count, 1)

    def test_max_steps(self):
        domain = canonical.a2()
        self.assertRaises(InvalidInputError, trajectory, phase_point(domain.family, (0.0, 0.0), (1.0, 0.0)), domain, 0)

    def test_random_phase_point_inside(self):
        domain = canonical.nc2()
        point = random_phase_point(domain, np.random.RandomState(0))
        self.assertAlmostEqual(float(np.linalg.norm(point.v)), 1.0)
        self.assertIsNone(point.on_boundary)
