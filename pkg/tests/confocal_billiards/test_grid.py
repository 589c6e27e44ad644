import math
from unittest import TestCase

import numpy as np

from confocal_billiards import canonical
from confocal_billiards.exceptions import IntegrityError, InvalidInputError
from confocal_billiards.grid import ChartGrid, connected_labels, lambda_lines


class TestLambdaLines(TestCase):
    def setUp(self):
        self._family = canonical.default_family()

    def test_ellipse(self):
        us, vs = lambda_lines(self._family, 0.0)
        self.assertEqual(len(us), 1)
        self.assertAlmostEqual(us[0], math.asinh(1.0))
        self.assertEqual(vs, [])

    def test_focal_line(self):
        self.assertEqual(lambda_lines(self._family, 1.0), ([0.0], [0.0, math.pi]))

    def test_y_axis(self):
        self.assertEqual(lambda_lines(self._family, 2.0), ([], [math.pi / 2.0, 1.5 * math.pi]))

    def test_hyperbola(self):
        us, vs = lambda_lines(self._family, 1.5)
        self.assertEqual(us, [])
        self.assertEqual(len(vs), 4)
        self.assertAlmostEqual(vs[0] + vs[1], math.pi)

    def test_above_a(self):
        self.assertEqual(lambda_lines(self._family, 3.0), ([], []))


class TestConnectedLabels(TestCase):
    def test_two_components(self):
        count, labels = connected_labels(4, [(0, 1), (2, 3)])
        self.assertEqual(count, 2)
        self.assertEqual(labels[0], labels[1])
        self.assertNotEqual(labels[1], labels[2])

    def test_empty(self):
        count, labels = connected_labels(0, [])
        self.assertEqual(count, 0)
        self.assertEqual(len(labels), 0)


class TestChartGrid(TestCase):
    def setUp(self):
        self._domain = canonical.a2()
        self._grid = ChartGrid.build(self._domain, resolution=16)

    def test_inside_area(self):
        area = float(self._grid.cell_areas()[self._grid.inside].sum())
        self.assertAlmostEqual(area, math.pi * math.sqrt(2.0), places=9)

    def test_inside_is_a_disk(self):
        self.assertEqual(self._grid.chi_of_cells(self._grid.inside), 1)
        labels = self._grid.components(self._grid.inside)
        self.assertEqual(int(labels.max()), 0)

    def test_region_masks(self):
        self.assertFalse((self._grid.inside & self._grid.region_mask(0.0)).any())
        self.assertTrue(self._grid.region_mask(1.0).all())
        self.assertRaises(InvalidInputError, self._grid.region_mask, 2.5)

    def test_indices(self):
        self.assertEqual(self._grid.v_index(0.0), 0)
        self.assertEqual(self._grid.v_index(2.0 * math.pi), 0)
        self.assertEqual(self._grid.v_index(math.pi), self._grid.nv // 2)
        self.assertRaises(IntegrityError, self._grid.u_index, 0.123456789)

    def test_symmetric_v_lines(self):
        self.assertTrue(np.allclose(self._grid.v + self._grid.v[::-1], 2.0 * math.pi))

    def test_extra_lambdas(self):
        grid = ChartGrid.build(self._domain, lambdas=[0.5, 1.5], resolution=16)
        self.assertTrue(grid.caustic_edges(0.5))
        self.assertEqual(len(grid.caustic_edges(1.5)), 4 * grid.nu)

    def test_nc1_components(self):
        domain = canonical.nc1()
        grid = ChartGrid.build(domain, lambdas=[1.5], resolution=16)
        walls = grid.quadric_walls(1.5)
        labels = grid.components(grid.inside, walls)
        self.assertEqual(int(labels.max()), 1)
        self.assertEqual(grid.chi_of_cells(grid.inside), 1)
