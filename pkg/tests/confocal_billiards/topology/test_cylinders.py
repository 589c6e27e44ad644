from unittest import TestCase

from confocal_billiards import canonical
from confocal_billiards.decomposition import motion_region, partition
from confocal_billiards.topology.cylinders import cut_strip, glue_cylinders
from confocal_billiards.topology.fiber_graph import Side, build_graph, critical_quotient_graph, side_level


class TestGlueCylinders(TestCase):
    def setUp(self):
        self._domain = canonical.nc1()
        self._partition = partition(self._domain)
        self._cut = self._partition.cut_arcs[0]
        self._epsilon = 0.025
        self._strip = cut_strip(self._domain, self._partition, 0, self._epsilon)

    def test_strip_pieces(self):
        self.assertEqual((self._strip.nu, self._strip.xi), (1, 1))
        self.assertEqual(len(self._strip.pieces()), 2)

    def test_below_cut_level(self):
        level = side_level(self._cut, Side.BELOW, self._epsilon)
        graph = build_graph(self._strip.grid, self._cut, level, 0, Side.BELOW)
        gluing = glue_cylinders(graph, self._strip, level)
        self.assertEqual(gluing.cylinder_count, 4)
        self.assertTrue(all(gluing.checks.values()))
        self.assertEqual(list(gluing.checks), ['labels_paired', 'cylinders_are_annuli', 'two_way_chi',
                                               'two_way_components'])
        self.assertTrue(all(name.startswith('C^R') or name.startswith('C^L') for name, _, _ in gluing.table))

    def test_at_cut_level(self):
        lam = self._cut.lambda_i
        graph = critical_quotient_graph(build_graph(self._strip.grid, self._cut, lam, 0, Side.AT), self._strip.grid)
        gluing = glue_cylinders(graph, self._strip, lam)
        self.assertEqual(gluing.cylinder_count, 2)
        self.assertTrue(all(gluing.checks.values()))
        self.assertEqual(gluing.oracle_chi, graph.chi + gluing.cut_chi)

    def test_labels_used_twice(self):
        level = side_level(self._cut, Side.BELOW, self._epsilon)
        graph = build_graph(self._strip.grid, self._cut, level, 0, Side.BELOW)
        gluing = glue_cylinders(graph, self._strip, level)
        labels = [entry.label for entry in gluing.table]
        for label in set(labels):
            self.assertEqual(labels.count(label) % 2, 0)


class TestClosedGluing(TestCase):
    def test_domain_without_cuts(self):
        region = motion_region(canonical.a2(), 0.5)
        gluing = glue_cylinders(None, region, 0.5)
        self.assertEqual(gluing.cylinder_count, 2)
        self.assertEqual(gluing.chi, 0)
        self.assertTrue(gluing.checks['labels_paired'])
        self.assertTrue(gluing.checks['two_way_chi'])
        self.assertEqual(gluing.components, 2)
