from unittest import TestCase

from mock import Mock

from confocal_billiards import canonical
from confocal_billiards.decomposition import (Mark, Rule, adjacency_graph, arc_neighborhood, choose_rule,
                                              critical_lambdas, default_epsilon, equivalent, motion_region, partition,
                                              same_lambda)
from confocal_billiards.domain import Homogeneity, mirror_domain
from confocal_billiards.exceptions import DomainError, InvalidInputError


class TestChooseRule(TestCase):
    def _domain(self, homogeneity, complexity=1, decomposition=None):
        domain = Mock()
        domain.computed_homogeneity.return_value = homogeneity
        domain.complexity = complexity
        domain.decomposition = decomposition
        return domain

    def test_default_is_hyperbolic(self):
        self.assertEqual(choose_rule(self._domain(Homogeneity.BOTH)), Rule.HYPERBOLIC)

    def test_elliptic_domain(self):
        self.assertEqual(choose_rule(self._domain(Homogeneity.ELLIPTIC)), Rule.ELLIPTIC)

    def test_domain_rule(self):
        self.assertEqual(choose_rule(self._domain(Homogeneity.BOTH, decomposition=Rule.ELLIPTIC)), Rule.ELLIPTIC)

    def test_non_homogeneous(self):
        self.assertRaises(DomainError, choose_rule, self._domain(Homogeneity.NON_HOMOGENEOUS))

    def test_elementary_non_homogeneous(self):
        self.assertEqual(choose_rule(self._domain(Homogeneity.NON_HOMOGENEOUS, complexity=0)), Rule.HYPERBOLIC)

    def test_rule_against_class(self):
        self.assertRaises(DomainError, choose_rule, self._domain(Homogeneity.HYPERBOLIC), Rule.ELLIPTIC)

    def test_unknown_rule(self):
        self.assertRaises(InvalidInputError, choose_rule, self._domain(Homogeneity.BOTH), 'radial')


class TestPartition(TestCase):
    def test_nc1(self):
        result = partition(canonical.nc1())
        self.assertEqual(result.rule, Rule.HYPERBOLIC)
        self.assertEqual((result.N, result.n), (2, 1))
        self.assertEqual(result.types(), ['B0', 'B0'])
        self.assertTrue(same_lambda(result.cut_lambdas[0], 1.5))
        self.assertTrue(all(result.checks.values()))

    def test_nc1_cut_arc(self):
        cut, = partition(canonical.nc1()).cut_arcs
        self.assertEqual(len(cut.segments_marked(Mark.MINUS)), 1)
        self.assertEqual(len(cut.segments_marked(Mark.PLUS)), 1)
        self.assertEqual(len(cut.singular_points), 1)
        self.assertEqual((cut.nu, cut.xi), (1, 1))

    def test_nc2(self):
        result = partition(canonical.nc2())
        self.assertEqual((result.N, result.n), (3, 1))
        cut, = result.cut_arcs
        self.assertEqual(len(cut.segments_marked(Mark.MINUS)), 2)
        self.assertEqual((cut.nu, cut.xi), (2, 1))
        self.assertTrue(result.checks['at_most_2k_elements'])

    def test_elliptic_rule(self):
        result = partition(canonical.bump())
        self.assertEqual(result.rule, Rule.ELLIPTIC)
        self.assertEqual((result.N, result.n), (2, 1))

    def test_elementary_domain(self):
        result = partition(canonical.a2())
        self.assertEqual((result.N, result.n), (1, 0))
        self.assertEqual(result.types(), ['A2'])

    def test_logs(self):
        logger = Mock()
        partition(canonical.nc1(), logger=logger)
        self.assertTrue(logger.info.called)
        self.assertFalse(logger.warning.called)


class TestMotionRegion(TestCase):
    def setUp(self):
        self._domain = canonical.nc1()

    def test_whole_domain(self):
        region = motion_region(self._domain, 0.5)
        self.assertEqual(len(region.components), 1)
        self.assertEqual(region.singular_counts, [1])
        self.assertEqual(region.components[0].chi, 1)

    def test_upper_piece(self):
        region = motion_region(self._domain, 1.6)
        self.assertEqual(region.singular_counts, [0])

    def test_induced_partition(self):
        result = partition(self._domain)
        region = motion_region(self._domain, 0.35, partition_result=result)
        self.assertEqual(len(region.components), 1)
        self.assertEqual(len(region.induced_partition), 2)

    def test_empty(self):
        self.assertTrue(motion_region(canonical.a2(), 0.0).empty)

    def test_above_a(self):
        self.assertRaises(InvalidInputError, motion_region, self._domain, 2.5)


class TestCriticalLevels(TestCase):
    def test_critical_lambdas(self):
        values = critical_lambdas(canonical.nc1())
        expected = [0.0, 0.3, 0.4, 1.0, 1.2, 1.5, 1.8]
        self.assertEqual(len(values), len(expected))
        for value, lam in zip(values, expected):
            self.assertAlmostEqual(value, lam)

    def test_default_epsilon(self):
        self.assertAlmostEqual(default_epsilon(canonical.nc1()), 0.025)


class TestStrip(TestCase):
    def setUp(self):
        self._domain = canonical.nc1()
        self._partition = partition(self._domain)

    def test_counts(self):
        strip = arc_neighborhood(self._domain, self._partition, 0)
        self.assertEqual((strip.nu, strip.xi), (1, 1))
        self.assertEqual(len(strip.pieces()), 2)
        self.assertAlmostEqual(strip.epsilon, 0.025)

    def test_wide_strip(self):
        self.assertRaises(DomainError, arc_neighborhood, self._domain, self._partition, 0, 0.35)

    def test_empty_width(self):
        self.assertRaises(InvalidInputError, arc_neighborhood, self._domain, self._partition, 0, 0.0)

    def test_no_cuts(self):
        self.assertEqual(arc_neighborhood(canonical.a2(), partition(canonical.a2()), 0), [])


class TestEquivalence(TestCase):
    def test_adjacency_graph(self):
        graph = adjacency_graph(partition(canonical.nc1()))
        self.assertEqual(graph.number_of_nodes(), 2)
        self.assertEqual(graph.number_of_edges(), 1)
        (_, _, data), = graph.edges(data=True)
        self.assertEqual(data['singular'], 1)

    def test_self(self):
        self.assertTrue(equivalent(canonical.nc1(), canonical.nc1()))

    def test_mirror(self):
        self.assertTrue(equivalent(canonical.nc2(), mirror_domain(canonical.nc2())))

    def test_singular_point_placement(self):
        self.assertFalse(equivalent(canonical.bump(), canonical.step()))

    def test_different_sizes(self):
        self.assertFalse(equivalent(canonical.nc1(), canonical.nc2()))
