from unittest import TestCase

from mock import Mock

from confocal_billiards import canonical
from confocal_billiards.decomposition import Mark, Rule, partition
from confocal_billiards.exceptions import DomainError
from confocal_billiards.topology.fiber_graph import (PointColor, Side, build_Gr, critical_quotient_graph, edge_label,
                                                     saddle_graphs, side_level)


class TestSideLevel(TestCase):
    def test_hyperbolic_cut(self):
        cut = Mock(lambda_i=1.5, rule=Rule.HYPERBOLIC)
        self.assertAlmostEqual(side_level(cut, Side.BELOW, 0.1), 1.4)
        self.assertAlmostEqual(side_level(cut, Side.ABOVE, 0.1), 1.6)
        self.assertEqual(side_level(cut, Side.AT, 0.1), 1.5)

    def test_elliptic_cut(self):
        cut = Mock(lambda_i=0.3, rule=Rule.ELLIPTIC)
        self.assertAlmostEqual(side_level(cut, Side.BELOW, 0.1), 0.4)
        self.assertAlmostEqual(side_level(cut, Side.ABOVE, 0.1), 0.2)

    def test_edge_label(self):
        self.assertEqual(edge_label('up', 0, 2), 'lambda^up_0,2')


class TestGr(TestCase):
    def setUp(self):
        self._domain = canonical.nc1()
        self._partition = partition(self._domain)

    def test_nc1_graph(self):
        graph = build_Gr(self._domain, self._partition, 0)
        self.assertEqual((graph.vertex_count, graph.edge_count, graph.chi), (4, 6, -2))
        self.assertEqual(len(graph.punctured_vertices), 1)
        self.assertEqual(len(graph.segments_marked(Mark.MINUS)), 1)
        self.assertEqual(len(graph.segments_marked(Mark.PLUS)), 1)
        colors = sorted(vertex.color for vertex in graph.vertices.values())
        self.assertEqual(colors, [PointColor.BLACK, PointColor.BLACK, PointColor.WHITE, PointColor.WHITE])

    def test_critical_quotient(self):
        graph = build_Gr(self._domain, self._partition, 0)
        quotient = critical_quotient_graph(graph, self._partition.grid)
        self.assertEqual((quotient.vertex_count, quotient.edge_count, quotient.chi), (3, 4, -1))
        self.assertTrue(quotient.critical)

    def test_edges_by_slot(self):
        graph = build_Gr(self._domain, self._partition, 0)
        minus = [index for index, segment in enumerate(graph.segments) if segment.mark == Mark.MINUS][0]
        right, left = graph.edge(minus, '1'), graph.edge(minus, '3')
        self.assertNotEqual({right.source, right.target}, {left.source, left.target})
        self.assertIsNone(graph.edge(minus, 'up'))

    def test_inventory_is_level_independent(self):
        near = build_Gr(self._domain, self._partition, 0, epsilon=0.01)
        far = build_Gr(self._domain, self._partition, 0, epsilon=0.02)
        self.assertEqual(near.inventory(), far.inventory())

    def test_to_networkx(self):
        graph = build_Gr(self._domain, self._partition, 0).to_networkx()
        self.assertEqual(graph.number_of_nodes(), 4)
        self.assertEqual(graph.number_of_edges(), 6)

    def test_unknown_side(self):
        self.assertRaises(DomainError, build_Gr, self._domain, self._partition, 0, 'sideways')

    def test_saddle_graphs(self):
        below, at, above = saddle_graphs(self._domain, self._partition, 0)
        self.assertEqual([graph.side for graph in (below, at, above)], [Side.BELOW, Side.AT, Side.ABOVE])
        self.assertEqual(below.inventory(), above.inventory())
