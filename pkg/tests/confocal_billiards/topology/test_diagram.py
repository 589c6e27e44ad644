from unittest import TestCase

from mock import Mock

from confocal_billiards import canonical
from confocal_billiards.topology.diagram import CriticalKind, bifurcation_diagram


class TestBifurcationDiagram(TestCase):
    def test_ellipse(self):
        diagram = bifurcation_diagram(canonical.a2())
        self.assertEqual([(value.lam, value.kind) for value in diagram],
                         [(0.0, CriticalKind.LOCAL_MIN), (1.0, CriticalKind.SADDLE_B), (2.0, CriticalKind.LOCAL_MAX)])

    def test_nc1(self):
        diagram = bifurcation_diagram(canonical.nc1())
        expected = [
            (0.0, CriticalKind.LOCAL_MIN),
            (0.3, CriticalKind.SINGULAR_VERTEX),
            (0.4, CriticalKind.LOCAL_MIN),
            (1.0, CriticalKind.SADDLE_B),
            (1.2, CriticalKind.LOCAL_MAX),
            (1.5, CriticalKind.SINGULAR_VERTEX),
            (1.8, CriticalKind.LOCAL_MAX),
        ]
        self.assertEqual(len(diagram), len(expected))
        for value, (lam, kind) in zip(diagram, expected):
            self.assertAlmostEqual(value.lam, lam)
            self.assertEqual(value.kind, kind)

    def test_sources(self):
        diagram = bifurcation_diagram(canonical.nc1())
        self.assertIn(('family', 'b'), diagram.critical_values[3].sources)
        sources = diagram.critical_values[1].sources
        self.assertEqual(len(sources), 1)
        self.assertEqual(sources[0][0], 'corner')

    def test_kind_of(self):
        diagram = bifurcation_diagram(canonical.nc1())
        self.assertEqual(diagram.kind_of(1.5), CriticalKind.SINGULAR_VERTEX)
        self.assertIsNone(diagram.kind_of(0.7))

    def test_regular_levels(self):
        diagram = bifurcation_diagram(canonical.a2())
        self.assertEqual(diagram.regular_levels(per_gap=1), [0.5, 1.5])

    def test_logs(self):
        logger = Mock()
        bifurcation_diagram(canonical.a2(), logger=logger)
        logger.debug.assert_called_once()

    def test_positional_logger(self):
        logger = Mock()
        bifurcation_diagram(canonical.a2(), logger)
        logger.debug.assert_called_once()
