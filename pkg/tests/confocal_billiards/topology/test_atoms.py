from unittest import TestCase

from mock import Mock

from confocal_billiards import canonical
from confocal_billiards.decomposition import partition
from confocal_billiards.domain import Series
from confocal_billiards.exceptions import DomainError
from confocal_billiards.topology.atoms import (AtomName, AtomReport, HalfName, a_star_atom, assemble_saddle_level,
                                               b_atom, elementary_atom, genus_conservation_check, identify_atom,
                                               nonsaddle_atom, saddle_atom, torus_cylinder)
from confocal_billiards.topology.fiber_graph import Side


class TestTwoAtoms(TestCase):
    def test_b_atom(self):
        atom = b_atom(1)
        self.assertEqual(atom.name, AtomName.B)
        self.assertEqual((len(atom.vertices), len(atom.edges), atom.chi), (1, 2, -1))
        self.assertEqual(atom.boundary_counts(), (2, 1))
        self.assertEqual(atom.vertex_degrees(), [4])
        self.assertTrue(atom.valid)

    def test_b_series(self):
        atom = b_atom(3)
        self.assertEqual(atom.name, 'B_3')
        self.assertEqual((len(atom.vertices), len(atom.edges), atom.chi), (3, 6, -3))
        self.assertEqual(atom.boundary_counts(), (4, 1))
        self.assertTrue(atom.valid)
        self.assertEqual(sorted(set(atom.top_bottom_split.values())), ['bottom', 'top'])

    def test_b_atom_needs_a_vertex(self):
        self.assertRaises(DomainError, b_atom, 0)

    def test_a_star(self):
        atom = a_star_atom()
        self.assertEqual((len(atom.vertices), len(atom.edges)), (1, 2))
        self.assertEqual(atom.boundary_counts(), (1, 1))
        self.assertTrue(atom.valid)

    def test_torus_cylinder(self):
        atom = torus_cylinder()
        self.assertEqual(atom.chi, 0)
        self.assertEqual(atom.boundary_counts(), (1, 1))
        self.assertTrue(atom.valid)

    def test_annuli_condition(self):
        atom = b_atom(1)
        atom.annuli.pop()
        self.assertFalse(atom.annuli_condition())
        self.assertFalse(atom.valid)

    def test_graph(self):
        graph = b_atom(2).graph()
        self.assertEqual(graph.number_of_nodes(), 2)
        self.assertEqual(graph.number_of_edges(), 4)


class TestIdentifyAtom(TestCase):
    def test_no_focal_pieces(self):
        self.assertEqual(identify_atom(0, 1, 1), AtomName.TORUS_CYLINDER)

    def test_b_series(self):
        self.assertEqual(identify_atom(1, 2, 1), AtomName.B)
        self.assertEqual(identify_atom(2, 1, 3), 'B_2')

    def test_a_star(self):
        self.assertEqual(identify_atom(1, 1, 1), AtomName.A_STAR)

    def test_unknown(self):
        logger = Mock()
        self.assertEqual(identify_atom(2, 2, 2, logger), AtomName.UNKNOWN)
        logger.warning.assert_called_once()


class TestElementaryAtom(TestCase):
    def test_a_series(self):
        self.assertEqual(elementary_atom(Mock(tag='A2', series=Series.A), 1).name, AtomName.B)
        self.assertEqual(elementary_atom(Mock(tag='A0', series=Series.A), 1).name, AtomName.B)
        self.assertEqual(elementary_atom(Mock(tag='A1', series=Series.A), 1).name, AtomName.A_STAR)

    def test_b_series(self):
        self.assertEqual(elementary_atom(Mock(tag='B1', series=Series.B), 2).name, 'B_2')
        self.assertEqual(elementary_atom(Mock(tag='B0', series=Series.B), 0).name, AtomName.TORUS_CYLINDER)


class TestNonsaddleAtom(TestCase):
    def setUp(self):
        self._domain = canonical.nc1()
        self._partition = partition(self._domain)

    def test_vertex_level(self):
        report = nonsaddle_atom(self._domain, self._partition, 0)
        self.assertEqual(report.kind, AtomReport.NONSADDLE)
        self.assertAlmostEqual(report.critical_value, 1.5)
        self.assertTrue(report.passed, report.failed_checks())
        self.assertEqual((report.annotations['nu'], report.annotations['xi']), (1, 1))
        self.assertEqual(report.gluings[Side.BELOW].cylinder_count, 4)
        self.assertEqual(report.gluings[Side.AT].cylinder_count, 2)
        self.assertEqual(len(report.graphs), 2)
        self.assertTrue(report.gluing_table)

    def test_cut_at_saddle_level(self):
        partition_result = Mock(cut_arcs=[Mock(lambda_i=1.0)])
        self.assertRaises(DomainError, nonsaddle_atom, self._domain, partition_result, 0)


class TestSaddleAtom(TestCase):
    def test_ellipse(self):
        report = saddle_atom(canonical.a2())
        self.assertEqual(report.kind, AtomReport.SADDLE)
        self.assertEqual(len(report.atoms), 1)
        element = report.atoms[0]
        self.assertEqual(element.atom.name, AtomName.B)
        self.assertEqual((element.m, element.t_below, element.t_above), (1, 2, 1))
        self.assertEqual(element.identified, AtomName.B)
        self.assertTrue(report.passed, report.failed_checks())
        self.assertEqual((report.annotations['chi_top'], report.annotations['chi_bottom']), (0, 0))
        self.assertEqual(report.annotations['chi_focal_graph'], -2)
        self.assertEqual(report.assembly.focal.foci, 2)
        self.assertEqual(report.annotations['chi_assembled'], 0)
        self.assertTrue(report.checks['assembled_chi'])
        self.assertTrue(report.checks['complex_matches_assembly'])

    def test_nonconvex_domain(self):
        report = saddle_atom(canonical.nc1(), resolution=16)
        self.assertEqual(report.annotations['chi_assembled'], -2)
        self.assertEqual((report.annotations['chi_top'], report.annotations['chi_bottom']), (-2, 0))
        self.assertEqual(report.annotations['chi_focal_graph'], 0)
        self.assertIn('cut_0_at_top', report.gluings)
        self.assertNotIn('cut_0_at_bottom', report.gluings)
        self.assertTrue(report.checks['top_chi'])
        self.assertTrue(report.checks['assembled_chi'])
        self.assertTrue(report.checks['complex_matches_assembly'])

    def test_elementary_lookup(self):
        expected = {'A0': AtomName.B, 'A1': AtomName.A_STAR, 'A2': AtomName.B, 'B1': AtomName.B, 'B2': 'B_2',
                    "B'2": AtomName.B}
        for tag, builder in canonical.ELEMENTARY.items():
            report = saddle_atom(builder(), resolution=16)
            element, = report.atoms
            name = expected.get(tag, AtomName.TORUS_CYLINDER)
            self.assertEqual(element.atom.name, name, tag)
            self.assertEqual(element.identified, name, tag)
            self.assertTrue(report.checks['assembled_chi'], tag)


class TestSaddleAssembly(TestCase):
    def test_ellipse(self):
        domain = canonical.a2()
        assembly = assemble_saddle_level(domain, partition(domain), resolution=16)
        self.assertEqual(list(assembly.halves), [HalfName.TOP, HalfName.BOTTOM])
        self.assertEqual(assembly.focal.boundary_chi, -4)
        self.assertEqual(assembly.chi, assembly.oracle_chi)
        self.assertTrue(all(assembly.checks.values()))

    def test_focal_line_on_the_boundary(self):
        domain = canonical.a2_primed()
        assembly = assemble_saddle_level(domain, partition(domain), resolution=16)
        self.assertEqual(assembly.focal.keys, [])
        self.assertEqual(assembly.halves[HalfName.BOTTOM].chi, 0)
        self.assertEqual(assembly.chi, assembly.halves[HalfName.TOP].chi)

    def test_logs(self):
        logger = Mock()
        domain = canonical.a2()
        assemble_saddle_level(domain, partition(domain), resolution=16, logger=logger)
        self.assertTrue(logger.info.called)


class TestGenusConservation(TestCase):
    def test_no_vertex_on_focal_line(self):
        result = genus_conservation_check(canonical.nc1())
        self.assertEqual((result.below, result.above), (1, 1))
        self.assertFalse(result.vertex_on_focal_line)
        self.assertTrue(result.passed)

    def test_vertex_on_focal_line(self):
        result = genus_conservation_check(canonical.nc3())
        self.assertEqual((result.below, result.above), (0, 2))
        self.assertTrue(result.vertex_on_focal_line)
        self.assertTrue(result.passed)
