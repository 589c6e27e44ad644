import os
import shutil
import tempfile
from unittest import TestCase

from confocal_billiards import canonical, domain_file
from confocal_billiards.domain import complexity, validate
from confocal_billiards.exceptions import ParseError

DOMAINS_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', '..', 'domains')

HALF_ELLIPSE = """
name: half
family: {a: 2.0, b: 1.0}
arcs:
  - {lambda: 0.0, kind: ellipse, range: [1.0, 2.0], signs: [1, 1]}
"""


class TestDomainFile(TestCase):
    def test_loads(self):
        domain = domain_file.loads(HALF_ELLIPSE)
        self.assertEqual(domain.name, 'half')
        self.assertEqual(domain.family.a, 2.0)
        self.assertEqual(len(domain.arcs), 1)
        self.assertEqual(domain.arcs[0].range, (1.0, 2.0))

    def test_sample_files(self):
        a2 = domain_file.load(os.path.join(DOMAINS_PATH, 'a2.yml'))
        self.assertTrue(validate(a2).valid)
        self.assertEqual(complexity(a2), 0)
        nc1 = domain_file.load(os.path.join(DOMAINS_PATH, 'nc1.yml'))
        self.assertTrue(validate(nc1).valid)
        self.assertEqual(complexity(nc1), 1)
        nc2 = domain_file.load(os.path.join(DOMAINS_PATH, 'nc2.yml'))
        self.assertEqual(complexity(nc2), 2)

    def test_missing_family(self):
        self.assertRaises(ParseError, domain_file.loads, 'arcs: []')

    def test_not_a_mapping(self):
        self.assertRaises(ParseError, domain_file.loads, '- 1\n- 2\n')

    def test_malformed_yaml(self):
        self.assertRaises(ParseError, domain_file.loads, 'family: {a: 2.0, b: 1.0\n')

    def test_bad_family(self):
        self.assertRaises(ParseError, domain_file.loads, HALF_ELLIPSE.replace('a: 2.0', 'a: 0.5'))

    def test_kind_mismatch(self):
        self.assertRaises(ParseError, domain_file.loads, HALF_ELLIPSE.replace('kind: ellipse', 'kind: hyperbola'))

    def test_unknown_orientation(self):
        text = HALF_ELLIPSE.replace('signs: [1, 1]', 'signs: [1, 1], orientation: sideways')
        self.assertRaises(ParseError, domain_file.loads, text)

    def test_bad_range(self):
        self.assertRaises(ParseError, domain_file.loads, HALF_ELLIPSE.replace('[1.0, 2.0]', '[1.0]'))
        self.assertRaises(ParseError, domain_file.loads, HALF_ELLIPSE.replace('[1.0, 2.0]', '[yes, 2.0]'))

    def test_unknown_decomposition(self):
        self.assertRaises(ParseError, domain_file.loads, HALF_ELLIPSE + 'decomposition: radial\n')

    def test_missing_file(self):
        self.assertRaises(ParseError, domain_file.load, os.path.join(DOMAINS_PATH, 'missing.yml'))

    def test_dump_and_load(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, 'nc2.yml')
            original = canonical.nc2()
            domain_file.dump(original, path)
            loaded = domain_file.load(path)
        finally:
            shutil.rmtree(directory)
        self.assertEqual(loaded.name, 'nc2')
        self.assertEqual([arc.to_dict() for arc in loaded.arcs], [arc.to_dict() for arc in original.arcs])
        self.assertEqual(complexity(loaded), 2)
