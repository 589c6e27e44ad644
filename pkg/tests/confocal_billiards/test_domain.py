import math
from unittest import TestCase

from confocal_billiards import canonical
from confocal_billiards.domain import (AngleClass, BilliardDomain, Homogeneity, Orientation, classify_elementary,
                                       complexity, ellipse_arc, homogeneity_class, mirror_domain, split_arc, validate)
from confocal_billiards.exceptions import DomainError, InvalidInputError
from confocal_billiards.geometry import ConfocalFamily


class TestBoundaryArc(TestCase):
    def setUp(self):
        self._family = ConfocalFamily(2, 1)

    def test_ellipse_arc_orientation(self):
        arc = ellipse_arc(self._family, 0.0, 2.0, 1.0)
        self.assertEqual(arc.range, (1.0, 2.0))
        self.assertEqual(arc.orientation, Orientation.BACKWARD)
        self.assertAlmostEqual(arc.start[0], 0.0)
        self.assertAlmostEqual(arc.start[1], 1.0)

    def test_contains(self):
        arc = ellipse_arc(self._family, 0.0, 1.0, 2.0)
        self.assertTrue(arc.contains((0.0, 1.0)))
        self.assertFalse(arc.contains((0.0, -1.0)))
        self.assertFalse(arc.contains((0.0, 0.5)))

    def test_split(self):
        first, second = ellipse_arc(self._family, 0.0, 1.0, 2.0).split(1.5)
        self.assertEqual(first.range, (1.0, 1.5))
        self.assertEqual(second.range, (1.5, 2.0))

    def test_split_outside(self):
        self.assertRaises(InvalidInputError, ellipse_arc(self._family, 0.0, 1.0, 2.0).split, 2.5)

    def test_unordered_range(self):
        arc = ellipse_arc(self._family, 0.0, 1.0, 2.0)
        self.assertRaises(InvalidInputError, type(arc), arc.quadric, (2.0, 1.0), (1, 1))


class TestDomain(TestCase):
    def test_full_ellipse(self):
        domain = canonical.a2()
        self.assertTrue(validate(domain).valid)
        self.assertEqual(complexity(domain), 0)
        self.assertEqual(classify_elementary(domain).tag, 'A2')

    def test_full_ellipse_meets_focal_rays(self):
        self.assertEqual(homogeneity_class(canonical.a2()), Homogeneity.NON_HOMOGENEOUS)

    def test_domain_off_focal_line(self):
        self.assertEqual(homogeneity_class(canonical.nc1()), Homogeneity.BOTH)

    def test_nc1(self):
        domain = canonical.nc1()
        self.assertTrue(validate(domain).valid)
        self.assertEqual(complexity(domain), 1)
        corner, = domain.singular_corners
        self.assertEqual(corner.angle_class, AngleClass.THREE_QUARTER)
        lambda_e, lambda_h = domain.corner_coords(corner)
        self.assertAlmostEqual(lambda_e, 0.3)
        self.assertAlmostEqual(lambda_h, 1.5)

    def test_nc2(self):
        self.assertEqual(complexity(canonical.nc2()), 2)

    def test_nc3(self):
        self.assertEqual(complexity(canonical.nc3()), 2)

    def test_classify_non_elementary(self):
        self.assertRaises(DomainError, classify_elementary, canonical.nc1())

    def test_elementary_classes(self):
        for tag, builder in canonical.ELEMENTARY.items():
            domain = builder()
            self.assertTrue(validate(domain).valid, tag)
            self.assertEqual(classify_elementary(domain).tag, tag)

    def test_quadrilateral_is_b0(self):
        domain = canonical.rectilinear_domain(canonical.default_family(),
                                              [(0.0, 1.2), (0.0, 1.8), (0.5, 1.8), (0.5, 1.2)])
        self.assertEqual(classify_elementary(domain).tag, 'B0')

    def test_closure_violation(self):
        domain = canonical.nc1()
        broken = BilliardDomain(domain.family, domain.arcs[:-1], corners=[])
        report = validate(broken)
        self.assertFalse(report.valid)
        self.assertEqual(report.kinds(), ['closure'])

    def test_homogeneity_tag_mismatch(self):
        domain = canonical.nc1()
        tagged = BilliardDomain(domain.family, domain.arcs, homogeneity=Homogeneity.HYPERBOLIC)
        self.assertEqual(validate(tagged).kinds(), ['homogeneity'])

    def test_mirror(self):
        mirrored = mirror_domain(canonical.nc1())
        self.assertTrue(validate(mirrored).valid)
        self.assertEqual(complexity(mirrored), 1)
        self.assertEqual(homogeneity_class(mirrored), Homogeneity.BOTH)

    def test_split_arc(self):
        domain = canonical.nc1()
        refined = split_arc(domain, 0, 1.5)
        self.assertEqual(len(refined.arcs), len(domain.arcs) + 1)
        self.assertTrue(validate(refined).valid)
        self.assertEqual(complexity(refined), 1)
        self.assertEqual(homogeneity_class(refined), homogeneity_class(domain))

    def test_classification_stable_under_mirror(self):
        for tag in ('A1', 'B1', "B'1"):
            mirrored = mirror_domain(canonical.ELEMENTARY[tag]())
            self.assertEqual(classify_elementary(mirrored).tag, tag)

    def test_area(self):
        self.assertAlmostEqual(canonical.a2().area(samples=2048), math.pi * math.sqrt(2.0), places=4)
