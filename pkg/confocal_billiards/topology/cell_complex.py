#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
Cell complex of the neighbourhood of a critical level.

First-kind cells are the cells of the fibers at c - epsilon, c and c + epsilon. Second-kind cells
are the collars sigma x I joining a side cell sigma to the cells of the critical fiber with the
same slots.
"""
import logging
from collections import namedtuple, OrderedDict

import numpy as np

from confocal_billiards.decomposition import critical_lambdas, default_epsilon, same_lambda
from confocal_billiards.exceptions import DomainError
from confocal_billiards.grid import ChartGrid, SIDE_CORNERS
from confocal_billiards.topology.fiber_complex import build_fiber

REGULAR_GAP = 1e-9


class CellKind(object):
    FIRST = 'first'
    SECOND = 'second'


class LevelTag(object):
    BELOW = 'below_c'
    AT = 'at_c'
    ABOVE = 'above_c'

    SIDES = (BELOW, ABOVE)


Cell = namedtuple('Cell', ['id', 'dim', 'kind', 'level', 'boundary'])


class CellComplex(object):
    def __init__(self, c, epsilon, levels, fibers):
        self.c = c
        self.epsilon = epsilon
        self.levels = levels
        self.fibers = fibers
        self.cells = OrderedDict()

    def add(self, cell):
        self.cells[cell.id] = cell

    @property
    def chi(self):
        return sum((-1) ** cell.dim for cell in self.cells.values())

    def counts(self):
        """
        Number of cells per (dimension, kind), stable order
        """
        result = OrderedDict()
        for dim in range(4):
            for kind in (CellKind.FIRST, CellKind.SECOND):
                result[(dim, kind)] = 0
        for cell in self.cells.values():
            result[(cell.dim, cell.kind)] += 1
        return result

    def dimension_counts(self):
        return [sum(1 for cell in self.cells.values() if cell.dim == dim) for dim in range(4)]

    def boundary_violations(self):
        """
        Cells whose boundary reaches a missing cell or one of the same or higher dimension
        """
        violations = []
        for cell in self.cells.values():
            for part in cell.boundary:
                other = self.cells.get(part)
                if other is None or other.dim >= cell.dim:
                    violations.append((cell.id, part))
        return violations

    @property
    def valid(self):
        return not self.boundary_violations()

    def __repr__(self):
        return 'CellComplex(c={0}, cells per dimension {1}, chi={2})'.format(self.c, self.dimension_counts(), self.chi)


def _representatives(labels):
    _, first = np.unique(labels, return_index=True)
    return first


def _focus_corner(cell, grid):
    return 0 if cell[1] in (0, grid.nv // 2) else 2


class _FiberCells(object):
    """
    Ids and boundaries of the cells of one fiber
    """

    def __init__(self, tag, fiber):
        self.tag = tag
        self.fiber = fiber
        self.slot_count = 4 * fiber.face_count
        self.side_rep = _representatives(fiber.side_labels) if self.slot_count else []
        self.vertex_rep = _representatives(fiber.vertex_labels) if len(fiber.vertex_labels) else []

    def vertex(self, label):
        return self.tag, 'v', int(label)

    def side(self, label):
        return self.tag, 'e', int(label)

    def face(self, face):
        return self.tag, 'f', int(face)

    def whisker(self, index, sign):
        return self.tag, 'w', index, sign

    def blowup(self, index):
        return self.tag, 'b', index

    def cells(self):
        fiber = self.fiber
        grid = fiber.grid
        labels = fiber.vertex_labels
        for label in range(fiber.vertex_count):
            yield Cell(self.vertex(label), 0, CellKind.FIRST, self.tag, ())
        for label in range(fiber.side_class_count):
            slot = int(self.side_rep[label])
            face, side = slot // 4, slot % 4
            boundary = tuple(self.vertex(labels[face * 4 + corner]) for corner in SIDE_CORNERS[side])
            yield Cell(self.side(label), 1, CellKind.FIRST, self.tag, boundary)
        for index in range(len(fiber.whiskers)):
            for sign in (1, -1):
                boundary = tuple(self.vertex(labels[fiber.whisker_slot(index, sign, end)]) for end in (0, 1))
                yield Cell(self.whisker(index, sign), 1, CellKind.FIRST, self.tag, boundary)
        for index, (first, second) in enumerate(fiber.blowups):
            boundary = tuple(self.vertex(fiber.corner_class(fiber.face_id(cell, 0), _focus_corner(cell, grid)))
                             for cell in (first, second))
            yield Cell(self.blowup(index), 1, CellKind.FIRST, self.tag, boundary)
        for face in range(fiber.face_count):
            boundary = tuple(self.side(fiber.side_class(face, side)) for side in range(4))
            boundary += tuple(self.vertex(fiber.corner_class(face, corner)) for corner in range(4))
            yield Cell(self.face(face), 2, CellKind.FIRST, self.tag, boundary)

    def matching(self, cell_id, critical):
        """
        Cells of the critical fiber sharing a slot with a cell of this fiber
        """
        fiber = self.fiber
        target = critical.fiber
        kind = cell_id[1]
        if kind in ('v', 'e', 'f'):
            if kind == 'f':
                face = cell_id[2]
            else:
                rep = self.vertex_rep if kind == 'v' else self.side_rep
                slot = int(rep[cell_id[2]])
                if slot >= self.slot_count:
                    return self._matching_whisker_end(slot, critical)
                face = slot // 4
            cell, beta = fiber.face_of(face)
            if tuple(cell) not in target.cell_index:
                return ()
            other = target.face_id(cell, beta)
            if kind == 'f':
                return critical.face(other),
            slot_in_face = int(rep[cell_id[2]]) % 4
            if kind == 'v':
                return critical.vertex(target.corner_class(other, slot_in_face)),
            return critical.side(target.side_class(other, slot_in_face)),
        if kind == 'w':
            key = fiber.whiskers[cell_id[2]].key
            for index, whisker in enumerate(target.whiskers):
                if whisker.key == key:
                    return critical.whisker(index, cell_id[3]),
        return ()

    def _matching_whisker_end(self, slot, critical):
        fiber = self.fiber
        offset = slot - self.slot_count
        index, rest = divmod(offset, 4)
        sign = 1 if rest < 2 else -1
        key = fiber.whiskers[index].key
        for other_index, whisker in enumerate(critical.fiber.whiskers):
            if whisker.key == key:
                target_slot = critical.fiber.whisker_slot(other_index, sign, rest % 2)
                return critical.vertex(critical.fiber.vertex_labels[target_slot]),
        return ()


def _collar_id(cell_id):
    return ('collar',) + tuple(cell_id)


def build_cell_complex(domain, c, epsilon=None, resolution=32, logger=None):
    """
    Cells of the fibers at c - epsilon, c, c + epsilon and the collars between them
    :param c: a critical value of the caustic integral on the domain
    :rtype: CellComplex
    """
    logger = logger or logging.getLogger(__name__)
    family = domain.family
    critical = critical_lambdas(domain)
    if not any(abs(value - c) <= REGULAR_GAP for value in critical):
        raise DomainError('{0} is not a critical value of {1}'.format(c, domain.name))
    epsilon = default_epsilon(domain) if epsilon is None else epsilon
    if epsilon <= 0:
        raise DomainError('Collar width must be positive, got {0}'.format(epsilon))
    for value in critical:
        if not same_lambda(value, c) and abs(value - c) <= epsilon:
            raise DomainError('Collar of width {0} around {1} reaches the critical value {2}'.format(
                epsilon, c, value))
    levels = OrderedDict([(LevelTag.BELOW, c - epsilon), (LevelTag.AT, c)])
    if c + epsilon <= family.a:
        levels[LevelTag.ABOVE] = c + epsilon
    grid = ChartGrid.build(domain, lambdas=list(levels.values()), resolution=resolution, logger=logger)
    fibers = OrderedDict((tag, build_fiber(grid, level, logger=logger)) for tag, level in levels.items())
    result = CellComplex(c, epsilon, levels, fibers)
    cells = OrderedDict((tag, _FiberCells(tag, fiber)) for tag, fiber in fibers.items())
    for fiber_cells in cells.values():
        for cell in fiber_cells.cells():
            result.add(cell)
    critical_cells = cells[LevelTag.AT]
    for tag in LevelTag.SIDES:
        if tag not in cells:
            continue
        side_cells = cells[tag]
        for cell in list(side_cells.cells()):
            boundary = (cell.id,) + side_cells.matching(cell.id, critical_cells)
            boundary += tuple(_collar_id(part) for part in cell.boundary)
            result.add(Cell(_collar_id(cell.id), cell.dim + 1, CellKind.SECOND, tag, boundary))
    logger.info('Cell complex of {0} at c={1}: {2}'.format(domain.name, c, result))
    return result
