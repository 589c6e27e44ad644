#!/usr/bin/python
# -*- coding: utf-8 -*-
"""
YAML domain files

    family: {a: 2.0, b: 1.0}
    name: A2
    decomposition: hyperbolic
    arcs:
      - {lambda: 0.0, kind: ellipse, branch: full, range: [1.0, 2.0], signs: [1, 1], orientation: forward}
"""
import io

import yaml

from confocal_billiards.domain import BilliardDomain, BoundaryArc, Orientation, Homogeneity
from confocal_billiards.exceptions import ParseError, InvalidInputError
from confocal_billiards.geometry import ConfocalFamily, QuadricRef, Branch

DECOMPOSITION_RULES = ('hyperbolic', 'elliptic')


def _require(mapping, key, context):
    if not isinstance(mapping, dict) or key not in mapping:
        raise ParseError('Missing key "{0}" in {1}'.format(key, context))
    return mapping[key]


def _number(value, context):
    if isinstance(value, bool):
        raise ParseError('{0} must be a number, got {1!r}'.format(context, value))
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ParseError('{0} must be a number, got {1!r}'.format(context, value))


def _pair(value, context):
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ParseError('{0} must be a two-element list, got {1!r}'.format(context, value))
    return _number(value[0], context), _number(value[1], context)


def _arc_from_dict(family, data, index):
    context = 'arc {0}'.format(index)
    lam = _number(_require(data, 'lambda', context), context + ' lambda')
    kind = data.get('kind')
    branch = data.get('branch', Branch.FULL)
    orientation = data.get('orientation', Orientation.FORWARD)
    if branch not in Branch.ALL:
        raise ParseError('{0}: unknown branch {1!r}'.format(context, branch))
    if orientation not in Orientation.ALL:
        raise ParseError('{0}: unknown orientation {1!r}'.format(context, orientation))
    arc_range = _pair(_require(data, 'range', context), context + ' range')
    signs = _pair(data.get('signs', [1, 1]), context + ' signs')
    try:
        quadric = QuadricRef(family, lam, branch)
        if kind is not None and kind != quadric.kind:
            raise ParseError('{0}: kind {1} does not match lambda {2} ({3})'.format(context, kind, lam, quadric.kind))
        return BoundaryArc(quadric, arc_range, signs, orientation)
    except InvalidInputError as e:
        raise ParseError('{0}: {1}'.format(context, e))


def domain_from_dict(data):
    """
    :param data: parsed document
    :rtype: BilliardDomain
    """
    if not isinstance(data, dict):
        raise ParseError('Domain document must be a mapping')
    family_data = _require(data, 'family', 'document')
    try:
        family = ConfocalFamily(_number(_require(family_data, 'a', 'family'), 'family.a'),
                                _number(_require(family_data, 'b', 'family'), 'family.b'))
    except InvalidInputError as e:
        raise ParseError(str(e))
    arcs_data = _require(data, 'arcs', 'document')
    if not isinstance(arcs_data, list) or not arcs_data:
        raise ParseError('"arcs" must be a nonempty list')
    arcs = [_arc_from_dict(family, arc, index) for index, arc in enumerate(arcs_data)]
    homogeneity = data.get('homogeneity')
    if homogeneity is not None and homogeneity not in Homogeneity.ALL:
        raise ParseError('Unknown homogeneity tag {0!r}'.format(homogeneity))
    decomposition = data.get('decomposition')
    if decomposition is not None and decomposition not in DECOMPOSITION_RULES:
        raise ParseError('Unknown decomposition rule {0!r}'.format(decomposition))
    return BilliardDomain(family, arcs, homogeneity=homogeneity, name=data.get('name'),
                          decomposition=decomposition)


def domain_to_dict(domain):
    data = {
        'family': {'a': domain.family.a, 'b': domain.family.b},
        'arcs': [arc.to_dict() for arc in domain.arcs],
    }
    if domain.name:
        data['name'] = domain.name
    if domain.homogeneity_tag:
        data['homogeneity'] = domain.homogeneity_tag
    if domain.decomposition:
        data['decomposition'] = domain.decomposition
    return data


def loads(text):
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ParseError('Malformed domain file: {0}'.format(e))
    return domain_from_dict(data)


def load(path):
    try:
        with io.open(path, 'r', encoding='utf-8') as domain_file:
            text = domain_file.read()
    except (IOError, OSError) as e:
        raise ParseError('Cannot read domain file {0}: {1}'.format(path, e))
    return loads(text)


def dumps(domain):
    return yaml.safe_dump(domain_to_dict(domain), default_flow_style=None, sort_keys=True)


def dump(domain, path):
    with io.open(path, 'w', encoding='utf-8') as domain_file:
        domain_file.write(dumps(domain))
