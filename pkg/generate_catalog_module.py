#!/usr/bin/env python
"""This takes the ``catalog.yaml`` file and writes the ``hankelab.catalog``
Python module::

    python generate_catalog_module.py catalog.yaml > hankelab/catalog.py

Every closed-form formula is checked for missing or unknown keys and
evaluated at k = 0.5 before it is written out.
"""

import sys
import os
import math
from datetime import datetime
from collections import OrderedDict
import yaml
import yaml.constructor


# Families and tags are listed in a meaningful order; load mappings in order.
# Based on https://gist.github.com/844388
def construct_ordereddict(loader, node):
    data = OrderedDict()
    yield data
    value = construct_mapping(loader, node)
    data.update(value)

def construct_mapping(self, node, deep=False):
    if isinstance(node, yaml.MappingNode):
        self.flatten_mapping(node)
    else:
        raise yaml.constructor.ConstructorError(
            None, None, 'expected a mapping node, but found %s' % node.id, node.start_mark)

    mapping = OrderedDict()
    for key_node, value_node in node.value:
        key = self.construct_object(key_node, deep=deep)
        try:
            hash(key)
        except TypeError as exc:
            raise yaml.constructor.ConstructorError(
                'while constructing a mapping', node.start_mark,
                'found unacceptable key (%s)' % exc, key_node.start_mark)
        value = self.construct_object(value_node, deep=deep)
        mapping[key] = value
    return mapping


class CatalogLoader(yaml.SafeLoader):
    pass

CatalogLoader.add_constructor('tag:yaml.org,2002:map', construct_ordereddict)


def load(path):
    with open(path, 'r') as f:
        return yaml.load(f, Loader=CatalogLoader)


FORMULA_KEYS = ('coef', 'pi', 'k', 'K', 'index', 'nome', 'sign', 'damping')
OPTIONAL_KEYS = {'zero_scale': 1.0}

# k = 0.5 with its quarter period and nome, enough to evaluate a formula.
SAMPLE_K, SAMPLE_QUARTER, SAMPLE_NOME = 0.5, 1.685750354812596, 0.017972387008967
SAMPLE_INDICES = (0, 1, 2, 5)


def evaluate(data, m, lattice):
    if lattice == 'odd':
        j, idx = m + 0.5, 2 * m + 1
    else:
        j, idx = float(m), m
    value = (data['coef'] * math.pi ** data['pi'] * SAMPLE_K ** data['k']
             * SAMPLE_QUARTER ** data['K'] * float(idx) ** data['index']
             * SAMPLE_NOME ** (data['nome'] * j)
             * (1.0 + data['sign'] * SAMPLE_NOME ** (2 * j)) ** data['damping'])
    return value * data['zero_scale'] if m == 0 else value


def formula(data, lattice, first=0):
    """Closed-form constants are stored as plain dicts with every key set,
    so the library never has to guess a default exponent. Each formula is
    evaluated at a sample modulus from index ``first`` on and must give a
    finite positive number there."""
    missing = [key for key in FORMULA_KEYS if key not in data]
    if missing:
        raise ValueError('formula is missing %s' % ', '.join(missing))
    unknown = [key for key in data if key not in FORMULA_KEYS and key not in OPTIONAL_KEYS]
    if unknown:
        raise ValueError('formula has unknown keys %s' % ', '.join(unknown))
    result = {key: data[key] for key in FORMULA_KEYS}
    for key, default in OPTIONAL_KEYS.items():
        result[key] = float(data.get(key, default))
    for m in SAMPLE_INDICES:
        if m < first:
            continue
        try:
            value = evaluate(result, m, lattice)
        except (ZeroDivisionError, OverflowError, ValueError) as exc:
            raise ValueError('formula %r fails at m=%d: %s' % (dict(data), m, exc))
        if not (math.isfinite(value) and value > 0.0):
            raise ValueError('formula %r gives %r at m=%d' % (dict(data), value, m))
    return result


def build_catalog(data):
    """Turn the parsed YAML into the three structures of the module:
    ``FAMILIES``, ``OPERATORS`` and ``TAG_ALIASES``.
    """
    families = OrderedDict([
        (family_id, {
            'letter': family['letter'],
            'jacobi': list(family['jacobi']),
            'sigma': list(family['sigma']),
            'shift': list(family['shift']),
            'lattice': family['lattice'],
            'reflected': family['reflected'],
            'weight': family['weight'],
            'first_point': family['first_point'],
            'first_eigen': family['first_eigen'],
            'mass': formula(family['mass'], family['lattice'], family['first_point']),
            'generating': dict(family['generating']),
            'asymptotic': dict(family['asymptotic']),
        })
        for family_id, family in data['families'].items()
    ])

    operators = OrderedDict()
    for tag, operator in data['operators'].items():
        family = families[operator['family']]
        a, b, c = operator['weight']
        operators[tag] = {
            'family': operator['family'],
            'weight': [a, b, c],
            'xi': a,
            'eta': b + c + 2,
            'm_start': family['first_eigen'],
            'eigenvalue': formula(operator['eigenvalue'], family['lattice'], family['first_eigen']),
            'norm': formula(operator['norm'], family['lattice'], family['first_eigen']),
            'multiplier': dict(operator['multiplier']),
        }

    # Every tag resolves to itself, plus the command line spellings.
    aliases = {tag: tag for tag in operators}
    for alias, tag in data['aliases'].items():
        if tag not in operators:
            raise ValueError('alias %s points to unknown tag %s' % (alias, tag))
        aliases[alias] = tag

    return families, operators, aliases


def render_module(source, families, operators, aliases):
    # Output those structures as source code.
    import pretty
    # Make pretty support OrderedDicts better
    def print_ordereddict(obj, p, cycle):
        if cycle:
            return p.text('OrderedDict(...)')
        p.begin_group(1, 'OrderedDict([')
        keys = list(obj.keys())
        for idx, key in enumerate(keys):
            if idx:
                p.text(',')
                p.breakable()
            p.text('(')
            p.pretty(key)
            p.text(', ')
            p.pretty(obj[key])
            p.text(')')
        p.end_group(1, '])')
    pretty._type_pprinters[OrderedDict] = print_ordereddict

    return """# Generated
#  by {0}
#  from {1}
#  at {2}

from collections import OrderedDict

FAMILIES = {families}

OPERATORS = {operators}

TAG_ALIASES = {aliases}
""".format(
        os.path.basename(sys.argv[0]), os.path.basename(source), datetime.now(),
        families=pretty.pretty(families),
        operators=pretty.pretty(operators),
        aliases=pretty.pretty(aliases),
    )


if __name__ == '__main__':
    families, operators, aliases = build_catalog(load(sys.argv[1]))
    print(render_module(sys.argv[1], families, operators, aliases))
