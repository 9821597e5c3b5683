"""RelationDocument and ExtensionParams JSON codecs.

Complex numbers travel as ``[re, im]`` pairs. Emitted relations use the
canonical pivot-normalized generators of their carrier, rounded to a fixed
number of decimals, so that emit -> parse -> emit is byte-identical.
"""
import json
import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np
from jsonschema import Draft202012Validator as validator
from jsonschema.exceptions import ValidationError

from linrel.algebra.relation import LinearRelation, from_operator
from linrel.algebra.subspace import Subspace
from linrel.errors import DocumentError, LinrelError
from linrel.extensions.extend import ExtensionParams
from linrel.graphs.stargraph import StarConfig, build_star
from utils.registry import Registry

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FLOAT_DIGITS = 12

_COMPLEX = {
    'type': 'array',
    'items': {'type': 'number'},
    'minItems': 2,
    'maxItems': 2,
}
_VECTOR = {'type': 'array', 'items': _COMPLEX}

RELATION_SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['schema_version', 'space_dim', 'kind'],
    'properties': {
        'schema_version': {'const': SCHEMA_VERSION},
        'space_dim': {'type': 'integer', 'minimum': 1},
        'kind': {'enum': ['span', 'operator', 'star']},
    },
    'allOf': [
        {
            'if': {'properties': {'kind': {'const': 'span'}}},
            'then': {
                'required': ['generators'],
                'properties': {'generators': {'type': 'array', 'items': _VECTOR}},
            },
        },
        {
            'if': {'properties': {'kind': {'const': 'operator'}}},
            'then': {
                'required': ['matrix'],
                'properties': {
                    'matrix': {'type': 'array', 'items': _VECTOR, 'minItems': 1},
                    'domain': {'type': 'array', 'items': _VECTOR},
                },
            },
        },
        {
            'if': {'properties': {'kind': {'const': 'star'}}},
            'then': {
                'required': ['leaves', 'weights'],
                'properties': {
                    'leaves': {'type': 'integer', 'minimum': 2},
                    'weights': {
                        'type': 'array',
                        'items': {'type': 'number', 'not': {'const': 0}},
                    },
                },
            },
        },
    ],
}

PARAMS_SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['schema_version', 'formula', 'mode', 'domain', 'map'],
    'properties': {
        'schema_version': {'const': SCHEMA_VERSION},
        'formula': {'enum': list(ExtensionParams.FORMULAS)},
        'mode': {'enum': list(ExtensionParams.MODES)},
        'domain': {'type': 'array', 'items': _VECTOR},
        'map': {'type': 'array', 'items': _VECTOR},
    },
}

RELATION_BUILDERS = Registry('relation documents', key='kind')


class RelationDocument:
    """A parsed relation file: the relation, its kind and the validated JSON."""

    def __init__(self, kind: str, relation: LinearRelation, raw: dict,
                 star: Optional[StarConfig] = None):
        self.kind = kind
        self.relation = relation
        self.raw = raw
        self.star = star

    def __repr__(self):
        return f'RelationDocument(kind={self.kind}, relation={self.relation!r})'


def encode_complex(z: complex, digits: int = FLOAT_DIGITS) -> list:
    z = complex(z)
    # adding 0.0 turns -0.0 into 0.0
    return [round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0]


def decode_complex(pair) -> complex:
    return complex(float(pair[0]), float(pair[1]))


def encode_vector(vector, digits: int = FLOAT_DIGITS) -> list:
    return [encode_complex(z, digits) for z in np.asarray(vector).reshape(-1)]


def decode_vector(items, length: Optional[int] = None) -> np.ndarray:
    vec = np.array([decode_complex(p) for p in items], dtype=complex)
    if length is not None and vec.shape[0] != length:
        raise DocumentError(f'vector has {vec.shape[0]} entries, expected {length}')
    return vec


def _columns(vectors, length: int) -> np.ndarray:
    if not vectors:
        return np.zeros((length, 0), dtype=complex)
    return np.column_stack([decode_vector(v, length) for v in vectors])


def _validate(doc, schema, what: str):
    try:
        validator(schema).validate(doc)
    except ValidationError as err:
        path = '/'.join(str(p) for p in err.absolute_path) or '<root>'
        raise DocumentError(f'{what} violates the schema at {path}: {err.message}') from err


@RELATION_BUILDERS.register_module('span')
def span_document(space_dim: int, generators, **_) -> LinearRelation:
    carrier = Subspace.from_columns(_columns(generators, 2 * space_dim), 2 * space_dim)
    return LinearRelation(carrier, space_dim)


@RELATION_BUILDERS.register_module('operator')
def operator_document(space_dim: int, matrix, domain=None, **_) -> LinearRelation:
    rows = [decode_vector(row, space_dim) for row in matrix]
    if len(rows) != space_dim:
        raise DocumentError(f'operator matrix has {len(rows)} rows, expected {space_dim}')
    dom = None if domain is None else Subspace.from_columns(_columns(domain, space_dim), space_dim)
    return from_operator(np.vstack(rows), dom)


@RELATION_BUILDERS.register_module('star')
def star_document(space_dim: int, leaves: int, weights, **_) -> LinearRelation:
    if space_dim != leaves + 1:
        raise DocumentError(f'star with {leaves} leaves lives in C^{leaves + 1}, not C^{space_dim}')
    return build_star(StarConfig(leaves, weights))


def parse_document(doc: dict) -> RelationDocument:
    _validate(doc, RELATION_SCHEMA, 'relation document')
    try:
        relation = RELATION_BUILDERS.build(dict(doc))
        star = StarConfig(doc['leaves'], doc['weights']) if doc['kind'] == 'star' else None
    except DocumentError:
        raise
    except LinrelError as err:
        raise DocumentError(f'relation document is inconsistent: {err}') from err
    logger.debug('parsed %s document into %r', doc['kind'], relation)
    return RelationDocument(doc['kind'], relation, doc, star)


def read_json(path: Union[str, Path]):
    try:
        with open(path) as fp:
            return json.load(fp)
    except OSError as err:
        raise DocumentError(f'cannot read {path}: {err}') from err
    except json.JSONDecodeError as err:
        raise DocumentError(f'{path} is not valid JSON: {err}') from err


def load_document(path: Union[str, Path]) -> RelationDocument:
    return parse_document(read_json(path))


def emit_relation(relation: LinearRelation, digits: int = FLOAT_DIGITS) -> dict:
    """Span document of the canonical generators of ``relation``."""
    gens = relation.carrier.canonical_generators()
    return dict(
        schema_version=SCHEMA_VERSION,
        space_dim=relation.space_dim,
        kind='span',
        generators=[encode_vector(gens[:, j], digits) for j in range(gens.shape[1])],
    )


def emit_star(cfg: StarConfig) -> dict:
    return dict(schema_version=SCHEMA_VERSION, space_dim=cfg.space_dim, kind='star', **cfg.as_dict())


def params_to_dict(params: ExtensionParams, digits: int = FLOAT_DIGITS) -> dict:
    gens = params.domain.canonical_generators()
    return dict(
        schema_version=SCHEMA_VERSION,
        formula=params.formula,
        mode=params.mode,
        domain=[encode_vector(gens[:, j], digits) for j in range(gens.shape[1])],
        map=[encode_vector(row, digits) for row in params.v_matrix],
    )


def params_from_dict(doc: dict, base: LinearRelation) -> ExtensionParams:
    _validate(doc, PARAMS_SCHEMA, 'extension parameters')
    m = 2 * base.space_dim
    domain = Subspace.from_columns(_columns(doc['domain'], m), m)
    rows = [decode_vector(row, domain.dim) for row in doc['map']]
    v_matrix = np.vstack(rows) if rows else np.zeros((0, domain.dim), dtype=complex)
    return ExtensionParams(base, domain, v_matrix, doc['formula'], doc['mode'])


def load_params(path: Union[str, Path], base: LinearRelation) -> ExtensionParams:
    return params_from_dict(read_json(path), base)
