from linrel.algebra.relation import LinearRelation
from linrel.extensions.extend import (ExtensionParams, extend_semibounded,
                                      positive_extension_qn, symmetric_extension_vn)
from utils.registry import Registry

EXTENSIONS = Registry('extensions')


def _rebase(params: ExtensionParams, relation: LinearRelation) -> ExtensionParams:
    if params.base is relation:
        return params
    return ExtensionParams(relation, params.domain, params.v_matrix, params.formula, params.mode)


@EXTENSIONS.register_module('SemiBounded')
def semibounded(relation: LinearRelation, alpha: float) -> LinearRelation:
    return extend_semibounded(relation, alpha)


@EXTENSIONS.register_module('VonNeumann')
def von_neumann(relation: LinearRelation, params: ExtensionParams) -> LinearRelation:
    return symmetric_extension_vn(_rebase(params, relation))


@EXTENSIONS.register_module('QuasiNullPositive')
def quasi_null_positive(relation: LinearRelation, params: ExtensionParams) -> LinearRelation:
    return positive_extension_qn(_rebase(params, relation))


def build_extension(cfg: dict, relation: LinearRelation, **kwargs) -> LinearRelation:
    """Build an extension of ``relation`` from a config dict.

    >>> build_extension(dict(type='SemiBounded', alpha=-1.0), a)
    >>> build_extension(dict(type='StarFamily', star=cfg, beta=1j), a)

    ``StarFamily`` is registered by :mod:`linrel.graphs.stargraph`.
    """
    return EXTENSIONS.build(cfg, relation, **kwargs)
