import logging
from typing import Iterable, Optional

from linrel.algebra.relation import LinearRelation, adjoint
from linrel.algebra.subspace import Subspace
from linrel.analysis.classify import default_probes, is_symmetric
from linrel.analysis.spectrum import in_quasi_regular_set
from linrel.errors import ConsistencyError, PreconditionError

logger = logging.getLogger(__name__)


def deficiency_space(a: LinearRelation, zeta: complex) -> Subspace:
    """N_zeta(A*) = {(f, zeta f) in A*}, a subspace of C^{2n}."""
    graph = LinearRelation.scalar_graph(zeta, a.space_dim)
    return adjoint(a).carrier.intersect(graph.carrier)


def deficiency_index(a: LinearRelation, probes: Optional[Iterable[complex]] = None) -> int:
    """Common dimension of N_zeta(A*) over probe points of the quasi-regular set."""
    if not is_symmetric(a):
        raise PreconditionError('deficiency index needs a symmetric relation')
    probes = list(default_probes(a) if probes is None else probes)
    if not probes:
        raise PreconditionError('at least one probe point is needed')
    dims = {}
    for zeta in probes:
        zeta = complex(zeta)
        if not in_quasi_regular_set(a, zeta):
            raise PreconditionError(f'probe {zeta} is an eigenvalue, not in the quasi-regular set')
        dims[zeta] = deficiency_space(a, zeta).dim
    logger.debug('deficiency dimensions per probe: %s', dims)
    values = set(dims.values())
    if len(values) != 1:
        raise ConsistencyError(f'deficiency dimensions differ between probes: {dims}')
    return values.pop()
