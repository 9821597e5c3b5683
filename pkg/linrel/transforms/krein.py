"""The Krein transform K(T) = 2(T + I)^{-1} - I = {(f + g, f - g) : (f, g) in T}."""
import logging
from typing import Dict

import numpy as np
from prettytable import PrettyTable

from linrel.algebra.relation import LinearRelation, add, inverse, scale, shift
from linrel.algebra.subspace import Subspace
from linrel.tolerances import TOLERANCES

logger = logging.getLogger(__name__)


def krein(t: LinearRelation) -> LinearRelation:
    """Apply the pair map (f, g) -> (f + g, f - g) to the carrier.

    The map is sqrt(2) times a unitary of C^{2n}, so dimensions are kept and
    the image basis only needs rescaling.
    """
    f, g = t.first, t.second
    image = np.vstack([f + g, f - g]) / np.sqrt(2.0)
    return LinearRelation(Subspace(image, 2 * t.space_dim, check=False))


def krein_by_definition(t: LinearRelation) -> LinearRelation:
    """2(T + I)^{-1} - I through add, inverse and scale."""
    n = t.space_dim
    resolvent = inverse(add(t, LinearRelation.identity(n)))
    return add(scale(2.0, resolvent), LinearRelation.scalar_graph(-1.0, n))


class KreinComponentsReport:
    """Distances between the parts of K(T) and the parts of T -/+ I."""

    IDENTITIES = ('dom K(T) = ran(T+I)', 'ran K(T) = ran(T-I)',
                  'ker K(T) = ker(T-I)', 'mul K(T) = ker(T+I)')

    def __init__(self, distances: Dict[str, float]):
        self.distances = dict(distances)

    @property
    def ok(self) -> bool:
        return all(d < TOLERANCES.tol_eq for d in self.distances.values())

    def as_dict(self) -> dict:
        return dict(distances=dict(self.distances), ok=self.ok)

    def to_table(self) -> PrettyTable:
        table = PrettyTable()
        table.field_names = ['identity', 'distance']
        for name, value in self.distances.items():
            table.add_row([name, f'{value:.3e}'])
        return table


def krein_components_check(t: LinearRelation) -> KreinComponentsReport:
    k = krein(t)
    plus = shift(t, -1.0)
    minus = shift(t, 1.0)
    distances = {
        'dom K(T) = ran(T+I)': k.dom.distance(plus.ran),
        'ran K(T) = ran(T-I)': k.ran.distance(minus.ran),
        'ker K(T) = ker(T-I)': k.ker.distance(minus.ker),
        'mul K(T) = ker(T+I)': k.mul.distance(plus.ker),
    }
    logger.debug('krein component distances: %s', distances)
    return KreinComponentsReport(distances)
