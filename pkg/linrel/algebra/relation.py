"""Linear relations in C^n (+) C^n.

A relation is stored only through its carrier subspace of C^{2n}: the first
n coordinates hold the component ``f`` of a pair (f, g), the last n the
component ``g``.
"""
import logging
from typing import NamedTuple, Optional

import numpy as np
import scipy.linalg as sla

from linrel.algebra.subspace import Subspace, null_space
from linrel.errors import DimensionMismatchError

logger = logging.getLogger(__name__)


class RelationParts(NamedTuple):
    dom: Subspace
    ran: Subspace
    ker: Subspace
    mul: Subspace


class RelationSum(NamedTuple):
    relation: 'LinearRelation'
    direct: bool
    orthogonal: bool


class LinearRelation:
    """A linear relation T on C^n.

    Args:
        carrier (Subspace): subspace of C^{2n}.
        space_dim (int, optional): n; checked against the carrier when given.
        sub_ambient (Subspace, optional): subspace of C^n the relation was
            restricted to (see :func:`restrict`).
    """

    __slots__ = ('_space_dim', '_carrier', '_sub_ambient')

    def __init__(self, carrier: Subspace, space_dim: Optional[int] = None,
                 sub_ambient: Optional[Subspace] = None):
        if carrier.ambient_dim % 2:
            raise DimensionMismatchError(
                f'carrier ambient dimension {carrier.ambient_dim} is odd')
        n = carrier.ambient_dim // 2
        if space_dim is not None and space_dim != n:
            raise DimensionMismatchError(f'carrier lives in C^{2 * n}, not C^{2 * space_dim}')
        if sub_ambient is not None and sub_ambient.ambient_dim != n:
            raise DimensionMismatchError('sub-ambient subspace has the wrong ambient dimension')
        self._space_dim = n
        self._carrier = carrier
        self._sub_ambient = sub_ambient

    @classmethod
    def from_pairs(cls, first, second, space_dim: Optional[int] = None) -> 'LinearRelation':
        """Span of the pairs (first[:, j], second[:, j])."""
        first = np.asarray(first, dtype=complex)
        second = np.asarray(second, dtype=complex)
        if first.ndim == 1:
            first = first.reshape(-1, 1)
        if second.ndim == 1:
            second = second.reshape(-1, 1)
        if first.shape != second.shape:
            raise DimensionMismatchError(
                f'pair components differ in shape: {first.shape} vs {second.shape}')
        n = first.shape[0] if space_dim is None else space_dim
        if first.shape[0] != n:
            raise DimensionMismatchError(f'pair components have length {first.shape[0]}, expected {n}')
        carrier = Subspace.from_columns(np.vstack([first, second]), 2 * n)
        return cls(carrier)

    @classmethod
    def identity(cls, n: int) -> 'LinearRelation':
        return cls.scalar_graph(1.0, n)

    @classmethod
    def zero(cls, n: int) -> 'LinearRelation':
        """The zero relation {(0, 0)}."""
        return cls(Subspace.zero(2 * n))

    @classmethod
    def scalar_graph(cls, zeta: complex, n: int) -> 'LinearRelation':
        """Graph of zeta * I on all of C^n."""
        eye = np.eye(n, dtype=complex)
        return cls.from_pairs(eye, zeta * eye)

    @classmethod
    def multivalued(cls, subspace: Subspace) -> 'LinearRelation':
        """{(0, g) : g in subspace}."""
        n = subspace.ambient_dim
        return cls.from_pairs(np.zeros((n, subspace.dim)), subspace.basis, n)

    @property
    def space_dim(self) -> int:
        return self._space_dim

    @property
    def carrier(self) -> Subspace:
        return self._carrier

    @property
    def sub_ambient(self) -> Optional[Subspace]:
        return self._sub_ambient

    @property
    def dim(self) -> int:
        return self._carrier.dim

    @property
    def first(self) -> np.ndarray:
        """First components of the orthonormal carrier basis (n x dim)."""
        return self._carrier.basis[:self._space_dim]

    @property
    def second(self) -> np.ndarray:
        return self._carrier.basis[self._space_dim:]

    def _coordinate_block(self, second_component: bool) -> Subspace:
        n = self._space_dim
        start = n if second_component else 0
        return Subspace.coordinate(2 * n, range(start, start + n))

    @property
    def dom(self) -> Subspace:
        return Subspace.from_columns(self.first, self._space_dim)

    @property
    def ran(self) -> Subspace:
        return Subspace.from_columns(self.second, self._space_dim)

    @property
    def ker(self) -> Subspace:
        pairs = self._carrier.intersect(self._coordinate_block(second_component=False))
        return Subspace.from_columns(pairs.basis[:self._space_dim], self._space_dim)

    @property
    def mul(self) -> Subspace:
        pairs = self._carrier.intersect(self._coordinate_block(second_component=True))
        return Subspace.from_columns(pairs.basis[self._space_dim:], self._space_dim)

    def parts(self) -> RelationParts:
        return RelationParts(self.dom, self.ran, self.ker, self.mul)

    def is_operator(self) -> bool:
        return self.mul.dim == 0

    def check_space(self, other: 'LinearRelation'):
        if self._space_dim != other.space_dim:
            raise DimensionMismatchError(
                f'relations act on C^{self._space_dim} and C^{other.space_dim}')

    def contains(self, other: 'LinearRelation') -> bool:
        """other is a subset of self."""
        self.check_space(other)
        return self._carrier.contains(other.carrier)

    def distance(self, other: 'LinearRelation') -> float:
        self.check_space(other)
        return self._carrier.distance(other.carrier)

    def isclose(self, other: 'LinearRelation') -> bool:
        self.check_space(other)
        return self._carrier.isclose(other.carrier)

    def contains_pair(self, f, g) -> bool:
        return self._carrier.contains_vector(np.concatenate([np.asarray(f, dtype=complex),
                                                             np.asarray(g, dtype=complex)]))

    def __repr__(self):
        extra = '' if self._sub_ambient is None else f', sub_ambient_dim={self._sub_ambient.dim}'
        return f'LinearRelation(space_dim={self._space_dim}, dim={self.dim}{extra})'


def from_operator(matrix, domain: Optional[Subspace] = None) -> LinearRelation:
    """Graph {(f, M f) : f in domain}; the whole space when ``domain`` is None."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f'operator matrix must be square, got shape {matrix.shape}')
    n = matrix.shape[0]
    if domain is None:
        domain = Subspace.full(n)
    if domain.ambient_dim != n:
        raise DimensionMismatchError(
            f'domain lives in C^{domain.ambient_dim}, matrix acts on C^{n}')
    return LinearRelation.from_pairs(domain.basis, matrix @ domain.basis, n)


def parts(relation: LinearRelation) -> RelationParts:
    return relation.parts()


def add(t: LinearRelation, s: LinearRelation) -> LinearRelation:
    """{(f, g + h) : (f, g) in T, (f, h) in S}."""
    t.check_space(s)
    # coefficient pairs (a, b) with F_T a = F_S b describe the shared f
    coeffs = null_space(np.hstack([t.first, -s.first]))
    a, b = coeffs[:t.dim], coeffs[t.dim:]
    return LinearRelation.from_pairs(t.first @ a, t.second @ a + s.second @ b, t.space_dim)


def scale(zeta: complex, t: LinearRelation) -> LinearRelation:
    """{(f, zeta g)}."""
    return LinearRelation.from_pairs(t.first, zeta * t.second, t.space_dim)


def negate(t: LinearRelation) -> LinearRelation:
    return LinearRelation(Subspace(np.vstack([t.first, -t.second]), 2 * t.space_dim, check=False))


def compose(s: LinearRelation, t: LinearRelation) -> LinearRelation:
    """ST = {(f, k) : (f, g) in T, (g, k) in S for some g}."""
    t.check_space(s)
    coeffs = null_space(np.hstack([t.second, -s.first]))
    a, b = coeffs[:t.dim], coeffs[t.dim:]
    return LinearRelation.from_pairs(t.first @ a, s.second @ b, t.space_dim)


def inverse(t: LinearRelation) -> LinearRelation:
    return LinearRelation(Subspace(np.vstack([t.second, t.first]), 2 * t.space_dim, check=False))


def shift(t: LinearRelation, zeta: complex) -> LinearRelation:
    """T - zeta I."""
    return add(t, LinearRelation.scalar_graph(-zeta, t.space_dim))


def adjoint(t: LinearRelation) -> LinearRelation:
    """T* = (-T^{-1})^perp = {(h, k) : <k, f> = <h, g> for all (f, g) in T}."""
    flipped = Subspace(np.vstack([t.second, -t.first]), 2 * t.space_dim, check=False)
    return LinearRelation(flipped.complement())


def decompose(t: LinearRelation):
    """Split T into its operator part and its multivalued part.

    Returns:
        tuple: (T_op, T_inf) with T = T_op (+) T_inf orthogonally.
    """
    n = t.space_dim
    t_inf = t.carrier.intersect(Subspace.coordinate(2 * n, range(n, 2 * n)))
    t_op = t.carrier.ominus(t_inf)
    return LinearRelation(t_op), LinearRelation(t_inf)


def restrict(t: LinearRelation, s: LinearRelation) -> LinearRelation:
    """T_S = T intersected with (mul S)^perp (+) (mul S)^perp.

    The result keeps the ambient C^n and records (mul S)^perp as its
    sub-ambient subspace.
    """
    t.check_space(s)
    n = t.space_dim
    sub = s.mul.complement()
    pair_space = Subspace(sla.block_diag(sub.basis, sub.basis), 2 * n, check=False)
    return LinearRelation(t.carrier.intersect(pair_space), sub_ambient=sub)


def join(t: LinearRelation, s: LinearRelation) -> RelationSum:
    """Subspace sum T + S of carriers (the componentwise direct sum of the theory)."""
    t.check_space(s)
    total = t.carrier.sum(s.carrier)
    return RelationSum(LinearRelation(total.subspace), total.direct, total.orthogonal)


def eigenspace(t: LinearRelation, zeta: complex) -> Subspace:
    """ker(T - zeta I) = {f : (f, zeta f) in T}."""
    n = t.space_dim
    pairs = t.carrier.intersect(LinearRelation.scalar_graph(zeta, n).carrier)
    return Subspace.from_columns(pairs.basis[:n], n)
