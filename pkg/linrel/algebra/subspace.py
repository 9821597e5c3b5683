"""Subspaces of C^m held as orthonormal bases.

Every set operation on relations reduces to the operations here. Ranks are
decided by an SVD with a threshold relative to the largest singular value,
equality is measured by the Frobenius distance of orthogonal projectors.
"""
import logging
from typing import Iterable, NamedTuple, Optional

import numpy as np
import scipy.linalg as sla

from linrel.errors import DimensionMismatchError, PreconditionError
from linrel.tolerances import TOLERANCES

logger = logging.getLogger(__name__)

# relative gap below which two pivot candidates count as tied
_PIVOT_TIE = 1e-6


def orthonormal_columns(mat: np.ndarray, tol_rank: Optional[float] = None) -> np.ndarray:
    """Orthonormal basis of the column space of ``mat``."""
    mat = np.asarray(mat, dtype=complex)
    if mat.ndim != 2:
        raise DimensionMismatchError(f'expected a matrix, got shape {mat.shape}')
    rows = mat.shape[0]
    if mat.shape[1] == 0 or rows == 0:
        return np.zeros((rows, 0), dtype=complex)
    tol_rank = TOLERANCES.tol_rank if tol_rank is None else tol_rank
    u, s, _ = np.linalg.svd(mat, full_matrices=False)
    if s[0] == 0:
        return np.zeros((rows, 0), dtype=complex)
    rank = int(np.count_nonzero(s > tol_rank * s[0]))
    logger.debug('rank decision: %d of %d columns (s_max=%.3e, s_min_kept=%.3e)',
                 rank, mat.shape[1], s[0], s[rank - 1])
    return u[:, :rank]


def null_space(mat: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the null space of ``mat`` (relative rank threshold)."""
    mat = np.asarray(mat, dtype=complex)
    if mat.shape[1] == 0:
        return np.zeros((0, 0), dtype=complex)
    if mat.shape[0] == 0 or not np.any(mat):
        return np.eye(mat.shape[1], dtype=complex)
    return sla.null_space(mat, rcond=TOLERANCES.tol_rank)


class SubspaceSum(NamedTuple):
    subspace: 'Subspace'
    direct: bool
    orthogonal: bool


class Subspace:
    """A linear subspace of C^m.

    Args:
        basis (array): m x d matrix with orthonormal columns. ``d`` may be 0.
        ambient_dim (int, optional): m, required when ``basis`` has no rows
            to infer it from.
        check (bool): verify orthonormality against ``tol_orth``.

    Instances are immutable; the stored basis is read-only.
    """

    __slots__ = ('_ambient_dim', '_basis', '_projector')

    def __init__(self, basis, ambient_dim: Optional[int] = None, check: bool = True):
        basis = np.array(basis, dtype=complex)
        if basis.size == 0:
            basis = np.zeros((ambient_dim or basis.shape[0], 0), dtype=complex)
        if basis.ndim != 2:
            raise DimensionMismatchError(f'basis must be a matrix, got shape {basis.shape}')
        if ambient_dim is None:
            ambient_dim = basis.shape[0]
        if ambient_dim < 1:
            raise DimensionMismatchError('ambient dimension must be positive')
        if basis.shape[0] != ambient_dim:
            if basis.size == 0:
                basis = np.zeros((ambient_dim, 0), dtype=complex)
            else:
                raise DimensionMismatchError(
                    f'basis has {basis.shape[0]} rows, ambient dimension is {ambient_dim}')
        if basis.shape[1] > ambient_dim:
            raise DimensionMismatchError('more basis vectors than the ambient dimension')
        if check and basis.shape[1]:
            gram = basis.conj().T @ basis
            deviation = np.abs(gram - np.eye(basis.shape[1])).max()
            if deviation >= TOLERANCES.tol_orth:
                raise ValueError(f'basis is not orthonormal (Gram deviation {deviation:.2e})')
        basis.flags.writeable = False
        self._ambient_dim = int(ambient_dim)
        self._basis = basis
        self._projector = None

    @classmethod
    def from_columns(cls, mat, ambient_dim: Optional[int] = None) -> 'Subspace':
        mat = np.asarray(mat, dtype=complex)
        if ambient_dim is None:
            ambient_dim = mat.shape[0]
        if mat.size == 0:
            return cls.zero(ambient_dim)
        if mat.shape[0] != ambient_dim:
            raise DimensionMismatchError(
                f'vectors have length {mat.shape[0]}, expected {ambient_dim}')
        return cls(orthonormal_columns(mat), ambient_dim, check=False)

    @classmethod
    def zero(cls, m: int) -> 'Subspace':
        return cls(np.zeros((m, 0), dtype=complex), m, check=False)

    @classmethod
    def full(cls, m: int) -> 'Subspace':
        return cls(np.eye(m, dtype=complex), m, check=False)

    @classmethod
    def coordinate(cls, m: int, indices: Iterable[int]) -> 'Subspace':
        """span{e_i : i in indices}."""
        indices = sorted(set(int(i) for i in indices))
        return cls(np.eye(m, dtype=complex)[:, indices], m, check=False)

    @property
    def ambient_dim(self) -> int:
        return self._ambient_dim

    @property
    def dim(self) -> int:
        return self._basis.shape[1]

    @property
    def basis(self) -> np.ndarray:
        return self._basis

    @property
    def projector(self) -> np.ndarray:
        if self._projector is None:
            proj = self._basis @ self._basis.conj().T
            proj.flags.writeable = False
            self._projector = proj
        return self._projector

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self._ambient_dim

    def _check_ambient(self, other: 'Subspace'):
        if self._ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f'ambient dimensions differ: {self._ambient_dim} != {other.ambient_dim}')

    def project(self, vectors) -> np.ndarray:
        vectors = np.asarray(vectors, dtype=complex)
        return self._basis @ (self._basis.conj().T @ vectors)

    def complement(self) -> 'Subspace':
        d, m = self.dim, self._ambient_dim
        if d == 0:
            return Subspace.full(m)
        if d == m:
            return Subspace.zero(m)
        _, _, vh = np.linalg.svd(self._basis.conj().T, full_matrices=True)
        return Subspace(vh[d:].conj().T, m, check=False)

    def sum(self, other: 'Subspace') -> SubspaceSum:
        self._check_ambient(other)
        total = Subspace.from_columns(np.hstack([self._basis, other.basis]), self._ambient_dim)
        direct = total.dim == self.dim + other.dim
        if self.dim and other.dim:
            orthogonal = bool(np.abs(self._basis.conj().T @ other.basis).max() < TOLERANCES.tol_orth)
        else:
            orthogonal = True
        return SubspaceSum(total, direct, orthogonal)

    def __add__(self, other: 'Subspace') -> 'Subspace':
        return self.sum(other).subspace

    def intersect(self, other: 'Subspace') -> 'Subspace':
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self._ambient_dim)
        if self.is_full():
            return other
        if other.is_full():
            return self
        return (self.complement() + other.complement()).complement()

    def __and__(self, other: 'Subspace') -> 'Subspace':
        return self.intersect(other)

    def containment_defect(self, other: 'Subspace') -> float:
        """Frobenius norm of the part of ``other``'s basis outside ``self``."""
        self._check_ambient(other)
        if other.dim == 0:
            return 0.0
        residual = other.basis - self.project(other.basis)
        return float(np.linalg.norm(residual))

    def contains(self, other: 'Subspace') -> bool:
        return self.containment_defect(other) < TOLERANCES.tol_eq

    def contains_vector(self, vector) -> bool:
        vector = np.asarray(vector, dtype=complex).reshape(-1)
        if vector.shape[0] != self._ambient_dim:
            raise DimensionMismatchError('vector length differs from the ambient dimension')
        norm = np.linalg.norm(vector)
        if norm == 0:
            return True
        return bool(np.linalg.norm(vector - self.project(vector)) < TOLERANCES.tol_eq * norm)

    def ominus(self, other: 'Subspace') -> 'Subspace':
        """Orthogonal complement of ``other`` inside ``self``."""
        if not self.contains(other):
            raise PreconditionError(
                'ominus needs the second subspace to be contained in the first '
                f'(defect {self.containment_defect(other):.2e})')
        if other.dim == 0:
            return self
        residual = self._basis - other.project(self._basis)
        return Subspace.from_columns(residual, self._ambient_dim)

    def distance(self, other: 'Subspace') -> float:
        self._check_ambient(other)
        return float(np.linalg.norm(self.projector - other.projector))

    def isclose(self, other: 'Subspace') -> bool:
        return self.distance(other) < TOLERANCES.tol_eq

    def is_orthogonal_to(self, other: 'Subspace') -> bool:
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return True
        return bool(np.abs(self._basis.conj().T @ other.basis).max() < TOLERANCES.tol_orth)

    def pivot_rows(self) -> np.ndarray:
        """Rows selected by column pivoting on the basis transpose.

        Each step takes the row of largest residual norm and deflates the
        others against it. Row norms of the basis and of its deflations do
        not depend on the choice of orthonormal basis, so neither does the
        selection. Near-ties go to the lowest row index, which keeps the
        selection stable when generators are rounded and parsed back.
        """
        if self.dim == 0:
            return np.zeros(0, dtype=int)
        rows = self._basis.copy()
        chosen = []
        for _ in range(self.dim):
            norms = np.linalg.norm(rows, axis=1)
            norms[chosen] = -1.0
            top = norms.max()
            idx = int(np.flatnonzero(norms >= top * (1 - _PIVOT_TIE))[0])
            chosen.append(idx)
            v = rows[idx] / norms[idx]
            rows = rows - np.outer(rows @ v.conj(), v)
        return np.asarray(chosen)

    def canonical_generators(self) -> np.ndarray:
        """Basis that equals the identity on the pivot rows, in pivot order."""
        if self.dim == 0:
            return np.zeros((self._ambient_dim, 0), dtype=complex)
        rows = self.pivot_rows()
        gens = self._basis @ np.linalg.inv(self._basis[rows, :])
        gens[rows, :] = np.eye(self.dim)
        return gens

    def canonical_basis(self) -> np.ndarray:
        """Orthonormal basis determined by the subspace alone."""
        if self.dim == 0:
            return np.zeros((self._ambient_dim, 0), dtype=complex)
        q, r = np.linalg.qr(self.canonical_generators())
        diag = np.diag(r)
        phases = diag / np.abs(diag)
        return q * phases[np.newaxis, :]

    def __repr__(self):
        return f'Subspace(dim={self.dim}, ambient_dim={self._ambient_dim})'


def span(vectors, m: int) -> Subspace:
    """Orthonormalized span of a list of length-``m`` vectors."""
    vectors = [np.asarray(v, dtype=complex).reshape(-1) for v in vectors]
    for i, v in enumerate(vectors):
        if v.shape[0] != m:
            raise DimensionMismatchError(f'vector {i} has length {v.shape[0]}, expected {m}')
    if not vectors:
        return Subspace.zero(m)
    return Subspace.from_columns(np.column_stack(vectors), m)


def complement(subspace: Subspace) -> Subspace:
    return subspace.complement()


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.intersect(s2)


def subspace_sum(s1: Subspace, s2: Subspace) -> SubspaceSum:
    return s1.sum(s2)


def ominus(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.ominus(s2)
