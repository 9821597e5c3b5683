"""Semi-bounded, von Neumann and positive extensions of symmetric relations."""
import logging
import math
from typing import Optional

import numpy as np
from prettytable import PrettyTable

from linrel.algebra.relation import LinearRelation, adjoint, join, negate
from linrel.algebra.subspace import Subspace
from linrel.analysis.classify import (bounds, is_isometry, is_positive, is_quasi_null,
                                      is_selfadjoint, is_symmetric)
from linrel.analysis.spectrum import full_spectrum
from linrel.errors import ConsistencyError, DimensionMismatchError, PreconditionError
from linrel.extensions.deficiency import deficiency_index, deficiency_space
from linrel.tolerances import TOLERANCES
from linrel.transforms.krein import krein

logger = logging.getLogger(__name__)

VON_NEUMANN = 'von_neumann'
QUASI_NULL = 'quasi_null'
ISOMETRY = 'isometry'
CONTRACTION = 'contraction'


class ExtensionParams:
    """A subspace D of a source deficiency space and a map V into the target one.

    ``v_matrix`` maps coordinates in the canonical orthonormal basis of D to
    coordinates in the canonical orthonormal basis of the target space:

        von_neumann:  D in N_i(A*),      V : D -> N_{-i}(A*)
        quasi_null:   D in N_1(-A*),     V : D -> N_{-1}(-A*)

    Norms are the Euclidean norms of C^{2n}.
    """

    FORMULAS = (VON_NEUMANN, QUASI_NULL)
    MODES = (ISOMETRY, CONTRACTION)

    def __init__(self, base: LinearRelation, domain: Subspace, v_matrix,
                 formula: str = VON_NEUMANN, mode: str = ISOMETRY):
        if formula not in self.FORMULAS:
            raise PreconditionError(f'unknown extension formula {formula!r}')
        if mode not in self.MODES:
            raise PreconditionError(f'unknown map mode {mode!r}')
        if domain.ambient_dim != 2 * base.space_dim:
            raise DimensionMismatchError('D must live in C^{2n} of the base relation')
        v_matrix = np.asarray(v_matrix, dtype=complex)
        if v_matrix.size == 0 and domain.dim == 0:
            v_matrix = np.zeros((0, 0), dtype=complex)
        elif v_matrix.ndim != 2 or v_matrix.shape[1] != domain.dim:
            raise DimensionMismatchError(
                f'V must be a (dim target, {domain.dim}) matrix, got shape {v_matrix.shape}')
        self.base = base
        self.domain = domain
        self.v_matrix = v_matrix
        self.formula = formula
        self.mode = mode
        self._source = None
        self._target = None

    def _points(self):
        if self.formula == VON_NEUMANN:
            return self.base, 1j, -1j
        return negate(self.base), 1.0, -1.0

    @property
    def source_space(self) -> Subspace:
        if self._source is None:
            relation, zeta, _ = self._points()
            self._source = deficiency_space(relation, zeta)
        return self._source

    @property
    def target_space(self) -> Subspace:
        if self._target is None:
            relation, _, zeta = self._points()
            self._target = deficiency_space(relation, zeta)
        return self._target

    @property
    def source_basis(self) -> np.ndarray:
        return self.domain.canonical_basis()

    @property
    def target_basis(self) -> np.ndarray:
        return self.target_space.canonical_basis()

    @classmethod
    def from_images(cls, base: LinearRelation, generators, images,
                    formula: str = QUASI_NULL, mode: str = CONTRACTION) -> 'ExtensionParams':
        """Build V from generators of D and their images in the target space."""
        generators = np.asarray(generators, dtype=complex)
        images = np.asarray(images, dtype=complex)
        if generators.shape != images.shape:
            raise DimensionMismatchError('every generator of D needs exactly one image')
        domain = Subspace.from_columns(generators, 2 * base.space_dim)
        params = cls(base, domain, np.zeros((0, domain.dim)), formula, mode)
        if domain.dim == 0:
            return params
        if not params.target_space.contains(Subspace.from_columns(images, 2 * base.space_dim)):
            raise PreconditionError('images do not lie in the target deficiency space')
        coeffs = np.linalg.lstsq(generators, params.source_basis, rcond=None)[0]
        params.v_matrix = params.target_basis.conj().T @ (images @ coeffs)
        return params

    def validate(self):
        if not self.source_space.contains(self.domain):
            raise PreconditionError(
                'D is not contained in the source deficiency space '
                f'(defect {self.source_space.containment_defect(self.domain):.2e})')
        if self.domain.dim == 0:
            return
        expected = (self.target_space.dim, self.domain.dim)
        if self.v_matrix.shape != expected:
            raise DimensionMismatchError(
                f'V has shape {self.v_matrix.shape}, expected {expected}')
        sv = np.linalg.svd(self.v_matrix, compute_uv=False)
        if self.mode == ISOMETRY:
            if self.domain.dim > self.target_space.dim or np.abs(sv - 1).max() > TOLERANCES.tol_eq:
                raise PreconditionError(f'V is not an isometry (singular values {sv})')
        elif sv.max() > 1 + TOLERANCES.tol_psd:
            raise PreconditionError(f'V is not a contraction (largest singular value {sv.max()})')

    def part(self) -> LinearRelation:
        """(V - I)D as a relation."""
        if self.domain.dim == 0:
            return LinearRelation.zero(self.base.space_dim)
        gens = self.target_basis @ self.v_matrix - self.source_basis
        return LinearRelation(Subspace.from_columns(gens, 2 * self.base.space_dim))

    def __repr__(self):
        return (f'ExtensionParams(formula={self.formula}, mode={self.mode}, '
                f'dim D={self.domain.dim}, dim target={self.target_space.dim})')


def extend_semibounded(a: LinearRelation, alpha: float) -> LinearRelation:
    """S_alpha = A + N_alpha(A*) for alpha below m_A (or above M_A)."""
    if not is_symmetric(a):
        raise PreconditionError('semi-bounded extension needs a symmetric relation')
    alpha = float(alpha)
    b = bounds(a)
    if not (alpha < b.lower or alpha > b.upper):
        raise PreconditionError(
            f'alpha not below greatest lower bound m={b.lower:.12g} '
            f'nor above least upper bound M={b.upper:.12g}: alpha={alpha:.12g}')
    n_alpha = deficiency_space(a, alpha)
    total = join(a, LinearRelation(n_alpha))
    if not total.direct:
        raise PreconditionError(f'non-direct sum A + N_alpha(A*) at alpha={alpha:.12g}')
    logger.debug('semi-bounded extension at alpha=%g: dim A=%d, dim N=%d',
                 alpha, a.dim, n_alpha.dim)
    return total.relation


def verify_semibounded_extension(a: LinearRelation, s: LinearRelation, alpha: float) -> dict:
    """Selfadjointness, bound and eigenvalue multiplicity of S_alpha."""
    eta = deficiency_index(a)
    selfadjoint = is_selfadjoint(s)
    b = bounds(s)
    lower = alpha < bounds(a).lower
    bound = b.lower if lower else b.upper
    multiplicity = full_spectrum(s).multiplicity(alpha)
    return dict(
        selfadjoint=selfadjoint,
        side='lower' if lower else 'upper',
        bound=bound,
        bound_matches=bool(abs(bound - alpha) <= 1e-8 * max(1.0, abs(alpha))),
        eta=eta,
        alpha_multiplicity=multiplicity,
        multiplicity_matches=multiplicity == eta,
    )


def symmetric_extension_vn(params: ExtensionParams) -> LinearRelation:
    """S = A (+) (V - I)D with D in N_i(A*) and V an isometry into N_{-i}(A*)."""
    if params.formula != VON_NEUMANN:
        raise PreconditionError('von Neumann extension needs von_neumann parameters')
    if params.mode != ISOMETRY:
        raise PreconditionError('von Neumann extension needs an isometric V')
    params.validate()
    a = params.base
    part = params.part()
    if not a.carrier.is_orthogonal_to(part.carrier):
        raise PreconditionError('(V - I)D is not orthogonal to A')
    return join(a, part).relation


def positive_extension_qn(params: ExtensionParams) -> LinearRelation:
    """S = A (+) (V - I)D for a quasi-null A, D in N_1(-A*), V : D -> N_{-1}(-A*).

    S is positive for a contraction V and quasi-null for an isometry. Only
    pairs (D, V) whose result is a symmetric relation inside A* describe an
    extension; any other choice is rejected.
    """
    a = params.base
    if not is_quasi_null(a):
        raise PreconditionError('base relation is not quasi-null')
    if params.formula != QUASI_NULL:
        raise PreconditionError('positive extension needs quasi_null parameters')
    params.validate()
    part = params.part()
    if not a.carrier.is_orthogonal_to(part.carrier):
        raise ConsistencyError('(V - I)D is not orthogonal to A')
    s = join(a, part).relation
    if not adjoint(a).contains(s):
        raise PreconditionError('extension is not symmetric: (V - I)D is not contained in A*')
    if not is_symmetric(s):
        raise PreconditionError('extension is not symmetric: <f, g> is not real on (V - I)D')
    return s


def params_from_part(a: LinearRelation, part: LinearRelation) -> ExtensionParams:
    """D and V describing S = A (+) L for a positive L, through W = K(L).

    With W = {(u, v)}: D = {(u, u)} and V(u, u) = (-v, v), so that
    (V - I)D = {-(u + v, u - v)} = L. D lands in N_1(-A*) only when L is
    orthogonal to A, lies in A* and has <f, k> = <g, h> = 0 against every
    pair of A; otherwise the images miss the target space and a
    PreconditionError is raised.
    """
    a.check_space(part)
    w = krein(part)
    if w.mul.dim:
        raise PreconditionError('K(L) is multivalued: L is not positive')
    u, v = w.first, w.second
    mode = ISOMETRY if is_isometry(w) else CONTRACTION
    return ExtensionParams.from_images(a, np.vstack([u, u]), np.vstack([-v, v]),
                                       formula=QUASI_NULL, mode=mode)


class DecompositionReport:
    """Checks of S = A (+) L against positivity of S."""

    def __init__(self, **fields):
        self.contained_in_adjoint: bool = fields['contained_in_adjoint']
        self.part_positive: bool = fields['part_positive']
        self.jointly_positive: bool = fields['jointly_positive']
        self.samples: int = fields['samples']
        self.seed: Optional[int] = fields['seed']
        self.worst_margin: float = fields['worst_margin']
        self.sampled_inequality: bool = fields['sampled_inequality']
        self.base_quasi_null: bool = fields['base_quasi_null']
        self.cross_terms: Optional[float] = fields['cross_terms']

    @property
    def cross_terms_vanish(self) -> bool:
        return self.cross_terms is None or self.cross_terms <= TOLERANCES.tol_psd

    @property
    def passed(self) -> bool:
        checks = [self.contained_in_adjoint, self.part_positive,
                  self.jointly_positive, self.sampled_inequality]
        if self.base_quasi_null:
            checks.append(self.cross_terms_vanish)
        return all(checks)

    def as_dict(self) -> dict:
        return dict(
            contained_in_adjoint=self.contained_in_adjoint,
            part_positive=self.part_positive,
            jointly_positive=self.jointly_positive,
            samples=self.samples,
            seed=self.seed,
            worst_margin=self.worst_margin,
            sampled_inequality=self.sampled_inequality,
            base_quasi_null=self.base_quasi_null,
            cross_terms=self.cross_terms,
            passed=self.passed,
        )

    def to_table(self) -> PrettyTable:
        table = PrettyTable()
        table.field_names = ['check', 'value']
        table.align = 'l'
        for key, value in self.as_dict().items():
            table.add_row([key, value])
        return table


def _sample_pairs(rng, relation: LinearRelation, count: int):
    coeffs = rng.standard_normal((relation.dim, count)) + 1j * rng.standard_normal((relation.dim, count))
    vectors = relation.carrier.basis @ coeffs
    vectors /= np.linalg.norm(vectors, axis=0, keepdims=True)
    n = relation.space_dim
    return vectors[:n], vectors[n:]


def decompose_extension(s: LinearRelation, a: LinearRelation, samples: int = 256,
                        seed: Optional[int] = 1234):
    """L = S (-) A together with the positivity checks of S = A (+) L.

    Returns:
        tuple: (L, DecompositionReport)
    """
    a.check_space(s)
    if not s.contains(a):
        raise PreconditionError('A is not contained in S')
    if not is_positive(a):
        raise PreconditionError('base relation is not positive')
    if not is_symmetric(s):
        raise PreconditionError('extension is not symmetric')
    part = LinearRelation(s.carrier.ominus(a.carrier))
    if not a.carrier.is_orthogonal_to(part.carrier):
        raise ConsistencyError('S (-) A is not orthogonal to A')

    worst = math.inf
    drawn = 0
    if a.dim and part.dim and samples > 0:
        rng = np.random.default_rng(seed)
        f, g = _sample_pairs(rng, a, samples)
        h, k = _sample_pairs(rng, part, samples)
        fg = np.einsum('ij,ij->j', f.conj(), g).real
        hk = np.einsum('ij,ij->j', h.conj(), k).real
        fk = np.einsum('ij,ij->j', f.conj(), k)
        bound = 2 * np.maximum(np.abs(fk.real), np.abs(fk.imag))
        margins = fg + hk - bound
        worst = float(margins.min())
        drawn = samples
    sampled = worst >= -TOLERANCES.tol_psd

    base_quasi_null = is_quasi_null(a)
    cross = None
    if base_quasi_null:
        cross = 0.0
        if a.dim and part.dim:
            fk = a.first.conj().T @ part.second
            gh = a.second.conj().T @ part.first
            cross = float(max(np.abs(fk).max(), np.abs(gh).max()))

    report = DecompositionReport(
        contained_in_adjoint=adjoint(a).contains(part),
        part_positive=is_positive(part),
        jointly_positive=is_positive(s),
        samples=drawn,
        seed=seed if drawn else None,
        worst_margin=worst if drawn else None,
        sampled_inequality=sampled,
        base_quasi_null=base_quasi_null,
        cross_terms=cross,
    )
    logger.debug('extension decomposition: %s', report.as_dict())
    return part, report

