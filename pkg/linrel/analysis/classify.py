"""Predicates and numeric bounds of linear relations.

All tests work on the coefficient space of the orthonormal carrier basis:
with F, G the first and second components of that basis, a pair of T is
(F a, G a) and

    <f, g>          ->  a* (F*G) a
    ||f||^2 - ||g||^2  ->  a* (F*F - G*G) a

Because the carrier basis is orthonormal these form matrices have spectral
norm at most one: equality tests use absolute tolerances, positivity is
judged relative to the largest eigenvalue of the form.
"""
import logging
import math
from typing import NamedTuple, Optional, Sequence

import numpy as np
import scipy.linalg as sla
from prettytable import PrettyTable

from linrel.algebra.relation import LinearRelation, adjoint, inverse, shift
from linrel.errors import ConsistencyError, PreconditionError
from linrel.tolerances import TOLERANCES

logger = logging.getLogger(__name__)

_FORM_ROUNDOFF = 1e3 * np.finfo(float).eps


class Bounds(NamedTuple):
    """Greatest lower bound ``lower`` and least upper bound ``upper``.

    When dom T = {0} the bounds are undefined by convention and reported as
    (+inf, -inf).
    """
    lower: float
    upper: float

    @property
    def defined(self) -> bool:
        return math.isfinite(self.lower) and math.isfinite(self.upper)


def _form(t: LinearRelation) -> np.ndarray:
    return t.first.conj().T @ t.second


def _is_psd(mat: np.ndarray) -> bool:
    """Minimum eigenvalue >= -tol_psd relative to the largest absolute one.

    Forms built on an orthonormal carrier basis have entries of size <= 1, so
    eigenvalues below _FORM_ROUNDOFF are orthonormalization noise of a zero form.
    """
    if mat.size == 0:
        return True
    herm = (mat + mat.conj().T) / 2
    lam = np.linalg.eigvalsh(herm)
    scale = float(np.abs(lam).max())
    return bool(lam.min() >= -max(TOLERANCES.tol_psd * scale, _FORM_ROUNDOFF))


def hermitian_defect(t: LinearRelation) -> float:
    form = _form(t)
    if form.size == 0:
        return 0.0
    return float(np.abs(form - form.conj().T).max())


def is_symmetric(t: LinearRelation) -> bool:
    """T is contained in T*, i.e. <f, k> = <g, h> on all pairs."""
    return hermitian_defect(t) <= TOLERANCES.tol_eq


def _selfadjoint_criteria(t: LinearRelation):
    by_dimension = is_symmetric(t) and t.dim == t.space_dim
    by_adjoint = t.isclose(adjoint(t))
    return by_dimension, by_adjoint


def is_selfadjoint(t: LinearRelation) -> bool:
    by_dimension, by_adjoint = _selfadjoint_criteria(t)
    if by_dimension != by_adjoint:
        raise ConsistencyError(
            'selfadjointness criteria disagree: symmetric with dim = n gives '
            f'{by_dimension}, T = T* gives {by_adjoint} '
            f'(distance {t.distance(adjoint(t)):.2e})')
    return by_dimension


def is_positive(t: LinearRelation) -> bool:
    """<f, g> >= 0 on all pairs."""
    return is_symmetric(t) and _is_psd(_form(t))


def is_quasi_null(t: LinearRelation) -> bool:
    """<f, g> = 0 on all pairs."""
    if not is_positive(t):
        return False
    form = _form(t)
    if form.size == 0:
        return True
    scale = np.linalg.norm(t.first, 2) * np.linalg.norm(t.second, 2)
    return bool(np.abs(form).max() <= TOLERANCES.tol_eq * max(scale, np.finfo(float).tiny))


def _norm_defect_form(t: LinearRelation) -> np.ndarray:
    f, g = t.first, t.second
    return f.conj().T @ f - g.conj().T @ g


def is_contraction(t: LinearRelation) -> bool:
    """||g|| <= ||f|| on all pairs."""
    return _is_psd(_norm_defect_form(t))


def is_isometry(t: LinearRelation) -> bool:
    """||g|| = ||f|| on all pairs."""
    defect = _norm_defect_form(t)
    if defect.size == 0:
        return True
    return is_contraction(t) and bool(np.abs(defect).max() <= TOLERANCES.tol_eq)


def _domain_coefficients(t: LinearRelation) -> np.ndarray:
    """Orthonormal basis of (ker F)^perp inside the coefficient space."""
    f = t.first
    if t.dim == 0:
        return np.zeros((0, 0), dtype=complex)
    _, s, vh = np.linalg.svd(f, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((t.dim, 0), dtype=complex)
    rank = int(np.count_nonzero(s > TOLERANCES.tol_rank * s[0]))
    return vh[:rank].conj().T


def bounds(t: LinearRelation) -> Bounds:
    """m_A and M_A from the definite pencil (F*G, F*F) with ker F deflated."""
    if not is_symmetric(t):
        raise PreconditionError('bounds are defined for symmetric relations only')
    coeffs = _domain_coefficients(t)
    if coeffs.shape[1] == 0:
        return Bounds(math.inf, -math.inf)
    fr = t.first @ coeffs
    form = coeffs.conj().T @ _form(t) @ coeffs
    form = (form + form.conj().T) / 2
    gram = fr.conj().T @ fr
    lam = sla.eigh(form, (gram + gram.conj().T) / 2, eigvals_only=True)
    logger.debug('bounds pencil of size %d: [%.6g, %.6g]', lam.size, lam[0], lam[-1])
    return Bounds(float(lam[0]), float(lam[-1]))


def is_semibounded(t: LinearRelation):
    """(lower, upper) flags; at finite dimension every symmetric relation is both."""
    if not is_symmetric(t):
        return False, False
    b = bounds(t)
    return b.lower < math.inf, b.upper > -math.inf


def relation_norm(t: LinearRelation) -> float:
    """sup ||g|| / ||f||; infinite when mul T is nontrivial."""
    if t.dim == 0:
        return 0.0
    if t.mul.dim:
        return math.inf
    f, g = t.first, t.second
    gram_f = f.conj().T @ f
    gram_g = g.conj().T @ g
    try:
        lam = sla.eigh((gram_g + gram_g.conj().T) / 2, (gram_f + gram_f.conj().T) / 2,
                       eigvals_only=True)
    except np.linalg.LinAlgError:
        logger.debug('pencil (G*G, F*F) is not definite, treating the relation as unbounded')
        return math.inf
    return float(math.sqrt(max(lam[-1], 0.0)))


def is_bounded(t: LinearRelation) -> bool:
    return math.isfinite(relation_norm(t))


def resolvent_norm(t: LinearRelation, zeta: complex) -> float:
    """||(T - zeta I)^{-1}||, infinite at eigenvalues."""
    return relation_norm(inverse(shift(t, zeta)))


def default_probes(t: LinearRelation) -> Sequence[complex]:
    """Points of the quasi-regular set used to measure the deficiency index."""
    probes = [1j, -1j]
    b = bounds(t)
    probes.append(b.lower - 1.0 if b.defined else 0.0)
    return probes


def is_maximal_symmetric(t: LinearRelation) -> bool:
    """Symmetric without a proper symmetric extension (deficiency index 0)."""
    from linrel.extensions.deficiency import deficiency_index
    return is_symmetric(t) and deficiency_index(t) == 0


class ClassificationReport:
    """Named predicates and numeric bounds of one relation."""

    def __init__(self, t: LinearRelation, probes: Optional[Sequence[complex]] = None):
        self.space_dim = t.space_dim
        self.dim = t.dim
        dom, ran, ker, mul = t.parts()
        self.part_dims = dict(dom=dom.dim, ran=ran.dim, ker=ker.dim, mul=mul.dim)
        self.symmetric = is_symmetric(t)
        self.selfadjoint = is_selfadjoint(t)
        self.positive = is_positive(t)
        self.quasi_null = is_quasi_null(t)
        self.contraction = is_contraction(t)
        self.isometry = is_isometry(t)
        self.relation_norm = relation_norm(t)
        self.lower_bound: Optional[float] = None
        self.upper_bound: Optional[float] = None
        self.deficiency_index: Optional[int] = None
        if self.symmetric:
            from linrel.extensions.deficiency import deficiency_index
            b = bounds(t)
            self.lower_bound, self.upper_bound = b.lower, b.upper
            self.deficiency_index = deficiency_index(t, probes)

    @property
    def lower_semibounded(self) -> bool:
        return self.lower_bound is not None and math.isfinite(self.lower_bound)

    @property
    def upper_semibounded(self) -> bool:
        return self.upper_bound is not None and math.isfinite(self.upper_bound)

    def as_dict(self) -> dict:
        return dict(
            space_dim=self.space_dim,
            dim=self.dim,
            parts=dict(self.part_dims),
            symmetric=self.symmetric,
            selfadjoint=self.selfadjoint,
            positive=self.positive,
            quasi_null=self.quasi_null,
            contraction=self.contraction,
            isometry=self.isometry,
            lower_semibounded=self.lower_semibounded,
            upper_semibounded=self.upper_semibounded,
            m=self.lower_bound,
            M=self.upper_bound,
            eta=self.deficiency_index,
            norm=self.relation_norm,
        )

    def to_table(self) -> PrettyTable:
        table = PrettyTable()
        table.field_names = ['property', 'value']
        table.align = 'l'
        for key, value in self.as_dict().items():
            if key == 'parts':
                value = ', '.join(f'{k}={v}' for k, v in value.items())
            table.add_row([key, value])
        return table

    def __repr__(self):
        flags = [k for k in ('symmetric', 'selfadjoint', 'positive', 'quasi_null',
                             'contraction', 'isometry') if getattr(self, k)]
        return f'ClassificationReport({", ".join(flags) or "no flags"})'


def classify(t: LinearRelation, probes: Optional[Sequence[complex]] = None) -> ClassificationReport:
    return ClassificationReport(t, probes)
