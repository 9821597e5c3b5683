"""Spectral sets of linear relations at finite dimension.

zeta is an eigenvalue of T when (f, zeta f) lies in T for some f != 0; on
the carrier basis this is the rectangular pencil (G - zeta F) a = 0. Every
null vector has F a != 0 (otherwise (0, 0) would be a nonzero carrier
vector), so the geometric multiplicity is the nullity of G - zeta F.

The spectrum is either a finite set (square regular pencil, dim T = n) or
the whole plane: if dim T < n the range of T - zeta I never fills C^n, and
if the pencil is singular every zeta is an eigenvalue. Continuous spectrum
and eigenvalues of infinite multiplicity cannot occur at finite dimension
and are reported empty.
"""
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as sla

from linrel.algebra.relation import LinearRelation, eigenspace
from linrel.analysis.classify import _domain_coefficients, is_symmetric
from linrel.tolerances import TOLERANCES

logger = logging.getLogger(__name__)

FINITE = 'finite'
PLANE = 'plane'

FINITE_DIMENSION_NOTE = ('continuous spectrum and eigenvalues of infinite multiplicity '
                         'are empty at finite dimension')

# fixed probe points for the singular-pencil test
_GENERIC_POINTS = (0.6180339887 + 0.7548776662j, -1.3247179572 + 0.4142135624j)


class SpectrumReport:
    """Eigenvalues with multiplicities plus the shape of the full spectrum.

    Args:
        eigenvalues: list of (value, multiplicity), sorted by real then
            imaginary part.
        point_whole_plane (bool): every zeta is an eigenvalue.
        spectrum_kind (str, optional): ``'finite'`` or ``'plane'``; None when
            only the point spectrum was computed.
    """

    def __init__(self,
                 eigenvalues: Sequence[Tuple[complex, int]],
                 point_whole_plane: bool = False,
                 spectrum_kind: Optional[str] = None,
                 generic_multiplicity: int = 0):
        self.eigenvalues: List[Tuple[complex, int]] = [(complex(v), int(m)) for v, m in eigenvalues]
        self.point_whole_plane = bool(point_whole_plane)
        self.spectrum_kind = spectrum_kind
        self.generic_multiplicity = int(generic_multiplicity)
        self.note = FINITE_DIMENSION_NOTE

    @property
    def point_spectrum(self) -> List[complex]:
        return [v for v, _ in self.eigenvalues]

    # eigenvalues of finite multiplicity that are isolated: all of them here
    discrete_spectrum = point_spectrum
    spectral_core = point_spectrum

    @property
    def continuous_spectrum(self) -> List[complex]:
        return []

    @property
    def point_infinite(self) -> List[complex]:
        return []

    @property
    def full_spectrum(self) -> Optional[List[complex]]:
        """The spectrum as a finite list, or None when it is all of C."""
        if self.spectrum_kind == PLANE or self.point_whole_plane:
            return None
        return self.point_spectrum

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.eigenvalues)

    def multiplicity(self, zeta: complex) -> int:
        tol = TOLERANCES.tol_cluster * max(1.0, abs(zeta))
        for value, mult in self.eigenvalues:
            if abs(value - zeta) <= tol:
                return mult
        return self.generic_multiplicity if self.point_whole_plane else 0

    def as_dict(self) -> dict:
        return dict(
            eigenvalues=[dict(value=[v.real, v.imag], multiplicity=m) for v, m in self.eigenvalues],
            point_spectrum='plane' if self.point_whole_plane else 'finite',
            spectrum=self.spectrum_kind,
            continuous_spectrum=[],
            point_infinite=[],
            note=self.note,
        )

    def __repr__(self):
        shown = ', '.join(f'{v:.6g} x{m}' for v, m in self.eigenvalues)
        kind = self.spectrum_kind or 'point'
        return f'SpectrumReport({kind}: [{shown}])'


def _cluster(values: Sequence[complex], counts: Optional[Sequence[int]] = None) -> List[Tuple[complex, int]]:
    """Merge values closer than tol_cluster (relative to max(1, |value|))."""
    if counts is None:
        counts = [1] * len(values)
    order = sorted(range(len(values)), key=lambda i: (values[i].real, values[i].imag))
    clusters: List[List] = []
    for i in order:
        v = complex(values[i])
        for cluster in clusters:
            center = cluster[0] / cluster[1]
            if abs(v - center) <= TOLERANCES.tol_cluster * max(1.0, abs(center)):
                cluster[0] += v * counts[i]
                cluster[1] += counts[i]
                cluster[2] += counts[i]
                break
        else:
            clusters.append([v * counts[i], counts[i], counts[i]])
    merged = [(c[0] / c[1], c[2]) for c in clusters]
    merged = [(complex(round(v.real, 15), round(v.imag, 15)), m) for v, m in merged]
    return sorted(merged, key=lambda vm: (vm[0].real, vm[0].imag))


def nullity(t: LinearRelation, zeta: complex) -> int:
    """dim ker(T - zeta I) measured on the pencil with the clustering tolerance."""
    if t.dim == 0:
        return 0
    pencil = t.second - zeta * t.first
    s = np.linalg.svd(pencil, compute_uv=False)
    full = np.zeros(t.dim)
    full[:s.size] = s
    threshold = TOLERANCES.tol_cluster * max(1.0, abs(zeta))
    return int(np.count_nonzero(full <= threshold))


def _is_singular_pencil(t: LinearRelation) -> bool:
    if t.dim > t.space_dim:
        return True
    return all(nullity(t, z) > 0 for z in _GENERIC_POINTS)


def _hermitian_eigenvalues(t: LinearRelation) -> List[Tuple[complex, int]]:
    coeffs = _domain_coefficients(t)
    if coeffs.shape[1] == 0:
        return []
    fr = t.first @ coeffs
    form = coeffs.conj().T @ (t.first.conj().T @ t.second) @ coeffs
    gram = fr.conj().T @ fr
    lam = sla.eigh((form + form.conj().T) / 2, (gram + gram.conj().T) / 2, eigvals_only=True)
    return _cluster([complex(x) for x in lam])


def _rectangular_eigenvalues(t: LinearRelation) -> List[Tuple[complex, int]]:
    f, g = t.first, t.second
    d = t.dim
    # square d x d pencil through a seeded projection; true eigenvalues stay eigenvalues
    rng = np.random.default_rng(0)
    proj = rng.standard_normal((t.space_dim, d)) + 1j * rng.standard_normal((t.space_dim, d))
    proj, _ = np.linalg.qr(proj)
    alpha, beta = sla.eigvals(proj.conj().T @ g, proj.conj().T @ f, homogeneous_eigvals=True)
    candidates = []
    for a, b in zip(alpha, beta):
        if abs(b) <= TOLERANCES.tol_rank * max(abs(a), 1.0):
            continue
        zeta = a / b
        if not np.isfinite(zeta):
            continue
        if nullity(t, zeta) > 0:
            candidates.append(complex(zeta))
    clustered = _cluster(candidates)
    return [(v, nullity(t, v)) for v, _ in clustered]


def point_spectrum(t: LinearRelation) -> SpectrumReport:
    """Eigenvalues of T with geometric multiplicities."""
    if t.dim == 0:
        return SpectrumReport([])
    if _is_singular_pencil(t):
        logger.debug('pencil of %r is singular: every zeta is an eigenvalue', t)
        generic = min(nullity(t, z) for z in _GENERIC_POINTS)
        return SpectrumReport([], point_whole_plane=True, generic_multiplicity=generic)
    if t.dim == t.space_dim and is_symmetric(t):
        eigenvalues = _hermitian_eigenvalues(t)
    else:
        eigenvalues = _rectangular_eigenvalues(t)
    logger.debug('point spectrum of %r: %s', t, eigenvalues)
    return SpectrumReport(eigenvalues)


def full_spectrum(t: LinearRelation) -> SpectrumReport:
    """Point spectrum plus the decision whether sigma(T) is finite or all of C."""
    report = point_spectrum(t)
    if report.point_whole_plane or t.dim < t.space_dim:
        kind = PLANE
    else:
        kind = FINITE
    report.spectrum_kind = kind
    return report


def in_quasi_regular_set(t: LinearRelation, zeta: complex) -> bool:
    """(T - zeta I)^{-1} is a bounded operator, i.e. zeta is no eigenvalue."""
    return eigenspace(t, zeta).dim == 0


def in_regular_set(t: LinearRelation, zeta: complex) -> bool:
    """(T - zeta I)^{-1} is bounded and everywhere defined."""
    if not in_quasi_regular_set(t, zeta):
        return False
    if t.dim == 0:
        return False
    pencil = t.second - zeta * t.first
    s = np.linalg.svd(pencil, compute_uv=False)
    rank = int(np.count_nonzero(s > TOLERANCES.tol_rank * max(s.max(initial=0.0), 1.0)))
    return rank == t.space_dim


def spectral_radius(report: SpectrumReport) -> float:
    if report.point_whole_plane:
        return math.inf
    return max((abs(v) for v in report.point_spectrum), default=0.0)


def spectral_core(t: LinearRelation) -> Optional[List[complex]]:
    """Complement of the quasi-regular set; None when it is all of C."""
    report = point_spectrum(t)
    if report.point_whole_plane:
        return None
    return report.spectral_core
