"""Truncated star graphs: hub delta_0 joined to N leaves.

The weighted directed adjacency relation is

    A = {(f, <w, f> delta_0) : f orthogonal to delta_0}

on C^{N+1}, coordinate 0 being the hub. It is closed, bounded and quasi-null
with deficiency index 1, and its adjoint, deficiency spaces and the two
one-parameter families of selfadjoint extensions have closed forms that are
checked here against the generic algebra.
"""
import logging
from typing import Sequence, Tuple, Union

import numpy as np

from linrel.algebra.relation import LinearRelation, adjoint, join
from linrel.algebra.subspace import Subspace
from linrel.analysis.spectrum import SpectrumReport, full_spectrum
from linrel.errors import ConsistencyError, PreconditionError
from linrel.extensions.build_extension import EXTENSIONS
from linrel.extensions.deficiency import deficiency_space
from linrel.extensions.extend import ISOMETRY, QUASI_NULL, ExtensionParams
from linrel.tolerances import TOLERANCES

logger = logging.getLogger(__name__)


class StarConfig:
    """Number of leaves and the real, nonzero leaf weights.

    Args:
        leaves (int): N >= 2.
        weights (sequence of float, optional): w_1..w_N; all ones when omitted.
    """

    def __init__(self, leaves: int, weights: Sequence[float] = None):
        leaves = int(leaves)
        if leaves < 2:
            raise PreconditionError(f'a star needs at least 2 leaves, got {leaves}')
        if weights is None:
            weights = np.ones(leaves)
        weights = np.asarray(weights)
        if np.iscomplexobj(weights):
            if np.abs(weights.imag).max() > 0:
                raise PreconditionError('star weights must be real')
            weights = weights.real
        weights = weights.astype(float).ravel()
        if weights.size != leaves:
            raise PreconditionError(f'expected {leaves} weights, got {weights.size}')
        if np.any(weights == 0) or not np.all(np.isfinite(weights)):
            raise PreconditionError('star weights must be finite and nonzero')
        self.leaves = leaves
        self.weights = weights

    @classmethod
    def unweighted(cls, leaves: int) -> 'StarConfig':
        return cls(leaves)

    @classmethod
    def from_dict(cls, cfg: Union[dict, 'StarConfig']) -> 'StarConfig':
        if isinstance(cfg, StarConfig):
            return cfg
        return cls(cfg['leaves'], cfg.get('weights'))

    def as_dict(self) -> dict:
        return dict(leaves=self.leaves, weights=[float(x) for x in self.weights])

    @property
    def space_dim(self) -> int:
        return self.leaves + 1

    @property
    def hub(self) -> np.ndarray:
        delta = np.zeros(self.space_dim, dtype=complex)
        delta[0] = 1.0
        return delta

    @property
    def w(self) -> np.ndarray:
        """The weight vector as an element of C^{N+1}, zero at the hub."""
        vec = np.zeros(self.space_dim, dtype=complex)
        vec[1:] = self.weights
        return vec

    @property
    def weight_norm_sq(self) -> float:
        return float(np.dot(self.weights, self.weights))

    def __eq__(self, other):
        return (isinstance(other, StarConfig) and self.leaves == other.leaves
                and np.array_equal(self.weights, other.weights))

    def __repr__(self):
        return f'StarConfig(leaves={self.leaves}, weights={self.weights.tolist()})'


def _pair_span(cfg: StarConfig, first, second) -> Subspace:
    return Subspace.from_columns(np.vstack([first, second]), 2 * cfg.space_dim)


def build_star(cfg: StarConfig) -> LinearRelation:
    n = cfg.space_dim
    first = np.eye(n, dtype=complex)[:, 1:]
    second = np.outer(cfg.hub, cfg.w.conj())[:, 1:]
    return LinearRelation.from_pairs(first, second, n)


def star_closure_relation(cfg: StarConfig) -> LinearRelation:
    """0 on span{delta_1..delta_N} plus the multivalued pair (0, delta_0)."""
    n = cfg.space_dim
    eye = np.eye(n, dtype=complex)
    first = np.hstack([eye[:, 1:], np.zeros((n, 1))])
    second = np.hstack([np.zeros((n, n - 1)), cfg.hub.reshape(-1, 1)])
    return LinearRelation.from_pairs(first, second, n)


def star_adjoint(cfg: StarConfig, verify: bool = True) -> LinearRelation:
    """{(h, <delta_0, h> w)} (+) span{(0, delta_0)}."""
    n = cfg.space_dim
    eye = np.eye(n, dtype=complex)
    second = np.outer(cfg.w, eye[0])
    first = np.hstack([eye, np.zeros((n, 1))])
    second = np.hstack([second, cfg.hub.reshape(-1, 1)])
    closed_form = LinearRelation.from_pairs(first, second, n)
    if verify:
        generic = adjoint(build_star(cfg))
        if not closed_form.isclose(generic):
            raise ConsistencyError(
                f'star adjoint closed form is off by {closed_form.distance(generic):.2e}')
    return closed_form


def star_deficiency(cfg: StarConfig, zeta: complex, verify: bool = True) -> Subspace:
    """span{(delta_0 + w / zeta, zeta delta_0 + w)}."""
    zeta = complex(zeta)
    if zeta == 0:
        raise PreconditionError('star deficiency space needs zeta != 0')
    hub, w = cfg.hub, cfg.w
    closed_form = _pair_span(cfg, (hub + w / zeta).reshape(-1, 1), (zeta * hub + w).reshape(-1, 1))
    if verify:
        generic = deficiency_space(build_star(cfg), zeta)
        if not closed_form.isclose(generic):
            raise ConsistencyError(
                f'star deficiency closed form is off by {closed_form.distance(generic):.2e} '
                f'at zeta={zeta}')
    return closed_form


def star_sa_family(cfg: StarConfig, beta: complex) -> LinearRelation:
    """S_beta = A (+) span{(i(beta+1)w + (beta-1)delta_0, (beta-1)w - i(beta+1)delta_0)}."""
    beta = complex(beta)
    if abs(abs(beta) - 1.0) > TOLERANCES.tol_eq:
        raise PreconditionError(f'beta must be unimodular, |beta| = {abs(beta):.12g}')
    hub, w = cfg.hub, cfg.w
    first = 1j * (beta + 1) * w + (beta - 1) * hub
    second = (beta - 1) * w - 1j * (beta + 1) * hub
    part = LinearRelation(_pair_span(cfg, first.reshape(-1, 1), second.reshape(-1, 1)))
    total = join(build_star(cfg), part)
    if not total.orthogonal:
        raise ConsistencyError(f'S_beta generator is not orthogonal to A at beta={beta}')
    return total.relation


def star_extension_alpha(cfg: StarConfig, alpha: float) -> Tuple[LinearRelation, SpectrumReport]:
    """A_alpha = A + span{(delta_0 + w / alpha, alpha delta_0 + w)} with its spectrum.

    The nonzero eigenvalues are alpha and -||w||^2 / alpha; 0 has multiplicity N - 1.
    """
    alpha = float(alpha)
    if alpha == 0:
        raise PreconditionError('star extension needs alpha != 0')
    a = build_star(cfg)
    part = LinearRelation(star_deficiency(cfg, alpha, verify=False))
    total = join(a, part)
    if not total.direct:
        raise ConsistencyError(f'A + N_alpha(A*) is not direct at alpha={alpha}')
    report = full_spectrum(total.relation)
    logger.debug('star A_alpha spectrum at alpha=%g: %s', alpha, report)
    return total.relation, report


def star_beta_for_alpha(cfg: StarConfig, alpha: float) -> complex:
    """The member S_beta of the unimodular family equal to A_alpha."""
    alpha = float(alpha)
    if alpha == 0:
        raise PreconditionError('star extension needs alpha != 0')
    s = cfg.weight_norm_sq
    x = s / alpha - alpha
    y = s + 1.0
    return complex(x + 1j * y) / complex(x - 1j * y)


def star_eigvector(cfg: StarConfig, alpha: float) -> np.ndarray:
    """delta_0 - alpha w / ||w||^2, eigenvector of A_alpha for -||w||^2 / alpha."""
    alpha = float(alpha)
    return cfg.hub - alpha * cfg.w / cfg.weight_norm_sq


def star_quasi_null_params(cfg: StarConfig) -> ExtensionParams:
    """D and V of the quasi-null extension formula reproducing S_1.

    D is spanned by (delta_0 - w, delta_0 - w) in N_1(-A*) and V sends it to
    (delta_0 + w, -delta_0 - w) in N_{-1}(-A*); (V - I)D = span{(w, -delta_0)}.
    """
    a = build_star(cfg)
    hub, w = cfg.hub, cfg.w
    generator = np.concatenate([hub - w, hub - w]).reshape(-1, 1)
    image = np.concatenate([hub + w, -hub - w]).reshape(-1, 1)
    return ExtensionParams.from_images(a, generator, image, formula=QUASI_NULL, mode=ISOMETRY)


def star_spectrum_closed_form(cfg: StarConfig, alpha: float):
    """Expected (value, multiplicity) list of A_alpha, sorted like SpectrumReport."""
    s = cfg.weight_norm_sq
    values = [(alpha, 1), (-s / alpha, 1), (0.0, cfg.leaves - 1)]
    return sorted(((complex(v), m) for v, m in values), key=lambda vm: vm[0].real)


@EXTENSIONS.register_module('StarFamily')
def star_family(relation: LinearRelation, star, beta: complex) -> LinearRelation:
    cfg = StarConfig.from_dict(star)
    if not relation.isclose(build_star(cfg)):
        raise PreconditionError('relation is not the star relation of the given configuration')
    return star_sa_family(cfg, beta)
