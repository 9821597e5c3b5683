"""Seeded random constructors of relation families.

Symmetric relations are drawn as

    {(f, H f + K f + g) : f in D, g in M}

with D, M and R = (D + M)^perp mutually orthogonal, H Hermitian on D and K
mapping D into R. H fixes the bounds (m = min eig H, M = max eig H), M is
the multivalued part and dim D + dim M = n - eta.
"""
from typing import Optional, Sequence

import numpy as np

from linrel.algebra.relation import LinearRelation
from linrel.algebra.subspace import Subspace
from linrel.errors import PreconditionError
from linrel.extensions.deficiency import deficiency_space
from linrel.extensions.extend import ISOMETRY, VON_NEUMANN, ExtensionParams


def complex_gaussian(rng: np.random.Generator, *shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(complex_gaussian(rng, n, n))
    diag = np.diag(r)
    return q * (diag / np.abs(diag))[np.newaxis, :]


def random_isometry(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """rows x cols matrix with orthonormal columns (cols <= rows)."""
    if cols == 0:
        return np.zeros((rows, 0), dtype=complex)
    return random_unitary(rng, rows)[:, :cols]


def random_subspace(rng: np.random.Generator, m: int, dim: Optional[int] = None) -> Subspace:
    if dim is None:
        dim = int(rng.integers(0, m + 1))
    return Subspace(random_isometry(rng, m, dim), m, check=False)


def random_relation(rng: np.random.Generator, n: int, dim: Optional[int] = None) -> LinearRelation:
    """Uniformly oriented carrier of the given (or random) dimension in C^{2n}."""
    return LinearRelation(random_subspace(rng, 2 * n, dim))


def _dims(rng, n, dom_dim, mul_dim, total=None):
    if total is not None:
        if dom_dim is None:
            dom_dim = int(rng.integers(0, total + 1))
        mul_dim = total - dom_dim if mul_dim is None else mul_dim
    if dom_dim is None:
        dom_dim = int(rng.integers(0, n + 1))
    if mul_dim is None:
        mul_dim = int(rng.integers(0, n - dom_dim + 1))
    if dom_dim < 0 or mul_dim < 0 or dom_dim + mul_dim > n:
        raise PreconditionError(f'cannot fit dom {dom_dim} and mul {mul_dim} into C^{n}')
    return dom_dim, mul_dim


def symmetric_from_parts(rng: np.random.Generator, n: int, spectrum: Sequence[float],
                         mul_dim: int = 0, coupled: bool = True) -> LinearRelation:
    """Symmetric relation with H = diag(spectrum) on a random D."""
    spectrum = np.asarray(spectrum, dtype=float)
    k = spectrum.size
    if k + mul_dim > n:
        raise PreconditionError(f'cannot fit dom {k} and mul {mul_dim} into C^{n}')
    u = random_unitary(rng, n)
    dom, mul, rest = u[:, :k], u[:, k:k + mul_dim], u[:, k + mul_dim:]
    image = dom * spectrum[np.newaxis, :]
    if coupled and rest.shape[1] and k:
        image = image + rest @ complex_gaussian(rng, rest.shape[1], k)
    first = np.hstack([dom, np.zeros((n, mul_dim))])
    second = np.hstack([image, mul])
    return LinearRelation.from_pairs(first, second, n)


def random_symmetric(rng: np.random.Generator, n: int, dom_dim: Optional[int] = None,
                     mul_dim: Optional[int] = None, eta: Optional[int] = None,
                     coupled: bool = True) -> LinearRelation:
    k, l = _dims(rng, n, dom_dim, mul_dim, None if eta is None else n - eta)
    return symmetric_from_parts(rng, n, rng.standard_normal(k) * 2, l, coupled)


def random_selfadjoint(rng: np.random.Generator, n: int, dom_dim: Optional[int] = None) -> LinearRelation:
    k = int(rng.integers(0, n + 1)) if dom_dim is None else dom_dim
    return symmetric_from_parts(rng, n, rng.standard_normal(k) * 2, n - k, coupled=False)


def random_positive(rng: np.random.Generator, n: int, dom_dim: Optional[int] = None,
                    mul_dim: Optional[int] = None, eta: Optional[int] = None,
                    coupled: bool = True) -> LinearRelation:
    k, l = _dims(rng, n, dom_dim, mul_dim, None if eta is None else n - eta)
    spectrum = rng.uniform(0.0, 3.0, k)
    # occasionally include exact zeros so that ker T is exercised
    spectrum[rng.random(k) < 0.2] = 0.0
    return symmetric_from_parts(rng, n, spectrum, l, coupled)


def random_quasi_null(rng: np.random.Generator, n: int, dom_dim: Optional[int] = None,
                      mul_dim: Optional[int] = None, eta: Optional[int] = None,
                      coupled: bool = True) -> LinearRelation:
    k, l = _dims(rng, n, dom_dim, mul_dim, None if eta is None else n - eta)
    return symmetric_from_parts(rng, n, np.zeros(k), l, coupled)


def random_indefinite(rng: np.random.Generator, n: int) -> LinearRelation:
    """Symmetric relation with at least one negative value of <f, g>."""
    k = int(rng.integers(1, n + 1))
    spectrum = rng.standard_normal(k) * 2
    spectrum[int(rng.integers(0, k))] = -rng.uniform(0.5, 3.0)
    l = int(rng.integers(0, n - k + 1))
    return symmetric_from_parts(rng, n, spectrum, l)


def random_symmetric_contraction(rng: np.random.Generator, n: int,
                                 dom_dim: Optional[int] = None) -> LinearRelation:
    """{(f, C f) : f in D} with P_D C Hermitian on D and ||C|| < 1."""
    k = int(rng.integers(0, n + 1)) if dom_dim is None else dom_dim
    u = random_unitary(rng, n)
    dom, rest = u[:, :k], u[:, k:]
    h = complex_gaussian(rng, k, k)
    image = dom @ ((h + h.conj().T) / 2)
    if rest.shape[1] and k:
        image = image + rest @ complex_gaussian(rng, rest.shape[1], k)
    if k:
        norm = np.linalg.norm(image, 2)
        if norm > 0:
            image = image * (rng.uniform(0.2, 0.95) / norm)
    return LinearRelation.from_pairs(dom, image, n)


def random_symmetric_isometry(rng: np.random.Generator, n: int,
                              dom_dim: Optional[int] = None) -> LinearRelation:
    """{(f, U f) : f in D} with P_D U Hermitian on D and ||U f|| = ||f||."""
    k = int(rng.integers(0, n + 1)) if dom_dim is None else dom_dim
    u = random_unitary(rng, n)
    dom, rest = u[:, :k], u[:, k:]
    if k == 0:
        return LinearRelation.zero(n)
    vecs = random_unitary(rng, k)
    cosines = rng.choice([-1.0, 1.0], size=k)
    free = min(k, n - k)
    if free:
        cosines[:free] = rng.uniform(-0.95, 0.95, free)
    sines = np.sqrt(np.clip(1 - cosines ** 2, 0.0, None))
    herm = vecs @ np.diag(cosines) @ vecs.conj().T
    coupling = rest[:, :free] @ np.diag(sines[:free]) @ vecs[:, :free].conj().T
    image = dom @ herm + coupling
    return LinearRelation.from_pairs(dom, image, n)


def random_vn_params(rng: np.random.Generator, a: LinearRelation,
                     dim: Optional[int] = None) -> ExtensionParams:
    """Random D in N_i(A*) with a random isometry into N_{-i}(A*)."""
    source = deficiency_space(a, 1j)
    target = deficiency_space(a, -1j)
    if dim is None:
        dim = int(rng.integers(0, min(source.dim, target.dim) + 1))
    coeffs = random_isometry(rng, source.dim, dim)
    domain = Subspace.from_columns(source.canonical_basis() @ coeffs, 2 * a.space_dim)
    return ExtensionParams(a, domain, random_isometry(rng, target.dim, dim), VON_NEUMANN, ISOMETRY)


def random_admissible_part(rng: np.random.Generator, a: LinearRelation,
                           quasi_null: bool = False) -> LinearRelation:
    """Positive L with A (+) L symmetric, built on Z = (dom A + ran A)^perp.

    L = {(z, H z) : z in Z1} (+) {(0, y) : y in Z2} for orthogonal Z1, Z2 in Z
    and H positive semidefinite on Z1 (zero when ``quasi_null``).
    """
    n = a.space_dim
    z = (a.dom + a.ran).complement()
    if z.dim == 0:
        raise PreconditionError('dom A + ran A is the whole space: no room for L')
    basis = z.basis @ random_unitary(rng, z.dim)
    k = int(rng.integers(1, z.dim + 1))
    l = int(rng.integers(0, z.dim - k + 1))
    z1, z2 = basis[:, :k], basis[:, k:k + l]
    if quasi_null:
        image = np.zeros((n, k), dtype=complex)
    else:
        image = z1 @ np.diag(rng.uniform(0.1, 3.0, k))
    first = np.hstack([z1, np.zeros((n, l))])
    second = np.hstack([image, z2])
    return LinearRelation.from_pairs(first, second, n)


def random_unimodular(rng: np.random.Generator, size: Optional[int] = None):
    return np.exp(1j * rng.uniform(0, 2 * np.pi, size))
