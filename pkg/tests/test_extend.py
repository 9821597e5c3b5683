import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrel.algebra.relation import LinearRelation, adjoint, from_operator, join, negate
from linrel.algebra.subspace import Subspace
from linrel.analysis.classify import bounds, is_positive, is_quasi_null, is_selfadjoint, is_symmetric
from linrel.errors import DimensionMismatchError, PreconditionError
from linrel.extensions.build_extension import EXTENSIONS, build_extension
from linrel.extensions.deficiency import deficiency_index, deficiency_space
from linrel.extensions.extend import (CONTRACTION, ISOMETRY, QUASI_NULL, ExtensionParams,
                                      decompose_extension, extend_semibounded, params_from_part,
                                      positive_extension_qn, symmetric_extension_vn,
                                      verify_semibounded_extension)
from linrel.graphs import stargraph  # noqa: F401
from linrel.sampling import (random_admissible_part, random_positive, random_quasi_null,
                             random_symmetric, random_vn_params)
from tests.strategies import rngs

E1, E2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
Z2 = np.zeros(2)


def e1_zero():
    """span{(e1, 0)} on C^2: quasi-null with deficiency index 1."""
    return LinearRelation.from_pairs(E1, Z2, 2)


def pairs(first, second, n):
    return LinearRelation.from_pairs(np.column_stack(first), np.column_stack(second), n)


def column(*parts):
    return np.concatenate(parts)[:, np.newaxis]


def vn_params(a, c):
    return ExtensionParams(a, deficiency_space(a, 1j), [[c]])


@st.composite
def symmetric_with_deficiency(draw, positive=False):
    rng = draw(rngs())
    eta = draw(st.integers(min_value=1, max_value=3))
    n = draw(st.integers(min_value=eta + 1, max_value=7))
    dom_dim = int(rng.integers(1, n - eta + 1))
    maker = random_positive if positive else random_symmetric
    return maker(rng, n, dom_dim=dom_dim, eta=eta), eta, rng


def test_deficiency_examples():
    diag = from_operator(np.diag([1.0, 2.0]))
    assert deficiency_space(diag, 1j).dim == 0
    assert deficiency_space(diag, -1j).dim == 0
    assert deficiency_index(diag) == 0

    a = e1_zero()
    expected = LinearRelation.from_pairs(E2, E2, 2).carrier
    assert deficiency_space(a, 1.0).isclose(expected)
    assert deficiency_index(a) == 1


def test_deficiency_index_errors():
    with pytest.raises(PreconditionError):
        deficiency_index(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]])))
    with pytest.raises(PreconditionError):
        deficiency_index(e1_zero(), probes=[0.0])
    with pytest.raises(PreconditionError):
        deficiency_index(e1_zero(), probes=[])


def test_semibounded_extension_examples():
    a = e1_zero()
    s = extend_semibounded(a, -1.0)
    assert s.isclose(from_operator(np.diag([0.0, -1.0])))
    assert bounds(s).lower == pytest.approx(-1.0)
    check = verify_semibounded_extension(a, s, -1.0)
    assert check['selfadjoint'] and check['bound_matches'] and check['multiplicity_matches']
    assert check['side'] == 'lower' and check['eta'] == 1

    s = extend_semibounded(a, 2.0)
    assert s.isclose(from_operator(np.diag([0.0, 2.0])))
    assert verify_semibounded_extension(a, s, 2.0)['side'] == 'upper'


def test_semibounded_extension_inside_the_bounds():
    with pytest.raises(PreconditionError, match='alpha not below greatest lower bound'):
        extend_semibounded(e1_zero(), 0.0)
    with pytest.raises(PreconditionError):
        extend_semibounded(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]])), -1.0)


def test_von_neumann_examples():
    a = e1_zero()
    s = symmetric_extension_vn(vn_params(a, 1.0))
    assert s.isclose(pairs([E1, Z2], [Z2, E2], 2))
    s = symmetric_extension_vn(vn_params(a, -1.0))
    assert s.isclose(from_operator(np.zeros((2, 2))))
    for c in np.exp(1j * np.linspace(0.1, 6.0, 7)):
        assert is_selfadjoint(symmetric_extension_vn(vn_params(a, c)))


def test_von_neumann_with_empty_domain():
    a = e1_zero()
    params = ExtensionParams(a, Subspace.zero(4), np.zeros((0, 0)))
    assert symmetric_extension_vn(params).isclose(a)


def test_von_neumann_rejects_bad_parameters():
    a = e1_zero()
    with pytest.raises(PreconditionError, match='isometry'):
        symmetric_extension_vn(vn_params(a, 0.5))
    misplaced = ExtensionParams(a, deficiency_space(a, -1j), [[1.0]])
    with pytest.raises(PreconditionError, match='not contained'):
        symmetric_extension_vn(misplaced)
    with pytest.raises(PreconditionError):
        symmetric_extension_vn(ExtensionParams(a, Subspace.zero(4), [], QUASI_NULL))
    with pytest.raises(PreconditionError):
        ExtensionParams(a, Subspace.zero(4), [], formula='cayley')


def test_extension_params_keep_the_shape_of_v():
    a = e1_zero()
    domain = deficiency_space(a, 1j)
    with pytest.raises(DimensionMismatchError):
        ExtensionParams(a, domain, [[1.0, 0.0]])
    with pytest.raises(DimensionMismatchError):
        ExtensionParams(a, domain, [1.0])
    with pytest.raises(DimensionMismatchError):
        ExtensionParams(a, domain, [])
    tall = ExtensionParams(a, domain, [[1.0], [0.0]])
    assert tall.v_matrix.shape == (2, 1)
    with pytest.raises(DimensionMismatchError, match='expected'):
        symmetric_extension_vn(tall)


def test_quasi_null_extension_examples():
    e1, e2, e3 = np.eye(3)
    a = LinearRelation.from_pairs(e1, e2, 3)
    assert is_quasi_null(a)

    params = ExtensionParams.from_images(a, column(e3, e3), column(-e3, e3), mode=ISOMETRY)
    s = positive_extension_qn(params)
    assert s.isclose(pairs([e1, e3], [e2, np.zeros(3)], 3))
    assert is_quasi_null(s)

    u, w = np.array([1.0, -1.0, 0.0]), np.array([1.0, 1.0, 0.0])
    params = ExtensionParams.from_images(a, column(u, u), column(w, -w))
    with pytest.raises(PreconditionError, match='not contained in A\\*'):
        positive_extension_qn(params)


def test_quasi_null_extension_edge_cases():
    a = e1_zero()
    empty = ExtensionParams(a, Subspace.zero(4), [], QUASI_NULL, CONTRACTION)
    assert positive_extension_qn(empty).isclose(a)

    not_quasi_null = LinearRelation.from_pairs(E1, E1, 2)
    params = ExtensionParams(not_quasi_null, Subspace.zero(4), [], QUASI_NULL)
    with pytest.raises(PreconditionError, match='quasi-null'):
        positive_extension_qn(params)

    with pytest.raises(PreconditionError):
        ExtensionParams.from_images(a, column(E2, E2), column(E1, Z2))


def test_decompose_extension_examples():
    a = e1_zero()
    part, report = decompose_extension(a, a)
    assert part.dim == 0
    assert report.passed
    assert report.worst_margin is None and report.seed is None

    part, report = decompose_extension(from_operator(np.diag([0.0, 1.0])), a)
    assert part.isclose(LinearRelation.from_pairs(E2, E2, 2))
    assert report.passed and report.cross_terms_vanish
    assert report.samples == 256 and report.seed == 1234
    assert report.worst_margin >= 0
    assert 'passed' in report.to_table().get_string()

    part, report = decompose_extension(from_operator(np.diag([0.0, -1.0])), a)
    assert not report.part_positive
    assert not report.passed

    with pytest.raises(PreconditionError):
        decompose_extension(LinearRelation.identity(2), a)


@settings(max_examples=100, deadline=None)
@given(case=symmetric_with_deficiency(), offset=st.floats(min_value=0.2, max_value=3.0),
       below=st.booleans())
def test_semibounded_extension_is_selfadjoint_with_bound_alpha(case, offset, below):
    a, eta, _ = case
    m, big_m = bounds(a)
    alpha = m - offset if below else big_m + offset
    s = extend_semibounded(a, alpha)
    assert s.dim == a.space_dim
    check = verify_semibounded_extension(a, s, alpha)
    assert check['selfadjoint']
    assert check['eta'] == eta
    assert check['bound_matches']
    assert check['alpha_multiplicity'] == eta


@settings(max_examples=100, deadline=None)
@given(rng=rngs(), alpha=st.floats(min_value=0.2, max_value=4.0), sign=st.sampled_from([-1.0, 1.0]))
def test_semibounded_extension_of_quasi_null(rng, alpha, sign):
    n = int(rng.integers(2, 7))
    a = random_quasi_null(rng, n, dom_dim=int(rng.integers(1, n)), eta=1)
    s = extend_semibounded(a, sign * alpha)
    b = bounds(s)
    bound = b.lower if sign < 0 else b.upper
    assert bound == pytest.approx(sign * alpha, rel=1e-8)


@settings(max_examples=100, deadline=None)
@given(case=symmetric_with_deficiency())
def test_von_neumann_index_formula(case):
    a, eta, rng = case
    params = random_vn_params(rng, a)
    s = symmetric_extension_vn(params)
    assert is_symmetric(s)
    assert s.dim == a.dim + params.domain.dim
    assert adjoint(a).contains(s)
    assert deficiency_index(s) == eta - params.domain.dim


@settings(max_examples=100, deadline=None)
@given(case=symmetric_with_deficiency(positive=True), use_vn=st.booleans(),
       offset=st.floats(min_value=0.2, max_value=3.0))
def test_decomposition_passes_exactly_for_positive_extensions(case, use_vn, offset):
    a, _, rng = case
    if use_vn:
        s = symmetric_extension_vn(random_vn_params(rng, a))
    else:
        m, big_m = bounds(a)
        alpha = m - offset if rng.random() < 0.5 else big_m + offset
        s = extend_semibounded(a, alpha)
    _, report = decompose_extension(s, a)
    assert report.contained_in_adjoint
    assert report.passed == is_positive(s)


@settings(max_examples=100, deadline=None)
@given(rng=rngs(), quasi_null=st.booleans())
def test_quasi_null_extension_round_trip(rng, quasi_null):
    eta = int(rng.integers(1, 4))
    n = int(rng.integers(eta + 1, 8))
    a = random_quasi_null(rng, n, eta=eta, coupled=False)
    part = random_admissible_part(rng, a, quasi_null=quasi_null)
    params = params_from_part(a, part)
    assert params.mode == (ISOMETRY if quasi_null else CONTRACTION)
    s = positive_extension_qn(params)
    assert s.isclose(join(a, part).relation)
    assert is_positive(s)
    assert is_quasi_null(s) == quasi_null
    recovered, report = decompose_extension(s, a)
    assert recovered.isclose(part)
    assert report.passed
    assert adjoint(a).contains(negate(s))


@settings(max_examples=100, deadline=None)
@given(rng=rngs(), c=st.floats(min_value=-1.0, max_value=1.0))
def test_real_scalar_maps_give_positive_extensions(rng, c):
    n = int(rng.integers(2, 7))
    a = random_quasi_null(rng, n, eta=1, coupled=False)
    params = ExtensionParams(a, deficiency_space(negate(a), 1.0), [[c]], QUASI_NULL, CONTRACTION)
    s = positive_extension_qn(params)
    assert is_positive(s)
    assert s.dim == a.dim + 1
    if abs(c) == 1.0:
        assert is_quasi_null(s)


@settings(max_examples=100, deadline=None)
@given(rng=rngs(), radius=st.floats(min_value=0.2, max_value=1.0),
       angle=st.floats(min_value=0.3, max_value=2.8))
def test_complex_scalar_maps_are_rejected(rng, radius, angle):
    n = int(rng.integers(2, 7))
    a = random_quasi_null(rng, n, eta=1, coupled=False)
    c = radius * np.exp(1j * angle * rng.choice([-1.0, 1.0]))
    params = ExtensionParams(a, deficiency_space(negate(a), 1.0), [[c]], QUASI_NULL, CONTRACTION)
    with pytest.raises(PreconditionError, match='not symmetric'):
        positive_extension_qn(params)


def test_extension_registry():
    a = e1_zero()
    s = build_extension(dict(type='SemiBounded', alpha=-1.0), a)
    assert s.isclose(from_operator(np.diag([0.0, -1.0])))
    s = build_extension(dict(type='VonNeumann'), a, params=vn_params(a, 1.0))
    assert s.isclose(pairs([E1, Z2], [Z2, E2], 2))
    with pytest.raises(KeyError):
        build_extension(dict(type='Friedrichs'), a)

    assert 'StarFamily' in EXTENSIONS
    assert {'SemiBounded', 'VonNeumann', 'QuasiNullPositive'} <= set(EXTENSIONS.module_dict)
