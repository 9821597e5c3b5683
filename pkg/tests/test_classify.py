import math

import numpy as np
import pytest
from hypothesis import given, settings

from linrel.algebra.relation import LinearRelation, adjoint, decompose, from_operator, negate, restrict
from linrel.analysis.classify import (bounds, classify, is_bounded, is_contraction, is_isometry,
                                      is_maximal_symmetric, is_positive, is_quasi_null,
                                      is_selfadjoint, is_semibounded, is_symmetric, relation_norm,
                                      resolvent_norm)
from linrel.analysis.spectrum import full_spectrum
from linrel.errors import PreconditionError
from linrel.graphs.stargraph import StarConfig, star_closure_relation
from linrel.sampling import (random_indefinite, random_positive, random_quasi_null,
                             random_relation, random_selfadjoint, random_symmetric,
                             random_symmetric_contraction, random_unitary)
from tests.strategies import (quasi_null_relations, rngs, selfadjoint_relations,
                              strictly_positive_relations, symmetric_relations)

E1, E2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
ZERO = np.zeros(2)


def single_pair(f, g):
    return LinearRelation.from_pairs(np.asarray(f), np.asarray(g), len(f))


def diag(*values):
    return from_operator(np.diag(values))


def test_symmetric_examples():
    h = np.array([[2.0, 1 - 1j], [1 + 1j, -1.0]])
    assert is_symmetric(from_operator(h))
    assert is_symmetric(single_pair(E1, E2))
    assert not is_symmetric(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]])))


def test_selfadjoint_examples():
    h = np.array([[2.0, 1 - 1j], [1 + 1j, -1.0]])
    assert is_selfadjoint(from_operator(h))
    assert not is_selfadjoint(single_pair(E1, ZERO))
    assert is_selfadjoint(star_closure_relation(StarConfig.unweighted(4)))


def test_positive_examples():
    t = diag(1.0, 2.0)
    assert is_positive(t) and not is_quasi_null(t)
    assert is_quasi_null(single_pair(E1, E2))
    assert not is_positive(diag(1.0, -1.0))


def test_positivity_is_relative_to_the_form():
    t = single_pair([1.0], [-1e-10])
    assert is_symmetric(t) and bounds(t).lower < 0
    assert not is_positive(t)
    assert not is_positive(diag(-1e-10, -1e-10, -1e-10))
    assert is_positive(single_pair([1.0], [1e-10]))
    assert is_positive(diag(1.0, -1e-12))
    assert not is_positive(diag(1.0, -1e-8))


def test_contraction_examples():
    t = from_operator(0.5 * np.eye(2))
    assert is_contraction(t) and not is_isometry(t)
    assert is_isometry(from_operator(random_unitary(np.random.default_rng(0), 3)))
    assert not is_contraction(single_pair(ZERO, E1))


def test_bounds_examples():
    assert tuple(bounds(diag(1.0, 2.0))) == pytest.approx((1.0, 2.0))
    assert tuple(bounds(single_pair(E1, E2))) == pytest.approx((0.0, 0.0), abs=1e-12)
    assert tuple(bounds(diag(-3.0, 5.0))) == pytest.approx((-3.0, 5.0))


def test_bounds_ignore_the_multivalued_part():
    t = LinearRelation.from_pairs(np.column_stack([E1, ZERO]), np.column_stack([3 * E1, E2]))
    assert tuple(bounds(t)) == pytest.approx((3.0, 3.0))


def test_bounds_of_a_purely_multivalued_relation():
    b = bounds(single_pair(ZERO, E1))
    assert b.lower == math.inf and b.upper == -math.inf
    assert not b.defined


def test_bounds_need_symmetry():
    with pytest.raises(PreconditionError):
        bounds(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]])))


def test_semibounded_flags():
    assert is_semibounded(diag(1.0, 2.0)) == (True, True)
    assert is_semibounded(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]]))) == (False, False)


def test_relation_norm_examples():
    assert relation_norm(diag(1.0, -2.0)) == pytest.approx(2.0)
    assert relation_norm(single_pair(ZERO, E1)) == math.inf
    assert relation_norm(from_operator(np.zeros((2, 2)))) == pytest.approx(0.0, abs=1e-12)
    assert relation_norm(LinearRelation.zero(2)) == 0.0
    assert is_bounded(diag(1.0, -2.0))
    assert not is_bounded(single_pair(ZERO, E1))


def test_resolvent_norm_examples():
    assert resolvent_norm(diag(1.0, 2.0), 0.0) == pytest.approx(1.0)
    assert resolvent_norm(diag(1.0, 2.0), 1.0) == math.inf


def test_maximal_symmetric():
    assert is_maximal_symmetric(diag(1.0, 2.0))
    assert not is_maximal_symmetric(single_pair(E1, ZERO))
    assert not is_maximal_symmetric(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]])))


def test_classification_report():
    report = classify(single_pair(E1, ZERO))
    result = report.as_dict()
    assert result['symmetric'] and result['quasi_null'] and result['positive']
    assert not result['selfadjoint']
    assert result['eta'] == 1
    assert result['m'] == pytest.approx(0.0, abs=1e-12)
    assert result['parts'] == dict(dom=1, ran=0, ker=1, mul=0)
    assert 'quasi_null' in report.to_table().get_string()

    report = classify(from_operator(np.array([[0.0, 1.0], [0.0, 0.0]])))
    assert not report.symmetric
    assert report.deficiency_index is None and report.lower_bound is None
    assert not report.lower_semibounded


@settings(max_examples=150, deadline=None)
@given(rng=rngs())
def test_report_implications(rng):
    maker = [random_relation, random_symmetric, random_positive, random_quasi_null,
             random_selfadjoint, random_symmetric_contraction][int(rng.integers(0, 6))]
    t = maker(rng, int(rng.integers(1, 6)))
    report = classify(t)
    if report.quasi_null:
        assert report.positive
    if report.positive:
        assert report.symmetric
    if report.selfadjoint:
        assert report.symmetric
        assert report.deficiency_index == 0
    if report.isometry:
        assert report.contraction
    if report.symmetric and report.part_dims['dom']:
        assert report.lower_bound <= report.upper_bound + 1e-12
        assert math.isfinite(report.lower_bound) and math.isfinite(report.upper_bound)
        assert report.deficiency_index == t.space_dim - t.dim


@settings(max_examples=100, deadline=None)
@given(t=symmetric_relations())
def test_resolvent_bound_below_the_lower_bound(t):
    m, big_m = bounds(t)
    for alpha in np.linspace(m - 5.0, m - 0.1, 10):
        assert resolvent_norm(t, alpha) <= 1.0 / (m - alpha) + 1e-7
    for alpha in np.linspace(big_m + 0.1, big_m + 5.0, 10):
        assert resolvent_norm(t, alpha) <= 1.0 / (alpha - big_m) + 1e-7


@settings(max_examples=100, deadline=None)
@given(t=symmetric_relations(), rng=rngs())
def test_resolvent_bound_off_the_real_line(t, rng):
    zeta = complex(rng.normal(0, 3), rng.uniform(0.1, 3.0) * rng.choice([-1.0, 1.0]))
    assert resolvent_norm(t, zeta) <= 1.0 / abs(zeta.imag) + 1e-7


@settings(max_examples=100, deadline=None)
@given(t=symmetric_relations())
def test_bounds_survive_restriction(t):
    restricted = restrict(t, t)
    assert np.allclose(bounds(restricted), bounds(t), atol=1e-8)


@settings(max_examples=100, deadline=None)
@given(t=selfadjoint_relations())
def test_selfadjoint_norm_and_spectrum(t):
    assert is_selfadjoint(t)
    m, big_m = bounds(t)
    t_op, _ = decompose(t)
    expected = max(abs(m), abs(big_m))
    assert abs(relation_norm(t_op) - expected) <= 1e-8 * max(1.0, expected)
    for value in full_spectrum(t).point_spectrum:
        assert abs(value.imag) <= 1e-8
        assert m - 1e-8 <= value.real <= big_m + 1e-8


@settings(max_examples=100, deadline=None)
@given(t=quasi_null_relations())
def test_quasi_null_characterizations(t):
    assert is_quasi_null(t)
    assert t.dom.is_orthogonal_to(t.ran)
    adj = adjoint(t)
    assert adj.contains(t) and adj.contains(negate(t))


@settings(max_examples=100, deadline=None)
@given(t=strictly_positive_relations())
def test_quasi_null_characterizations_fail_on_positive(t):
    assert is_positive(t)
    assert not is_quasi_null(t)
    assert not t.dom.is_orthogonal_to(t.ran)
    assert not adjoint(t).contains(negate(t))


@settings(max_examples=100, deadline=None)
@given(rng=rngs())
def test_indefinite_is_not_positive(rng):
    t = random_indefinite(rng, int(rng.integers(1, 7)))
    assert is_symmetric(t)
    assert not is_positive(t)


@settings(max_examples=100, deadline=None)
@given(t=quasi_null_relations(with_domain=True), rng=rngs())
def test_quasi_null_resolvent_bound(t, rng):
    alpha = rng.uniform(0.05, 5.0) * rng.choice([-1.0, 1.0])
    assert resolvent_norm(t, alpha) <= 1.0 / abs(alpha) + 1e-7
