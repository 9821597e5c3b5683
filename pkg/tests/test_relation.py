import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linrel.algebra.relation import (LinearRelation, add, adjoint, compose, decompose, eigenspace,
                                     from_operator, inverse, join, parts, restrict, scale)
from linrel.algebra.subspace import Subspace
from linrel.errors import DimensionMismatchError
from linrel.graphs.stargraph import StarConfig, star_closure_relation
from linrel.sampling import complex_gaussian, random_relation
from tests.strategies import nested_relations, relations, rngs

E1, E2 = np.array([1.0, 0.0]), np.array([0.0, 1.0])
ZERO = np.zeros(2)


def pairs(*items, n=2):
    first = np.column_stack([f for f, _ in items])
    second = np.column_stack([g for _, g in items])
    return LinearRelation.from_pairs(first, second, n)


def test_from_operator_examples():
    t = from_operator(np.eye(2))
    assert t.isclose(pairs((E1, E1), (E2, E2)))
    assert t.isclose(LinearRelation.identity(2))

    t = from_operator(np.zeros((2, 2)), Subspace.coordinate(2, [0]))
    assert t.isclose(pairs((E1, ZERO)))
    assert t.dim == 1 and t.mul.dim == 0

    assert from_operator(np.diag([1.0, 2.0])).ran.is_full()


def test_from_operator_shape_errors():
    with pytest.raises(DimensionMismatchError):
        from_operator(np.ones((2, 3)))
    with pytest.raises(DimensionMismatchError):
        from_operator(np.eye(2), Subspace.full(3))


def test_parts_examples():
    dom, ran, ker, mul = parts(pairs((E1, ZERO)))
    assert dom.isclose(Subspace.coordinate(2, [0]))
    assert (ran.dim, ker.dim, mul.dim) == (0, 1, 0)
    assert ker.isclose(dom)

    dom, ran, ker, mul = parts(pairs((ZERO, E1)))
    assert (dom.dim, ker.dim) == (0, 0)
    assert ran.isclose(Subspace.coordinate(2, [0]))
    assert mul.isclose(ran)

    dom, ran, ker, mul = parts(from_operator(np.diag([1.0, 2.0])))
    assert dom.is_full() and ran.is_full()
    assert ker.dim == 0 and mul.dim == 0


def test_arithmetic_examples():
    total = add(from_operator(np.diag([1.0, 0.0])), from_operator(np.diag([0.0, 1.0])))
    assert total.isclose(LinearRelation.identity(2))

    assert inverse(pairs((E1, E2))).isclose(pairs((E2, E1)))

    nilpotent = np.array([[0.0, 1.0], [0.0, 0.0]])
    square = compose(from_operator(nilpotent), from_operator(nilpotent))
    assert square.isclose(from_operator(np.zeros((2, 2))))

    doubled = scale(2.0, from_operator(np.diag([1.0, 3.0])))
    assert doubled.isclose(from_operator(np.diag([2.0, 6.0])))


def test_add_over_common_domain():
    # dom T and dom S only share span{e1}
    t = pairs((E1, E1), (E2, E2))
    s = pairs((E1, 2 * E2))
    assert add(t, s).isclose(pairs((E1, E1 + 2 * E2)))


def test_space_mismatch():
    with pytest.raises(DimensionMismatchError):
        add(LinearRelation.identity(2), LinearRelation.identity(3))
    with pytest.raises(DimensionMismatchError):
        LinearRelation.identity(2).contains(LinearRelation.identity(3))


def test_adjoint_examples():
    rng = np.random.default_rng(7)
    m = complex_gaussian(rng, 3, 3)
    assert adjoint(from_operator(m)).isclose(from_operator(m.conj().T))

    adj = adjoint(pairs((E1, ZERO)))
    assert adj.dim == 3
    assert adj.isclose(pairs((E1, ZERO), (E2, ZERO), (ZERO, E2)))


def test_decompose_examples():
    t_op, t_inf = decompose(pairs((E1, ZERO), (ZERO, E2)))
    assert t_op.isclose(pairs((E1, ZERO)))
    assert t_inf.isclose(pairs((ZERO, E2)))

    graph = from_operator(np.array([[1.0, 2.0], [0.0, -1.0]]))
    t_op, t_inf = decompose(graph)
    assert t_op.isclose(graph)
    assert t_inf.dim == 0


def test_decompose_star_closure():
    cfg = StarConfig.unweighted(3)
    n = cfg.space_dim
    t_op, t_inf = decompose(star_closure_relation(cfg))
    leaves = Subspace.coordinate(n, range(1, n))
    assert t_op.isclose(from_operator(np.zeros((n, n)), leaves))
    assert t_inf.isclose(LinearRelation.multivalued(Subspace.coordinate(n, [0])))


def test_restrict_examples():
    graph = from_operator(np.array([[1.0, 2.0], [3.0, 4.0]]))
    restricted = restrict(graph, graph)
    assert restricted.isclose(graph)
    assert restricted.sub_ambient.is_full()

    t = pairs((E1, E1), (ZERO, E2))
    restricted = restrict(t, t)
    assert restricted.isclose(pairs((E1, E1)))
    assert restricted.sub_ambient.isclose(Subspace.coordinate(2, [0]))
    assert restricted.space_dim == 2

    other = random_relation(np.random.default_rng(3), 2)
    assert restrict(LinearRelation.zero(2), other).dim == 0


def test_eigenspace():
    t = from_operator(np.diag([1.0, 2.0, 2.0]))
    assert eigenspace(t, 2.0).isclose(Subspace.coordinate(3, [1, 2]))
    assert eigenspace(t, 3.0).dim == 0


@settings(max_examples=100, deadline=None)
@given(t=relations())
def test_adjoint_is_an_involution(t):
    assert adjoint(adjoint(t)).isclose(t)
    assert adjoint(t).dim == 2 * t.space_dim - t.dim


@settings(max_examples=100, deadline=None)
@given(t=relations())
def test_adjoint_commutes_with_inverse(t):
    assert adjoint(inverse(t)).isclose(inverse(adjoint(t)))


@settings(max_examples=100, deadline=None)
@given(t=relations())
def test_kernel_of_adjoint_is_range_complement(t):
    adj = adjoint(t)
    assert adj.ker.isclose(t.ran.complement())
    total = t.ran.sum(adj.ker)
    assert total.subspace.is_full()
    assert total.direct and total.orthogonal


@settings(max_examples=100, deadline=None)
@given(pair=nested_relations())
def test_adjoint_reverses_inclusion(pair):
    s, t = pair
    assert t.contains(s)
    assert adjoint(s).contains(adjoint(t))


@settings(max_examples=100, deadline=None)
@given(t=relations(), rng=rngs())
def test_adjoint_of_a_multiple(t, rng):
    zeta = complex(complex_gaussian(rng, 1)[0])
    assert adjoint(scale(zeta, t)).isclose(scale(np.conj(zeta), adjoint(t)))


@settings(max_examples=100, deadline=None)
@given(t=relations())
def test_decompose_reproduces_the_relation(t):
    t_op, t_inf = decompose(t)
    total = join(t_op, t_inf)
    assert total.relation.isclose(t)
    assert total.orthogonal
    assert t_op.mul.dim == 0
    assert t_inf.dom.dim == 0
    assert t_inf.ran.isclose(t.mul)


@settings(max_examples=100, deadline=None)
@given(t=relations(max_n=6), rng=rngs())
def test_adjoint_distributes_over_bounded_sums(t, rng):
    s = from_operator(complex_gaussian(rng, t.space_dim, t.space_dim))
    assert adjoint(add(t, s)).isclose(add(adjoint(t), adjoint(s)))


@settings(max_examples=100, deadline=None)
@given(rng=rngs(), n=st.integers(min_value=1, max_value=6))
def test_compose_of_graphs_is_the_product(rng, n):
    m1 = complex_gaussian(rng, n, n)
    m2 = complex_gaussian(rng, n, n)
    assert compose(from_operator(m2), from_operator(m1)).isclose(from_operator(m2 @ m1))


@settings(max_examples=100, deadline=None)
@given(t=relations(max_n=6), rng=rngs())
def test_add_satisfies_the_set_definition(t, rng):
    m = complex_gaussian(rng, t.space_dim, t.space_dim)
    total = add(t, from_operator(m))
    assert total.dim == t.dim
    # every pair (f, k) of T + M splits as (f, k - M f) in T
    for j in range(total.dim):
        f, k = total.first[:, j], total.second[:, j]
        assert t.contains_pair(f, k - m @ f)
