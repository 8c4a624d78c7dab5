import pytest
from hypothesis import given

import strategies as strat
from superq.gamma import GammaElement, scalar_product
from superq.partitions import (
    OddPartition,
    StrictPartition,
    enumerate_odd,
    enumerate_strict,
    z,
)
from superq.rational import rat
from superq.schurq import q

p = GammaElement.p


def test_ring_examples():
    assert p((3,)) * p((3, 1)) == p((3, 3, 1))
    assert p((1,)) * p((1,)) == p((1, 1))
    assert (p((1,)) + (-1) * p((1,))).is_zero()
    assert p(3) == p((3,))


def test_canonical_sparse_form():
    f = p((3,)) - p((3,))
    assert f.is_zero() and f.support() == []
    g = GammaElement({(3,): 0, (1,): 2})
    assert g.support() == [OddPartition((1,))]


def test_pow_and_scale():
    assert p(1) ** 0 == GammaElement.one()
    assert p(1) ** 3 == p((1, 1, 1))
    assert rat(1, 2) * (2 * p(3)) == p(3)
    with pytest.raises(ValueError):
        p(1) ** -1


def test_scalar_product_examples():
    assert scalar_product(p(3), p(3)) == rat(3, 2)
    assert scalar_product(p(3), p((1, 1, 1))) == 0
    assert scalar_product(p((3, 1, 1)), p((3, 1, 1))) == rat(3, 4)


def test_scalar_product_diagonal_formula():
    for n in range(7):
        for rho in enumerate_odd(n):
            expected = rat(z(rho), 2**rho.length)
            assert scalar_product(p(rho), p(rho)) == expected


def test_evaluate_examples():
    lam = StrictPartition((2, 1))
    assert p(3).evaluate(lam) == 9
    for n in range(7):
        for mu in enumerate_strict(n):
            assert p(1).evaluate(mu) == mu.size
    f = rat(1, 6) * p(3) - rat(1, 6) * p(1)
    assert f.evaluate(StrictPartition((3,))) == 4
    assert GammaElement.one().evaluate(StrictPartition(())) == 1


def test_d_dp1_examples():
    assert (p((1, 1)) * p(3)).d_dp1() == 2 * p((3, 1))
    assert p(3).d_dp1().is_zero()
    assert p((1, 1, 1)).d_dp1() == 3 * p((1, 1))


def test_adjointness_on_basis_pairs():
    # <p_1 f, g> = (1/2) <f, d/dp_1 g> for all basis pairs up to degree 9
    p1 = p(1)
    for a in range(10):
        for rho in enumerate_odd(a):
            f = p(rho)
            for b in range(10):
                for sigma in enumerate_odd(b):
                    g = p(sigma)
                    lhs = scalar_product(p1 * f, g)
                    rhs = rat(1, 2) * scalar_product(f, g.d_dp1())
                    assert lhs == rhs


def test_adjointness_explicit_value():
    lhs = scalar_product(p(1) * p(1), p((1, 1)))
    rhs = rat(1, 2) * scalar_product(p(1), p((1, 1)).d_dp1())
    assert lhs == rhs == rat(1, 2)


@given(strat.gamma_elements(), strat.gamma_elements(), strat.strict_partitions())
def test_evaluate_is_ring_morphism(f, g, lam):
    assert (f * g).evaluate(lam) == f.evaluate(lam) * g.evaluate(lam)
    assert (f + g).evaluate(lam) == f.evaluate(lam) + g.evaluate(lam)


@given(strat.gamma_elements(), strat.gamma_elements())
def test_mul_commutative(f, g):
    assert f * g == g * f


@given(strat.gamma_elements(max_degree=4), strat.gamma_elements(max_degree=4),
       strat.gamma_elements(max_degree=4))
def test_mul_associative_and_distributive(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(strat.gamma_elements())
def test_json_round_trip(f):
    assert GammaElement.from_json_obj(f.to_json_obj()) == f


@given(strat.gamma_elements(max_degree=8), strat.gamma_elements(max_degree=8))
def test_parseval(f, g):
    # sum over SP_n of 2^{-l} <f, Q_lam> <g, Q_lam> = <f_n, g_n>
    for n in range(9):
        total = sum(
            (
                rat(1, 2**lam.length)
                * scalar_product(f, q(lam))
                * scalar_product(g, q(lam))
                for lam in enumerate_strict(n)
            ),
            start=rat(0),
        )
        expected = scalar_product(
            f.homogeneous_component(n), g.homogeneous_component(n)
        )
        assert total == expected


def test_homogeneous_split():
    f = p(3) + p((1, 1)) + 5 * GammaElement.one()
    split = f.homogeneous_split()
    assert sorted(split) == [0, 2, 3]
    assert split[3] == p(3)
    assert f.degree() == 3
    assert GammaElement.zero().degree() == -1


def test_render():
    f = rat(4, 3) * p((1, 1, 1)) - rat(4, 3) * p(3)
    assert str(f) == "-4/3*p[3] + 4/3*p[1,1,1]"
    assert str(GammaElement.zero()) == "0"
    assert str(GammaElement.one()) == "1"
