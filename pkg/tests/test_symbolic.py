from fractions import Fraction

import pytest
import sympy
from hypothesis import given
import hypothesis.strategies as st

from bfun.errors import DomainError, NotPolynomialError
from bfun.formulas import gamma_lift_A
from bfun.lattice import Generator
from bfun.symbolic import (
    FactoredPolynomial,
    FactoredRatio,
    GammaLift,
    LinearForm,
    equals,
    evaluate,
    gamma_ratio,
    k_multiset,
    multiply,
    translate,
)

from conftest import fractions, omega_coords, polys

V = ("a1", "b1", "b2")


def F(slope, c):
    return LinearForm(tuple(slope), c)


def to_sympy(p: FactoredPolynomial):
    xs = sympy.symbols(p.variables)
    expr = sympy.Rational(p.scalar.numerator, p.scalar.denominator)
    for f in p.factors:
        expr *= sum(s * x for s, x in zip(f.slope, xs)) + sympy.Rational(f.constant.numerator, f.constant.denominator)
    return sympy.expand(expr)


def test_translate_examples():
    assert translate(F((1, 0, 0), 2), (1, 0, 0)) == F((1, 0, 0), 3)
    assert translate(F((1, 1, 1), 2), (0, 1, 0)) == F((1, 1, 1), 3)
    assert translate(F((1, 1, 1), 2), (0, 0, 0)) == F((1, 1, 1), 2)
    with pytest.raises(DomainError):
        translate(F((1, 0, 0), 2), (1, 0))


def test_multiply_and_multiplicity():
    p = FactoredPolynomial(V, 1, (F((1, 0, 0), 1),))
    sq = multiply(p, p)
    assert sq.scalar == 1 and sq.factors == (F((1, 0, 0), 1),) * 2
    assert sq.multiplicity(F((1, 0, 0), 1)) == 2
    assert sq.render() == "(a1 + 1)^2"


def test_canonical_form():
    p = FactoredPolynomial(V, 1, (F((1, 1, 1), 2), F((1, 0, 0), 1)))
    q = FactoredPolynomial(V, 1, (F((1, 0, 0), 1), F((1, 1, 1), 2)))
    assert equals(p, q)
    # content and sign move into the scalar
    r = FactoredPolynomial(V, 1, (F((-2, 0, 0), -2),))
    assert r.scalar == -2 and r.factors == (F((1, 0, 0), 1),)
    # constant factors are absorbed
    assert FactoredPolynomial(V, 3, (F((0, 0, 0), 5),)) == FactoredPolynomial(V, 15, ())
    with pytest.raises(DomainError):
        FactoredPolynomial(V, 1, (F((0, 0, 0), 0),))


def test_evaluate_example():
    p = FactoredPolynomial(V, Fraction(1, 2), (F((1, 0, 0), 1), F((1, 0, 0), 2)))
    assert evaluate(p, (2, 0, 0)) == 6


@given(polys(3))
def test_canonicalization_idempotent(p):
    assert FactoredPolynomial(p.variables, p.scalar, p.factors) == p


@given(polys(3), polys(3), polys(3))
def test_multiply_commutative_associative(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(polys(3), polys(3), st.tuples(fractions, fractions, fractions))
def test_evaluate_multiplicative(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)


@given(polys(2), st.tuples(fractions, fractions))
def test_canonical_value_matches_raw_product(p, x):
    assert sympy.Rational(str(p.evaluate(x))) == to_sympy(p).subs(dict(zip(sympy.symbols(p.variables), map(lambda v: sympy.Rational(str(v)), x))))


@given(polys(3))
def test_tree_roundtrip(p):
    assert FactoredPolynomial.from_tree(p.to_tree()) == p


def test_render():
    p = FactoredPolynomial(V, Fraction(-3, 4), (F((1, -1, 0), Fraction(-1, 2)), F((0, 0, 2), 0)))
    assert p.render() == "-3/2 (b2)(a1 - b1 - 1/2)"
    assert FactoredPolynomial(V, 5, ()).render() == "5"


def test_ratio_cancels():
    p = FactoredPolynomial(V, 2, (F((1, 0, 0), 1), F((1, 0, 0), 2)))
    q = FactoredPolynomial(V, 4, (F((1, 0, 0), 2),))
    r = FactoredRatio.of(p, q)
    assert r.scalar == Fraction(1, 2) and r.numerator == (F((1, 0, 0), 1),) and not r.denominator
    assert FactoredRatio.of(p, p).is_constant()
    assert FactoredRatio.from_tree(r.inverse().to_tree()) == r.inverse()


# gamma ratios: oracle is sympy's gamma recurrence (expand_func) on the literal gamma quotient

def sympy_gamma_ratio(lift: GammaLift, shift):
    xs = sympy.symbols(lift.variables)

    def ratio(f):
        base = sum(s * x for s, x in zip(f.slope, xs)) + sympy.Rational(str(f.constant))
        k = sum(s * m for s, m in zip(f.slope, shift))
        return sympy.expand_func(sympy.gamma(base + k) / sympy.gamma(base))

    expr = sympy.Integer(1)
    for f in lift.numerator_args:
        expr *= ratio(f)
    for f in lift.denominator_args:
        expr /= ratio(f)
    return sympy.expand(sympy.cancel(expr))


def test_gamma_ratio_examples():
    one = GammaLift(V, (F((1, 0, 0), 1),))
    assert gamma_ratio(one, (2, 0, 0)) == FactoredPolynomial(V, 1, (F((1, 0, 0), 1), F((1, 0, 0), 2)))
    assert gamma_ratio(one, (0, 0, 0)) == FactoredPolynomial(V, 1, ())
    lift = gamma_lift_A(2)
    assert gamma_ratio(lift, (0, 1, 0)) == FactoredPolynomial(V, 1, (F((0, 1, 0), 1), F((1, 1, 1), 2)))


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_ratio_matches_sympy(n):
    lift = gamma_lift_A(n)
    for g in [Generator("alpha", 1), Generator("beta", n)]:
        shift = g.coords(n).vector()
        assert to_sympy(gamma_ratio(lift, shift)) == sympy_gamma_ratio(lift, shift)
    shift = tuple(k % 2 for k in range(2 * n - 1))
    assert to_sympy(gamma_ratio(lift, shift)) == sympy_gamma_ratio(lift, shift)


def test_gamma_ratio_errors():
    with pytest.raises(NotPolynomialError):
        gamma_ratio(GammaLift(V, (F((1, 0, 0), 1),)), (Fraction(1, 2), 0, 0))
    with pytest.raises(NotPolynomialError):
        gamma_ratio(GammaLift(V, (F((1, 0, 0), 1),)), (-1, 0, 0))
    with pytest.raises(NotPolynomialError):
        gamma_ratio(GammaLift(V, (), (F((1, 0, 0), 1),)), (1, 0, 0))
    # a denominator argument may cancel against a numerator one
    both = GammaLift(V, (F((1, 0, 0), 1), F((1, 0, 0), 1)), (F((1, 0, 0), 1),))
    assert gamma_ratio(both, (1, 0, 0)) == FactoredPolynomial(V, 1, (F((1, 0, 0), 1),))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(omega_coords(n), omega_coords(n))))
def test_gamma_ratio_telescopes(pair):
    mu, nu = pair
    lift = gamma_lift_A(mu.n)
    lhs = gamma_ratio(lift, (mu + nu).vector())
    rhs = gamma_ratio(lift, mu.vector()) * gamma_ratio(lift, nu.vector()).translate(mu.vector())
    assert lhs == rhs


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(omega_coords(n, 2), omega_coords(n, 2))))
def test_gamma_ratio_values_against_factorials(pair):
    # A(x + mu) / A(x) at an integer point x, by exact factorials
    x, mu = pair
    lift = gamma_lift_A(x.n)
    expected = lift.value_at((x + mu).vector()) / lift.value_at(x.vector())
    assert gamma_ratio(lift, mu.vector()).evaluate(x.vector()) == expected


def test_k_multiset_examples():
    p = FactoredPolynomial(V, 1, (F((1, 0, 0), 1), F((1, 1, 1), 2)))
    assert k_multiset(p, (1, 1, 1)) == [2]
    assert k_multiset(p, (1, 0, 0)) == [1]
    assert k_multiset(p, (0, 1, 0)) == []
    with pytest.raises(DomainError):
        k_multiset(p, (2, 0, 0))


def test_value_at_needs_positive_integers():
    lift = gamma_lift_A(2)
    assert lift.value_at((0, 0, 0)) == 1
    assert lift.value_at((1, 0, 0)) == 2
    with pytest.raises(DomainError):
        lift.value_at((-1, 0, 0))
