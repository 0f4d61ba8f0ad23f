import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
import hypothesis.strategies as st

from bfun.errors import DomainError
from bfun.lattice import (
    DELTA,
    Generator,
    GeneratorCoords,
    SubconeTag,
    TripleWeight,
    classify_subcone,
    coords_to_triple,
    dualize,
    format_triple,
    generator_alpha,
    generator_beta,
    generator_matrix,
    omega_member,
    parse_triple,
    to_generator_coords,
)
from bfun.roots import Weight

from conftest import omega_coords, weights


def T(l1, l2, l):
    return TripleWeight(Weight(l1), Weight(l2), l)


def sympy_solve(lam):
    """Independent route: sympy's exact linear solver on the generator matrix."""
    n = lam.n
    m = sympy.Matrix(generator_matrix(n))
    sol = m.LUsolve(sympy.Matrix(lam.vector()))
    return [Fraction(int(x.p), int(x.q)) for x in sol]


def test_generators_n2():
    assert generator_alpha(1, 2) == T((1,), (1,), 0)
    assert generator_beta(1, 2) == T((0,), (1,), 1)
    assert generator_beta(2, 2) == T((1,), (0,), 1)


def test_generators_n3():
    assert generator_beta(2, 3) == T((1, 0), (1, 0), 1)
    assert generator_alpha(1, 3) == T((1, 0), (0, 1), 0)


@pytest.mark.parametrize("i,n", [(0, 2), (2, 2), (4, 4)])
def test_alpha_out_of_range(i, n):
    with pytest.raises(DomainError):
        generator_alpha(i, n)


def test_dualize():
    assert dualize(Weight((1, 0))) == Weight((0, 1))
    assert dualize(Weight((5,))) == Weight((5,))


@given(st.integers(2, 6).flatmap(weights))
def test_dualize_involution(w):
    assert dualize(dualize(w)) == w


def test_coords_examples():
    assert to_generator_coords(T((2,), (2,), 2)) == GeneratorCoords((1,), (1, 1))
    assert to_generator_coords(generator_alpha(1, 2)) == GeneratorCoords((1,), (0, 0))
    half = Fraction(1, 2)
    assert to_generator_coords(T((1,), (1,), 1)) == GeneratorCoords((half,), (half, half))


@pytest.mark.parametrize("n", range(2, 9))
def test_generator_matrix_full_rank(n):
    assert sympy.Matrix(generator_matrix(n)).rank() == 2 * n - 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coords_roundtrip_and_sympy(n):
    top = 2 if n <= 3 else 1
    for vec in itertools.product(range(top + 1), repeat=2 * n - 1):
        lam = TripleWeight.from_vector(vec, n)
        c = to_generator_coords(lam)
        assert list(c.vector()) == sympy_solve(lam)
        if all(x.denominator == 1 for x in c.vector()):
            assert coords_to_triple(c) == lam


@given(st.integers(2, 5).flatmap(omega_coords))
def test_triple_of_coords_is_member(c):
    lam = coords_to_triple(c)
    assert omega_member(lam)
    assert to_generator_coords(lam) == c


def test_omega_member_examples():
    assert omega_member(T((1,), (1,), 0))
    assert not omega_member(T((1,), (0,), 0))
    assert not omega_member(T((1,), (1,), 1))


@pytest.mark.parametrize("n,top", [(2, 3), (3, 1)])
def test_omega_member_closed_under_addition(n, top):
    members = [
        lam for vec in itertools.product(range(top + 1), repeat=2 * n - 1)
        if omega_member(lam := TripleWeight.from_vector(vec, n))
    ]
    for x, y in itertools.product(members, repeat=2):
        assert omega_member(x + y)


def test_classify_examples():
    assert classify_subcone(GeneratorCoords((1,), (0, 0))) == DELTA
    assert classify_subcone(GeneratorCoords((0,), (1, 0))) == SubconeTag("DeltaGe", 1)
    assert classify_subcone(GeneratorCoords((1, 0), (0, 1, 0))) == SubconeTag("DeltaLt", 2)
    assert classify_subcone(GeneratorCoords((1, 1), (0, 1, 0))) == SubconeTag("General")
    assert classify_subcone(GeneratorCoords((0, 0), (1, 1, 0))) == SubconeTag("General")


def test_classify_rejects_nonintegral():
    with pytest.raises(DomainError):
        classify_subcone(GeneratorCoords((Fraction(1, 2),), (0, 0)))
    with pytest.raises(DomainError):
        classify_subcone(GeneratorCoords((-1,), (0, 0)))


def test_triple_text_roundtrip():
    lam = T((1, 0), (0, 2), 3)
    text = format_triple(lam)
    assert text == "λ1=[1,0] λ2=[0,2] l=3"
    assert parse_triple(text) == lam
    assert parse_triple("lambda1=[1] lambda2=[1] l=0") == T((1,), (1,), 0)


@pytest.mark.parametrize("bad", ["λ1=[1] l=0", "λ1=[x] λ2=[1] l=0", "λ1=[1] λ2=[1,0] l=0"])
def test_triple_parse_errors(bad):
    with pytest.raises(DomainError):
        parse_triple(bad)


def test_generator_parse():
    assert Generator.parse("alpha1") == Generator("alpha", 1)
    assert Generator.parse("beta_3") == Generator("beta", 3)
    with pytest.raises(DomainError):
        Generator.parse("gamma1")
    with pytest.raises(DomainError):
        Generator("beta", 4).coords(3)
