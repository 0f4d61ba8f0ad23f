import pytest
from hypothesis import given
import hypothesis.strategies as st

from bfun.errors import DomainError
from bfun.roots import Root, Weight, chi, chi_prime, pairing, positive_roots, rho, supports

from conftest import weights


def test_positive_roots_small():
    assert [(g.a, g.b) for g in positive_roots(2)] == [(1, 2)]
    assert [(g.a, g.b) for g in positive_roots(3)] == [(1, 2), (1, 3), (2, 3)]
    assert len(positive_roots(4)) == 6


@pytest.mark.parametrize("n", range(2, 9))
def test_root_count(n):
    assert len(positive_roots(n)) == n * (n - 1) // 2


@pytest.mark.parametrize("bad", [1, 0, -3])
def test_invalid_rank(bad):
    with pytest.raises(DomainError):
        positive_roots(bad)


def test_pairing_examples():
    r3 = rho(3)
    assert pairing(Root(2, 3, 3), r3) == 1
    assert pairing(Root(1, 3, 3), r3) == 2
    assert pairing(Root(1, 3, 3), Weight((1, 0))) == 1


def test_pairing_rank_mismatch():
    with pytest.raises(DomainError):
        pairing(Root(1, 2, 2), Weight((1, 0)))


def test_rho():
    assert rho(2).coords == (1,)
    assert rho(3).coords == (1, 1)
    for n in range(2, 8):
        assert pairing(Root(1, n, n), rho(n)) == n - 1
        assert all(pairing(g, rho(n)) == g.b - g.a for g in positive_roots(n))


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(weights(n), weights(n))))
def test_pairing_additive(pair):
    w1, w2 = pair
    for g in positive_roots(w1.n):
        assert pairing(g, w1 + w2) == pairing(g, w1) + pairing(g, w2)


def test_supports_examples():
    assert supports(Root(1, 3, 3), 2, 3)
    assert not supports(Root(1, 2, 3), 2, 3)
    assert not any(supports(g, 0) for g in positive_roots(4))
    assert not any(supports(g, 4) for g in positive_roots(4))
    with pytest.raises(DomainError):
        supports(Root(1, 2, 3), 4, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_support_degree_count(n):
    # j(n-j) roots contain alpha_j: the degree of b_K at the fundamental weight w_j
    for j in range(1, n):
        assert sum(supports(g, j) for g in positive_roots(n)) == j * (n - j)


def test_chi_examples():
    roots = positive_roots(3)
    assert {(g.a, g.b) for g in roots if chi(1, g)} == {(1, 2), (1, 3)}
    assert not any(chi_prime(1, g) for g in roots)
    assert chi(2, Root(1, 3, 3)) == 1 and chi_prime(2, Root(1, 3, 3)) == 1
    with pytest.raises(DomainError):
        chi(0, Root(1, 2, 3))


@pytest.mark.parametrize("n", range(2, 9))
def test_chi_prime_counts(n):
    for j in range(1, n + 1):
        count = sum(chi_prime(j, g) for g in positive_roots(n))
        expected = (j - 1) * (n - j) if 2 <= j <= n - 1 else 0
        assert count == expected
        assert all(chi_prime(j, g) <= chi(j, g) for g in positive_roots(n))
