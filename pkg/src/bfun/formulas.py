"""Closed-form b-functions and H-functions for the triple flag variety of SL_n.

Polynomials in the single-flag case are over the fundamental coordinates
m1..m{n-1} of lambda; everything on the triple space is over the generator
coordinates a1..a{n-1}, b1..bn of lambda.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .lattice import (
    DELTA,
    Generator,
    GeneratorCoords,
    SubconeTag,
    TripleWeight,
    classify_subcone,
    generator_matrix,
    in_subcone,
    to_generator_coords,
)
from .roots import Root, Weight, chi, chi_prime, check_rank, pairing, positive_roots, rho, supports
from .symbolic import FactoredPolynomial, GammaLift, LinearForm, gamma_ratio


def weight_variables(n: int) -> tuple[str, ...]:
    return tuple(f"m{i}" for i in range(1, check_rank(n)))


def generator_variables(n: int) -> tuple[str, ...]:
    check_rank(n)
    return tuple(f"a{i}" for i in range(1, n)) + tuple(f"b{j}" for j in range(1, n + 1))


def _b_index(j: int, n: int) -> int:
    return n - 1 + j - 1


def _root_form(root: Root) -> LinearForm:
    """h_root(lambda) + h_root(rho) over the fundamental coordinates of lambda."""
    n = root.n
    slope = tuple(int(root.a <= k <= root.b - 1) for k in range(1, n))
    return LinearForm(slope, root.height)


def kashiwara_b(n: int, mu: Weight) -> FactoredPolynomial:
    """prod over positive roots of prod_{i=1}^{h(mu)} (h(lambda) + h(rho) + i)."""
    check_rank(n)
    if mu.n != n:
        raise DomainError(f"weight {mu} has rank {mu.n}, expected n={n}")
    if not mu.is_dominant():
        raise DomainError(f"weight {mu} is not dominant")
    factors = []
    for root in positive_roots(n):
        base = _root_form(root)
        factors += [base + i for i in range(1, pairing(root, mu) + 1)]
    return FactoredPolynomial(weight_variables(n), 1, tuple(factors))


def projective_b(m: int) -> FactoredPolynomial:
    if m < 0:
        raise DomainError(f"projective degree m={m} must be >= 0")
    return FactoredPolynomial(("l",), 1, tuple(LinearForm((1,), i) for i in range(1, m + 1)))


@lru_cache(maxsize=None)
def triple_forms(n: int) -> tuple[tuple[LinearForm, ...], tuple[LinearForm, ...], LinearForm]:
    """lambda1, lambda2 fundamental coordinates and l as forms in generator coordinates."""
    rows = [LinearForm(row, 0) for row in generator_matrix(n)]
    return tuple(rows[: n - 1]), tuple(rows[n - 1 : 2 * n - 2]), rows[-1]


def b_K(mu: TripleWeight) -> FactoredPolynomial:
    """Kashiwara's b-function on each flag factor times the projective one."""
    if not mu.is_nonnegative():
        raise DomainError(f"triple {mu} is not in Gamma_>=0")
    n = mu.n
    variables = generator_variables(n)
    lam1, lam2, lform = triple_forms(n)
    return (
        kashiwara_b(n, mu.lambda1).substitute(lam1, variables)
        * kashiwara_b(n, mu.lambda2).substitute(lam2, variables)
        * projective_b(mu.l).substitute((lform,), variables)
    )


def _rho_heights(n: int) -> int:
    return math.prod(g.height for g in positive_roots(n))


def H_delta(lambda1: Weight) -> Fraction:
    """H on the subcone Delta: the Weyl dimension of V_{lambda1}."""
    if not lambda1.is_dominant():
        raise DomainError(f"weight {lambda1} is not dominant")
    n = lambda1.n
    shifted = lambda1 + rho(n)
    num = math.prod(pairing(g, shifted) for g in positive_roots(n))
    return Fraction(num, _rho_heights(n))


def _alpha_part(root: Root, free_alphas: Sequence[int], n: int) -> LinearForm:
    """h_root(rho + sum_{i free} a_i w_i) as a form in generator coordinates."""
    slope = [0] * (2 * n - 1)
    for i in free_alphas:
        if supports(root, i):
            slope[i - 1] = 1
    return LinearForm(tuple(slope), root.height)


def _free_alphas(tag: SubconeTag, n: int) -> list[int]:
    return [k + 1 for k in tag.free_indices(n) if k < n - 1]


def _b_var(j: int, n: int, coeff: int = 1) -> LinearForm:
    return LinearForm.variable(_b_index(j, n), 2 * n - 1).scale(coeff)


def H_form(n: int, tag: SubconeTag) -> FactoredPolynomial:
    """H as a polynomial in the coordinates free on Delta, DeltaLt(j) or DeltaGe(j)."""
    check_rank(n)
    if tag.kind == "General":
        raise DomainError("H is only known in closed form on Delta, DeltaLt(j), DeltaGe(j)")
    free = _free_alphas(tag, n)
    factors = []
    for g in positive_roots(n):
        f = _alpha_part(g, free, n)
        if tag.j is not None:
            f = f + _b_var(tag.j, n, chi(tag.j, g))
        factors.append(f)
    return FactoredPolynomial(generator_variables(n), Fraction(1, _rho_heights(n)), tuple(factors))


def H_subcone(j: int, c: GeneratorCoords) -> Fraction:
    n = c.n
    if not 1 <= j <= n:
        raise DomainError(f"subcone index j={j} out of range [1, {n}]")
    tag = classify_subcone(c)
    lt, ge = SubconeTag("DeltaLt", j), SubconeTag("DeltaGe", j)
    if tag == DELTA:
        use = DELTA
    elif in_subcone(c, ge):
        use = ge
    elif in_subcone(c, lt):
        use = lt
    else:
        raise DomainError(f"coordinates {c} lie in {tag}, not in Delta, DeltaLt({j}) or DeltaGe({j})")
    return H_form(n, use).evaluate(c.vector())


def admissible_pair(n: int, mu: Generator, tag: SubconeTag) -> bool:
    mu.validate(n)
    if tag.kind == "Delta":
        return mu.kind == "alpha"
    if tag.kind == "General":
        return False
    if not 1 <= tag.j <= n:
        return False
    if mu.kind == "beta":
        return mu.index == tag.j
    return mu.index < tag.j if tag.kind == "DeltaLt" else mu.index >= tag.j


def bG3_subcone(n: int, mu: Generator, tag: SubconeTag) -> FactoredPolynomial:
    """The b-function of a generator on a subcone where H is known, in that subcone's free coordinates."""
    check_rank(n)
    if not admissible_pair(n, mu, tag):
        raise DomainError(f"inadmissible pair: {mu} on subcone {tag} for n={n}")
    variables = generator_variables(n)
    free = _free_alphas(tag, n)
    factors: list[LinearForm] = []
    scalar = Fraction(1)
    if tag.kind == "Delta":
        k = mu.index
        for g in positive_roots(n):
            if supports(g, k):
                base = _alpha_part(g, free, n)
                factors += [base + 1, base]
                scalar /= (g.height + 1) * g.height
    elif mu.kind == "beta":
        j = tag.j
        s = _b_var(j, n)
        for g in positive_roots(n):
            base = _alpha_part(g, free, n) + s
            if supports(g, j - 1) and supports(g, j):
                factors.append(base)
            if supports(g, j - 1) or supports(g, j):
                factors.append(base + 1)
    else:
        k, j = mu.index, tag.j
        for g in positive_roots(n):
            if supports(g, k):
                base = _alpha_part(g, free, n)
                factors.append(base + _b_var(j, n, chi_prime(j, g)))
                factors.append(base + _b_var(j, n, chi(j, g)) + 1)
    return FactoredPolynomial(variables, scalar, tuple(factors))


@lru_cache(maxsize=None)
def gamma_lift_A(n: int) -> GammaLift:
    """The gamma-function lift A(lambda) of the b-function cocycle."""
    check_rank(n)
    dim = 2 * n - 1
    args = [LinearForm.variable(_b_index(j, n), dim, 1) for j in range(1, n + 1)]
    for g in positive_roots(n):
        alpha = [int(supports(g, i)) for i in range(1, n)]
        and_b = [chi_prime(j, g) for j in range(1, n + 1)]
        or_b = [chi(j, g) for j in range(1, n + 1)]
        args.append(LinearForm(tuple(alpha + and_b), g.height))
        args.append(LinearForm(tuple(alpha + or_b), g.height + 1))
    return GammaLift(generator_variables(n), tuple(args))


def _as_coords(n: int, mu) -> GeneratorCoords:
    if isinstance(mu, Generator):
        return mu.coords(n)
    if isinstance(mu, TripleWeight):
        mu = to_generator_coords(mu)
    if mu.n != n:
        raise DomainError(f"coordinates have rank {mu.n}, expected n={n}")
    return mu


def bG3_lift(n: int, mu) -> FactoredPolynomial:
    """A(lambda + mu) / A(lambda) for Omega-integral mu (generator, triple or coordinates)."""
    c = _as_coords(n, mu)
    if not c.is_integral():
        raise DomainError(f"{c} is not Omega-integral")
    return gamma_ratio(gamma_lift_A(n), c.vector())


def lift_constant(n: int, mu) -> Fraction:
    """A(mu), the constant the lifted b-function is divided by."""
    c = _as_coords(n, mu)
    if not c.is_integral():
        raise DomainError(f"{c} is not Omega-integral")
    return gamma_lift_A(n).value_at(c.vector())
