"""The lattice of triples (lambda1, lambda2, l), the cone Omega and its generators.

Omega is treated as the monoid generated by

    alpha_i = (w_i, w_{n-i}, 0),        1 <= i <= n-1
    beta_j  = (w_{j-1}, w_{n-j}, 1),    1 <= j <= n

where w_k is the k-th fundamental weight and w_0 = w_n = 0.  Triples are
decomposed over these 2n-1 generators by exact rational linear algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .roots import Weight, check_rank


@dataclass(frozen=True)
class TripleWeight:
    lambda1: Weight
    lambda2: Weight
    l: int

    def __post_init__(self):
        if self.lambda1.n != self.lambda2.n:
            raise DomainError(f"rank mismatch between lambda1 (n={self.lambda1.n}) and lambda2 (n={self.lambda2.n})")
        object.__setattr__(self, "l", int(self.l))

    @property
    def n(self) -> int:
        return self.lambda1.n

    @classmethod
    def zero(cls, n: int) -> "TripleWeight":
        return cls(Weight.zero(n), Weight.zero(n), 0)

    @classmethod
    def from_vector(cls, vec: Sequence[int], n: int) -> "TripleWeight":
        if len(vec) != 2 * n - 1:
            raise DomainError(f"triple vector of length {len(vec)} does not match n={n}")
        return cls(Weight(tuple(vec[: n - 1])), Weight(tuple(vec[n - 1 : 2 * n - 2])), vec[-1])

    def vector(self) -> tuple[int, ...]:
        return self.lambda1.coords + self.lambda2.coords + (self.l,)

    def is_nonnegative(self) -> bool:
        """Membership in Gamma_{>=0}: both weights dominant and l >= 0."""
        return self.lambda1.is_dominant() and self.lambda2.is_dominant() and self.l >= 0

    def __add__(self, other: "TripleWeight") -> "TripleWeight":
        return TripleWeight(self.lambda1 + other.lambda1, self.lambda2 + other.lambda2, self.l + other.l)

    def __str__(self):
        return format_triple(self)


@dataclass(frozen=True)
class GeneratorCoords:
    """Coefficients a_1..a_{n-1} on the alpha_i and b_1..b_n on the beta_j."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.a)
        b = tuple(Fraction(x) for x in self.b)
        if len(b) < 2 or len(a) != len(b) - 1:
            raise DomainError(f"generator coordinates need len(a) = len(b) - 1 >= 1, got {len(a)} and {len(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return len(self.b)

    @classmethod
    def zero(cls, n: int) -> "GeneratorCoords":
        check_rank(n)
        return cls((0,) * (n - 1), (0,) * n)

    @classmethod
    def from_vector(cls, vec: Sequence, n: int) -> "GeneratorCoords":
        if len(vec) != 2 * n - 1:
            raise DomainError(f"coordinate vector of length {len(vec)} does not match n={n}")
        return cls(tuple(vec[: n - 1]), tuple(vec[n - 1 :]))

    def vector(self) -> tuple[Fraction, ...]:
        return self.a + self.b

    def __add__(self, other: "GeneratorCoords") -> "GeneratorCoords":
        if self.n != other.n:
            raise DomainError(f"rank mismatch: {self.n} vs {other.n}")
        return GeneratorCoords.from_vector([x + y for x, y in zip(self.vector(), other.vector())], self.n)

    def is_integral(self) -> bool:
        """Omega-integrality: every coordinate is a nonnegative integer."""
        return all(x.denominator == 1 and x >= 0 for x in self.vector())

    def __str__(self):
        return f"a=[{_join(self.a)}] b=[{_join(self.b)}]"


def _join(xs) -> str:
    return ",".join(str(x) for x in xs)


@dataclass(frozen=True)
class SubconeTag:
    """One of Delta, DeltaLt(j), DeltaGe(j), General."""

    kind: str
    j: int | None = None

    def __post_init__(self):
        if self.kind not in ("Delta", "DeltaLt", "DeltaGe", "General"):
            raise DomainError(f"unknown subcone kind {self.kind!r}")
        if (self.kind in ("DeltaLt", "DeltaGe")) != (self.j is not None):
            raise DomainError(f"subcone {self.kind} {'needs' if self.j is None else 'takes no'} index")

    def __str__(self):
        return self.kind if self.j is None else f"{self.kind}({self.j})"

    @classmethod
    def parse(cls, text: str) -> "SubconeTag":
        m = re.fullmatch(r"\s*(Delta|DeltaLt|DeltaGe|General)\s*(?:\(\s*(\d+)\s*\))?\s*", text)
        if not m:
            raise DomainError(f"cannot parse subcone {text!r}; expected Delta, DeltaLt(j), DeltaGe(j) or General")
        return cls(m.group(1), int(m.group(2)) if m.group(2) else None)

    def free_indices(self, n: int) -> list[int]:
        """Positions (in the a+b coordinate vector) that may be nonzero on this subcone."""
        if self.kind == "General":
            return list(range(2 * n - 1))
        if self.kind == "Delta":
            return list(range(n - 1))
        j = self.j
        if not 1 <= j <= n:
            raise DomainError(f"subcone index j={j} out of range [1, {n}]")
        if self.kind == "DeltaLt":
            alphas = [i - 1 for i in range(1, j)]
        else:
            alphas = [i - 1 for i in range(j, n)]
        return alphas + [n - 1 + j - 1]


DELTA = SubconeTag("Delta")
GENERAL = SubconeTag("General")


@dataclass(frozen=True)
class Generator:
    """A named generator of Omega: alpha_i or beta_j."""

    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Generator":
        m = re.fullmatch(r"\s*(alpha|beta)_?(\d+)\s*", text)
        if not m:
            raise DomainError(f"cannot parse generator {text!r}; expected alpha<i> or beta<j>")
        return cls(m.group(1), int(m.group(2)))

    def validate(self, n: int) -> "Generator":
        check_rank(n)
        upper = n - 1 if self.kind == "alpha" else n
        if not 1 <= self.index <= upper:
            raise DomainError(f"{self} out of range for n={n} (index must be in [1, {upper}])")
        return self

    def coords(self, n: int) -> GeneratorCoords:
        self.validate(n)
        vec = [0] * (2 * n - 1)
        pos = self.index - 1 if self.kind == "alpha" else n - 1 + self.index - 1
        vec[pos] = 1
        return GeneratorCoords.from_vector(vec, n)

    def triple(self, n: int) -> TripleWeight:
        self.validate(n)
        if self.kind == "alpha":
            return generator_alpha(self.index, n)
        return generator_beta(self.index, n)


def all_generators(n: int) -> list[Generator]:
    check_rank(n)
    return [Generator("alpha", i) for i in range(1, n)] + [Generator("beta", j) for j in range(1, n + 1)]


def generator_alpha(i: int, n: int) -> TripleWeight:
    check_rank(n)
    if not 1 <= i <= n - 1:
        raise DomainError(f"alpha index i={i} out of range [1, {n - 1}]")
    return TripleWeight(Weight.fundamental(i, n), Weight.fundamental(n - i, n), 0)


def generator_beta(j: int, n: int) -> TripleWeight:
    check_rank(n)
    if not 1 <= j <= n:
        raise DomainError(f"beta index j={j} out of range [1, {n}]")
    return TripleWeight(Weight.fundamental(j - 1, n), Weight.fundamental(n - j, n), 1)


def dualize(w: Weight) -> Weight:
    """-w_0 on weights: reverse the fundamental coordinates."""
    return Weight(tuple(reversed(w.coords)))


@lru_cache(maxsize=None)
def generator_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows: triple coordinates (lambda1, lambda2, l); columns: alpha_1.., beta_1..."""
    cols = [g.triple(n).vector() for g in all_generators(n)]
    return tuple(tuple(col[r] for col in cols) for r in range(2 * n - 1))


def _invert(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == r)) for i in range(size)] for r, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise AssertionError(f"generator matrix is singular (column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def _inverse_generator_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in _invert(generator_matrix(n)))


def to_generator_coords(lam: TripleWeight) -> GeneratorCoords:
    inv = _inverse_generator_matrix(lam.n)
    vec = lam.vector()
    return GeneratorCoords.from_vector([sum(x * v for x, v in zip(row, vec)) for row in inv], lam.n)


def coords_to_triple(c: GeneratorCoords) -> TripleWeight:
    if not all(x.denominator == 1 for x in c.vector()):
        raise DomainError(f"coordinates {c} do not give an integral triple")
    m = generator_matrix(c.n)
    vec = c.vector()
    out = [sum(x * v for x, v in zip(row, vec)) for row in m]
    return TripleWeight.from_vector([int(x) for x in out], c.n)


def omega_member(lam: TripleWeight) -> bool:
    return to_generator_coords(lam).is_integral()


def in_subcone(c: GeneratorCoords, tag: SubconeTag) -> bool:
    if tag.kind == "General":
        return True
    free = set(tag.free_indices(c.n))
    return all(x == 0 for k, x in enumerate(c.vector()) if k not in free)


def classify_subcone(c: GeneratorCoords) -> SubconeTag:
    """Smallest listed subcone containing c; a lone beta_j with no alphas counts as DeltaGe(j)."""
    if not c.is_integral():
        raise DomainError(f"coordinates {c} are not Omega-integral")
    nonzero_b = [j for j, x in enumerate(c.b, start=1) if x != 0]
    if not nonzero_b:
        return DELTA
    if len(nonzero_b) > 1:
        return GENERAL
    j = nonzero_b[0]
    nonzero_a = [i for i, x in enumerate(c.a, start=1) if x != 0]
    if all(i >= j for i in nonzero_a):
        return SubconeTag("DeltaGe", j)
    if all(i < j for i in nonzero_a):
        return SubconeTag("DeltaLt", j)
    return GENERAL


# text grammar: "λ1=[c1,...] λ2=[...] l=k"

_TRIPLE_RE = re.compile(
    r"^\s*(?:λ1|lambda1)\s*=\s*\[([^\]]*)\]\s+(?:λ2|lambda2)\s*=\s*\[([^\]]*)\]\s+l\s*=\s*(-?\d+)\s*$"
)


def parse_int_list(text: str) -> tuple[int, ...]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return ()
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError:
        raise DomainError(f"cannot parse integer list {text!r}") from None


def parse_weight(text: str, n: int | None = None) -> Weight:
    coords = parse_int_list(text)
    if n is not None and len(coords) != n - 1:
        raise DomainError(f"weight {text!r} has {len(coords)} coordinates, expected {n - 1} for n={n}")
    return Weight(coords)


def parse_triple(text: str, n: int | None = None) -> TripleWeight:
    m = _TRIPLE_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse triple {text!r}; expected 'λ1=[..] λ2=[..] l=k'")
    w1, w2 = parse_int_list(m.group(1)), parse_int_list(m.group(2))
    if len(w1) != len(w2):
        raise DomainError(f"triple {text!r}: lambda1 and lambda2 have different lengths")
    lam = TripleWeight(Weight(w1), Weight(w2), int(m.group(3)))
    if n is not None and lam.n != n:
        raise DomainError(f"triple {text!r} has rank {lam.n}, expected n={n}")
    return lam


def format_triple(lam: TripleWeight) -> str:
    return f"λ1={lam.lambda1} λ2={lam.lambda2} l={lam.l}"
