"""Type A_{n-1} root system: positive roots, weights, pairings, support sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DomainError


def check_rank(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"invalid rank n={n!r}: need an integer n >= 2")
    return n


@dataclass(frozen=True, order=True)
class Root:
    """The positive root e_a - e_b of SL_n, 1 <= a < b <= n."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        check_rank(self.n)
        if not 1 <= self.a < self.b <= self.n:
            raise DomainError(f"invalid root ({self.a},{self.b}) for n={self.n}")

    @property
    def height(self) -> int:
        return self.b - self.a

    def __str__(self):
        return f"e{self.a}-e{self.b}"


@dataclass(frozen=True)
class Weight:
    """Integral weight of SL_n, stored by its coefficients on the fundamental weights."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) < 1:
            raise DomainError("a weight needs at least one fundamental coordinate (n >= 2)")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * (check_rank(n) - 1))

    @classmethod
    def fundamental(cls, i: int, n: int) -> "Weight":
        """The weight of wedge^i of the standard representation; i=0 and i=n give 0."""
        check_rank(n)
        if not 0 <= i <= n:
            raise DomainError(f"fundamental index {i} out of range [0, {n}]")
        coords = [0] * (n - 1)
        if 1 <= i <= n - 1:
            coords[i - 1] = 1
        return cls(tuple(coords))

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _same_rank(self.n, other.n)
        return Weight(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * c for c in self.coords))

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def _same_rank(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DomainError(f"rank mismatch: {n1} vs {n2}")


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Root, ...]:
    """All e_a - e_b with a < b, in lexicographic order."""
    check_rank(n)
    return tuple(Root(a, b, n) for a in range(1, n + 1) for b in range(a + 1, n + 1))


def pairing(root: Root, weight: Weight) -> int:
    """h_root(weight): the sum of the fundamental coordinates a..b-1."""
    _same_rank(root.n, weight.n)
    return sum(weight.coords[root.a - 1 : root.b - 1])


def rho(n: int) -> Weight:
    return Weight((1,) * (check_rank(n) - 1))


def supports(root: Root, j: int, n: int | None = None) -> bool:
    """Whether the simple root alpha_j occurs in `root` (written "root > wedge^j omega").

    j = 0 and j = n are allowed and always give False.
    """
    n = root.n if n is None else n
    _same_rank(root.n, n)
    if not 0 <= j <= n:
        raise DomainError(f"support index j={j} out of range [0, {n}]")
    return 1 <= j <= n - 1 and root.a <= j <= root.b - 1


def _check_chi_index(j: int, n: int) -> None:
    if not 1 <= j <= n:
        raise DomainError(f"chi index j={j} out of range [1, {n}]")


def chi(j: int, root: Root) -> int:
    _check_chi_index(j, root.n)
    return int(supports(root, j) or supports(root, j - 1))


def chi_prime(j: int, root: Root) -> int:
    _check_chi_index(j, root.n)
    return int(supports(root, j) and supports(root, j - 1))


def roots_supporting(j: int, n: int) -> list[Root]:
    return [g for g in positive_roots(n) if supports(g, j)]


def weight_from_sum(terms: Iterable[tuple[int, Weight]], n: int) -> Weight:
    total = Weight.zero(n)
    for k, w in terms:
        total = total + w.scale(k)
    return total
