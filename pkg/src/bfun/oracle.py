"""Brute-force representation theory at small rank, independent of the closed forms.

Irreducibles of SL_n are indexed by partitions with at most n rows modulo full
columns.  V_lam (x) Sym^l C^n is computed by the Pieri rule, which is enough to
count diagonal invariants in V_lam1 (x) V_lam2 (x) Sym^l C^n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .lattice import TripleWeight, all_generators, dualize, omega_member
from .roots import Weight, check_rank


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(x < y for x, y in zip(parts, parts[1:])):
            raise DomainError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    def padded(self, n: int) -> "Partition":
        trimmed = tuple(p for p in self.parts if p)
        if len(trimmed) > n:
            raise DomainError(f"partition {self.parts} has more than {n} rows")
        return Partition(trimmed + (0,) * (n - len(trimmed)))

    def size(self) -> int:
        return sum(self.parts)

    def reduced(self, n: int) -> "Partition":
        """Strip full length-n columns (determinant twists are trivial on SL_n)."""
        p = self.padded(n).parts
        return Partition(tuple(x - p[-1] for x in p))


def weight_to_partition(w: Weight) -> Partition:
    coords = w.coords
    if not w.is_dominant():
        raise DomainError(f"weight {w} is not dominant")
    parts = [sum(coords[k:]) for k in range(len(coords))] + [0]
    return Partition(tuple(parts))


def partition_to_weight(p: Partition, n: int) -> Weight:
    parts = p.padded(n).parts
    return Weight(tuple(parts[i] - parts[i + 1] for i in range(n - 1)))


def weyl_dim(n: int, lambda1: Weight) -> int:
    """Dimension of V_lambda1 from the partition form of the Weyl product."""
    check_rank(n)
    if lambda1.n != n:
        raise DomainError(f"weight {lambda1} has rank {lambda1.n}, expected n={n}")
    p = weight_to_partition(lambda1).padded(n).parts
    value = Fraction(1)
    for i, j in itertools.combinations(range(n), 2):
        value *= Fraction(p[i] - p[j] + j - i, j - i)
    if value.denominator != 1:
        raise AssertionError(f"non-integral Weyl dimension {value} for {lambda1}")
    return int(value)


def pieri_strips(p: Partition, l: int, n: int) -> list[Partition]:
    """All partitions with at most n rows obtained by adding a horizontal strip of l boxes."""
    if l < 0:
        raise DomainError(f"strip size l={l} must be >= 0")
    base = p.padded(n).parts
    out: list[Partition] = []

    def grow(i: int, left: int, acc: list[int]) -> None:
        if i == n:
            if left == 0:
                out.append(Partition(tuple(acc)))
            return
        upper = base[i] + left if i == 0 else min(base[i - 1], base[i] + left)
        for q in range(upper, base[i] - 1, -1):
            acc.append(q)
            grow(i + 1, left - (q - base[i]), acc)
            acc.pop()

    grow(0, l, [])
    return out


@lru_cache(maxsize=None)
def _ssyt(parts: tuple[int, ...], n: int) -> int:
    if not any(parts):
        return 1
    rows = len([p for p in parts if p])
    if n == 0 or rows > n:
        return 0
    # the boxes holding n form a horizontal strip; remove it in every possible way
    total = 0
    p = parts + (0,)
    for inner in itertools.product(*[range(p[i + 1], p[i] + 1) for i in range(len(parts))]):
        if n - 1 < len([x for x in inner if x]):
            continue
        total += _ssyt(tuple(x for x in inner if x), n - 1)
    return total


def ssyt_count(p: Partition, n: int) -> int:
    """Semistandard tableaux of shape p with entries in 1..n, via Pieri branching."""
    return _ssyt(tuple(x for x in p.parts if x), n)


def invariant_dim(lam: TripleWeight) -> int:
    """dim of diagonal SL_n invariants in V_lambda1 (x) V_lambda2 (x) Sym^l C^n."""
    if not lam.is_nonnegative():
        raise DomainError(f"triple {lam} is not in Gamma_>=0")
    n = lam.n
    target = weight_to_partition(dualize(lam.lambda2)).reduced(n)
    strips = pieri_strips(weight_to_partition(lam.lambda1), lam.l, n)
    return sum(1 for q in strips if q.reduced(n) == target)


@dataclass
class ScanReport:
    n: int
    bound: int
    checked: int = 0
    disagreements: list[dict] = field(default_factory=list)
    generator_invariants: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagreements and all(v == 1 for v in self.generator_invariants.values())

    def to_tree(self) -> dict:
        return {
            "type": "omega_scan",
            "n": self.n,
            "bound": self.bound,
            "checked": self.checked,
            "disagreements": self.disagreements,
            "generator_invariants": dict(sorted(self.generator_invariants.items())),
            "ok": self.ok,
        }


def small_triples(n: int, bound: int):
    """Every triple in Gamma_>=0 with all weight coordinates and l at most `bound`."""
    rng = range(bound + 1)
    for v1 in itertools.product(rng, repeat=n - 1):
        for v2 in itertools.product(rng, repeat=n - 1):
            for l in rng:
                yield TripleWeight(Weight(v1), Weight(v2), l)


def omega_scan(n: int, bound: int) -> ScanReport:
    """Compare generator decomposability against invariant_dim >= 1 on a box of triples."""
    check_rank(n)
    report = ScanReport(n, bound)
    for lam in small_triples(n, bound):
        report.checked += 1
        has_inv = invariant_dim(lam) >= 1
        member = omega_member(lam)
        if has_inv != member:
            report.disagreements.append({"triple": str(lam), "invariant": has_inv, "omega_member": member})
    for g in all_generators(n):
        report.generator_invariants[str(g)] = invariant_dim(g.triple(n))
    return report
