"""Property suites: cocycle identities, hyperplane (K-multiset) laws and
cross-formula consistency reports.

Failures are results, not exceptions: every check returns a report object
with a ``to_tree()`` form for the CLI.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .errors import DomainError
from .formulas import (
    H_form,
    admissible_pair,
    bG3_lift,
    bG3_subcone,
    b_K,
    kashiwara_b,
    projective_b,
)
from .lattice import (
    DELTA,
    Generator,
    GeneratorCoords,
    SubconeTag,
    TripleWeight,
    all_generators,
    to_generator_coords,
)
from .roots import Weight, check_rank, chi, chi_prime, positive_roots
from .symbolic import FactoredPolynomial, FactoredRatio, LinearForm, k_multiset


@dataclass(frozen=True)
class Family:
    """A cocycle family: how to build b_mu, shift by mu, add and sample parameters."""

    name: str
    b: Callable[[int, Any], FactoredPolynomial]
    shift: Callable[[int, Any], tuple]
    add: Callable[[Any, Any], Any]
    generators: Callable[[int], list]
    sample: Callable[[random.Random, int, int], Any]
    label: Callable[[Any], str] = str


def _rand_weight(rng: random.Random, n: int, top: int) -> Weight:
    return Weight(tuple(rng.randint(0, top) for _ in range(n - 1)))


def _rand_coords(rng: random.Random, n: int, top: int) -> GeneratorCoords:
    return GeneratorCoords.from_vector([rng.randint(0, top) for _ in range(2 * n - 1)], n)


KASHIWARA = Family(
    name="kashiwara",
    b=kashiwara_b,
    shift=lambda n, mu: mu.coords,
    add=lambda x, y: x + y,
    generators=lambda n: [Weight.fundamental(i, n) for i in range(1, n)],
    sample=_rand_weight,
)

PROJECTIVE = Family(
    name="projective",
    b=lambda n, m: projective_b(m),
    shift=lambda n, m: (m,),
    add=lambda x, y: x + y,
    generators=lambda n: [1],
    sample=lambda rng, n, top: rng.randint(0, top),
)

BK = Family(
    name="bK",
    b=lambda n, mu: b_K(mu),
    shift=lambda n, mu: to_generator_coords(mu).vector(),
    add=lambda x, y: x + y,
    generators=lambda n: [g.triple(n) for g in all_generators(n)],
    sample=lambda rng, n, top: TripleWeight(_rand_weight(rng, n, top), _rand_weight(rng, n, top), rng.randint(0, top)),
)

BG3_LIFT = Family(
    name="bG3_lift",
    b=bG3_lift,
    shift=lambda n, c: c.vector(),
    add=lambda x, y: x + y,
    generators=lambda n: [g.coords(n) for g in all_generators(n)],
    sample=_rand_coords,
)

FAMILIES = {f.name: f for f in (KASHIWARA, PROJECTIVE, BK, BG3_LIFT)}
FAMILY_ALIASES = {"bk": "bK", "bg3": "bG3_lift", "bg3_lift": "bG3_lift", "lift": "bG3_lift"}


def get_family(name: str) -> Family:
    key = FAMILY_ALIASES.get(name.lower(), name)
    if key not in FAMILIES:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[key]


# cocycle


@dataclass
class CocycleResult:
    family: str
    n: int
    mu: str
    nu: str
    ok: bool
    lhs: FactoredPolynomial
    rhs: FactoredPolynomial

    def to_tree(self) -> dict:
        node = {"family": self.family, "n": self.n, "mu": self.mu, "nu": self.nu, "ok": self.ok}
        if not self.ok:
            node["lhs"] = self.lhs.to_tree()
            node["rhs"] = self.rhs.to_tree()
        return node


def check_cocycle(family: Family | str, n: int, mu, nu) -> CocycleResult:
    """b_mu(x) * b_nu(x + mu) == b_{mu+nu}(x), compared as canonical factored polynomials."""
    fam = get_family(family) if isinstance(family, str) else family
    lhs = fam.b(n, mu) * fam.b(n, nu).translate(fam.shift(n, mu))
    rhs = fam.b(n, fam.add(mu, nu))
    return CocycleResult(fam.name, n, fam.label(mu), fam.label(nu), lhs == rhs, lhs, rhs)


@dataclass
class SuiteReport:
    family: str
    n: int
    checked: int = 0
    failures: list[CocycleResult] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_tree(self) -> dict:
        return {
            "type": "cocycle_suite",
            "family": self.family,
            "n": self.n,
            "checked": self.checked,
            "ok": self.ok,
            "failures": [f.to_tree() for f in self.failures],
            **self.extra,
        }


def cocycle_suite(family: Family | str, n: int, trials: int = 50, seed: int = 0, top: int = 3) -> SuiteReport:
    """All generator pairs plus `trials` random pairs with coordinates in [0, top]."""
    fam = get_family(family) if isinstance(family, str) else family
    check_rank(n)
    rng = random.Random(seed)
    gens = fam.generators(n)
    pairs = [(g, h) for g in gens for h in gens]
    pairs += [(fam.sample(rng, n, top), fam.sample(rng, n, top)) for _ in range(trials)]
    report = SuiteReport(fam.name, n)
    for mu, nu in pairs:
        result = check_cocycle(fam, n, mu, nu)
        report.checked += 1
        if not result.ok:
            report.failures.append(result)
    return report


# hyperplane corollaries


def pairing_with(delta: Sequence[int], shift: Sequence) -> Fraction:
    return sum((Fraction(d) * Fraction(x) for d, x in zip(delta, shift)), Fraction(0))


@dataclass
class KReport:
    family: str
    n: int
    slopes: int = 0
    constants: dict[str, str] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violated(self, law: str) -> list[dict]:
        return [v for v in self.violations if v["law"] == law]

    def to_tree(self) -> dict:
        return {
            "type": "k_corollaries",
            "family": self.family,
            "n": self.n,
            "slopes": self.slopes,
            "linear_growth_constants": dict(sorted(self.constants.items())),
            "ok": self.ok,
            "violations": self.violations,
        }


def default_k_parameters(fam: Family, n: int) -> list:
    """Generators and all pairwise sums of generators."""
    gens = fam.generators(n)
    out = list(gens)
    for i, g in enumerate(gens):
        for h in gens[i:]:
            out.append(fam.add(g, h))
    return out


def check_k_corollaries(family: Family | str, n: int, mus: Sequence | None = None) -> KReport:
    """Check, for every slope delta occurring in any b_mu:

    * empty:  <delta, mu> = 0 implies K_{delta,mu} is empty;
    * equal:  <delta, mu> = <delta, nu> implies K_{delta,mu} = K_{delta,nu};
    * linear: |K_{delta,mu}| = c <delta, mu> with one nonnegative integer c per delta.
    """
    fam = get_family(family) if isinstance(family, str) else family
    mus = default_k_parameters(fam, n) if mus is None else list(mus)
    polys = [(mu, fam.b(n, mu), fam.shift(n, mu)) for mu in mus]
    slopes = sorted({s for _, p, _ in polys for s in p.slopes()}, key=lambda s: (sum(1 for x in s if x), tuple(-x for x in s)))
    report = KReport(fam.name, n, slopes=len(slopes))
    for delta in slopes:
        dname = LinearForm(delta).render(polys[0][1].variables)
        rows = []
        for mu, p, shift in polys:
            rows.append((fam.label(mu), pairing_with(delta, shift), k_multiset(p, delta)))
        for label, pair, ks in rows:
            if pair == 0 and ks:
                report.violations.append({"law": "empty", "delta": dname, "mu": label, "K": [str(k) for k in ks]})
        by_pairing: dict[Fraction, tuple[str, list]] = {}
        for label, pair, ks in rows:
            if pair in by_pairing and by_pairing[pair][1] != ks:
                other, oks = by_pairing[pair]
                report.violations.append({
                    "law": "equal", "delta": dname, "pairing": str(pair),
                    "mu": other, "nu": label, "K_mu": [str(k) for k in oks], "K_nu": [str(k) for k in ks],
                })
            by_pairing.setdefault(pair, (label, ks))
        ratios = {Fraction(len(ks)) / pair for _, pair, ks in rows if pair != 0}
        if len(ratios) == 1:
            (c,) = ratios
            report.constants[dname] = str(c)
            if c.denominator != 1:
                report.violations.append({"law": "linear", "delta": dname, "c": str(c)})
        elif len(ratios) > 1:
            report.violations.append({"law": "linear", "delta": dname, "ratios": sorted(str(r) for r in ratios)})
    return report


# cross-formula consistency


@dataclass
class ConsistencyReport:
    pair: tuple[str, str]
    n: int
    subcone: str
    mu: str
    verdict: str
    constant: Fraction | None = None
    witness: FactoredRatio | None = None

    def __post_init__(self):
        if (self.verdict == "RatioNonConstant") != (self.witness is not None):
            raise ValueError("witness must be present exactly for RatioNonConstant")

    @property
    def key(self) -> tuple:
        return (self.n, self.mu, self.subcone, self.pair)

    def to_tree(self) -> dict:
        node = {
            "type": "consistency",
            "pair": list(self.pair),
            "n": self.n,
            "subcone": self.subcone,
            "mu": self.mu,
            "verdict": self.verdict,
        }
        if self.constant is not None:
            node["constant"] = str(self.constant)
        if self.witness is not None:
            node["witness"] = self.witness.to_tree()
        return node

    def render(self) -> str:
        detail = ""
        if self.verdict == "MatchUpToConstant":
            detail = f"({self.constant})"
        elif self.witness is not None:
            detail = f" witness {self.witness.render()}"
        return f"n={self.n} mu={self.mu} {self.subcone}: {self.pair[0]} / {self.pair[1]} -> {self.verdict}{detail}"


def classify_ratio(r: FactoredRatio) -> tuple[str, Fraction | None, FactoredRatio | None]:
    if not r.is_constant():
        return "RatioNonConstant", None, r
    if r.scalar == 1:
        return "ExactMatch", None, None
    return "MatchUpToConstant", r.scalar, None


CANDIDATES = ("corollary", "lift", "hratio", "hratio_inverse")
PAIRS = (
    ("corollary", "lift"),
    ("corollary", "hratio"),
    ("corollary", "hratio_inverse"),
    ("lift", "hratio"),
    ("lift", "hratio_inverse"),
)


def candidates(n: int, mu: Generator, tag: SubconeTag) -> dict[str, FactoredRatio]:
    """Each candidate b-function of mu restricted to the subcone (frozen coordinates set to zero).

    hratio is b_K * H(x + mu) / H(x) as printed; hratio_inverse is b_K * H(x) / H(x + mu).
    """
    if not admissible_pair(n, mu, tag):
        raise DomainError(f"inadmissible pair: {mu} on subcone {tag} for n={n}")
    free = set(tag.free_indices(n))
    frozen = [k for k in range(2 * n - 1) if k not in free]
    shift = mu.coords(n).vector()
    corollary = bG3_subcone(n, mu, tag)
    lift = bG3_lift(n, mu).restrict(frozen)
    bk = FactoredRatio.of(b_K(mu.triple(n)).restrict(frozen))
    h = FactoredRatio.of(H_form(n, tag).restrict(frozen))
    h_shift = h.translate(shift)
    return {
        "corollary": FactoredRatio.of(corollary),
        "lift": FactoredRatio.of(lift),
        "hratio": bk * h_shift / h,
        "hratio_inverse": bk * h / h_shift,
    }


def cross_consistency(n: int, mu: Generator | str, tag: SubconeTag | str) -> list[ConsistencyReport]:
    """Pairwise first/second ratios of the candidate formulas, one report per pair."""
    mu = Generator.parse(mu) if isinstance(mu, str) else mu
    tag = SubconeTag.parse(tag) if isinstance(tag, str) else tag
    cands = candidates(n, mu, tag)
    out = []
    for first, second in PAIRS:
        verdict, const, witness = classify_ratio(cands[first] / cands[second])
        out.append(ConsistencyReport((first, second), n, str(tag), str(mu), verdict, const, witness))
    return out


def find_report(reports: Sequence[ConsistencyReport], first: str, second: str) -> ConsistencyReport:
    for r in reports:
        if r.pair == (first, second):
            return r
    raise KeyError((first, second))


def admissible_pairs(n: int) -> list[tuple[Generator, SubconeTag]]:
    check_rank(n)
    tags = [DELTA] + [SubconeTag(kind, j) for j in range(1, n + 1) for kind in ("DeltaLt", "DeltaGe")]
    return [(g, t) for t in tags for g in all_generators(n) if admissible_pair(n, g, t)]


def consistency_table(n: int) -> list[ConsistencyReport]:
    reports = [r for g, t in admissible_pairs(n) for r in cross_consistency(n, g, t)]
    return sorted(reports, key=lambda r: (r.mu, r.subcone, r.pair))


def set_size_report(n: int) -> list[dict]:
    """Direct counts of the OR/AND root sets and the beta_j lift degree next to the closed-form counts."""
    check_rank(n)
    rows = []
    for j in range(1, n + 1):
        or_set = sum(chi(j, g) for g in positive_roots(n))
        and_set = sum(chi_prime(j, g) for g in positive_roots(n))
        rows.append({
            "j": j,
            "or_set": or_set,
            "or_set_formula": j * (n - j) - 1,
            "and_set": and_set,
            "and_set_formula": (j - 1) * (n - j - 1),
            "beta_lift_degree": bG3_lift(n, Generator("beta", j)).degree,
            "beta_degree_formula": (j - 1) * (n - j) + j * (n - j - 1) + 1,
        })
    return rows
