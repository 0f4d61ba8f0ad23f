"""Exact arithmetic on products of affine-linear forms and formal gamma products.

Every b-function here is a rational scalar times a multiset of affine forms
``slope . x + constant``.  Factors are kept canonical: integer primitive slope
with positive leading entry, content moved into the scalar, constant factors
absorbed, sorted.  Two polynomials are equal iff their canonical data agree.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, NotPolynomialError


def _frac_str(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class LinearForm:
    slope: tuple[int, ...]
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        slope = tuple(self.slope)
        for s in slope:
            if Fraction(s).denominator != 1:
                raise DomainError(f"slope entries must be integers, got {s!r}")
        object.__setattr__(self, "slope", tuple(int(s) for s in slope))
        object.__setattr__(self, "constant", Fraction(self.constant))

    @classmethod
    def variable(cls, k: int, dim: int, constant=0) -> "LinearForm":
        slope = [0] * dim
        slope[k] = 1
        return cls(tuple(slope), Fraction(constant))

    @property
    def dim(self) -> int:
        return len(self.slope)

    def is_constant(self) -> bool:
        return not any(self.slope)

    def __call__(self, point: Sequence) -> Fraction:
        if len(point) != self.dim:
            raise DomainError(f"point of dimension {len(point)} for a form of dimension {self.dim}")
        return self.constant + sum(Fraction(s) * Fraction(x) for s, x in zip(self.slope, point) if s)

    def shift_amount(self, shift: Sequence) -> Fraction:
        """slope . shift, i.e. F(x + shift) - F(x)."""
        if len(shift) != self.dim:
            raise DomainError(f"shift of dimension {len(shift)} for a form of dimension {self.dim}")
        return sum((Fraction(s) * Fraction(x) for s, x in zip(self.slope, shift) if s), Fraction(0))

    def translate(self, shift: Sequence) -> "LinearForm":
        return LinearForm(self.slope, self.constant + self.shift_amount(shift))

    def __add__(self, other) -> "LinearForm":
        if isinstance(other, LinearForm):
            if other.dim != self.dim:
                raise DomainError("dimension mismatch")
            return LinearForm(tuple(x + y for x, y in zip(self.slope, other.slope)), self.constant + other.constant)
        return LinearForm(self.slope, self.constant + Fraction(other))

    def scale(self, k: int) -> "LinearForm":
        return LinearForm(tuple(k * s for s in self.slope), k * self.constant)

    def compose(self, images: Sequence["LinearForm"]) -> "LinearForm":
        """Substitute variable k by images[k]."""
        if len(images) != self.dim:
            raise DomainError(f"{len(images)} images for a form in {self.dim} variables")
        if not images:
            raise DomainError("cannot compose with an empty substitution")
        dim = images[0].dim
        out = LinearForm((0,) * dim, self.constant)
        for s, img in zip(self.slope, images):
            if s:
                out = out + img.scale(s)
        return out

    def restrict(self, zero: Iterable[int]) -> "LinearForm":
        """Set the listed coordinates to zero."""
        zero = set(zero)
        return LinearForm(tuple(0 if k in zero else s for k, s in enumerate(self.slope)), self.constant)

    def normalized(self) -> tuple[int, "LinearForm"]:
        """Split off the signed content so the slope is primitive with positive leading entry."""
        g = math.gcd(*self.slope)
        if g == 0:
            raise DomainError("a constant form has no normalization")
        lead = next(s for s in self.slope if s)
        if lead < 0:
            g = -g
        return g, LinearForm(tuple(s // g for s in self.slope), self.constant / g)

    def sort_key(self):
        return (sum(1 for s in self.slope if s), tuple(-s for s in self.slope), self.constant)

    def render(self, variables: Sequence[str]) -> str:
        terms = []
        for s, name in zip(self.slope, variables):
            if s == 0:
                continue
            mag = "" if abs(s) == 1 else f"{abs(s)}*"
            terms.append(("-" if s < 0 else "+", f"{mag}{name}"))
        if self.constant != 0 or not terms:
            terms.append(("-" if self.constant < 0 else "+", _frac_str(abs(self.constant))))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_tree(self, variables: Sequence[str]) -> dict:
        return {"slope": list(self.slope), "constant": _frac_str(self.constant), "text": f"({self.render(variables)})"}

    @classmethod
    def from_tree(cls, node: dict) -> "LinearForm":
        return cls(tuple(int(s) for s in node["slope"]), Fraction(node["constant"]))


def _canonical(scalar: Fraction, forms: Iterable[LinearForm]) -> tuple[Fraction, tuple[LinearForm, ...]]:
    scalar = Fraction(scalar)
    out = []
    for f in forms:
        if f.is_constant():
            scalar *= f.constant
            continue
        g, prim = f.normalized()
        scalar *= g
        out.append(prim)
    if scalar == 0:
        raise DomainError("the zero polynomial is not a valid factored polynomial")
    out.sort(key=LinearForm.sort_key)
    return scalar, tuple(out)


def _check_vars(p, q) -> None:
    if p.variables != q.variables:
        raise DomainError(f"variable mismatch: {p.variables} vs {q.variables}")


def _group(forms: Sequence[LinearForm]) -> list[tuple[LinearForm, int]]:
    out: list[tuple[LinearForm, int]] = []
    for f in forms:
        if out and out[-1][0] == f:
            out[-1] = (f, out[-1][1] + 1)
        else:
            out.append((f, 1))
    return out


def _render_product(scalar: Fraction, forms: Sequence[LinearForm], variables: Sequence[str]) -> str:
    body = "".join(
        f"({f.render(variables)})" + (f"^{k}" if k > 1 else "") for f, k in _group(forms)
    )
    if not body:
        return _frac_str(scalar)
    if scalar == 1:
        return body
    if scalar == -1:
        return "-" + body
    return f"{_frac_str(scalar)} {body}"


def _factors_tree(forms: Sequence[LinearForm], variables: Sequence[str]) -> list[dict]:
    return [dict(f.to_tree(variables), multiplicity=k) for f, k in _group(forms)]


def _factors_from_tree(nodes: list[dict]) -> list[LinearForm]:
    out = []
    for node in nodes:
        out.extend([LinearForm.from_tree(node)] * int(node.get("multiplicity", 1)))
    return out


@dataclass(frozen=True)
class FactoredPolynomial:
    """scalar * prod(factors), canonicalized on construction."""

    variables: tuple[str, ...]
    scalar: Fraction = Fraction(1)
    factors: tuple[LinearForm, ...] = ()

    def __post_init__(self):
        variables = tuple(self.variables)
        for f in self.factors:
            if f.dim != len(variables):
                raise DomainError(f"factor of dimension {f.dim} in a polynomial over {len(variables)} variables")
        scalar, factors = _canonical(self.scalar, self.factors)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "scalar", scalar)
        object.__setattr__(self, "factors", factors)

    @classmethod
    def one(cls, variables: Sequence[str]) -> "FactoredPolynomial":
        return cls(tuple(variables))

    @property
    def dim(self) -> int:
        return len(self.variables)

    @property
    def degree(self) -> int:
        return len(self.factors)

    def is_constant(self) -> bool:
        return not self.factors

    def __mul__(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        _check_vars(self, other)
        return FactoredPolynomial(self.variables, self.scalar * other.scalar, self.factors + other.factors)

    def scaled(self, k) -> "FactoredPolynomial":
        return FactoredPolynomial(self.variables, self.scalar * Fraction(k), self.factors)

    def translate(self, shift: Sequence) -> "FactoredPolynomial":
        """T_shift p: x -> p(x + shift)."""
        return FactoredPolynomial(self.variables, self.scalar, tuple(f.translate(shift) for f in self.factors))

    def substitute(self, images: Sequence[LinearForm], variables: Sequence[str]) -> "FactoredPolynomial":
        return FactoredPolynomial(tuple(variables), self.scalar, tuple(f.compose(images) for f in self.factors))

    def restrict(self, zero: Iterable[int]) -> "FactoredPolynomial":
        zero = list(zero)
        return FactoredPolynomial(self.variables, self.scalar, tuple(f.restrict(zero) for f in self.factors))

    def evaluate(self, point: Sequence) -> Fraction:
        value = self.scalar
        for f in self.factors:
            value *= f(point)
        return value

    def multiplicity(self, form: LinearForm) -> int:
        if form.is_constant():
            raise DomainError("multiplicity of a constant form is undefined")
        _, prim = form.normalized()
        return self.factors.count(prim)

    def divisible_by(self, form: LinearForm) -> bool:
        return self.multiplicity(form) > 0

    def equals_up_to_scalar(self, other: "FactoredPolynomial") -> bool:
        _check_vars(self, other)
        return self.factors == other.factors

    def slopes(self) -> list[tuple[int, ...]]:
        return sorted({f.slope for f in self.factors}, key=lambda s: (sum(1 for x in s if x), tuple(-x for x in s)))

    def render(self) -> str:
        return _render_product(self.scalar, self.factors, self.variables)

    __str__ = render

    def to_tree(self) -> dict:
        return {
            "type": "factored_polynomial",
            "variables": list(self.variables),
            "scalar": _frac_str(self.scalar),
            "factors": _factors_tree(self.factors, self.variables),
            "text": self.render(),
        }

    @classmethod
    def from_tree(cls, node: dict) -> "FactoredPolynomial":
        if node.get("type") != "factored_polynomial":
            raise DomainError(f"not a factored_polynomial node: {node.get('type')!r}")
        return cls(tuple(node["variables"]), Fraction(node["scalar"]), tuple(_factors_from_tree(node["factors"])))


def multiply(p: FactoredPolynomial, q: FactoredPolynomial) -> FactoredPolynomial:
    return p * q


def equals(p: FactoredPolynomial, q: FactoredPolynomial) -> bool:
    return p == q


def evaluate(p: FactoredPolynomial, point: Sequence) -> Fraction:
    return p.evaluate(point)


def translate(form: LinearForm, shift: Sequence) -> LinearForm:
    return form.translate(shift)


def product(polys: Iterable[FactoredPolynomial], variables: Sequence[str]) -> FactoredPolynomial:
    out = FactoredPolynomial.one(variables)
    for p in polys:
        out = out * p
    return out


@dataclass(frozen=True)
class FactoredRatio:
    """scalar * prod(numerator) / prod(denominator) with common factors cancelled."""

    variables: tuple[str, ...]
    scalar: Fraction
    numerator: tuple[LinearForm, ...] = ()
    denominator: tuple[LinearForm, ...] = ()

    def __post_init__(self):
        s1, num = _canonical(self.scalar, self.numerator)
        s2, den = _canonical(Fraction(1), self.denominator)
        cnum, cden = Counter(num), Counter(den)
        common = cnum & cden
        num = tuple(sorted((cnum - common).elements(), key=LinearForm.sort_key))
        den = tuple(sorted((cden - common).elements(), key=LinearForm.sort_key))
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "scalar", s1 / s2)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def of(cls, p: FactoredPolynomial, q: FactoredPolynomial = None) -> "FactoredRatio":
        if q is None:
            return cls(p.variables, p.scalar, p.factors)
        _check_vars(p, q)
        return cls(p.variables, p.scalar / q.scalar, p.factors, q.factors)

    def __mul__(self, other: "FactoredRatio") -> "FactoredRatio":
        _check_vars(self, other)
        return FactoredRatio(
            self.variables, self.scalar * other.scalar,
            self.numerator + other.numerator, self.denominator + other.denominator,
        )

    def __truediv__(self, other: "FactoredRatio") -> "FactoredRatio":
        return self * other.inverse()

    def inverse(self) -> "FactoredRatio":
        return FactoredRatio(self.variables, 1 / self.scalar, self.denominator, self.numerator)

    def translate(self, shift: Sequence) -> "FactoredRatio":
        return FactoredRatio(
            self.variables, self.scalar,
            tuple(f.translate(shift) for f in self.numerator),
            tuple(f.translate(shift) for f in self.denominator),
        )

    def is_constant(self) -> bool:
        return not self.numerator and not self.denominator

    def is_polynomial(self) -> bool:
        return not self.denominator

    @property
    def size(self) -> int:
        """Number of uncancelled factors, numerator and denominator together."""
        return len(self.numerator) + len(self.denominator)

    def as_polynomial(self) -> FactoredPolynomial:
        if self.denominator:
            raise NotPolynomialError(f"{self.render()} has a nontrivial denominator")
        return FactoredPolynomial(self.variables, self.scalar, self.numerator)

    def render(self) -> str:
        num = _render_product(self.scalar, self.numerator, self.variables)
        if not self.denominator:
            return num
        return f"{num} / " + _render_product(Fraction(1), self.denominator, self.variables)

    __str__ = render

    def to_tree(self) -> dict:
        return {
            "type": "factored_ratio",
            "variables": list(self.variables),
            "scalar": _frac_str(self.scalar),
            "numerator": _factors_tree(self.numerator, self.variables),
            "denominator": _factors_tree(self.denominator, self.variables),
            "text": self.render(),
        }

    @classmethod
    def from_tree(cls, node: dict) -> "FactoredRatio":
        if node.get("type") != "factored_ratio":
            raise DomainError(f"not a factored_ratio node: {node.get('type')!r}")
        return cls(
            tuple(node["variables"]), Fraction(node["scalar"]),
            tuple(_factors_from_tree(node["numerator"])), tuple(_factors_from_tree(node["denominator"])),
        )


def ratio(p: FactoredPolynomial, q: FactoredPolynomial) -> FactoredRatio:
    return FactoredRatio.of(p, q)


def _pochhammer(form: LinearForm, k: int) -> tuple[list[LinearForm], list[LinearForm]]:
    """Gamma(F + k) / Gamma(F) as (numerator factors, denominator factors)."""
    if k >= 0:
        return [form + t for t in range(k)], []
    return [], [form + t for t in range(k, 0)]


@dataclass(frozen=True)
class GammaLift:
    """prod Gamma(numerator_args) / prod Gamma(denominator_args)."""

    variables: tuple[str, ...]
    numerator_args: tuple[LinearForm, ...]
    denominator_args: tuple[LinearForm, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        for f in self.numerator_args + self.denominator_args:
            if f.dim != len(self.variables):
                raise DomainError("gamma argument dimension does not match the variables")

    def __len__(self):
        return len(self.numerator_args) + len(self.denominator_args)

    def value_at(self, point: Sequence) -> Fraction:
        """Exact value at a point where every argument is a positive integer."""
        out = Fraction(1)
        for f, sign in [(f, 1) for f in self.numerator_args] + [(f, -1) for f in self.denominator_args]:
            x = f(point)
            if x.denominator != 1 or x <= 0:
                raise DomainError(f"Gamma({f.render(self.variables)}) at {list(point)} is {x}, not a positive integer")
            g = Fraction(math.factorial(int(x) - 1))
            out = out * g if sign > 0 else out / g
        return out

    def render(self) -> str:
        num = " ".join(f"Γ({f.render(self.variables)})" for f in self.numerator_args) or "1"
        if not self.denominator_args:
            return num
        return num + " / " + " ".join(f"Γ({f.render(self.variables)})" for f in self.denominator_args)

    __str__ = render

    def to_tree(self) -> dict:
        return {
            "type": "gamma_lift",
            "variables": list(self.variables),
            "numerator_args": [f.to_tree(self.variables) for f in self.numerator_args],
            "denominator_args": [f.to_tree(self.variables) for f in self.denominator_args],
            "text": self.render(),
        }

    @classmethod
    def from_tree(cls, node: dict) -> "GammaLift":
        return cls(
            tuple(node["variables"]),
            tuple(LinearForm.from_tree(x) for x in node["numerator_args"]),
            tuple(LinearForm.from_tree(x) for x in node["denominator_args"]),
        )


def gamma_ratio(lift: GammaLift, shift: Sequence) -> FactoredPolynomial:
    """A(x + shift) / A(x) expanded into a product of Pochhammer factors."""
    num: list[LinearForm] = []
    den: list[LinearForm] = []
    for args, sign in ((lift.numerator_args, 1), (lift.denominator_args, -1)):
        for f in args:
            k = f.shift_amount(shift)
            if k.denominator != 1:
                raise NotPolynomialError(
                    f"non-integer shift {k} of gamma argument ({f.render(lift.variables)})"
                )
            up, down = _pochhammer(f, int(k))
            if sign > 0:
                num += up
                den += down
            else:
                num += down
                den += up
    result = FactoredRatio(lift.variables, Fraction(1), tuple(num), tuple(den))
    if result.denominator:
        offending = ", ".join(f"({f.render(lift.variables)})" for f in result.denominator)
        raise NotPolynomialError(f"gamma ratio leaves negative multiplicity for {offending}")
    return result.as_polynomial()


def k_multiset(p: FactoredPolynomial, delta: Sequence[int]) -> list[Fraction]:
    """Constants k, with multiplicity, such that (delta . x + k) divides p."""
    delta = tuple(int(d) for d in delta)
    if len(delta) != p.dim:
        raise DomainError(f"covector of length {len(delta)} for a polynomial in {p.dim} variables")
    g, prim = LinearForm(delta).normalized()
    if g != 1:
        raise DomainError(f"covector {delta} is not primitive with positive leading entry")
    return sorted(f.constant for f in p.factors if f.slope == prim.slope)
