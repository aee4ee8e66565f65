"""Classes on X built from the hyperplane class and tangent Segre classes.

A monomial ``(p, a, b)`` stands for ``h^p * s_a(T_X) * s_b(T_X)`` with
``0 <= a <= b`` and ``s_0 = 1``; its codimension is ``p + a + b``.  Products
with three or more nontrivial Segre factors are not representable, since the
integral table only knows ``int s_a s_b h^{n-a-b}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .numeric import RationalLike, format_rational, to_rational

Monomial = tuple[int, int, int]

AMPLE_STATES = ("yes", "no", "unknown")


class MoreThanTwoSegreFactors(ArithmeticError):
    """A product left the algebra on which the integral table is defined."""


class IncompleteTable(KeyError):
    """A required entry of a Segre integral table is missing."""


class ZeroDegree(ValueError):
    """The table's degree entry T[0][0] is zero."""


def _normalize(p: int, segre: Iterable[int]) -> Monomial:
    factors = sorted(k for k in segre if k != 0)
    if len(factors) > 2:
        raise MoreThanTwoSegreFactors(
            f"h^{p} * " + " * ".join(f"s{k}" for k in factors)
        )
    factors = [0] * (2 - len(factors)) + factors
    return (p, factors[0], factors[1])


def _codim(m: Monomial) -> int:
    return m[0] + m[1] + m[2]


@dataclass(frozen=True)
class SegreIntegralTable:
    """T[a][b] = int_X s_a(T_X) s_b(T_X) h^{n-a-b}, stored for a <= b."""

    n: int
    entries: Mapping[tuple[int, int], Fraction]
    name: str = ""
    ample5: str = "unknown"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if self.ample5 not in AMPLE_STATES:
            raise ValueError(f"ample5 must be one of {AMPLE_STATES}")
        clean = {}
        for (a, b), v in self.entries.items():
            if a > b:
                raise ValueError(f"key ({a},{b}) must have a <= b")
            if a < 0 or a + b > self.n:
                raise ValueError(f"key ({a},{b}) out of range for n={self.n}")
            clean[(a, b)] = to_rational(v)
        for key in self.required_keys(self.n):
            if key not in clean:
                raise IncompleteTable(f"missing entry {key[0]},{key[1]}")
        if clean[(0, 0)] == 0:
            raise ZeroDegree("degree T[0][0] must be nonzero")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @staticmethod
    def required_keys(n: int) -> list[tuple[int, int]]:
        return [(a, b) for b in range(n + 1) for a in range(b + 1) if a + b <= n]

    @property
    def degree(self) -> Fraction:
        return self.entries[(0, 0)]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        a, b = key
        if a > b:
            a, b = b, a
        try:
            return self.entries[(a, b)]
        except KeyError:
            raise IncompleteTable(f"no entry {a},{b} in table {self.name!r}") from None

    def segre_degree(self, k: int) -> Fraction:
        """deg s_k(T_X) = int s_k h^{n-k}."""
        return self[(0, k)]


@dataclass(frozen=True)
class AmbientClass:
    """Sparse rational combination of monomials h^p s_a s_b on an n-fold."""

    n: int
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Monomial, Fraction] = {}
        for (p, a, b), c in self.terms.items():
            c = to_rational(c)
            if min(p, a, b) < 0:
                raise ValueError(f"negative exponent in {(p, a, b)}")
            m = _normalize(p, (a, b))
            if _codim(m) > self.n or c == 0:
                continue
            clean[m] = clean.get(m, Fraction(0)) + c
        clean = {m: c for m, c in sorted(clean.items(), key=_order) if c != 0}
        object.__setattr__(self, "terms", clean)

    # constructors

    @classmethod
    def zero(cls, n: int) -> "AmbientClass":
        return cls(n, {})

    @classmethod
    def unit(cls, n: int, coeff: RationalLike = 1) -> "AmbientClass":
        return cls(n, {(0, 0, 0): coeff})

    @classmethod
    def h(cls, n: int, power: int = 1, coeff: RationalLike = 1) -> "AmbientClass":
        return cls(n, {(power, 0, 0): coeff})

    @classmethod
    def s(cls, n: int, k: int, coeff: RationalLike = 1) -> "AmbientClass":
        return cls(n, {(0, 0, k): coeff})

    # algebra

    def __add__(self, other: "AmbientClass") -> "AmbientClass":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return AmbientClass(self.n, terms)

    def __neg__(self) -> "AmbientClass":
        return AmbientClass(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "AmbientClass") -> "AmbientClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AmbientClass):
            return multiply(self, other)
        f = to_rational(other)
        return AmbientClass(self.n, {m: f * c for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, p: int, a: int = 0, b: int = 0) -> Fraction:
        return self.terms.get(_normalize(p, (a, b)), Fraction(0))

    def codim_part(self, c: int) -> "AmbientClass":
        return AmbientClass(self.n, {m: v for m, v in self.terms.items() if _codim(m) == c})

    def _check(self, other: "AmbientClass"):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    # display / serialization

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (m, c) in enumerate(self.terms.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = _render_monomial(m)
            coeff = format_rational(mag)
            if mag.denominator != 1:
                coeff = f"({coeff})"
            if mono is None:
                piece = coeff
            elif mag == 1:
                piece = mono
            else:
                piece = f"{coeff}*{mono}"
            if i == 0:
                out = piece if sign == "+" else f"-{piece}"
            else:
                out += f" {sign} {piece}"
        return out

    __str__ = render

    def to_json(self) -> dict[str, str]:
        return {f"{p},{a},{b}": format_rational(c) for (p, a, b), c in self.terms.items()}

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, str]) -> "AmbientClass":
        terms = {}
        for key, value in data.items():
            p, a, b = (int(x) for x in key.split(","))
            terms[(p, a, b)] = to_rational(value)
        return cls(n, terms)


def _order(item: tuple[Monomial, Fraction]):
    m = item[0]
    return (_codim(m), m)


def _render_monomial(m: Monomial) -> str | None:
    p, a, b = m
    parts = []
    if p:
        parts.append("h" if p == 1 else f"h^{p}")
    if a and a == b:
        parts.append(f"s{a}^2")
    else:
        parts.extend(f"s{k}" for k in (a, b) if k)
    return "*".join(parts) or None


def multiply(u: AmbientClass, v: AmbientClass) -> AmbientClass:
    """Distributive product; classes past codimension n vanish.

    Raises MoreThanTwoSegreFactors when a surviving product monomial would
    need three Segre factors.
    """
    u._check(v)
    n = u.n
    terms: dict[Monomial, Fraction] = {}
    for (p1, a1, b1), c1 in u.terms.items():
        for (p2, a2, b2), c2 in v.terms.items():
            p = p1 + p2
            if p + a1 + b1 + a2 + b2 > n:
                continue
            m = _normalize(p, (a1, b1, a2, b2))
            terms[m] = terms.get(m, Fraction(0)) + c1 * c2
    return AmbientClass(n, terms)


def tangent_segre_total(n: int) -> AmbientClass:
    """s(T_X) = 1 + s_1 + ... + s_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return AmbientClass(n, {(0, 0, i): 1 for i in range(n + 1)})


def degree_by_dimension(u: AmbientClass, table: SegreIntegralTable) -> dict[int, Fraction]:
    """Degrees of the dimension-k pieces of ``u``, for k = 0..n.

    The dimension-k piece has codimension n - k and its degree is its
    integral against h^k, i.e. sum of coeff * T[a][b].
    """
    if u.n != table.n:
        raise ValueError(f"class lives on an {u.n}-fold, table on an {table.n}-fold")
    n = u.n
    out = {k: Fraction(0) for k in range(n + 1)}
    for (p, a, b), c in u.terms.items():
        out[n - (p + a + b)] += c * table[(a, b)]
    return out
