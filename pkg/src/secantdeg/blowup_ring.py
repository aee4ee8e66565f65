"""Classes on Z_2 = Bl_Delta(X x X) and their pushforward to X.

Generators: ``e`` (exceptional divisor), ``x`` and ``y`` (pullbacks of the
hyperplane class along the two projections).  The only relation used beyond
truncation is ``e * (x - y) = 0``, so any monomial containing ``e`` is
stored with its x and y factors merged into a single x-power.

A key ``(i, a, b)`` means ``e^i x^a y^b``; for ``i >= 1`` we always have
``b == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .numeric import RationalLike, format_rational, to_rational
from .xring import AmbientClass, SegreIntegralTable

BlowupMonomial = tuple[int, int, int]


def _canonical(n: int, i: int, a: int, b: int) -> BlowupMonomial | None:
    """Canonical key, or None if the monomial vanishes."""
    if i >= 1:
        a, b = a + b, 0
    if a > n or b > n or i + a + b > 2 * n:
        return None
    return (i, a, b)


@dataclass(frozen=True)
class BlowupClass:
    n: int
    terms: Mapping[BlowupMonomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[BlowupMonomial, Fraction] = {}
        for (i, a, b), c in self.terms.items():
            if min(i, a, b) < 0:
                raise ValueError(f"negative exponent in {(i, a, b)}")
            key = _canonical(self.n, i, a, b)
            if key is None:
                continue
            clean[key] = clean.get(key, Fraction(0)) + to_rational(c)
        ordered = sorted(clean.items(), key=lambda kv: (sum(kv[0]), tuple(-k for k in kv[0])))
        object.__setattr__(self, "terms", {k: v for k, v in ordered if v != 0})

    @classmethod
    def zero(cls, n: int) -> "BlowupClass":
        return cls(n, {})

    @classmethod
    def unit(cls, n: int) -> "BlowupClass":
        return cls(n, {(0, 0, 0): 1})

    @classmethod
    def monomial(cls, n: int, e: int = 0, x: int = 0, y: int = 0,
                 coeff: RationalLike = 1) -> "BlowupClass":
        return cls(n, {(e, x, y): coeff})

    def __add__(self, other: "BlowupClass") -> "BlowupClass":
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return BlowupClass(self.n, terms)

    def __neg__(self) -> "BlowupClass":
        return BlowupClass(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BlowupClass") -> "BlowupClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BlowupClass):
            return multiply(self, other)
        f = to_rational(other)
        return BlowupClass(self.n, {k: f * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BlowupClass":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = BlowupClass.unit(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree_part(self, k: int) -> "BlowupClass":
        return BlowupClass(self.n, {m: c for m, c in self.terms.items() if sum(m) == k})

    def _check(self, other: "BlowupClass"):
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (i, a, b), c in self.terms.items():
            mono = "*".join(
                s if k == 1 else f"{s}^{k}"
                for s, k in (("e", i), ("x", a), ("y", b)) if k
            )
            mag = format_rational(abs(c))
            if "/" in mag:
                mag = f"({mag})"
            if not mono:
                body = mag
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = first if first_sign == "+" else f"-{first}"
        return out + "".join(f" {s} {b}" for s, b in pieces[1:])

    __str__ = render


def multiply(u: BlowupClass, v: BlowupClass) -> BlowupClass:
    u._check(v)
    terms: dict[BlowupMonomial, Fraction] = {}
    for (i1, a1, b1), c1 in u.terms.items():
        for (i2, a2, b2), c2 in v.terms.items():
            key = _canonical(u.n, i1 + i2, a1 + a2, b1 + b2)
            if key is not None:
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
    return BlowupClass(u.n, terms)


def self_intersection_divisor(n: int) -> BlowupClass:
    """Normal class of Z_2 inside the secant bundle: 2e + x - y."""
    if n < 1:
        raise ValueError("n must be positive")
    return BlowupClass(n, {(1, 0, 0): 2, (0, 1, 0): 1, (0, 0, 1): -1})


def segre_alternating_sum(divisor: BlowupClass, n: int | None = None) -> BlowupClass:
    """sum_{i=0}^{2n} (-1)^i D^i; higher powers vanish on a 2n-fold."""
    n = divisor.n if n is None else n
    if n != divisor.n:
        raise ValueError("divisor lives on a different blow-up")
    total = BlowupClass.zero(n)
    power = BlowupClass.unit(n)
    for i in range(2 * n + 1):
        total = total + (power if i % 2 == 0 else -power)
        power = power * divisor
    return total


def push_to_X(u: BlowupClass, table: SegreIntegralTable) -> AmbientClass:
    """Pushforward along q = pr_1 o eta, monomial by monomial.

    e^i x^m with i >= n goes to (-1)^{i-1} s_{i-n} h^m; with 1 <= i < n
    the image would have dimension above n - m, so it is zero.
    x^a y^b goes to d h^a when b = n, and to zero otherwise.
    """
    n = u.n
    if table.n != n:
        raise ValueError(f"class on the blow-up of an {n}-fold, table for an {table.n}-fold")
    d = table.degree
    terms: dict[tuple[int, int, int], Fraction] = {}

    def add(key, c):
        terms[key] = terms.get(key, Fraction(0)) + c

    for (i, a, b), c in u.terms.items():
        if i == 0:
            if b == n:
                add((a, 0, 0), c * d)
        elif i >= n:
            sign = 1 if (i - 1) % 2 == 0 else -1
            add((a, 0, i - n), sign * c)
    return AmbientClass(n, terms)
