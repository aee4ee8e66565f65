"""Truncated univariate power series over the rationals.

Used for two things: inverting total Chern classes into Segre classes, and
checking the Todd-class quotient identity

    (2t / (1 - e^{-2t})) / (t / (1 - e^{-t})) = 2 / (1 + e^{-t})

that governs the tautological rank-2 bundle on the Hilbert square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import RationalLike, to_rational

DEFAULT_TODD_ORDER = 12


class NonUnitConstantTerm(ArithmeticError):
    """Raised when inverting a series whose constant term is zero."""


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_m t^m + O(t^{m+1})."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(
            self, "coefficients", tuple(to_rational(c) for c in self.coefficients)
        )

    @classmethod
    def of(cls, coefficients: Iterable[RationalLike], order: int | None = None):
        coeffs = [to_rational(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncatedSeries":
        return cls.of([value], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self[i] + other[i] for i in range(m + 1))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "TruncatedSeries":
        f = to_rational(factor)
        return TruncatedSeries(tuple(f * c for c in self.coefficients))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients):
            if c:
                parts.append(f"{c}" if i == 0 else f"({c})*t^{i}")
        return (" + ".join(parts) or "0") + f" + O(t^{self.order + 1})"


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the smaller of the two orders."""
    m = min(a.order, b.order)
    out = []
    for k in range(m + 1):
        out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out))


def inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse to the same order.

    Raises NonUnitConstantTerm if c_0 = 0.
    """
    if a[0] == 0:
        raise NonUnitConstantTerm("constant term is zero; series is not a unit")
    inv0 = 1 / a[0]
    out = [inv0]
    for k in range(1, a.order + 1):
        acc = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
        out.append(-acc * inv0)
    return TruncatedSeries(tuple(out))


def exp_scaled(lam: RationalLike, order: int) -> TruncatedSeries:
    """The series e^{lam t} up to t^order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    lam = to_rational(lam)
    return TruncatedSeries(
        tuple(lam**i / math.factorial(i) for i in range(order + 1))
    )


def _one_minus_exp_over_t(lam: RationalLike, order: int) -> TruncatedSeries:
    # (1 - e^{-lam t}) / t, formed by shifting coefficients down one slot.
    e = exp_scaled(-to_rational(lam), order + 1)
    return TruncatedSeries(tuple(-e[i + 1] for i in range(order + 1)))


def todd_series(lam: RationalLike, order: int) -> TruncatedSeries:
    """lam t / (1 - e^{-lam t}), the Todd class of a line bundle with c_1 = lam t."""
    lam = to_rational(lam)
    if lam == 0:
        return TruncatedSeries.constant(1, order)
    return inverse(_one_minus_exp_over_t(lam, order)).scale(lam)


def ext_todd_inverse(order: int) -> TruncatedSeries:
    """(1 + e^{-t}) / 2 = 1 - t/2 + t^2/4 - t^3/12 + ..."""
    one = TruncatedSeries.constant(1, order)
    return (one + exp_scaled(-1, order)).scale(Fraction(1, 2))


def todd_identity_check(order: int = DEFAULT_TODD_ORDER) -> bool:
    """Compare td(O(2E)) / td(O(E)) with 2 / (1 + e^{-E}) up to ``order``.

    Both sides are built separately from :func:`exp_scaled` and
    :func:`inverse`; the left side never divides by t formally.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    lhs = mul(todd_series(2, order), inverse(todd_series(1, order)))
    one = TruncatedSeries.constant(1, order)
    rhs = inverse(one + exp_scaled(-1, order)).scale(2)
    return lhs == rhs


def first_chern_of_tautological() -> dict[str, Fraction]:
    """Degree-one part of ch(E_{2,L}) in terms of H and delta.

    ch E = rho_*(q^* ch L * (1 + e^{-E})/2).  Its degree-one piece is
    rho_*(x) + c * rho_*(E), where c is the linear coefficient of
    (1 + e^{-t})/2.  With rho_*(x) = H and rho_*(E) = 2 delta this gives
    c_1 = H - delta; returned as coefficient map {"H": 1, "delta": -1}.
    """
    ch_line = exp_scaled(1, 1)
    correction = ext_todd_inverse(1)
    return {"H": ch_line[1] * correction[0], "delta": 2 * correction[1]}


def segre_from_chern(chern: Sequence[RationalLike], n: int) -> list[Fraction]:
    """Segre classes s_0..s_n from Chern classes c_0..c_k (k <= n), with c_0 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [to_rational(c) for c in chern]
    if not coeffs or coeffs[0] != 1:
        raise ValueError("total Chern class must start with c_0 = 1")
    if len(coeffs) > n + 1:
        raise ValueError(f"got {len(coeffs)} Chern classes for dimension {n}")
    return list(inverse(TruncatedSeries.of(coeffs, n)).coefficients)


def chern_from_segre(segre: Sequence[RationalLike], n: int) -> list[Fraction]:
    """Inverse of :func:`segre_from_chern`."""
    return segre_from_chern(segre, n)
