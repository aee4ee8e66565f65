"""Degrees of the secant varieties sigma_2(X) and sigma_3(X).

Two independent routes are provided:

* the closed form, evaluating the coefficient formula with ``a_{n,k}``
  directly on the integral table;
* the blow-up pipeline, which expands the Segre series of the normal class
  ``2e + x - y`` on Bl_Delta(X x X), pushes it to X, multiplies by s(T_X)
  and assembles the double point data.

:func:`cross_validate` runs both and insists they agree exactly.

Hypotheses (3- resp. 5-very ampleness) are advisory: formulas are always
evaluated and a warning is attached when they cannot be confirmed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

from .blowup_ring import push_to_X, segre_alternating_sum, self_intersection_divisor
from .numeric import RationalLike, binomial, to_rational
from .xring import (
    AmbientClass,
    SegreIntegralTable,
    degree_by_dimension,
    multiply,
    tangent_segre_total,
)

# Degree of J(X, sigma_2 X) -> sigma_3 X for 5-very ample embeddings.
JOIN_MAP_DEGREE = 3

COMPARED_FIELDS = (
    "deg_sigma2", "deg_sigma3", "mult_X", "A", "B", "segre_X_sigma2", "segre_diag",
)


class ValidityWarning(UserWarning):
    """A formula was evaluated outside its proven range of validity."""


@dataclass(frozen=True)
class SecantReport:
    name: str
    n: int
    d: Fraction
    deg_sigma2: Fraction
    deg_sigma3: Fraction
    mult_X: Fraction
    A: Fraction
    B: Fraction
    segre_X_sigma2: AmbientClass
    segre_diag: AmbientClass
    method: str
    warnings: tuple[str, ...] = ()
    # q_* of the i-th power of the normal class; filled by the pipeline only.
    pushforwards: dict[int, AmbientClass] = field(default_factory=dict)


class CrossValidationMismatch(AssertionError):
    def __init__(self, closed: SecantReport, pipeline: SecantReport, field_name: str):
        self.closed = closed
        self.pipeline = pipeline
        self.field = field_name
        super().__init__(
            f"{field_name}: closed form gives {getattr(closed, field_name)}, "
            f"pipeline gives {getattr(pipeline, field_name)}"
        )


# --- closed form -----------------------------------------------------------

def coeff_a(n: int, k: int) -> int:
    """a_{n,k} = C(2n+1, n-k) + 2 sum_{i=k}^n (-1)^{i-k} C(3n+2, n-i) C(i-k+n, n)."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"a_(n,k) needs n >= 1 and 0 <= k <= n, got ({n}, {k})")
    tail = sum(
        (-1) ** (i - k) * binomial(3 * n + 2, n - i) * binomial(i - k + n, n)
        for i in range(k, n + 1)
    )
    return binomial(2 * n + 1, n - k) + 2 * tail


def A_value(t: SegreIntegralTable) -> Fraction:
    """Double point sum over the diagonal: sum_j C(2n+1, j) int s_{n-j} h^j."""
    n = t.n
    return sum((binomial(2 * n + 1, j) * t[(0, n - j)] for j in range(n + 1)), Fraction(0))


def deg_sigma2(t: SegreIntegralTable) -> Fraction:
    return (t.degree**2 - A_value(t)) / 2


def deg_sigma3(t: SegreIntegralTable) -> Fraction:
    n, d = t.n, t.degree
    linear = sum((d * coeff_a(n, k) * t[(0, k)] for k in range(n + 1)), Fraction(0))
    quadratic = Fraction(0)
    for k in range(n + 1):
        c = binomial(3 * n + 2, n - k)
        for a in range(k + 1):
            quadratic += 2 ** (k - a + n + 1) * c * t[(a, k - a)]
    return (d**3 - linear + quadratic) / 6


def segre_X_sigma2_closed(t: SegreIntegralTable) -> AmbientClass:
    """s(X, sigma_2 X) = sum_i (-1)^i d C(i+n, n) h^i - sum_i 2^{i+n} s_i."""
    n, d = t.n, t.degree
    terms: dict[tuple[int, int, int], Fraction] = {}
    for i in range(n + 1):
        terms[(i, 0, 0)] = terms.get((i, 0, 0), Fraction(0)) + (-1) ** i * d * binomial(i + n, n)
        terms[(0, 0, i)] = terms.get((0, 0, i), Fraction(0)) - 2 ** (i + n)
    return AmbientClass(n, terms)


def segre_diag_closed(t: SegreIntegralTable) -> AmbientClass:
    """s(Delta X, X x sigma_2 X) = s(T_X) . s(X, sigma_2 X)."""
    return multiply(tangent_segre_total(t.n), segre_X_sigma2_closed(t))


def mult_sigma2_along_X(t: SegreIntegralTable) -> Fraction:
    """Multiplicity of sigma_2(X) along X, d - 2^n."""
    mult = t.degree - 2**t.n
    unit = segre_X_sigma2_closed(t).coefficient(0)
    if unit != mult:
        raise ArithmeticError(f"unit coefficient {unit} of s(X, sigma_2) differs from d - 2^n = {mult}")
    return mult


def _B_from_class(diag: AmbientClass, t: SegreIntegralTable) -> Fraction:
    n = t.n
    degs = degree_by_dimension(diag, t)
    return sum((binomial(3 * n + 2, k) * degs[k] for k in range(n + 1)), Fraction(0))


def B_value(t: SegreIntegralTable) -> Fraction:
    return _B_from_class(segre_diag_closed(t), t)


def _assemble_sigma3(d: Fraction, A: Fraction, B: Fraction) -> Fraction:
    return (d * (d**2 - A) / 2 - B) / JOIN_MAP_DEGREE


def _warnings_for(t: SegreIntegralTable, sigma2: Fraction, sigma3: Fraction) -> tuple[str, ...]:
    out = []
    if t.ample5 != "yes":
        state = "is not" if t.ample5 == "no" else "is not known to be"
        out.append(
            f"embedding {state} 5-very ample; deg sigma_3 (and possibly deg "
            "sigma_2, which needs 3-very ampleness) may not be geometric"
        )
    if sigma2.denominator != 1:
        out.append(f"deg sigma_2 = {sigma2} is not an integer")
    if sigma3.denominator != 1:
        out.append(f"deg sigma_3 = {sigma3} is not an integer")
    return tuple(out)


def closed_form_report(t: SegreIntegralTable) -> SecantReport:
    s2, s3 = deg_sigma2(t), deg_sigma3(t)
    return SecantReport(
        name=t.name,
        n=t.n,
        d=t.degree,
        deg_sigma2=s2,
        deg_sigma3=s3,
        mult_X=mult_sigma2_along_X(t),
        A=A_value(t),
        B=B_value(t),
        segre_X_sigma2=segre_X_sigma2_closed(t),
        segre_diag=segre_diag_closed(t),
        method="closed_form",
        warnings=_warnings_for(t, s2, s3),
    )


# --- blow-up pipeline ------------------------------------------------------

def derive_via_blowup(t: SegreIntegralTable, pushforward: Callable = push_to_X) -> SecantReport:
    """Recompute every report field from the blow-up ring.

    ``pushforward`` is exposed so tests can inject a broken rule.
    """
    n, d = t.n, t.degree
    divisor = self_intersection_divisor(n)

    # Per-power pushforwards, for display; the total is pushed in one go.
    powers = {}
    p = divisor ** 0
    for i in range(2 * n + 1):
        powers[i] = pushforward(p, t)
        p = p * divisor
    segre_X = pushforward(segre_alternating_sum(divisor, n), t)

    diag = multiply(tangent_segre_total(n), segre_X)
    cone_degs = degree_by_dimension(tangent_segre_total(n), t)
    A = sum((binomial(2 * n + 1, j) * cone_degs[j] for j in range(n + 1)), Fraction(0))
    B = _B_from_class(diag, t)
    s2 = (d**2 - A) / 2
    s3 = _assemble_sigma3(d, A, B)
    return SecantReport(
        name=t.name,
        n=n,
        d=d,
        deg_sigma2=s2,
        deg_sigma3=s3,
        mult_X=segre_X.coefficient(0),
        A=A,
        B=B,
        segre_X_sigma2=segre_X,
        segre_diag=diag,
        method="pipeline",
        warnings=_warnings_for(t, s2, s3),
        pushforwards=powers,
    )


def cross_validate(t: SegreIntegralTable, pipeline: Callable = derive_via_blowup) -> SecantReport:
    """Run both routes; raise CrossValidationMismatch on the first disagreement.

    Returns the pipeline report, which carries the per-power intermediates.
    """
    closed = closed_form_report(t)
    derived = pipeline(t)
    for name in COMPARED_FIELDS:
        if getattr(closed, name) != getattr(derived, name):
            raise CrossValidationMismatch(closed, derived, name)
    merged = tuple(dict.fromkeys(closed.warnings + derived.warnings))
    return replace(derived, warnings=merged)


# --- low-dimensional specializations --------------------------------------

def curve_sigma3(d: RationalLike, g: RationalLike) -> Fraction:
    """deg sigma_3 of a smooth curve of degree d and genus g.

    (d^3 - 9d^2 + 26d - 24 - 6dg + 24g) / 6.  The printed curve formula in
    the literature carries +24 and -24g instead; see curve_sigma3_printed.
    """
    d, g = to_rational(d), to_rational(g)
    if d < 2 * g + 5:
        warnings.warn(f"degree {d} < 2g + 5 = {2 * g + 5}: 5-very ampleness not guaranteed",
                      ValidityWarning, stacklevel=2)
    return (d**3 - 9 * d**2 + 26 * d - 24 - 6 * d * g + 24 * g) / 6


def curve_sigma3_printed(d: RationalLike, g: RationalLike) -> Fraction:
    """The variant (d^3 - 9d^2 + 26d + 24 - 6dg - 24g) / 6.

    Kept for comparison only: it exceeds curve_sigma3 by 8(1 - g) and gives
    12 instead of 4 for the rational normal sextic.
    """
    d, g = to_rational(d), to_rational(g)
    return (d**3 - 9 * d**2 + 26 * d + 24 - 6 * d * g - 24 * g) / 6


def surface_sigma3(d: RationalLike, pi: RationalLike, kappa: RationalLike,
                   e: RationalLike) -> Fraction:
    """deg sigma_3 of a surface with h^2 = d, h.K = pi, K^2 = kappa, c_2 = e."""
    d, pi, kappa, e = (to_rational(v) for v in (d, pi, kappa, e))
    return (d**3 - 30 * d**2 + 224 * d - 3 * d * (5 * pi + kappa - e)
            + 192 * pi + 56 * kappa - 40 * e) / 6
