"""Ways to obtain a :class:`SegreIntegralTable`.

Table files are JSON objects::

    {"n": 1, "name": "rational sextic", "table": {"0,0": "6", "0,1": "-2"}}

Keys are "a,b" with a <= b; values are rational strings "p/q".  An optional
"ample5" field ("yes", "no", "unknown") records whether the embedding is
known to be 5-very ample.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .numeric import RationalLike, binomial, format_rational, to_rational
from .series import segre_from_chern
from .xring import AMPLE_STATES, IncompleteTable, SegreIntegralTable, ZeroDegree

__all__ = [
    "IncompleteTable", "ParseError", "ZeroDegree",
    "curve", "surface", "veronese", "from_text", "to_text",
]


class ParseError(ValueError):
    """The table document is malformed."""


def curve(d: RationalLike, g: RationalLike, name: str | None = None) -> SegreIntegralTable:
    """Smooth curve of degree d and genus g.

    A line bundle of degree >= 2g + k on a curve is k-very ample, so
    d >= 2g + 5 marks the embedding 5-very ample; otherwise "unknown".
    """
    d, g = to_rational(d), to_rational(g)
    ample = "yes" if d >= 2 * g + 5 else "unknown"
    return SegreIntegralTable(
        1, {(0, 0): d, (0, 1): 2 * g - 2},
        name=name or f"curve(d={d}, g={g})", ample5=ample,
    )


def surface(d: RationalLike, pi: RationalLike, kappa: RationalLike, e: RationalLike,
            name: str | None = None) -> SegreIntegralTable:
    """Surface with h^2 = d, h.K = pi, K^2 = kappa, c_2 = e.

    s_1(T_S) = K and s_2(T_S) = K^2 - c_2.
    """
    d, pi, kappa, e = (to_rational(v) for v in (d, pi, kappa, e))
    return SegreIntegralTable(
        2, {(0, 0): d, (0, 1): pi, (1, 1): kappa, (0, 2): kappa - e},
        name=name or f"surface(d={d}, pi={pi}, kappa={kappa}, e={e})",
    )


def veronese(n: int, t: int, name: str | None = None) -> SegreIntegralTable:
    """P^n embedded by O(t); O(t) is exactly t-very ample."""
    if n < 1 or t < 1:
        raise ValueError("veronese needs n >= 1 and t >= 1")
    chern = [binomial(n + 1, k) for k in range(n + 1)]
    sigma = segre_from_chern(chern, n)
    entries = {}
    for b in range(n + 1):
        for a in range(b + 1):
            if a + b <= n:
                entries[(a, b)] = sigma[a] * sigma[b] * Fraction(t) ** (n - a - b)
    return SegreIntegralTable(
        n, entries, name=name or f"veronese(n={n}, t={t})",
        ample5="yes" if t >= 5 else "no",
    )


def to_text(table: SegreIntegralTable) -> str:
    doc = {
        "n": table.n,
        "name": table.name,
        "ample5": table.ample5,
        "table": {f"{a},{b}": format_rational(v) for (a, b), v in table.entries.items()},
    }
    return json.dumps(doc, indent=2)


def _parse_key(key: str) -> tuple[int, int]:
    parts = key.split(",")
    if len(parts) != 2:
        raise ParseError(f"table key {key!r} is not of the form 'a,b'")
    try:
        a, b = (int(p.strip()) for p in parts)
    except ValueError:
        raise ParseError(f"table key {key!r} is not a pair of integers") from None
    if a > b:
        raise ParseError(f"table key {key!r} has a > b; store it as '{b},{a}'")
    return a, b


def from_text(document: str) -> SegreIntegralTable:
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("field 'n' must be a positive integer")
    raw = doc.get("table")
    if not isinstance(raw, dict):
        raise ParseError("field 'table' must be an object")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("field 'name' must be a string")
    ample = doc.get("ample5", "unknown")
    if ample not in AMPLE_STATES:
        raise ParseError(f"field 'ample5' must be one of {AMPLE_STATES}")

    entries = {}
    for key, value in raw.items():
        a, b = _parse_key(key)
        if a < 0 or a + b > n:
            raise ParseError(f"table key {key!r} out of range for n = {n}")
        if (a, b) in entries:
            raise ParseError(f"duplicate table key {key!r}")
        if not isinstance(value, (str, int)) or isinstance(value, bool):
            raise ParseError(f"value for {key!r} must be a rational string")
        try:
            entries[(a, b)] = to_rational(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"value {value!r} for {key!r} is not a rational") from None

    missing = [k for k in SegreIntegralTable.required_keys(n) if k not in entries]
    if missing:
        raise IncompleteTable("missing entries: " + ", ".join(f"{a},{b}" for a, b in missing))
    if entries[(0, 0)] == 0:
        raise ZeroDegree("degree entry '0,0' is zero")
    return SegreIntegralTable(n, entries, name=name, ample5=ample)


def load(path) -> SegreIntegralTable:
    with open(path, encoding="utf-8") as fh:
        return from_text(fh.read())
