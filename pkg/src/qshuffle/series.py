"""Truncated power series in ``t`` with coefficients in the free algebra.

Only truncations are ever manipulated: a series of order ``N`` carries the
coefficients of ``t^0 .. t^N`` and products of order-``N`` series are again
order ``N``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from .coeff import ONE, LaurentInt, q_int, q_power
from .report import VerificationReport
from .shuffle import ProductSum, _accumulate, _from_flat
from .words import FreeElement, alternating_w

__all__ = [
    "TruncatedSeries",
    "build_series",
    "substitute_neg_t",
    "star_series",
    "verify_series_identity",
    "SERIES_IDENTITIES",
    "SERIES_NAMES",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 8


class TruncatedSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[FreeElement], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be a natural number")
        coeffs = coeffs[: order + 1]
        coeffs += [FreeElement() for _ in range(order + 1 - len(coeffs))]
        self.order = order
        self.coeffs: List[FreeElement] = coeffs

    @classmethod
    def constant(cls, e: FreeElement, order: int) -> "TruncatedSeries":
        return cls([e], order)

    def __getitem__(self, m: int) -> FreeElement:
        return self.coeffs[m]

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries([a.scale(c) for a in self.coeffs], self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def support_size(self) -> int:
        return sum(len(c) for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for m, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if m == 0:
                parts.append(str(c))
            else:
                t = "t" if m == 1 else f"t^{m}"
                parts.append(f"({c})*{t}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {self})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [{"t": m, **c.to_json()} for m, c in enumerate(self.coeffs)],
        }


def _gh(k: int) -> str:
    return "xy" * k or "1"


def _g(k: int) -> str:
    return "yx" * k or "1"


_SERIES_TERMS: Dict[str, Callable[[int], str]] = {
    "Gh": _gh,
    "G": _g,
    "W-": lambda k: str(alternating_w(-k)),
    "W+": lambda k: str(alternating_w(k + 1)),
}
_ALIASES = {"Ĝ": "Gh", "tG": "Gh", "W−": "W-", "Wm": "W-", "Wp": "W+"}
SERIES_NAMES = tuple(_SERIES_TERMS)


def build_series(name: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``Gh(t) = sum Gh_k t^k``, ``G(t)``, ``W-(t) = sum W_{-k} t^k``, ``W+(t) = sum W_{k+1} t^k``."""
    key = _ALIASES.get(name, name)
    if key not in _SERIES_TERMS:
        raise ValueError(f"unknown series {name!r}; expected one of {', '.join(SERIES_NAMES)}")
    term = _SERIES_TERMS[key]
    return TruncatedSeries([FreeElement.word(term(k)) for k in range(order + 1)], order)


def substitute_neg_t(s: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries([-c if m % 2 else c for m, c in enumerate(s.coeffs)], s.order)


def _product_terms(a: FreeElement, b: FreeElement) -> ProductSum:
    out = ProductSum()
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            out.terms.append((cu * cv, u, v))
    return out


def star_series(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product with the q-shuffle product on coefficients."""
    a._check(b)
    coeffs = []
    for m in range(a.order + 1):
        ps = ProductSum()
        for i in range(m + 1):
            ps = ps + _product_terms(a.coeffs[i], b.coeffs[m - i])
        coeffs.append(ps.evaluate())
    return TruncatedSeries(coeffs, a.order)


# ---------------------------------------------------------------------------
# the generating-function identities
# ---------------------------------------------------------------------------

TWO = q_int(2)


def _sgn(n: int) -> int:
    return -1 if n % 2 else 1


def _el(*pairs) -> FreeElement:
    out = FreeElement()
    for c, w in pairs:
        out = out + FreeElement.word(w or "1", c)
    return out


@dataclass(frozen=True)
class SeriesIdentity:
    id: str
    left: str
    right: str
    neg_left: bool
    even: Callable[[int], FreeElement]
    odd: Callable[[int], FreeElement]
    statement: str
    note: str = ""

    def lhs(self, order: int) -> TruncatedSeries:
        a = build_series(self.left, order)
        b = build_series(self.right, order)
        if self.neg_left:
            a = substitute_neg_t(a)
        else:
            b = substitute_neg_t(b)
        return star_series(a, b)

    def rhs(self, order: int) -> TruncatedSeries:
        coeffs = [self.even(m // 2) if m % 2 == 0 else self.odd(m // 2) for m in range(order + 1)]
        return TruncatedSeries(coeffs, order)

    def build(self, order: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
        return self.lhs(order), self.rhs(order)


SERIES_IDENTITIES: Dict[str, SeriesIdentity] = {}


def _identity(sid, left, right, neg_left, even, odd, statement, note=""):
    SERIES_IDENTITIES[sid] = SeriesIdentity(sid, left, right, neg_left, even, odd, statement, note)


def _zero(n: int) -> FreeElement:
    return FreeElement()


def _even_scaled(template: Callable[[int], str], extra=ONE):
    return lambda n: _el((extra * _sgn(n) * TWO ** (2 * n), template(n)))


def _odd_scaled(template: Callable[[int], str], extra=ONE):
    return lambda n: _el((extra * _sgn(n) * TWO ** (2 * n + 1), template(n)))


_Q = q_power(1)
_QI = q_power(-1)

_identity("S6.1.1", "Gh", "Gh", True, _even_scaled(lambda n: "xxyy" * n), _zero,
          "Gh(-t) * Gh(t) = sum_n (-1)^n [2]^{2n} (xxyy)^n t^{2n}")
_identity("S6.1.2", "G", "G", True, _even_scaled(lambda n: "yyxx" * n), _zero,
          "G(-t) * G(t) = sum_n (-1)^n [2]^{2n} (yyxx)^n t^{2n}")
_identity("S6.1.3", "W-", "W-", True, _odd_scaled(lambda n: "xxyy" * n + "xx", _Q), _zero,
          "W-(-t) * W-(t) = sum_n (-1)^n q [2]^{2n+1} (xxyy)^n xx t^{2n}")
_identity("S6.1.4", "W+", "W+", True, _odd_scaled(lambda n: "yyxx" * n + "yy", _Q), _zero,
          "W+(-t) * W+(t) = sum_n (-1)^n q [2]^{2n+1} (yyxx)^n yy t^{2n}")


def _mixed(sid, left, right, neg_left, even_word, odd_word, odd_factor, even_text, odd_text, note=""):
    lhs_text = f"{left}(-t) * {right}(t)" if neg_left else f"{left}(t) * {right}(-t)"
    qtext = "q " if odd_factor == _Q else "q^-1 "
    _identity(sid, left, right, neg_left, _even_scaled(even_word), _odd_scaled(odd_word, odd_factor),
              f"{lhs_text} = sum_n (-1)^n [2]^{{2n}} {even_text} t^{{2n}}"
              f" + {qtext}sum_n (-1)^n [2]^{{2n+1}} {odd_text} t^{{2n+1}}", note)


_mixed("S6.2.1", "W-", "Gh", True, lambda n: "xxyy" * n + "x", lambda n: "xxyy" * n + "xxy", _Q,
       "(xxyy)^n x", "(xxyy)^n xxy")
_mixed("S6.2.2", "Gh", "W-", False, lambda n: "xxyy" * n + "x", lambda n: "xxyy" * n + "xxy", _QI,
       "(xxyy)^n x", "(xxyy)^n xxy")
_mixed("S6.3.1", "W-", "G", True, lambda n: "x" + "yyxx" * n, lambda n: "yxx" + "yyxx" * n, _QI,
       "x (yyxx)^n", "yxx (yyxx)^n")
_mixed("S6.3.2", "G", "W-", False, lambda n: "x" + "yyxx" * n, lambda n: "yxx" + "yyxx" * n, _Q,
       "x (yyxx)^n", "yxx (yyxx)^n")
_mixed("S6.4.1", "W+", "Gh", True, lambda n: "y" + "xxyy" * n, lambda n: "xyy" + "xxyy" * n, _QI,
       "y (xxyy)^n", "xyy (xxyy)^n")
_mixed("S6.4.2", "Gh", "W+", False, lambda n: "y" + "xxyy" * n, lambda n: "xyy" + "xxyy" * n, _Q,
       "y (xxyy)^n", "xyy (xxyy)^n")
_mixed("S6.5.1", "W+", "G", True, lambda n: "yyxx" * n + "y", lambda n: "yyxx" * n + "yyx", _Q,
       "(yyxx)^n y", "(yyxx)^n yyx")
_mixed("S6.5.2", "G", "W+", False, lambda n: "yyxx" * n + "y", lambda n: "yyxx" * n + "yyx", _QI,
       "(yyxx)^n y", "(yyxx)^n yyx", "odd coefficients use the word (yyxx)^n yyx")


def _g_gh_even(q_left, q_right):
    def even(n: int) -> FreeElement:
        if n == 0:
            return _el((ONE, "1"))
        c = _sgn(n) * TWO ** (2 * n - 1)
        m = n - 1
        return _el((c * q_left, "xyy" + "xxyy" * m + "x"), (c * q_right, "y" + "xxyy" * m + "xxy"))

    return even


def _g_gh_odd(n: int) -> FreeElement:
    c = _sgn(n) * TWO ** (2 * n)
    return _el((c, "x" + "yyxx" * n + "y"), (-c, "y" + "xxyy" * n + "x"))


_CONST_NOTE = "the t^0 coefficient is the identity word; the closed form applies from t^2 on"
_identity("S6.6.1", "G", "Gh", True, _g_gh_even(_QI, _Q), _g_gh_odd,
          "G(-t) * Gh(t) = 1 + sum_{n>=1} (-1)^n [2]^{2n-1} (q^-1 xyy (xxyy)^{n-1} x + q y (xxyy)^{n-1} xxy) t^{2n}"
          " + sum_n (-1)^n [2]^{2n} (x (yyxx)^n y - y (xxyy)^n x) t^{2n+1}", _CONST_NOTE)
_identity("S6.6.2", "Gh", "G", False, _g_gh_even(_Q, _QI), _g_gh_odd,
          "Gh(t) * G(-t) = 1 + sum_{n>=1} (-1)^n [2]^{2n-1} (q xyy (xxyy)^{n-1} x + q^-1 y (xxyy)^{n-1} xxy) t^{2n}"
          " + sum_n (-1)^n [2]^{2n} (x (yyxx)^n y - y (xxyy)^n x) t^{2n+1}", _CONST_NOTE)


def _wp_wm_even(cx, cy):
    def even(n: int) -> FreeElement:
        c = _sgn(n) * TWO ** (2 * n)
        return _el((c * cx, "x" + "yyxx" * n + "y"), (c * cy, "y" + "xxyy" * n + "x"))

    return even


def _wp_wm_odd(n: int) -> FreeElement:
    c = _QI * _sgn(n) * TWO ** (2 * n + 1)
    return _el((c, "xyy" + "xxyy" * n + "x"), (-c, "yxx" + "yyxx" * n + "y"))


_identity("S6.7.1", "W+", "W-", True, _wp_wm_even(q_power(-2), ONE), _wp_wm_odd,
          "W+(-t) * W-(t) = sum_n (-1)^n [2]^{2n} (q^-2 x (yyxx)^n y + y (xxyy)^n x) t^{2n}"
          " + q^-1 sum_n (-1)^n [2]^{2n+1} (xyy (xxyy)^n x - yxx (yyxx)^n y) t^{2n+1}")
_identity("S6.7.2", "W-", "W+", False, _wp_wm_even(ONE, q_power(-2)), _wp_wm_odd,
          "W-(t) * W+(-t) = sum_n (-1)^n [2]^{2n} (x (yyxx)^n y + q^-2 y (xxyy)^n x) t^{2n}"
          " + q^-1 sum_n (-1)^n [2]^{2n+1} (xyy (xxyy)^n x - yxx (yyxx)^n y) t^{2n+1}")


def verify_series_identity(sid: str, order: int = DEFAULT_ORDER) -> VerificationReport:
    try:
        ident = SERIES_IDENTITIES[sid]
    except KeyError:
        raise KeyError(f"unknown series identity {sid!r}") from None
    if order < 0:
        raise ValueError("order must be a natural number")
    t0 = time.perf_counter()
    lhs, rhs = ident.build(order)
    diff = lhs - rhs
    millis = (time.perf_counter() - t0) * 1000
    return VerificationReport(sid, [order], diff, lhs.support_size(), rhs.support_size(), millis,
                              note=ident.note or None)
