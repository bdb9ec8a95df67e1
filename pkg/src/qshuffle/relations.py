"""Catalog of identities in the q-shuffle algebra and their exact verifier.

Every family instantiates, at concrete natural-number parameters, to a pair
``(lhs, rhs)`` of lazy :class:`~qshuffle.shuffle.ProductSum` objects; a
family passes when ``lhs - rhs`` expands to zero.  Words are written as
templates such as ``"(xxyy)^{j+1} xx"`` so that a family's builder and its
printed statement come from the same text.

Identities that divide by ``1 - q^-2``, ``q - q^-1`` or ``q^2 - 1`` are stored
multiplied through by that factor.  Chains ``A = B = C`` are split into two
families ``A = B`` and ``B = C``.
"""

from __future__ import annotations

import functools
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .coeff import ONE, LaurentInt, q_int, q_power
from .report import VerificationReport
from .shuffle import ProductSum, _from_flat, _accumulate
from .words import FreeElement, alternating_w, code_from_str

__all__ = [
    "RelationFamily",
    "CATALOG",
    "list_families",
    "get_family",
    "instantiate",
    "verify",
    "verify_range",
    "parameter_tuples",
    "expand_template",
]

Pair = Tuple[ProductSum, ProductSum]

# ---------------------------------------------------------------------------
# word templates and building blocks
# ---------------------------------------------------------------------------

_POWER = re.compile(r"\(([xy]+)\)\^(\{[^}]*\}|[a-z]|\d+)")
_EXPONENT = re.compile(r"^\s*([a-z]|\d+)\s*(?:([+-])\s*(\d+))?\s*$")


def _exponent(text: str, env: Dict[str, int]) -> int:
    m = _EXPONENT.match(text.strip("{}"))
    if m is None:
        raise ValueError(f"bad exponent {text!r}")
    base, op, k = m.groups()
    val = env[base] if base.isalpha() else int(base)
    if op:
        val = val + int(k) if op == "+" else val - int(k)
    if val < 0:
        raise ValueError(f"negative exponent in {text!r}")
    return val


def expand_template(template: str, **env: int) -> str:
    """``expand_template("(xxyy)^{j+1} xx", j=1) == "xxyyxxyyxx"``."""
    s = _POWER.sub(lambda m: m.group(1) * _exponent(m.group(2), env), template)
    s = s.replace(" ", "")
    if s.strip("xy") not in ("", "1"):
        raise ValueError(f"template {template!r} did not reduce to a word")
    return s or "1"


def _w(s: str) -> int:
    return code_from_str(s)


def word(s: str, c=1) -> ProductSum:
    return ProductSum.product(_w(s), 1, c)


def star(a: str, b: str, c=1) -> ProductSum:
    return ProductSum.product(_w(a), _w(b), c)


def comm(a: str, b: str, k: int = 0) -> ProductSum:
    """``[a, b]_{q^k}`` for two words."""
    if k == 0:
        return star(a, b) - star(b, a)
    return star(a, b, q_power(k)) - star(b, a, q_power(-k))


def Gh(n: int) -> str:
    return "xy" * n


def G(n: int) -> str:
    return "yx" * n


def W(k: int) -> str:
    return str(alternating_w(k))


def conv(m: int, left: Callable[[int], str], right: Callable[[int], str], c=1) -> ProductSum:
    """``c * sum_{k=0}^{m} (-1)^k left(k) * right(k)``."""
    c = LaurentInt.coerce(c)
    out = ProductSum()
    for k in range(m + 1):
        out = out + star(left(k), right(k), -c if k % 2 else c)
    return out


def conv_comm(m: int, left: Callable[[int], str], right: Callable[[int], str], k: int) -> ProductSum:
    out = ProductSum()
    for i in range(m + 1):
        term = comm(left(i), right(i), k)
        out = out + (-term if i % 2 else term)
    return out


def zero() -> ProductSum:
    return ProductSum()


def q(k: int) -> LaurentInt:
    return q_power(k)


TWO = q_int(2)


def sgn(n: int) -> int:
    return -1 if n % 2 else 1


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelationFamily:
    id: str
    arity: int
    builder: Callable[..., object]
    statement: str
    group: str
    kind: str = "relation"
    note: str = ""

    @property
    def source(self) -> Dict[str, object]:
        parts = self.id.split(".")
        src = {"group": self.group, "proposition": ".".join(parts[:-1]) or self.id, "position": parts[-1]}
        if self.note:
            src["note"] = self.note
        return src

    def build(self, params: Sequence[int]):
        if len(params) != self.arity:
            raise ValueError(f"{self.id} takes {self.arity} parameter(s), got {len(params)}")
        if any(p < 0 for p in params):
            raise ValueError("parameters are natural numbers")
        return self.builder(*params)


CATALOG: Dict[str, RelationFamily] = {}


def _register(fid: str, arity: int, group: str, statement: str, note: str = ""):
    def deco(fn):
        if fid in CATALOG:
            raise KeyError(f"duplicate family {fid}")
        CATALOG[fid] = RelationFamily(fid, arity, fn, statement, group, note=note)
        return fn

    return deco


# -- q-Serre -------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _star_prefix(letters: str) -> FreeElement:
    # left-nested product of single letters, e.g. (x * x) * y
    from .shuffle import shuffle

    e = FreeElement.word(letters[0])
    for a in letters[1:]:
        e = shuffle(e, a)
    return e


def _star_chain(letters: str, coeff=1) -> ProductSum:
    c = LaurentInt.coerce(coeff)
    last = _w(letters[-1])
    return ProductSum([(c * k, w, last) for w, k in _star_prefix(letters[:-1])._terms.items()])


def _serre(a: str, b: str) -> Pair:
    t3 = q_int(3)
    lhs = (
        _star_chain(a + a + a + b)
        + _star_chain(a + a + b + a, -t3)
        + _star_chain(a + b + a + a, t3)
        + _star_chain(b + a + a + a, -1)
    )
    return lhs, zero()


_register("serre.x", 0, "q-Serre", "x*x*x*y - [3]_q x*x*y*x + [3]_q x*y*x*x - y*x*x*x = 0")(
    lambda: _serre("x", "y"))
_register("serre.y", 0, "q-Serre", "y*y*y*x - [3]_q y*y*x*y + [3]_q y*x*y*y - x*y*y*y = 0")(
    lambda: _serre("y", "x"))


# -- one letter against one doubly alternating word ------------------------------

C_Q2 = q(2) - q(-2)
C_1Q4 = ONE - q(-4)
C_Q3 = q(1) - q(-3)
C_Q3B = q(3) - q(-1)

_SCALAR_TEXT = {
    id(C_Q2): "(q^2-q^-2)",
    id(C_1Q4): "(1-q^-4)",
    id(C_Q3): "(q-q^-3)",
    id(C_Q3B): "(q^3-q^-1)",
}

# (id, left, right, k, scalar, rhs words with signs)
_LETTER_COMMUTATORS = [
    ("P4.xcomm1.1", "(xxyy)^n", "x", 2, C_Q2, [(1, "(xxyy)^n x")]),
    ("P4.xcomm1.2", "x", "(yyxx)^n", 2, C_Q2, [(1, "x (yyxx)^n")]),
    ("P4.xcomm1.3", "x", "(xxyy)^n xx", 0, None, []),
    ("P4.xcomm1.4", "(yyxx)^n yy", "x", 0, C_1Q4, [(1, "(yyxx)^n yyx"), (-1, "xyy (xxyy)^n")]),
    ("P4.ycomm1.1", "y", "(xxyy)^n", 2, C_Q2, [(1, "y (xxyy)^n")]),
    ("P4.ycomm1.2", "(yyxx)^n", "y", 2, C_Q2, [(1, "(yyxx)^n y")]),
    ("P4.ycomm1.3", "y", "(xxyy)^n xx", 0, C_1Q4, [(1, "yxx (yyxx)^n"), (-1, "(xxyy)^n xxy")]),
    ("P4.ycomm1.4", "(yyxx)^n yy", "y", 0, None, []),
    ("P4.xcomm2.1", "xyy (xxyy)^n", "x", 1, C_Q3, [(1, "xyy (xxyy)^n x"), (-1, "(xxyy)^{n+1}")]),
    ("P4.xcomm2.2", "x", "yxx (yyxx)^n", 1, None, []),
    ("P4.xcomm2.3", "x", "x (yyxx)^n", 1, C_Q3B, [(1, "(xxyy)^n xx")]),
    ("P4.xcomm2.4", "y (xxyy)^n", "x", 1, C_Q3, [(1, "y (xxyy)^n x")]),
    ("P4.ycomm2.1", "y", "xyy (xxyy)^n", 1, None, []),
    ("P4.ycomm2.2", "yxx (yyxx)^n", "y", 1, C_Q3, [(1, "yxx (yyxx)^n y"), (-1, "(yyxx)^{n+1}")]),
    ("P4.ycomm2.3", "x (yyxx)^n", "y", 1, C_Q3, [(1, "x (yyxx)^n y")]),
    ("P4.ycomm2.4", "y", "y (xxyy)^n", 1, C_Q3B, [(1, "(yyxx)^n yy")]),
    ("P4.xcomm3.1", "(xxyy)^n xxy", "x", 1, None, []),
    ("P4.xcomm3.2", "x", "(yyxx)^n yyx", 1, C_Q3, [(1, "xyy (xxyy)^n x"), (-1, "(yyxx)^{n+1}")]),
    ("P4.xcomm3.3", "(xxyy)^n x", "x", 1, C_Q3B, [(1, "(xxyy)^n xx")]),
    ("P4.xcomm3.4", "x", "(yyxx)^n y", 1, C_Q3, [(1, "x (yyxx)^n y")]),
    ("P4.ycomm3.1", "y", "(xxyy)^n xxy", 1, C_Q3, [(1, "yxx (yyxx)^n y"), (-1, "(xxyy)^{n+1}")]),
    ("P4.ycomm3.2", "(yyxx)^n yyx", "y", 1, None, []),
    ("P4.ycomm3.3", "y", "(xxyy)^n x", 1, C_Q3, [(1, "y (xxyy)^n x")]),
    ("P4.ycomm3.4", "(yyxx)^n y", "y", 1, C_Q3B, [(1, "(yyxx)^n yy")]),
    ("P4.xcomm4.1", "x", "x (yyxx)^n y", 0, C_Q2, [(1, "(xxyy)^n xxy")]),
    ("P4.xcomm4.2", "y (xxyy)^n x", "x", 0, C_Q2, [(1, "yxx (yyxx)^n")]),
    ("P4.xcomm4.3", "x", "xyy (xxyy)^n x", 0, C_Q2, [(1, "(xxyy)^{n+1} x"), (-1, "x (yyxx)^{n+1}")]),
    ("P4.xcomm4.4", "x", "yxx (yyxx)^n y", 0, None, []),
    ("P4.ycomm4.1", "x (yyxx)^n y", "y", 0, C_Q2, [(1, "xyy (xxyy)^n")]),
    ("P4.ycomm4.2", "y", "y (xxyy)^n x", 0, C_Q2, [(1, "(yyxx)^n yyx")]),
    ("P4.ycomm4.3", "xyy (xxyy)^n x", "y", 0, None, []),
    ("P4.ycomm4.4", "yxx (yyxx)^n y", "y", 0, C_Q2, [(1, "y (xxyy)^{n+1}"), (-1, "(yyxx)^{n+1} y")]),
]


def _bracket(left: str, right: str, k: int) -> str:
    sub = {0: "", 1: "_q", 2: "_{q^2}"}[k]
    return f"[{left}, {right}]{sub}"


def _letter_statement(left, right, k, scalar, rhs) -> str:
    if scalar is None:
        return f"{_bracket(left, right, k)} = 0"
    words = " ".join(("- " if s < 0 else ("+ " if i else "")) + t for i, (s, t) in enumerate(rhs))
    if len(rhs) > 1:
        words = f"({words})"
    return f"{_bracket(left, right, k)} = {_SCALAR_TEXT[id(scalar)]} {words}"


def _letter_builder(left, right, k, scalar, rhs):
    def build(n: int) -> Pair:
        lhs = comm(expand_template(left, n=n), expand_template(right, n=n), k)
        out = ProductSum()
        for s, t in rhs:
            out = out + word(expand_template(t, n=n), scalar if s > 0 else -scalar)
        return lhs, out

    return build


_LETTER_NOTES = {
    "P4.ycomm2.1": "corrected argument order; [xyy (xxyy)^n, y]_q is nonzero already at n = 0",
}

for _fid, _l, _r, _k, _c, _rhs in _LETTER_COMMUTATORS:
    _register(_fid, 1, "letter commutators", _letter_statement(_l, _r, _k, _c, _rhs), _LETTER_NOTES.get(_fid, ""))(
        _letter_builder(_l, _r, _k, _c, _rhs))


# -- doubly alternating words as polynomials in alternating words ---------------

def _reg1(fid: str, group: str, statement: str, note: str = ""):
    return _register(fid, 1, group, statement, note)


_CONV = "convolutions"


@_reg1("P5.conv1.1", _CONV, "sum_{k=0}^{2n} (-1)^k Gh_k*Gh_{2n-k} = (-1)^n [2]^{2n} (xxyy)^n")
def _(n):
    return conv(2 * n, Gh, lambda k: Gh(2 * n - k)), word(expand_template("(xxyy)^n", n=n), sgn(n) * TWO ** (2 * n))


@_reg1("P5.conv1.2", _CONV, "sum_{k=0}^{2n} (-1)^k G_k*G_{2n-k} = (-1)^n [2]^{2n} (yyxx)^n")
def _(n):
    return conv(2 * n, G, lambda k: G(2 * n - k)), word(expand_template("(yyxx)^n", n=n), sgn(n) * TWO ** (2 * n))


@_reg1("P5.conv1.3", _CONV, "sum_{k=0}^{2n} (-1)^k W_{-k}*W_{k-2n} = (-1)^n q [2]^{2n+1} (xxyy)^n xx")
def _(n):
    return (conv(2 * n, lambda k: W(-k), lambda k: W(k - 2 * n)),
            word(expand_template("(xxyy)^n xx", n=n), sgn(n) * q(1) * TWO ** (2 * n + 1)))


@_reg1("P5.conv1.4", _CONV, "sum_{k=0}^{2n} (-1)^k W_{k+1}*W_{2n+1-k} = (-1)^n q [2]^{2n+1} (yyxx)^n yy")
def _(n):
    return (conv(2 * n, lambda k: W(k + 1), lambda k: W(2 * n + 1 - k)),
            word(expand_template("(yyxx)^n yy", n=n), sgn(n) * q(1) * TWO ** (2 * n + 1)))


@_reg1("P5.conv1odd.1", _CONV, "sum_{k=0}^{2n+1} (-1)^k Gh_k*Gh_{2n+1-k} = 0")
def _(n):
    return conv(2 * n + 1, Gh, lambda k: Gh(2 * n + 1 - k)), zero()


@_reg1("P5.conv1odd.2", _CONV, "sum_{k=0}^{2n+1} (-1)^k G_k*G_{2n+1-k} = 0")
def _(n):
    return conv(2 * n + 1, G, lambda k: G(2 * n + 1 - k)), zero()


@_reg1("P5.conv1odd.3", _CONV, "sum_{k=0}^{2n+1} (-1)^k W_{-k}*W_{k-2n-1} = 0")
def _(n):
    return conv(2 * n + 1, lambda k: W(-k), lambda k: W(k - 2 * n - 1)), zero()


@_reg1("P5.conv1odd.4", _CONV, "sum_{k=0}^{2n+1} (-1)^k W_{k+1}*W_{2n+2-k} = 0")
def _(n):
    return conv(2 * n + 1, lambda k: W(k + 1), lambda k: W(2 * n + 2 - k)), zero()


def _mixed(fid, a_name, a, b_name, b, even_word, odd_word, odd_left_exp):
    """Register the four equalities for ``a`` convolved with ``b``.

    Even length: ``sum (-1)^k a_k*b_{2n-k} = (-1)^n [2]^{2n} even_word = sum (-1)^k b_{2n-k}*a_k``.
    Odd length: ``q^e sum (-1)^k a_k*b_{2n+1-k} = (-1)^n [2]^{2n+1} odd_word = q^-e sum (-1)^k b_{2n+1-k}*a_k``.
    """
    e = odd_left_exp
    ql = "q^-1 " if e < 0 else "q "
    qr = "q " if e < 0 else "q^-1 "

    @_reg1(f"{fid}.1a", _CONV, f"sum_{{k=0}}^{{2n}} (-1)^k {a_name(0)}*{b_name(1)} = (-1)^n [2]^{{2n}} {even_word}")
    def _(n):
        return (conv(2 * n, a, lambda k: b(2 * n - k)),
                word(expand_template(even_word, n=n), sgn(n) * TWO ** (2 * n)))

    @_reg1(f"{fid}.1b", _CONV, f"(-1)^n [2]^{{2n}} {even_word} = sum_{{k=0}}^{{2n}} (-1)^k {b_name(1)}*{a_name(0)}")
    def _(n):
        return (word(expand_template(even_word, n=n), sgn(n) * TWO ** (2 * n)),
                conv(2 * n, lambda k: b(2 * n - k), a))

    @_reg1(f"{fid}.2a", _CONV,
           f"{ql}sum_{{k=0}}^{{2n+1}} (-1)^k {a_name(0)}*{b_name(2)} = (-1)^n [2]^{{2n+1}} {odd_word}")
    def _(n):
        return (conv(2 * n + 1, a, lambda k: b(2 * n + 1 - k), q(e)),
                word(expand_template(odd_word, n=n), sgn(n) * TWO ** (2 * n + 1)))

    @_reg1(f"{fid}.2b", _CONV,
           f"(-1)^n [2]^{{2n+1}} {odd_word} = {qr}sum_{{k=0}}^{{2n+1}} (-1)^k {b_name(2)}*{a_name(0)}")
    def _(n):
        return (word(expand_template(odd_word, n=n), sgn(n) * TWO ** (2 * n + 1)),
                conv(2 * n + 1, lambda k: b(2 * n + 1 - k), a, q(-e)))


def _wm_name(_):
    return "W_{-k}"


def _wp_name(_):
    return "W_{k+1}"


def _gh_name(which):
    return {0: "Gh_k", 1: "Gh_{2n-k}", 2: "Gh_{2n+1-k}"}[which]


def _g_name(which):
    return {0: "G_k", 1: "G_{2n-k}", 2: "G_{2n+1-k}"}[which]


_mixed("P5.WmGh", _wm_name, lambda k: W(-k), _gh_name, Gh, "(xxyy)^n x", "(xxyy)^n xxy", -1)
_mixed("P5.WmG", _wm_name, lambda k: W(-k), _g_name, G, "x (yyxx)^n", "yxx (yyxx)^n", 1)
_mixed("P5.WpGh", _wp_name, lambda k: W(k + 1), _gh_name, Gh, "y (xxyy)^n", "xyy (xxyy)^n", 1)
_mixed("P5.WpG", _wp_name, lambda k: W(k + 1), _g_name, G, "(yyxx)^n y", "(yyxx)^n yyx", -1)


def _two_words(n, c1, t1, c2, t2, scale):
    return (word(expand_template(t1, n=n), scale * c1) + word(expand_template(t2, n=n), scale * c2))


@_reg1("P5.GGh.1", _CONV,
       "sum_{k=0}^{2n+2} (-1)^k G_k*Gh_{2n+2-k} = (-1)^{n+1} [2]^{2n+1} (q^-1 xyy (xxyy)^n x + q y (xxyy)^n xxy)")
def _(n):
    m = 2 * n + 2
    return (conv(m, G, lambda k: Gh(m - k)),
            _two_words(n, q(-1), "xyy (xxyy)^n x", q(1), "y (xxyy)^n xxy", sgn(n + 1) * TWO ** (2 * n + 1)))


@_reg1("P5.GGh.2", _CONV,
       "sum_{k=0}^{2n+2} (-1)^k Gh_{2n+2-k}*G_k = (-1)^{n+1} [2]^{2n+1} (q xyy (xxyy)^n x + q^-1 y (xxyy)^n xxy)")
def _(n):
    m = 2 * n + 2
    return (conv(m, lambda k: Gh(m - k), G),
            _two_words(n, q(1), "xyy (xxyy)^n x", q(-1), "y (xxyy)^n xxy", sgn(n + 1) * TWO ** (2 * n + 1)))


@_reg1("P5.GGh.3", _CONV,
       "sum_{k=0}^{2n+1} (-1)^k G_k*Gh_{2n+1-k} = (-1)^n [2]^{2n} (x (yyxx)^n y - y (xxyy)^n x)")
def _(n):
    m = 2 * n + 1
    return (conv(m, G, lambda k: Gh(m - k)),
            _two_words(n, 1, "x (yyxx)^n y", -1, "y (xxyy)^n x", sgn(n) * TWO ** (2 * n)))


@_reg1("P5.GGh.4", _CONV,
       "sum_{k=0}^{2n+1} (-1)^k Gh_{2n+1-k}*G_k = (-1)^n [2]^{2n} (x (yyxx)^n y - y (xxyy)^n x)")
def _(n):
    m = 2 * n + 1
    return (conv(m, lambda k: Gh(m - k), G),
            _two_words(n, 1, "x (yyxx)^n y", -1, "y (xxyy)^n x", sgn(n) * TWO ** (2 * n)))


@_reg1("P5.WpWm.1", _CONV,
       "sum_{k=0}^{2n} (-1)^k W_{k+1}*W_{k-2n} = (-1)^n [2]^{2n} (q^-2 x (yyxx)^n y + y (xxyy)^n x)")
def _(n):
    return (conv(2 * n, lambda k: W(k + 1), lambda k: W(k - 2 * n)),
            _two_words(n, q(-2), "x (yyxx)^n y", 1, "y (xxyy)^n x", sgn(n) * TWO ** (2 * n)))


@_reg1("P5.WpWm.2", _CONV,
       "sum_{k=0}^{2n} (-1)^k W_{k-2n}*W_{k+1} = (-1)^n [2]^{2n} (x (yyxx)^n y + q^-2 y (xxyy)^n x)")
def _(n):
    return (conv(2 * n, lambda k: W(k - 2 * n), lambda k: W(k + 1)),
            _two_words(n, 1, "x (yyxx)^n y", q(-2), "y (xxyy)^n x", sgn(n) * TWO ** (2 * n)))


@_reg1("P5.WpWm.3", _CONV,
       "sum_{k=0}^{2n+1} (-1)^k W_{k+1}*W_{k-2n-1} = (-1)^n q^-1 [2]^{2n+1} (xyy (xxyy)^n x - yxx (yyxx)^n y)")
def _(n):
    return (conv(2 * n + 1, lambda k: W(k + 1), lambda k: W(k - 2 * n - 1)),
            _two_words(n, 1, "xyy (xxyy)^n x", -1, "yxx (yyxx)^n y", sgn(n) * q(-1) * TWO ** (2 * n + 1)))


@_reg1("P5.WpWm.4", _CONV,
       "sum_{k=0}^{2n+1} (-1)^k W_{k-2n-1}*W_{k+1} = (-1)^n q^-1 [2]^{2n+1} (xyy (xxyy)^n x - yxx (yyxx)^n y)")
def _(n):
    return (conv(2 * n + 1, lambda k: W(k - 2 * n - 1), lambda k: W(k + 1)),
            _two_words(n, 1, "xyy (xxyy)^n x", -1, "yxx (yyxx)^n y", sgn(n) * q(-1) * TWO ** (2 * n + 1)))


D_1Q2 = ONE - q(-2)
D_QQ = q(1) - q(-1)
D_Q21 = q(2) - ONE
_CLEARED = "stored multiplied through by the inverted scalar"


@_reg1("P5.cor1.1", _CONV,
       "(1-q^-2) (-1)^n [2]^{2n+1} x (yyxx)^n y = sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}]_q", _CLEARED)
def _(n):
    return (word(expand_template("x (yyxx)^n y", n=n), D_1Q2 * sgn(n) * TWO ** (2 * n + 1)),
            conv_comm(2 * n, lambda k: W(k - 2 * n), lambda k: W(k + 1), 1))


@_reg1("P5.cor1.2", _CONV,
       "(1-q^-2) (-1)^n [2]^{2n+1} y (xxyy)^n x = sum_{k=0}^{2n} (-1)^k [W_{k+1}, W_{k-2n}]_q", _CLEARED)
def _(n):
    return (word(expand_template("y (xxyy)^n x", n=n), D_1Q2 * sgn(n) * TWO ** (2 * n + 1)),
            conv_comm(2 * n, lambda k: W(k + 1), lambda k: W(k - 2 * n), 1))


def _w_comm_sum(n):
    return conv_comm(2 * n, lambda k: W(k - 2 * n), lambda k: W(k + 1), 0)


def _g_comm_sum(n, k):
    m = 2 * n + 2
    return conv_comm(m, G, lambda i: Gh(m - i), k)


@_reg1("P5.cor1.3a", _CONV,
       "(1-q^-2) sum_{k=0}^{2n+1} (-1)^k G_k*Gh_{2n+1-k} = sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}]", _CLEARED)
def _(n):
    return conv(2 * n + 1, G, lambda k: Gh(2 * n + 1 - k), D_1Q2), _w_comm_sum(n)


@_reg1("P5.cor1.3b", _CONV,
       "sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}] = (1-q^-2) sum_{k=0}^{2n+1} (-1)^k Gh_{2n+1-k}*G_k", _CLEARED)
def _(n):
    return _w_comm_sum(n), conv(2 * n + 1, lambda k: Gh(2 * n + 1 - k), G, D_1Q2)


@_reg1("P5.cor2.1", _CONV,
       "(q-q^-1) (-1)^{n+1} [2]^{2n+2} xyy (xxyy)^n x = sum_{k=0}^{2n+2} (-1)^k [Gh_{2n+2-k}, G_k]_q", _CLEARED)
def _(n):
    m = 2 * n + 2
    return (word(expand_template("xyy (xxyy)^n x", n=n), D_QQ * sgn(n + 1) * TWO ** (2 * n + 2)),
            conv_comm(m, lambda k: Gh(m - k), G, 1))


@_reg1("P5.cor2.2", _CONV,
       "(q-q^-1) (-1)^{n+1} [2]^{2n+2} yxx (yyxx)^n y = sum_{k=0}^{2n+2} (-1)^k [G_k, Gh_{2n+2-k}]_q", _CLEARED)
def _(n):
    return (word(expand_template("yxx (yyxx)^n y", n=n), D_QQ * sgn(n + 1) * TWO ** (2 * n + 2)),
            _g_comm_sum(n, 1))


@_reg1("P5.cor2.3a", _CONV,
       "(q^2-1) sum_{k=0}^{2n+1} (-1)^k W_{k+1}*W_{k-2n-1} = sum_{k=0}^{2n+2} (-1)^k [G_k, Gh_{2n+2-k}]", _CLEARED)
def _(n):
    return conv(2 * n + 1, lambda k: W(k + 1), lambda k: W(k - 2 * n - 1), D_Q21), _g_comm_sum(n, 0)


@_reg1("P5.cor2.3b", _CONV,
       "sum_{k=0}^{2n+2} (-1)^k [G_k, Gh_{2n+2-k}] = (q^2-1) sum_{k=0}^{2n+1} (-1)^k W_{k-2n-1}*W_{k+1}", _CLEARED)
def _(n):
    return _g_comm_sum(n, 0), conv(2 * n + 1, lambda k: W(k - 2 * n - 1), lambda k: W(k + 1), D_Q21)


# -- known relations among alternating words -------------------------------------

_ALT = "alternating words"


def _reg2(fid: str, group: str, statement: str):
    return _register(fid, 2, group, statement)


def _symmetric(fid, group, left, right, k, left_text, right_text):
    """``[left(i), right(j)]_{q^k} = [left(j), right(i)]_{q^k}``."""
    stmt = f"{_bracket(left_text, right_text, k)} = {_bracket(_swap_ij(left_text), _swap_ij(right_text), k)}"

    @_reg2(fid, group, stmt)
    def _(i, j):
        return comm(left(i), right(j), k), comm(left(j), right(i), k)


def _swap_ij(text: str) -> str:
    return text.translate(str.maketrans("ij", "ji"))


def _vanishing(fid, left, right, left_text, right_text):
    @_reg2(fid, _ALT, f"{_bracket(left_text, right_text, 0)} = 0")
    def _(i, j):
        return comm(left(i), right(j), 0), zero()


_vanishing("A.1a", lambda i: W(-i), lambda j: W(-j), "W_{-i}", "W_{-j}")
_vanishing("A.1b", lambda i: W(i + 1), lambda j: W(j + 1), "W_{i+1}", "W_{j+1}")
_vanishing("A.2a", lambda i: G(i + 1), lambda j: G(j + 1), "G_{i+1}", "G_{j+1}")
_vanishing("A.2b", lambda i: Gh(i + 1), lambda j: Gh(j + 1), "Gh_{i+1}", "Gh_{j+1}")
_symmetric("A.3", _ALT, lambda i: W(-i), lambda j: W(j + 1), 0, "W_{-i}", "W_{j+1}")
_symmetric("A.4", _ALT, lambda i: W(-i), lambda j: G(j + 1), 0, "W_{-i}", "G_{j+1}")
_symmetric("A.5", _ALT, lambda i: W(-i), lambda j: Gh(j + 1), 0, "W_{-i}", "Gh_{j+1}")
_symmetric("A.6", _ALT, lambda i: W(i + 1), lambda j: G(j + 1), 0, "W_{i+1}", "G_{j+1}")
_symmetric("A.7", _ALT, lambda i: W(i + 1), lambda j: Gh(j + 1), 0, "W_{i+1}", "Gh_{j+1}")
_symmetric("A.8", _ALT, lambda i: G(i + 1), lambda j: Gh(j + 1), 0, "G_{i+1}", "Gh_{j+1}")
_symmetric("A.9a", _ALT, lambda i: W(-i), G, 1, "W_{-i}", "G_j")
_symmetric("A.9b", _ALT, G, lambda j: W(j + 1), 1, "G_i", "W_{j+1}")
_symmetric("A.10a", _ALT, Gh, lambda j: W(-j), 1, "Gh_i", "W_{-j}")
_symmetric("A.10b", _ALT, lambda i: W(i + 1), Gh, 1, "W_{i+1}", "Gh_j")


@_reg2("A.11", _ALT, "[G_i, Gh_{j+1}] - [G_j, Gh_{i+1}] = q [W_{-j}, W_{i+1}]_q - q [W_{-i}, W_{j+1}]_q")
def _(i, j):
    lhs = comm(G(i), Gh(j + 1)) - comm(G(j), Gh(i + 1))
    rhs = (comm(W(-j), W(i + 1), 1) - comm(W(-i), W(j + 1), 1)).scale(q(1))
    return lhs, rhs


@_reg2("A.12", _ALT, "[Gh_i, G_{j+1}] - [Gh_j, G_{i+1}] = q [W_{j+1}, W_{-i}]_q - q [W_{i+1}, W_{-j}]_q")
def _(i, j):
    lhs = comm(Gh(i), G(j + 1)) - comm(Gh(j), G(i + 1))
    rhs = (comm(W(j + 1), W(-i), 1) - comm(W(i + 1), W(-j), 1)).scale(q(1))
    return lhs, rhs


@_reg2("A.13", _ALT, "[G_{i+1}, Gh_{j+1}]_q - [G_{j+1}, Gh_{i+1}]_q = q [W_{-j}, W_{i+2}] - q [W_{-i}, W_{j+2}]")
def _(i, j):
    lhs = comm(G(i + 1), Gh(j + 1), 1) - comm(G(j + 1), Gh(i + 1), 1)
    rhs = (comm(W(-j), W(i + 2)) - comm(W(-i), W(j + 2))).scale(q(1))
    return lhs, rhs


@_reg2("A.14", _ALT, "[Gh_{i+1}, G_{j+1}]_q - [Gh_{j+1}, G_{i+1}]_q = q [W_{j+1}, W_{-i-1}] - q [W_{i+1}, W_{-j-1}]")
def _(i, j):
    lhs = comm(Gh(i + 1), G(j + 1), 1) - comm(Gh(j + 1), G(i + 1), 1)
    rhs = (comm(W(j + 1), W(-i - 1)) - comm(W(i + 1), W(-j - 1))).scale(q(1))
    return lhs, rhs


# -- two doubly alternating words ------------------------------------------------

_DBL = "doubly alternating commutators"

# proposition -> (k, [(left template in i, right template in j)] * 4)
_DOUBLY_COMMUTATORS = {
    1: (0, [("(xxyy)^i", "(xxyy)^j"), ("(yyxx)^i", "(yyxx)^j"),
            ("(xxyy)^i xx", "(xxyy)^j xx"), ("(yyxx)^i yy", "(yyxx)^j yy")]),
    2: (0, [("(xxyy)^i xxy", "(xxyy)^{j+1}"), ("xyy (xxyy)^i", "(xxyy)^{j+1}"),
            ("(yyxx)^i yyx", "(yyxx)^{j+1}"), ("yxx (yyxx)^i", "(yyxx)^{j+1}")]),
    3: (0, [("(xxyy)^i x", "(xxyy)^{j+1}"), ("y (xxyy)^i", "(xxyy)^{j+1}"),
            ("(yyxx)^i y", "(yyxx)^{j+1}"), ("x (yyxx)^i", "(yyxx)^{j+1}")]),
    4: (0, [("(xxyy)^i xx", "(xxyy)^j xxy"), ("(yyxx)^i yy", "xyy (xxyy)^j"),
            ("(yyxx)^i yy", "(yyxx)^j yyx"), ("(xxyy)^i xx", "yxx (yyxx)^j")]),
    5: (1, [("(xxyy)^i x", "(xxyy)^j xxy"), ("xyy (xxyy)^i", "y (xxyy)^j"),
            ("(yyxx)^i y", "(yyxx)^j yyx"), ("yxx (yyxx)^i", "x (yyxx)^j")]),
    6: (2, [("(xxyy)^i", "(xxyy)^j xxy"), ("xyy (xxyy)^i", "(xxyy)^j"),
            ("(yyxx)^i", "(yyxx)^j yyx"), ("yxx (yyxx)^i", "(yyxx)^j")]),
    7: (2, [("(xxyy)^i x", "(xxyy)^j xx"), ("(xxyy)^i xx", "x (yyxx)^j"),
            ("(yyxx)^i y", "(yyxx)^j yy"), ("(yyxx)^i yy", "y (xxyy)^j")]),
    8: (2, [("(xxyy)^i xxy", "(xxyy)^{j+1} xx"), ("(xxyy)^{i+1} xx", "yxx (yyxx)^j"),
            ("(yyxx)^i yyx", "(yyxx)^{j+1} yy"), ("(yyxx)^{i+1} yy", "xyy (xxyy)^j")]),
    9: (2, [("(xxyy)^i", "(xxyy)^j x"), ("x (yyxx)^i", "(yyxx)^j"),
            ("(yyxx)^i", "(yyxx)^j y"), ("y (xxyy)^i", "(xxyy)^j")]),
    10: (1, [("(xxyy)^i xxy", "(xxyy)^{j+1} x"), ("x (yyxx)^{i+1}", "yxx (yyxx)^j"),
             ("(yyxx)^i yyx", "(yyxx)^{j+1} y"), ("y (xxyy)^{i+1}", "xyy (xxyy)^j")]),
    11: (0, [("(xxyy)^i xx", "(xxyy)^{j+1} x"), ("x (yyxx)^{i+1}", "xx (yyxx)^j"),
             ("(yyxx)^i yy", "(yyxx)^{j+1} y"), ("y (xxyy)^{i+1}", "yy (xxyy)^j")]),
}


def _doubly_family(fid, k, lt, rt, vanishing):
    def left(i):
        return expand_template(lt, i=i)

    def right(j):
        return expand_template(rt, j=j)

    if vanishing:
        @_reg2(fid, _DBL, f"{_bracket(lt, rt, k)} = 0")
        def _(i, j):
            return comm(left(i), right(j), k), zero()
    else:
        _symmetric(fid, _DBL, left, right, k, lt, rt)


for _prop, (_k, _pairs) in _DOUBLY_COMMUTATORS.items():
    for _pos, (_lt, _rt) in enumerate(_pairs, start=1):
        _doubly_family(f"B.{_prop}.{_pos}", _k, _lt, _rt, vanishing=_prop == 1)


# -- alternating-word forms of the convolution identities ------------------------

_ALTC = "alternating convolutions"


def _alt_pair(fid, a, b, a_text, b_text, odd_left_exp):
    e = odd_left_exp
    ql = "q^-1 " if e < 0 else "q "
    qr = "q " if e < 0 else "q^-1 "

    @_reg1(fid, _ALTC,
           f"sum_{{k=0}}^{{2n}} (-1)^k {a_text}*{b_text.format('2n-k')} = sum_{{k=0}}^{{2n}} (-1)^k {b_text.format('2n-k')}*{a_text}")
    def _(n):
        m = 2 * n
        return conv(m, a, lambda k: b(m - k)), conv(m, lambda k: b(m - k), a)

    @_reg1(fid + "a", _ALTC,
           f"{ql}sum_{{k=0}}^{{2n+1}} (-1)^k {a_text}*{b_text.format('2n+1-k')} = "
           f"{qr}sum_{{k=0}}^{{2n+1}} (-1)^k {b_text.format('2n+1-k')}*{a_text}")
    def _(n):
        m = 2 * n + 1
        return conv(m, a, lambda k: b(m - k), q(e)), conv(m, lambda k: b(m - k), a, q(-e))


_alt_pair("C.1", lambda k: W(-k), Gh, "W_{-k}", "Gh_{{{}}}", -1)
_alt_pair("C.2", lambda k: W(-k), G, "W_{-k}", "G_{{{}}}", 1)
_alt_pair("C.3", lambda k: W(k + 1), Gh, "W_{k+1}", "Gh_{{{}}}", 1)
_alt_pair("C.4", lambda k: W(k + 1), G, "W_{k+1}", "G_{{{}}}", -1)


@_reg1("C.5", _ALTC,
       "(1-q^-2) sum_{k=0}^{2n+1} (-1)^k G_k*Gh_{2n+1-k} = sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}]", _CLEARED)
def _(n):
    return conv(2 * n + 1, G, lambda k: Gh(2 * n + 1 - k), D_1Q2), _w_comm_sum(n)


@_reg1("C.5a", _ALTC,
       "sum_{k=0}^{2n} (-1)^k [W_{k-2n}, W_{k+1}] = (1-q^-2) sum_{k=0}^{2n+1} (-1)^k Gh_{2n+1-k}*G_k", _CLEARED)
def _(n):
    return _w_comm_sum(n), conv(2 * n + 1, lambda k: Gh(2 * n + 1 - k), G, D_1Q2)


@_reg1("C.6", _ALTC,
       "(q^2-1) sum_{k=0}^{2n+1} (-1)^k W_{k+1}*W_{k-2n-1} = sum_{k=0}^{2n+2} (-1)^k [G_k, Gh_{2n+2-k}]", _CLEARED)
def _(n):
    return conv(2 * n + 1, lambda k: W(k + 1), lambda k: W(k - 2 * n - 1), D_Q21), _g_comm_sum(n, 0)


@_reg1("C.6a", _ALTC,
       "sum_{k=0}^{2n+2} (-1)^k [G_k, Gh_{2n+2-k}] = (q^2-1) sum_{k=0}^{2n+1} (-1)^k W_{k-2n-1}*W_{k+1}", _CLEARED)
def _(n):
    return _g_comm_sum(n, 0), conv(2 * n + 1, lambda k: W(k - 2 * n - 1), lambda k: W(k + 1), D_Q21)


# -- generating functions (handled by the series module) --------------------------

def _register_series():
    from . import series

    for sid, ident in series.SERIES_IDENTITIES.items():
        CATALOG[sid] = RelationFamily(
            sid, 1, ident.build, ident.statement, "generating functions", kind="series", note=ident.note)


_register_series()


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def list_families() -> List[Tuple[str, int, Dict[str, object]]]:
    return [(f.id, f.arity, f.source) for f in CATALOG.values()]


def get_family(fid: str) -> RelationFamily:
    try:
        return CATALOG[fid]
    except KeyError:
        raise KeyError(f"unknown relation family {fid!r}") from None


def instantiate(fid: str, params: Sequence[int]):
    """Both sides, fully expanded.

    Plain families give two :class:`FreeElement`; generating-function
    families (parameter = truncation order) give two truncated series.
    """
    fam = get_family(fid)
    lhs, rhs = fam.build(list(params))
    if fam.kind == "series":
        return lhs, rhs
    return lhs.evaluate(), rhs.evaluate()


def _support_size(flat: Dict[int, int]) -> int:
    return len({key >> 20 for key in flat})


def verify(fid: str, params: Sequence[int]) -> VerificationReport:
    fam = get_family(fid)
    params = list(params)
    if fam.kind == "series":
        from .series import verify_series_identity

        return verify_series_identity(fid, params[0] if params else 8)
    t0 = time.perf_counter()
    lhs, rhs = fam.build(params)
    lf = _accumulate(lhs.kernel_terms())
    rf = _accumulate(rhs.kernel_terms())
    if lf == rf:
        diff = FreeElement()
    else:
        d = dict(lf)
        for key, c in rf.items():
            v = d.get(key, 0) - c
            if v:
                d[key] = v
            else:
                d.pop(key, None)
        diff = _from_flat(d)
    millis = (time.perf_counter() - t0) * 1000
    return VerificationReport(fid, params, diff, _support_size(lf), _support_size(rf), millis)


def parameter_tuples(fid: str, bound: int) -> List[List[int]]:
    fam = get_family(fid)
    if fam.kind == "series":
        return [[bound]]
    if fam.arity == 0:
        return [[]]
    if fam.arity == 1:
        return [[n] for n in range(bound + 1)]
    return [[i, s - i] for s in range(bound + 1) for i in range(s + 1)]


def _verify_args(args):
    return verify(*args)


def verify_range(fid: str, bound: int, jobs: int = 1) -> List[VerificationReport]:
    """Check every parameter tuple up to ``bound``.

    One-parameter families run ``n <= bound``; two-parameter families run
    ``i + j <= bound``; series families run once at order ``bound``.
    """
    tasks = [(fid, p) for p in parameter_tuples(fid, bound)]
    return run_tasks(tasks, jobs)


def run_tasks(tasks: List[Tuple[str, List[int]]], jobs: int = 1) -> List[VerificationReport]:
    if jobs <= 1 or len(tasks) <= 1:
        reports = [verify(fid, p) for fid, p in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_args, tasks, chunksize=1))
    reports.sort(key=lambda r: (r.id, r.params))
    return reports
