"""The q-shuffle product, its interleaving oracle, and q-commutators.

The word-level kernel is compiled when the ``_kernel`` extension is built and
falls back to :mod:`qshuffle._pykernel` otherwise.  Set ``QSHUFFLE_PURE=1``
to force the fallback.
"""

from __future__ import annotations

import functools
import itertools
import os
from typing import Dict, Iterable, List, Tuple, Union

from . import _pykernel
from .coeff import ONE, LaurentInt, Scalar, q_power
from .words import EMPTY, FreeElement, Letter, Word, WordLike, element

__all__ = [
    "pairing",
    "shuffle",
    "shuffle_words",
    "shuffle_oracle",
    "shuffle_left_peel",
    "shuffle_right_peel",
    "commutator_qk",
    "star_power",
    "star",
    "BACKEND",
    "ProductSum",
]

if os.environ.get("QSHUFFLE_PURE"):
    _accumulate = _pykernel.accumulate
    BACKEND = "python"
else:
    try:
        from ._kernel import accumulate as _accumulate

        BACKEND = "compiled"
    except ImportError:
        _accumulate = _pykernel.accumulate
        BACKEND = "python"

_KEY_SHIFT = _pykernel.KEY_SHIFT
_EXP_OFFSET = _pykernel.EXP_OFFSET
_EXP_MASK = _pykernel.EXP_MASK


def pairing(a: Union[Letter, int], b: Union[Letter, int]) -> int:
    """``<x,x> = <y,y> = 2``, ``<x,y> = <y,x> = -2``."""
    return 2 if int(a) == int(b) else -2


def _from_flat(flat: Dict[int, int]) -> FreeElement:
    grouped: Dict[int, Dict[int, int]] = {}
    for key, cnt in flat.items():
        code = key >> _KEY_SHIFT
        poly = grouped.get(code)
        if poly is None:
            grouped[code] = poly = {}
        poly[(key & _EXP_MASK) - _EXP_OFFSET] = cnt
    return FreeElement._raw({code: LaurentInt._raw(poly) for code, poly in grouped.items()})


class ProductSum:
    """A lazy sum ``sum c_k * (u_k * v_k)`` of q-shuffle products of words.

    A bare word ``w`` is stored as ``w * 1``.  Evaluation hands every term to
    the kernel in one call, so intermediate products are never materialized.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[LaurentInt, int, int]] = ()):
        self.terms: List[Tuple[LaurentInt, int, int]] = list(terms)

    @classmethod
    def product(cls, u: WordLike, v: WordLike = EMPTY, coeff: Scalar = 1) -> "ProductSum":
        c = LaurentInt.coerce(coeff)
        return cls([(c, _code(u), _code(v))] if c else [])

    @classmethod
    def word(cls, w: WordLike, coeff: Scalar = 1) -> "ProductSum":
        return cls.product(w, EMPTY, coeff)

    def __add__(self, other: "ProductSum") -> "ProductSum":
        return ProductSum(self.terms + other.terms)

    def __sub__(self, other: "ProductSum") -> "ProductSum":
        return self + (-other)

    def __neg__(self) -> "ProductSum":
        return ProductSum((-c, u, v) for c, u, v in self.terms)

    def scale(self, coeff: Scalar) -> "ProductSum":
        c = LaurentInt.coerce(coeff)
        return ProductSum((c * d, u, v) for d, u, v in self.terms)

    __rmul__ = scale

    def __len__(self) -> int:
        return len(self.terms)

    def kernel_terms(self) -> List[Tuple[int, int, int, int]]:
        out = []
        for c, u, v in self.terms:
            for shift, mult in c._t.items():
                out.append((u, v, shift, mult))
        return out

    def evaluate(self) -> FreeElement:
        return _from_flat(_accumulate(self.kernel_terms()))


def _code(w: Union[WordLike, int]) -> int:
    if isinstance(w, int):
        if w < 1:
            raise ValueError(f"invalid word code {w}")
        return w
    return w.code if isinstance(w, Word) else Word(w).code


def shuffle_words(u: WordLike, v: WordLike) -> FreeElement:
    return _from_flat(_accumulate([(_code(u), _code(v), 0, 1)]))


def shuffle(u: Union[FreeElement, WordLike], v: Union[FreeElement, WordLike]) -> FreeElement:
    """The q-shuffle product ``u * v``, extended bilinearly."""
    u, v = element(u), element(v)
    terms = []
    for a, ca in u._terms.items():
        for b, cb in v._terms.items():
            for shift, mult in (ca * cb)._t.items():
                terms.append((a, b, shift, mult))
    return _from_flat(_accumulate(terms))


star = shuffle


def shuffle_oracle(u: WordLike, v: WordLike) -> FreeElement:
    """Sum over all interleavings of ``u`` and ``v``.

    Each interleaving is weighted by ``q`` to the sum of ``<u_i, v_j>`` over
    the pairs where ``v_j`` is placed before ``u_i``.
    """
    ua = list(Word(u) if isinstance(u, str) else u)
    vb = list(Word(v) if isinstance(v, str) else v)
    r, s = len(ua), len(vb)
    terms: Dict[str, Dict[int, int]] = {}
    for upos in itertools.combinations(range(r + s), r):
        placed = set(upos)
        out = []
        exponent = 0
        ui = vj = 0
        for p in range(r + s):
            if p in placed:
                out.append(ua[ui])
                ui += 1
            else:
                b = vb[vj]
                exponent += sum(pairing(a, b) for a in ua[ui:])
                out.append(b)
                vj += 1
        key = "".join(str(a) for a in out) or "1"
        poly = terms.setdefault(key, {})
        poly[exponent] = poly.get(exponent, 0) + 1
    return FreeElement((w, LaurentInt(p)) for w, p in terms.items())


def shuffle_right_peel(u: WordLike, v: WordLike) -> FreeElement:
    """Word-by-word product peeling the last letters, for cross-checking.

    Follows the recursion
    ``u * v = (u * v[:-1]) v_s + (u[:-1] * v) u_r q^(<u_r, v_1> + ... + <u_r, v_s>)``.
    """
    return _right_peel(str(Word(u)) if isinstance(u, str) else str(u),
                       str(Word(v)) if isinstance(v, str) else str(v))


@functools.lru_cache(maxsize=None)
def _right_peel(u: str, v: str) -> FreeElement:
    if u == "1":
        return FreeElement.word(v)
    if v == "1":
        return FreeElement.word(u)
    a = Letter.parse(u[-1])
    weight = sum(pairing(a, Letter.parse(b)) for b in v)
    left = _append(_right_peel(u, v[:-1] or "1"), v[-1])
    right = _append(_right_peel(u[:-1] or "1", v), u[-1]).scale(q_power(weight))
    return left + right


def shuffle_left_peel(u: WordLike, v: WordLike) -> FreeElement:
    """Word-by-word product peeling the first letters, for cross-checking.

    Follows the recursion
    ``u * v = u_1 (u[1:] * v) + v_1 (u * v[1:]) q^(<v_1, u_1> + ... + <v_1, u_r>)``.
    """
    return _left_peel(str(Word(u)) if isinstance(u, str) else str(u),
                      str(Word(v)) if isinstance(v, str) else str(v))


@functools.lru_cache(maxsize=None)
def _left_peel(u: str, v: str) -> FreeElement:
    if u == "1":
        return FreeElement.word(v)
    if v == "1":
        return FreeElement.word(u)
    b = Letter.parse(v[0])
    weight = sum(pairing(b, Letter.parse(a)) for a in u)
    first = _prepend(u[0], _left_peel(u[1:] or "1", v))
    second = _prepend(v[0], _left_peel(u, v[1:] or "1")).scale(q_power(weight))
    return first + second


def _prepend(letter: str, e: FreeElement) -> FreeElement:
    return FreeElement((letter + str(w).replace("1", ""), c) for w, c in e.items())


def _append(e: FreeElement, letter: str) -> FreeElement:
    return FreeElement((str(w).replace("1", "") + letter, c) for w, c in e.items())


def commutator_qk(a: Union[FreeElement, WordLike], b: Union[FreeElement, WordLike], k: int = 0) -> FreeElement:
    """``[a, b]_{q^k} = q^k a*b - q^-k b*a``; ``k = 0`` is the plain commutator."""
    ab = shuffle(a, b)
    ba = shuffle(b, a)
    if k == 0:
        return ab - ba
    return ab.scale(q_power(k)) - ba.scale(q_power(-k))


def star_power(a: Union[FreeElement, WordLike], n: int) -> FreeElement:
    if n < 0:
        raise ValueError("power must be a natural number")
    result = FreeElement.word(EMPTY)
    a = element(a)
    for _ in range(n):
        result = shuffle(result, a)
    return result
