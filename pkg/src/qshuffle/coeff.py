"""Exact Laurent polynomials in ``q`` with integer coefficients.

A :class:`LaurentInt` is an immutable sparse map ``exponent -> coefficient``
with no zero coefficients stored, so equality is structural.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Tuple, Union

__all__ = [
    "LaurentInt",
    "ZERO",
    "ONE",
    "q_power",
    "q_int",
    "add",
    "mul",
    "neg",
    "eval_at_one",
]

Scalar = Union["LaurentInt", int]


class LaurentInt:
    """An element of ``Z[q, q^-1]``."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            t = {}
        elif isinstance(terms, int):
            t = {0: terms} if terms else {}
        else:
            t = {int(e): int(c) for e, c in terms.items() if c}
        self._t: Dict[int, int] = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, int]) -> "LaurentInt":
        # caller guarantees: no zero values, dict not shared
        obj = cls.__new__(cls)
        obj._t = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentInt":
        if isinstance(value, LaurentInt):
            return value
        if isinstance(value, int):
            return cls(value)
        raise TypeError(f"cannot use {type(value).__name__} as a Laurent polynomial")

    # -- queries ---------------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._t)

    def items(self) -> Iterator[Tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` in decreasing exponent order."""
        for e in sorted(self._t, reverse=True):
            yield e, self._t[e]

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def degree_range(self) -> Tuple[int, int]:
        if not self._t:
            raise ValueError("zero polynomial has no degree")
        return min(self._t), max(self._t)

    def coefficient(self, exponent: int) -> int:
        return self._t.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            other = LaurentInt(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentInt._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "LaurentInt":
        return LaurentInt._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            other = LaurentInt(other)
        elif not isinstance(other, LaurentInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentInt":
        return LaurentInt.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentInt":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentInt._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentInt):
            return NotImplemented
        t: Dict[int, int] = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentInt._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentInt":
        if n < 0:
            if len(self._t) == 1:
                ((e, c),) = self._t.items()
                if c in (1, -1):
                    return LaurentInt._raw({-e * -n: c ** -n})
            raise ValueError("only unit monomials are invertible")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentInt":
        """Multiply by ``q^k``."""
        return LaurentInt._raw({e + k: c for e, c in self._t.items()})

    def at_one(self) -> int:
        return sum(self._t.values())

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentInt):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- text ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        items = list(self.items())
        if len(items) > 1 and all(c < 0 for _, c in items):
            return "-(" + str(-self) + ")"
        parts = []
        for idx, (e, c) in enumerate(items):
            body = _monomial(e, abs(c))
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentInt({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentInt":
        from .grammar import parse_laurent

        return parse_laurent(text)


def _monomial(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    var = "q" if e == 1 else f"q^{e}"
    return var if c == 1 else f"{c}*{var}"


ZERO = LaurentInt()
ONE = LaurentInt(1)


def q_power(k: int) -> LaurentInt:
    return LaurentInt._raw({k: 1})


def q_int(n: int) -> LaurentInt:
    """The q-integer ``[n]_q = (q^n - q^-n) / (q - q^-1)``."""
    if n < 0:
        return -q_int(-n)
    return LaurentInt._raw({e: 1 for e in range(n - 1, -n, -2)})


def add(a: Scalar, b: Scalar) -> LaurentInt:
    return LaurentInt.coerce(a) + LaurentInt.coerce(b)


def mul(a: Scalar, b: Scalar) -> LaurentInt:
    return LaurentInt.coerce(a) * LaurentInt.coerce(b)


def neg(a: Scalar) -> LaurentInt:
    return -LaurentInt.coerce(a)


def eval_at_one(a: Scalar) -> int:
    return LaurentInt.coerce(a).at_one()
