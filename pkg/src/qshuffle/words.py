"""Words over ``{x, y}``, linear combinations of words, and word families.

A word is packed into a single integer: a leading sentinel ``1`` bit followed
by one bit per letter (``x = 0``, ``y = 1``), first letter most significant.
The trivial word is ``1``.  The length is ``code.bit_length() - 1``.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .coeff import ONE, LaurentInt, Scalar, q_int

__all__ = [
    "Letter",
    "Word",
    "FreeElement",
    "WordClass",
    "EMPTY",
    "X",
    "Y",
    "free_mul",
    "bilinear_form",
    "truncate",
    "alternating",
    "alternating_w",
    "doubly_alternating",
    "DOUBLY_FAMILIES",
    "ALTERNATING_FAMILIES",
    "FORBIDDEN_SEGMENTS",
    "classify",
    "span_J_degree",
    "in_U_by_orthogonality",
    "all_words",
]


class Letter(enum.IntEnum):
    X = 0
    Y = 1

    def __str__(self) -> str:
        return "xy"[self]

    @classmethod
    def parse(cls, text: str) -> "Letter":
        try:
            return cls("xy".index(text))
        except ValueError:
            raise ValueError(f"not a letter: {text!r}") from None


def code_length(code: int) -> int:
    return code.bit_length() - 1


def code_concat(a: int, b: int) -> int:
    n = b.bit_length() - 1
    return (a << n) | (b ^ (1 << n))


def code_str(code: int) -> str:
    n = code.bit_length() - 1
    if n == 0:
        return "1"
    return format(code ^ (1 << n), f"0{n}b").translate(_BITS_TO_LETTERS)


_BITS_TO_LETTERS = str.maketrans("01", "xy")
_LETTERS_TO_BITS = str.maketrans("xy", "01")


def code_from_str(text: str) -> int:
    if text == "1" or text == "":
        return 1
    if text.strip("xy"):
        raise ValueError(f"not a word: {text!r}")
    return int("1" + text.translate(_LETTERS_TO_BITS), 2)


class Word:
    """An immutable word; ``Word("xxy")``, ``Word("1")`` for the trivial word."""

    __slots__ = ("code",)

    def __init__(self, letters: Union[str, Iterable[Letter], "Word"] = ""):
        if isinstance(letters, Word):
            self.code = letters.code
        elif isinstance(letters, str):
            self.code = code_from_str(letters)
        else:
            code = 1
            for a in letters:
                code = (code << 1) | int(a)
            self.code = code

    @classmethod
    def from_code(cls, code: int) -> "Word":
        if code < 1:
            raise ValueError("word codes are positive")
        w = cls.__new__(cls)
        w.code = code
        return w

    def __len__(self) -> int:
        return self.code.bit_length() - 1

    def __iter__(self) -> Iterator[Letter]:
        n = len(self)
        for i in range(n - 1, -1, -1):
            yield Letter((self.code >> i) & 1)

    def __getitem__(self, i: int) -> Letter:
        n = len(self)
        if i < 0:
            i += n
        if not 0 <= i < n:
            raise IndexError(i)
        return Letter((self.code >> (n - 1 - i)) & 1)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word.from_code(code_concat(self.code, other.code))

    def __pow__(self, n: int) -> "Word":
        code = 1
        for _ in range(n):
            code = code_concat(code, self.code)
        return Word.from_code(code)

    def count(self, letter: Letter) -> int:
        n = len(self)
        ys = bin(self.code ^ (1 << n)).count("1")
        return ys if letter == Letter.Y else n - ys

    def bidegree(self) -> Tuple[int, int]:
        n = len(self)
        ys = bin(self.code ^ (1 << n)).count("1")
        return n - ys, ys

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self.code == other.code
        if isinstance(other, str):
            return str(self) == other or (other == "" and self.code == 1)
        return NotImplemented

    def __lt__(self, other: "Word") -> bool:
        return _word_key(self.code) < _word_key(other.code)

    def __hash__(self) -> int:
        return hash(self.code)

    def __str__(self) -> str:
        return code_str(self.code)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def _word_key(code: int) -> Tuple[int, int]:
    return (code.bit_length(), code)


EMPTY = Word("")
X = Word("x")
Y = Word("y")


def all_words(length: int) -> Iterator[Word]:
    base = 1 << length
    for bits in range(base):
        yield Word.from_code(base | bits)


# ---------------------------------------------------------------------------
# free algebra elements
# ---------------------------------------------------------------------------


WordLike = Union[Word, str]


def _as_code(w: WordLike) -> int:
    if isinstance(w, Word):
        return w.code
    return code_from_str(w)


class FreeElement:
    """A finite linear combination of words with Laurent-polynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[WordLike, Scalar], Iterable[Tuple[WordLike, Scalar]], None] = None):
        acc: Dict[int, LaurentInt] = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in pairs:
                code = _as_code(w)
                c = LaurentInt.coerce(c)
                if code in acc:
                    c = acc[code] + c
                if c:
                    acc[code] = c
                else:
                    acc.pop(code, None)
        self._terms = acc

    @classmethod
    def _raw(cls, terms: Dict[int, LaurentInt]) -> "FreeElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def word(cls, w: WordLike, coeff: Scalar = 1) -> "FreeElement":
        c = LaurentInt.coerce(coeff)
        return cls._raw({_as_code(w): c} if c else {})

    @classmethod
    def scalar(cls, coeff: Scalar) -> "FreeElement":
        return cls.word(EMPTY, coeff)

    @classmethod
    def parse(cls, text: str) -> "FreeElement":
        from .grammar import parse_element

        return parse_element(text)

    # -- queries ---------------------------------------------------------------

    def items(self) -> Iterator[Tuple[Word, LaurentInt]]:
        """Yield ``(word, coeff)`` sorted by length, then lexicographically."""
        for code in sorted(self._terms, key=_word_key):
            yield Word.from_code(code), self._terms[code]

    def support(self) -> List[Word]:
        return [w for w, _ in self.items()]

    def coefficient(self, w: WordLike) -> LaurentInt:
        return self._terms.get(_as_code(w), LaurentInt._raw({}))

    def constant_term(self) -> LaurentInt:
        return self.coefficient(EMPTY)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def bidegrees(self) -> set:
        return {Word.from_code(c).bidegree() for c in self._terms}

    def is_homogeneous(self, bidegree: Optional[Tuple[int, int]] = None) -> bool:
        degs = self.bidegrees()
        if bidegree is None:
            return len(degs) <= 1
        return degs <= {tuple(bidegree)}

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "FreeElement") -> "FreeElement":
        if not isinstance(other, FreeElement):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        t = dict(self._terms)
        for code, c in other._terms.items():
            if code in t:
                s = t[code] + c
                if s:
                    t[code] = s
                else:
                    del t[code]
            else:
                t[code] = c
        return FreeElement._raw(t)

    def __neg__(self) -> "FreeElement":
        return FreeElement._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "FreeElement":
        c = LaurentInt.coerce(c)
        if not c:
            return FreeElement()
        if c == ONE:
            return self
        return FreeElement._raw({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other):
        # scalar multiplication, or concatenation with another element
        if isinstance(other, FreeElement):
            return free_mul(self, other)
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FreeElement):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- text ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for w, c in self.items():
            ws = str(w)
            negative = (len(c) == 1 and next(iter(c._t.values())) < 0) or (
                len(c) > 1 and all(v < 0 for v in c._t.values())
            )
            mag = -c if negative else c
            if mag == ONE:
                body = ws
            elif mag.is_monomial():
                body = f"{mag}*{ws}"
            else:
                body = f"({mag})*{ws}"
            if not out:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"FreeElement({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"word": str(w), "coeff": str(c)} for w, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "FreeElement":
        return cls((t["word"], LaurentInt.parse(t["coeff"])) for t in data["terms"])


def element(x: Union[FreeElement, WordLike]) -> FreeElement:
    if isinstance(x, FreeElement):
        return x
    return FreeElement.word(x)


def free_mul(u: Union[FreeElement, WordLike], v: Union[FreeElement, WordLike]) -> FreeElement:
    """Concatenation product, extended bilinearly."""
    u, v = element(u), element(v)
    acc: Dict[int, LaurentInt] = {}
    for a, ca in u._terms.items():
        for b, cb in v._terms.items():
            code = code_concat(a, b)
            c = ca * cb
            if code in acc:
                c = acc[code] + c
            if c:
                acc[code] = c
            else:
                acc.pop(code, None)
    return FreeElement._raw(acc)


def bilinear_form(u: Union[FreeElement, WordLike], v: Union[FreeElement, WordLike]) -> LaurentInt:
    """The form making the words orthonormal."""
    u, v = element(u), element(v)
    if len(u._terms) > len(v._terms):
        u, v = v, u
    total = LaurentInt()
    for code, c in u._terms.items():
        d = v._terms.get(code)
        if d is not None:
            total = total + c * d
    return total


def truncate(side: str, letter: Union[Letter, str], v: Union[FreeElement, WordLike]) -> FreeElement:
    """Strip ``letter`` from the left or right end of every word of ``v``.

    Words not ending (resp. starting) with ``letter``, and the trivial word,
    are sent to zero.
    """
    if isinstance(letter, str):
        letter = Letter.parse(letter)
    v = element(v)
    bit = int(letter)
    out: Dict[int, LaurentInt] = {}
    if side == "right":
        for code, c in v._terms.items():
            if code > 1 and (code & 1) == bit:
                out[code >> 1] = c
    elif side == "left":
        for code, c in v._terms.items():
            n = code.bit_length() - 1
            if n and ((code >> (n - 1)) & 1) == bit:
                out[(code & ((1 << (n - 1)) - 1)) | (1 << (n - 1))] = c
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return FreeElement._raw(out)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

ALTERNATING_FAMILIES = ("Gh", "G", "W-", "W+")

_ALT_ALIASES = {
    "Gh": "Gh", "Ĝ": "Gh", "tG": "Gh", "G_hat": "Gh",
    "G": "G",
    "W-": "W-", "W−": "W-", "Wm": "W-",
    "W+": "W+", "Wp": "W+",
}


def _alt_family(name: str) -> str:
    try:
        return _ALT_ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown alternating family {name!r}") from None


def alternating(family: str, n: int) -> Word:
    """``Gh n -> (xy)^n``, ``G n -> (yx)^n``, ``W- n -> (xy)^n x``, ``W+ n -> (yx)^(n-1) y``."""
    fam = _alt_family(family)
    if n < 0:
        raise ValueError("index must be a natural number")
    if fam == "Gh":
        return Word("xy" * n)
    if fam == "G":
        return Word("yx" * n)
    if fam == "W-":
        return Word("xy" * n + "x")
    if n == 0:
        raise ValueError("W+ index starts at 1; W_0 = x belongs to the W- family")
    return Word("yx" * (n - 1) + "y")


def alternating_w(k: int) -> Word:
    """``W_k`` for any integer ``k``: ``(xy)^(-k) x`` if ``k <= 0``, else ``(yx)^(k-1) y``."""
    if k <= 0:
        return Word("xy" * (-k) + "x")
    return Word("yx" * (k - 1) + "y")


# family id -> (prefix, repeated block, suffix); pow families are indexed by
# the number of blocks, the rest by n in prefix + block^n + suffix
DOUBLY_FAMILIES: Dict[str, Tuple[str, str, str]] = {
    "XXYY_pow": ("", "xxyy", ""),
    "YYXX_pow": ("", "yyxx", ""),
    "XXYY_xx": ("", "xxyy", "xx"),
    "YYXX_yy": ("", "yyxx", "yy"),
    "xyy_XXYY": ("xyy", "xxyy", ""),
    "yxx_YYXX": ("yxx", "yyxx", ""),
    "x_YYXX": ("x", "yyxx", ""),
    "y_XXYY": ("y", "xxyy", ""),
    "XXYY_xxy": ("", "xxyy", "xxy"),
    "YYXX_yyx": ("", "yyxx", "yyx"),
    "XXYY_x": ("", "xxyy", "x"),
    "YYXX_y": ("", "yyxx", "y"),
    "x_YYXX_y": ("x", "yyxx", "y"),
    "y_XXYY_x": ("y", "xxyy", "x"),
    "xyy_XXYY_x": ("xyy", "xxyy", "x"),
    "yxx_YYXX_y": ("yxx", "yyxx", "y"),
}


def doubly_alternating(family: str, n: int) -> Word:
    try:
        prefix, block, suffix = DOUBLY_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown doubly alternating family {family!r}") from None
    if n < 0:
        raise ValueError("index must be a natural number")
    return Word(prefix + block * n + suffix)


FORBIDDEN_SEGMENTS = ("xxxy", "xxyx", "xyxx", "yxxx", "yyyx", "yyxy", "yxyy", "xyyy")

_KINDS = ("Trivial", "PowerX", "PowerY", "Alternating", "DoublyAlternating", "NotInU")


@dataclass(frozen=True)
class WordClass:
    kind: str
    family: Optional[str] = None
    n: Optional[int] = None
    offset: Optional[int] = None
    segment: Optional[str] = None

    @property
    def in_U(self) -> bool:
        return self.kind != "NotInU"

    def reconstruct(self) -> Word:
        if self.kind == "Trivial":
            return EMPTY
        if self.kind == "PowerX":
            return Word("x" * self.n)
        if self.kind == "PowerY":
            return Word("y" * self.n)
        if self.kind == "Alternating":
            return alternating(self.family, self.n)
        if self.kind == "DoublyAlternating":
            return doubly_alternating(self.family, self.n)
        raise ValueError("a word outside U has no family description")

    def label(self) -> str:
        if self.kind == "Trivial":
            return "trivial"
        if self.kind == "PowerX":
            return f"power x^{self.n}"
        if self.kind == "PowerY":
            return f"power y^{self.n}"
        if self.kind == "Alternating":
            return "alternating " + _alt_label(self.family, self.n)
        if self.kind == "DoublyAlternating":
            return f"doubly-alternating {self.family} n={self.n}"
        return f"not-in-U segment {self.segment} at {self.offset}"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "label": self.label()}
        for key in ("family", "n", "offset", "segment"):
            val = getattr(self, key)
            if val is not None:
                d[key] = val
        return d


def _alt_label(family: str, n: int) -> str:
    if family == "Gh":
        return f"Gh_{n}"
    if family == "G":
        return f"G_{n}"
    if family == "W-":
        return f"W_{-n}" if n else "W_0"
    return f"W_{n}"


def _build_doubly_table() -> Dict[Tuple[str, str, int], List[str]]:
    # (first two letters, last two letters, length mod 4) -> candidate families
    table: Dict[Tuple[str, str, int], List[str]] = {}
    for fam in DOUBLY_FAMILIES:
        for n in range(3):
            s = str(doubly_alternating(fam, n))
            if len(s) < 4:
                continue
            key = (s[:2], s[-2:], len(s) % 4)
            if fam not in table.setdefault(key, []):
                table[key].append(fam)
    return table


_DOUBLY_TABLE = _build_doubly_table()


def _doubly_match(s: str) -> Optional[Tuple[str, int]]:
    L = len(s)
    if L >= 4:
        candidates = _DOUBLY_TABLE.get((s[:2], s[-2:], L % 4), ())
    else:
        candidates = DOUBLY_FAMILIES
    for fam in candidates:
        prefix, block, suffix = DOUBLY_FAMILIES[fam]
        rest = L - len(prefix) - len(suffix)
        if rest < 0 or rest % 4:
            continue
        n = rest // 4
        if prefix + block * n + suffix == s:
            return fam, n
    return None


def _alternating_match(s: str) -> Optional[Tuple[str, int]]:
    L = len(s)
    if any(s[i] == s[i + 1] for i in range(L - 1)):
        return None
    if s[0] == "x":
        return ("Gh", L // 2) if L % 2 == 0 else ("W-", L // 2)
    return ("G", L // 2) if L % 2 == 0 else ("W+", L // 2 + 1)


def classify(w: Union[Word, str]) -> WordClass:
    """Decide whether a word lies in U and name its family.

    Overlapping short words get the first matching description in the order
    trivial, letter power, alternating, doubly alternating.
    """
    s = str(Word(w)) if isinstance(w, str) else str(w)
    if s == "1":
        return WordClass("Trivial")
    for i in range(len(s) - 3):
        seg = s[i:i + 4]
        if seg in FORBIDDEN_SEGMENTS:
            return WordClass("NotInU", offset=i, segment=seg)
    if "y" not in s:
        return WordClass("PowerX", n=len(s))
    if "x" not in s:
        return WordClass("PowerY", n=len(s))
    alt = _alternating_match(s)
    if alt is not None:
        return WordClass("Alternating", family=alt[0], n=alt[1])
    dbl = _doubly_match(s)
    if dbl is not None:
        return WordClass("DoublyAlternating", family=dbl[0], n=dbl[1])
    raise AssertionError(f"word {s} avoids every forbidden segment but matches no family")


# ---------------------------------------------------------------------------
# the Serre ideal and the orthogonality oracle
# ---------------------------------------------------------------------------


def serre_generators() -> Tuple[FreeElement, FreeElement]:
    t3 = q_int(3)
    g1 = FreeElement([("xxxy", 1), ("xxyx", -t3), ("xyxx", t3), ("yxxx", -1)])
    g2 = FreeElement([("yyyx", 1), ("yyxy", -t3), ("yxyy", t3), ("xyyy", -1)])
    return g1, g2


@functools.lru_cache(maxsize=None)
def _span_J(d: int) -> Tuple[FreeElement, ...]:
    if d < 4:
        return ()
    gens = serre_generators()
    out = []
    pad = d - 4
    for i in range(pad + 1):
        for a in all_words(i):
            for b in all_words(pad - i):
                for g in gens:
                    out.append(free_mul(free_mul(a, g), b))
    return tuple(out)


def span_J_degree(d: int) -> List[FreeElement]:
    """Spanning set ``{a g b}`` of the degree-``d`` part of the Serre ideal."""
    return list(_span_J(d))


@functools.lru_cache(maxsize=None)
def _J_support(d: int) -> frozenset:
    # words w with (w, s) != 0 for some spanning element s
    hit = set()
    for s in _span_J(d):
        hit.update(s._terms)
    return frozenset(hit)


def in_U_by_orthogonality(w: Union[Word, str]) -> bool:
    """True iff the word is orthogonal to every spanning element of the ideal."""
    word = Word(w) if isinstance(w, str) else w
    d = len(word)
    if d < 4:
        return True
    if word.code not in _J_support(d):
        return True
    ew = FreeElement.word(word)
    return all(not bilinear_form(ew, s) for s in _span_J(d))
