"""Pure-Python word-level q-shuffle kernel.

Both kernels expose ``accumulate(terms)``.  Each term is a tuple
``(u, v, shift, mult)`` of two packed word codes, a power of ``q`` and an
integer multiplier; the result is the sum of ``mult * q^shift * (u * v)``
as a flat map ``key -> count`` with ``key = code << KEY_SHIFT | exp + EXP_OFFSET``.
Zero entries are dropped.

The product of two words is accumulated over the lattice of partially
consumed inputs.  State ``(i, j)`` holds every prefix built from ``u[:i]``
and ``v[:j]`` with its exponent.  Placing ``v[j]`` while ``u[i:]`` is still
pending costs ``sum_a <u[a], v[j]>`` over ``a >= i``; letters of ``u`` cost
nothing.
"""

from typing import Dict, Iterable, List, Tuple

KEY_SHIFT = 20
EXP_OFFSET = 1 << (KEY_SHIFT - 1)
EXP_MASK = (1 << KEY_SHIFT) - 1

Term = Tuple[int, int, int, int]


def _letters(code: int) -> List[int]:
    n = code.bit_length() - 1
    return [(code >> (n - 1 - i)) & 1 for i in range(n)]


def _pending_costs(ua: List[int], vb: List[int]) -> List[List[int]]:
    r = len(ua)
    cost = [[0] * len(vb) for _ in range(r + 1)]
    for j, b in enumerate(vb):
        acc = 0
        for i in range(r - 1, -1, -1):
            acc += 2 if ua[i] == b else -2
            cost[i][j] = acc
    return cost


def _extend(state: Dict[int, int], letter: int, delta: int) -> Dict[int, int]:
    # append a letter to every prefix; (key << 1) - exp keeps the exponent field in place
    inc = (letter << KEY_SHIFT) + delta
    return {(key << 1) - (key & EXP_MASK) + inc: cnt for key, cnt in state.items()}


def word_product(u: int, v: int) -> Dict[int, int]:
    """``u * v`` for two word codes, as a flat ``key -> count`` map."""
    ua, vb = _letters(u), _letters(v)
    r, s = len(ua), len(vb)
    if r == 0 or s == 0:
        return {((v if r == 0 else u) << KEY_SHIFT) | EXP_OFFSET: 1}
    cost = _pending_costs(ua, vb)
    row: List[Dict[int, int]] = [{} for _ in range(s + 1)]
    row[0] = {(1 << KEY_SHIFT) | EXP_OFFSET: 1}
    for j in range(1, s + 1):
        row[j] = _extend(row[j - 1], vb[j - 1], cost[0][j - 1])
    for i in range(1, r + 1):
        a = ua[i - 1]
        new = _extend(row[0], a, 0)
        row[0] = new
        ci = cost[i]
        for j in range(1, s + 1):
            down = _extend(row[j], a, 0)
            for key, cnt in _extend(new, vb[j - 1], ci[j - 1]).items():
                down[key] = down.get(key, 0) + cnt
            row[j] = new = down
    return row[s]


def accumulate(terms: Iterable[Term]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    get = out.get
    for u, v, shift, mult in terms:
        if not mult:
            continue
        for key, cnt in word_product(u, v).items():
            k = key + shift
            out[k] = get(k, 0) + cnt * mult
    return {k: c for k, c in out.items() if c}
