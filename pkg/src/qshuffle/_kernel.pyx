# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled q-shuffle kernel; same ``accumulate`` contract as ``_pykernel``.

Output words are enumerated depth first, one letter at a time.  The frontier
at depth ``d`` holds, for each split ``i + j = d`` of consumed input letters,
the polynomial in ``q`` (halved exponents, dense) of all ways to build the
current prefix.  Each distinct prefix is visited once and no hashing happens
before the leaves.

Calls that could overflow 64-bit keys or counts go to the Python kernel.
"""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc
from math import comb

from . import _pykernel

DEF KEY_SHIFT = 20
DEF EXP_OFFSET = 1 << 19
DEF MAX_LETTERS = 63 - KEY_SHIFT - 1

ctypedef unordered_map[uint64_t, int64_t] Acc


cdef class _Walker:
    cdef int r, s, L, rs, W, P
    cdef vector[int] ua, vb, cost
    cdef vector[char] act
    cdef vector[int] lo, hi
    cdef vector[int64_t] buf
    cdef int64_t shift, mult
    cdef Acc* acc

    def __cinit__(self, uint64_t u, uint64_t v, int r, int s):
        cdef int i, j, a
        self.r = r
        self.s = s
        self.L = r + s
        self.rs = r * s
        self.W = 2 * r * s + 1
        self.P = r + 1
        self.ua.resize(r)
        self.vb.resize(s)
        for i in range(r):
            self.ua[i] = (u >> (r - 1 - i)) & 1
        for j in range(s):
            self.vb[j] = (v >> (s - 1 - j)) & 1
        # cost[i * s + j]: halved exponent for v[j] placed while u[i:] is pending
        self.cost.resize((r + 1) * s, 0)
        for j in range(s):
            a = 0
            for i in range(r - 1, -1, -1):
                a += 1 if self.ua[i] == self.vb[j] else -1
                self.cost[i * s + j] = a
        self.act.resize((self.L + 1) * self.P, 0)
        self.lo.resize((self.L + 1) * self.P, 0)
        self.hi.resize((self.L + 1) * self.P, 0)
        self.buf.resize(<size_t>(self.L + 1) * self.P * self.W, 0)

    cdef void run(self, Acc* acc, int64_t shift, int64_t mult):
        self.acc = acc
        self.shift = shift
        self.mult = mult
        cdef int root = 0
        self.act[root] = 1
        self.lo[root] = self.rs
        self.hi[root] = self.rs
        self.buf[self.rs] = 1
        self._dfs(0, 1)

    cdef void _dfs(self, int d, uint64_t prefix):
        cdef int c, i, j, lo, hi, e, sh, ci, pa, pb
        cdef int r = self.r, s = self.s, W = self.W, P = self.P
        cdef bint any_active, has_a, has_b
        cdef int64_t* child
        cdef int64_t* src
        cdef uint64_t key, base
        cdef int64_t cnt
        if d == self.L:
            ci = d * P + r
            base = prefix << KEY_SHIFT
            src = &self.buf[<size_t>ci * W]
            for e in range(self.lo[ci], self.hi[ci] + 1):
                cnt = src[e]
                if cnt:
                    key = base + <uint64_t>(2 * (e - self.rs) + EXP_OFFSET + self.shift)
                    self.acc[0][key] += cnt * self.mult
            return
        for c in range(2):
            any_active = False
            for i in range(max(0, d + 1 - s), min(d + 1, r) + 1):
                j = d + 1 - i
                ci = (d + 1) * P + i
                pa = d * P + i - 1
                pb = d * P + i
                has_a = i >= 1 and j <= s and self.act[pa] and self.ua[i - 1] == c
                has_b = j >= 1 and i <= d and self.act[pb] and self.vb[j - 1] == c
                if not (has_a or has_b):
                    self.act[ci] = 0
                    continue
                sh = self.cost[i * s + j - 1] if has_b else 0
                if has_a and has_b:
                    lo = min(self.lo[pa], self.lo[pb] + sh)
                    hi = max(self.hi[pa], self.hi[pb] + sh)
                elif has_a:
                    lo = self.lo[pa]
                    hi = self.hi[pa]
                else:
                    lo = self.lo[pb] + sh
                    hi = self.hi[pb] + sh
                child = &self.buf[<size_t>ci * W]
                for e in range(lo, hi + 1):
                    child[e] = 0
                if has_a:
                    src = &self.buf[<size_t>pa * W]
                    for e in range(self.lo[pa], self.hi[pa] + 1):
                        child[e] += src[e]
                if has_b:
                    src = &self.buf[<size_t>pb * W]
                    for e in range(self.lo[pb], self.hi[pb] + 1):
                        child[e + sh] += src[e]
                self.act[ci] = 1
                self.lo[ci] = lo
                self.hi[ci] = hi
                any_active = True
            if any_active:
                self._dfs(d + 1, (prefix << 1) | <uint64_t>c)


def accumulate(terms):
    terms = list(terms)
    bound = 0
    for u, v, shift, mult in terms:
        r = u.bit_length() - 1
        s = v.bit_length() - 1
        if r + s > MAX_LETTERS or abs(shift) > 1 << 16:
            return _pykernel.accumulate(terms)
        bound += comb(r + s, r) * abs(mult)
    if bound >= 1 << 62:
        return _pykernel.accumulate(terms)

    cdef Acc acc
    cdef _Walker walker
    cdef uint64_t uc, vc
    cdef int64_t cnt
    walkers = {}
    for u, v, shift, mult in terms:
        if not mult:
            continue
        r = u.bit_length() - 1
        s = v.bit_length() - 1
        if r == 0 or s == 0:
            uc = v if r == 0 else u
            acc[(uc << KEY_SHIFT) + <uint64_t>(EXP_OFFSET + shift)] += <int64_t>mult
            continue
        walker = walkers.get((u, v))
        if walker is None:
            walker = _Walker(u, v, r, s)
            walkers[(u, v)] = walker
        walker.run(&acc, shift, mult)

    out = {}
    cdef Acc.iterator it = acc.begin()
    while it != acc.end():
        cnt = deref(it).second
        if cnt:
            out[deref(it).first] = cnt
        inc(it)
    return out
