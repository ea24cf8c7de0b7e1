# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the search kernels in ``_pykernels``.

Masks are ``uint64``: callers route inputs with more than 64 vertices or
generators to the pure-Python versions.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from .errors import BudgetExceeded


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef class _Transversals:
    cdef uint64_t* facets
    cdef int m
    cdef list out

    def __cinit__(self, facets):
        self.m = len(facets)
        self.facets = <uint64_t*> malloc(max(self.m, 1) * sizeof(uint64_t))
        if self.facets == NULL:
            raise MemoryError()
        for i, f in enumerate(facets):
            self.facets[i] = <uint64_t> f
        self.out = []

    def __dealloc__(self):
        free(self.facets)

    cdef bint owns_all(self, uint64_t chosen):
        cdef uint64_t owned = 0, c
        cdef int i
        for i in range(self.m):
            c = self.facets[i] & chosen
            if c != 0 and (c & (c - 1)) == 0:
                owned |= c
        return owned == chosen

    cdef int rec(self, uint64_t chosen, uint64_t excluded) except -1:
        cdef uint64_t pick = 0, avail, bit
        cdef int size = 65, c, i
        cdef bint found = False
        for i in range(self.m):
            if self.facets[i] & chosen:
                continue
            avail = self.facets[i] & ~excluded
            if avail == 0:
                return 0
            c = popcount(avail)
            if c < size:
                pick = avail
                size = c
                found = True
        if not found:
            self.out.append(chosen)
            return 0
        while pick:
            bit = pick & (~pick + 1)
            pick ^= bit
            if self.owns_all(chosen | bit):
                self.rec(chosen | bit, excluded)
            excluded |= bit
        return 0


def minimal_transversals(facets):
    facets = list(dict.fromkeys(facets))
    if not facets:
        return [0]
    cdef _Transversals t = _Transversals(facets)
    t.rec(0, 0)
    return t.out


cdef class _MaxSearch:
    cdef uint64_t gens[64]
    cdef int mu
    cdef long long nodes
    cdef long long budget
    cdef int best_len
    cdef int best[64]
    cdef int cur[64]

    cdef inline bint ok(self, int h, uint64_t M):
        cdef uint64_t inv = ~M
        cdef int q
        for q in range(h):
            if (self.gens[q] & inv) == 0:
                return False
        return True

    cdef inline bint cur_less(self, int length):
        # cur holds the symbol back to front
        cdef int i, a
        for i in range(length):
            a = self.cur[length - 1 - i]
            if a != self.best[i]:
                return a < self.best[i]
        return False

    cdef int dfs(self, int length, uint64_t L, uint64_t cand_in) except -1:
        cdef uint64_t cand = 0, rest, bit, child
        cdef int h, i
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(
                f"admissible-symbol search exceeded {self.budget} nodes", self.nodes)
        if length > self.best_len or (length == self.best_len and self.cur_less(length)):
            self.best_len = length
            for i in range(length):
                self.best[i] = self.cur[length - 1 - i]
        rest = cand_in
        while rest:
            bit = rest & (~rest + 1)
            rest ^= bit
            h = __builtin_ctzll(bit)
            if self.ok(h, L | self.gens[h]):
                cand |= bit
        if length + popcount(cand) < self.best_len:
            return 0
        rest = cand
        while rest:
            h = 63 - __builtin_clzll(rest)
            rest &= ~((<uint64_t> 1) << h)
            child = cand & (((<uint64_t> 1) << h) - 1)
            if length + 1 + popcount(child) < self.best_len:
                break
            self.cur[length] = h
            self.dfs(length + 1, L | self.gens[h], child)
        return 0


def max_admissible(gens, long long budget):
    cdef _MaxSearch s = _MaxSearch()
    cdef int last
    cdef uint64_t cand_in
    s.mu = len(gens)
    if s.mu > 64:
        raise ValueError("compiled kernel handles at most 64 generators")
    if s.mu == 0:
        return 0, (), 0
    for i, g in enumerate(gens):
        s.gens[i] = <uint64_t> g
    s.nodes = 0
    s.budget = budget
    s.best_len = 0
    for last in range(s.mu - 1, -1, -1):
        if last + 1 < s.best_len:
            break
        cand_in = (((<uint64_t> 1) << last) - 1) if s.ok(last, s.gens[last]) else 0
        s.cur[0] = last
        s.dfs(1, s.gens[last], cand_in)
    return s.best_len, tuple(s.best[i] for i in range(s.best_len)), s.nodes
