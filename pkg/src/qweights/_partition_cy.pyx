# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for the q-weighted vector partition count.

Same layered recursion as the pure twin (see _partition_py): the two must
stay behaviorally identical, byte for byte on output.  Coefficients remain
arbitrary-precision Python ints; Cython only tightens the bookkeeping around
them (typed indices, C-level loops, fast memo probes).
"""


cdef class PartitionEngine:
    cdef list roots
    cdef dict memo
    cdef public long hits
    cdef Py_ssize_t nroots, rank

    def __init__(self, roots):
        self.roots = [tuple(int(x) for x in r) for r in roots]
        self.memo = {}
        self.hits = 0
        self.nroots = len(self.roots)
        self.rank = len(self.roots[0]) if self.roots else 0

    def compute(self, mu):
        cdef tuple m = tuple(int(x) for x in mu)
        cdef Py_ssize_t i
        cdef list coeffs
        cdef dict out = {}
        for i in range(len(m)):
            if m[i] < 0:
                return {}
        coeffs = self._f(self.nroots, m)
        for i in range(len(coeffs)):
            if coeffs[i]:
                out[i] = coeffs[i]
        return out

    def stats(self):
        return (len(self.memo), self.hits)

    cdef list _f(self, Py_ssize_t k, tuple mu):
        cdef Py_ssize_t i, j, e, need
        cdef bint nz = False
        cdef tuple key, gamma, cur
        cdef list out, sub, nxt
        cdef object got, v

        for i in range(self.rank):
            if mu[i]:
                nz = True
                break
        if not nz:
            return [1]
        if k == 0:
            return []
        key = (k, mu)
        got = self.memo.get(key)
        if got is not None:
            self.hits += 1
            return <list> got
        gamma = <tuple> self.roots[k - 1]
        out = []
        cur = mu
        j = 0
        while True:
            sub = self._f(k - 1, cur)
            if sub:
                need = j + len(sub)
                while len(out) < need:
                    out.append(0)
                for e in range(len(sub)):
                    if sub[e]:
                        out[e + j] = out[e + j] + sub[e]
            nxt = []
            for i in range(self.rank):
                v = cur[i] - gamma[i]
                if v < 0:
                    nxt = None
                    break
                nxt.append(v)
            if nxt is None:
                break
            cur = tuple(nxt)
            j += 1
        self.memo[key] = out
        return out
