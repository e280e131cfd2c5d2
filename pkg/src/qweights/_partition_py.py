"""Pure-Python kernel for the q-weighted vector partition count.

Layered recursion over an ordered root list gamma_1..gamma_N:

    f(k, mu) = sum_{j>=0} q^j * f(k-1, mu - j*gamma_k),   f(0, 0) = 1,

memoized on (k, mu).  The engine stores the roots ascending by height and
peels from the end, so the tallest root is consumed first; few multiples of
a tall root fit under mu, which keeps the branching shallow.

Polynomials travel internally as dense coefficient lists (index = exponent);
the public ``compute`` returns a sparse {exponent: coefficient} dict.
"""

from __future__ import annotations


class PartitionEngine:
    __slots__ = ("roots", "memo", "hits")

    def __init__(self, roots):
        self.roots = [tuple(int(x) for x in r) for r in roots]
        self.memo = {}
        self.hits = 0

    def compute(self, mu) -> dict:
        mu = tuple(int(x) for x in mu)
        if any(c < 0 for c in mu):
            return {}
        coeffs = self._f(len(self.roots), mu)
        return {e: c for e, c in enumerate(coeffs) if c}

    def stats(self):
        return (len(self.memo), self.hits)

    def _f(self, k, mu):
        if not any(mu):
            return [1]
        if k == 0:
            return []
        key = (k, mu)
        got = self.memo.get(key)
        if got is not None:
            self.hits += 1
            return got
        gamma = self.roots[k - 1]
        out = []
        j = 0
        cur = mu
        while True:
            sub = self._f(k - 1, cur)
            if sub:
                need = j + len(sub)
                if len(out) < need:
                    out.extend([0] * (need - len(out)))
                for e, c in enumerate(sub):
                    if c:
                        out[e + j] += c
            nxt = tuple(a - b for a, b in zip(cur, gamma))
            if any(c < 0 for c in nxt):
                break
            cur = nxt
            j += 1
        self.memo[key] = out
        return out
