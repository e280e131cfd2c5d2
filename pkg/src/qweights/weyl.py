"""Weyl group enumeration, lengths, orbits, dominant representatives.

Elements are stored as integer matrices acting on fundamental-weight
coordinates; the alternating sums downstream need fast action on a vector,
not word structure.  Lengths are assigned as breadth-first depth from the
identity, which for a Coxeter group equals the reduced word length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import QPoly
from .root_system import RankGuardError, RootSystem, WEYL_ORDER_GUARD, Weight


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length & 1 else 1

    def act(self, w: Weight) -> Weight:
        m = self.matrix
        c = w.coords
        n = len(c)
        return Weight(tuple(
            sum(m[k][j] * c[j] for j in range(n) if c[j]) for k in range(n)
        ))


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def act(w: WeylElement, mu: Weight) -> Weight:
    return w.act(mu)


def enumerate_weyl(rs: RootSystem):
    """Yield every Weyl element exactly once, in length order (BFS)."""
    if rs.weyl_order > WEYL_ORDER_GUARD and not rs.unsafe_large_rank:
        raise RankGuardError(
            f"{rs.name}: Weyl group order {rs.weyl_order} exceeds the guard"
        )
    gens = [rs.simple_reflection_matrix(i) for i in range(rs.rank)]
    ident = _identity(rs.rank)
    seen = {ident}
    layer = [ident]
    depth = 0
    while layer:
        for m in layer:
            yield WeylElement(m, depth)
        nxt = []
        for m in layer:
            for g in gens:
                m2 = _mat_mul(g, m)
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append(m2)
        layer = nxt
        depth += 1


_weyl_cache = {}


def weyl_elements(rs: RootSystem) -> tuple:
    """Fully materialized Weyl group, cached per root system."""
    key = rs.cartan
    got = _weyl_cache.get(key)
    if got is None:
        got = tuple(enumerate_weyl(rs))
        if len(got) != rs.weyl_order:
            raise AssertionError(
                f"enumerated {len(got)} elements, expected {rs.weyl_order}"
            )
        _weyl_cache[key] = got
    return got


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by w."""
    count = 0
    for r in rs.positive_roots:
        img = w.act(rs.root_to_weight_basis(r))
        if not rs.is_positive_root_weight(img):
            count += 1
    return count


def dominant_representative(rs: RootSystem, mu: Weight):
    """(mu_plus, w) with w(mu) = mu_plus dominant.

    Repeatedly reflects at any negative coordinate; the returned element's
    length is its true inversion count.
    """
    n = rs.rank
    m = _identity(n)
    cur = mu
    a = rs.cartan
    while True:
        for i in range(n):
            if cur.coords[i] < 0:
                ci = cur.coords[i]
                cur = Weight(tuple(cur.coords[k] - a[k][i] * ci for k in range(n)))
                m = _mat_mul(rs.simple_reflection_matrix(i), m)
                break
        else:
            break
    w = WeylElement(m, 0)
    return cur, WeylElement(m, inversion_count(rs, w))


def longest_element(rs: RootSystem) -> WeylElement:
    _, w0 = dominant_representative(rs, -rs.rho)
    return w0


def stabilizer_poincare(rs: RootSystem, nu: Weight) -> QPoly:
    """Poincare polynomial t_nu(q) of the stabilizer of a dominant weight.

    The stabilizer is the parabolic subgroup generated by the simple
    reflections fixing nu; lengths restrict from the whole group, so BFS
    depth inside the subgroup is the right exponent.
    """
    if not nu.is_dominant():
        raise ValueError(f"{nu} is not dominant")
    gens = [rs.simple_reflection_matrix(i)
            for i in range(rs.rank) if nu.coords[i] == 0]
    ident = _identity(rs.rank)
    terms = {}
    seen = {ident}
    layer = [ident]
    depth = 0
    while layer:
        terms[depth] = terms.get(depth, 0) + len(layer)
        nxt = []
        for m in layer:
            for g in gens:
                m2 = _mat_mul(g, m)
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append(m2)
        layer = nxt
        depth += 1
    return QPoly(terms)


def orbit(rs: RootSystem, mu: Weight) -> frozenset:
    """Full Weyl orbit of a weight."""
    seen = {mu.coords}
    layer = [mu]
    a = rs.cartan
    n = rs.rank
    while layer:
        nxt = []
        for w in layer:
            for i in range(n):
                ci = w.coords[i]
                if ci == 0:
                    continue
                img = tuple(w.coords[k] - a[k][i] * ci for k in range(n))
                if img not in seen:
                    seen.add(img)
                    nxt.append(Weight(img))
        layer = nxt
    return frozenset(Weight(c) for c in seen)
