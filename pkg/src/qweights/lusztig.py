"""q-analogues of weight multiplicities, computed three independent ways.

* ``lusztig_q_analogue`` — the defining alternating sum over the Weyl group,
  with partition-function queries against the memoized kernel;
* ``q_analogue_by_induction`` — recursion on a negative coordinate of the
  target weight, reducing to dominant targets which fall back to the sum;
* ``q_analogue_via_kernel`` — convolution of ordinary weight multiplicities
  (Freudenthal) with the q-analogues at highest weight zero.

The three routes share nothing except the dominant-target base case of the
induction, so agreement between them is a genuine cross-check.

Supporting operations: characters, tensor decomposition, stabilizer Poincare
ratios, generalized exponents, and the coefficientwise-positivity test.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .poly import QPoly
from .qkostant import _engine
from .root_system import RootSystem, Weight
from .weyl import dominant_representative, orbit, stabilizer_poincare, weyl_elements


class WeightMultiset:
    """Weights with positive integer multiplicities, in a fixed order."""

    def __init__(self, entries, order=None):
        self._entries = {w: int(m) for w, m in entries.items() if m}
        if order is None:
            order = sorted(self._entries, key=lambda w: w.coords)
        self._order = [w for w in order if w in self._entries]

    def get(self, w: Weight, default=0) -> int:
        return self._entries.get(w, default)

    def items(self):
        return [(w, self._entries[w]) for w in self._order]

    def dominant_items(self):
        return [(w, m) for w, m in self.items() if w.is_dominant()]

    def total_mass(self) -> int:
        return sum(self._entries.values())

    def __iter__(self):
        return iter(self._order)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, w):
        return w in self._entries

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self._entries == other._entries


class _Workspace:
    """Per-root-system caches for everything downstream of the kernel."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        # scale clearing all denominators of inverse-Cartan entries: a weight
        # lies in the root lattice iff its scaled root coords are = 0 mod scale
        self.scale = lcm(*[x.denominator for row in rs._inv_cartan for x in row])
        self.defining_memo = {}
        self.induction_memo = {}
        self.shifted_orbits = {}
        self.char_cache = {}
        self.tnu_cache = {}


_workspaces = {}


def _ws(rs: RootSystem) -> _Workspace:
    ws = _workspaces.get(rs.cartan)
    if ws is None:
        ws = _Workspace(rs)
        _workspaces[rs.cartan] = ws
    return ws


def clear_caches():
    _workspaces.clear()


def _scaled_root_coords(ws, w: Weight):
    return tuple(int(x * ws.scale) for x in ws.rs.weight_to_root_coords(w))


def _shifted_orbit(ws, lam_rho: Weight):
    """[(sign, scaled root coords of w(lam+rho))] over the whole Weyl group."""
    got = ws.shifted_orbits.get(lam_rho.coords)
    if got is None:
        got = tuple(
            (w.sign, _scaled_root_coords(ws, w.act(lam_rho)))
            for w in weyl_elements(ws.rs)
        )
        ws.shifted_orbits[lam_rho.coords] = got
    return got


def lusztig_q_analogue(rs: RootSystem, lam: Weight, mu: Weight) -> QPoly:
    """The q-analogue of the multiplicity of mu in the highest-weight module
    of lam: the alternating Weyl-group sum of partition values at
    w(lam+rho)-(mu+rho)."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    ws = _ws(rs)
    key = (lam.coords, mu.coords)
    got = ws.defining_memo.get(key)
    if got is not None:
        return got
    scale = ws.scale
    tgt = _scaled_root_coords(ws, mu + rs.rho)
    rank = rs.rank
    engine = _engine(rs)
    acc = {}
    for sign, vec in _shifted_orbit(ws, lam + rs.rho):
        arg = []
        for i in range(rank):
            d = vec[i] - tgt[i]
            if d < 0 or d % scale:
                arg = None
                break
            arg.append(d // scale)
        if arg is None:
            continue
        if sign > 0:
            for e, c in engine.compute(arg).items():
                acc[e] = acc.get(e, 0) + c
        else:
            for e, c in engine.compute(arg).items():
                acc[e] = acc.get(e, 0) - c
    poly = QPoly(acc)
    ws.defining_memo[key] = poly
    return poly


def q_analogue_by_induction(rs: RootSystem, lam: Weight, mu: Weight) -> QPoly:
    """Same value as lusztig_q_analogue, by recursion at a negative coordinate.

    With n = -<mu, alpha_check> > 0 for a simple alpha:
    n = 1 gives m^mu = q*m^{mu+alpha};
    n >= 2 gives m^mu = q*(m^{mu+alpha} + m^{mu+n*alpha}) - m^{mu+(n-1)*alpha}.
    Every step reduces hot(lam-mu), so the recursion reaches dominant targets
    (handed to the defining sum) or leaves the support and vanishes.
    """
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    return _induct(_ws(rs), lam, mu)


def _induct(ws, lam: Weight, mu: Weight) -> QPoly:
    rs = ws.rs
    if mu.is_dominant():
        return lusztig_q_analogue(rs, lam, mu)
    key = (lam.coords, mu.coords)
    got = ws.induction_memo.get(key)
    if got is not None:
        return got
    diff = rs.weight_to_root_coords(lam - mu)
    if any(x.denominator != 1 for x in diff) or sum(diff) < 0:
        val = QPoly.zero()
    else:
        i = next(k for k, c in enumerate(mu.coords) if c < 0)
        n = -mu.coords[i]
        alpha = rs.simple_roots[i]
        if n == 1:
            val = QPoly.q() * _induct(ws, lam, mu + alpha)
        else:
            val = (
                QPoly.q() * (_induct(ws, lam, mu + alpha) + _induct(ws, lam, mu + n * alpha))
                - _induct(ws, lam, mu + (n - 1) * alpha)
            )
    ws.induction_memo[key] = val
    return val


def cherednik_coefficient(rs: RootSystem, nu: Weight) -> QPoly:
    """m_0^{-nu}(q), the kernel coefficient at a point nu of Q_+."""
    rc = rs.weight_to_root_coords(nu)
    if not all(x.denominator == 1 and x >= 0 for x in rc):
        raise ValueError(f"{nu} is not in the positive root cone")
    return lusztig_q_analogue(rs, Weight.zero(rs.rank), -nu)


def q_analogue_via_kernel(rs: RootSystem, lam: Weight, mu: Weight) -> QPoly:
    """Convolution route: sum of m_lam^gamma * m_0^{mu-gamma}(q) over weights
    gamma of the module with gamma above mu."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    zero = Weight.zero(rs.rank)
    acc = {}
    for gamma, m in character(rs, lam).items():
        diff = gamma - mu
        rc = rs.weight_to_root_coords(diff)
        if not all(x.denominator == 1 and x >= 0 for x in rc):
            continue
        ker = lusztig_q_analogue(rs, zero, mu - gamma)
        for e, c in ker.terms().items():
            acc[e] = acc.get(e, 0) + m * c
    return QPoly(acc)


# -- characters ---------------------------------------------------------


def _weight_support(rs: RootSystem, lam: Weight):
    """All weights of the irreducible module, as {coords: level} with
    level = hot(lam - weight).  Uses unbroken-string descent from the top."""
    known = {lam.coords: 0}
    simple = rs.simple_roots
    cur = [lam]
    lvl = 0
    while cur:
        nxt = []
        for nu in cur:
            for i in range(rs.rank):
                p = 0
                up = nu + simple[i]
                while up.coords in known:
                    p += 1
                    up = up + simple[i]
                if p + nu.coords[i] >= 1:
                    down = nu - simple[i]
                    if down.coords not in known:
                        known[down.coords] = lvl + 1
                        nxt.append(down)
        cur = nxt
        lvl += 1
    return known


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module, by the product formula."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    num = 1
    den = 1
    lr = lam + rs.rho
    for r in rs.positive_roots:
        num *= rs.inner(lr, r)
        den *= rs.inner(rs.rho, r)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def character(rs: RootSystem, lam: Weight) -> WeightMultiset:
    """Full character: every weight with its multiplicity (Freudenthal)."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    ws = _ws(rs)
    got = ws.char_cache.get(lam.coords)
    if got is not None:
        return got

    support = _weight_support(rs, lam)
    dominants = sorted(
        (Weight(c) for c in support if all(x >= 0 for x in c)),
        key=lambda w: support[w.coords],
    )
    two_rho = rs.rho + rs.rho
    mult = {lam.coords: 1}
    for mu in dominants[1:]:
        rhs = 0
        for gamma in rs.positive_roots:
            gw = rs.root_to_weight_basis(gamma)
            nu = mu + gw
            while nu.coords in support:
                rep, _ = dominant_representative(rs, nu)
                rhs += rs.inner(nu, gamma) * mult[rep.coords]
                nu = nu + gw
        diff_rc = tuple(int(x) for x in rs.weight_to_root_coords(lam - mu))
        denom = rs.inner(lam + mu + two_rho, diff_rc)
        m, rem = divmod(2 * rhs, denom)
        assert rem == 0 and m > 0, (lam, mu, rhs, denom)
        mult[mu.coords] = m

    entries = {}
    for mu in dominants:
        m = mult[mu.coords]
        for nu in orbit(rs, mu):
            entries[nu] = m
    order = sorted(entries, key=lambda w: (support[w.coords], w.coords))
    ch = WeightMultiset(entries, order)
    if ch.total_mass() != weyl_dimension(rs, lam):
        raise AssertionError(f"character mass mismatch for {lam} in {rs.name}")
    ws.char_cache[lam.coords] = ch
    return ch


def freudenthal_multiplicity(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Ordinary weight multiplicity, independent of any q-machinery."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    return character(rs, lam).get(mu)


def dual_weight(rs: RootSystem, lam: Weight) -> Weight:
    """Highest weight of the dual module: -w0(lam)."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    rep, _ = dominant_representative(rs, -lam)
    return rep


# -- tensor decomposition and the pairing sums ---------------------------


def klimyk_decompose(rs: RootSystem, lam: Weight, gam: Weight) -> WeightMultiset:
    """Constituents of the tensor product of the lam- and gam-modules.

    For each weight mu of the first factor, gamma+mu+rho either lies on a
    reflection wall (dropped) or sorts to a strictly dominant chamber point
    with a sign; the signed counts accumulate to the multiplicities.
    """
    if not lam.is_dominant() or not gam.is_dominant():
        raise ValueError("both highest weights must be dominant")
    rho = rs.rho
    acc = {}
    for mu, m in character(rs, lam).items():
        xi = gam + mu + rho
        xiplus, w = dominant_representative(rs, xi)
        if any(c == 0 for c in xiplus.coords):
            continue
        kappa = (xiplus - rho).coords
        acc[kappa] = acc.get(kappa, 0) + w.sign * m
    entries = {Weight(c): v for c, v in acc.items() if v}
    if any(v < 0 for v in entries.values()):
        raise AssertionError("negative constituent multiplicity")
    top = lam + gam
    order = sorted(entries, key=lambda w: (rs.height(top - w), w.coords))
    return WeightMultiset(entries, order)


def tensor_zero_q(rs: RootSystem, lam: Weight, gam: Weight) -> QPoly:
    """The zero-weight q-analogue of the product of the dual lam-module with
    the gam-module: sum of c_nu * m_nu^0(q) over its constituents nu."""
    zero = Weight.zero(rs.rank)
    out = QPoly.zero()
    for nu, c in klimyk_decompose(rs, dual_weight(rs, lam), gam).items():
        if rs.in_root_lattice(nu):
            out = out + c * lusztig_q_analogue(rs, nu, zero)
    return out


def weighted_sum(rs: RootSystem, lam: Weight, gam: Weight) -> QPoly:
    """Sum over the weights mu of the gam-module of m_gam^mu * m_lam^mu(q)."""
    if not lam.is_dominant() or not gam.is_dominant():
        raise ValueError("both highest weights must be dominant")
    acc = {}
    for mu, m in character(rs, gam).items():
        rc = rs.weight_to_root_coords(lam - mu)
        if not all(x.denominator == 1 and x >= 0 for x in rc):
            continue
        for e, c in lusztig_q_analogue(rs, lam, mu).terms().items():
            acc[e] = acc.get(e, 0) + m * c
    return QPoly(acc)


def stabilizer_poincare_cached(rs: RootSystem, nu: Weight) -> QPoly:
    ws = _ws(rs)
    got = ws.tnu_cache.get(nu.coords)
    if got is None:
        got = stabilizer_poincare(rs, nu)
        ws.tnu_cache[nu.coords] = got
    return got


def brylinski_form(rs: RootSystem, lam: Weight, gam: Weight) -> QPoly:
    """Sum over common dominant lower weights nu of
    m_lam^nu(q) * m_gam^nu(q) * t_0(q)/t_nu(q), with exact division."""
    if not lam.is_dominant() or not gam.is_dominant():
        raise ValueError("both highest weights must be dominant")
    t0 = stabilizer_poincare_cached(rs, Weight.zero(rs.rank))
    out = QPoly.zero()
    for nu, _ in character(rs, lam).dominant_items():
        if not rs.dominance_leq(nu, gam):
            continue
        p = lusztig_q_analogue(rs, lam, nu) * lusztig_q_analogue(rs, gam, nu)
        if p.is_zero():
            continue
        out = out + p * t0.exact_div(stabilizer_poincare_cached(rs, nu))
    return out


def generalized_exponents(rs: RootSystem, lam: Weight) -> list:
    """Exponent multiset of m_lam^0(q), ascending; lam must lie in the root
    lattice (otherwise the zero weight does not occur)."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if not rs.in_root_lattice(lam):
        raise ValueError(f"{lam} is not in the root lattice")
    poly = lusztig_q_analogue(rs, lam, Weight.zero(rs.rank))
    return poly.exponent_multiset()


def broer_nonnegativity_test(rs: RootSystem, mu: Weight) -> bool:
    """True iff <mu, nu_check> >= -1 for every positive root nu — exactly the
    weights whose q-analogue has nonnegative coefficients for every module."""
    return all(rs.pairing(mu, r) >= -1 for r in rs.positive_roots)
