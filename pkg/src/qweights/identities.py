"""Mechanical verification of the closed-form identities.

Every verifier computes both sides independently — closed form from static
root-system data on one side, the alternating-sum engine on the other — and
returns a structured Report rather than raising on mismatch.  A failure entry
always carries the offending input and both polynomials, stringified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iproduct
from math import gcd

from .lusztig import (
    brylinski_form,
    character,
    dual_weight,
    generalized_exponents,
    lusztig_q_analogue,
    stabilizer_poincare_cached,
    tensor_zero_q,
    weighted_sum,
)
from .poly import QPoly
from .root_system import RootSystem, Weight, build_dual_root_system
from .weyl import dominant_representative, orbit


@dataclass
class Report:
    identity: str
    root_system: str
    inputs: dict
    status: str
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "root_system": self.root_system,
            "inputs": self.inputs,
            "status": self.status,
            "failures": self.failures,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _report(identity, rs, inputs, failures, details=None) -> Report:
    return Report(
        identity=identity,
        root_system=rs.name,
        inputs=inputs,
        status="pass" if not failures else "fail",
        failures=failures,
        details=details or {},
    )


def _mismatch(failures, check, mu, expected, actual):
    failures.append(
        {"check": check, "mu": str(mu), "expected": str(expected), "actual": str(actual)}
    )


def _expect(failures, check, mu, expected: QPoly, actual: QPoly):
    if expected != actual:
        _mismatch(failures, check, mu, expected, actual)


def _qh(rs) -> QPoly:
    return QPoly.q_int(rs.coxeter_number)


def _exponent_sum(exponents) -> QPoly:
    """Sum of q^e with multiplicity (exponents can repeat, e.g. D4)."""
    out = QPoly.zero()
    for e in exponents:
        out = out + QPoly.q(e)
    return out


# -- adjoint and little adjoint ------------------------------------------


def verify_adjoint(rs: RootSystem) -> Report:
    """All q-analogues of the adjoint module against their closed forms,
    plus both displayed sum formulas."""
    failures = []
    th = rs.theta
    zero = Weight.zero(rs.rank)
    h = rs.coxeter_number
    r = rs.rank

    m0_closed = _exponent_sum(rs.exponents)
    m0 = lusztig_q_analogue(rs, th, zero)
    _expect(failures, "zero-weight exponents", zero, m0_closed, m0)

    neg_simple_closed = (QPoly.q() - 1) * m0_closed + QPoly.q(h - 1)
    plain_sum = m0
    for root in rs.positive_roots:
        mu = rs.root_to_weight_basis(root)
        hot = sum(root)
        got = lusztig_q_analogue(rs, th, mu)
        _expect(failures, "positive root", mu, QPoly.q(h - 1 - hot), got)
        got_neg = lusztig_q_analogue(rs, th, -mu)
        _expect(
            failures,
            "negative root",
            -mu,
            neg_simple_closed.shift(hot - 1),
            got_neg,
        )
        plain_sum = plain_sum + got + got_neg

    plain_closed = m0_closed * (m0_closed - r + 1) + m0_closed.shift(-1) * _qh(rs)
    _expect(failures, "plain sum over all weights", "all", plain_closed, plain_sum)

    weighted = weighted_sum(rs, th, th)
    weighted_closed = m0_closed * m0_closed + m0_closed.shift(-1) * _qh(rs)
    _expect(failures, "weighted sum over all weights", "all", weighted_closed, weighted)

    return _report("adjoint", rs, {}, failures, {"exponents": list(rs.exponents)})


def verify_little_adjoint(rs: RootSystem) -> Report:
    """All q-analogues of the short-dominant-root module against their closed
    forms.  Only meaningful when two root lengths exist."""
    if all(d == 1 for d in rs.symmetrizer):
        raise ValueError(
            f"{rs.name} has a single root length; the adjoint verifier covers it"
        )
    failures = []
    ths = rs.theta_s
    zero = Weight.zero(rs.rank)
    h = rs.coxeter_number
    hot_ths = sum(rs.theta_s_root_coords)
    exps = rs.short_exponents
    ell = len([r for r in rs.short_positive_roots if sum(r) == 1])

    m0_closed = _exponent_sum(exps)
    m0 = lusztig_q_analogue(rs, ths, zero)
    _expect(failures, "zero-weight short exponents", zero, m0_closed, m0)
    if sorted(m0.exponent_multiset() if m0.coefficients_nonnegative() else []) != list(exps):
        _mismatch(failures, "exponents are dual to short height counts", zero,
                  list(exps), m0)

    neg_simple_closed = (QPoly.q() - 1) * m0_closed + QPoly.q(hot_ths)
    plain_sum = m0
    for root in rs.short_positive_roots:
        mu = rs.root_to_weight_basis(root)
        hot = sum(root)
        got = lusztig_q_analogue(rs, ths, mu)
        _expect(failures, "positive short root", mu, QPoly.q(hot_ths - hot), got)
        got_neg = lusztig_q_analogue(rs, ths, -mu)
        _expect(
            failures,
            "negative short root",
            -mu,
            neg_simple_closed.shift(hot - 1),
            got_neg,
        )
        plain_sum = plain_sum + got + got_neg

    # the q^{hot}-shifted zero-weight polynomial must stay a polynomial
    shifted = m0.shift(hot_ths - h)
    if shifted.min_exponent() is not None and shifted.min_exponent() < 0:
        _mismatch(failures, "shifted zero-weight polynomial", zero,
                  "no negative exponents", shifted)

    plain_closed = m0_closed * (m0_closed - ell + 1) + m0_closed.shift(hot_ths - h) * _qh(rs)
    _expect(failures, "plain sum over all weights", "all", plain_closed, plain_sum)

    weighted = weighted_sum(rs, ths, ths)
    weighted_closed = m0_closed * m0_closed + m0_closed.shift(hot_ths - h) * _qh(rs)
    _expect(failures, "weighted sum over all weights", "all", weighted_closed, weighted)

    return _report(
        "little-adjoint", rs, {},
        failures,
        {"short_exponents": list(exps), "short_simple_count": ell},
    )


# -- the four-way identity ------------------------------------------------


def verify_main_identity(rs: RootSystem, lam: Weight, gam: Weight) -> Report:
    """Four expressions for the pairing of two characters must agree:
    both weighted sums, the zero-weight analogue of the dual tensor product,
    and the stabilizer-weighted dominant sum."""
    a = weighted_sum(rs, lam, gam)
    b = weighted_sum(rs, gam, lam)
    c = tensor_zero_q(rs, lam, gam)
    d = brylinski_form(rs, lam, gam)
    failures = []
    for name, val in (("swapped weighted sum", b),
                      ("tensor zero-weight analogue", c),
                      ("stabilizer-weighted form", d)):
        if val != a:
            _mismatch(failures, name, f"lambda={lam}, gamma={gam}", a, val)
    return _report(
        "main", rs,
        {"lambda": list(lam.coords), "gamma": list(gam.coords)},
        failures,
        {"value": str(a)},
    )


def is_minuscule(rs: RootSystem, lam: Weight) -> bool:
    """Nonzero dominant weight whose weight system is one Weyl orbit."""
    if not lam.is_dominant() or lam.is_zero():
        return False
    from .lusztig import weyl_dimension

    return len(orbit(rs, lam)) == weyl_dimension(rs, lam)


def verify_minuscule(rs: RootSystem, lam: Weight) -> Report:
    """Every q-analogue a pure power, and the plain sum a stabilizer ratio."""
    if not is_minuscule(rs, lam):
        raise ValueError(f"{lam} is not minuscule in {rs.name}")
    failures = []
    total = QPoly.zero()
    power_sum = QPoly.zero()
    for mu in sorted(orbit(rs, lam), key=lambda w: w.coords):
        hot = rs.height(lam - mu)
        got = lusztig_q_analogue(rs, lam, mu)
        _expect(failures, "pure power", mu, QPoly.q(hot), got)
        total = total + got
        power_sum = power_sum + QPoly.q(hot)
    t0 = stabilizer_poincare_cached(rs, Weight.zero(rs.rank))
    ratio = t0.exact_div(stabilizer_poincare_cached(rs, lam))
    _expect(failures, "plain sum equals stabilizer ratio", lam, ratio, total)
    _expect(failures, "plain sum equals height powers", lam, power_sum, total)
    return _report("minuscule", rs, {"lambda": list(lam.coords)}, failures,
                   {"sum": str(total)})


def verify_coxeter_identity(rs: RootSystem) -> Report:
    """Stabilizer ratios for the two dominant roots expressed through
    zero-weight q-analogues; the long-root version runs in the dual system."""
    failures = []
    h = rs.coxeter_number
    zero = Weight.zero(rs.rank)
    t0 = stabilizer_poincare_cached(rs, zero)

    lhs_s = t0.exact_div(stabilizer_poincare_cached(rs, rs.theta_s))
    m0s = lusztig_q_analogue(rs, rs.theta_s, zero)
    hot_s = sum(rs.theta_s_root_coords)
    rhs_s = m0s.shift(hot_s - h) * _qh(rs)
    _expect(failures, "short dominant root ratio", rs.theta_s, rhs_s, lhs_s)

    dual = build_dual_root_system(rs)
    lhs_l = t0.exact_div(stabilizer_poincare_cached(rs, rs.theta))
    m0d = lusztig_q_analogue(dual, dual.theta_s, Weight.zero(dual.rank))
    hot_d = sum(dual.theta_s_root_coords)
    rhs_l = m0d.shift(hot_d - dual.coxeter_number) * QPoly.q_int(dual.coxeter_number)
    _expect(failures, "highest root ratio via dual system", rs.theta, rhs_l, lhs_l)

    return _report("coxeter", rs, {}, failures,
                   {"dual_system": dual.name})


# -- height duality -------------------------------------------------------


def _pairing_with_two_rho_check(rs: RootSystem, w: Weight):
    """<w, 2 rho_check> = twice the height; exact rational for any weight."""
    return 2 * sum(rs.weight_to_root_coords(w))


def _is_root_multiple(rs: RootSystem, w: Weight) -> bool:
    rc = rs.weight_to_root_coords(w)
    if any(x.denominator != 1 for x in rc):
        return False
    ints = [int(x) for x in rc]
    g = gcd(*ints)
    if g == 0:
        return True
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    elif any(x < 0 for x in ints):
        return False
    return tuple(x // g for x in ints) in rs._root_index


def verify_height_duality(rs: RootSystem, lam: Weight) -> Report:
    """When the zero-weight space has the same dimension as the fixed space
    of a principal nilpotent, the positive weights are graded by height like
    a union of strings, and the telescoping product identity holds."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if not rs.in_root_lattice(lam):
        raise ValueError(f"{lam} is not in the root lattice")
    ch = character(rs, lam)
    zero = Weight.zero(rs.rank)
    dim_torus_fixed = ch.get(zero)
    d0 = 0
    d1 = 0
    positives = []  # (height, multiplicity)
    for nu, m in ch.items():
        val = _pairing_with_two_rho_check(rs, nu)
        if val == 0:
            d0 += m
        elif val == 1:
            d1 += m
        if val > 0:
            positives.append((nu, m))
    dim_principal_fixed = d0 + d1
    hypothesis = dim_torus_fixed == dim_principal_fixed
    details = {
        "hypothesis_holds": hypothesis,
        "dim_zero_weight_space": dim_torus_fixed,
        "dim_principal_fixed_space": dim_principal_fixed,
    }
    failures = []
    if hypothesis:
        # (i) weights split as positive-height / zero / negative-height,
        # and every nonzero weight is a multiple of a root
        for nu, m in ch.items():
            if nu.is_zero():
                continue
            if _pairing_with_two_rho_check(rs, nu) == 0:
                _mismatch(failures, "nonzero weight at height zero", nu,
                          "nonzero height", 0)
            if not _is_root_multiple(rs, nu):
                _mismatch(failures, "weight is a multiple of a root", nu,
                          "k * root", str(nu))
        # (ii) telescoping product, cross-multiplied to stay polynomial
        exps = generalized_exponents(rs, lam)
        lhs_num = QPoly.one()
        lhs_den = QPoly.one()
        heights = []
        for nu, m in positives:
            hot = rs.height(nu)
            heights.extend([hot] * m)
            lhs_num = lhs_num * (QPoly.one() - QPoly.q(hot + 1)) ** m
            lhs_den = lhs_den * (QPoly.one() - QPoly.q(hot)) ** m
        rhs_num = QPoly.one()
        for e in exps:
            rhs_num = rhs_num * (QPoly.one() - QPoly.q(e + 1))
        rhs_den = (QPoly.one() - QPoly.q(1)) ** len(exps)
        if lhs_num * rhs_den != rhs_num * lhs_den:
            _mismatch(failures, "height product identity", lam,
                      "equal cross-products", "mismatch")
        # dual partition of the height-count sequence (n_1, n_2, ...)
        counts = {}
        for hot in heights:
            counts[hot] = counts.get(hot, 0) + 1
        seq = [counts.get(i, 0) for i in range(1, max(counts) + 1)] if counts else []
        dual_part = []
        j = 1
        while True:
            c = sum(1 for n in seq if n >= j)
            if not c:
                break
            dual_part.append(c)
            j += 1
        if sorted(dual_part) != exps:
            _mismatch(failures, "exponents dual to height counts", lam,
                      sorted(dual_part), exps)
        details["generalized_exponents"] = exps
    return _report("height-duality", rs, {"lambda": list(lam.coords)},
                   failures, details)


def classify_principal_pairs(systems, height_bound: int):
    """Scan every dominant root-lattice weight with 0 < hot(lambda) <= bound
    and keep the pairs satisfying the fixed-space dimension hypothesis."""
    found = []
    for rs in systems:
        hot_fund = [sum(rs.weight_to_root_coords(rs.fundamental_weight(i)))
                    for i in range(rs.rank)]
        ranges = [range(int(height_bound / h) + 1) for h in hot_fund]
        for coords in iproduct(*ranges):
            lam = Weight(coords)
            if lam.is_zero():
                continue
            rc = rs.weight_to_root_coords(lam)
            if any(x.denominator != 1 for x in rc):
                continue
            hot = sum(rc)
            if not 0 < hot <= height_bound:
                continue
            ch = character(rs, lam)
            d01 = 0
            for nu, m in ch.items():
                val = _pairing_with_two_rho_check(rs, nu)
                if val == 0 or val == 1:
                    d01 += m
            if ch.get(Weight.zero(rs.rank)) == d01:
                found.append((rs, lam))
    return sorted(found, key=lambda p: (p[0].name, p[1].coords))


# -- pointwise recurrences -------------------------------------------------


def verify_induction_lemma(rs: RootSystem, lam: Weight, gam: Weight,
                           alpha_index: int) -> Report:
    """The four-term reflection relation, all terms from the defining sum."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    n = -gam.coords[alpha_index]
    if n <= 0:
        raise ValueError(
            f"<gamma, alpha_check> = {-n} is not negative at index {alpha_index}"
        )
    alpha = rs.simple_roots[alpha_index]
    s_gam = gam + n * alpha
    lhs = lusztig_q_analogue(rs, lam, gam) + lusztig_q_analogue(rs, lam, s_gam - alpha)
    rhs = QPoly.q() * (
        lusztig_q_analogue(rs, lam, gam + alpha) + lusztig_q_analogue(rs, lam, s_gam)
    )
    failures = []
    _expect(failures, "reflection relation", gam, rhs, lhs)
    return _report(
        "induction", rs,
        {"lambda": list(lam.coords), "gamma": list(gam.coords),
         "alpha_index": alpha_index},
        failures,
    )


def verify_subregular_identity(rs: RootSystem, lam: Weight,
                               alpha_index: int) -> Report:
    """q * m^alpha = q^{hot(alpha+)} * m^{alpha+} for a short simple root,
    and nonnegativity of the subregular Poincare series m^0 - q*m^alpha."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if not rs.in_root_lattice(lam):
        raise ValueError(f"{lam} is not in the root lattice")
    simple_rc = tuple(1 if j == alpha_index else 0 for j in range(rs.rank))
    if rs.root_length[simple_rc] != 1:
        raise ValueError(f"simple root {alpha_index} is not short in {rs.name}")
    alpha = rs.simple_roots[alpha_index]
    alpha_plus, _ = dominant_representative(rs, alpha)
    hot_plus = rs.height(alpha_plus)
    zero = Weight.zero(rs.rank)

    m0 = lusztig_q_analogue(rs, lam, zero)
    m_alpha = lusztig_q_analogue(rs, lam, alpha)
    m_plus = lusztig_q_analogue(rs, lam, alpha_plus)
    m_neg = lusztig_q_analogue(rs, lam, -alpha)

    failures = []
    _expect(failures, "orbit transport", alpha,
            m_plus.shift(hot_plus), m_alpha.shift(1))
    poincare = m0 - m_alpha.shift(1)
    _expect(failures, "crossing zero", -alpha, m0.shift(1) - m_neg, poincare)
    if not poincare.coefficients_nonnegative():
        _mismatch(failures, "subregular series nonnegative", lam,
                  "nonnegative coefficients", poincare)
    return _report(
        "subregular", rs,
        {"lambda": list(lam.coords), "alpha_index": alpha_index},
        failures,
        {"poincare_series": str(poincare)},
    )
