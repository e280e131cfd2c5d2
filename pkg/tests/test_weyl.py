"""Weyl group enumeration, orbits, dominant representatives, stabilizers."""

import pytest

from qweights.poly import QPoly
from qweights.root_system import Weight, build_root_system
from qweights.weyl import (
    dominant_representative,
    enumerate_weyl,
    inversion_count,
    longest_element,
    orbit,
    stabilizer_poincare,
    weyl_elements,
)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_enumeration_size_and_signs(name):
    rs = build_root_system(name)
    elems = weyl_elements(rs)
    assert len(elems) == rs.weyl_order
    assert len({w.matrix for w in elems}) == rs.weyl_order
    # signs split evenly between the two values for |W| > 1
    assert sum(1 for w in elems if w.sign == 1) == rs.weyl_order // 2
    # BFS yields by increasing length
    lengths = [w.length for w in enumerate_weyl(rs)]
    assert lengths == sorted(lengths)
    assert lengths[0] == 0 and lengths[-1] == len(rs.positive_roots)


def test_poincare_polynomial_of_whole_group():
    # sum of q^{length} equals the stabilizer series of the zero weight
    for name in ("A2", "B2", "G2", "B3"):
        rs = build_root_system(name)
        series = QPoly.zero()
        for w in weyl_elements(rs):
            series = series + QPoly.q(w.length)
        assert series == stabilizer_poincare(rs, Weight.zero(rs.rank))
        # product formula: prod over exponents of [m_i + 1]_q
        prod = QPoly.one()
        for m in rs.exponents:
            prod = prod * QPoly.q_int(m + 1)
        assert series == prod


def test_longest_element():
    for name in ("A2", "B2", "G2", "A3"):
        rs = build_root_system(name)
        w0 = longest_element(rs)
        assert w0.length == len(rs.positive_roots)
        assert w0.act(rs.rho) == -rs.rho
        # longest element is an involution
        assert w0.act(w0.act(rs.theta)) == rs.theta


def test_dominant_representative():
    rs = build_root_system("B3")
    for w in weyl_elements(rs):
        mu = w.act(rs.rho)
        rep, u = dominant_representative(rs, mu)
        assert rep == rs.rho
        assert u.act(mu) == rep
        assert u.length == inversion_count(rs, u)
    # dominant inputs come back unchanged with the identity
    rep, u = dominant_representative(rs, rs.theta)
    assert rep == rs.theta and u.length == 0


def test_orbit_sizes():
    a2 = build_root_system("A2")
    assert len(orbit(a2, a2.fundamental_weight(0))) == 3
    assert len(orbit(a2, a2.rho)) == 6
    assert len(orbit(a2, Weight.zero(2))) == 1
    b2 = build_root_system("B2")
    assert len(orbit(b2, b2.fundamental_weight(1))) == 4
    assert len(orbit(b2, b2.fundamental_weight(0))) == 4
    g2 = build_root_system("G2")
    assert len(orbit(g2, g2.theta)) == 6
    assert len(orbit(g2, g2.theta_s)) == 6
    # orbit of theta is the set of long roots
    longs = {g2.root_to_weight_basis(r) for r in g2.positive_roots
             if g2.root_length[r] != 1}
    assert orbit(g2, g2.theta) == longs | {-w for w in longs}


def test_stabilizer_poincare_values():
    a2 = build_root_system("A2")
    # W_{w1} = {1, s2}
    assert stabilizer_poincare(a2, a2.fundamental_weight(0)) == QPoly({0: 1, 1: 1})
    # regular weight: trivial stabilizer
    assert stabilizer_poincare(a2, a2.rho) == QPoly.one()
    b3 = build_root_system("B3")
    # orbit-stabilizer: |W| = |orbit| * t_nu(1)
    for nu in (b3.theta, b3.theta_s, b3.fundamental_weight(2), Weight.zero(3)):
        t = stabilizer_poincare(b3, nu)
        assert len(orbit(b3, nu)) * t.evaluate(1) == b3.weyl_order
    with pytest.raises(ValueError):
        stabilizer_poincare(a2, Weight((-1, 0)))


def test_simple_reflection_action():
    rs = build_root_system("C3")
    for i in range(rs.rank):
        m = rs.simple_reflection_matrix(i)
        alpha = rs.simple_roots[i]
        # s_i fixes the hyperplane and negates alpha_i
        for j in range(rs.rank):
            w = rs.fundamental_weight(j)
            image = Weight(tuple(sum(m[k][t] * w.coords[t] for t in range(rs.rank))
                                 for k in range(rs.rank)))
            expected = w - alpha if i == j else w
            assert image == expected
