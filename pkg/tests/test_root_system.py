"""Static root-system data against the classical tables."""

from fractions import Fraction

import pytest

from qweights.root_system import (
    RankGuardError,
    Weight,
    build_dual_root_system,
    build_root_system,
    parse_type,
)

# (type, #positive roots, exponents, coxeter number, weyl order)
CLASSICAL_TABLE = [
    ("A1", 1, [1], 2, 2),
    ("A2", 3, [1, 2], 3, 6),
    ("A3", 6, [1, 2, 3], 4, 24),
    ("A4", 10, [1, 2, 3, 4], 5, 120),
    ("B2", 4, [1, 3], 4, 8),
    ("B3", 9, [1, 3, 5], 6, 48),
    ("B4", 16, [1, 3, 5, 7], 8, 384),
    ("C3", 9, [1, 3, 5], 6, 48),
    ("C4", 16, [1, 3, 5, 7], 8, 384),
    ("D4", 12, [1, 3, 3, 5], 6, 192),
    ("D5", 20, [1, 3, 4, 5, 7], 8, 1920),
    ("E6", 36, [1, 4, 5, 7, 8, 11], 12, 51840),
    ("E7", 63, [1, 5, 7, 9, 11, 13, 17], 18, 2903040),
    ("F4", 24, [1, 5, 7, 11], 12, 1152),
    ("G2", 6, [1, 5], 6, 12),
]


@pytest.mark.parametrize("name,nroots,exps,h,worder", CLASSICAL_TABLE)
def test_classical_invariants(name, nroots, exps, h, worder):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == nroots
    assert list(rs.exponents) == exps
    assert rs.coxeter_number == h
    assert rs.weyl_order == worder
    # structural consistency of the same quantities
    assert sum(exps) == nroots                      # sum of exponents
    assert max(exps) == h - 1                       # largest exponent
    assert rs.height(rs.theta) == h - 1             # height of highest root


HIGHEST_ROOTS = {
    "A3": (1, 1, 1),
    "B3": (1, 2, 2),
    "C3": (2, 2, 1),
    "D4": (1, 2, 1, 1),
    "G2": (3, 2),
    "F4": (2, 3, 4, 2),
}

SHORT_DOMINANT_ROOTS = {
    "B2": (1, 1),
    "B3": (1, 1, 1),
    "C3": (1, 2, 1),
    "G2": (2, 1),
    "F4": (1, 2, 3, 2),
}


@pytest.mark.parametrize("name,coords", sorted(HIGHEST_ROOTS.items()))
def test_highest_root(name, coords):
    rs = build_root_system(name)
    assert rs.theta_root_coords == coords
    assert rs.theta.is_dominant()
    # every positive root is dominated by theta
    for root in rs.positive_roots:
        assert rs.dominance_leq(rs.root_to_weight_basis(root), rs.theta)


@pytest.mark.parametrize("name,coords", sorted(SHORT_DOMINANT_ROOTS.items()))
def test_short_dominant_root(name, coords):
    rs = build_root_system(name)
    assert rs.theta_s_root_coords == coords
    assert rs.theta_s.is_dominant()
    assert rs.root_length[coords] == 1
    for root in rs.short_positive_roots:
        assert rs.dominance_leq(rs.root_to_weight_basis(root), rs.theta_s)


SHORT_EXPONENTS = {"B2": [2], "B3": [3], "B4": [4], "C3": [2, 4],
                   "C4": [2, 4, 6], "F4": [4, 8], "G2": [3]}


@pytest.mark.parametrize("name,exps", sorted(SHORT_EXPONENTS.items()))
def test_short_exponents(name, exps):
    rs = build_root_system(name)
    assert list(rs.short_exponents) == exps
    # the largest short exponent is the height of the short dominant root
    assert max(exps) == sum(rs.theta_s_root_coords)


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"])
def test_cartan_structure(name):
    rs = build_root_system(name)
    A, d = rs.cartan, rs.symmetrizer
    n = rs.rank
    for i in range(n):
        assert A[i][i] == 2
        for j in range(n):
            if i != j:
                assert A[i][j] <= 0
                assert (A[i][j] == 0) == (A[j][i] == 0)
            # d_i * <alpha_j, alpha_i^vee> is symmetric in (i, j)
            assert d[i] * A[i][j] == d[j] * A[j][i]
    # inverse Cartan really inverts
    for i in range(n):
        for j in range(n):
            acc = sum(Fraction(A[i][k]) * rs._inv_cartan[k][j] for k in range(n))
            assert acc == (1 if i == j else 0)


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "G2", "F4"])
def test_basis_conversions(name):
    rs = build_root_system(name)
    for root in rs.positive_roots:
        w = rs.root_to_weight_basis(root)
        assert tuple(rs.weight_to_root_coords(w)) == root
        assert rs.in_root_lattice(w)
        assert rs.height(w) == sum(root)
        assert rs.is_positive_root_weight(w)
    assert not rs.is_positive_root_weight(rs.theta + rs.theta)
    # pairing of fundamental weights against simple coroots
    for i in range(rs.rank):
        for j in range(rs.rank):
            simple = rs.simple_roots[j]
            assert rs.pairing(rs.fundamental_weight(i), simple) == (i == j)


def test_rho_is_half_sum_of_positive_roots():
    for name in ("A3", "B2", "C3", "G2", "F4"):
        rs = build_root_system(name)
        assert rs.rho.coords == (1,) * rs.rank
        total = [0] * rs.rank
        for root in rs.positive_roots:
            for k, c in enumerate(root):
                total[k] += c
        rho_rc = rs.weight_to_root_coords(rs.rho)
        assert [2 * x for x in rho_rc] == total


def test_root_lattice_membership():
    a2 = build_root_system("A2")
    assert not a2.in_root_lattice(a2.fundamental_weight(0))
    assert a2.in_root_lattice(a2.theta)
    b2 = build_root_system("B2")
    assert not b2.in_root_lattice(b2.fundamental_weight(1))
    assert b2.in_root_lattice(b2.fundamental_weight(0))
    with pytest.raises(ValueError):
        a2.height(a2.fundamental_weight(0))


def test_dominance_order():
    rs = build_root_system("G2")
    assert rs.dominance_leq(rs.theta_s, rs.theta)
    assert not rs.dominance_leq(rs.theta, rs.theta_s)
    assert rs.dominance_leq(rs.theta, rs.theta)
    a2 = build_root_system("A2")
    w1, w2 = a2.fundamental_weight(0), a2.fundamental_weight(1)
    assert not a2.dominance_leq(w1, w2)
    assert not a2.dominance_leq(w2, w1)


def test_weight_arithmetic():
    a = Weight((1, -2))
    b = Weight((0, 5))
    assert (a + b).coords == (1, 3)
    assert (a - b).coords == (1, -7)
    assert (-a).coords == (-1, 2)
    assert (3 * a).coords == (3, -6)
    assert (a * 3).coords == (3, -6)
    assert list(a) == [1, -2]
    assert a[1] == -2
    assert len(a) == 2
    assert Weight.zero(3).is_zero()
    assert Weight((0, 1)).is_dominant()
    assert not a.is_dominant()
    assert str(a) == "(1,-2)"
    assert Weight((1.0, 2.0)).coords == (1, 2)
    with pytest.raises(ValueError):
        Weight((1.5, 0))


def test_parse_type():
    assert parse_type("B3") == ("B", 3)
    assert parse_type("b_3") == ("B", 3)
    assert parse_type("g2") == ("G", 2)
    for bad in ("H3", "A0", "B1", "D3", "E5", "F3", "G3", "", "B", "3B"):
        with pytest.raises(ValueError):
            parse_type(bad)
    assert build_root_system("C", 3).name == "C3"
    assert build_root_system(("C", 3)).name == "C3"


def test_rank_guard():
    with pytest.raises(RankGuardError):
        build_root_system("E8")
    rs = build_root_system("E8", unsafe_large_rank=True)
    assert len(rs.positive_roots) == 120
    assert rs.coxeter_number == 30
    assert list(rs.exponents) == [1, 7, 11, 13, 17, 19, 23, 29]
    assert rs.weyl_order == 696729600
    # E7 is below the guard and builds without the flag
    assert build_root_system("E7").weyl_order == 2903040


def test_dual_root_system():
    b3 = build_root_system("B3")
    c3 = build_dual_root_system(b3)
    assert c3.name == "C3"
    assert build_dual_root_system(c3).cartan == b3.cartan
    # duality transposes the Cartan matrix
    for i in range(3):
        for j in range(3):
            assert c3.cartan[i][j] == b3.cartan[j][i]
    # self-dual types keep their labels
    for name in ("A3", "D4", "G2", "F4"):
        rs = build_root_system(name)
        assert build_dual_root_system(rs).name == name
    # the dual short dominant root pairs with the original highest root:
    # both have the same height complement h - hot
    f4 = build_root_system("F4")
    dual = build_dual_root_system(f4)
    assert sum(dual.theta_s_root_coords) == sum(f4.theta_s_root_coords)


def test_lru_cache_identity():
    assert build_root_system("A2") is build_root_system("a_2")
