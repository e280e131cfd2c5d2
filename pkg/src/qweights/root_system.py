"""Simple root systems of types A–G with the static data the algorithms consume.

Conventions, fixed once and documented in the README:

* Bourbaki numbering of simple roots for every type.
* Cartan matrix entry ``A[i][j] = <alpha_j, alpha_i_check>``; the j-th column
  of A is alpha_j written in the fundamental-weight basis.
* Roots are stored in simple-root coordinates (always integer vectors);
  weights are stored in fundamental-weight coordinates (always integer
  vectors).  Conversion between the two goes through exact rationals.
* The symmetrizer d_i is normalized so short simple roots have (a,a) = 2;
  then the coroot of a short root is the root itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

WEYL_ORDER_GUARD = 10**7

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


class RankGuardError(ValueError):
    """The Weyl group is too large to sum over by default."""


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: tuple

    def __post_init__(self):
        coords = []
        for c in self.coords:
            if int(c) != c:
                raise ValueError(f"non-integral weight coordinate {c!r}")
            coords.append(int(c))
        object.__setattr__(self, "coords", tuple(coords))

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, n: int):
        return Weight(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _standard_cartan(letter: str, rank: int):
    """Bourbaki Cartan matrix for the given simple type."""
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2

    def chain(i, j):  # single bond between nodes i and j
        a[i][j] = a[j][i] = -1

    if letter in ("A", "B", "C", "F", "G"):
        for i in range(rank - 1):
            chain(i, i + 1)
    if letter == "B":  # alpha_rank short: <alpha_{r-1}, alpha_r_check> = -2
        a[rank - 1][rank - 2] = -2
    elif letter == "C":  # alpha_rank long
        a[rank - 2][rank - 1] = -2
    elif letter == "D":
        for i in range(rank - 2):
            chain(i, i + 1)
        chain(rank - 3, rank - 1)
    elif letter == "E":
        # chain 1-3-4-5-6(-7-8), branch node 4 carries node 2
        chain(0, 2)
        for i in range(2, rank - 1):
            chain(i, i + 1)
        chain(1, 3)
    elif letter == "F":
        a[2][1] = -2  # <alpha_2, alpha_3_check> = -2; alpha_1, alpha_2 long
        a[1][2] = -1
    elif letter == "G":
        a[0][1] = -3  # alpha_1 short
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan):
    """Positive integers d_i with d_i * A[i][j] = d_j * A[j][i], min = 1."""
    rank = len(cartan)
    d = [None] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if i != j and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    if any(x is None for x in d):
        raise ValueError("Dynkin diagram is not connected")
    lo = min(d)
    d = [x / lo for x in d]
    if any(x.denominator != 1 for x in d):
        raise ValueError("symmetrizer is not integral")
    return tuple(int(x) for x in d)


def _positive_roots(cartan):
    """All positive roots in simple-root coordinates, by the string rule.

    Returns them sorted by height then lexicographically.
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # back up along the alpha_i string through beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                ci = sum(cartan[i][j] * beta[j] for j in range(rank))
                if p - ci > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def _invert(cartan):
    """Exact inverse of the Cartan matrix, as Fractions."""
    rank = len(cartan)
    aug = [[Fraction(cartan[i][j]) for j in range(rank)]
           + [Fraction(1 if j == i else 0) for j in range(rank)]
           for i in range(rank)]
    for col in range(rank):
        piv = next(r for r in range(col, rank) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(rank):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[rank:]) for row in aug)


def _dual_partition(counts):
    """Column lengths of the Young diagram with row lengths ``counts``."""
    out = []
    j = 1
    while True:
        c = sum(1 for n in counts if n >= j)
        if c == 0:
            return tuple(sorted(out))
        out.append(c)
        j += 1


class RootSystem:
    """Immutable container for one simple root system."""

    def __init__(self, cartan, letter: str, rank: int, unsafe_large_rank: bool = False):
        self.letter = letter
        self.rank = rank
        self.name = f"{letter}{rank}"
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.symmetrizer = _symmetrizer(self.cartan)
        self.positive_roots = _positive_roots(self.cartan)
        self.heights = tuple(sum(r) for r in self.positive_roots)
        self._root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self._inv_cartan = _invert(self.cartan)

        # exponents = dual partition of the height-count sequence
        hmax = self.heights[-1]
        counts = [0] * hmax
        for h in self.heights:
            counts[h - 1] += 1
        self.exponents = _dual_partition(counts)
        self.coxeter_number = hmax + 1
        self.weyl_order = 1
        for m in self.exponents:
            self.weyl_order *= m + 1
        if self.weyl_order > WEYL_ORDER_GUARD and not unsafe_large_rank:
            raise RankGuardError(
                f"{self.name}: Weyl group has order {self.weyl_order} > "
                f"{WEYL_ORDER_GUARD}; pass unsafe_large_rank=True to build anyway"
            )
        self.unsafe_large_rank = unsafe_large_rank

        # squared-length/2 of each positive root: 1 for short, 2 or 3 for long
        d = self.symmetrizer
        self.root_length = {}
        for r in self.positive_roots:
            nn = sum(r[j] * r[k] * d[k] * self.cartan[k][j]
                     for j in range(rank) for k in range(rank) if r[j] and r[k])
            assert nn % 2 == 0
            self.root_length[r] = nn // 2
        self.short_positive_roots = tuple(
            r for r in self.positive_roots if self.root_length[r] == 1
        )
        s_counts = [0] * max(sum(r) for r in self.short_positive_roots)
        for r in self.short_positive_roots:
            s_counts[sum(r) - 1] += 1
        self.short_exponents = _dual_partition(s_counts)

        # distinguished weights
        self.rho = Weight((1,) * rank)
        # rho_check pairs to 1 with every simple root; <w, 2 rho_check> is
        # twice the height for any w in the root lattice.
        self.rho_check = Weight((1,) * rank)
        self.theta = self.root_to_weight_basis(self.positive_roots[-1])
        self.theta_root_coords = self.positive_roots[-1]
        short_dom = [r for r in self.short_positive_roots
                     if self.root_to_weight_basis(r).is_dominant()]
        assert len(short_dom) == 1
        self.theta_s_root_coords = short_dom[0]
        self.theta_s = self.root_to_weight_basis(short_dom[0])

        self.simple_roots = tuple(
            self.root_to_weight_basis(tuple(1 if j == i else 0 for j in range(rank)))
            for i in range(rank)
        )
        self._positive_root_weights = frozenset(
            self.root_to_weight_basis(r).coords for r in self.positive_roots
        )

    # -- basis conversion ----------------------------------------------

    def root_to_weight_basis(self, root_coords) -> Weight:
        a = self.cartan
        n = self.rank
        return Weight(tuple(
            sum(a[k][j] * root_coords[j] for j in range(n) if root_coords[j])
            for k in range(n)
        ))

    def weight_to_root_coords(self, w: Weight) -> tuple:
        """Exact rational solution of cartan . x = coords."""
        inv = self._inv_cartan
        n = self.rank
        return tuple(
            sum(inv[i][j] * w.coords[j] for j in range(n) if w.coords[j])
            or Fraction(0)
            for i in range(n)
        )

    def in_root_lattice(self, w: Weight) -> bool:
        return all(x.denominator == 1 for x in self.weight_to_root_coords(w))

    # -- order, height, pairing -----------------------------------------

    def dominance_leq(self, mu: Weight, lam: Weight) -> bool:
        """True iff lam - mu is a nonnegative integer combination of simple roots."""
        diff = self.weight_to_root_coords(lam - mu)
        return all(x.denominator == 1 and x >= 0 for x in diff)

    def height(self, gamma: Weight) -> int:
        """Sum of simple-root coordinates; gamma must lie in Q_+."""
        coords = self.weight_to_root_coords(gamma)
        if not all(x.denominator == 1 and x >= 0 for x in coords):
            raise ValueError(f"{gamma} is not a nonnegative root-lattice element")
        return int(sum(coords))

    def inner(self, w: Weight, root_coords) -> int:
        """Symmetrized form (w, beta) for beta given in root coordinates."""
        d = self.symmetrizer
        return sum(root_coords[i] * d[i] * w.coords[i]
                   for i in range(self.rank) if root_coords[i] and w.coords[i])

    def pairing(self, mu: Weight, nu) -> int:
        """<mu, nu_check> for a positive root nu (Weight or root coords)."""
        if isinstance(nu, Weight):
            rc = self.weight_to_root_coords(nu)
            if not all(x.denominator == 1 for x in rc):
                raise ValueError(f"{nu} is not a root of {self.name}")
            rc = tuple(int(x) for x in rc)
        else:
            rc = tuple(nu)
        if rc not in self._root_index:
            raise ValueError(f"{rc} is not a positive root of {self.name}")
        num = self.inner(mu, rc)
        length = self.root_length[rc]
        q, r = divmod(num, length)
        if r:
            return Fraction(num, length)
        return q

    def is_positive_root_weight(self, w: Weight) -> bool:
        return w.coords in self._positive_root_weights

    # -- misc -------------------------------------------------------------

    def simple_reflection_matrix(self, i: int):
        """Matrix of s_i on fundamental-weight coordinates (acts on columns)."""
        a = self.cartan
        n = self.rank
        return tuple(
            tuple((1 if k == j else 0) - (a[k][i] if j == i else 0)
                  for j in range(n))
            for k in range(n)
        )

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(1 if j == i else 0 for j in range(self.rank)))

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)


def parse_type(text: str):
    """'b3' / 'B3' / 'B_3' -> ('B', 3)."""
    t = text.strip().upper().replace("_", "")
    if len(t) < 2 or t[0] not in _VALID_RANKS or not t[1:].isdigit():
        raise ValueError(f"cannot parse root-system type {text!r}")
    letter, rank = t[0], int(t[1:])
    if not _VALID_RANKS[letter](rank):
        raise ValueError(f"no simple root system of type {letter}{rank}")
    return letter, rank


@lru_cache(maxsize=None)
def _build_cached(letter, rank, unsafe_large_rank):
    return RootSystem(_standard_cartan(letter, rank), letter, rank,
                      unsafe_large_rank=unsafe_large_rank)


def build_root_system(type_letter, rank=None, unsafe_large_rank=False) -> RootSystem:
    """Build the simple root system of the given type.

    Accepts either ("B", 3) or a single string "B3".  Refuses systems whose
    Weyl group exceeds the order guard unless unsafe_large_rank is set.
    """
    if rank is None and isinstance(type_letter, tuple):
        type_letter, rank = type_letter
    if rank is None:
        letter, rank = parse_type(type_letter)
    else:
        letter = type_letter.strip().upper()
        rank = int(rank)
    if letter not in _VALID_RANKS or not _VALID_RANKS[letter](rank):
        raise ValueError(f"invalid simple type {letter}{rank}")
    return _build_cached(letter, rank, bool(unsafe_large_rank))


def build_dual_root_system(rs: RootSystem) -> RootSystem:
    """Root system whose roots are the coroots of ``rs`` (transposed Cartan).

    For B/C the letter swaps; F4 and G2 come back with long and short simple
    roots exchanged; simply-laced systems are unchanged.
    """
    dual_letter = {"B": "C", "C": "B"}.get(rs.letter, rs.letter)
    transposed = tuple(tuple(rs.cartan[j][i] for j in range(rs.rank))
                       for i in range(rs.rank))
    return RootSystem(transposed, dual_letter, rs.rank,
                      unsafe_large_rank=rs.unsafe_large_rank)


# Functional aliases matching the operation names used in docs/tests.

def root_to_weight_basis(rs: RootSystem, root_coords) -> Weight:
    return rs.root_to_weight_basis(root_coords)


def weight_to_root_coords(rs: RootSystem, w: Weight) -> tuple:
    return rs.weight_to_root_coords(w)


def dominance_leq(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    return rs.dominance_leq(mu, lam)


def height(rs: RootSystem, gamma: Weight) -> int:
    return rs.height(gamma)


def pairing(rs: RootSystem, mu: Weight, nu) -> int:
    return rs.pairing(mu, nu)
