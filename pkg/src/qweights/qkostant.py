"""The q-analogue of the vector partition function over positive roots.

P_q(mu) = sum over multisets of positive roots with sum mu, each multiset
contributing q^(number of parts).  Equivalently the mu-coefficient of
1 / prod_{gamma > 0} (1 - q e^gamma).

Two interchangeable kernels implement the recursion: a Cython extension and
a pure-Python twin.  The compiled one is picked when importable; setting the
environment variable QWEIGHTS_PURE forces the fallback (useful for the
benchmark and for debugging).
"""

from __future__ import annotations

import os

from .poly import QPoly
from .root_system import RootSystem, Weight

if os.environ.get("QWEIGHTS_PURE"):
    from ._partition_py import PartitionEngine

    _BACKEND = "pure"
else:
    try:
        from ._partition_cy import PartitionEngine

        _BACKEND = "compiled"
    except ImportError:
        from ._partition_py import PartitionEngine

        _BACKEND = "pure"


def kernel_backend() -> str:
    """Which partition kernel is live: 'compiled' or 'pure'."""
    return _BACKEND


_engines = {}


def _engine(rs: RootSystem) -> PartitionEngine:
    eng = _engines.get(rs.cartan)
    if eng is None:
        # ascending height; the engine peels from the end (tallest first)
        eng = PartitionEngine(rs.positive_roots)
        _engines[rs.cartan] = eng
    return eng


def q_partition_root_coords(rs: RootSystem, coords) -> dict:
    """Sparse coefficient dict of P_q at a root-lattice point (may be negative)."""
    return _engine(rs).compute(coords)


def q_partition(rs: RootSystem, mu: Weight) -> QPoly:
    """P_q(mu) as a polynomial; the zero polynomial when mu is not in Q_+."""
    coords = rs.weight_to_root_coords(mu)
    if any(x.denominator != 1 or x < 0 for x in coords):
        return QPoly.zero()
    return QPoly(_engine(rs).compute(tuple(int(x) for x in coords)))


def q_partition_cache_stats():
    """(total memo entries, total memo hits) across all root systems."""
    entries = 0
    hits = 0
    for eng in _engines.values():
        e, h = eng.stats()
        entries += e
        hits += h
    return (entries, hits)


def clear_partition_cache():
    _engines.clear()
