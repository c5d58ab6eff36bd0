"""NumPy implementations of the bitset kernels.

Fallback backend used when the compiled extension (``cyclomat._core``) is
unavailable or disabled via ``CYCLOMAT_PURE=1``.  All functions mirror the
extension's signatures exactly: subsets of a ground set {0, ..., n-1} are
word-encoded as integer bitmasks, and per-subset tables are returned as
``bytes`` of length ``2**n`` (index = bitmask).

The lattice sweeps below are coordinate-wise zeta transforms: one pass per
element, each pass a single vectorised operation on the two half-tables
split by that element's bit.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

BACKEND_NAME = "numpy"


def _popcounts(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values).astype(np.uint8)


def independence_table(bases: Sequence[int], n: int) -> bytes:
    """Flag table of independent sets: subsets of some basis.

    Downward closure (subset-OR zeta) of the basis indicator.
    """
    table = np.zeros(1 << n, dtype=np.uint8)
    table[np.fromiter(bases, dtype=np.int64)] = 1
    for e in range(n):
        bit = 1 << e
        halves = table.reshape(-1, 2 * bit)
        halves[:, :bit] |= halves[:, bit:]
    return table.tobytes()


def dependence_table(circuits: Sequence[int], n: int) -> bytes:
    """Flag table of sets containing at least one of the given circuits.

    Upward closure (superset-OR zeta) of the circuit indicator.
    """
    table = np.zeros(1 << n, dtype=np.uint8)
    if len(circuits):
        table[np.fromiter(circuits, dtype=np.int64)] = 1
    for e in range(n):
        bit = 1 << e
        halves = table.reshape(-1, 2 * bit)
        halves[:, bit:] |= halves[:, :bit]
    return table.tobytes()


def rank_table(ind: bytes, n: int) -> bytes:
    """Rank of every subset, given the independence flag table.

    rank(X) = size of the largest independent subset of X, computed as a
    subset-max zeta transform seeded with |X| on independent X.
    """
    flags = np.frombuffer(ind, dtype=np.uint8)
    table = _popcounts(np.arange(1 << n, dtype=np.uint32)) * flags
    for e in range(n):
        bit = 1 << e
        halves = table.reshape(-1, 2 * bit)
        np.maximum(halves[:, bit:], halves[:, :bit], out=halves[:, bit:])
    return table.tobytes()


def circuit_masks(ind: bytes, n: int) -> list[int]:
    """Bitmasks of all circuits: dependent sets whose deletions are independent."""
    flags = np.frombuffer(ind, dtype=np.uint8)
    minimal = 1 - flags
    for e in range(n):
        bit = 1 << e
        upper = minimal.reshape(-1, 2 * bit)[:, bit:]
        upper &= flags.reshape(-1, 2 * bit)[:, :bit]
    return np.nonzero(minimal)[0].tolist()


def maximal_true_sets(table: bytes, n: int) -> list[int]:
    """Bitmasks X with table[X] set and table[X + e] clear for every e not in X."""
    flags = np.frombuffer(table, dtype=np.uint8)
    maximal = flags.copy()
    for e in range(n):
        bit = 1 << e
        lower = maximal.reshape(-1, 2 * bit)[:, :bit]
        lower &= 1 - flags.reshape(-1, 2 * bit)[:, bit:]
    return np.nonzero(maximal)[0].tolist()


def exchange_violation(bases: Sequence[int], n: int) -> Optional[tuple[int, int, int]]:
    """First witness against basis exchange, or None if the axiom holds.

    A witness is (B1, B2, x) with x in B1 - B2 such that no y in B2 - B1
    gives a basis (B1 - x) + y.
    """
    arr = np.fromiter(bases, dtype=np.uint32)
    basis_set = set(int(b) for b in bases)
    full = (1 << n) - 1
    for b1 in (int(b) for b in arr):
        others = b1 ^ full
        for x in range(n):
            xbit = 1 << x
            if not b1 & xbit:
                continue
            stub = b1 ^ xbit
            valid = 0
            rest = others
            while rest:
                ybit = rest & -rest
                rest ^= ybit
                if stub | ybit in basis_set:
                    valid |= ybit
            # B2 violates iff x in B1-B2 (x not in B2) and B2-B1 has no valid y.
            bad = ((arr & np.uint32(xbit)) == 0) & ((arr & ~np.uint32(b1) & np.uint32(valid)) == 0)
            idx = np.nonzero(bad)[0]
            if idx.size:
                return b1, int(arr[idx[0]]), x
    return None
