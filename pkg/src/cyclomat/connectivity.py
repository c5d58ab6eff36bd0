"""Connectivity function, local connectivity, exact k-separations, and
flower verification and classification.

The subset scan over petal unions is the ground truth for the
anemone/daisy classification; the local-connectivity shortcut is an
optimisation that must agree with it (and falls back to the scan when
inconclusive).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .kernel import ElementSet, Matroid, SetLike, SizeCapError

CLASSIFY_MAX_PETALS = 16


def lambda_(matroid: Matroid, subset: SetLike) -> int:
    """Connectivity function: r(X) + r(E - X) - r(M)."""
    mask = matroid._mask(subset)
    table = matroid._rank_table()
    full = (1 << matroid.n) - 1
    return table[mask] + table[full ^ mask] - matroid.r


def local_conn(matroid: Matroid, left: SetLike, right: SetLike) -> int:
    """Local connectivity of two disjoint sets: r(X) + r(Y) - r(X + Y)."""
    x = matroid._mask(left)
    y = matroid._mask(right)
    if x & y:
        raise ValueError("local connectivity arguments must be disjoint")
    table = matroid._rank_table()
    return table[x] + table[y] - table[x | y]


def is_exact_k_separating(matroid: Matroid, subset: SetLike, k: int) -> bool:
    return lambda_(matroid, subset) == k - 1


@dataclass(frozen=True)
class Flower:
    """Ordered partition of the ground set into nonempty petals."""

    petals: tuple[ElementSet, ...]
    k: int

    def __post_init__(self) -> None:
        _check_partition(self.petals)


def _check_partition(petals: Sequence[ElementSet]) -> int:
    if not petals:
        raise ValueError("no petals")
    n = petals[0].universe_size
    union = 0
    total = 0
    for p in petals:
        if p.universe_size != n:
            raise ValueError("petals over differing universes")
        if not p:
            raise ValueError("empty petal")
        union |= p.mask
        total += len(p)
    if union != (1 << n) - 1 or total != n:
        raise ValueError("petals do not partition the ground set")
    return n


def check_flower(matroid: Matroid, petals: Sequence[ElementSet], k: int) -> bool:
    """Flower test: every petal, and for three or more petals every
    consecutive petal pair, is exactly k-separating.

    A single-petal partition is accepted outright; a two-petal partition
    carries no union condition.
    """
    if _check_partition(petals) != matroid.n:
        raise ValueError("petals do not match the matroid's ground set")
    m = len(petals)
    if m == 1:
        return True
    for p in petals:
        if lambda_(matroid, p) != k - 1:
            return False
    if m >= 3:
        for i in range(m):
            union = petals[i] | petals[(i + 1) % m]
            if lambda_(matroid, union) != k - 1:
                return False
    return True


@dataclass(frozen=True)
class FlowerClass:
    """Classification verdict plus (petal-index-set, lambda) witnesses."""

    verdict: str  # anemone | daisy | degenerate_m_le_3 | not_a_flower
    evidence: tuple[tuple[tuple[int, ...], int], ...] = ()


def _is_cyclic_arc(indices: tuple[int, ...], m: int) -> bool:
    chosen = set(indices)
    boundaries = sum(1 for i in chosen if (i + 1) % m not in chosen)
    return boundaries == 1


def classify_flower(
    matroid: Matroid, petals: Sequence[ElementSet], k: int, method: str = "scan"
) -> FlowerClass:
    """Anemone/daisy classification by scanning all proper petal unions.

    A union is "exact" when its lambda equals k-1.  Anemone: every proper
    union is exact.  Daisy: exactly the cyclically consecutive index sets
    are.  With m <= 3 the two notions coincide and the verdict says so.
    ``method="shortcut"`` tries the local-connectivity criterion first and
    falls back to the scan when it does not apply.
    """
    m = len(petals)
    if m > CLASSIFY_MAX_PETALS:
        raise SizeCapError(f"classification capped at {CLASSIFY_MAX_PETALS} petals, got {m}")
    if method not in ("scan", "shortcut"):
        raise ValueError(f"unknown method {method!r}")
    if not check_flower(matroid, petals, k):
        bad = []
        for idx in range(m):
            value = lambda_(matroid, petals[idx])
            if value != k - 1:
                bad.append(((idx,), value))
        if m >= 3:
            for idx in range(m):
                union = petals[idx] | petals[(idx + 1) % m]
                value = lambda_(matroid, union)
                if value != k - 1:
                    bad.append(((idx, (idx + 1) % m), value))
        return FlowerClass("not_a_flower", tuple(bad[:8]))

    if method == "shortcut" and m >= 4:
        conns = [local_conn(matroid, petals[i], petals[(i + 1) % m]) for i in range(m)]
        if len(set(conns)) == 1:
            c = conns[0]
            for i, j in combinations(range(m), 2):
                if (j - i) % m in (1, m - 1):
                    continue
                if local_conn(matroid, petals[i], petals[j]) != c:
                    return FlowerClass("daisy", (((i, j), local_conn(matroid, petals[i], petals[j])),))
        # inconclusive; fall through to the scan

    exact_nonarcs: list[tuple[tuple[int, ...], int]] = []
    offenders: list[tuple[tuple[int, ...], int]] = []
    arcs_only = True
    all_exact = True
    for size in range(1, m):
        for indices in combinations(range(m), size):
            union = petals[indices[0]]
            for i in indices[1:]:
                union = union | petals[i]
            value = lambda_(matroid, union)
            exact = value == k - 1
            arc = _is_cyclic_arc(indices, m)
            if not exact:
                all_exact = False
                if arc:
                    arcs_only = False  # an arc union failing exactness
                offenders.append((indices, value))
            elif not arc:
                exact_nonarcs.append((indices, value))  # exact non-arc union: rules out daisy

    if m <= 3:
        verdict = "degenerate_m_le_3" if all_exact else "not_a_flower"
        return FlowerClass(verdict, tuple(offenders[:8]))
    if all_exact:
        return FlowerClass("anemone")
    if arcs_only and not exact_nonarcs:
        return FlowerClass("daisy", tuple(offenders[:8]))
    # Mixed pattern: contradicts the anemone/daisy dichotomy for genuine flowers.
    return FlowerClass("not_a_flower", tuple((offenders + exact_nonarcs)[:8]))
