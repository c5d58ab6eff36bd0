"""Free extension, truncation, free coextension, Higgs lift, and the
inflation that turns a t-cyclic matroid into a (t+2)-cyclic matroid on
the same ground set.

Truncation is computed two ways (direct basis filter, and contracting
the freely added element) and the routes must agree.  The Higgs lift and
free coextension are implemented directly from their rank
characterisations; agreement with the dual-of-truncation-of-dual chain
is checked by the construction suite rather than assumed.

Inflation verifies its own postcondition: the certified facts about the
output are checked, not trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .connectivity import classify_flower
from .cyclic import CyclicOrdering, is_t_cyclic_ordering
from .kernel import Matroid, MAX_GROUND_SIZE, SizeCapError


class TheoremContradiction(RuntimeError):
    """An inflation postcondition failed; carries the offending check."""


def _masks_of_size(matroid: Matroid, size: int, predicate) -> list[int]:
    out = []
    for combo in combinations(range(matroid.n), size):
        mask = 0
        for e in combo:
            mask |= 1 << e
        if predicate(mask):
            out.append(mask)
    return out


def free_extension(matroid: Matroid) -> Matroid:
    """Add a free element (labelled n) in the current rank."""
    if matroid.r < 1:
        raise ValueError("free extension needs rank at least 1")
    if matroid.n + 1 > MAX_GROUND_SIZE:
        raise SizeCapError(f"extension would exceed the ground-set cap {MAX_GROUND_SIZE}")
    ind = matroid._ind_table()
    new_bit = 1 << matroid.n
    bases = list(matroid.bases)
    bases.extend(m | new_bit for m in _masks_of_size(matroid, matroid.r - 1, lambda m: ind[m]))
    return Matroid(matroid.n + 1, bases, label=f"ext({matroid.label})")


def truncation(matroid: Matroid) -> Matroid:
    """Drop the rank by one: bases are the independent (r-1)-subsets.

    Computed both directly and as contract-the-free-element; the two
    routes must produce the same matroid.
    """
    if matroid.r < 1:
        raise ValueError("truncation needs rank at least 1")
    ind = matroid._ind_table()
    direct = Matroid(
        matroid.n,
        _masks_of_size(matroid, matroid.r - 1, lambda m: ind[m]),
        label=f"trunc({matroid.label})",
    )
    extended = free_extension(matroid)
    via_contract, relabel = extended.minor(contract=1 << matroid.n)
    if via_contract != direct or any(old != new for old, new in relabel.items()):
        raise TheoremContradiction("truncation routes disagree")
    return direct


def free_coextension(matroid: Matroid) -> Matroid:
    """Coextend by a free element g: bases are the old bases plus g,
    together with the spanning (r+1)-subsets of the old ground set."""
    if matroid.n + 1 > MAX_GROUND_SIZE:
        raise SizeCapError(f"coextension would exceed the ground-set cap {MAX_GROUND_SIZE}")
    table = matroid._rank_table()
    new_bit = 1 << matroid.n
    bases = [b | new_bit for b in matroid.bases]
    if matroid.r + 1 <= matroid.n:
        bases.extend(_masks_of_size(matroid, matroid.r + 1, lambda m: table[m] == matroid.r))
    return Matroid(matroid.n + 1, bases, label=f"coext({matroid.label})")


def higgs_lift(matroid: Matroid) -> Matroid:
    """Raise the rank by one: bases are the spanning (r+1)-subsets."""
    if matroid.n - matroid.r < 1:
        raise ValueError("Higgs lift needs corank at least 1")
    table = matroid._rank_table()
    return Matroid(
        matroid.n,
        _masks_of_size(matroid, matroid.r + 1, lambda m: table[m] == matroid.r),
        label=f"lift({matroid.label})",
    )


@dataclass(frozen=True)
class InflationTrace:
    """Record of one inflation step together with its verified evidence.

    The merge witnesses list, per window start (1-based), the (t+2)-sets
    confirmed as cocircuits of the truncation and circuits of the output.
    """

    input: Matroid
    after_truncation: Matroid
    output: Matroid
    t_in: int
    t_out: int
    parity: str
    ordering: CyclicOrdering
    merged_cocircuit_witnesses: tuple[tuple[int, tuple[int, ...]], ...]
    merged_circuit_witnesses: tuple[tuple[int, tuple[int, ...]], ...]


def _even_concatenation_cuts(n: int, anchor: int, min_size: int, max_m: int):
    """Cut sets at anchor-parity offsets with even gaps >= min_size."""
    positions = list(range(anchor % 2, n, 2))
    for m in range(1, max_m + 1):
        for cuts in combinations(positions, m):
            gaps = [(cuts[(i + 1) % m] - cuts[i]) % n or n for i in range(m)]
            if all(g >= min_size for g in gaps):
                yield cuts


def inflate(matroid: Matroid, ordering: CyclicOrdering, t: int, max_petals: int = 8) -> InflationTrace:
    """Truncate then Higgs-lift, certifying the (t+2)-cyclic structure.

    Requires a t-cyclic ordering and n >= 2(t+2) - 2.  Verifies the
    window merges, that the same ordering is (t+2)-cyclic for the output
    with unchanged parity, and (for even t) that petal ranks of even
    concatenations with petals of size >= t grow by exactly one.
    Verification failures raise TheoremContradiction.
    """
    n = matroid.n
    verdict_in = is_t_cyclic_ordering(matroid, ordering, t)
    if verdict_in.parity == "none":
        raise ValueError("ordering is not a t-cyclic ordering of the input")
    if n < 2 * (t + 2) - 2:
        raise ValueError(f"n = {n} below 2(t+2) - 2 = {2 * (t + 2) - 2}")

    truncated = truncation(matroid)
    lifted = higgs_lift(truncated)
    lifted.label = f"inflate({matroid.label})"

    cocirc_t = frozenset(c for c in matroid.cocircuit_masks() if c.bit_count() == t)
    circ_t = frozenset(c for c in matroid.circuit_masks() if c.bit_count() == t)
    merged_cocircs = []
    merged_circs = []
    for offset in range(n):
        merged = ordering.window_mask_at(offset, t + 2)
        window_elems = tuple(ordering.seq[(offset + k) % n] for k in range(t + 2))
        if ordering.window_mask_at(offset, t) in cocirc_t and ordering.window_mask_at(offset + 2, t) in cocirc_t:
            if not truncated.is_cocircuit(merged):
                raise TheoremContradiction(
                    f"window at start {offset + 1} did not merge to a {t + 2}-cocircuit of the truncation"
                )
            merged_cocircs.append((offset + 1, window_elems))
        if ordering.window_mask_at(offset, t) in circ_t and ordering.window_mask_at(offset + 2, t) in circ_t:
            if not lifted.is_circuit(merged):
                raise TheoremContradiction(
                    f"window at start {offset + 1} did not merge to a {t + 2}-circuit of the output"
                )
            merged_circs.append((offset + 1, window_elems))

    verdict_out = is_t_cyclic_ordering(lifted, ordering, t + 2)
    if verdict_out.parity != verdict_in.parity:
        raise TheoremContradiction(
            f"expected a {verdict_in.parity} {t + 2}-cyclic ordering of the output, got {verdict_out.parity}"
        )

    if t % 2 == 0:
        for anchor in verdict_in.even_anchors:
            for cuts in _even_concatenation_cuts(n, anchor, max(t, 2), max_petals):
                for i, start in enumerate(cuts):
                    size = (cuts[(i + 1) % len(cuts)] - start) % n or n
                    petal = ordering.window_mask_at(start, size)
                    if lifted.rank(petal) != matroid.rank(petal) + 1:
                        raise TheoremContradiction(
                            f"petal at offset {start} of size {size} did not gain exactly one rank"
                        )

    return InflationTrace(
        input=matroid,
        after_truncation=truncated,
        output=lifted,
        t_in=t,
        t_out=t + 2,
        parity=verdict_out.parity,
        ordering=ordering,
        merged_cocircuit_witnesses=tuple(merged_cocircs),
        merged_circuit_witnesses=tuple(merged_circs),
    )
