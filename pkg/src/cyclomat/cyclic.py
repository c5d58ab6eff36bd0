"""Cyclic orderings, window predicates, ordering search, and the
window-structure certificate.

Positions are stored 0-based; the literature's 1-based index i maps to
offset i-1.  Because canonicalisation (rotate element 0 to the front,
then fix the direction) may rotate by an odd amount, parity-sensitive
predicates try every admissible assignment of index 1 to an offset (the
"anchor") and report which ones work.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .kernel import ElementSet, Matroid, SizeCapError, mask_members
from .report import VerificationReport

SEARCH_MAX_N = 16


@dataclass(frozen=True)
class CyclicOrdering:
    """Cyclic permutation of {0, ..., n-1} in canonical rotation/direction form.

    The stored sequence is rotated so position 0 holds element 0 and, for
    n >= 3, reflected so seq[1] < seq[n-1].  Two input sequences describing
    the same cyclic object (up to rotation and reversal) therefore compare
    equal.
    """

    seq: tuple[int, ...]

    def __init__(self, seq: Sequence[int]):
        items = list(seq)
        n = len(items)
        if n == 0:
            raise ValueError("empty ordering")
        if sorted(items) != list(range(n)):
            raise ValueError("sequence is not a permutation of 0..n-1")
        pivot = items.index(0)
        items = items[pivot:] + items[:pivot]
        if n >= 3 and items[1] > items[-1]:
            items = [items[0]] + items[:0:-1]
        object.__setattr__(self, "seq", tuple(items))

    @property
    def n(self) -> int:
        return len(self.seq)

    def window(self, start: int, length: int) -> ElementSet:
        """Elements at 1-based positions start, ..., start+length-1 (wrapping)."""
        if not 1 <= length <= self.n:
            raise ValueError(f"window length {length} outside 1..{self.n}")
        return ElementSet(self.n, self.window_mask_at(start - 1, length))

    def window_mask_at(self, offset: int, length: int) -> int:
        mask = 0
        for k in range(length):
            mask |= 1 << self.seq[(offset + k) % self.n]
        return mask

    def __repr__(self) -> str:
        return f"CyclicOrdering({list(self.seq)})"


def window(ordering: CyclicOrdering, start: int, length: int) -> ElementSet:
    """Module-level alias for :meth:`CyclicOrdering.window`."""
    return ordering.window(start, length)


def petals_from_cuts(ordering: CyclicOrdering, cuts: Sequence[int]) -> tuple[ElementSet, ...]:
    """Concatenation petals: runs between consecutive cut offsets (0-based)."""
    n = ordering.n
    cut_list = sorted(set(c % n for c in cuts))
    if not cut_list:
        raise ValueError("need at least one cut")
    petals = []
    for i, start in enumerate(cut_list):
        end = cut_list[(i + 1) % len(cut_list)]
        size = (end - start) % n or n
        petals.append(ElementSet(n, ordering.window_mask_at(start, size)))
    return tuple(petals)


def petals_from_sizes(
    ordering: CyclicOrdering, sizes: Sequence[int], start_offset: int = 0
) -> tuple[ElementSet, ...]:
    if sum(sizes) != ordering.n:
        raise ValueError(f"petal sizes sum to {sum(sizes)}, ground set has {ordering.n}")
    if any(s < 1 for s in sizes):
        raise ValueError("petal sizes must be positive")
    cuts = []
    offset = start_offset
    for s in sizes:
        cuts.append(offset)
        offset += s
    return petals_from_cuts(ordering, cuts)


def _size_filtered(masks: Sequence[int], size: int) -> list[int]:
    return [m for m in masks if m.bit_count() == size]


def has_cyclic_property(matroid: Matroid, ordering: CyclicOrdering, t: int) -> bool:
    """Whether every t-1 consecutive elements lie in a t-circuit and a t-cocircuit."""
    n = matroid.n
    if ordering.n != n:
        raise ValueError("ordering and matroid ground sets differ")
    if not 2 <= t <= n - 1:
        raise ValueError(f"t = {t} outside 2..{n - 1}")
    circs = _size_filtered(matroid.circuit_masks(), t)
    cocircs = _size_filtered(matroid.cocircuit_masks(), t)
    if not circs or not cocircs:
        return False
    for offset in range(n):
        w = ordering.window_mask_at(offset, t - 1)
        if not any(c & w == w for c in circs):
            return False
        if not any(c & w == w for c in cocircs):
            return False
    return True


@dataclass(frozen=True)
class ParityVerdict:
    """Outcome of the t-cyclic ordering test.

    ``parity`` is "odd", "even", or "none".  ``anchor`` is the 0-based
    offset playing the role of index 1 for the reported parity.  When an
    ordering satisfies both clauses, even is reported and ``both`` is set.
    """

    parity: str
    anchor: Optional[int]
    odd_anchors: tuple[int, ...] = ()
    even_anchors: tuple[int, ...] = ()
    note: Optional[str] = None

    @property
    def both(self) -> bool:
        return bool(self.odd_anchors) and bool(self.even_anchors)


def is_t_cyclic_ordering(matroid: Matroid, ordering: CyclicOrdering, t: int) -> ParityVerdict:
    """Classify an ordering as odd, even, or not t-cyclic.

    Odd: every window at an odd index is a t-circuit and its +1 shift a
    t-cocircuit.  Even: every such window is simultaneously a t-circuit
    and a t-cocircuit.
    """
    n = matroid.n
    if ordering.n != n:
        raise ValueError("ordering and matroid ground sets differ")
    if t < 1:
        raise ValueError(f"t = {t} must be positive")
    if n < t + 1:
        return ParityVerdict("none", None, note=f"n = {n} < t + 1 = {t + 1}")
    circs = frozenset(_size_filtered(matroid.circuit_masks(), t))
    cocircs = frozenset(_size_filtered(matroid.cocircuit_masks(), t))
    starts = (n + 1) // 2  # number of odd indices in 1..n
    anchors = range(2) if n % 2 == 0 else range(n)
    odd_anchors = []
    even_anchors = []
    for anchor in anchors:
        odd_ok = True
        even_ok = True
        for k in range(starts):
            offset = (anchor + 2 * k) % n
            w = ordering.window_mask_at(offset, t)
            w_next = ordering.window_mask_at(offset + 1, t)
            if not (w in circs and w_next in cocircs):
                odd_ok = False
            if not (w in circs and w in cocircs):
                even_ok = False
            if not odd_ok and not even_ok:
                break
        if odd_ok:
            odd_anchors.append(anchor)
        if even_ok:
            even_anchors.append(anchor)
    if even_anchors:
        note = "both odd and even clauses hold" if odd_anchors else None
        return ParityVerdict("even", even_anchors[0], tuple(odd_anchors), tuple(even_anchors), note)
    if odd_anchors:
        return ParityVerdict("odd", odd_anchors[0], tuple(odd_anchors), ())
    return ParityVerdict("none", None)


def _search_ordering(
    n: int,
    t: int,
    circs: list[int],
    cocircs: list[int],
    mode: str,
    clause: Optional[str],
    anchor: int,
) -> Optional[list[int]]:
    """Backtracking over positions with element 0 pinned at position 0.

    Prunes on the newest fully-determined non-wrapping window; wrapping
    windows are left to the caller's final recheck.  The canonical
    direction (seq[1] < seq[n-1]) is enforced at the last position.
    """
    seq = [0] * n
    used = [False] * n
    used[0] = True
    circ_set = frozenset(circs)
    cocirc_set = frozenset(cocircs)

    def mask_of(start: int, length: int) -> int:
        m = 0
        for k in range(start, start + length):
            m |= 1 << seq[k]
        return m

    def admissible(pos: int) -> bool:
        if mode == "property":
            start = pos - (t - 2)
            if start >= 0:
                w = mask_of(start, t - 1)
                if not any(c & w == w for c in circ_set):
                    return False
                if not any(c & w == w for c in cocirc_set):
                    return False
            return True
        # t-cyclic pruning on completed odd-index windows.
        start = pos - (t - 1)
        if start >= 0 and start % 2 == anchor % 2:
            w = mask_of(start, t)
            if clause == "even":
                if w not in circ_set or w not in cocirc_set:
                    return False
            else:
                if w not in circ_set:
                    return False
        if clause == "odd":
            shift_start = pos - t
            if shift_start >= 0 and shift_start % 2 == anchor % 2:
                w = mask_of(shift_start + 1, t)
                if w not in cocirc_set:
                    return False
        return True

    def extend(pos: int) -> Optional[list[int]]:
        if pos == n:
            return list(seq)
        for cand in range(1, n):
            if used[cand]:
                continue
            if pos == n - 1 and n >= 3 and cand < seq[1]:
                continue
            seq[pos] = cand
            used[cand] = True
            if admissible(pos):
                hit = extend(pos + 1)
                if hit is not None:
                    return hit
            used[cand] = False
        return None

    return extend(1)


def find_cyclic_ordering(matroid: Matroid, t: int, mode: str = "t_cyclic") -> Optional[CyclicOrdering]:
    """Search for an ordering with the requested property; None if none exists.

    Mode "property" looks for a cyclic (t-1, t)-ordering, mode "t_cyclic"
    for a t-cyclic ordering of either parity.  Necessary-condition
    prechecks (even ground set, rank = n/2, n >= 2t-2) are applied before
    searching whenever they are known to hold for a match: always in
    t_cyclic mode, and in property mode when t = 2 or n >= 6t - 10.
    """
    n = matroid.n
    if n > SEARCH_MAX_N:
        raise SizeCapError(f"ordering search capped at n <= {SEARCH_MAX_N}, got n = {n}")
    if mode not in ("property", "t_cyclic"):
        raise ValueError(f"unknown search mode {mode!r}")
    if mode == "property" and not 2 <= t <= n - 1:
        raise ValueError(f"t = {t} outside 2..{n - 1}")
    if t < 1:
        raise ValueError(f"t = {t} must be positive")

    precheck = mode == "t_cyclic" or t == 2 or n >= 6 * t - 10
    if mode == "t_cyclic" and n < t + 1:
        return None
    if precheck:
        if n % 2 or matroid.r * 2 != n or n < 2 * t - 2:
            return None

    circs = _size_filtered(matroid.circuit_masks(), t)
    cocircs = _size_filtered(matroid.cocircuit_masks(), t)
    if not circs or not cocircs:
        return None

    if mode == "property":
        hit = _search_ordering(n, t, circs, cocircs, mode, None, 0)
        if hit is not None:
            ordering = CyclicOrdering(hit)
            if has_cyclic_property(matroid, ordering, t):
                return ordering
        return None

    for clause in ("even", "odd"):
        for anchor in (0, 1):
            hit = _search_ordering(n, t, circs, cocircs, mode, clause, anchor)
            if hit is not None:
                ordering = CyclicOrdering(hit)
                if is_t_cyclic_ordering(matroid, ordering, t).parity != "none":
                    return ordering
    return None


@dataclass(frozen=True)
class WindowRecord:
    """Unique t-circuit/t-cocircuit over one (t-1)-window, with the extra elements."""

    start: int  # 1-based index of the window's first position
    base_window: tuple[int, ...]
    circuit: Optional[tuple[int, ...]]
    circuit_extra: Optional[int]
    cocircuit: Optional[tuple[int, ...]]
    cocircuit_extra: Optional[int]


@dataclass(frozen=True)
class WindowCertificate:
    case: str  # "I" for odd t, "II" for even t
    circuit_window_parity: Optional[int]  # offset parity (mod 2) of the t-windows that are circuits
    windows: tuple[WindowRecord, ...]


def theorem1_report(
    matroid: Matroid, ordering: CyclicOrdering, t: int
) -> tuple[WindowCertificate, VerificationReport]:
    """Certify the forced arrangement of t-circuits/t-cocircuits in a
    cyclic (t-1, t)-ordering on a large ground set.

    Requires t >= 3 and n >= 6t - 10 (refused otherwise) plus the cyclic
    (t-1, t)-property itself.  Any violation found is recorded in the
    report rather than raised: it would contradict the certified theorem.
    """
    started = time.perf_counter()
    n = matroid.n
    if t < 3:
        raise ValueError(f"t = {t} below 3")
    if n < 6 * t - 10:
        raise ValueError(f"n = {n} below the hypothesis bound 6t - 10 = {6 * t - 10}")
    if not has_cyclic_property(matroid, ordering, t):
        raise ValueError("ordering lacks the cyclic (t-1, t)-property")

    report = VerificationReport(suite_name="theorem1_report")
    instance = matroid.label
    report.record(instance, "thm1.n_even", n % 2 == 0, None if n % 2 == 0 else {"n": n})

    circs = _size_filtered(matroid.circuit_masks(), t)
    cocircs = _size_filtered(matroid.cocircuit_masks(), t)
    records = []
    for offset in range(n):
        base = ordering.window_mask_at(offset, t - 1)
        c_hits = [c for c in circs if c & base == base]
        d_hits = [c for c in cocircs if c & base == base]
        report.record(
            instance,
            "thm1.window_circuit_unique",
            len(c_hits) == 1,
            {"start": offset + 1, "circuits": [mask_members(c) for c in c_hits]},
        )
        report.record(
            instance,
            "thm1.window_cocircuit_unique",
            len(d_hits) == 1,
            {"start": offset + 1, "cocircuits": [mask_members(c) for c in d_hits]},
        )
        circuit = tuple(mask_members(c_hits[0])) if len(c_hits) == 1 else None
        cocircuit = tuple(mask_members(d_hits[0])) if len(d_hits) == 1 else None
        records.append(
            WindowRecord(
                start=offset + 1,
                base_window=tuple(ordering.seq[(offset + k) % n] for k in range(t - 1)),
                circuit=circuit,
                circuit_extra=mask_members(c_hits[0] ^ base)[0] if len(c_hits) == 1 else None,
                cocircuit=cocircuit,
                cocircuit_extra=mask_members(d_hits[0] ^ base)[0] if len(d_hits) == 1 else None,
            )
        )

    circ_set = frozenset(circs)
    cocirc_set = frozenset(cocircs)
    full_windows = [ordering.window_mask_at(o, t) for o in range(n)]
    is_circ = [w in circ_set for w in full_windows]
    is_cocirc = [w in cocirc_set for w in full_windows]

    case = "I" if t % 2 else "II"
    for offset in range(n):
        nxt = (offset + 1) % n
        if case == "I":
            report.record(
                instance,
                "thm1.caseI.circuit_xor_cocircuit",
                is_circ[offset] != is_cocirc[offset],
                {"start": offset + 1, "circuit": is_circ[offset], "cocircuit": is_cocirc[offset]},
            )
            report.record(
                instance,
                "thm1.caseI.circuit_iff_next_cocircuit",
                is_circ[offset] == is_cocirc[nxt],
                {"start": offset + 1},
            )
        else:
            report.record(
                instance,
                "thm1.caseII.one_of_two_is_circuit",
                is_circ[offset] != is_circ[nxt],
                {"start": offset + 1},
            )
            report.record(
                instance,
                "thm1.caseII.circuit_iff_cocircuit",
                is_circ[offset] == is_cocirc[offset],
                {"start": offset + 1},
            )

    circuit_offsets = {o for o in range(n) if is_circ[o]}
    parity: Optional[int] = None
    for p in (0, 1):
        if circuit_offsets == {o for o in range(n) if o % 2 == p}:
            parity = p
    report.record(
        instance,
        "thm1.mod2_parity_class",
        parity is not None,
        {"circuit_window_starts": sorted(o + 1 for o in circuit_offsets)},
    )

    report.wall_time = time.perf_counter() - started
    certificate = WindowCertificate(case=case, circuit_window_parity=parity, windows=tuple(records))
    return certificate, report
