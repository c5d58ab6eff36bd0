"""Generators for the named matroid families, each bundled with its
canonical cyclic ordering and validated at construction.

Wheels are cycle matroids of wheel graphs with elements laid out
spoke/rim alternating, so the identity ordering alternates 3-circuit
(triangle) and 3-cocircuit (triad) windows.  Whirls relax the rim.
Spikes and swirls are realised as column matroids over GF(1009) with
fixed, deterministic coefficients; any realisation passing the defining
circuit/cocircuit checks serves, and the checks are mandatory.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernel
from .cyclic import CyclicOrdering, is_t_cyclic_ordering
from .kernel import ElementSet, LinearRep, Matroid
from .report import VerificationReport

FAMILY_KINDS = ("uniform", "wheel", "whirl", "spike", "swirl")
MAX_FAMILY_RANK = 9


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    r: int
    n: Optional[int] = None  # uniform only

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in ("wheel", "whirl") and not 2 <= self.r <= MAX_FAMILY_RANK:
            raise ValueError(f"{self.kind} rank {self.r} outside 2..{MAX_FAMILY_RANK}")
        if self.kind in ("spike", "swirl") and not 3 <= self.r <= MAX_FAMILY_RANK:
            raise ValueError(f"{self.kind} rank {self.r} outside 3..{MAX_FAMILY_RANK}")


@dataclass(frozen=True)
class FamilyBundle:
    """A generated family member: matroid, canonical ordering, declared
    (t, parity), and for spikes/swirls the leg pairs as position ranges."""

    family: FamilySpec
    matroid: Matroid
    ordering: CyclicOrdering
    t: int
    parity: str
    leg_map: Optional[tuple[tuple[int, int], ...]] = None

    def legs(self) -> tuple[ElementSet, ...]:
        if self.leg_map is None:
            raise ValueError(f"{self.family.kind} has no leg pairs")
        n = self.matroid.n
        return tuple(
            ElementSet.from_members(n, (self.ordering.seq[a], self.ordering.seq[b]))
            for a, b in self.leg_map
        )


def uniform(r: int, n: int) -> Matroid:
    """Uniform matroid: every r-subset of an n-set is a basis."""
    if not 0 <= r <= n <= kernel.MAX_GROUND_SIZE:
        raise ValueError(f"need 0 <= r <= n <= {kernel.MAX_GROUND_SIZE}, got r={r}, n={n}")
    from itertools import combinations

    bases = []
    for combo in combinations(range(n), r):
        mask = 0
        for e in combo:
            mask |= 1 << e
        bases.append(mask)
    return Matroid(n, bases, label=f"U({r},{n})")


def wheel(r: int) -> FamilyBundle:
    """Cycle matroid of the rank-r wheel graph.

    Elements alternate spoke, rim: position 2i is the spoke at rim vertex
    i+1, position 2i+1 the rim edge leaving it.  Every window of three
    elements starting at an even position is a triangle, and the shifted
    window is a triad.
    """
    spec = FamilySpec("wheel", r)
    edges = []
    for i in range(1, r + 1):
        edges.append((0, i))  # spoke at rim vertex i
        edges.append((i, i % r + 1))  # rim edge to the next rim vertex
    matroid = kernel.from_graph(r + 1, edges, label=f"wheel(r={r})")
    bundle = FamilyBundle(
        family=spec,
        matroid=matroid,
        ordering=CyclicOrdering(range(2 * r)),
        t=3,
        parity="odd",
    )
    _require_valid(bundle)
    return bundle


def relax(matroid: Matroid, subset, label: Optional[str] = None) -> Matroid:
    """Circuit-hyperplane relaxation: promote the subset to a basis."""
    mask = matroid._mask(subset)
    if not matroid.is_circuit(mask):
        raise ValueError("relaxation target is not a circuit")
    if matroid.rank(mask) != matroid.r - 1 or matroid.closure(mask).mask != mask:
        raise ValueError("relaxation target is not a hyperplane")
    return Matroid(matroid.n, matroid.bases + (mask,), label=label or f"relax({matroid.label})")


def whirl(r: int) -> FamilyBundle:
    """Rank-r whirl: the wheel with its rim circuit-hyperplane relaxed."""
    spec = FamilySpec("whirl", r)
    base = wheel(r)
    rim = ElementSet.from_members(2 * r, range(1, 2 * r, 2))
    matroid = relax(base.matroid, rim, label=f"whirl(r={r})")
    bundle = FamilyBundle(
        family=spec,
        matroid=matroid,
        ordering=base.ordering,
        t=3,
        parity="odd",
    )
    _require_valid(bundle)
    return bundle


def spike(r: int) -> FamilyBundle:
    """Rank-r spike on leg pairs L_1, ..., L_r: every union of two legs is
    a 4-element circuit and a 4-element cocircuit.

    Realised over GF(1009) with leg vectors e_i and e_i + (1, ..., 1).
    """
    spec = FamilySpec("spike", r)
    p = kernel.DEFAULT_PRIME
    ones = tuple(1 for _ in range(r))
    columns = []
    for i in range(r):
        unit = tuple(1 if j == i else 0 for j in range(r))
        columns.append(unit)
        columns.append(tuple((u + v) % p for u, v in zip(unit, ones)))
    matroid = kernel.from_linear(LinearRep(p, tuple(columns)), label=f"spike(r={r})")
    bundle = FamilyBundle(
        family=spec,
        matroid=matroid,
        ordering=CyclicOrdering(range(2 * r)),
        t=4,
        parity="even",
        leg_map=tuple((2 * i, 2 * i + 1) for i in range(r)),
    )
    _require_valid(bundle)
    return bundle


def swirl(r: int) -> FamilyBundle:
    """Rank-r swirl: leg L_i sits on the line of basis directions i, i+1;
    consecutive leg unions are 4-element circuits and cocircuits.

    Realised over GF(1009) with L_i = {e_i + (2i+4) e_{i+1}, e_i + (2i+5) e_{i+1}}
    (indices mod r); the spanning basis itself is never part of the output.
    """
    spec = FamilySpec("swirl", r)
    p = kernel.DEFAULT_PRIME

    def line_vector(i: int, coeff: int) -> tuple[int, ...]:
        vec = [0] * r
        vec[i] = 1
        vec[(i + 1) % r] = coeff % p
        return tuple(vec)

    columns = []
    for i in range(r):
        columns.append(line_vector(i, 2 * (i + 1) + 2))
        columns.append(line_vector(i, 2 * (i + 1) + 3))
    matroid = kernel.from_linear(LinearRep(p, tuple(columns)), label=f"swirl(r={r})")
    bundle = FamilyBundle(
        family=spec,
        matroid=matroid,
        ordering=CyclicOrdering(range(2 * r)),
        t=4,
        parity="even",
        leg_map=tuple((2 * i, 2 * i + 1) for i in range(r)),
    )
    _require_valid(bundle)
    return bundle


def validate_family(bundle: FamilyBundle) -> VerificationReport:
    """Re-check the defining conditions of a family bundle exhaustively.

    Spikes check every leg pair, swirls every consecutive leg pair,
    wheels and whirls every odd-index window; all bundles check ground
    size, rank, and the declared ordering parity.  Failures carry the
    offending sets as witnesses.
    """
    report = VerificationReport(suite_name="validate_family")
    matroid = bundle.matroid
    instance = matroid.label
    kind = bundle.family.kind
    r = bundle.family.r
    n = matroid.n

    report.record(instance, "family.ground_size", n == 2 * r, {"n": n, "r": r})
    report.record(
        instance,
        "family.rank_half",
        matroid.r == r and 2 * matroid.r == n,
        {"rank": matroid.r, "n": n},
    )
    verdict = is_t_cyclic_ordering(matroid, bundle.ordering, bundle.t)
    report.record(
        instance,
        "family.ordering_parity",
        verdict.parity == bundle.parity,
        {"declared": bundle.parity, "observed": verdict.parity},
    )

    if kind in ("spike", "swirl"):
        legs = bundle.legs()
        if kind == "spike":
            pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
        else:
            pairs = [(i, (i + 1) % r) for i in range(r)]
        for i, j in pairs:
            union = legs[i] | legs[j]
            witness = {"legs": [i + 1, j + 1], "union": list(union)}
            report.record(instance, "family.leg_union_circuit", matroid.is_circuit(union), witness)
            report.record(instance, "family.leg_union_cocircuit", matroid.is_cocircuit(union), witness)
    else:
        for offset in range(0, n, 2):
            tri = bundle.ordering.window_mask_at(offset, 3)
            triad = bundle.ordering.window_mask_at(offset + 1, 3)
            report.record(
                instance,
                "family.window_triangle",
                matroid.is_circuit(tri),
                {"start": offset + 1, "window": list(ElementSet(n, tri))},
            )
            report.record(
                instance,
                "family.window_triad",
                matroid.is_cocircuit(triad),
                {"start": offset + 2, "window": list(ElementSet(n, triad))},
            )
    return report


def _require_valid(bundle: FamilyBundle) -> None:
    report = validate_family(bundle)
    if not report.all_passed:
        first = report.failures[0]
        raise ValueError(
            f"{bundle.matroid.label} failed family validation: {first.claim} ({first.witness})"
        )
