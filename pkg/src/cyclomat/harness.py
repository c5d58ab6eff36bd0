"""Named verification suites binding the certified claims to executable
checks over the generated family catalog.

Each suite evaluates every claim on every qualifying instance; failures
never abort a run, so a report is a complete census.  All enumeration is
deterministic, which makes reports reproducible byte-for-byte apart from
wall time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import families
from .connectivity import check_flower, classify_flower, lambda_, local_conn
from .constructions import TheoremContradiction, higgs_lift, inflate, truncation
from .cyclic import (
    CyclicOrdering,
    find_cyclic_ordering,
    has_cyclic_property,
    is_t_cyclic_ordering,
    petals_from_cuts,
    theorem1_report,
)
from .kernel import Matroid, SizeCapError, direct_sum, mask_members
from .report import VerificationReport

SUITE_NAMES = ("basics", "theorem1", "oddflower", "evenflower", "lemmas5", "construction", "proposition")
FAMILY_CHOICES = ("wheel", "whirl", "spike", "swirl", "u12sum")
MAX_CONCATENATION_PETALS = 8
ORTHOGONALITY_MAX_N = 16
AXIOMS_MAX_N = 12


@dataclass(frozen=True)
class SuiteSpec:
    """Selects a suite, the families it runs on, and the rank range."""

    suite_name: str
    families: tuple[str, ...] = ()
    r_min: int = 3
    r_max: int = 6
    t: Optional[int] = None

    def __post_init__(self) -> None:
        if self.suite_name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite_name!r}; choose from {SUITE_NAMES}")
        for f in self.families:
            if f not in FAMILY_CHOICES:
                raise ValueError(f"unknown family {f!r}; choose from {FAMILY_CHOICES}")
        if self.r_min > self.r_max:
            raise ValueError("empty rank range")


@dataclass(frozen=True)
class HarnessInstance:
    """One catalog member: a matroid with its declared ordering and t."""

    instance_id: str
    matroid: Matroid
    ordering: CyclicOrdering
    t: int
    parity: str
    bundle: Optional[families.FamilyBundle] = None


@lru_cache(maxsize=None)
def _family_bundle(kind: str, r: int) -> families.FamilyBundle:
    maker = {"wheel": families.wheel, "whirl": families.whirl, "spike": families.spike, "swirl": families.swirl}
    return maker[kind](r)


@lru_cache(maxsize=None)
def u12_sum(copies: int) -> HarnessInstance:
    """Direct sum of k copies of U(1,2): the canonical 2-cyclic matroid."""
    matroid = families.uniform(1, 2)
    for _ in range(copies - 1):
        matroid = direct_sum(matroid, families.uniform(1, 2))
    matroid.label = f"U12sum(k={copies})"
    return HarnessInstance(
        instance_id=matroid.label,
        matroid=matroid,
        ordering=CyclicOrdering(range(2 * copies)),
        t=2,
        parity="even",
    )


def instance_from_bundle(bundle: families.FamilyBundle) -> HarnessInstance:
    return HarnessInstance(
        instance_id=bundle.matroid.label,
        matroid=bundle.matroid,
        ordering=bundle.ordering,
        t=bundle.t,
        parity=bundle.parity,
        bundle=bundle,
    )


_SUITE_DEFAULT_FAMILIES = {
    "basics": ("wheel", "whirl", "spike", "swirl", "u12sum"),
    "theorem1": ("wheel", "whirl", "spike", "swirl"),
    "oddflower": ("wheel", "whirl"),
    "evenflower": ("spike", "swirl"),
    "lemmas5": ("wheel", "whirl", "spike", "swirl"),
    "construction": ("wheel", "whirl", "spike", "swirl"),
    "proposition": ("wheel", "whirl", "spike", "swirl", "u12sum"),
}


def catalog(spec: SuiteSpec) -> list[HarnessInstance]:
    """Instances selected by a suite spec, in deterministic order."""
    chosen = spec.families or _SUITE_DEFAULT_FAMILIES[spec.suite_name]
    instances: list[HarnessInstance] = []
    for kind in chosen:
        if kind == "u12sum":
            for k in range(max(2, spec.r_min), spec.r_max + 1):
                instances.append(u12_sum(k))
            continue
        lo = max(spec.r_min, 2 if kind in ("wheel", "whirl") else 3)
        for r in range(lo, spec.r_max + 1):
            if r > families.MAX_FAMILY_RANK:
                continue
            instances.append(instance_from_bundle(_family_bundle(kind, r)))
    if spec.t is not None:
        instances = [inst for inst in instances if inst.t == spec.t]
    return instances


# -- concatenation enumeration -------------------------------------------------


def concatenation_cuts(
    n: int, min_size: int, max_m: int, positions: Optional[Sequence[int]] = None
) -> Iterable[tuple[int, ...]]:
    """Cut-offset sets defining concatenations with all petals >= min_size."""
    pool = list(positions) if positions is not None else list(range(n))
    for m in range(1, max_m + 1):
        for cuts in combinations(pool, m):
            gaps = [(cuts[(i + 1) % m] - cuts[i]) % n or n for i in range(m)]
            if all(g >= min_size for g in gaps):
                yield cuts


def even_concatenation_cuts(n: int, anchor: int, min_size: int, max_m: int) -> Iterable[tuple[int, ...]]:
    """Even concatenations: petals of even size >= min_size starting at
    odd indices (offsets of the anchor's parity)."""
    return concatenation_cuts(n, max(min_size, 2), max_m, positions=range(anchor % 2, n, 2))


# -- suites ---------------------------------------------------------------------


def _basics(spec: SuiteSpec, report: VerificationReport) -> None:
    for inst in catalog(spec):
        matroid = inst.matroid
        iid = inst.instance_id
        n = matroid.n
        if inst.bundle is not None:
            report.extend(families.validate_family(inst.bundle))
        else:
            verdict = is_t_cyclic_ordering(matroid, inst.ordering, inst.t)
            report.record(iid, "family.ordering_parity", verdict.parity == inst.parity,
                          {"declared": inst.parity, "observed": verdict.parity})
        report.record(iid, "lemma_size.even", n % 2 == 0, {"n": n})
        report.record(iid, "lemma_size.lower_bound", n >= 2 * inst.t - 2, {"n": n, "t": inst.t})
        report.record(iid, "lemma_rank.half", matroid.r * 2 == n and matroid.corank(matroid.ground_set()) * 2 == n,
                      {"rank": matroid.r, "corank": matroid.corank(matroid.ground_set()), "n": n})
        if n <= AXIOMS_MAX_N:
            witness = matroid.exchange_witness()
            report.record(iid, "axioms.exchange", witness is None,
                          None if witness is None else {"B1": list(witness[0]), "B2": list(witness[1]), "x": witness[2]})
        if n <= ORTHOGONALITY_MAX_N:
            bad = None
            for c in matroid.circuit_masks():
                for d in matroid.cocircuit_masks():
                    if (c & d).bit_count() == 1:
                        bad = {"circuit": mask_members(c), "cocircuit": mask_members(d)}
                        break
                if bad:
                    break
            report.record(iid, "orthogonality.no_single_intersection", bad is None, bad)


def _theorem1(spec: SuiteSpec, report: VerificationReport) -> None:
    for inst in catalog(spec):
        if inst.t < 3 or inst.matroid.n < 6 * inst.t - 10:
            continue
        _, rep = theorem1_report(inst.matroid, inst.ordering, inst.t)
        report.extend(rep)


def _oddflower(spec: SuiteSpec, report: VerificationReport) -> None:
    for inst in catalog(spec):
        if inst.parity != "odd" or inst.t % 2 == 0:
            continue
        matroid, ordering, t = inst.matroid, inst.ordering, inst.t
        iid = inst.instance_id
        for cuts in concatenation_cuts(matroid.n, t - 1, MAX_CONCATENATION_PETALS):
            petals = petals_from_cuts(ordering, cuts)
            m = len(petals)
            verdict = classify_flower(matroid, petals, k=t)
            report.record(iid, "oddflower.daisy", verdict.verdict in ("daisy", "degenerate_m_le_3"),
                          {"cuts": list(cuts), "verdict": verdict.verdict})
            if m >= 3:
                values = [local_conn(matroid, petals[i], petals[(i + 1) % m]) for i in range(m)]
                report.record(iid, "oddflower.conn_consecutive", all(v == (t - 1) // 2 for v in values),
                              {"cuts": list(cuts), "values": values})
            if m >= 4:
                bad = []
                for i, j in combinations(range(m), 2):
                    if (j - i) % m in (1, m - 1):
                        continue
                    v = local_conn(matroid, petals[i], petals[j])
                    if not 0 <= v <= (t - 3) // 2:
                        bad.append([i, j, v])
                report.record(iid, "oddflower.conn_nonconsecutive", not bad, {"cuts": list(cuts), "bad": bad})


def _evenflower(spec: SuiteSpec, report: VerificationReport) -> None:
    for inst in catalog(spec):
        if inst.parity != "even" or inst.t % 2:
            continue
        matroid, ordering, t = inst.matroid, inst.ordering, inst.t
        iid = inst.instance_id
        anchors = is_t_cyclic_ordering(matroid, ordering, t).even_anchors
        for anchor in anchors:
            for cuts in even_concatenation_cuts(matroid.n, anchor, t - 2, MAX_CONCATENATION_PETALS):
                petals = petals_from_cuts(ordering, cuts)
                m = len(petals)
                tag = {"anchor": anchor, "cuts": list(cuts)}
                report.record(iid, "evenflower.flower", check_flower(matroid, petals, k=t - 1), tag)
                if m >= 3:
                    values = [local_conn(matroid, petals[i], petals[(i + 1) % m]) for i in range(m)]
                    report.record(iid, "evenflower.conn_consecutive",
                                  all(v == (t - 2) // 2 for v in values), {**tag, "values": values})
                if m >= 4:
                    verdict = classify_flower(matroid, petals, k=t - 1)
                    report.record(iid, "evenflower.dichotomy", verdict.verdict in ("anemone", "daisy"),
                                  {**tag, "verdict": verdict.verdict})
                    if all(len(p) == 2 for p in petals):
                        kind = inst.bundle.family.kind if inst.bundle else None
                        expected = {"spike": "anemone", "swirl": "daisy"}.get(kind)
                        if expected:
                            report.record(iid, "evenflower.pair_petal_class", verdict.verdict == expected,
                                          {**tag, "expected": expected, "verdict": verdict.verdict})
                            p13 = local_conn(matroid, petals[0], petals[2])
                            wanted = 1 if expected == "anemone" else 0
                            report.record(iid, "evenflower.pair_p1_p3", p13 == wanted,
                                          {**tag, "value": p13, "expected": wanted})


def _lemmas5(spec: SuiteSpec, report: VerificationReport) -> None:
    for inst in catalog(spec):
        matroid, ordering, t = inst.matroid, inst.ordering, inst.t
        iid = inst.instance_id
        n = matroid.n
        verdict = is_t_cyclic_ordering(matroid, ordering, t)
        anchors = verdict.odd_anchors if inst.parity == "odd" else verdict.even_anchors
        if not anchors:
            report.record(iid, "lemma5.anchor_available", False, {"parity": inst.parity})
            continue

        if n >= 2 * t:
            for anchor in anchors:
                for k in range((n + 1) // 2):
                    offset = (anchor + 2 * k) % n
                    w = ordering.window_mask_at(offset, t)
                    w_next = ordering.window_mask_at(offset + 1, t)
                    if t % 2:
                        ok = matroid.is_coindependent(w) and matroid.is_independent(w_next)
                    else:
                        ok = matroid.is_independent(w_next) and matroid.is_coindependent(w_next)
                    report.record(iid, "lemma5.window_independence", ok, {"anchor": anchor, "start": offset + 1})

        for anchor in anchors:
            for offset in range(n):
                start_is_odd_index = (offset - anchor) % 2 == 0
                for j in range(1, n // 2 + 1):
                    value = lambda_(matroid, ordering.window_mask_at(offset, j))
                    if t % 2:
                        expected = j if j < t - 1 else t - 1
                    elif j <= t - 1:
                        expected = j
                    elif j % 2:
                        expected = t - 1
                    else:
                        expected = t - 2 if start_is_odd_index else t
                    report.record(iid, "lemma5.lambda_profile", value == expected,
                                  {"anchor": anchor, "start": offset + 1, "size": j,
                                   "value": value, "expected": expected})

        for anchor in anchors:
            if t % 2:
                for offset in range(n):
                    start_is_odd_index = (offset - anchor) % 2 == 0
                    for size in range(t - 1, n - (t - 1) + 1):
                        rank = matroid.rank(ordering.window_mask_at(offset, size))
                        if size % 2 == 0:
                            expected = (size + t - 1) // 2
                        elif start_is_odd_index:
                            expected = (size + t - 2) // 2
                        else:
                            expected = (size + t) // 2
                        report.record(iid, "lemma5.petal_rank", rank == expected,
                                      {"anchor": anchor, "start": offset + 1, "size": size,
                                       "rank": rank, "expected": expected})
            else:
                for offset in range(anchor % 2, n, 2):
                    for size in range(max(t - 2, 2), n - (t - 2) + 1, 2):
                        rank = matroid.rank(ordering.window_mask_at(offset, size))
                        expected = (size + t - 2) // 2
                        report.record(iid, "lemma5.petal_rank", rank == expected,
                                      {"anchor": anchor, "start": offset + 1, "size": size,
                                       "rank": rank, "expected": expected})


def _construction(spec: SuiteSpec, report: VerificationReport) -> None:
    for inst in catalog(spec):
        matroid, ordering, t = inst.matroid, inst.ordering, inst.t
        iid = inst.instance_id
        n = matroid.n

        if n <= 14:
            chain = higgs_lift(matroid) == truncation(matroid.dual()).dual()
            report.record(iid, "construction.dual_square", chain, None)
        try:
            truncation(matroid)
            report.record(iid, "construction.truncation_routes", True, None)
        except TheoremContradiction as exc:
            report.record(iid, "construction.truncation_routes", False, {"error": str(exc)})

        if n < 2 * (t + 2) - 2:
            continue

        truncated = truncation(matroid)
        lifted = higgs_lift(matroid)
        cocirc_t = frozenset(c for c in matroid.cocircuit_masks() if c.bit_count() == t)
        circ_t = frozenset(c for c in matroid.circuit_masks() if c.bit_count() == t)
        for offset in range(n):
            merged = ordering.window_mask_at(offset, t + 2)
            if ordering.window_mask_at(offset, t) in cocirc_t and ordering.window_mask_at(offset + 2, t) in cocirc_t:
                report.record(iid, "construction.cocircuit_merge", truncated.is_cocircuit(merged),
                              {"start": offset + 1})
            if ordering.window_mask_at(offset, t) in circ_t and ordering.window_mask_at(offset + 2, t) in circ_t:
                report.record(iid, "construction.circuit_merge", lifted.is_circuit(merged),
                              {"start": offset + 1})

        try:
            trace = inflate(matroid, ordering, t)
        except TheoremContradiction as exc:
            report.record(iid, "inflate.certified", False, {"error": str(exc)})
            continue
        report.record(iid, "inflate.certified", True, None)
        report.record(iid, "inflate.parity_preserved", trace.parity == inst.parity,
                      {"before": inst.parity, "after": trace.parity})

        if t % 2 == 0:
            anchors = is_t_cyclic_ordering(matroid, ordering, t).even_anchors
            for anchor in anchors:
                for cuts in even_concatenation_cuts(n, anchor, t, MAX_CONCATENATION_PETALS):
                    petals = petals_from_cuts(ordering, cuts)
                    before = classify_flower(matroid, petals, k=t - 1)
                    after_ok = check_flower(trace.output, petals, k=t + 1)
                    after = classify_flower(trace.output, petals, k=t + 1)
                    tag = {"anchor": anchor, "cuts": list(cuts)}
                    report.record(iid, "inflate.flower_order", after_ok, tag)
                    report.record(iid, "inflate.flower_type_preserved", before.verdict == after.verdict,
                                  {**tag, "before": before.verdict, "after": after.verdict})

        if trace.output.n >= 2 * (t + 4) - 2:
            try:
                trace2 = inflate(trace.output, ordering, t + 2)
                report.record(iid, "inflate.iterated", trace2.parity == inst.parity,
                              {"t": t + 4, "parity": trace2.parity})
            except TheoremContradiction as exc:
                report.record(iid, "inflate.iterated", False, {"error": str(exc)})


def _proposition(spec: SuiteSpec, report: VerificationReport) -> None:
    fixed_negatives = [
        (families.uniform(1, 3), 2),
        (families.uniform(2, 4), 2),
    ]
    for inst in catalog(spec):
        matroid, ordering, t = inst.matroid, inst.ordering, inst.t
        if not (t == 2 or matroid.n >= 6 * t - 10):
            continue
        iid = inst.instance_id
        has_prop = has_cyclic_property(matroid, ordering, t)
        cyclic = is_t_cyclic_ordering(matroid, ordering, t).parity != "none"
        report.record(iid, "prop41.supplied_ordering_agrees", has_prop and cyclic,
                      {"property": has_prop, "t_cyclic": cyclic})
        if matroid.n <= 10:
            found_prop = find_cyclic_ordering(matroid, t, mode="property")
            found_cyc = find_cyclic_ordering(matroid, t, mode="t_cyclic")
            report.record(iid, "prop41.search_agrees", (found_prop is not None) == (found_cyc is not None),
                          {"property_found": found_prop is not None, "t_cyclic_found": found_cyc is not None})
    for matroid, t in fixed_negatives:
        found_prop = find_cyclic_ordering(matroid, t, mode="property")
        found_cyc = find_cyclic_ordering(matroid, t, mode="t_cyclic")
        report.record(matroid.label, "prop41.search_agrees",
                      (found_prop is not None) == (found_cyc is not None),
                      {"property_found": found_prop is not None, "t_cyclic_found": found_cyc is not None})


_SUITES = {
    "basics": _basics,
    "theorem1": _theorem1,
    "oddflower": _oddflower,
    "evenflower": _evenflower,
    "lemmas5": _lemmas5,
    "construction": _construction,
    "proposition": _proposition,
}


def run_suite(spec: SuiteSpec) -> VerificationReport:
    """Run one named suite and return its claim-by-claim report."""
    started = time.perf_counter()
    report = VerificationReport(suite_name=spec.suite_name)
    _SUITES[spec.suite_name](spec, report)
    report.wall_time = time.perf_counter() - started
    return report


def run_all(r_min: int = 3, r_max: int = 6) -> list[VerificationReport]:
    return [run_suite(SuiteSpec(name, r_min=r_min, r_max=r_max)) for name in SUITE_NAMES]


def emit_report(report: VerificationReport, format: str = "text") -> str:
    """Render a report as schema-stable JSON or a human-readable table."""
    if format == "json":
        return report.to_json()
    if format == "text":
        return report.to_text()
    raise ValueError(f"unknown format {format!r}")
