"""Canonical matroid representation and the basic operations on it.

A matroid is stored eagerly as its full basis family, word-encoded: each
basis is an integer bitmask over a ground set {0, ..., n-1} with n <= 20.
All derived data (independence flags, the per-subset rank table, circuit
lists, the dual) is computed exactly from the basis family via the bitset
kernels in :mod:`cyclomat.backend` and cached on the instance.

Matroids can be constructed from a basis list, a circuit list, a matrix
over GF(p), or a graph; all four routes normalise to the same canonical
form, so equality is simply equality of basis families.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

from . import backend

MAX_GROUND_SIZE = 20
MAX_BASIS_COUNT = 2_000_000
AXIOM_CHECK_MAX_N = 12
DEFAULT_PRIME = 1009


class SizeCapError(ValueError):
    """A ground set, basis family, or scan exceeds the supported size."""


SetLike = Union["ElementSet", int, Iterable[int]]


@dataclass(frozen=True, slots=True)
class ElementSet:
    """Subset of {0, ..., universe_size-1}, stored as a bitmask.

    Union, intersection, difference, and complement are constant-time word
    operations.  Binary operations require matching universes.
    """

    universe_size: int
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.universe_size <= MAX_GROUND_SIZE:
            raise SizeCapError(f"universe size {self.universe_size} outside 0..{MAX_GROUND_SIZE}")
        if not 0 <= self.mask < (1 << self.universe_size):
            raise ValueError(f"mask {self.mask:#x} not a subset of a {self.universe_size}-element universe")

    @classmethod
    def from_members(cls, universe_size: int, members: Iterable[int]) -> "ElementSet":
        mask = 0
        for e in members:
            if not 0 <= e < universe_size:
                raise ValueError(f"element {e} outside universe 0..{universe_size - 1}")
            mask |= 1 << e
        return cls(universe_size, mask)

    @classmethod
    def empty(cls, universe_size: int) -> "ElementSet":
        return cls(universe_size, 0)

    @classmethod
    def full(cls, universe_size: int) -> "ElementSet":
        return cls(universe_size, (1 << universe_size) - 1)

    def _check_universe(self, other: "ElementSet") -> None:
        if self.universe_size != other.universe_size:
            raise ValueError(
                f"universe mismatch: {self.universe_size} vs {other.universe_size}"
            )

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check_universe(other)
        return ElementSet(self.universe_size, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check_universe(other)
        return ElementSet(self.universe_size, self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check_universe(other)
        return ElementSet(self.universe_size, self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        return ElementSet(self.universe_size, self.mask ^ ((1 << self.universe_size) - 1))

    def __contains__(self, element: int) -> bool:
        return 0 <= element < self.universe_size and bool(self.mask >> element & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __le__(self, other: "ElementSet") -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"ElementSet({self.universe_size}, {{{', '.join(map(str, self))}}})"


def mask_members(mask: int) -> list[int]:
    """Sorted element list of a bitmask."""
    return [e for e in range(mask.bit_length()) if mask >> e & 1]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class LinearRep:
    """Matrix over GF(p), given as n column vectors of length r."""

    p: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        heights = {len(col) for col in self.columns}
        if len(heights) > 1:
            raise ValueError("columns have differing lengths")

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return len(self.columns[0]) if self.columns else 0


def gfp_rank(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a set of vectors over GF(p) by Gaussian elimination."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


class Matroid:
    """Matroid in canonical form: ground-set size, rank, sorted basis masks.

    Instances are immutable; every operation is a pure function of the
    basis family.  ``bases`` holds bitmasks sorted ascending, which makes
    equality and hashing representation-independent.
    """

    __slots__ = ("n", "r", "bases", "label", "_ind", "_rank_tab", "_circuits", "_dual", "_hash")

    def __init__(self, n: int, bases: Iterable[int], label: str = "derived"):
        if not 0 <= n <= MAX_GROUND_SIZE:
            raise SizeCapError(f"ground set size {n} outside 0..{MAX_GROUND_SIZE}")
        family = sorted(set(int(b) for b in bases))
        if not family:
            raise ValueError("empty basis family")
        if len(family) > MAX_BASIS_COUNT:
            raise SizeCapError(f"basis family of size {len(family)} exceeds cap {MAX_BASIS_COUNT}")
        full = (1 << n) - 1
        if family[-1] > full or family[0] < 0:
            raise ValueError("basis outside the ground set")
        r = family[0].bit_count()
        if any(b.bit_count() != r for b in family):
            raise ValueError("bases have differing cardinalities")
        self.n = n
        self.r = r
        self.bases = tuple(family)
        self.label = label
        self._ind: Optional[bytes] = None
        self._rank_tab: Optional[bytes] = None
        self._circuits: Optional[tuple[int, ...]] = None
        self._dual: Optional["Matroid"] = None
        self._hash: Optional[int] = None

    # -- canonical identity -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.bases))
        return self._hash

    def __repr__(self) -> str:
        return f"Matroid({self.label!r}, n={self.n}, r={self.r}, bases={len(self.bases)})"

    # -- coercion ------------------------------------------------------------

    def ground_set(self) -> ElementSet:
        return ElementSet.full(self.n)

    def element_set(self, members: Iterable[int]) -> ElementSet:
        return ElementSet.from_members(self.n, members)

    def _mask(self, subset: SetLike) -> int:
        if isinstance(subset, ElementSet):
            if subset.universe_size != self.n:
                raise ValueError(f"universe mismatch: set over {subset.universe_size}, matroid over {self.n}")
            return subset.mask
        if isinstance(subset, int):
            if not 0 <= subset < (1 << self.n):
                raise ValueError("mask outside the ground set")
            return subset
        return ElementSet.from_members(self.n, subset).mask

    def _set(self, mask: int) -> ElementSet:
        return ElementSet(self.n, mask)

    # -- cached tables -------------------------------------------------------

    def _ind_table(self) -> bytes:
        if self._ind is None:
            self._ind = backend.independence_table(self.bases, self.n)
        return self._ind

    def _rank_table(self) -> bytes:
        if self._rank_tab is None:
            self._rank_tab = backend.rank_table(self._ind_table(), self.n)
        return self._rank_tab

    # -- rank and closure ----------------------------------------------------

    def rank(self, subset: SetLike = None) -> int:
        """Rank of a subset: size of its largest independent subset."""
        if subset is None:
            return self.r
        return self._rank_table()[self._mask(subset)]

    def corank(self, subset: SetLike) -> int:
        """Rank of the subset in the dual: |X| - r(M) + r(E - X)."""
        mask = self._mask(subset)
        full = (1 << self.n) - 1
        return mask.bit_count() - self.r + self._rank_table()[full ^ mask]

    def is_independent(self, subset: SetLike) -> bool:
        return bool(self._ind_table()[self._mask(subset)])

    def is_coindependent(self, subset: SetLike) -> bool:
        mask = self._mask(subset)
        return self.corank(mask) == mask.bit_count()

    def closure(self, subset: SetLike) -> ElementSet:
        """Elements whose addition leaves the rank of the subset unchanged."""
        mask = self._mask(subset)
        table = self._rank_table()
        rank = table[mask]
        out = mask
        rest = ((1 << self.n) - 1) ^ mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if table[mask | bit] == rank:
                out |= bit
        return self._set(out)

    def coclosure(self, subset: SetLike) -> ElementSet:
        dual_closure = self.dual().closure(self._mask(subset))
        return self._set(dual_closure.mask)

    def spans(self, subset: SetLike) -> bool:
        return self.rank(subset) == self.r

    def loops(self) -> ElementSet:
        union = 0
        for b in self.bases:
            union |= b
        return self._set(((1 << self.n) - 1) ^ union)

    def coloops(self) -> ElementSet:
        inter = (1 << self.n) - 1
        for b in self.bases:
            inter &= b
        return self._set(inter)

    # -- duality, circuits ---------------------------------------------------

    def dual(self) -> "Matroid":
        """Dual matroid: bases are the complements of this matroid's bases."""
        if self._dual is None:
            full = (1 << self.n) - 1
            dual = Matroid(self.n, (full ^ b for b in self.bases), label=f"dual({self.label})")
            dual._dual = self
            self._dual = dual
        return self._dual

    def circuit_masks(self) -> tuple[int, ...]:
        """Bitmasks of all circuits (minimal dependent sets), sorted ascending."""
        if self._circuits is None:
            self._circuits = tuple(backend.circuit_masks(self._ind_table(), self.n))
        return self._circuits

    def circuits(self) -> tuple[ElementSet, ...]:
        return tuple(self._set(c) for c in self.circuit_masks())

    def cocircuit_masks(self) -> tuple[int, ...]:
        return self.dual().circuit_masks()

    def cocircuits(self) -> tuple[ElementSet, ...]:
        return tuple(self._set(c) for c in self.cocircuit_masks())

    def is_circuit(self, subset: SetLike) -> bool:
        mask = self._mask(subset)
        if mask == 0:
            return False
        ind = self._ind_table()
        if ind[mask]:
            return False
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if not ind[mask ^ bit]:
                return False
        return True

    def is_cocircuit(self, subset: SetLike) -> bool:
        return self.dual().is_circuit(self._mask(subset))

    # -- minors ----------------------------------------------------------------

    def minor(self, delete: SetLike = 0, contract: SetLike = 0) -> tuple["Matroid", dict[int, int]]:
        """Delete and contract disjoint subsets.

        Returns the minor on a relabelled ground set {0, ..., m-1} together
        with the old-element -> new-element map.
        """
        d = self._mask(delete)
        c = self._mask(contract)
        if d & c:
            raise ValueError("delete and contract sets overlap")
        full = (1 << self.n) - 1
        keep = full ^ d ^ c
        ind = self._ind_table()
        base_c = 0
        rest = c
        while rest:
            bit = rest & -rest
            rest ^= bit
            if ind[base_c | bit]:
                base_c |= bit
        table = self._rank_table()
        new_rank = table[full ^ d] - table[c]
        old_elements = [e for e in range(self.n) if keep >> e & 1]
        relabel = {old: new for new, old in enumerate(old_elements)}
        if not old_elements:
            warnings.warn("minor removed every element; returning the empty matroid", stacklevel=2)
        new_bases = []
        for combo in combinations(old_elements, new_rank):
            mask = 0
            for e in combo:
                mask |= 1 << e
            if ind[mask | base_c]:
                new_mask = 0
                for e in combo:
                    new_mask |= 1 << relabel[e]
                new_bases.append(new_mask)
        minor = Matroid(len(old_elements), new_bases, label=f"minor({self.label})")
        return minor, relabel

    # -- validation --------------------------------------------------------------

    def validate_axioms(self) -> bool:
        """Exhaustive basis-exchange check.  Capped at n <= 12."""
        if self.n > AXIOM_CHECK_MAX_N:
            raise SizeCapError(f"axiom check capped at n <= {AXIOM_CHECK_MAX_N}, got n = {self.n}")
        return backend.exchange_violation(self.bases, self.n) is None

    def exchange_witness(self) -> Optional[tuple[ElementSet, ElementSet, int]]:
        """Witness (B1, B2, x) violating basis exchange, or None."""
        if self.n > AXIOM_CHECK_MAX_N:
            raise SizeCapError(f"axiom check capped at n <= {AXIOM_CHECK_MAX_N}, got n = {self.n}")
        hit = backend.exchange_violation(self.bases, self.n)
        if hit is None:
            return None
        b1, b2, x = hit
        return self._set(b1), self._set(b2), x


# -- construction routes ----------------------------------------------------


def from_bases(n: int, bases: Iterable[Iterable[int] | int], label: str = "derived") -> Matroid:
    masks = []
    for b in bases:
        masks.append(b if isinstance(b, int) else ElementSet.from_members(n, b).mask)
    return Matroid(n, masks, label=label)


def from_circuits(n: int, circuits: Iterable[Iterable[int] | int], label: str = "derived") -> Matroid:
    """Matroid whose bases are the maximal sets containing no given circuit.

    The circuit family must be an antichain; the maximal circuit-free sets
    must share one cardinality (otherwise the family is not matroidal).
    """
    if not 0 <= n <= MAX_GROUND_SIZE:
        raise SizeCapError(f"ground set size {n} outside 0..{MAX_GROUND_SIZE}")
    masks = []
    for c in circuits:
        masks.append(c if isinstance(c, int) else ElementSet.from_members(n, c).mask)
    for a, b in combinations(masks, 2):
        if a & b in (a, b):
            raise ValueError("circuit family is not an antichain: one member contains another")
    dep = backend.dependence_table(masks, n)
    ind = bytes(1 ^ v for v in dep)
    maximal = backend.maximal_true_sets(ind, n)
    sizes = {m.bit_count() for m in maximal}
    if len(sizes) > 1:
        raise ValueError("circuit family is not matroidal: maximal circuit-free sets differ in size")
    return Matroid(n, maximal, label=label)


def from_linear(rep: LinearRep, label: str = "derived") -> Matroid:
    """Column matroid of a matrix over GF(p)."""
    n = rep.n
    if n > MAX_GROUND_SIZE:
        raise SizeCapError(f"ground set size {n} outside 0..{MAX_GROUND_SIZE}")
    r = gfp_rank(rep.columns, rep.p)
    bases = []
    for combo in combinations(range(n), r):
        if gfp_rank([rep.columns[i] for i in combo], rep.p) == r:
            mask = 0
            for i in combo:
                mask |= 1 << i
            bases.append(mask)
    return Matroid(n, bases, label=label)


def from_graph(vertex_count: int, edges: Sequence[tuple[int, int]], label: str = "derived") -> Matroid:
    """Cycle matroid of a graph; loops and parallel edges are allowed."""
    n = len(edges)
    if n > MAX_GROUND_SIZE:
        raise SizeCapError(f"ground set size {n} outside 0..{MAX_GROUND_SIZE}")
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) not on vertices 0..{vertex_count - 1}")

    def forest_size(edge_indices: Iterable[int]) -> int:
        parent = list(range(vertex_count))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = 0
        for i in edge_indices:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count += 1
        return count

    rank = forest_size(range(n))
    bases = []
    for combo in combinations(range(n), rank):
        if forest_size(combo) == rank:
            mask = 0
            for i in combo:
                mask |= 1 << i
            bases.append(mask)
    return Matroid(n, bases, label=label)


def construct(kind: str, *, label: str = "derived", **fields) -> Matroid:
    """Dispatch on representation kind: bases, circuits, linear, or graph."""
    if kind == "bases":
        return from_bases(fields["n"], fields["bases"], label=label)
    if kind == "circuits":
        return from_circuits(fields["n"], fields["circuits"], label=label)
    if kind == "linear":
        rep = LinearRep(fields["p"], tuple(tuple(col) for col in fields["columns"]))
        return from_linear(rep, label=label)
    if kind == "graph":
        return from_graph(fields["vertices"], [tuple(e) for e in fields["edges"]], label=label)
    raise ValueError(f"unknown representation kind {kind!r}")


def direct_sum(left: Matroid, right: Matroid, label: Optional[str] = None) -> Matroid:
    """Direct sum on the disjoint union of ground sets (right shifted up)."""
    n = left.n + right.n
    bases = [b1 | (b2 << left.n) for b1 in left.bases for b2 in right.bases]
    return Matroid(n, bases, label=label or f"{left.label}+{right.label}")
