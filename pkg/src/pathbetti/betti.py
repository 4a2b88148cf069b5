"""Graded Betti numbers of path ideals, by two independent routes.

The brute-force route enumerates every vertex subset, keeps the induced
subcollections whose support is the whole subset (the others complement
to cones and contribute nothing), and reads homology dimensions of the
complements off boundary-matrix ranks.  The closed-form route counts
run placements satisfying two linear constraints and adds the explicit
top-degree value.  Either route checks the other.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, complement, make_complex
from .homology import FieldSpec, HomologyVector, QQ, reduced_homology_dims
from .paths import PathFamilySpec, RunSequence, enumerate_placements, vertex_count_of_runs

DEFAULT_MAX_SUBSET_BITS = 22
MAX_SUBSET_BITS_ENV = "PATHBETTI_MAX_SUBSET_BITS"


class OracleCapError(RuntimeError):
    """The subset-enumeration oracle refused an input above its vertex cap."""


def _subset_cap() -> int:
    raw = os.environ.get(MAX_SUBSET_BITS_ENV)
    if raw is None:
        return DEFAULT_MAX_SUBSET_BITS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_SUBSET_BITS_ENV} must be an integer, got {raw!r}") from None


class BettiTable:
    """Sparse table of graded Betti numbers with per-entry provenance.

    Only nonzero entries with homological degree i >= 1 are stored; the
    rank-one entry in degree (0, 0) is implicit.  Absence means zero.
    Equality compares values only, never provenance tags.
    """

    __slots__ = ("_entries", "_methods")

    def __init__(self) -> None:
        self._entries: dict[tuple[int, int], int] = {}
        self._methods: dict[tuple[int, int], str] = {}

    def accumulate(self, i: int, j: int, amount: int, method: str) -> None:
        if amount == 0:
            return
        key = (i, j)
        self._entries[key] = self._entries.get(key, 0) + amount
        self._methods.setdefault(key, method)

    def merge(self, other: "BettiTable") -> None:
        for (i, j), value in other._entries.items():
            self.accumulate(i, j, value, other._methods[(i, j)])

    def value(self, i: int, j: int) -> int:
        return self._entries.get((i, j), 0)

    def method(self, i: int, j: int) -> str | None:
        return self._methods.get((i, j))

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return dict(self._entries)

    def items(self) -> list[tuple[int, int, int, str]]:
        """Entries as (i, j, value, method), sorted by (j, i)."""
        return [
            (i, j, self._entries[(i, j)], self._methods[(i, j)])
            for i, j in sorted(self._entries, key=lambda key: (key[1], key[0]))
        ]

    @property
    def pd(self) -> int:
        """Projective dimension: largest stored homological degree."""
        return max((i for i, _ in self._entries), default=0)

    @property
    def reg(self) -> int:
        """Regularity: largest j - i over stored entries."""
        return max((j - i for i, j in self._entries), default=0)

    def diff(self, other: "BettiTable") -> dict[tuple[int, int], tuple[int, int]]:
        """Entries where the two tables disagree, as (i, j) -> (self, other)."""
        out = {}
        for key in sorted(set(self._entries) | set(other._entries), key=lambda k: (k[1], k[0])):
            a = self._entries.get(key, 0)
            b = other._entries.get(key, 0)
            if a != b:
                out[key] = (a, b)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for i, j, v, _ in self.items())
        return f"BettiTable({{{body}}})"


@dataclass(frozen=True)
class HomologySummary:
    """At most one nonzero reduced homology group: its degree and dimension."""

    nonzero_degree: int | None
    dimension: int

    def __post_init__(self) -> None:
        if self.nonzero_degree is None:
            if self.dimension != 0:
                raise ValueError("a zero summary cannot carry a dimension")
        elif self.dimension < 1:
            raise ValueError("a nonzero summary needs dimension >= 1")

    @classmethod
    def zero(cls) -> "HomologySummary":
        return cls(None, 0)

    def as_vector(self) -> HomologyVector:
        if self.nonzero_degree is None:
            return {}
        return {self.nonzero_degree: self.dimension}


# Complement homology memo, keyed by the induced subcollection compressed
# onto 1..|Y| (order preserving, so an isomorphism) and the characteristic.
_COMPLEMENT_HOMOLOGY_CACHE: dict[tuple, HomologyVector] = {}


def _complement_homology(y_mask: int, facet_masks: list[int], field: FieldSpec) -> HomologyVector:
    bits = [b for b in range(y_mask.bit_length()) if y_mask >> b & 1]
    local = {b: i + 1 for i, b in enumerate(bits)}
    gamma = tuple(sorted(
        tuple(local[b] for b in bits if fm >> b & 1)
        for fm in facet_masks
    ))
    key = (len(bits), gamma, field.characteristic)
    cached = _COMPLEMENT_HOMOLOGY_CACHE.get(key)
    if cached is None:
        ambient = tuple(range(1, len(bits) + 1))
        comp = complement(make_complex(ambient, gamma), ambient)
        cached = reduced_homology_dims(comp, field)
        _COMPLEMENT_HOMOLOGY_CACHE[key] = cached
    return cached


def betti_hochster(
    delta: SimplicialComplex,
    field: FieldSpec = QQ,
    max_subset_bits: int | None = None,
    subset_range: range | None = None,
) -> BettiTable:
    """Graded Betti numbers by enumeration over induced subcollections.

    For every vertex subset Y whose induced subcollection has support
    exactly Y, the reduced homology of the complement within Y goes into
    the table at homological degree (homology degree + 2) and internal
    degree |Y|.  Subsets are streamed as bitmasks; no face lattice is
    stored.  Inputs above the vertex cap (default 22, overridable via
    the PATHBETTI_MAX_SUBSET_BITS environment variable) are refused.

    ``subset_range`` restricts the scan to a sub-interval of the bitmask
    space [0, 2^m); disjoint chunks can be processed independently (or
    concurrently) and combined with :meth:`BettiTable.merge`.
    """
    cap = max_subset_bits if max_subset_bits is not None else _subset_cap()
    verts = delta.ambient
    if len(verts) > cap:
        raise OracleCapError(
            f"{len(verts)} ambient vertices exceeds the subset-enumeration cap of {cap}"
        )
    position = {v: b for b, v in enumerate(verts)}
    facet_masks = []
    for f in delta.facets:
        mask = 0
        for v in f:
            mask |= 1 << position[v]
        facet_masks.append(mask)
    table = BettiTable()
    for y in subset_range if subset_range is not None else range(1 << len(verts)):
        picked = [fm for fm in facet_masks if fm & ~y == 0]
        if not picked:
            continue
        support = 0
        for fm in picked:
            support |= fm
        if support != y:
            continue
        weight = y.bit_count()
        for degree, dim in _complement_homology(y, picked, field).items():
            table.accumulate(degree + 2, weight, dim, "oracle")
    return table


def homology_run_sequence(t: int, seq: RunSequence) -> HomologySummary:
    """Closed-form homology of the complement of a disjoint union of runs.

    Writing each length as (t+1)p + d, any residue d outside {1, 2}
    kills all homology; otherwise the unique nonzero group has dimension
    one and sits in degree 2(P+Q) + 2*beta + alpha - 2.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    if not seq.is_eligible_shaped(t):
        return HomologySummary.zero()
    p_total, q_total, alpha, beta = seq.aggregates(t)
    return HomologySummary(2 * (p_total + q_total) + 2 * beta + alpha - 2, 1)


def homology_cycle_complement(spec: PathFamilySpec) -> HomologySummary:
    """Closed-form homology of the complement of the full cycle path complex.

    With n = (t+1)p + d: dimension t in degree 2p - 2 when d = 0, else
    dimension 1 in degree 2p - 1 (degree -1 for the single-simplex case
    n = t, whose complement is the irrelevant complex).
    """
    if spec.kind != "cycle":
        raise ValueError("full-complement homology is defined for cycles")
    p, d = spec.p, spec.d
    if d == 0:
        return HomologySummary(2 * p - 2, spec.t)
    return HomologySummary(2 * p - 1, 1)


def betti_top_degree(spec: PathFamilySpec) -> tuple[int, int]:
    """The unique nonzero Betti number in internal degree n: (i, value).

    This is the full-complement homology shifted up two degrees:
    (2p, t) when d = 0 and (2p + 1, 1) otherwise.
    """
    if spec.kind != "cycle":
        raise ValueError("the top-degree formula is defined for cycles")
    if spec.d == 0:
        return 2 * spec.p, spec.t
    return 2 * spec.p + 1, 1


def _eligible_pair(t: int, seq: RunSequence) -> tuple[int, int] | None:
    """The (i, j) a placement of this shape contributes to, if any."""
    if not seq.is_eligible_shaped(t):
        return None
    p_total, q_total, alpha, beta = seq.aggregates(t)
    i = 2 * (p_total + q_total) + 2 * beta + alpha
    j = (t + 1) * (p_total + q_total) + t * (alpha + beta) + beta
    assert j == vertex_count_of_runs(seq, t)
    return i, j


@lru_cache(maxsize=None)
def _eligible_histogram(n: int, t: int) -> dict[tuple[int, int], int]:
    spec = PathFamilySpec("cycle", n, t)
    hist: dict[tuple[int, int], int] = {}
    for placement in enumerate_placements(spec):
        pair = _eligible_pair(t, placement.run_sequence())
        if pair is not None:
            hist[pair] = hist.get(pair, 0) + 1
    return hist


def count_eligible(spec: PathFamilySpec, i: int, j: int) -> int:
    """Number of run placements on the cycle hitting the (i, j) constraints.

    Placements count only when every run length has residue 1 or 2 mod
    t+1 and the aggregates satisfy j = (t+1)(P+Q) + t(alpha+beta) + beta
    and i = 2(P+Q) + 2*beta + alpha.  This equals the Betti number in
    bidegree (i, j) for every j < n.
    """
    if spec.kind != "cycle":
        raise ValueError("eligible counting is defined for cycles")
    if j >= spec.n:
        raise ValueError(f"j={j} is not below n={spec.n}; the degree-n value has its own formula")
    if i > j:
        raise ValueError(f"need i <= j, got i={i}, j={j}")
    if spec.t == spec.n:
        return 0
    return _eligible_histogram(spec.n, spec.t).get((i, j), 0)


def nonzero_criterion(spec: PathFamilySpec, i: int, j: int) -> bool:
    """Necessary conditions for a nonzero Betti number in bidegree (i, j), j < n.

    False guarantees the Betti number vanishes; True promises nothing.
    """
    if spec.kind != "cycle":
        raise ValueError("the vanishing criterion is defined for cycles")
    p, d, t = spec.p, spec.d, spec.t
    if j > i * t:
        return False
    if j - i > (t - 1) * p:
        return False
    if d == 0 and not i < 2 * p:
        return False
    if d != 0 and not i <= 2 * p + 1:
        return False
    return True


def betti_closed_cycle(spec: PathFamilySpec) -> BettiTable:
    """Full Betti table of the cycle path ideal by counting placements.

    Degrees below n come from eligible-placement counts (bidegrees ruled
    out by the vanishing criterion are skipped); degree n comes from the
    top-degree formula.
    """
    if spec.kind != "cycle":
        raise ValueError("expected a cycle spec")
    table = BettiTable()
    n, t = spec.n, spec.t
    if t < n:
        i_cap = 2 * spec.p - 1 if spec.d == 0 else 2 * spec.p + 1
        for i in range(1, i_cap + 1):
            for j in range(i, n):
                if not nonzero_criterion(spec, i, j):
                    continue
                count = count_eligible(spec, i, j)
                if count:
                    table.accumulate(i, j, count, "eligible_count")
    i_top, value = betti_top_degree(spec)
    table.accumulate(i_top, n, value, "closed_form")
    return table


def betti_closed_line(spec: PathFamilySpec, embed_cycle_size: int | None = None) -> BettiTable:
    """Full Betti table of the line path ideal by counting placements.

    The line embeds as an induced subcollection of a cycle large enough
    that no placement wraps, so the placement count covers every degree
    including the top one.  Any embedding cycle of at least n + t + 1
    vertices gives the same table.
    """
    if spec.kind != "line":
        raise ValueError("expected a line spec")
    n, t = spec.n, spec.t
    table = BettiTable()
    if t == n:
        table.accumulate(1, n, 1, "closed_form")
        return table
    m = embed_cycle_size if embed_cycle_size is not None else n + t + 1
    if m < n + t + 1:
        raise ValueError(f"embedding cycle needs at least n + t + 1 = {n + t + 1} vertices, got {m}")
    line_facets = n - t + 1
    big = PathFamilySpec("cycle", m, t)

    for placement in enumerate_placements(big):
        if any(b + s - 1 > line_facets for b, s in placement.runs):
            continue
        pair = _eligible_pair(t, placement.run_sequence())
        if pair is not None:
            table.accumulate(pair[0], pair[1], 1, "eligible_count")
    return table


def pd_reg(spec: PathFamilySpec) -> tuple[int, int]:
    """Projective dimension and regularity of the cycle path ideal quotient."""
    if spec.kind != "cycle":
        raise ValueError("the pd/reg formulas are stated for cycles")
    p, d, t = spec.p, spec.d, spec.t
    if d == 0:
        return 2 * p, (t - 1) * p
    return 2 * p + 1, (t - 1) * p + d - 1
