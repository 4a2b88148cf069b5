"""Path complexes of cycles and lines, runs, and run placements.

The path complex of a graph has one facet per path on t vertices.  On
the cycle the facets carry the standard labeling F_i = {x_i, ..., x_(i+t-1)}
taken mod n; every proper induced subcollection splits into *runs*,
blocks of consecutive facets, and a run of length s covers s + t - 1
consecutive vertices.  Two runs are genuinely separate exactly when at
least one vertex (equivalently, t facet slots) lies between them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .complexes import Face, SimplicialComplex, complement, connected_components, make_complex


class RunDecompositionError(RuntimeError):
    """A connected component is not a block of consecutive facets.

    Genuine induced subcollections always decompose into runs, so this
    signals a caller bug rather than a data condition.
    """


@dataclass(frozen=True)
class PathFamilySpec:
    """Parameters (kind, n, t) of a path complex of a cycle or a line.

    The derived quotient/remainder (p, d) with n = (t+1)p + d and
    0 <= d <= t drive every closed form downstream.
    """

    kind: str
    n: int
    t: int

    def __post_init__(self) -> None:
        if self.kind not in ("cycle", "line"):
            raise ValueError(f"kind must be 'cycle' or 'line', got {self.kind!r}")
        if not 2 <= self.t <= self.n:
            raise ValueError(f"need 2 <= t <= n, got t={self.t}, n={self.n}")
        if self.kind == "cycle" and self.n < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got n={self.n}")

    @property
    def p(self) -> int:
        return self.n // (self.t + 1)

    @property
    def d(self) -> int:
        return self.n % (self.t + 1)


@dataclass(frozen=True)
class RunSequence:
    """Lengths of a disjoint collection of runs.

    The residues of the lengths mod t+1 decide everything: writing
    s = (t+1)p + d with 0 <= d <= t, only residues d = 1 and d = 2
    contribute homology.  ``aggregates`` returns (P, Q, alpha, beta):
    alpha/beta count the residue-1/residue-2 runs and P/Q total their
    quotients.
    """

    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        lengths = tuple(int(s) for s in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if not lengths:
            raise ValueError("a run sequence needs at least one run")
        if any(s < 1 for s in lengths):
            raise ValueError(f"run lengths must be positive, got {lengths}")

    def residues(self, t: int) -> tuple[tuple[int, int], ...]:
        return tuple(divmod(s, t + 1) for s in self.lengths)

    def aggregates(self, t: int) -> tuple[int, int, int, int]:
        p_total = q_total = alpha = beta = 0
        for p, d in self.residues(t):
            if d == 1:
                alpha += 1
                p_total += p
            elif d == 2:
                beta += 1
                q_total += p
        return p_total, q_total, alpha, beta

    def is_eligible_shaped(self, t: int) -> bool:
        return all(d in (1, 2) for _, d in self.residues(t))


@dataclass(frozen=True)
class RunPlacement:
    """Disjoint runs on the standard labeling, as (start facet, length) pairs."""

    runs: tuple[tuple[int, int], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.runs)

    def run_sequence(self) -> RunSequence:
        return RunSequence(tuple(sorted(self.lengths, reverse=True)))


def build_path_complex(spec: PathFamilySpec) -> SimplicialComplex:
    """The path complex: one facet per t-vertex path of the cycle or line."""
    n, t = spec.n, spec.t
    ambient = tuple(range(1, n + 1))
    if t == n:
        facets = [ambient]
    elif spec.kind == "cycle":
        facets = [
            tuple(sorted((i + k) % n + 1 for k in range(t)))
            for i in range(n)
        ]
    else:
        facets = [tuple(range(i, i + t)) for i in range(1, n - t + 2)]
    return make_complex(ambient, facets)


def _facet_labels(spec: PathFamilySpec) -> dict[Face, int]:
    """Map each facet to its standard label index."""
    n, t = spec.n, spec.t
    if t >= n:
        raise ValueError("standard labeling requires t < n")
    if spec.kind == "cycle":
        return {
            tuple(sorted((i + k) % n + 1 for k in range(t))): i + 1
            for i in range(n)
        }
    return {tuple(range(i, i + t)): i for i in range(1, n - t + 2)}


def run_decomposition(gamma: SimplicialComplex, spec: PathFamilySpec) -> tuple[RunSequence, RunPlacement]:
    """Split a proper induced subcollection into its runs.

    Returns the run lengths sorted descending together with the
    placement (start label, length per run, ascending starts).
    """
    if gamma.is_void:
        raise ValueError("cannot decompose the void complex")
    labels = _facet_labels(spec)
    n = spec.n
    runs = []
    for component in connected_components(gamma):
        idx = set()
        for f in component.facets:
            label = labels.get(f)
            if label is None:
                raise RunDecompositionError(f"facet {f} is not a facet of the path complex")
            idx.add(label)
        s = len(idx)
        if spec.kind == "cycle":
            if s >= n:
                raise RunDecompositionError("subcollection is not proper")
            starts = [a for a in idx if (n if a == 1 else a - 1) not in idx]
            if len(starts) != 1:
                raise RunDecompositionError(f"facet labels {sorted(idx)} do not form one consecutive block")
            start = starts[0]
            block = {(start + off - 1) % n + 1 for off in range(s)}
        else:
            start = min(idx)
            block = set(range(start, start + s))
        if block != idx:
            raise RunDecompositionError(f"facet labels {sorted(idx)} do not form one consecutive block")
        runs.append((start, s))
    runs.sort()
    seq = RunSequence(tuple(sorted((s for _, s in runs), reverse=True)))
    return seq, RunPlacement(tuple(runs))


def vertex_count_of_runs(seq: RunSequence, t: int) -> int:
    """Total vertices covered: each run of length s covers s + t - 1."""
    return sum(s + t - 1 for s in seq.lengths)


def build_run_complement(seq: RunSequence, t: int) -> SimplicialComplex:
    """Complement, within its own vertices, of a disjoint union of runs.

    The runs are realized on fresh consecutive vertex blocks, so the
    result depends only on the run lengths and t.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    facets = []
    offset = 0
    for s in seq.lengths:
        for a in range(s):
            facets.append(tuple(range(offset + a + 1, offset + a + t + 1)))
        offset += s + t - 1
    ambient = tuple(range(1, offset + 1))
    gamma = make_complex(ambient, facets)
    return complement(gamma, ambient)


def enumerate_placements(
    spec: PathFamilySpec,
    constraint: Callable[[RunSequence], bool] | None = None,
) -> Iterator[RunPlacement]:
    """All sets of disjoint runs on the cycle's standard labeling.

    Starts are ascending and pairwise cyclic facet gaps are at least t,
    which is exactly the condition for the union to be an induced
    subcollection.  Each placement is yielded once.  The optional
    constraint filters by run-length multiset before yielding.
    """
    if spec.kind != "cycle":
        raise ValueError("placements are enumerated on cycles only")
    n, t = spec.n, spec.t
    if t >= n:
        raise ValueError("placement enumeration requires t < n")

    def passes(runs: tuple[tuple[int, int], ...]) -> bool:
        if constraint is None:
            return True
        return constraint(RunSequence(tuple(sorted((s for _, s in runs), reverse=True))))

    def extend(runs: tuple[tuple[int, int], ...]) -> Iterator[RunPlacement]:
        first_start = runs[0][0]
        last_start, last_len = runs[-1]
        for b in range(last_start + last_len + t, n + 1):
            # wrap-around gap back to the first run caps the length
            s_max = first_start + n - t - b
            for s in range(1, s_max + 1):
                longer = runs + ((b, s),)
                if passes(longer):
                    yield RunPlacement(longer)
                yield from extend(longer)

    for b1 in range(1, n + 1):
        for s1 in range(1, n - t + 1):
            first = ((b1, s1),)
            if passes(first):
                yield RunPlacement(first)
            yield from extend(first)
