"""Exact reduced simplicial homology over the rationals or a prime field.

Homology dimensions are obtained from ranks of boundary matrices.  Over
characteristic 0 the rank is computed by integer-preserving elimination
(row operations never leave the integers; a Python-bigint fallback kicks
in if entries outgrow machine words), over a prime p by modular
elimination.  Degree -1 is handled explicitly: the irrelevant complex
``{Ø}`` has one-dimensional homology there, every nonempty complex has
none, and the void complex has no homology at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexes import Face, SimplicialComplex, faces_of_dim

HomologyVector = dict[int, int]

# Entries at or above the guard trigger gcd stripping, then the bigint path.
_GUARD = 1 << 31
_STRIP = 1 << 30


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 for the rationals, else a prime field."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF32003 = FieldSpec(32003)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed incidence matrix from k-faces (columns) to (k-1)-faces (rows).

    Column ``c`` holds the boundary of ``cols[c]`` as pairs
    ``(row_index, sign)`` with the alternating-sign rule on the ascending
    vertex order of the face.
    """

    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    columns: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def to_dense(self) -> list[list[int]]:
        m, n = self.shape
        out = [[0] * n for _ in range(m)]
        for c, entries in enumerate(self.columns):
            for r, sign in entries:
                out[r][c] = sign
        return out


def boundary_matrices(delta: SimplicialComplex) -> list[BoundaryMatrix]:
    """Boundary maps of the reduced chain complex, degree 0 up to dim.

    The degree-0 map is the augmentation onto the empty face.  The
    irrelevant complex has the empty face as its only face and yields an
    empty list; the void complex is rejected.
    """
    if delta.is_void:
        raise ValueError("the void complex has no chain complex")
    if delta.is_irrelevant:
        return []
    out = []
    below: list[Face] = faces_of_dim(delta, -1)
    for k in range(delta.dim + 1):
        here = faces_of_dim(delta, k)
        index = {f: i for i, f in enumerate(below)}
        columns = []
        for face in here:
            entries = []
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                entries.append((index[sub], 1 if i % 2 == 0 else -1))
            columns.append(tuple(entries))
        out.append(BoundaryMatrix(tuple(below), tuple(here), tuple(columns)))
        below = here
    return out


def boundary_product(a: BoundaryMatrix, b: BoundaryMatrix) -> dict[tuple[int, int], int]:
    """Sparse product a·b; identically empty for consecutive boundary maps."""
    if a.cols != b.rows:
        raise ValueError("inner face lists do not match")
    acc: dict[tuple[int, int], int] = {}
    for c, entries in enumerate(b.columns):
        for mid, s in entries:
            for r, s2 in a.columns[mid]:
                key = (r, c)
                acc[key] = acc.get(key, 0) + s * s2
    return {k: v for k, v in acc.items() if v}


def matrix_rank(matrix: BoundaryMatrix, field: FieldSpec = QQ) -> int:
    """Exact rank of a boundary matrix over the given field."""
    m, n = matrix.shape
    if m == 0 or n == 0:
        return 0
    dense = np.zeros((m, n), dtype=np.int64)
    for c, entries in enumerate(matrix.columns):
        for r, sign in entries:
            dense[r, c] = sign
    if field.characteristic == 0:
        return _rank_char0(dense)
    return _rank_mod_p(dense, field.characteristic)


def _rank_char0(a: np.ndarray) -> int:
    """Rank over the rationals by integer row elimination.

    Pivot columns are chosen by current sparsity and pivot rows by
    smallest magnitude; rows are cross-multiplied (never divided except
    by their gcd), so every intermediate value is an exact integer.
    Falls back to arbitrary-precision arithmetic when entries approach
    the int64 limit.
    """
    original = a
    a = a.copy()
    m, n = a.shape
    row_active = np.ones(m, dtype=bool)
    col_done = np.zeros(n, dtype=bool)
    col_nnz = np.count_nonzero(a, axis=0)
    rank = 0
    while True:
        candidates = ~col_done & (col_nnz > 0)
        if not candidates.any():
            return rank
        c = int(np.where(candidates, col_nnz, m + 1).argmin())
        rows_nz = np.flatnonzero(row_active & (a[:, c] != 0))
        if rows_nz.size == 0:
            # stale count from retired rows
            col_nnz[c] = 0
            continue
        pr = int(rows_nz[np.argmin(np.abs(a[rows_nz, c]))])
        piv = int(a[pr, c])
        others = rows_nz[rows_nz != pr]
        if others.size:
            block = a[others]
            pivot_row = a[pr]
            biggest = max(int(np.abs(block).max()), int(np.abs(pivot_row).max()))
            if biggest >= _GUARD:
                return _rank_char0_bigint(original)
            old_nnz = np.count_nonzero(block, axis=0)
            block = block * piv - np.outer(block[:, c], pivot_row)
            if np.abs(block).max() >= _STRIP:
                for idx in range(block.shape[0]):
                    row = block[idx]
                    if np.abs(row).max() >= _STRIP:
                        g = int(np.gcd.reduce(np.abs(row)))
                        if g > 1:
                            row //= g
                if np.abs(block).max() >= _GUARD:
                    return _rank_char0_bigint(original)
            col_nnz += np.count_nonzero(block, axis=0) - old_nnz
            a[others] = block
        col_nnz -= a[pr] != 0
        row_active[pr] = False
        col_done[c] = True
        rank += 1
        if rank == m:
            return rank


def _rank_char0_bigint(a: np.ndarray) -> int:
    """Arbitrary-precision fallback for :func:`_rank_char0`; same strategy."""
    rows: list[dict[int, int]] = []
    for i in range(a.shape[0]):
        row = {j: int(v) for j, v in enumerate(a[i]) if v}
        if row:
            rows.append(row)
    rank = 0
    pivoted: set[int] = set()
    while rows:
        counts: dict[int, int] = {}
        for row in rows:
            for j in row:
                counts[j] = counts.get(j, 0) + 1
        live = {j: k for j, k in counts.items() if j not in pivoted}
        if not live:
            return rank
        c = min(live, key=lambda j: (live[j], j))
        holders = [row for row in rows if c in row]
        pivot_row = min(holders, key=lambda row: abs(row[c]))
        piv = pivot_row[c]
        rest = []
        for row in rows:
            if row is pivot_row:
                continue
            f = row.get(c)
            if f is None:
                rest.append(row)
                continue
            new = {}
            for j, v in row.items():
                new[j] = v * piv
            for j, v in pivot_row.items():
                new[j] = new.get(j, 0) - f * v
            new = {j: v for j, v in new.items() if v}
            if new:
                g = math.gcd(*new.values()) if len(new) > 1 else abs(next(iter(new.values())))
                if g > 1:
                    new = {j: v // g for j, v in new.items()}
                rest.append(new)
        rows = rest
        pivoted.add(c)
        rank += 1
    return rank


def _rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) by modular Gaussian elimination."""
    a = np.mod(a, p)
    m, n = a.shape
    rank = 0
    for col in range(n):
        if rank == m:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv], :] = a[[piv, rank], :]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank, col:] = (a[rank, col:] * inv) % p
        below = np.flatnonzero(a[rank + 1:, col])
        if below.size:
            rows = below + rank + 1
            a[rows, col:] = (a[rows, col:] - np.outer(a[rows, col], a[rank, col:])) % p
        rank += 1
    return rank


def reduced_homology_dims(delta: SimplicialComplex, field: FieldSpec = QQ) -> HomologyVector:
    """Dimensions of the nonzero reduced homology groups, as degree -> dim.

    Zero dimensions are omitted, so the void complex yields ``{}`` and
    the irrelevant complex yields ``{-1: 1}``.
    """
    if delta.is_void:
        return {}
    if delta.is_irrelevant:
        return {-1: 1}
    mats = boundary_matrices(delta)
    ranks = [matrix_rank(mat, field) for mat in mats]
    ranks.append(0)
    dims: HomologyVector = {}
    for k, mat in enumerate(mats):
        h = (len(mat.cols) - ranks[k]) - ranks[k + 1]
        if h:
            dims[k] = h
    return dims
