"""Exact integer linear algebra on sparse matrices.

Smith normal form works over Python integers; rank modulo a prime runs a
sparse elimination with vectorized row operations.  The sparse triplet
text format is::

    <rows> <cols> <nnz>
    <row> <col> <value>      (one line per nonzero, 0-based indices)
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
from sympy import isprime


@dataclass(frozen=True)
class SparseIntMatrix:
    """Coordinate-format integer matrix; sorted by (row, col), no zeros stored.

    Values are kept as int64 when they fit and as an object array of Python
    integers otherwise.
    """

    nrows: int
    ncols: int
    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray

    @classmethod
    def from_coo(cls, nrows: int, ncols: int, rows, cols, vals) -> "SparseIntMatrix":
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = np.asarray(vals)
        if vals.dtype == object or vals.dtype.kind not in "iu":
            as_int = [int(v) for v in vals.tolist()]
            fits = all(abs(v) < 2**62 for v in as_int)
            vals = np.array(as_int, dtype=np.int64 if fits else object)
        else:
            vals = vals.astype(np.int64)
        if len(rows) and (rows.min() < 0 or rows.max() >= nrows or cols.min() < 0 or cols.max() >= ncols):
            raise IndexError("matrix entry out of range")
        if len(rows) == 0:
            empty = np.zeros(0, dtype=np.int64)
            return cls(nrows, ncols, empty, empty.copy(), np.zeros(0, dtype=vals.dtype))
        key = rows * ncols + cols
        order = np.argsort(key, kind="stable")
        key, vals = key[order], vals[order]
        uniq, start = np.unique(key, return_index=True)
        if vals.dtype == object:
            summed = np.array([sum(vals[a:b]) for a, b in zip(start, list(start[1:]) + [len(vals)])], dtype=object)
        else:
            summed = np.add.reduceat(vals, start)
        keep = summed != 0
        uniq, summed = uniq[keep], summed[keep]
        return cls(nrows, ncols, uniq // ncols, uniq % ncols, summed)

    @classmethod
    def from_dict(cls, nrows: int, ncols: int, entries: dict[tuple[int, int], int]) -> "SparseIntMatrix":
        items = list(entries.items())
        return cls.from_coo(nrows, ncols, [k[0] for k, _ in items], [k[1] for k, _ in items],
                            np.array([v for _, v in items], dtype=object))

    @classmethod
    def from_dense(cls, a: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        a = [list(r) for r in a]
        nrows = len(a)
        ncols = len(a[0]) if a else 0
        entries = {(i, j): int(v) for i, r in enumerate(a) for j, v in enumerate(r) if v}
        return cls.from_dict(nrows, ncols, entries)

    @property
    def nnz(self) -> int:
        return len(self.vals)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def to_dict(self) -> dict[tuple[int, int], int]:
        return {(int(r), int(c)): int(v) for r, c, v in zip(self.rows, self.cols, self.vals)}

    def to_dense(self) -> list[list[int]]:
        a = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in zip(self.rows, self.cols, self.vals):
            a[int(r)][int(c)] = int(v)
        return a

    def row_lists(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [dict() for _ in range(self.nrows)]
        for r, c, v in zip(self.rows.tolist(), self.cols.tolist(), self.vals.tolist()):
            out[r][c] = int(v)
        return out

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix.from_coo(self.ncols, self.nrows, self.cols, self.rows, self.vals)


def format_triplets(m: SparseIntMatrix) -> str:
    lines = [f"{m.nrows} {m.ncols} {m.nnz}"]
    lines += [f"{int(r)} {int(c)} {int(v)}" for r, c, v in zip(m.rows, m.cols, m.vals)]
    return "\n".join(lines) + "\n"


def parse_triplets(text: str) -> SparseIntMatrix:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3:
        raise ValueError("triplet header must be '<rows> <cols> <nnz>'")
    nrows, ncols, nnz = (int(v) for v in lines[0])
    body = lines[1:]
    if len(body) != nnz:
        raise ValueError(f"header announces {nnz} entries, found {len(body)}")
    rows = [int(t[0]) for t in body]
    cols = [int(t[1]) for t in body]
    vals = np.array([int(t[2]) for t in body], dtype=object)
    return SparseIntMatrix.from_coo(nrows, ncols, rows, cols, vals)


def read_triplets(path: str | Path) -> SparseIntMatrix:
    return parse_triplets(Path(path).read_text())


def write_triplets(m: SparseIntMatrix, path: str | Path) -> None:
    Path(path).write_text(format_triplets(m))


# -- elimination ----------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    divisors: tuple[int, ...]     # nonzero elementary divisors, d1 | d2 | ...
    nrows: int
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def free_rank(self) -> int:
        return self.ncols - self.rank

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d > 1)


class _Eliminator:
    """Sparse Gaussian elimination with Markowitz-style pivot choice.

    The pivot column is the active column of fewest entries and the pivot row
    the lightest row in it.  Over a prime field every nonzero is a pivot;
    over the integers only units are, and columns without a unit entry are
    left in the core for the dense Smith reduction.
    """

    def __init__(self, m: SparseIntMatrix, p: int | None):
        self.p = p
        self.ncols = m.ncols
        rows: list[dict[int, int] | None] = [dict() for _ in range(m.nrows)]
        colrows: list[set[int]] = [set() for _ in range(m.ncols)]
        for r, c, v in zip(m.rows.tolist(), m.cols.tolist(), m.vals.tolist()):
            v = int(v) % p if p else int(v)
            if v:
                rows[r][c] = v
                colrows[c].add(r)
        self.rows = rows
        self.colrows = colrows
        self.pivots = 0

    def _pivot(self, r: int, c: int) -> None:
        rows, colrows, p = self.rows, self.colrows, self.p
        prow = rows[r]
        pv = prow[c]
        for cc in prow:
            colrows[cc].discard(r)
        if p:
            inv = pow(pv, p - 2, p)
        for s in list(colrows[c]):
            srow = rows[s]
            f = srow[c] * inv % p if p else srow[c] * pv     # pv = +-1 over Z
            for cc, v in prow.items():
                old = srow.get(cc)
                nv = (old - f * v) if old is not None else -f * v
                if p:
                    nv %= p
                if nv:
                    srow[cc] = nv
                    if old is None:
                        colrows[cc].add(s)
                elif old is not None:
                    del srow[cc]
                    colrows[cc].discard(s)
        rows[r] = None
        self.pivots += 1

    def run(self) -> None:
        rows, colrows, p = self.rows, self.colrows, self.p
        done = [False] * self.ncols
        heap = [(len(colrows[c]), c) for c in range(self.ncols) if colrows[c]]
        heapq.heapify(heap)
        stuck: set[int] = set()
        while heap:
            cnt, c = heapq.heappop(heap)
            if done[c]:
                continue
            if cnt != len(colrows[c]):
                if colrows[c]:
                    heapq.heappush(heap, (len(colrows[c]), c))
                continue
            if p:
                cand = colrows[c]
            else:
                cand = [s for s in colrows[c] if abs(rows[s][c]) == 1]
                if not cand:
                    stuck.add(c)
                    continue
            r = min(cand, key=lambda s: (len(rows[s]), s))
            done[c] = True
            stuck.discard(c)
            touched = list(rows[r])
            self._pivot(r, c)
            for cc in touched:
                if not done[cc] and colrows[cc]:
                    heapq.heappush(heap, (len(colrows[cc]), cc))
                    stuck.discard(cc)
        self.done = done

    def core(self) -> list[list[int]]:
        """Remaining active rows as a dense matrix over the active columns."""
        live_rows = [r for r in self.rows if r]
        cols = sorted({c for r in live_rows for c in r})
        pos = {c: k for k, c in enumerate(cols)}
        dense = []
        for r in live_rows:
            line = [0] * len(cols)
            for c, v in r.items():
                line[pos[c]] = v
            dense.append(line)
        return dense


def _dense_smith_divisors(a: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix (Python ints)."""
    a = [list(r) for r in a]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // piv
                    if q:
                        for i in range(t, m):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover of row/column t onto the diagonal
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, i, j = min(cands)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % piv), None)
            if bad is None:
                break
            # add the offending row to row t and reduce again
            rb = a[bad[0]]
            a[t] = [x + y for x, y in zip(a[t], rb)]
        out.append(abs(a[t][t]))
        t += 1
    return out


def smith_normal_form(m: SparseIntMatrix) -> SNFResult:
    e = _Eliminator(m, None)
    e.run()
    divisors = [1] * e.pivots + _dense_smith_divisors(e.core())
    return SNFResult(tuple(sorted(divisors)), m.nrows, m.ncols)


def abelian_invariants(m: SparseIntMatrix) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion divisors) of the abelian group with relation matrix ``m``.

    Rows are relations, columns generators.
    """
    snf = smith_normal_form(m)
    return snf.free_rank, snf.torsion


def rank_mod_p(m: SparseIntMatrix, p: int) -> int:
    if not (1 < p < 2**62) or not isprime(p):
        raise ValueError(f"{p} is not a prime below 2^62")
    e = _Eliminator(m, p)
    e.run()
    return e.pivots


def determinantal_divisors(a: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors as ratios of gcds of k x k minors (small matrices only)."""
    from itertools import combinations

    from sympy import Matrix

    m = len(a)
    n = len(a[0]) if m else 0
    gcds = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = math.gcd(g, int(Matrix([[a[i][j] for j in cs] for i in rs]).det()))
        if g == 0:
            break
        gcds.append(g)
    return [gcds[k] // gcds[k - 1] for k in range(1, len(gcds))]
