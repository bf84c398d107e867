"""Reidemeister-Schreier rewriting over a completed coset table.

Schreier generators are the pairs ``(c, g)`` of a coset and a positive
generator whose edge ``c --g--> c*g`` is not in the spanning tree of the
transversal, numbered in row-major ``(c, g)`` order.  The generator for
``(c, g)`` has ambient value ``rep(c) g rep(c*g)^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .coset_enum import CosetTable, SchreierTransversal, _require_complete, letter_column, trace
from .intlinalg import SparseIntMatrix
from .presentations import Presentation
from .words import Word, free_reduce, inverse


class NotInSubgroup(ValueError):
    pass


@dataclass(frozen=True)
class SchreierGenSet:
    table: CosetTable = field(repr=False)
    transversal: SchreierTransversal = field(repr=False)
    index: np.ndarray = field(repr=False)     # (ncosets + 1, ngens), -1 on tree edges
    pairs: np.ndarray = field(repr=False)     # (count, 2): coset, generator (1-based)

    def __len__(self):
        return len(self.pairs)

    def ambient_word(self, k: int) -> Word:
        c, g = (int(v) for v in self.pairs[k])
        d = self.table.image(c, g)
        tr = self.transversal
        return free_reduce(tr.word(c) + (g,) + inverse(tr.word(d)))


@dataclass(frozen=True)
class SubgroupPresentation:
    presentation: Presentation
    generators: SchreierGenSet

    def ambient_word(self, k: int) -> Word:
        return self.generators.ambient_word(k)

    def ambient_value(self, w: Iterable[int]) -> Word:
        """Ambient word of a word in the Schreier generators (letters 1-based)."""
        out: list[int] = []
        for x in w:
            a = self.ambient_word(abs(x) - 1)
            out.extend(a if x > 0 else inverse(a))
        return free_reduce(out)


def _tree_mask(t: CosetTable, tr: SchreierTransversal) -> np.ndarray:
    tree = np.zeros((t.ncosets + 1, t.ngens), dtype=bool)
    for c in range(2, t.ncosets + 1):
        x = int(tr.letter[c])
        par = int(tr.parent[c])
        if x > 0:
            tree[par, x - 1] = True
        else:
            tree[c, -x - 1] = True
    return tree


def schreier_generators(t: CosetTable, tr: SchreierTransversal) -> SchreierGenSet:
    _require_complete(t)
    tree = _tree_mask(t, tr)
    tree[0, :] = True
    index = np.full(tree.shape, -1, dtype=np.int64)
    free = ~tree
    count = int(free.sum())
    index[free] = np.arange(count)
    cs, gs = np.nonzero(free)
    pairs = np.stack([cs, gs + 1], axis=1)
    return SchreierGenSet(t, tr, index, pairs)


def rewrite(sg: SchreierGenSet, w: Sequence[int], start: int = 1) -> Word:
    """Rewrite a subgroup element as a word in Schreier generators (1-based letters)."""
    t = sg.table
    _require_complete(t)
    action, index = t.action, sg.index
    c = start
    out: list[int] = []
    for x in w:
        if x > 0:
            k = index[c, x - 1]
            if k >= 0:
                out.append(int(k) + 1)
            c = int(action[c, letter_column(x)])
        else:
            d = int(action[c, letter_column(x)])
            k = index[d, -x - 1]
            if k >= 0:
                out.append(-(int(k) + 1))
            c = d
    if c != start:
        raise NotInSubgroup(f"word ends at coset {c}, not {start}")
    return free_reduce(out)


def _rewrite_all_cosets(sg: SchreierGenSet, r: Sequence[int]) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Per letter of ``r``: Schreier generator index and sign, for every coset at once."""
    t = sg.table
    action, index = t.action, sg.index
    cur = np.arange(1, t.ncosets + 1)
    for x in r:
        if x > 0:
            yield index[cur, x - 1], 1
            cur = action[cur, letter_column(x)]
        else:
            cur = action[cur, letter_column(x)]
            yield index[cur, -x - 1], -1


def subgroup_presentation(p: Presentation, t: CosetTable, tr: SchreierTransversal) -> SubgroupPresentation:
    """Schreier generators and the rewritten relators ``rep(c) r rep(c)^-1``.

    Relators are ordered by coset, then by ambient relator.
    """
    sg = schreier_generators(t, tr)
    per_rel: list[list[list[int]]] = []
    for r in p.relators:
        columns = []
        for k, sign in _rewrite_all_cosets(sg, r):
            columns.append(np.where(k >= 0, sign * (k + 1), 0))
        stacked = np.stack(columns, axis=1) if columns else np.zeros((t.ncosets, 0), dtype=np.int64)
        per_rel.append(stacked.tolist())
    rels = []
    for c in range(t.ncosets):
        for rows in per_rel:
            rels.append(tuple(x for x in rows[c] if x))
    pres = _UncheckedPresentation(max(len(sg), 1), tuple(rels))
    return SubgroupPresentation(pres, sg)


class _UncheckedPresentation(Presentation):
    """Presentation that keeps empty relators so relator count = index * ambient count."""

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))


def abelianization_matrix(sp: SubgroupPresentation) -> SparseIntMatrix:
    ncols = len(sp.generators)
    rows, cols, vals = [], [], []
    for i, r in enumerate(sp.presentation.relators):
        sums: dict[int, int] = {}
        for x in r:
            sums[abs(x) - 1] = sums.get(abs(x) - 1, 0) + (1 if x > 0 else -1)
        for c, v in sums.items():
            if v:
                rows.append(i)
                cols.append(c)
                vals.append(v)
    return SparseIntMatrix.from_coo(len(sp.presentation.relators), ncols, rows, cols, vals)


def relation_matrix(p: Presentation, t: CosetTable, tr: SchreierTransversal) -> SparseIntMatrix:
    """Abelianized Reidemeister-Schreier matrix built without relator words.

    Same matrix as ``abelianization_matrix(subgroup_presentation(...))``;
    rows are streamed per ambient relator using whole-table numpy traces,
    which keeps the (index * relators) x (Schreier generators) matrix of the
    large cases within memory.
    """
    sg = schreier_generators(t, tr)
    n = t.ncosets
    nrel = len(p.relators)
    base = np.arange(n, dtype=np.int64) * nrel
    rows, cols, vals = [], [], []
    for ri, r in enumerate(p.relators):
        for k, sign in _rewrite_all_cosets(sg, r):
            keep = k >= 0
            rows.append(base[keep] + ri)
            cols.append(k[keep])
            vals.append(np.full(int(keep.sum()), sign, dtype=np.int64))
    cat = (lambda a: np.concatenate(a) if a else np.zeros(0, dtype=np.int64))
    return SparseIntMatrix.from_coo(n * nrel, len(sg), cat(rows), cat(cols), cat(vals))


def in_subgroup(t: CosetTable, w: Sequence[int]) -> bool:
    return trace(t, 1, w) == 1
