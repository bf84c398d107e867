"""Todd-Coxeter coset enumeration.

Two strategies are offered.  ``"relator-first"`` is the HLT method: relators
are scanned and filled at every live coset in order.  ``"coset-first"`` is
Felsch's method: table entries are defined in row order and every definition
is followed by a deduction pass over all cyclic conjugates of the relators
and their inverses.  Both process coincidences with a union-find merge
queue and both finish with the canonical BFS renumbering, so a completed
table does not depend on the strategy that built it.

Cosets are numbered from 1 (coset 1 is the subgroup); column ``2*(g-1)``
holds the action of generator ``g`` and column ``2*(g-1)+1`` that of its
inverse.  Value 0 means "undefined" during enumeration.
"""

from __future__ import annotations

import bisect
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .presentations import TRIVIAL, Presentation, SubgroupSpec
from .words import Word

log = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 2_000_000
STRATEGIES = ("relator-first", "coset-first")


class CosetLimitExceeded(RuntimeError):
    def __init__(self, max_cosets: int, defined: int, live: int):
        super().__init__(f"coset limit {max_cosets} reached ({defined} cosets defined, {live} live)")
        self.max_cosets = max_cosets
        self.defined = defined
        self.live = live


class IncompleteTable(ValueError):
    pass


@dataclass(frozen=True)
class EnumLimits:
    max_cosets: int = DEFAULT_MAX_COSETS
    strategy: str = "relator-first"

    def __post_init__(self):
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")


def letter_column(x: int) -> int:
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


def column_letter(col: int) -> int:
    g = col // 2 + 1
    return g if col % 2 == 0 else -g


@dataclass(frozen=True)
class SchreierTransversal:
    """Spanning tree of the coset graph: coset ``c`` is reached from
    ``parent[c]`` by the letter ``letter[c]``; coset 1 is the root."""

    parent: np.ndarray
    letter: np.ndarray

    def word(self, c: int) -> Word:
        out = []
        while c != 1:
            out.append(int(self.letter[c]))
            c = int(self.parent[c])
        return tuple(reversed(out))

    def __len__(self):
        return len(self.parent) - 1


@dataclass(frozen=True)
class CosetTable:
    ngens: int
    action: np.ndarray          # shape (ncosets + 1, 2 * ngens); row 0 unused
    complete: bool = True
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def ncosets(self) -> int:
        return self.action.shape[0] - 1

    def image(self, c: int, x: int) -> int:
        return int(self.action[c, letter_column(x)])


def _require_complete(t: CosetTable) -> None:
    if not t.complete:
        raise IncompleteTable("operation needs a complete coset table")


class _Enumerator:
    """Mutable enumeration state; used once per call to :func:`enumerate_cosets`."""

    def __init__(self, p: Presentation, h: SubgroupSpec, lim: EnumLimits):
        self.nc = 2 * p.ngens
        self.max_cosets = lim.max_cosets
        self.rels = [[letter_column(x) for x in r] for r in p.relators]
        self.subgens = [[letter_column(x) for x in w] for w in h.generators]
        self.tab = [0] * (2 * self.nc)
        self.p = [0, 1]
        self.nextc = 2        # next unused row
        self.nlive = 1
        self.total_defined = 1
        self.deductions: list[tuple[int, int]] | None = None
        self.max_live = 1

    # -- primitive table operations -------------------------------------------

    def rep(self, c: int) -> int:
        p = self.p
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def define(self, c: int, x: int) -> int:
        n = self.nextc
        if n > self.max_cosets:
            raise CosetLimitExceeded(self.max_cosets, self.total_defined, self.nlive)
        nc = self.nc
        tab = self.tab
        if len(tab) < (n + 1) * nc:
            tab.extend([0] * (max(n, 1024) * nc))
        tab[c * nc + x] = n
        tab[n * nc + (x ^ 1)] = c
        self.p.append(n)
        self.nextc = n + 1
        self.nlive += 1
        self.total_defined += 1
        if self.nlive > self.max_live:
            self.max_live = self.nlive
        if self.deductions is not None:
            self.deductions.append((c, x))
        return n

    def coincidence(self, a: int, b: int) -> None:
        tab, nc, p = self.tab, self.nc, self.p
        rep = self.rep
        ded = self.deductions
        queue: list[int] = []

        def merge(k: int, l: int) -> None:
            k = rep(k)
            l = rep(l)
            if k != l:
                if k > l:
                    k, l = l, k
                p[l] = k
                queue.append(l)
                self.nlive -= 1

        merge(a, b)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            base = g * nc
            for x in range(nc):
                d = tab[base + x]
                if d:
                    xi = x ^ 1
                    tab[d * nc + xi] = 0
                    mu = rep(g)
                    nu = rep(d)
                    m_x = tab[mu * nc + x]
                    if m_x:
                        merge(nu, m_x)
                    else:
                        n_xi = tab[nu * nc + xi]
                        if n_xi:
                            merge(mu, n_xi)
                        else:
                            tab[mu * nc + x] = nu
                            tab[nu * nc + xi] = mu
                            if ded is not None:
                                ded.append((mu, x))

    def scan_and_fill(self, a: int, w: Sequence[int]) -> None:
        tab, nc = self.tab, self.nc
        f = a
        i = 0
        b = a
        j = len(w) - 1
        while True:
            while i <= j:
                nxt = tab[f * nc + w[i]]
                if not nxt:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = tab[b * nc + (w[j] ^ 1)]
                if not nxt:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                x = w[i]
                tab[f * nc + x] = b
                tab[b * nc + (x ^ 1)] = f
                if self.deductions is not None:
                    self.deductions.append((f, x))
                return
            self.define(f, w[i])

    def scan(self, a: int, w: Sequence[int]) -> None:
        """Scan without defining; closes a single gap as a deduction."""
        tab, nc = self.tab, self.nc
        f = a
        i = 0
        j = len(w) - 1
        while i <= j:
            nxt = tab[f * nc + w[i]]
            if not nxt:
                break
            f = nxt
            i += 1
        if i > j:
            if f != a:
                self.coincidence(f, a)
            return
        b = a
        while j >= i:
            nxt = tab[b * nc + (w[j] ^ 1)]
            if not nxt:
                break
            b = nxt
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif i == j:
            x = w[i]
            tab[f * nc + x] = b
            tab[b * nc + (x ^ 1)] = f
            self.deductions.append((f, x))

    def compress(self) -> dict[int, int]:
        """Renumber live cosets consecutively, keeping their relative order."""
        nc, p = self.nc, self.p
        live = [c for c in range(1, self.nextc) if p[c] == c]
        new = {c: k for k, c in enumerate(live, start=1)}
        old = self.tab
        tab = [0] * ((len(live) + 1024) * nc)
        rep = self.rep
        for c in live:
            nb = new[c] * nc
            ob = c * nc
            for x in range(nc):
                d = old[ob + x]
                if d:
                    tab[nb + x] = new[rep(d)]
        self.tab = tab
        self.p = list(range(len(live) + 1))
        self.nextc = len(live) + 1
        return new

    # -- strategies -------------------------------------------------------------

    def _maybe_compress(self, alpha: int, margin: int) -> int:
        """Compress when close to the limit; returns the renumbered ``alpha``."""
        if self.nextc + margin <= self.max_cosets or self.nextc - 1 == self.nlive:
            return alpha
        log.debug("compressing table: %d rows, %d live", self.nextc - 1, self.nlive)
        live = [c for c in range(1, self.nextc) if self.p[c] == c]
        self.compress()
        return bisect.bisect_left(live, alpha) + 1

    def run_hlt(self) -> None:
        for w in self.subgens:
            self.scan_and_fill(1, w)
        margin = max((len(r) for r in self.rels), default=1) + self.nc
        alpha = 1
        while alpha < self.nextc:
            if self.p[alpha] == alpha:
                for r in self.rels:
                    self.scan_and_fill(alpha, r)
                    if self.p[alpha] != alpha:
                        break
                if self.p[alpha] == alpha:
                    base = alpha * self.nc
                    for x in range(self.nc):
                        if not self.tab[base + x]:
                            self.define(alpha, x)
            alpha += 1
            if self.nextc + margin > self.max_cosets:
                alpha = self._maybe_compress(alpha, margin)

    def run_felsch(self) -> None:
        self.deductions = []
        for w in self.subgens:
            self.scan_and_fill(1, w)
        # cyclic conjugates of relators and their inverses, keyed by first column
        starts: list[list[list[int]]] = [[] for _ in range(self.nc)]
        seen = set()
        for r in self.rels:
            for word in (r, [x ^ 1 for x in reversed(r)]):
                for k in range(len(word)):
                    conj = tuple(word[k:] + word[:k])
                    if conj not in seen:
                        seen.add(conj)
                        starts[conj[0]].append(list(conj))
        self._process_deductions(starts)
        nc = self.nc
        alpha = 1
        while alpha < self.nextc:
            if self.p[alpha] == alpha:
                for x in range(nc):
                    if self.p[alpha] != alpha:
                        break
                    if not self.tab[alpha * nc + x]:
                        self.define(alpha, x)
                        self._process_deductions(starts)
            alpha += 1
            if self.nextc + 1 > self.max_cosets:
                alpha = self._maybe_compress(alpha, 1)

    def _process_deductions(self, starts) -> None:
        ded = self.deductions
        tab, nc, p = self.tab, self.nc, self.p
        scan = self.scan
        while ded:
            c, x = ded.pop()
            if p[c] != c:
                continue
            for w in starts[x]:
                scan(c, w)
                if p[c] != c:
                    break
            # the table list may have been replaced only by compress, which
            # never runs inside this loop
            d = tab[c * nc + x] if p[c] == c else 0
            if d and p[d] == d:
                for w in starts[x ^ 1]:
                    scan(d, w)
                    if p[d] != d:
                        break

    # -- result -------------------------------------------------------------------

    def result(self, ngens: int) -> tuple[CosetTable, SchreierTransversal]:
        """Canonical BFS renumbering of the live cosets."""
        nc, tab, rep = self.nc, self.tab, self.rep
        n = self.nlive
        order = {1: 1}
        queue = [1]
        parent = np.zeros(n + 1, dtype=np.int64)
        letter = np.zeros(n + 1, dtype=np.int64)
        qi = 0
        while qi < len(queue):
            c = queue[qi]
            qi += 1
            for x in range(nc):
                d = tab[c * nc + x]
                if not d:
                    raise IncompleteTable(f"entry ({c}, {x}) undefined after enumeration")
                d = rep(d)
                if d not in order:
                    k = len(order) + 1
                    order[d] = k
                    parent[k] = order[c]
                    letter[k] = column_letter(x)
                    queue.append(d)
        if len(order) != n:
            raise IncompleteTable(f"{n} live cosets but {len(order)} reachable from coset 1")
        action = np.zeros((n + 1, nc), dtype=np.int64)
        for c, k in order.items():
            base = c * nc
            action[k] = [order[rep(tab[base + x])] for x in range(nc)]
        stats = {"total_defined": self.total_defined, "max_live": self.max_live}
        return CosetTable(ngens, action, True, stats), SchreierTransversal(parent, letter)


def enumerate_cosets(
    p: Presentation, h: SubgroupSpec = TRIVIAL, lim: EnumLimits | None = None
) -> tuple[CosetTable, SchreierTransversal]:
    """Enumerate the cosets of ``h`` in the group presented by ``p``.

    Raises :class:`CosetLimitExceeded` rather than returning a partial table.
    """
    lim = lim or EnumLimits()
    h.validate(p)
    e = _Enumerator(p, h, lim)
    if lim.strategy == "relator-first":
        e.run_hlt()
    else:
        e.run_felsch()
    table, tr = e.result(p.ngens)
    log.info("enumerated %s: index %d (%d cosets defined)", p.name or "group", table.ncosets, e.total_defined)
    return table, tr


def group_order(p: Presentation, lim: EnumLimits | None = None) -> int:
    table, _ = enumerate_cosets(p, TRIVIAL, lim)
    return table.ncosets


# -- using a completed table ----------------------------------------------------

def trace(t: CosetTable, start: int, w: Iterable[int]) -> int:
    _require_complete(t)
    c = start
    a = t.action
    for x in w:
        c = int(a[c, letter_column(x)])
    return c


def trace_all(t: CosetTable, w: Iterable[int]) -> np.ndarray:
    """Images of every coset under ``w``: an array indexed by coset (entry 0 unused)."""
    _require_complete(t)
    cur = np.arange(t.ncosets + 1)
    a = t.action
    for x in w:
        cur = a[cur, letter_column(x)]
    return cur


def audit(t: CosetTable, p: Presentation, h: SubgroupSpec = TRIVIAL) -> int:
    """Number of violated consistency conditions (0 for a correct table)."""
    a = t.action
    bad = 0
    idx = np.arange(1, t.ncosets + 1)
    for g in range(t.ngens):
        fwd, back = a[1:, 2 * g], a[1:, 2 * g + 1]
        bad += int(np.count_nonzero(a[fwd, 2 * g + 1] != idx))
        bad += int(np.count_nonzero(a[back, 2 * g] != idx))
    for r in p.relators:
        bad += int(np.count_nonzero(trace_all(t, r)[1:] != idx))
    for w in h.generators:
        bad += int(trace(t, 1, w) != 1)
    return bad


@dataclass(frozen=True)
class PermRep:
    """Permutation image of each generator on the cosets (0-based points)."""

    degree: int
    perms: tuple[np.ndarray, ...]
    table: CosetTable = field(repr=False, compare=False)

    def image(self, w: Iterable[int]) -> np.ndarray:
        return trace_all(self.table, w)[1:] - 1


def perm_rep(t: CosetTable) -> PermRep:
    _require_complete(t)
    perms = tuple(t.action[1:, 2 * g] - 1 for g in range(t.ngens))
    return PermRep(t.ncosets, perms, t)


def permutation_order(perm: np.ndarray) -> int:
    seen = np.zeros(len(perm), dtype=bool)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        c = start
        while not seen[c]:
            seen[c] = True
            c = perm[c]
            length += 1
        order = math.lcm(order, length)
    return order


def element_order(r: PermRep, w: Iterable[int]) -> int:
    return permutation_order(r.image(w))


def format_table(t: CosetTable) -> str:
    lines = [f"cosets: {t.ncosets}"]
    for c in range(1, t.ncosets + 1):
        lines.append(" ".join(str(int(v)) for v in t.action[c]))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> CosetTable:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0][0] != "cosets:":
        raise ValueError("coset table text must start with 'cosets: <n>'")
    n = int(lines[0][1])
    rows = [[int(v) for v in ln] for ln in lines[1:]]
    if len(rows) != n or not rows or len(rows[0]) % 2:
        raise ValueError("malformed coset table")
    action = np.zeros((n + 1, len(rows[0])), dtype=np.int64)
    action[1:] = rows
    return CosetTable(len(rows[0]) // 2, action)
