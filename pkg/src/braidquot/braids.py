"""Braid words, the induced permutation, and the left Garside normal form.

A positive permutation braid is identified with a permutation of
``{0, ..., n-1}`` stored as a tuple ``p``; right multiplication by the
Artin generator ``s_i`` (1-based) swaps the entries in positions ``i-1``
and ``i``.  With this convention the permutation of a product ``ab`` is
``compose(p_a, p_b)[k] = p_a[p_b[k]]``, the half twist Delta is the
reversed tuple, and a braid ``Delta^inf A_1 ... A_r`` in left normal form
is stored as ``GarsideNF(n, inf, (A_1, ..., A_r))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .words import MAX_WORD_LENGTH, Word, WordError, check_letters, free_reduce, parse_word

Perm = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: Word

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        if len(self.word) > MAX_WORD_LENGTH:
            raise WordError(f"word longer than {MAX_WORD_LENGTH} letters")
        check_letters(self.word, self.strands - 1)
        object.__setattr__(self, "word", free_reduce(self.word))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.word + other.word)

    def __pow__(self, e: int) -> "BraidWord":
        w = self.word if e >= 0 else tuple(-x for x in reversed(self.word))
        return BraidWord(self.strands, w * abs(e))

    def inverse(self) -> "BraidWord":
        return self ** -1

    def __len__(self):
        return len(self.word)


def braid(n: int, word: Iterable[int] | str) -> BraidWord:
    if isinstance(word, str):
        word = parse_word(word)
    return BraidWord(n, tuple(word))


def full_twist(n: int) -> BraidWord:
    """Delta_n^2 = (s1 s2 ... s_{n-1})^n."""
    if n < 2:
        raise ValueError("full_twist needs n >= 2")
    return BraidWord(n, tuple(range(1, n)) * n)


def half_twist(n: int) -> BraidWord:
    """The Garside element Delta_n as the positive word s1 (s2 s1) (s3 s2 s1) ..."""
    if n < 2:
        raise ValueError("half_twist needs n >= 2")
    w: list[int] = []
    for k in range(1, n):
        w.extend(range(k, 0, -1))
    return BraidWord(n, tuple(w))


# -- permutations ------------------------------------------------------------

def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[k] for k in q)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def transposition(n: int, i: int) -> Perm:
    """Permutation of the generator s_i (1-based)."""
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def permutation_of(b: BraidWord) -> Perm:
    """Image of ``b`` under B_n -> S_n, in the position convention above."""
    p = list(range(b.strands))
    for x in b.word:
        i = abs(x)
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def right_descents(p: Perm) -> frozenset[int]:
    """Generators ``i`` with ``p * s_i`` no longer a permutation braid."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def left_descents(p: Perm) -> frozenset[int]:
    """Generators ``i`` with ``s_i`` a left divisor of ``p``."""
    return right_descents(perm_inverse(p))


# -- Garside normal form -----------------------------------------------------

@dataclass(frozen=True)
class GarsideNF:
    strands: int
    inf: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_left_weighted(self) -> bool:
        return all(left_descents(b) <= right_descents(a)
                   for a, b in zip(self.factors, self.factors[1:]))


@lru_cache(maxsize=None)
def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _tau(p: Perm) -> Perm:
    """Conjugation by Delta, which sends s_i to s_{n-i}."""
    d = _delta(len(p))
    return compose(compose(d, p), d)


def _weight_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move letters of ``b`` into ``a`` until the pair is left-weighted."""
    n = len(a)
    while True:
        movable = left_descents(b) - right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        s = transposition(n, i)
        a = compose(a, s)
        b = compose(s, b)


def _push_factor(inf: int, factors: list[Perm], s: Perm) -> int:
    """Right-multiply the normal form ``Delta^inf factors`` by simple ``s``.

    ``factors`` is updated in place; the new infimum is returned.
    """
    n = len(s)
    ident = tuple(range(n))
    delta = _delta(n)
    if s == ident:
        return inf
    factors.append(s)
    k = len(factors) - 1
    while k > 0:
        a, b = _weight_pair(factors[k - 1], factors[k])
        if (a, b) == (factors[k - 1], factors[k]):
            break
        factors[k - 1], factors[k] = a, b
        k -= 1
    # Delta factors can only appear at the front, identities only at the end.
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    while factors and factors[-1] == ident:
        factors.pop()
    return inf


def garside_nf(b: BraidWord) -> GarsideNF:
    """Left canonical form of ``b``.

    Negative letters use ``s_i^-1 = (s_i^-1 Delta) Delta^-1`` and
    ``X Delta^-1 = Delta^-1 tau(X)``, so a running form ``Delta^k P``
    stays a power of Delta times a positive product of simple elements.
    """
    n = b.strands
    delta = _delta(n)
    inf = 0
    factors: list[Perm] = []
    for x in b.word:
        s = transposition(n, abs(x))
        if x > 0:
            inf = _push_factor(inf, factors, s)
        else:
            # s_i^-1 Delta, then move the trailing Delta^-1 to the front.
            inf = _push_factor(inf, factors, compose(s, delta))
            factors[:] = [_tau(f) for f in factors]
            inf -= 1
    return GarsideNF(n, inf, tuple(factors))


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    if a.word == b.word:
        return True
    return garside_nf(a) == garside_nf(b)


def nf_to_word(nf: GarsideNF) -> BraidWord:
    """A braid word representing the normal form (Delta powers expanded)."""
    n = nf.strands
    delta = half_twist(n).word
    w: list[int] = list(delta * nf.inf) if nf.inf >= 0 else [-x for x in reversed(delta)] * -nf.inf
    for p in nf.factors:
        w.extend(_simple_word(p))
    return BraidWord(n, tuple(w))


def _simple_word(p: Perm) -> list[int]:
    """Positive word for a permutation braid, by bubble-sorting it."""
    q = list(p)
    out: list[int] = []
    # Peel right descents: p = p' s_i with one fewer inversion each time.
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                out.append(i + 1)
                break
        else:
            break
    return out[::-1]


def is_simple_complement(p: Perm, q: Perm) -> bool:
    """True when ``p q`` is the half twist."""
    return compose(p, q) == _delta(len(p))


def generator_relations(n: int) -> Sequence[tuple[Word, Word]]:
    """The defining equalities of B_n as (left, right) word pairs."""
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if j - i == 1:
                rels.append(((i, j, i), (j, i, j)))
            else:
                rels.append(((i, j), (j, i)))
    return rels
