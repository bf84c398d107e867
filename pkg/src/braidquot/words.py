"""Words in signed generator indices, and their text syntax.

A word is a tuple of nonzero integers: ``+i`` stands for the generator
``s<i>`` and ``-i`` for its inverse.  Two notations are understood:

    s1^-1*s2^-4*s1        (``*`` separators are optional, ``^e`` powers)
    [-1,-2,-2,-2,-2,1]    (bracketed integer list)

``format_word`` writes the first form with runs collapsed into powers, and
``parse_word(format_word(w)) == w`` holds for every word.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Word = tuple[int, ...]

MAX_WORD_LENGTH = 10**6

_TOKEN = re.compile(r"\s*\*?\s*([A-Za-z]+)(\d+)(?:\^(-?\d+))?\s*")


class WordError(ValueError):
    pass


def check_letters(w: Iterable[int], ngens: int | None = None) -> None:
    for x in w:
        if x == 0:
            raise WordError("letter 0 is not a generator")
        if ngens is not None and abs(x) > ngens:
            raise WordError(f"letter {x} out of range for {ngens} generators")


def free_reduce(w: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in w:
        if x == 0:
            raise WordError("letter 0 is not a generator")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    if len(out) > MAX_WORD_LENGTH:
        raise WordError(f"word longer than {MAX_WORD_LENGTH} letters")
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def power(w: Sequence[int], e: int) -> Word:
    if e < 0:
        return tuple(inverse(w)) * (-e)
    return tuple(w) * e


def commutator(a: Sequence[int], b: Sequence[int]) -> Word:
    """``[a, b] = a b a^-1 b^-1``."""
    return free_reduce(tuple(a) + tuple(b) + inverse(a) + inverse(b))


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """``by * w * by^-1``."""
    return free_reduce(tuple(by) + tuple(w) + inverse(by))


def exponent_sums(w: Iterable[int], ngens: int) -> list[int]:
    sums = [0] * ngens
    for x in w:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


def parse_word(text: str) -> Word:
    """Parse either text notation; no free reduction is applied."""
    s = text.strip()
    if s in ("", "1", "[]"):
        return ()
    if s.startswith("["):
        if not s.endswith("]"):
            raise WordError(f"unterminated list: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return ()
        try:
            w = tuple(int(tok) for tok in body.split(","))
        except ValueError as exc:
            raise WordError(f"bad integer list: {text!r}") from exc
        check_letters(w)
        return w
    letters: list[int] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None or m.end() == pos:
            raise WordError(f"cannot parse word at offset {pos}: {text!r}")
        k = int(m.group(2))
        e = int(m.group(3)) if m.group(3) is not None else 1
        if k == 0:
            raise WordError("generator index 0 is not allowed")
        letters.extend([k if e > 0 else -k] * abs(e))
        if len(letters) > MAX_WORD_LENGTH:
            raise WordError(f"word longer than {MAX_WORD_LENGTH} letters")
        pos = m.end()
    return tuple(letters)


def format_word(w: Sequence[int], symbol: str = "s") -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        e = (j - i) if w[i] > 0 else -(j - i)
        parts.append(f"{symbol}{abs(w[i])}" if e == 1 else f"{symbol}{abs(w[i])}^{e}")
        i = j
    return "*".join(parts)
