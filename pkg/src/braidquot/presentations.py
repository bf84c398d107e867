"""Finitely presented groups built from the Artin presentation of B_n."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .braids import full_twist
from .words import Word, WordError, check_letters, commutator, format_word, free_reduce, inverse, parse_word, power


@dataclass(frozen=True)
class Presentation:
    """Generators ``1..ngens`` and relator words, each meaning ``word = 1``."""

    ngens: int
    relators: tuple[Word, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.ngens < 1:
            raise ValueError("a presentation needs at least one generator")
        rels = []
        for r in self.relators:
            check_letters(r, self.ngens)
            r = free_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    def __str__(self):
        return format_presentation(self)


@dataclass(frozen=True)
class SubgroupSpec:
    """Generating words of a subgroup; no words means the trivial subgroup."""

    generators: tuple[Word, ...] = ()

    def validate(self, p: Presentation) -> None:
        for w in self.generators:
            check_letters(w, p.ngens)


TRIVIAL = SubgroupSpec()


def _relator(left: Sequence[int], right: Sequence[int]) -> Word:
    return free_reduce(tuple(left) + inverse(right))


def braid_presentation(n: int) -> Presentation:
    if n < 2:
        raise ValueError("braid_presentation needs n >= 2")
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if j - i == 1:
                rels.append(_relator((i, j, i), (j, i, j)))
            else:
                rels.append(_relator((i, j), (j, i)))
    # braid relations first, then commutations, each in index order
    rels.sort(key=lambda r: (len(r) != 6, sorted(set(map(abs, r)))))
    return Presentation(n - 1, tuple(rels), name=f"B{n}")


def coxeter_quotient(n: int, m: int) -> Presentation:
    """B_n modulo the normal closure of s1^m."""
    if n < 2 or m < 1:
        raise ValueError("coxeter_quotient needs n >= 2 and m >= 1")
    base = braid_presentation(n)
    return Presentation(base.ngens, base.relators + ((1,) * m,), name=f"B{n}/<<s1^{m}>>")


def wajnryb_sp2_5() -> Presentation:
    """Wajnryb's four-relator presentation of Sp_2(Z/5)."""
    rels = (
        _relator((1, 2, 1), (2, 1, 2)),
        (1,) * 5,
        (1, 2) * 6,
        _relator(power((1,), 3) + power((2,), 4) + power((1,), 2), power((2,), -2) + (1,) + power((2,), 2)),
    )
    return Presentation(2, rels, name="Sp2(Z/5)")


def crystal_surrogate(n: int, m: int, p: int) -> Presentation:
    """B_n with every s_i^p = 1 and adjacent [s_i^m, s_{i+1}^m] = 1."""
    if n < 3 or m < 2 or p < 1:
        raise ValueError("crystal_surrogate needs n >= 3, m >= 2, p >= 1")
    base = braid_presentation(n)
    extra = [(i,) * p for i in range(1, n)]
    extra += [commutator((i,) * m, (i + 1,) * m) for i in range(1, n - 1)]
    return Presentation(base.ngens, base.relators + tuple(extra), name=f"B{n}/[B{n}[{m}],B{n}[{m}]]({p})*")


def crystal33_surrogate(q: int) -> Presentation:
    """B_3 with s_i^q = 1 and the four standard generators of B_3[3] commuting."""
    if q < 3:
        raise ValueError("crystal33_surrogate needs q >= 3")
    basis = [(1, 1, 1), (2, 2, 2), (1, 2, 2, 2, -1), (-1, 2, 2, 2, 1)]
    extra = [(1,) * q, (2,) * q]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            extra.append(commutator(basis[a], basis[b]))
    base = braid_presentation(3)
    return Presentation(2, base.relators + tuple(extra), name=f"B3/[B3[3],B3[3]]({q})*")


def with_relators(p: Presentation, extra: Iterable[Sequence[int]]) -> Presentation:
    rels = list(p.relators)
    seen = set(rels)
    for w in extra:
        check_letters(w, p.ngens)
        r = free_reduce(w)
        if r and r not in seen:
            seen.add(r)
            rels.append(r)
    return Presentation(p.ngens, tuple(rels), name=p.name)


def without_relator(p: Presentation, index: int) -> Presentation:
    rels = list(p.relators)
    del rels[index]
    return Presentation(p.ngens, tuple(rels), name=p.name)


def full_twist_relator(n: int, power_: int = 1) -> Word:
    return full_twist(n).word * power_


# -- text format --------------------------------------------------------------

def format_presentation(p: Presentation) -> str:
    lines = [f"gens: {p.ngens}"]
    lines += [format_word(r) for r in p.relators]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("gens:"):
        raise WordError("presentation text must start with 'gens: <k>'")
    ngens = int(lines[0].split(":", 1)[1])
    return Presentation(ngens, tuple(parse_word(ln) for ln in lines[1:]))


def read_presentation(path: str | Path) -> Presentation:
    return parse_presentation(Path(path).read_text())


def write_presentation(p: Presentation, path: str | Path) -> None:
    Path(path).write_text(format_presentation(p))
