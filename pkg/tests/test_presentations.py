import pytest

from braidquot.braids import braid, permutation_of
from braidquot.burau import burau_laurent, laurent_identity, rho
from braidquot.intlinalg import SparseIntMatrix, abelian_invariants
from braidquot.presentations import (
    Presentation,
    braid_presentation,
    coxeter_quotient,
    crystal33_surrogate,
    crystal_surrogate,
    format_presentation,
    full_twist_relator,
    parse_presentation,
    read_presentation,
    wajnryb_sp2_5,
    with_relators,
    without_relator,
    write_presentation,
)
from braidquot.words import WordError, exponent_sums


def _abelianization(p):
    rows = {(i, j): v for i, r in enumerate(p.relators) for j, v in enumerate(exponent_sums(r, p.ngens)) if v}
    return abelian_invariants(SparseIntMatrix.from_dict(len(p.relators), p.ngens, rows))


def test_braid_presentation_counts():
    assert (braid_presentation(2).ngens, braid_presentation(2).relators) == (1, ())
    p3 = braid_presentation(3)
    assert p3.ngens == 2 and p3.relators == ((1, 2, 1, -2, -1, -2),)
    p5 = braid_presentation(5)
    assert p5.ngens == 4 and len(p5.relators) == 6
    assert sum(len(r) == 6 for r in p5.relators) == 3
    with pytest.raises(ValueError):
        braid_presentation(1)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_relators_are_trivial_in_representations(n):
    ident = tuple(range(n))
    for r in braid_presentation(n).relators:
        b = braid(n, r)
        assert permutation_of(b) == ident
        assert burau_laurent(b) == laurent_identity(n)
        assert (rho(b) == rho(braid(n, []))).all()


def test_coxeter_quotient_shapes():
    p = coxeter_quotient(2, 7)
    assert p.ngens == 1 and p.relators == ((1,) * 7,)
    assert len(coxeter_quotient(3, 3).relators) == 2
    q = coxeter_quotient(5, 3)
    assert q.ngens == 4 and len(q.relators) == 7
    with pytest.raises(ValueError):
        coxeter_quotient(3, 0)


@pytest.mark.parametrize("n, m", [(3, 1), (3, 4), (4, 3), (5, 6), (2, 5)])
def test_coxeter_quotient_abelianizes_to_cyclic(n, m):
    free, torsion = _abelianization(coxeter_quotient(n, m))
    assert free == 0
    assert torsion == (() if m == 1 else (m,))


def test_wajnryb_presentation():
    p = wajnryb_sp2_5()
    assert p.ngens == 2 and len(p.relators) == 4
    assert p.relators[1] == (1,) * 5
    assert p.relators[2] == full_twist_relator(3, 2)
    assert len(without_relator(p, 3).relators) == 3


def test_crystal_surrogates():
    p = crystal_surrogate(3, 2, 3)
    assert p.relators == braid_presentation(3).relators + ((1, 1, 1), (2, 2, 2), (1, 1, 2, 2, -1, -1, -2, -2))
    assert len(crystal_surrogate(3, 3, 4).relators) == 4
    assert len(crystal_surrogate(4, 3, 4).relators) == 3 + 3 + 2
    assert len(crystal33_surrogate(4).relators) == 1 + 2 + 6
    with pytest.raises(ValueError):
        crystal_surrogate(2, 2, 3)


@pytest.mark.parametrize("n, m, k", [(3, 2, 1), (3, 3, 1), (4, 2, 2), (5, 3, 2)])
def test_crystal_surrogate_surjects_onto_cyclic(n, m, k):
    assert _abelianization(crystal_surrogate(n, m, m * k + 1)) == (0, (m * k + 1,))


def test_with_relators():
    assert with_relators(braid_presentation(3), [(1,) * 4]) == coxeter_quotient(3, 4)
    p = coxeter_quotient(3, 3)
    assert with_relators(p, []) == p
    assert with_relators(p, [(1, 1, 1), (2, -2)]) == p
    with pytest.raises(WordError):
        with_relators(p, [(3,)])


def test_presentation_invariants():
    p = Presentation(2, ((1, -1), (1, 2, -2)))
    assert p.relators == ((1,),)
    with pytest.raises(WordError):
        Presentation(2, ((3,),))


def test_text_format_round_trip(tmp_path):
    p = coxeter_quotient(4, 3)
    text = format_presentation(p)
    assert text.splitlines()[0] == "gens: 3"
    assert parse_presentation(text) == p
    assert format_presentation(parse_presentation(text)) == text
    write_presentation(wajnryb_sp2_5(), tmp_path / "w.txt")
    assert read_presentation(tmp_path / "w.txt") == wajnryb_sp2_5()
    with pytest.raises(WordError):
        parse_presentation("s1^3\n")
