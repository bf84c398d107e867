"""Exact computations with braid groups and their finite quotients.

Submodules:

- ``words`` / ``braids``: signed-letter words, Garside normal form, word problem
- ``presentations``: Artin presentation and the quotients built from it
- ``coset_enum``: Todd-Coxeter enumeration, permutation representations
- ``rewriting``: Reidemeister-Schreier generators, relators, relation matrices
- ``intlinalg``: sparse Smith normal form and rank modulo a prime
- ``burau``: Burau matrices, the t = -1 congruence representation, image orders
- ``scenarios``: verification runs and report files
"""

from .braids import BraidWord, GarsideNF, braid, full_twist, garside_nf, permutation_of, words_equal
from .burau import (
    LaurentPoly,
    ModMatrix,
    image_order,
    in_congruence,
    invariant_form,
    reduced_burau_neg1,
    rho,
    rho_m,
    unreduced_burau,
)
from .coset_enum import (
    CosetLimitExceeded,
    CosetTable,
    EnumLimits,
    PermRep,
    SchreierTransversal,
    element_order,
    enumerate_cosets,
    group_order,
    perm_rep,
    trace,
)
from .intlinalg import SNFResult, SparseIntMatrix, abelian_invariants, rank_mod_p, smith_normal_form
from .presentations import (
    TRIVIAL,
    Presentation,
    SubgroupSpec,
    braid_presentation,
    coxeter_quotient,
    crystal33_surrogate,
    crystal_surrogate,
    wajnryb_sp2_5,
    with_relators,
)
from .rewriting import (
    NotInSubgroup,
    abelianization_matrix,
    relation_matrix,
    rewrite,
    schreier_generators,
    subgroup_presentation,
)
from .words import Word, format_word, free_reduce, parse_word

__all__ = [
    "BraidWord",
    "CosetLimitExceeded",
    "CosetTable",
    "EnumLimits",
    "GarsideNF",
    "LaurentPoly",
    "ModMatrix",
    "NotInSubgroup",
    "PermRep",
    "Presentation",
    "SNFResult",
    "SchreierTransversal",
    "SparseIntMatrix",
    "SubgroupSpec",
    "TRIVIAL",
    "Word",
    "abelian_invariants",
    "abelianization_matrix",
    "braid",
    "braid_presentation",
    "coxeter_quotient",
    "crystal33_surrogate",
    "crystal_surrogate",
    "element_order",
    "enumerate_cosets",
    "format_word",
    "free_reduce",
    "full_twist",
    "garside_nf",
    "group_order",
    "image_order",
    "in_congruence",
    "invariant_form",
    "parse_word",
    "perm_rep",
    "permutation_of",
    "rank_mod_p",
    "reduced_burau_neg1",
    "relation_matrix",
    "rewrite",
    "rho",
    "rho_m",
    "schreier_generators",
    "smith_normal_form",
    "subgroup_presentation",
    "trace",
    "unreduced_burau",
    "wajnryb_sp2_5",
    "with_relators",
    "words_equal",
]

__version__ = "0.1.0"
