"""Exact seminormal bases for Specht modules of the type A Hecke algebra."""

from .expansion import Expansion, expand
from .hecke import HeckeElement, jucys_murphy, t_range
from .modular import branching_filtration, radical_rank, verify_submodule_fn, verify_submodule_tleq
from .qcoeff import (
    CyclotomicFactorization,
    CyclotomicFieldElement,
    LaurentPoly,
    Q,
    RationalFunction,
    factor_cyclotomic,
    quantum_factorial,
    quantum_int,
    reduce_mod_cyclotomic,
)
from .seminormal import (
    SeminormalVector,
    base_change,
    denominator_certificate,
    f_vector,
    f_via_gram_schmidt,
    f_via_projector,
    f_via_stepwise,
    fat_hook_fn,
    general_fn,
    general_ft,
    seminormal_gen_action,
)
from .specht import SpechtModule, SpechtVector, act_gen, gram_matrix, jm_action, specht_module, straighten
from .tableaux import Tableau, partitions_of, standard_tableaux

__all__ = [
    "CyclotomicFactorization",
    "CyclotomicFieldElement",
    "Expansion",
    "HeckeElement",
    "LaurentPoly",
    "Q",
    "RationalFunction",
    "SeminormalVector",
    "SpechtModule",
    "SpechtVector",
    "Tableau",
    "act_gen",
    "base_change",
    "branching_filtration",
    "denominator_certificate",
    "expand",
    "f_vector",
    "f_via_gram_schmidt",
    "f_via_projector",
    "f_via_stepwise",
    "factor_cyclotomic",
    "fat_hook_fn",
    "general_fn",
    "general_ft",
    "gram_matrix",
    "jm_action",
    "jucys_murphy",
    "partitions_of",
    "quantum_factorial",
    "quantum_int",
    "radical_rank",
    "reduce_mod_cyclotomic",
    "seminormal_gen_action",
    "specht_module",
    "standard_tableaux",
    "straighten",
    "t_range",
    "verify_submodule_fn",
    "verify_submodule_tleq",
]
