"""Projective representation workbench for small finite groups.

Computes Schur multipliers, twisted group algebras, c-regular classes,
irreducible projective degrees and explicit representations, runs the
Clifford decomposition machinery, and machine-checks Ito-Michler-type
equivalences on a catalog of small groups.
"""

from .cohomology import (
    Cochain1,
    Coclass,
    Cocycle,
    SchurMultiplier,
    cocycle_from_extension,
    coclass_order,
    inflate_coclass,
    is_cocycle,
    is_trivial_coclass_numeric,
    multiplier_from_central_extension,
    pi_part,
    restrict_coclass,
    schur_multiplier,
    trivial_cocycle,
)
from .groups import (
    ConjClass,
    FiniteGroup,
    NormalSeries,
    PiSet,
    Quotient,
    Subgroup,
    build_group,
    centralizer,
    conjugacy_classes,
    hall_higman_check,
    hall_subgroup,
    is_p_solvable,
    is_pi_separable,
    is_solvable,
    o_pi,
    pi_series,
    quotient_group,
    sylow_subgroup,
)
from .reps import (
    CliffordExtension,
    Constituent,
    ProjRep,
    character,
    clifford_extend,
    conjugate_rep,
    decompose,
    factor_over_extension,
    induce_rep,
    inertia_group,
    intertwiner_space,
    is_irreducible,
    restrict_rep,
    split_regular,
    tensor_reps,
)
from .twisted import (
    RegularClassData,
    TwistedAlgebra,
    WedderburnData,
    alpha_tilde,
    c_regular_classes,
    center_basis,
    wedderburn,
)
from .verify import (
    CheckResult,
    CoclassContext,
    DecompositionCertificate,
    decompose_along_series,
    pi_decompose,
    verify_a5_negative_control,
    verify_basic,
    verify_clifford_laws,
    verify_ito_michler,
    verify_normal_sylow_criterion,
    verify_pi_theorem,
)

__version__ = "0.1.0"
