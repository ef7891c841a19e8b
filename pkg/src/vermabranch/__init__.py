"""Exact branching of generalized Verma modules for so7 > g2 and g2 > sl3."""

from .branching import (
    CASE_IDS,
    CASES,
    BranchingCase,
    BranchingTerm,
    Decomposition,
    DominanceError,
    check_dominance,
    enumerate_decomposition,
    get_case,
    lattice_point_oracle,
    multiplicity,
    multiplicity_at,
    restricted_highest_weight,
)
from .characters import (
    OracleFailure,
    gl2_tensor_decompose,
    hom_multiplicity,
    hom_surface,
    module_character,
    peel,
    peel_decomposition,
)
from .genericity import (
    GENERIC_FOR_CASE,
    HYPOTHESES,
    ConditionAtom,
    in_hypothesis,
    jantzen_simple,
    linkage_disjoint,
    sample_generic,
)
from .parabolic import (
    PAIRS,
    IncompatibleParabolicError,
    enumerate_compatible,
    intersect_parabolic,
    is_compatible,
)
from .roots import (
    POSITIVE_ROOTS,
    SIMPLE_ROOTS,
    WEYL_G2,
    WEYL_G2_NAMES,
    ParabolicSpec,
    dot_action,
    dot_orbit,
    levi_positive_roots,
    same_linkage_class,
    weyl_apply,
    weyl_multiply,
)
from .weights import (
    Weight,
    eta_to_g2,
    g2_to_eta,
    is_integer,
    is_natural,
    pair,
    rational,
    restrict_so7_to_g2,
    rho,
)

__version__ = "0.1.0"
