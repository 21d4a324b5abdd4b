"""Exact verification of nonassociative (co)algebra identities governed by
the symmetric group on three letters: structure-constant algebras and
coalgebras, their duals, convolution algebras, group-algebra orbit
analysis, and bialgebra compatibility checks, all over the rationals."""

from .algebra import (
    Algebra,
    commutator_algebra,
    cube_vanishes,
    is_gi_associative,
    is_gi_shriek_algebra,
    is_lie,
    is_lie_admissible,
    is_power3_associative,
    predicate_report,
    satisfies_v_relation,
)
from .bialgebra import (
    BialgebraCandidate,
    check_lie_admissible_bialgebra,
    check_prelie_bialgebra,
    check_prelie_bialgebra_compat,
)
from .coalgebra import (
    Coalgebra,
    delta_L,
    is_gi_coalgebra,
    is_gi_shriek_coalgebra,
    is_lie_admissible_coalgebra,
    is_lie_coalgebra,
    twist_coassociator_identity_defect,
)
from .convolution import HomElement, convolution_algebra, convolve
from .duality import dual_algebra, dual_coalgebra, roundtrip_check
from .sigma3 import (
    ALL_ONES,
    GroupVector,
    Perm,
    PERMS,
    Tensor3,
    V,
    alternating_vector,
    invariant_subspace,
    isotypic_dimensions,
    one_dimensional_invariants,
    phi_perm,
    phi_vector,
    right_orbit,
    subgroup_elements,
    symmetrizing_vector,
)
from .witness import Witness

__all__ = [
    "Algebra",
    "ALL_ONES",
    "BialgebraCandidate",
    "Coalgebra",
    "GroupVector",
    "HomElement",
    "Perm",
    "PERMS",
    "Tensor3",
    "V",
    "Witness",
    "alternating_vector",
    "check_lie_admissible_bialgebra",
    "check_prelie_bialgebra",
    "check_prelie_bialgebra_compat",
    "commutator_algebra",
    "convolution_algebra",
    "convolve",
    "cube_vanishes",
    "delta_L",
    "dual_algebra",
    "dual_coalgebra",
    "invariant_subspace",
    "is_gi_associative",
    "is_gi_coalgebra",
    "is_gi_shriek_algebra",
    "is_gi_shriek_coalgebra",
    "is_lie",
    "is_lie_admissible",
    "is_lie_admissible_coalgebra",
    "is_lie_coalgebra",
    "is_power3_associative",
    "isotypic_dimensions",
    "one_dimensional_invariants",
    "phi_perm",
    "phi_vector",
    "predicate_report",
    "right_orbit",
    "roundtrip_check",
    "satisfies_v_relation",
    "subgroup_elements",
    "symmetrizing_vector",
    "twist_coassociator_identity_defect",
]
