"""Exact invariant theory of finite-dimensional Hopf algebra coactions.

Everything is computed over Q or F_p with exact arithmetic; there are no
floating point numbers anywhere in the package.
"""

from .algebra import (
    AlgebraError,
    FiniteAlgebra,
    ideal_generated,
    make_algebra,
    min_poly,
    parse_element,
    quotient_algebra,
    subalgebra_on_subspace,
    tensor_product,
)
from .builders import (
    PLieAlgebra,
    abelian_p_lie,
    cyclic_group_table,
    dual_group_algebra,
    group_algebra,
    restricted_enveloping,
    sweedler_hopf,
    symmetric_group_table,
)
from .comodule import (
    ComoduleAlgebra,
    ComoduleError,
    HopfModule,
    build_derivation,
    build_graded,
    build_group_action,
    costable_closure,
    h_radical,
    invariant_subalgebra,
    invariants,
    is_costable,
    is_h_reduced,
    is_h_simple,
    largest_costable_within,
    localize_at_invariant,
    make_comodule,
    module_direct_sum,
    module_from_algebra,
    module_invariants,
    quotient_comodule,
    trivial_coaction,
    validate_comodule,
)
from .fields import QQ, GF, FieldError, field_from_name, field_name
from .fuzz import fuzz, generate_instance, run_core_suite
from .hopf import (
    HopfAlgebra,
    HopfError,
    dual_hopf,
    is_geometrically_cosemisimple,
    left_integral_space,
    make_hopf,
    right_integral_space,
    validate_hopf,
)
from .instances import (
    InstanceError,
    instance_digest,
    instance_from_data,
    instance_to_data,
    parse_instance,
    serialize_instance,
    write_instance,
)
from .invariant_theory import (
    TheoremViolation,
    brute_fiber,
    coaction_charpoly,
    coaction_charpoly_oracle,
    costable_family,
    doi_trace,
    fiber,
    free_basis_over_invariants,
    hopf_module_equivalence_check,
    ideal_correspondence_check,
    integral_point_survey,
    integral_space,
    integrality_witness,
    invariance_check,
    invariant_power_identity,
    is_galois,
    nilpotency_consistency,
    norm_of_coaction,
    openness_ideal_check,
    orbit_residue_iso_check,
    orbital,
    power_image_check,
    residue_degree_check,
    stabilizer,
    weak_reductivity_certificate,
    weak_reductivity_check,
)
from .linalg import Mat, Subspace
from .report import ALL_SECTIONS, render_report, run_report
from .spectrum import (
    PointData,
    idempotent_decomposition,
    maximal_ideals,
    nilradical,
    radical_and_semisimplicity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
