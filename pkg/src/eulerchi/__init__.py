"""Exact Euler-characteristic calculus for cell spaces, finite group
actions on rigid complexes, and groupoids with compact isotropy.

Every quantity is an exact integer computed by at least two independent
routes; the ``verify`` harness and the test suite cross-validate them on
randomized instances.
"""

from .cells import (
    Cell,
    CellMap,
    CellSpace,
    ConstructibleFunction,
    RESERVED_SEPARATOR,
    chi,
    fiber_chi,
    integrate,
    integrate_levelset,
    product,
    pushforward,
    restrict,
)
from .catalog import (
    CustomIsotropy,
    FiniteIsotropy,
    IsotropyModel,
    O2,
    O2Isotropy,
    ProductIsotropy,
    SO3,
    SO3Isotropy,
    TorusIsotropy,
    ad_quotient_chi,
    ad_quotient_model,
    chi_hom_quotient,
    hom_chi_abelian,
    trivial_isotropy,
)
from .errors import (
    CrossCheckError,
    EulerchiError,
    RecursionCapExceeded,
    UnsupportedCombination,
    ValidationError,
)
from .groupoid import (
    ExtensionPrediction,
    OrbitGroupoid,
    abelian_extension_chi,
    chi_gamma,
    chi_gamma_atlas,
    chi_z,
    product_groupoid,
    restrict_groupoid,
)
from .groups import (
    ConjOrbits,
    ConjugacyClass,
    FiniteGroup,
    Presentation,
    SnfResult,
    Z,
    abelianize_snf,
    centralizer,
    conj_orbit_count,
    conjugacy_classes,
    coset_action,
    cyclic_group,
    dihedral_group,
    direct_product,
    hom_enumerate,
    presentation_class,
    product_presentation,
    quaternion_group,
    smith_normal_form,
    subgroup_closure,
    subgroup_group,
    symmetric_group,
    trivial_group,
    validate_group,
)
from .translation import (
    InertiaComplex,
    RigidGComplex,
    anchor_map,
    cell_orbits,
    chi_gamma_noniter,
    chi_gamma_strata,
    chi_order_ell,
    chi_string_orb,
    coset_complex,
    fixed_subcomplex,
    inertia_complex,
    iterate_inertia,
    lambda_chi,
    orbit_groupoid,
    orbit_space,
    point_complex,
    product_complex,
    restrict_complex,
    stabilizer,
)

__version__ = "0.1.0"
