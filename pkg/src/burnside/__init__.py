"""Burnside rings of finite groups.

Concrete multiplication-table groups, full subgroup lattices, tables of
marks, exact membership tests for the ghost ring (Dress congruences and
triangular marks inversion), and Artin exponents relative to a family of
subgroups, together with a brute-force comparison harness for the
closed-form exponent table.
"""

__version__ = "0.1.0"

from .burnside_ring import (
    BurnsideElement,
    Congruence,
    CongruenceCertificate,
    CongruenceViolation,
    GhostVector,
    TableOfMarks,
    cfb_check,
    dress_congruences,
    dress_membership,
    fixed_coset_count,
    ghost_of,
    mark,
    marks_membership,
    minimal_multiplier,
    table_of_marks,
)
from .catalog import (
    GroupSpec,
    MaximalCyclicType,
    SpecParseError,
    build_group,
    classify_maximal_cyclic_2group,
    parse_group_spec,
    standard_catalog,
)
from .exponent import (
    DivisorWitness,
    ExponentResult,
    TheoremReport,
    TheoremRow,
    abelian_closed_form_exponent,
    artin_exponent,
    check_family_closure,
    closed_form_exponent,
    cyclic_closed_form_exponent,
    indicator_vector,
    verify_main_theorem,
)
from .groups import (
    CapExceededError,
    FiniteGroup,
    Subgroup,
    conjugate_subgroup,
    direct_product,
    generated_subgroup,
    group_from_perm_generators,
    is_closed_subset,
    load_permutation_group,
    parse_permutation,
    parse_permutation_file,
    subgroup_from_elements,
    verify_group_axioms,
)
from .lattice import (
    DEFAULT_ENUMERATION_CAP,
    SubgroupClass,
    SubgroupFamily,
    SubgroupLattice,
    enumerate_subgroups,
    is_elementary_abelian,
    maximal_elementary_abelian,
    normalizer,
    select_family,
)

__all__ = [
    "__version__",
    "BurnsideElement",
    "CapExceededError",
    "Congruence",
    "CongruenceCertificate",
    "CongruenceViolation",
    "DivisorWitness",
    "DEFAULT_ENUMERATION_CAP",
    "ExponentResult",
    "FiniteGroup",
    "GhostVector",
    "GroupSpec",
    "MaximalCyclicType",
    "SpecParseError",
    "SubgroupClass",
    "SubgroupFamily",
    "SubgroupLattice",
    "Subgroup",
    "TableOfMarks",
    "TheoremReport",
    "TheoremRow",
    "abelian_closed_form_exponent",
    "artin_exponent",
    "build_group",
    "cfb_check",
    "check_family_closure",
    "classify_maximal_cyclic_2group",
    "closed_form_exponent",
    "conjugate_subgroup",
    "cyclic_closed_form_exponent",
    "direct_product",
    "dress_congruences",
    "dress_membership",
    "enumerate_subgroups",
    "fixed_coset_count",
    "generated_subgroup",
    "ghost_of",
    "group_from_perm_generators",
    "indicator_vector",
    "is_closed_subset",
    "is_elementary_abelian",
    "load_permutation_group",
    "mark",
    "marks_membership",
    "maximal_elementary_abelian",
    "minimal_multiplier",
    "normalizer",
    "parse_group_spec",
    "parse_permutation",
    "parse_permutation_file",
    "select_family",
    "standard_catalog",
    "subgroup_from_elements",
    "table_of_marks",
    "verify_group_axioms",
    "verify_main_theorem",
]
