"""Exact character tables and structural predicates for small finite groups.

The library computes character tables of groups given by Cayley tables,
with all values as exact cyclotomic integers, and builds on them: Clifford
theory over normal subgroups (orbits, stabilizers, extensions, full
ramification), distinct-degree and Camina-pair predicates with a
structural classifier, orbit checks for matrix groups over prime fields,
and a fixed verification corpus wired to a command-line tool.
"""

from .errors import (
    BoundExceeded,
    ContractViolation,
    EvenCharacteristic,
    EvenOrder,
    GroupCharError,
    InvalidAction,
    NoSuitablePrime,
    NotNormal,
    NotPrimePower,
    ParseError,
    SplitFailure,
    TheoremViolation,
)
from .cyclotomic import Cyclotomic
from .groups import (
    ConjugacyClasses,
    Group,
    QuotientMap,
    Subgroup,
    all_subgroups,
    frobenius_complement,
    is_frobenius_with_kernel,
    pprime_elements_fpf,
)
from .chartable import (
    Character,
    CharacterTable,
    compute_table,
    inner_product,
    restrict,
    restriction_multiplicities,
    verify_table,
)
from .clifford import (
    CharacterTriple,
    abelian_invariant_factors,
    build_triple,
    class_fusion,
    conjugate_character,
    extension_alternative,
    extensions_of,
    invariant_rows,
    irr_above,
    is_fully_ramified,
    orbit_of,
    quotient_class,
    ramification_report,
    ramification_scan_pair,
    section_centralizer,
    stabilizer_of,
)
from .pairs import (
    PairReport,
    camina_pair,
    classify_pair,
    distinct_nonlinear_scan,
    has_property_D,
    irr_over,
    is_camina_centralizer,
    is_camina_vanishing,
    property_d_monotone,
    residual_case,
)
from .actions import (
    LinearAction,
    dade_duplicate_check,
    distinct_sizes_scan,
    gl_elements,
    is_transitive_nonzero,
    negation_pairing,
    odd_order_subgroup_actions,
    orbit_sizes,
    regular_orbit_count,
)
from .constructors import (
    abelian,
    agl1,
    alt,
    automorphism_from_images,
    c5c5_c3,
    c7_c3,
    central_product,
    cyclic,
    dihedral,
    direct_product,
    extraspecial_2,
    frobenius72_quaternion,
    generalized_quaternion,
    semidirect_product,
    sl23,
    sym,
)
from .groupio import load_group, save_group
from .corpus import CorpusEntry, build_corpus, run_corpus

__version__ = "0.1.0"
