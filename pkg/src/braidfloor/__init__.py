"""Braid-group computations built on the Dehornoy ordering.

Braid words over the Artin generators, handle reduction for the word and
comparison problems, Dehornoy floors with bracketing witnesses, periodicity
and the geometric classification of braid closures, foliation-admissibility
arithmetic, and deterministic generators of certified hyperbolic-knot
families.
"""

from .certificates import (
    CertificateError,
    KnotCertificate,
    read_certificates,
    recheck_certificate,
    write_certificates,
)
from .classify import (
    GeometryType,
    GeometryVerdict,
    PeriodicityResult,
    classify_closure,
    is_periodic,
    is_prime,
)
from .floors import (
    FloorResult,
    OccurrenceBound,
    dehornoy_floor,
    delta_power,
    occurrence_bound,
)
from .foliation import (
    FoliationType,
    ValenceProfile,
    admissible_foliations,
    euler_identity_holds,
    floor_bound_from_valence,
    min_valence_bound,
)
from .generate import generate_family, generate_random
from .ordering import (
    DEFAULT_MAX_STEPS,
    OrderVerdict,
    ReductionLimitError,
    SignClass,
    compare,
    handle_reduce,
    is_trivial,
    sign_class,
)
from .words import (
    BraidWord,
    Permutation,
    closure_component_count,
    compose,
    delta,
    exponent_sum,
    free_reduce,
    invert,
    parse_word,
    permutation_of,
    power,
)

__all__ = [
    "BraidWord",
    "CertificateError",
    "DEFAULT_MAX_STEPS",
    "FloorResult",
    "FoliationType",
    "GeometryType",
    "GeometryVerdict",
    "KnotCertificate",
    "OccurrenceBound",
    "OrderVerdict",
    "Permutation",
    "PeriodicityResult",
    "ReductionLimitError",
    "SignClass",
    "ValenceProfile",
    "admissible_foliations",
    "classify_closure",
    "closure_component_count",
    "compare",
    "compose",
    "dehornoy_floor",
    "delta",
    "delta_power",
    "euler_identity_holds",
    "exponent_sum",
    "floor_bound_from_valence",
    "free_reduce",
    "generate_family",
    "generate_random",
    "handle_reduce",
    "invert",
    "is_periodic",
    "is_prime",
    "is_trivial",
    "min_valence_bound",
    "occurrence_bound",
    "parse_word",
    "permutation_of",
    "power",
    "read_certificates",
    "recheck_certificate",
    "sign_class",
    "write_certificates",
]
