"""Finite Reedy categories and their finite direct replacements.

The package builds, from a finite Reedy category given as integer-id tables,
the finite direct category obtained by chain-quotienting (``build_down``),
the comparison functor onto the base category (``last_functor``), and a
battery of exhaustive desk-scale certificates for the constructive claims:
factorization, hom-poset structure, directness, finiteness, 1-localization,
and the horn-pair decompositions behind the simplicial comparison maps.
"""

from .errors import (
    CycleDetected,
    DoesNotRespectEquivalence,
    InsufficientTruncation,
    NotACongruence,
    NotComposable,
    NotFactorizable,
    NotIdempotent,
    NotNatural,
    NotParallel,
    NotSurjective,
    NotWeqInverting,
    PairingFailure,
    ParseError,
    ScheduleBroken,
    SizeLimitExceeded,
)
from .fincat import (
    FinCategory,
    FunctorData,
    HomCongruence,
    NatTransData,
    ValidationReport,
    enumerate_functors,
    find_natural_isos,
    join_categories,
    opposite,
    quotient_by_congruence,
    validate_category,
)
from .reedy import (
    ReedyCategory,
    SimplexMor,
    compute_degree_function,
    largest_section,
    reedy_factorize,
    split_idempotent,
    truncated_simplex_category,
    validate_reedy,
)
from .ladder import (
    GammaClass,
    LadderMorphism,
    LadderObject,
    LadderVariant,
    are_equivalent,
    enumerate_ladder_homs,
    enumerate_ladder_objects,
    gamma_classify,
    gamma_factorize,
    hom_leq,
    ladder_compose,
    up_max,
    upward_interval_check,
)
from .down import (
    DownCategory,
    LastFunctor,
    WeqSet,
    build_down,
    build_down_star,
    check_direct,
    last_functor,
    normalize_object,
    weq_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
