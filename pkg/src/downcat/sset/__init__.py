"""Truncated simplicial sets, the six endofunctors, horn machinery, and the
comparison maps."""

from .base import (
    SimplicialMap,
    TruncatedSSet,
    boundary_inclusion,
    boundary_simplex,
    nerve_functor_map,
    nerve_truncated,
    product,
    standard_simplex,
    validate_simplicial,
)
from .kan import (
    EndofunctorKind,
    KanComplex,
    esd_direct,
    esdi_direct_counts,
    evaluate_endofunctor,
    induced_map,
    kan_extend,
    kan_extend_full,
    truncate_sset,
)
from .connect import connecting_map, cylinder_into_esdpi, restrict_to_end, x_into
from .horn import (
    HornFlavor,
    HornPairRecord,
    ScheduleCertificate,
    filling_schedule,
    horn_pairs,
    outsiders,
)
from .compare import GammaVariant, build_comparison_context
from .check8 import build_comparison_maps, check_comparison_properties
from .cylinder import MappingCylinder, mapping_cylinder, pushout

__all__ = [name for name in dir() if not name.startswith("_")]
