"""Exact coincidence detection for simplicial maps.

Computes the coincidence (Lefschetz) homomorphism of a pair of maps from
a pair (X, A) into an oriented triangulated manifold, over the rationals
or a prime field, together with an exact geometric oracle that searches
for actual common points.
"""

from .fields import Field, FieldError, ModP, QQ
from .complexes import (
    CoincidenceVerdict,
    ComplexError,
    DisconnectedError,
    MapError,
    NonOrientableError,
    NotPseudoManifoldError,
    OrientedFundamentalClass,
    ProductData,
    SimplicialComplex,
    SimplicialMap,
    SimplicialPair,
    automorphisms,
    boundary_subcomplex,
    coincidence_witness,
    constant_map,
    fundamental_class,
    identity_map,
    orientability_status,
    product_complex,
    product_pair,
)
from .homology import (
    ChainComplex,
    GradedMap,
    HomologyBasis,
    HomologyClass,
    HomologyError,
    compose,
    cross_product,
    induced_map,
)
from .lefschetz import (
    CohomologyClass,
    DualityData,
    DualityError,
    LefschetzError,
    LefschetzReport,
    Workspace,
)
from .corpus import builtin_map, builtin_names, builtin_pair
from .randmaps import GenerationError, random_map
from .verify import VerifyReport, run_verification

__version__ = "0.1.0"

__all__ = [
    "Field", "FieldError", "ModP", "QQ",
    "SimplicialComplex", "SimplicialPair", "SimplicialMap",
    "ComplexError", "MapError",
    "NotPseudoManifoldError", "NonOrientableError", "DisconnectedError",
    "OrientedFundamentalClass", "ProductData", "CoincidenceVerdict",
    "boundary_subcomplex", "fundamental_class", "orientability_status",
    "product_complex", "product_pair", "coincidence_witness",
    "identity_map", "constant_map",
    "ChainComplex", "HomologyBasis", "HomologyClass", "HomologyError",
    "GradedMap", "compose", "cross_product", "induced_map",
    "CohomologyClass", "DualityData", "DualityError",
    "LefschetzError", "LefschetzReport", "Workspace",
    "automorphisms",
    "builtin_map", "builtin_names", "builtin_pair",
    "GenerationError", "random_map",
    "VerifyReport", "run_verification",
    "__version__",
]
