"""Exact dynamics of isometries of hyperbolic lattices.

Classification of isometries (elliptic / parabolic / loxodromic), certified
spectral radius and entropy, Salem-number recognition, invariant rays of
isometry groups, null-entropy decisions and the search for equal powers of
two isometries sharing a polarizing ray.
"""

from .algebraic import (AlgebraicNumber, NumberField, SpectralKind, alg_equal,
                        alg_pow_equal, log_interval, refine, salem_test)
from .errors import HyperlatError, MalformedError
from .group import (GroupSpec, common_fixed_ray, equal_up_to_powers,
                    invariant_fibration_class, new_group, null_entropy_decide,
                    null_subset_enumerate, phi_map, unipotent_test)
from .isometry import (Isometry, IsometryClass, PerronData, RealVector,
                       check_polarized, classify, compose, entropy, inverse,
                       new_isometry, perron_ray, power, salem_kind,
                       spectral_radius)
from .lattice import (ConePosition, Lattice, cone_position, new_lattice,
                      pairing, primitive)
from .linalg import char_poly, kernel_basis, mat_pow, signature
from .poly import (is_quasi_unipotent_poly, isolate_real_roots,
                   square_free_part)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "NumberField",
    "SpectralKind",
    "alg_equal",
    "alg_pow_equal",
    "log_interval",
    "refine",
    "salem_test",
    "HyperlatError",
    "MalformedError",
    "GroupSpec",
    "common_fixed_ray",
    "equal_up_to_powers",
    "invariant_fibration_class",
    "new_group",
    "null_entropy_decide",
    "null_subset_enumerate",
    "phi_map",
    "unipotent_test",
    "Isometry",
    "IsometryClass",
    "PerronData",
    "RealVector",
    "check_polarized",
    "classify",
    "compose",
    "entropy",
    "inverse",
    "new_isometry",
    "perron_ray",
    "power",
    "salem_kind",
    "spectral_radius",
    "ConePosition",
    "Lattice",
    "cone_position",
    "new_lattice",
    "pairing",
    "primitive",
    "char_poly",
    "kernel_basis",
    "mat_pow",
    "signature",
    "is_quasi_unipotent_poly",
    "isolate_real_roots",
    "square_free_part",
]
