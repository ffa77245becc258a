"""Exact j-fold lattice packings, coverings, and stair tilings of the plane.

The package computes, verifies, and searches j-fold lattice packings and
coverings of triangles and exact j-fold tilings with half open stair
polygons, entirely in rational arithmetic.  Closed forms: the best j-fold
packing density of any triangle is 2j^2/(2j+1), the best covering density
is (2j+1)/2, and the number of lattices attaining either is
(2j+1) * prod(1 - 2/p) over the primes p dividing 2j+1.
"""

from .arith import (count_optimal_lattices, factorize,
                    is_multiplicative_check, phi_k, phi_k_bruteforce)
from .density import (COVERING, PACKING, AffineMap, DensityPredicateError,
                      DensityResult, covering_density, density_of,
                      density_result, normalize_triangle,
                      optimal_covering_lattices, optimal_packing_lattices,
                      packing_density, triangle_jfold_predicate)
from .geometry import (Box, Point, Rational, ScaledTriangle, StairPolygon,
                       format_rational, frac, parse_rational, prec,
                       prec_negative, stair, unit_square)
from .lattice import (FundamentalDomain, Lattice,
                      enumerate_integer_sublattices, fundamental_rect,
                      integer_lattice, shift_lattice, make_lattice,
                      points_in_box, rational_dilates)
from .multiplicity import (Mode, MultiplicityReport, Region, count_at,
                           is_exact_jfold_tiling, is_jfold_covering,
                           is_jfold_packing, layer_extrema,
                           mean_multiplicity, multiplicity_extrema,
                           random_sampling_oracle, stair_region,
                           triangle_region)
from .scales import (CandidateGapError, ScaleCertificate, candidate_scales,
                     covering_predicate, lambda_lower, lambda_upper,
                     packing_predicate)
from .search import (AreaOptimum, SearchReport, lattice_search_space,
                     optimize_circumscribed_stair, optimize_inscribed_stair,
                     search_covering, search_packing)
from .stairs import (CanonicalRegions, HalfOpenBox, SelectionStairError,
                     SelectionStair, admissible_shifts, canonical_regions,
                     canonical_stair, selection_stair, count_in_halfopen_boxes,
                     count_region, selection_member, verify_stair_tiling_converse,
                     verify_stair_tiling_forward)
from .svgout import RenderSpec, render

__version__ = "0.1.0"

__all__ = [
    "AffineMap", "AreaOptimum", "Box", "COVERING", "CandidateGapError",
    "CanonicalRegions", "DensityPredicateError", "DensityResult",
    "FundamentalDomain", "HalfOpenBox", "Lattice", "Mode",
    "MultiplicityReport", "PACKING", "Point", "Rational", "Region",
    "RenderSpec", "ScaleCertificate", "ScaledTriangle", "SearchReport",
    "SelectionStairError", "SelectionStair", "StairPolygon", "admissible_shifts",
    "canonical_regions", "canonical_stair", "candidate_scales",
    "selection_stair", "count_at", "count_in_halfopen_boxes",
    "count_optimal_lattices", "count_region", "covering_density",
    "covering_predicate", "density_of", "density_result",
    "enumerate_integer_sublattices", "factorize", "format_rational", "frac",
    "fundamental_rect", "integer_lattice", "is_exact_jfold_tiling",
    "is_jfold_covering", "is_jfold_packing", "is_multiplicative_check",
    "lambda_lower", "shift_lattice", "lambda_upper", "lattice_search_space",
    "layer_extrema", "make_lattice", "mean_multiplicity",
    "multiplicity_extrema", "normalize_triangle",
    "optimal_covering_lattices", "optimal_packing_lattices",
    "optimize_circumscribed_stair", "optimize_inscribed_stair",
    "packing_density", "packing_predicate", "parse_rational",
    "phi_k", "phi_k_bruteforce", "points_in_box", "prec", "prec_negative",
    "random_sampling_oracle", "rational_dilates", "render",
    "search_covering", "search_packing", "selection_member", "stair",
    "stair_region", "triangle_jfold_predicate", "triangle_region",
    "unit_square", "verify_stair_tiling_converse", "verify_stair_tiling_forward",
]
