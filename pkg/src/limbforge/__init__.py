"""Exact tools for limbs, tree counting, and cospectral vertices in weighted trees."""

from .census import CensusRow, census
from .constructions import (CospectralSeed, attach_preserving,
                            extension_cospectral_pair, fixture,
                            k_cospectral_construction, one_sum,
                            one_vertex_extension, two_schwenk_seed)
from .errors import LimbforgeError
from .hopf import ForestTerm, antichains, check_coassociativity, check_counit, coproduct
from .limbs import (LimbOccurrence, LimbSpec, branches_at, count_avoiding,
                    has_limb, normalize_by_replacement, replace_limb)
from .series import (RadiusEstimate, RationalSeries, estimate_radius, mset_exp,
                     series_avoid_limb_rooted, series_avoid_limb_weighted,
                     series_avoid_limb_weighted_free, series_avoid_maximal_limb,
                     series_dominating_bound, series_rooted,
                     series_weighted_free, series_weighted_rooted)
from .spectra import (CospectralClasses, IntPolynomial, SimilarityOrbits,
                      char_poly, char_poly_tree, check_cut_edge_identity,
                      check_derivative_identity, check_union_identity,
                      cospectral_vertices, one_sum_char_poly, schwenk_mate,
                      similarity_orbits)
from .trees import (CanonicalCode, CanonicalTree, WeightedGraph,
                    canonicalize_free, canonicalize_rooted, enumerate_free,
                    enumerate_rooted, enumerate_weighted_free,
                    enumerate_weighted_rooted, leaf, root_forest)

__version__ = "0.1.0"
