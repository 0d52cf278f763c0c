"""Golodness of Stanley-Reisner rings with minimal Taylor resolutions, checked by exact computation."""

from .complex_core import (KN, NonFaceSequence, NotMinimalTaylor, SimplicialComplex, boundary_simplex, build_KN,
                           compress_labels, deletion, deletion_KN, disjointify, from_facets, from_minimal_nonfaces,
                           full_subcomplex, join, link, link_KN, mask, minimal_nonfaces, recover_sequence, simplex,
                           vertices)
from .golod import (enumerate_instances, join_obstruction, pairwise_intersecting, verify_KN_homotopy,
                    verify_theorem, wedge_prediction)
from .homology import (ChainComplex, HomologySummary, homology, induced_inclusion_map, is_homology_iso,
                       reduced_chain_complex, reduced_cohomology, reduced_homology)
from .linalg import IntMatrix, smith_normal_form
from .taylor import TorTable, betti_from_taylor, is_minimal_taylor, taylor_differential
from .zk_algebra import (Cochain, coboundary, cohomology_classes, cup_product, hochster_table, is_coboundary,
                         koszul_cochain_complex, products_trivial, real_cubical_complex, zk_cohomology)

__version__ = "0.1.0"
