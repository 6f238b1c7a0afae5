#!/usr/bin/env python

from importlib.metadata import version, PackageNotFoundError
try:
    __version__ = version('sqfdepth')
except PackageNotFoundError:
    __version__ = '0.1'

from .utils import (SqfDepthException, ScanAbort, AmbientMismatch, UnitIdeal,
                    NotSquarefree, ZeroIdeal, OutOfRange, BadSpec,
                    FileFormatError, BudgetExceeded, FaceBudgetExceeded,
                    SearchTimeout, SearchBudgetExceeded, PreconditionViolated,
                    NoDominatingClique, MixedDegrees, PropertyNotVerified,
                    InvalidCertificate, SingleGenerator, InconsistentResult)
from .ideal import (SqfMonomial, SqfIdeal, MonomialIdeal, minimalize, veronese,
                    maximal_ideal, squarefree_product, squarefree_power,
                    squarefree_powers, ordinary_power, squarefree_part, nu,
                    degree_stats, disjoint_product, stabilizes_with)
from .graphs import (Graph, Matching, edge_ideal, k_matchings, matching_number,
                     is_chordal, is_cochordal, gamma_k, dominating_clique,
                     dominating_k_matching, get_family)
from .complexes import (Field, get_field, SimplicialComplex, stanley_reisner,
                        reduced_homology)
from .betti import (BettiTable, hochster_betti, projdim, depth,
                    multigraded_betti, top_betti_mindepth, alexander_dual,
                    regularity, terai_projdim, compare_fields)
from .facet_covers import (FacetCover, facet_complex, verify_well_ordered,
                           is_well_ordered_cover, find_well_ordered_cover,
                           construct_cover_disconnected,
                           construct_cover_dominating_clique,
                           confirm_certificate)
from .linquot import (LinearQuotientsCert, colon_generators,
                      find_linear_quotients, depth_from_linear_quotients,
                      is_matroidal, is_polymatroidal, squarefree_part_preserves,
                      mindepth_criterion)
from .profile import (DepthProfile, profile, graph_profile, check_nonincreasing,
                      tail_zero_start, equivalence_triangle)
from .corpus import parse_corpus
from .scan import DepthScan, ScanReport, scan
from .verify import verify_paper
from .lab_config import LabConfig
