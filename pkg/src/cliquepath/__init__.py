"""Exact clique, path and cycle invariants for checking Erdos-Gallai type bounds."""

from .bounds import (eg_bounds, extended_eg_bound, f_s, kopylov_family_bound, kopylov_path_bound,
                     luo_bounds)
from .cliques import CliqueProfile, clique_profile, neighborhood_clique_sum
from .constructions import (ConstructionSpec, Kind, build_clique_plus_pendants,
                            build_disjoint_cliques, build_hnkc, build_shared_vertex_cliques)
from .errors import BudgetExceeded, ConvergenceError, DomainError, ParseError, UnsupportedSizeError
from .graph import (Graph, VertexSet, connectivity_profile, disintegrate, induced_subgraph, join,
                    neighborhood_subgraph, parse_edge_list, parse_graph6, to_graph6)
from .harness import (ClassFilter, SuiteConfig, SuiteReport, TheoremGrid, enumerate_graphs,
                      run_suite, sample_gnp, search_counterexamples)
from .paths import (Limits, PathCycleProfile, WheelWitness, circumference, cycle_spectrum,
                    kopylov_lemma_check, longest_path, max_wheel)
from .records import Theorem, Verdict
from .spectral import SpectralResult, check_fact1, spectral_radius
from .verdicts import check

__version__ = "0.1.0"
