"""Exact growth series of graph monoids, right-angled Artin groups and
right-angled Coxeter groups, with a brute-force oracle to check them."""

from .arith import (Poly, RationalFunction, Series, poly_substitute_mobius, rf_normalize,
                    series_compose, series_expand)
from .geodesic import (branching_matrix_weak, diagonal_matrix, geodesic_gf_exact,
                       geodesic_transfer_matrix, geodesic_type_series)
from .graph import (CliqueIndex, Graph, LinkProfile, clique_polynomial, enumerate_cliques,
                    induced_delete, link, link_regular_profile, load_graph, parse_graph)
from .link_regular import (f_count, g_count, geodesic_gf_link_regular,
                           profile_equivalence_check, reduced_weak_matrix)
from .resolvent import IntMatrix, resolvent_apply, resolvent_exact
from .spherical import (branching_matrix_strict, spherical_gf_closed, spherical_gf_restricted,
                        spherical_transfer_matrix, spherical_type_series, start_vector,
                        verify_functional_relations)
from .tables import GeodesicCountTable, Structure, TypeCountTable

__version__ = "0.1.0"
