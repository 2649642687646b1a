"""Gain graphs over finite groups, covering-graph lifts, two-eigenvalue
classification, and combinatorial regularity certificates."""

__version__ = "0.1.0"

from .gains import (CoverGraph, GainGraph, GroupSpec, components,
                    identity_gains, is_balanced, lift, normalize,
                    parse_gain_file, write_gain_file)
from .graphs import (DistanceTable, Graph, complete_bipartite, complete_graph,
                     connected_components, cycle, distances, folded_cube,
                     girth, hypercube, is_connected, johnson, kneser,
                     line_graph, octahedron, parse_edge_list, petersen,
                     write_edge_list)
from .intpoly import IntPoly
from .regularity import (ColumnCountCertificate, IntersectionArray,
                         RegularityCertificate, SrgParams, distance_partition,
                         drackn_parameters, is_antipodal, is_distance_regular,
                         is_equitable, is_walk_regular, lemma_column_counts,
                         regularity_certificate, srg_parameters)
from .spectral import (RepMatrix, Spectrum, TwoEvCertificate, char_poly,
                       character_block_check, classify_two_ev,
                       hermitian_spectrum, minpoly_certificate, rep_matrix)

__all__ = [
    "__version__",
    "ColumnCountCertificate", "CoverGraph", "DistanceTable", "GainGraph",
    "Graph", "GroupSpec", "IntPoly", "IntersectionArray", "RepMatrix",
    "RegularityCertificate", "Spectrum", "SrgParams", "TwoEvCertificate",
    "char_poly", "character_block_check", "classify_two_ev", "complete_bipartite",
    "complete_graph", "components", "connected_components", "cycle",
    "distance_partition", "distances", "drackn_parameters", "folded_cube",
    "girth", "hermitian_spectrum", "hypercube", "identity_gains",
    "is_antipodal", "is_balanced", "is_connected", "is_distance_regular",
    "is_equitable", "is_walk_regular", "johnson", "kneser",
    "lemma_column_counts", "lift", "line_graph", "minpoly_certificate",
    "normalize", "octahedron", "parse_edge_list", "parse_gain_file",
    "petersen", "regularity_certificate", "rep_matrix", "srg_parameters",
    "write_edge_list", "write_gain_file",
]
