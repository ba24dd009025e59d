"""Graph recolouring reconfiguration.

Construction and certification of a recursive family of weakly chordal
graphs with frozen colourings, exhaustive exploration of recolouring graphs
at desk scale, and a constructive linear-diameter recolouring procedure for
3K1-free graphs.
"""

from .colouring import Colouring, Partition, is_frozen, is_proper
from .errors import FormatError, PreconditionError, RecolourError, ResourceLimitError
from .exact import chromatic_number_exact, max_clique
from .generators import random_3k1_free, random_chordal, random_colouring
from .gn import (
    Blob,
    CounterexampleReport,
    GnStructure,
    build_g1,
    build_gn,
    clique_gn,
    colour_gn,
    frozen_colouring_gn,
    g1_frozen_colouring,
    g1_three_colouring,
    gn_vertex_count,
    verify_counterexample,
)
from .graph import Graph, complement, induced_subgraph, substitute
from .holes import (
    HoleCertificate,
    WeaklyChordalVerdict,
    find_hole,
    hole_is_valid,
    is_3k1_free,
    is_weakly_chordal,
)
from .matching import Matching, max_matching, optimal_colouring_3k1
from .mixing3k1 import (
    NormalizationTrace,
    RareColourVerdict,
    normalize_to_partition,
    rare_colour,
    recolour_path_3k1,
    rename_partition,
)
from .recolouring import (
    RecolouringGraphSummary,
    RecolouringSequence,
    RecolouringStep,
    apply_sequence,
    bfs_distance,
    enumerate_colourings,
    recolouring_graph,
    recolouring_neighbours,
)

__all__ = [
    "Blob",
    "Colouring",
    "CounterexampleReport",
    "FormatError",
    "GnStructure",
    "Graph",
    "HoleCertificate",
    "Matching",
    "NormalizationTrace",
    "Partition",
    "PreconditionError",
    "RareColourVerdict",
    "RecolourError",
    "RecolouringGraphSummary",
    "RecolouringSequence",
    "RecolouringStep",
    "ResourceLimitError",
    "WeaklyChordalVerdict",
    "apply_sequence",
    "bfs_distance",
    "build_g1",
    "build_gn",
    "chromatic_number_exact",
    "clique_gn",
    "colour_gn",
    "complement",
    "enumerate_colourings",
    "find_hole",
    "frozen_colouring_gn",
    "g1_frozen_colouring",
    "g1_three_colouring",
    "gn_vertex_count",
    "hole_is_valid",
    "induced_subgraph",
    "is_3k1_free",
    "is_frozen",
    "is_proper",
    "is_weakly_chordal",
    "max_clique",
    "max_matching",
    "normalize_to_partition",
    "optimal_colouring_3k1",
    "rare_colour",
    "random_3k1_free",
    "random_chordal",
    "random_colouring",
    "recolour_path_3k1",
    "recolouring_graph",
    "recolouring_neighbours",
    "rename_partition",
    "substitute",
    "verify_counterexample",
]
