"""Construction, verification and search tools for friendship r-hypergraphs."""

from .constructions import complete, cube, truncated, truncated_count, universal
from .decomposition import Decomposition
from .hypergraph import Hypergraph, HypergraphError, contains_edge, degree_profile, k_subsets, link, members, vset
from .steiner import SteinerSystem, s_5_6_12, sqs8, steiner_triple_system, verify_steiner

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "Hypergraph",
    "HypergraphError",
    "SteinerSystem",
    "complete",
    "contains_edge",
    "cube",
    "degree_profile",
    "k_subsets",
    "link",
    "members",
    "s_5_6_12",
    "sqs8",
    "steiner_triple_system",
    "truncated",
    "truncated_count",
    "universal",
    "verify_steiner",
    "vset",
]
