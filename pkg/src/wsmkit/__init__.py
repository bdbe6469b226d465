"""Rank-width, split decompositions and well-structured modulators for small graphs."""

from .errors import (
    DisconnectedGraphError,
    GraphParseError,
    NotASplitGraph,
    PreconditionViolation,
    SizeCapExceeded,
    StructureError,
    WsmkitError,
)
from .gf2 import cut_rank
from .graph import Graph, complement, connected_components, cycle_graph, induced_subgraph
from .io import load_graph, parse_dimacs, parse_edge_list
from .obstructions import ObstructionSet, find_obstruction, get_obstruction_set, is_f_free
from .rankdecomp import RankDecomposition, decomposition_width, rankwidth, rankwidth_at_most
from .split import accessibility_graph, build_split_tree, is_split, is_split_module, minimal_split_modules_containing
from .solvers import complement_clique_via_vc, max_clique, min_vertex_cover, split_graph_min_vc
from .wsm import check_wsm, find_wsm, mod_size, sim_k_classes, sim_k_decide, wsn, wsn_search

__all__ = [name for name in dir() if not name.startswith("_")]
