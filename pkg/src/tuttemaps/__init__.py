"""Tutte polynomial bijections on rooted combinatorial maps.

Subgraphs and spanning trees are int bitmasks over edge indices;
orientations are :class:`Orientation` values; outdegree sequences and
sandpile configurations are tuples indexed by vertex.
"""

from .bijection import (
    construct_tree,
    gamma,
    gamma_inverse,
    is_bipolar,
    is_minimal,
    minimal_orientation,
    phi,
    phi_tree,
    psi,
    root_components,
    root_strong_components,
    specialization_census,
)
from .enumeration import enumerate_orientations, enumerate_spanning_trees, enumerate_subgraphs
from .errors import InternalError, TutteMapsError
from .mapfile import load_map, parse_map, serialize_map
from .maps import CombinatorialMap, build_map, dual_map, euler_characteristic, underlying_graph
from .orientation import (
    Orientation,
    classify,
    disagreement_cycle,
    enumerate_directed_cocycles,
    enumerate_directed_cycles,
    excess,
    flip,
    is_outdegree_sequence,
    outdegree_sequence,
    reachable,
)
from .poly import TuttePolynomial
from .sandpile import is_recurrent, lambda_, level, sandpile_to_outdegree, topple, upsilon
from .trees import (
    activities,
    delta,
    external_active_iff_ancestor,
    forest_expansion,
    fundamental_cocycle,
    fundamental_cycle,
    gt_order,
    motion_function,
    postfix_order,
    tree_interval,
    tutte_polynomial,
    tutte_subgraph_oracle,
)

__version__ = "0.1.0"
