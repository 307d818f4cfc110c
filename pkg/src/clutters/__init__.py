"""Clutters: antichain hypergraphs with minors, blockers, and splitter chains."""

from .blocker import blocker, blocker_by_enumeration, is_transversal
from .core import (
    Clutter,
    MinorSpec,
    Separation,
    apply_minor,
    canonical_serialize,
    contract,
    delete,
    find_separation,
    is_connected,
    new_clutter,
    parse_clutter,
)
from .enumeration import (
    enumerate_clutters,
    enumerate_connected,
    verify_identities,
    verify_theorem,
)
from .graphview import (
    IncidenceGraph,
    contract_twin,
    components,
    delete_closed_neighbourhood,
    good_components,
    graph_connected,
    graph_connected_iff_clutter_connected,
    incidence_graph,
    minimal_black_vertices,
    minimal_good_components,
    remove_black_vertex,
    to_dot,
    twins,
)
from .matroid import (
    CircuitMatroid,
    bases,
    circuits_clutter,
    direct_sum,
    dual,
    k4_graphic_matroid,
    new_matroid,
    parse_matroid,
    serialize_matroid,
    uniform,
)
from .minor import all_minors, has_minor, is_proper_minor
from .splitter import (
    SplitterChain,
    SplitterStep,
    chain,
    chain_to_empty,
    counterexample_report,
    find_splitter,
    format_chain,
    format_step,
)

__all__ = [
    "Clutter",
    "MinorSpec",
    "Separation",
    "IncidenceGraph",
    "CircuitMatroid",
    "SplitterChain",
    "SplitterStep",
    "all_minors",
    "apply_minor",
    "bases",
    "blocker",
    "blocker_by_enumeration",
    "canonical_serialize",
    "chain",
    "chain_to_empty",
    "circuits_clutter",
    "components",
    "contract",
    "contract_twin",
    "counterexample_report",
    "delete",
    "delete_closed_neighbourhood",
    "direct_sum",
    "dual",
    "enumerate_clutters",
    "enumerate_connected",
    "find_separation",
    "find_splitter",
    "format_chain",
    "format_step",
    "good_components",
    "graph_connected",
    "graph_connected_iff_clutter_connected",
    "has_minor",
    "incidence_graph",
    "is_connected",
    "is_proper_minor",
    "is_transversal",
    "k4_graphic_matroid",
    "minimal_black_vertices",
    "minimal_good_components",
    "new_clutter",
    "new_matroid",
    "parse_clutter",
    "parse_matroid",
    "remove_black_vertex",
    "serialize_matroid",
    "to_dot",
    "twins",
    "uniform",
    "verify_identities",
    "verify_theorem",
]
