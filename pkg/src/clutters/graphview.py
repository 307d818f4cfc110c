"""Bipartite incidence graphs of clutters.

Black vertices are ground elements, white vertices are rows, and an edge
joins an element to each row containing it.  White vertices are identified
by the canonical key 'r:' + comma-joined ascending members ('r:-' for the
empty row), so graphs of equal clutters are identical objects, not merely
isomorphic.  In mixed vertex sets (components, neighbourhoods) a vertex is
the tagged pair ('black', element) or ('white', row key).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .core import Clutter
from .errors import NoTwin, NotBlack, NotMinimal, VertexNotFound

BLACK = "black"
WHITE = "white"

Vertex = tuple  # (BLACK, element) | (WHITE, row key)


def row_key(row: frozenset) -> str:
    """Canonical white-vertex name for a row."""
    return "r:" + (",".join(sorted(row)) if row else "-")


@dataclass(frozen=True)
class IncidenceGraph:
    black: frozenset  # element labels
    white: frozenset  # row keys
    edges: frozenset  # (element, row key) pairs


@dataclass(frozen=True)
class Neighbourhood:
    center: Vertex
    open: frozenset  # adjacent vertices, center excluded
    closed: frozenset  # open plus the center


def incidence_graph(M: Clutter) -> IncidenceGraph:
    """The bipartite incidence graph of a clutter."""
    white = frozenset(row_key(A) for A in M.rows)
    edges = frozenset((v, row_key(A)) for A in M.rows for v in A)
    return IncidenceGraph(M.ground, white, edges)


def _black_adjacency(G: IncidenceGraph) -> dict:
    adj = {v: set() for v in G.black}
    for v, w in G.edges:
        adj[v].add(w)
    return {v: frozenset(ws) for v, ws in adj.items()}


def _white_adjacency(G: IncidenceGraph) -> dict:
    adj = {w: set() for w in G.white}
    for v, w in G.edges:
        adj[w].add(v)
    return {w: frozenset(vs) for w, vs in adj.items()}


def _require_black(G: IncidenceGraph, v: str) -> None:
    if v in G.black:
        return
    if v in G.white:
        raise NotBlack(f"{v!r} is a white vertex")
    raise VertexNotFound(f"no vertex {v!r}")


def vertex_sort_key(vertex: Vertex) -> tuple:
    """Deterministic vertex order: by name, black before white at equal name."""
    kind, name = vertex
    return (name, 0 if kind == BLACK else 1)


def neighbourhood(G: IncidenceGraph, vertex: Vertex) -> Neighbourhood:
    """Open and closed neighbourhoods of a tagged vertex."""
    kind, name = vertex
    if kind == BLACK:
        if name not in G.black:
            raise VertexNotFound(f"no black vertex {name!r}")
        open_ = frozenset((WHITE, w) for v, w in G.edges if v == name)
    elif kind == WHITE:
        if name not in G.white:
            raise VertexNotFound(f"no white vertex {name!r}")
        open_ = frozenset((BLACK, v) for v, w in G.edges if w == name)
    else:
        raise VertexNotFound(f"bad vertex tag {kind!r}")
    return Neighbourhood(vertex, open_, open_ | {vertex})


def components(G: IncidenceGraph) -> list:
    """Connected components as frozensets of tagged vertices, deterministically
    ordered by each part's least vertex."""
    adjacency = {}
    for v in G.black:
        adjacency[(BLACK, v)] = []
    for w in G.white:
        adjacency[(WHITE, w)] = []
    for v, w in sorted(G.edges):
        adjacency[(BLACK, v)].append((WHITE, w))
        adjacency[(WHITE, w)].append((BLACK, v))
    seen = set()
    parts = []
    for start in sorted(adjacency, key=vertex_sort_key):
        if start in seen:
            continue
        part = {start}
        stack = [start]
        while stack:
            here = stack.pop()
            for there in adjacency[here]:
                if there not in part:
                    part.add(there)
                    stack.append(there)
        seen |= part
        parts.append(frozenset(part))
    parts.sort(key=lambda p: vertex_sort_key(min(p, key=vertex_sort_key)))
    return parts


def graph_connected(G: IncidenceGraph) -> bool:
    """True iff the graph has at most one connected component."""
    return len(components(G)) <= 1


def graph_connected_iff_clutter_connected(M: Clutter) -> bool:
    """Self-check of the connectivity equivalence.

    Clutter connectivity and graph connectivity agree for every clutter except
    the one with a single element and one empty row, which is connected while
    its incidence graph is not.  Always returns True.
    """
    exceptional = len(M.ground) == 1 and M.rows == frozenset({frozenset()})
    if exceptional:
        return True
    return core.is_connected(M) == graph_connected(incidence_graph(M))


def delete_closed_neighbourhood(G: IncidenceGraph, v: str) -> IncidenceGraph:
    """Remove a black vertex, its white neighbours, and all incident edges.

    When G is the incidence graph of M this is exactly the incidence graph of
    M with v deleted.
    """
    _require_black(G, v)
    gone_whites = {w for u, w in G.edges if u == v}
    return IncidenceGraph(
        G.black - {v},
        G.white - gone_whites,
        frozenset((u, w) for u, w in G.edges if u != v and w not in gone_whites),
    )


def remove_black_vertex(G: IncidenceGraph, v: str) -> IncidenceGraph:
    """Remove a black vertex only, re-keying whites to their remaining members.

    Raises ValueError if two whites would collide after re-keying; this cannot
    happen when v has a twin.
    """
    _require_black(G, v)
    white_adj = _white_adjacency(G)
    mapping = {
        w: "r:" + (",".join(sorted(vs - {v})) if vs - {v} else "-")
        for w, vs in white_adj.items()
    }
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("removing this black vertex merges white vertices")
    return IncidenceGraph(
        G.black - {v},
        frozenset(mapping.values()),
        frozenset((u, mapping[w]) for u, w in G.edges if u != v),
    )


def twins(G: IncidenceGraph, v: str) -> frozenset:
    """All black vertices other than v with the same open neighbourhood."""
    _require_black(G, v)
    adj = _black_adjacency(G)
    return frozenset(u for u in G.black if u != v and adj[u] == adj[v])


def contract_twin(M: Clutter, v: str) -> Clutter:
    """Contract an element that has a twin in the incidence graph.

    The result's incidence graph equals G(M) with the black vertex v removed,
    and contraction of a twin preserves connectivity; both facts are asserted.
    """
    G = incidence_graph(M)
    _require_black(G, v)
    if not twins(G, v):
        raise NoTwin(f"element {v!r} has no twin")
    result = core.contract(M, v)
    assert incidence_graph(result) == remove_black_vertex(G, v)
    if core.is_connected(M):
        assert core.is_connected(result)
    return result


def minimal_black_vertices(G: IncidenceGraph) -> frozenset:
    """Black vertices whose open neighbourhood properly contains no other's."""
    adj = _black_adjacency(G)
    return frozenset(
        v for v in G.black if not any(adj[u] < adj[v] for u in G.black if u != v)
    )


def good_components(G: IncidenceGraph, u: str) -> list:
    """Components of G minus the closed neighbourhood of a minimal black vertex."""
    _require_black(G, u)
    if u not in minimal_black_vertices(G):
        raise NotMinimal(f"black vertex {u!r} is not minimal")
    return components(delete_closed_neighbourhood(G, u))


def minimal_good_components(G: IncidenceGraph) -> list:
    """All (u, component) pairs whose component properly contains no other
    good component's vertex set."""
    pairs = []
    for u in sorted(minimal_black_vertices(G)):
        for comp in good_components(G, u):
            pairs.append((u, comp))
    all_sets = [comp for _, comp in pairs]
    return [(u, comp) for u, comp in pairs if not any(d < comp for d in all_sets)]


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(G: IncidenceGraph) -> str:
    """DOT rendering: black vertices filled, white unfilled, deterministic order."""
    lines = ["graph {"]
    for v in sorted(G.black):
        lines.append(f"  {_quote(v)} [style=filled, fillcolor=black, fontcolor=white];")
    for w in sorted(G.white):
        lines.append(f"  {_quote(w)};")
    for v, w in sorted(G.edges):
        lines.append(f"  {_quote(v)} -- {_quote(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
