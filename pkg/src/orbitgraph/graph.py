"""The commuting graph of A-orbits, its shape taxonomy, and exports."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from .action import OrbitPartition
from .errors import AbelianGroup, NotFGraph
from .group import FiniteGroup, center

ROW_CHUNK = 256


@dataclass(frozen=True)
class Vertex:
    id: int
    rep: int
    size: int

    @property
    def label(self) -> str:
        return f"orbit{self.id}(rep={self.rep},size={self.size})"


@dataclass(eq=False)
class CommutingGraph:
    vertices: list[Vertex]
    adjacency: dict[int, tuple[int, ...]]
    source: dict = field(default_factory=dict)

    @property
    def ids(self) -> list[int]:
        return [v.id for v in self.vertices]

    def vertex(self, vid: int) -> Vertex:
        return self._by_id[vid]

    @cached_property
    def _by_id(self) -> dict[int, Vertex]:
        return {v.id: v for v in self.vertices}

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, w) for u, nbrs in self.adjacency.items() for w in nbrs if u < w)

    def degree(self, vid: int) -> int:
        return len(self.adjacency[vid])

    def adjacent(self, u: int, w: int) -> bool:
        return w in self.adjacency[u]

    @cached_property
    def nx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.ids)
        g.add_edges_from(self.edges)
        return g

    def __len__(self) -> int:
        return len(self.vertices)


def _from_edges(vertices: list[Vertex], edges, source: dict) -> CommutingGraph:
    adj: dict[int, set[int]] = {v.id: set() for v in vertices}
    for u, w in edges:
        if u != w:
            adj[u].add(w)
            adj[w].add(u)
    return CommutingGraph(vertices, {k: tuple(sorted(s)) for k, s in adj.items()}, dict(source))


def build_graph(G: FiniteGroup, orbits: OrbitPartition, source: dict | None = None) -> CommutingGraph:
    """Full commuting-pair sweep, deduplicated to orbit pairs."""
    k = len(orbits)
    vertices = [Vertex(i, orbits.reps[i], orbits.sizes[i]) for i in range(1, k)]
    oid = np.asarray(orbits.orbit_of, dtype=np.int64)
    found = np.zeros(k * k, dtype=bool)
    n = G.order
    for lo in range(1, n, ROW_CHUNK):
        hi = min(n, lo + ROW_CHUNK)
        block = G.commuting[lo:hi]
        rows, cols = np.nonzero(block)
        rows = rows + lo
        keep = (cols > rows)
        a, b = oid[rows[keep]], oid[cols[keep]]
        found[a * k + b] = True
        found[b * k + a] = True
    edges = [(int(u), int(w)) for u, w in zip(*np.nonzero(found.reshape(k, k))) if 0 < u < w]
    return _from_edges(vertices, edges, source or {})


def build_graph_from_reps(G: FiniteGroup, orbits: OrbitPartition, source: dict | None = None) -> CommutingGraph:
    """Same graph via representatives: u ~ w iff rep(u) commutes with some member of w."""
    k = len(orbits)
    vertices = [Vertex(i, orbits.reps[i], orbits.sizes[i]) for i in range(1, k)]
    oid = np.asarray(orbits.orbit_of)
    edges = []
    for v in vertices:
        hits = np.unique(oid[G.commuting[v.rep]])
        edges.extend((v.id, int(w)) for w in hits if w > 0 and w != v.id)
    return _from_edges(vertices, edges, source or {})


# -- shape taxonomy ------------------------------------------------------------------

@dataclass(frozen=True)
class GraphShape:
    kind: str
    params: dict = field(default_factory=dict)

    @property
    def is_fgraph(self) -> bool:
        return self.kind not in ("NotConnected", "NotFGraph")

    def __str__(self) -> str:
        if self.kind in ("Path", "Cycle", "Star"):
            return f"{self.kind}({self.params['n']})"
        if self.kind == "Friendship":
            return f"Friendship({self.params['k']})"
        return self.kind

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": self.params, "text": str(self)}


def high_degree_vertices(g: CommutingGraph) -> list[int]:
    return [v for v in g.ids if g.degree(v) >= 3]


def is_connected(g: CommutingGraph) -> bool:
    return len(g) > 0 and nx.is_connected(g.nx)


def is_fgraph(g: CommutingGraph) -> bool:
    return is_connected(g) and len(high_degree_vertices(g)) <= 1


def singular_vertex(g: CommutingGraph) -> int | None:
    if not is_fgraph(g):
        raise NotFGraph("graph is not an F-graph")
    high = high_degree_vertices(g)
    return high[0] if high else None


def triangles(g: CommutingGraph) -> list[tuple[int, int, int]]:
    out = []
    for a, b, c in itertools.combinations(g.ids, 3):
        if g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c):
            out.append((a, b, c))
    return out


def is_triangle_free(g: CommutingGraph) -> bool:
    return not triangles(g)


def max_degree_census(g: CommutingGraph) -> dict[int, int]:
    census: dict[int, int] = {}
    for v in g.ids:
        census[g.degree(v)] = census.get(g.degree(v), 0) + 1
    return dict(sorted(census.items()))


def has_induced_clique4(g: CommutingGraph) -> tuple[int, int, int, int] | None:
    for quad in itertools.combinations(g.ids, 4):
        if all(g.adjacent(a, b) for a, b in itertools.combinations(quad, 2)):
            return quad
    return None


def simple_cycles(g: CommutingGraph, length_bound: int | None = None) -> list[list[int]]:
    return [sorted(c) for c in nx.simple_cycles(g.nx, length_bound=length_bound)]


def components_without(g: CommutingGraph, vid: int) -> list[list[int]]:
    h = g.nx.copy()
    h.remove_node(vid)
    return sorted(sorted(c) for c in nx.connected_components(h))


def is_path_graph(h: nx.Graph) -> bool:
    n = h.number_of_nodes()
    if n == 0 or not nx.is_connected(h):
        return False
    return h.number_of_edges() == n - 1 and max(dict(h.degree).values(), default=0) <= 2


def is_star(g: CommutingGraph) -> bool:
    """K_{1,n-1}: one center adjacent to every other vertex and no other edges."""
    n = len(g)
    if n < 2 or len(g.edges) != n - 1:
        return False
    return any(g.degree(v) == n - 1 for v in g.ids)


def classify_shape(g: CommutingGraph) -> GraphShape:
    n = len(g)
    if not is_connected(g):
        return GraphShape("NotConnected", {"components": nx.number_connected_components(g.nx) if n else 0})
    high = high_degree_vertices(g)
    if len(high) >= 2:
        return GraphShape("NotFGraph", {"witness": high})
    m = len(g.edges)
    if not high:
        if m == n - 1:
            return GraphShape("Path", {"n": n})
        if m == n:
            return GraphShape("Cycle", {"n": n})
        return GraphShape("FGraphNoSingular", {"n": n})
    s = high[0]
    if is_star(g):
        return GraphShape("Star", {"n": n, "singular": s})
    tri = triangles(g)
    through = [t for t in tri if s in t]
    others = [v for v in g.ids if v != s]
    if m == 3 * len(through) and len(others) == 2 * len(through) and all(g.degree(v) == 2 for v in others):
        return GraphShape("Friendship", {"k": len(through), "singular": s})
    comps = components_without(g, s)
    tails = [len(c) for c in comps if not any(set(c) <= set(t) for t in through)]
    return GraphShape(
        "FGraphWithSingular",
        {"singular": s, "triangles": len(tri), "tails": sorted(tails), "components": [len(c) for c in comps]},
    )


# -- classical commuting graph ------------------------------------------------------

def classic_commuting_graph(G: FiniteGroup) -> CommutingGraph:
    """Vertices G \\ Z(G), edges the commuting pairs."""
    if G.is_abelian:
        raise AbelianGroup(f"{G.name} is abelian")
    Z = center(G)
    outside = np.nonzero(~Z.mask)[0]
    vertices = [Vertex(i + 1, int(x), 1) for i, x in enumerate(outside)]
    sub = G.commuting[np.ix_(outside, outside)]
    a, b = np.nonzero(np.triu(sub, 1))
    return _from_edges(vertices, [(int(u) + 1, int(w) + 1) for u, w in zip(a, b)], {"group": G.name, "action": "classic"})


# -- export ------------------------------------------------------------------------

def export_dot(g: CommutingGraph, name: str = "Gamma") -> str:
    lines = [f'graph "{name}" {{']
    for v in g.vertices:
        lines.append(f'  v{v.id} [label="{v.label}"];')
    for u, w in g.edges:
        lines.append(f"  v{u} -- v{w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: CommutingGraph) -> dict:
    return {
        "vertices": [{"id": v.id, "rep": v.rep, "size": v.size} for v in g.vertices],
        "edges": [[u, w] for u, w in g.edges],
        "source": dict(sorted(g.source.items())),
    }


def export_json(g: CommutingGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2, sort_keys=True) + "\n"


def import_json(text: str) -> CommutingGraph:
    data = json.loads(text)
    vertices = [Vertex(int(v["id"]), int(v["rep"]), int(v["size"])) for v in data["vertices"]]
    return _from_edges(vertices, [tuple(e) for e in data["edges"]], data.get("source", {}))
