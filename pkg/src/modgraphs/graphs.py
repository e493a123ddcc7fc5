"""Graphs attached to a module's submodule lattice, plus their invariants.

Six kinds are supported.  The meet/join graphs put the nonzero proper
submodules on the vertices and connect two of them when their
intersection is second (ssi) or their sum is prime (pss).  The ideal
variants (sii, pis) are the same constructions for the ring over itself.
The tilde variants move to the ring side through annihilators (ssi_tilde)
or colon ideals (pss_tilde), merging duplicate ideals into one vertex.

Conventions for the invariants live in `graph_metrics`: graphs on at
most one vertex count as connected and complete with diameter 0, a
disconnected graph has infinite diameter, an acyclic graph has infinite
girth, and an empty vertex set has domination number 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import inf

from .algebra import (
    DescriptorError,
    FiniteModule,
    Ring,
    Submodule,
    SubmoduleLattice,
    _format_element,
    enumerate_submodules,
)


class GraphKind(str, Enum):
    SSI = "ssi"
    PSS = "pss"
    SII = "sii"
    PIS = "pis"
    SSI_TILDE = "ssi_tilde"
    PSS_TILDE = "pss_tilde"

    def __str__(self):
        return self.value


IDEAL_KINDS = frozenset({GraphKind.SII, GraphKind.PIS})
TILDE_KINDS = frozenset({GraphKind.SSI_TILDE, GraphKind.PSS_TILDE})


@dataclass(frozen=True)
class GraphVertex:
    index: int
    submodule: Submodule
    label: str
    order: int


class SimpleGraph:
    """Undirected graph on lattice vertices with set-based adjacency."""

    def __init__(self, kind: GraphKind, ring: Ring, module: FiniteModule,
                 vertices: tuple[GraphVertex, ...], edges: list[tuple[int, int]]):
        self.kind = kind
        self.ring = ring
        self.module = module
        self.vertices = vertices
        self._edges = sorted(edges)
        self._adj = [set() for _ in vertices]
        for i, j in self._edges:
            self._adj[i].add(j)
            self._adj[j].add(i)
        self._by_elements = {v.submodule.elements: v.index for v in vertices}

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def edges(self) -> list[tuple[int, int]]:
        return list(self._edges)

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def neighbors(self, i: int) -> set:
        return set(self._adj[i])

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def vertex_for(self, sub: Submodule) -> GraphVertex:
        """The vertex carrying this submodule (or this ideal)."""
        try:
            return self.vertices[self._by_elements[sub.elements]]
        except KeyError:
            raise ValueError(f"{sub!r} is not a vertex of this graph") from None

    def has_vertex(self, sub: Submodule) -> bool:
        return sub.elements in self._by_elements

    def __repr__(self):
        return (f"SimpleGraph({self.kind}, {self.module.descriptor}, "
                f"{self.vertex_count} vertices, {self.edge_count} edges)")


def _coerce_kind(kind) -> GraphKind:
    if isinstance(kind, GraphKind):
        return kind
    try:
        return GraphKind(str(kind))
    except ValueError:
        names = ", ".join(k.value for k in GraphKind)
        raise DescriptorError(f"unknown graph kind {kind!r}; expected one of {names}")


def build_graph(kind, module: FiniteModule, lattice: SubmoduleLattice | None = None,
                *, ring_lattice: SubmoduleLattice | None = None) -> SimpleGraph:
    """Construct one of the six graphs for the given module.

    The submodule lattice is computed on demand when not supplied.  Ideal
    kinds (sii, pis) insist that the module literally is the ring over
    itself, since their vertices are ideals.
    """
    kind = _coerce_kind(kind)
    ring = module.ring
    if kind in IDEAL_KINDS and module != ring.as_module():
        raise DescriptorError(
            f"graph kind {kind} is an ideal graph; build it for {ring.descriptor} "
            f"over itself, not for {module.descriptor}")
    if lattice is None:
        lattice = enumerate_submodules(module)

    if kind in TILDE_KINDS:
        return _build_tilde(kind, module, lattice, ring_lattice)

    symbol = "R" if kind in IDEAL_KINDS else "M"
    verts = lattice.proper_nonzero()
    vertices = tuple(GraphVertex(i, s, s.label(symbol), s.order)
                     for i, s in enumerate(verts))
    edges = []
    if kind in (GraphKind.SSI, GraphKind.SII):
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if lattice.is_second(lattice.meet(verts[i], verts[j])):
                    edges.append((i, j))
    else:
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                if lattice.is_prime(lattice.join(verts[i], verts[j])):
                    edges.append((i, j))
    return SimpleGraph(kind, ring, module, vertices, edges)


def _build_tilde(kind: GraphKind, module: FiniteModule, lattice: SubmoduleLattice,
                 ring_lattice: SubmoduleLattice | None) -> SimpleGraph:
    ring = module.ring
    if ring_lattice is None:
        ring_lattice = ring.lattice()
    picked: dict[frozenset, Submodule] = {}
    for s in lattice.all:
        if kind is GraphKind.PSS_TILDE:
            residues = lattice.colon_elements(s)
        else:
            residues = lattice.annihilator_elements(s)
        ideal = ring_lattice.find(frozenset((r,) for r in residues))
        if ideal.is_zero or ideal.is_full:
            continue
        picked.setdefault(ideal.elements, ideal)
    ideals = sorted(picked.values(), key=Submodule.sort_key)
    vertices = tuple(GraphVertex(i, s, s.label("R"), s.order)
                     for i, s in enumerate(ideals))
    edges = []
    for i in range(len(ideals)):
        for j in range(i + 1, len(ideals)):
            if kind is GraphKind.PSS_TILDE:
                if ring_lattice.is_prime(ring_lattice.join(ideals[i], ideals[j])):
                    edges.append((i, j))
            else:
                if ring_lattice.is_second(ring_lattice.meet(ideals[i], ideals[j])):
                    edges.append((i, j))
    return SimpleGraph(kind, ring, module, vertices, edges)


@dataclass(frozen=True)
class GraphMetrics:
    vertex_count: int
    edge_count: int
    is_complete: bool
    is_empty_graph: bool
    is_connected: bool
    diameter: float
    girth: float
    domination_number: int
    dominating_set: tuple[int, ...]
    universal_vertices: tuple[int, ...]
    isolated_vertices: tuple[int, ...]
    is_star: bool
    star_center: int | None

    def as_dict(self) -> dict:
        """JSON-ready dict; infinite diameter/girth become null."""
        def fin(x):
            return None if x == inf else int(x)
        return {
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "is_complete": self.is_complete,
            "is_empty_graph": self.is_empty_graph,
            "is_connected": self.is_connected,
            "diameter": fin(self.diameter),
            "girth": fin(self.girth),
            "domination_number": self.domination_number,
            "dominating_set": list(self.dominating_set),
            "universal_vertices": list(self.universal_vertices),
            "isolated_vertices": list(self.isolated_vertices),
            "is_star": self.is_star,
            "star_center": self.star_center,
        }


def _bfs_distances(g: SimpleGraph, root: int) -> list[float]:
    dist = [inf] * g.vertex_count
    dist[root] = 0
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g._adj[u]:
                if dist[w] == inf:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def _girth(g: SimpleGraph) -> float:
    # BFS from every root; a non-tree edge seen from the root on a
    # shortest cycle witnesses its exact length, so the global minimum
    # over roots is the girth.
    best = inf
    n = g.vertex_count
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g._adj[u]:
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        cand = dist[u] + dist[w] + 1
                        if cand < best:
                            best = cand
            frontier = nxt
    return best


def _domination(g: SimpleGraph) -> tuple[int, tuple[int, ...]]:
    n = g.vertex_count
    if n == 0:
        return 0, ()
    closed = [0] * n
    for v in range(n):
        mask = 1 << v
        for w in g._adj[v]:
            mask |= 1 << w
        closed[v] = mask
    full = (1 << n) - 1

    # greedy pass for an upper bound and a fallback witness
    greedy: list[int] = []
    covered = 0
    while covered != full:
        best_v, best_gain = -1, -1
        for v in range(n):
            gain = bin(closed[v] & ~covered).count("1")
            if gain > best_gain:
                best_v, best_gain = v, gain
        greedy.append(best_v)
        covered |= closed[best_v]
    best_set = sorted(greedy)

    coverers = [[] for _ in range(n)]
    for v in range(n):
        for u in range(n):
            if closed[u] >> v & 1:
                coverers[v].append(u)
    for v in range(n):
        coverers[v].sort(key=lambda u: (-bin(closed[u]).count("1"), u))
    max_gain = max(bin(m).count("1") for m in closed)

    def search(uncovered: int, budget: int, chosen: list[int]) -> list[int] | None:
        if uncovered == 0:
            return list(chosen)
        if budget == 0 or bin(uncovered).count("1") > budget * max_gain:
            return None
        v = (uncovered & -uncovered).bit_length() - 1
        for u in coverers[v]:
            chosen.append(u)
            got = search(uncovered & ~closed[u], budget - 1, chosen)
            chosen.pop()
            if got is not None:
                return got
        return None

    for k in range(1, len(best_set)):
        got = search(full, k, [])
        if got is not None:
            best_set = sorted(got)
            break
    return len(best_set), tuple(best_set)


def graph_metrics(g: SimpleGraph) -> GraphMetrics:
    """All invariants of one graph, under the documented conventions."""
    n = g.vertex_count
    m = g.edge_count
    degrees = [g.degree(v) for v in range(n)]
    universal = tuple(v for v in range(n) if degrees[v] == n - 1)
    isolated = tuple(v for v in range(n) if degrees[v] == 0)
    is_complete = m == n * (n - 1) // 2
    is_empty = m == 0

    if n <= 1:
        connected = True
        diameter: float = 0
    else:
        dist0 = _bfs_distances(g, 0)
        connected = all(d != inf for d in dist0)
        if not connected:
            diameter = inf
        else:
            diameter = 0
            for root in range(n):
                ecc = max(_bfs_distances(g, root))
                if ecc > diameter:
                    diameter = ecc
            diameter = int(diameter)

    girth = _girth(g)
    dom_n, dom_set = _domination(g)
    is_star = n >= 2 and bool(universal) and m == n - 1
    star_center = universal[0] if is_star else None

    return GraphMetrics(
        vertex_count=n,
        edge_count=m,
        is_complete=is_complete,
        is_empty_graph=is_empty,
        is_connected=connected,
        diameter=diameter,
        girth=girth,
        domination_number=dom_n,
        dominating_set=dom_set,
        universal_vertices=universal,
        isolated_vertices=isolated,
        is_star=is_star,
        star_center=star_center,
    )


def _element_set_text(sub: Submodule) -> str:
    return "{" + ",".join(_format_element(x) for x in sorted(sub.elements)) + "}"


def export_graph(g: SimpleGraph, fmt: str = "dot") -> str:
    """Serialize a graph to 'dot' or 'json' text, byte-stable."""
    if fmt == "dot":
        lines = [f"graph {g.kind.value} {{"]
        lines.append(f'  // module {g.module.descriptor} over {g.ring.descriptor}')
        for v in g.vertices:
            lines.append(f'  v{v.index} [label="{v.label}={_element_set_text(v.submodule)}"];')
        for i, j in g.edges():
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "kind": g.kind.value,
            "ring": g.ring.descriptor,
            "module": g.module.descriptor,
            "vertices": [
                {
                    "id": v.index,
                    "label": v.label,
                    "order": v.order,
                    "generators": [list(x) for x in v.submodule.generators],
                }
                for v in g.vertices
            ],
            "edges": [[i, j] for i, j in g.edges()],
        }
        return json.dumps(payload, indent=2) + "\n"
    raise DescriptorError(f"unknown export format {fmt!r}; expected dot or json")
