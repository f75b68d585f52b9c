"""Underlying graphs, orientations as push-parity vectors, and basic digraph queries.

An orientation is stored as a fixed reference direction per edge plus an
(n-1)-bit push-parity vector.  Pushing a vertex toggles one parity bit, so the
set of orientations reachable by pushes is exactly the 2^(n-1) parity values
(pushing every vertex at once is the identity, which is why vertex 0's bit is
pinned to zero).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    SelfLoopError,
    TwoCycleError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class UnderlyingGraph:
    """Simple connected undirected graph with a canonical sorted edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(compare=False)

    @staticmethod
    def from_edges(n: int, pairs: Sequence[tuple[int, int]]) -> "UnderlyingGraph":
        seen = set()
        canon = []
        for u, v in pairs:
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRangeError(w, n)
            if u == v:
                raise SelfLoopError(u)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(*key)
            seen.add(key)
            canon.append(key)
        canon.sort()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        g = UnderlyingGraph(n, tuple(canon), tuple(tuple(sorted(a)) for a in adj))
        comp = g._component_of(0) if n else frozenset()
        if len(comp) != n:
            raise DisconnectedError(comp)
        return g

    def _component_of(self, start: int) -> frozenset[int]:
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        return self._eindex[(min(u, v), max(u, v))]

    @property
    def _eindex(self) -> dict[tuple[int, int], int]:
        idx = self.__dict__.get("_eindex_cache")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.edges)}
            self.__dict__["_eindex_cache"] = idx
        return idx

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._eindex

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(v, self.n)

    def distance(self, u: int, v: int) -> int:
        return len(self.shortest_path(u, v)) - 1

    def shortest_path(self, u: int, v: int) -> list[int]:
        """BFS path in the underlying graph, ignoring orientation."""
        if u == v:
            return [u]
        prev = {u: u}
        frontier = [u]
        while frontier:
            nxt = []
            for a in frontier:
                for b in self.adj[a]:
                    if b not in prev:
                        prev[b] = a
                        if b == v:
                            path = [b]
                            while path[-1] != u:
                                path.append(prev[path[-1]])
                            return path[::-1]
                        nxt.append(b)
            frontier = nxt
        raise AssertionError("graph is connected; path must exist")


def parity_bit(parity: int, v: int) -> int:
    """Push-parity of vertex v; vertex 0 is the pinned representative."""
    return 0 if v == 0 else (parity >> (v - 1)) & 1


def push_parity(parity: int, v: int, n: int) -> int:
    """Parity vector after pushing v, renormalized so bit 0 stays zero."""
    if n <= 1:
        return 0
    if v == 0:
        return parity ^ ((1 << (n - 1)) - 1)
    return parity ^ (1 << (v - 1))


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of an underlying graph, addressed by its push parity."""

    graph: UnderlyingGraph
    ref_bits: int
    parity: int = 0

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def edge_flipped(self, e: int) -> int:
        """1 if edge e currently points high->low endpoint, else 0."""
        u, v = self.graph.edges[e]
        return ((self.ref_bits >> e) & 1) ^ parity_bit(self.parity, u) ^ parity_bit(self.parity, v)

    def arc(self, e: int) -> tuple[int, int]:
        u, v = self.graph.edges[e]
        return (v, u) if self.edge_flipped(e) else (u, v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for e in range(self.m):
            yield self.arc(e)

    def has_arc(self, u: int, v: int) -> bool:
        if not self.graph.has_edge(u, v):
            return False
        return self.arc(self.graph.edge_index(u, v)) == (u, v)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self.graph.check_vertex(v)
        return tuple(w for w in self.graph.adj[v] if self.arc(self.graph.edge_index(v, w)) == (v, w))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self.graph.check_vertex(v)
        return tuple(w for w in self.graph.adj[v] if self.arc(self.graph.edge_index(v, w)) == (w, v))

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def push(self, v: int) -> "OrientedGraph":
        self.graph.check_vertex(v)
        return OrientedGraph(self.graph, self.ref_bits, push_parity(self.parity, v, self.n))

    def push_many(self, vs: Sequence[int]) -> "OrientedGraph":
        og = self
        for v in vs:
            og = og.push(v)
        return og

    def with_parity(self, parity: int) -> "OrientedGraph":
        return OrientedGraph(self.graph, self.ref_bits, parity)


def validate_graph(n: int, arcs: Sequence[tuple[int, int]]) -> OrientedGraph:
    """Build a well-formed OrientedGraph from raw arcs u->v, parity zero."""
    pairs = []
    directed = set()
    for u, v in arcs:
        if (v, u) in directed:
            raise TwoCycleError(min(u, v), max(u, v))
        if (u, v) in directed:
            raise DuplicateEdgeError(min(u, v), max(u, v))
        directed.add((u, v))
        pairs.append((u, v))
    g = UnderlyingGraph.from_edges(n, pairs)
    ref = 0
    for u, v in directed:
        if u > v:
            ref |= 1 << g.edge_index(u, v)
    return OrientedGraph(g, ref, 0)


def neighborhoods(og: OrientedGraph, v: int) -> tuple[frozenset[int], frozenset[int]]:
    """Partition N(v) into (out-neighbors, in-neighbors)."""
    return frozenset(og.out_neighbors(v)), frozenset(og.in_neighbors(v))


def is_dag(og: OrientedGraph) -> tuple[bool, list[int]]:
    """Acyclicity check.

    Returns (True, topological order) or (False, directed cycle).
    """
    n = og.n
    indeg = [og.in_degree(v) for v in range(n)]
    order = [v for v in range(n) if indeg[v] == 0]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in og.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) == n:
        return True, order
    # every leftover vertex keeps an unprocessed in-neighbor, so walking
    # backward until a vertex repeats always finds a directed cycle
    left = set(range(n)) - set(order)
    v = min(left)
    seen: dict[int, int] = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = next(w for w in og.in_neighbors(v) if w in left)
    return False, walk[seen[v]:][::-1]


def reachable_from(og: OrientedGraph, u: int) -> frozenset[int]:
    og.graph.check_vertex(u)
    seen = {u}
    stack = [u]
    while stack:
        v = stack.pop()
        for w in og.out_neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def is_trapped(og: OrientedGraph, v: int) -> bool:
    return og.out_degree(v) == 0


def is_source_in(og: OrientedGraph, v: int, s: Sequence[int]) -> bool:
    """True iff S is contained in the closed out-neighborhood of v."""
    closed = set(og.out_neighbors(v))
    closed.add(v)
    for w in s:
        og.graph.check_vertex(w)
        if w not in closed:
            return False
    return True


@dataclass(frozen=True)
class PushClass:
    """All orientations reachable from a reference by push sequences."""

    graph: UnderlyingGraph
    ref_bits: int

    @property
    def size(self) -> int:
        return 1 << max(self.graph.n - 1, 0)

    def member(self, index: int) -> OrientedGraph:
        if not 0 <= index < self.size:
            raise IndexError(index)
        return OrientedGraph(self.graph, self.ref_bits, index)

    def index_of(self, og: OrientedGraph) -> int:
        if og.graph is not self.graph and og.graph != self.graph:
            raise ValueError("orientation belongs to a different underlying graph")
        if og.ref_bits != self.ref_bits:
            raise ValueError("orientation belongs to a different push class")
        return og.parity

    def __iter__(self) -> Iterator[OrientedGraph]:
        for p in range(self.size):
            yield self.member(p)


def push_class(og: OrientedGraph) -> PushClass:
    return PushClass(og.graph, og.ref_bits)


def orientation_bits(og: OrientedGraph) -> int:
    """Current direction bits of all edges, as one integer (bit e set = flipped)."""
    bits = 0
    for e in range(og.m):
        bits |= og.edge_flipped(e) << e
    return bits


def same_orientation(a: OrientedGraph, b: OrientedGraph) -> bool:
    return a.graph == b.graph and orientation_bits(a) == orientation_bits(b)


# arc-list text format: "n m" header, then one "u v" line per arc (u -> v)

def parse_arcs(text: str) -> OrientedGraph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty arc-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line: {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header says {m} arcs but {len(rows) - 1} given")
    arcs = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad arc line: {line!r}")
        arcs.append((int(parts[0]), int(parts[1])))
    return validate_graph(n, arcs)


def serialize_arcs(og: OrientedGraph) -> str:
    lines = [f"{og.n} {og.m}"]
    lines.extend(f"{u} {v}" for u, v in og.arcs())
    return "\n".join(lines) + "\n"


def to_dot(og: OrientedGraph, cops: Sequence[int] = (), robber: int | None = None) -> str:
    """GraphViz digraph with optional cop/robber annotations."""
    lines = ["digraph G {"]
    copset = set(cops)
    for v in range(og.n):
        marks = []
        if v in copset:
            marks.append("C")
        if v == robber:
            marks.append("R")
        label = f"{v}" + (f" [{','.join(marks)}]" if marks else "")
        shape = ' shape=doublecircle' if marks else ''
        lines.append(f'  {v} [label="{label}"{shape}];')
    for u, v in og.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
