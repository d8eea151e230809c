"""Static graphs built from words by symbol alternation.

Also provides the metric and traversal utilities the exploration schedulers
need: distances, diameter, minimum degree, and a deterministic spanning
visiting walk.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .words import Symbol, Word

Edge = tuple[Symbol, Symbol]


class DisconnectedGraphError(ValueError):
    """Raised when an operation is only defined on connected graphs."""


def make_edge(u: Symbol, v: Symbol) -> Edge:
    """Normalise an undirected edge so (u, v) and (v, u) compare equal."""
    if u == v:
        raise ValueError(f"self-loops are not edges: {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class StaticGraph:
    """Undirected graph over symbol-labelled vertices.

    Edges are stored once, normalised with the lexicographically smaller
    endpoint first. Immutable after construction.
    """

    vertices: tuple[Symbol, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a graph needs at least one vertex")
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for u, v in self.edges:
            if u == v or not u < v:
                raise ValueError(f"edge is not normalised: ({u!r}, {v!r})")
            if u not in vset or v not in vset:
                raise ValueError(f"edge uses an unknown vertex: ({u!r}, {v!r})")

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[Symbol],
        edges: Iterable[tuple[Symbol, Symbol]] = (),
    ) -> "StaticGraph":
        """Build a graph from any iterable of vertices and unordered edges."""
        vs = tuple(sorted(set(vertices)))
        es = frozenset(make_edge(u, v) for u, v in edges)
        return cls(vs, es)

    @cached_property
    def adjacency(self) -> dict[Symbol, frozenset[Symbol]]:
        acc: dict[Symbol, set[Symbol]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            acc[u].add(v)
            acc[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in acc.items()}

    def degree(self, v: Symbol) -> int:
        self.require_vertex(v)
        return len(self.adjacency[v])

    def require_vertex(self, v: Symbol) -> None:
        if v not in self.adjacency:
            raise ValueError(f"unknown vertex: {v!r}")


def build_graph(word: Word) -> StaticGraph:
    """Graph with one vertex per letter of ``word`` and an edge wherever two
    symbols alternate."""
    if len(word) == 0:
        raise ValueError("cannot build a graph from the empty word")
    occurrences = word.occurrences
    vertices = tuple(sorted(word.alphabet))
    edges = set()
    for x, y in combinations(vertices, 2):
        if _alternating_positions(occurrences[x], occurrences[y]):
            edges.add((x, y))
    return StaticGraph(vertices, frozenset(edges))


def _alternating_positions(px: tuple[int, ...], py: tuple[int, ...]) -> bool:
    # Merge two strictly increasing position runs; alternation fails exactly
    # when two consecutive merged positions come from the same run.
    i = j = 0
    last_was_x: bool | None = None
    while i < len(px) or j < len(py):
        take_x = j == len(py) or (i < len(px) and px[i] < py[j])
        if take_x == last_was_x:
            return False
        last_was_x = take_x
        if take_x:
            i += 1
        else:
            j += 1
    return True


def _bfs_distances(graph: StaticGraph, source: Symbol) -> dict[Symbol, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in graph.adjacency[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance(graph: StaticGraph, u: Symbol, v: Symbol) -> int | None:
    """Shortest-path length between two vertices, or None when unreachable."""
    graph.require_vertex(u)
    graph.require_vertex(v)
    if u == v:
        return 0
    return _bfs_distances(graph, u).get(v)


def is_connected(graph: StaticGraph) -> bool:
    return len(_bfs_distances(graph, graph.vertices[0])) == len(graph.vertices)


def diameter(graph: StaticGraph) -> int:
    """Largest pairwise distance. Undefined (raises) on disconnected graphs."""
    best = 0
    for source in graph.vertices:
        dist = _bfs_distances(graph, source)
        if len(dist) != len(graph.vertices):
            raise DisconnectedGraphError("diameter is undefined: graph is disconnected")
        best = max(best, max(dist.values()))
    return best


def min_degree(graph: StaticGraph) -> int:
    return min(len(graph.adjacency[v]) for v in graph.vertices)


def spanning_walk(graph: StaticGraph, start: Symbol) -> list[tuple[Symbol, Symbol]]:
    """A walk from ``start`` whose traversal visits every vertex.

    The walk is the depth-first tree tour rooted at ``start``, truncated
    immediately after the last first-visit, so it has at most 2(n-1) edges.
    Neighbours are explored in token order, making the output deterministic.
    Edges are returned directed in traversal order.
    """
    graph.require_vertex(start)
    if not is_connected(graph):
        raise DisconnectedGraphError("graph is not explorable: it is disconnected")
    seen = {start}
    walk: list[tuple[Symbol, Symbol]] = []
    last_discovery = 0
    stack: list[tuple[Symbol, Iterator[Symbol]]] = [
        (start, iter(sorted(graph.adjacency[start])))
    ]
    while stack:
        v, neighbours = stack[-1]
        descended = False
        for u in neighbours:
            if u not in seen:
                seen.add(u)
                walk.append((v, u))
                last_discovery = len(walk)
                stack.append((u, iter(sorted(graph.adjacency[u]))))
                descended = True
                break
        if not descended:
            stack.pop()
            if stack:
                walk.append((v, stack[-1][0]))
    return walk[:last_discovery]
