"""Temporal graphs induced by the timestep partition of a word.

The word is split left to right into factors, opening a new factor at the
first position whose symbol already occurred in the factor being built. Each
factor therefore has pairwise distinct symbols, and every closed interval
between consecutive start points repeats exactly one symbol: the one at the
later start point. Timestep t activates every underlying edge with at least
one endpoint among the letters of factor t.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .graphs import Edge, StaticGraph, build_graph, make_edge
from .words import Symbol, Word


def start_points(word: Word) -> tuple[int, ...]:
    """1-based factor start positions of ``word``; always begins with 1.

    Greedy left-to-right scan: a factor closes right before the first symbol
    already seen since the factor opened, and that symbol opens the next one.
    """
    if len(word) == 0:
        raise ValueError("the empty word has no timestep partition")
    starts = [1]
    seen: set[Symbol] = set()
    for pos, sym in enumerate(word.symbols, start=1):
        if sym in seen:
            starts.append(pos)
            seen = {sym}
        else:
            seen.add(sym)
    return tuple(starts)


@dataclass(frozen=True)
class TemporalGraph:
    """A word together with its timestep partition and per-step edge activity.

    ``active[t-1]`` is the edge set of timestep t (1-based). Immutable after
    construction; all queries are read-only.
    """

    word: Word
    start_points: tuple[int, ...]
    factor_letters: tuple[frozenset[Symbol], ...]
    active: tuple[frozenset[Edge], ...]
    base: StaticGraph

    @property
    def lifetime(self) -> int:
        return len(self.start_points)

    @cached_property
    def factor_bounds(self) -> tuple[tuple[int, int], ...]:
        """Closed 1-based position interval of every factor."""
        ends = tuple(s - 1 for s in self.start_points[1:]) + (len(self.word),)
        return tuple(zip(self.start_points, ends))

    def factor(self, t: int) -> Word:
        """The factor word of timestep ``t``."""
        self._require_timestep(t)
        lo, hi = self.factor_bounds[t - 1]
        return Word(self.word.symbols[lo - 1 : hi])

    def _require_timestep(self, t: int) -> None:
        if not 1 <= t <= self.lifetime:
            raise ValueError(f"timestep {t} outside [1, {self.lifetime}]")

    @cached_property
    def _activation_times(self) -> dict[Edge, tuple[int, ...]]:
        acc: dict[Edge, list[int]] = {e: [] for e in self.base.edges}
        for t, edges in enumerate(self.active, start=1):
            for e in edges:
                acc[e].append(t)
        return {e: tuple(ts) for e, ts in acc.items()}

    @cached_property
    def always_connected(self) -> bool:
        verts = self.base.vertices
        n = len(verts)
        if n == 1:
            return True
        for edges in self.active:
            adjacency: dict[Symbol, list[Symbol]] = {}
            for u, v in edges:
                adjacency.setdefault(u, []).append(v)
                adjacency.setdefault(v, []).append(u)
            reached = {verts[0]}
            queue = deque([verts[0]])
            while queue:
                v = queue.popleft()
                for u in adjacency.get(v, ()):
                    if u not in reached:
                        reached.add(u)
                        queue.append(u)
            if len(reached) != n:
                return False
        return True


def build_temporal(word: Word) -> TemporalGraph:
    """Materialise the temporal graph of ``word``."""
    base = build_graph(word)
    starts = start_points(word)
    ends = tuple(s - 1 for s in starts[1:]) + (len(word),)
    letters = tuple(
        frozenset(word.symbols[lo - 1 : hi]) for lo, hi in zip(starts, ends)
    )
    adjacency = base.adjacency
    active = []
    for factor in letters:
        edges: set[Edge] = set()
        for sym in factor:
            for nb in adjacency[sym]:
                edges.add(make_edge(sym, nb))
        active.append(frozenset(edges))
    return TemporalGraph(
        word=word,
        start_points=starts,
        factor_letters=letters,
        active=tuple(active),
        base=base,
    )


def is_edge_active(tg: TemporalGraph, e: tuple[Symbol, Symbol], t: int) -> bool:
    """Membership of an underlying edge in timestep ``t``'s edge set."""
    tg._require_timestep(t)
    edge = make_edge(*e)
    if edge not in tg.base.edges:
        raise ValueError(f"not an underlying edge: ({e[0]!r}, {e[1]!r})")
    return edge in tg.active[t - 1]


def next_activation(tg: TemporalGraph, e: tuple[Symbol, Symbol], t: int) -> int | None:
    """Smallest timestep strictly after ``t`` at which ``e`` is active.

    ``t`` may be 0, meaning "before time begins". Returns None when the edge
    never activates again within the lifetime.
    """
    if t < 0:
        raise ValueError(f"timestep cursor must be >= 0, got {t}")
    edge = make_edge(*e)
    times = tg._activation_times.get(edge)
    if times is None:
        raise ValueError(f"not an underlying edge: ({e[0]!r}, {e[1]!r})")
    idx = bisect_right(times, t)
    return times[idx] if idx < len(times) else None


def underlying(tg: TemporalGraph) -> StaticGraph:
    """The union of all timestep edge sets; identical to the base graph."""
    return tg.base


def is_always_connected(tg: TemporalGraph) -> bool:
    """True when every timestep's graph is one component spanning all vertices."""
    return tg.always_connected
