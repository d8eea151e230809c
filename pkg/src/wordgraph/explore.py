"""Exploration of temporal graphs.

Two entry points answer the same question at different costs:

* ``schedule_explore`` realises a spanning visiting walk as a temporal walk by
  waiting at each vertex for the next activation of the walk's next edge. Its
  length is structurally bounded by 2(n-1)(B+1), where B is the minimum
  degree (always-connected mode) or the diameter (general mode), provided the
  lifetime is long enough.
* ``oracle_explore`` finds the exact optimum by shortest-path search over
  (visited set, current vertex) states; exponential in n, so it is guarded by
  a vertex limit.

The agent occupies its start vertex at time 0 and may move first at timestep
1; it traverses at most one edge per timestep, and waiting consumes
timesteps.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graphs import (
    DisconnectedGraphError,
    diameter,
    is_connected,
    make_edge,
    min_degree,
    spanning_walk,
)
from .temporal import TemporalGraph, next_activation
from .words import Symbol

MODE_ALWAYS_CONNECTED = "always-connected"
MODE_GENERAL = "general"
MODE_AUTO = "auto"

Step = tuple[tuple[Symbol, Symbol], int]


@dataclass(frozen=True)
class Schedule:
    """A temporal walk: directed (edge, timestep) steps with rising timesteps.

    ``length`` is the timestep of the final step, 0 for the empty schedule.
    """

    start: Symbol
    steps: tuple[Step, ...] = ()

    @property
    def length(self) -> int:
        return self.steps[-1][1] if self.steps else 0

    def visited(self) -> frozenset[Symbol]:
        out = {self.start}
        for (u, v), _ in self.steps:
            out.add(u)
            out.add(v)
        return frozenset(out)


@dataclass(frozen=True)
class ExplorationResult:
    schedule: Schedule
    visited_all: bool
    waits: tuple[int, ...]
    mode: str


@dataclass(frozen=True)
class ScheduleViolation:
    """First condition a schedule breaks; ``step`` is 1-based, None for
    whole-schedule conditions."""

    kind: str
    step: int | None
    message: str


@dataclass(frozen=True)
class OracleResult:
    length: int | None
    schedule: Schedule | None

    @property
    def feasible(self) -> bool:
        return self.schedule is not None


def resolve_mode(tg: TemporalGraph, mode: str) -> str:
    if mode == MODE_AUTO:
        return MODE_ALWAYS_CONNECTED if tg.always_connected else MODE_GENERAL
    if mode in (MODE_ALWAYS_CONNECTED, MODE_GENERAL):
        return mode
    raise ValueError(f"unknown mode: {mode!r}")


def schedule_explore(
    tg: TemporalGraph, start: Symbol, mode: str = MODE_AUTO
) -> ExplorationResult:
    """Follow a spanning visiting walk, waiting for each edge to activate.

    Returns a complete schedule whenever the lifetime suffices; otherwise the
    partial schedule built so far, with ``visited_all`` False.
    """
    graph = tg.base
    graph.require_vertex(start)
    if not is_connected(graph):
        raise DisconnectedGraphError(
            "temporal graph is not explorable: underlying graph is disconnected"
        )
    used_mode = resolve_mode(tg, mode)
    steps: list[Step] = []
    waits: list[int] = []
    now = 0
    for u, v in spanning_walk(graph, start):
        t = next_activation(tg, (u, v), now)
        if t is None:
            partial = Schedule(start, tuple(steps))
            return ExplorationResult(
                schedule=partial,
                visited_all=partial.visited() == frozenset(graph.vertices),
                waits=tuple(waits),
                mode=used_mode,
            )
        waits.append(t - now - 1)
        steps.append(((u, v), t))
        now = t
    schedule = Schedule(start, tuple(steps))
    return ExplorationResult(
        schedule=schedule,
        visited_all=schedule.visited() == frozenset(graph.vertices),
        waits=tuple(waits),
        mode=used_mode,
    )


def validate_schedule(tg: TemporalGraph, schedule: Schedule) -> ScheduleViolation | None:
    """Check a schedule against the temporal graph; None means it is valid.

    Conditions, in reporting order per step: timesteps strictly increase, the
    walk chains from the start vertex, the timestep is within the lifetime,
    the edge exists in the underlying graph and is active at its timestep.
    Finally the schedule must visit every vertex.
    """
    previous_t = 0
    position = schedule.start
    for index, ((u, v), t) in enumerate(schedule.steps, start=1):
        if t <= previous_t:
            return ScheduleViolation(
                "timesteps-not-increasing",
                index,
                f"step {index} at t={t} does not follow t={previous_t}",
            )
        if u != position:
            return ScheduleViolation(
                "broken-walk",
                index,
                f"step {index} leaves {u} but the agent is at {position}",
            )
        if not 1 <= t <= tg.lifetime:
            return ScheduleViolation(
                "timestep-out-of-range",
                index,
                f"step {index} at t={t} outside [1, {tg.lifetime}]",
            )
        try:
            edge = make_edge(u, v)
        except ValueError:
            return ScheduleViolation("unknown-edge", index, f"step {index} is a self-loop")
        if edge not in tg.base.edges:
            return ScheduleViolation(
                "unknown-edge",
                index,
                f"step {index} uses ({u}, {v}), not an underlying edge",
            )
        if edge not in tg.active[t - 1]:
            return ScheduleViolation(
                "edge-inactive",
                index,
                f"step {index}: edge ({u}, {v}) is inactive at t={t}",
            )
        previous_t = t
        position = v
    missing = frozenset(tg.base.vertices) - schedule.visited()
    if missing:
        names = ", ".join(sorted(sym.token for sym in missing))
        return ScheduleViolation(
            "incomplete-coverage", None, f"schedule never visits: {names}"
        )
    return None


def oracle_explore(
    tg: TemporalGraph, start: Symbol, vertex_limit: int = 15
) -> OracleResult:
    """Exact minimum exploration length from ``start``, with a witness.

    Dijkstra over (visited set, current vertex) states with arrival time as
    cost; transitions take the next activation of each incident edge. Returns
    an infeasible result when no full-coverage state is reachable within the
    lifetime. Refuses graphs larger than ``vertex_limit`` vertices, since the
    state space is 2^n * n.
    """
    graph = tg.base
    graph.require_vertex(start)
    n = len(graph.vertices)
    if n > vertex_limit:
        raise ValueError(
            f"oracle refused: {n} vertices exceeds the limit of {vertex_limit}"
        )
    index = {v: i for i, v in enumerate(graph.vertices)}
    full = (1 << n) - 1
    start_mask = 1 << index[start]
    if full == start_mask:
        return OracleResult(0, Schedule(start))

    best: dict[tuple[int, Symbol], int] = {(start_mask, start): 0}
    parent: dict[tuple[int, Symbol], tuple[int, Symbol, int]] = {}
    heap: list[tuple[int, int, int]] = [(0, start_mask, index[start])]
    by_index = graph.vertices
    goal: tuple[int, Symbol] | None = None
    while heap:
        t, mask, vi = heapq.heappop(heap)
        v = by_index[vi]
        if best.get((mask, v), -1) != t:
            continue
        if mask == full:
            goal = (mask, v)
            break
        for u in sorted(graph.adjacency[v]):
            t_next = next_activation(tg, (v, u), t)
            if t_next is None:
                continue
            state = (mask | (1 << index[u]), u)
            if state not in best or t_next < best[state]:
                best[state] = t_next
                parent[state] = (mask, v, t_next)
                heapq.heappush(heap, (t_next, state[0], index[u]))
    if goal is None:
        return OracleResult(None, None)

    steps: list[Step] = []
    state = goal
    while state in parent:
        prev_mask, prev_v, t = parent[state]
        steps.append(((prev_v, state[1]), t))
        state = (prev_mask, prev_v)
    steps.reverse()
    schedule = Schedule(start, tuple(steps))
    return OracleResult(schedule.length, schedule)


def exploration_bound(tg: TemporalGraph, mode: str = MODE_AUTO) -> tuple[int, int]:
    """(headline bound, structural bound) for the walk-following scheduler.

    Always-connected mode uses B = minimum degree, general mode B = diameter.
    The headline figure is 2*B*n; the bound the construction literally
    guarantees is 2(n-1)(B+1), counting at most B+1 timesteps per walk edge.
    """
    graph = tg.base
    if not is_connected(graph):
        raise DisconnectedGraphError(
            "exploration bounds are undefined: underlying graph is disconnected"
        )
    used_mode = resolve_mode(tg, mode)
    n = len(graph.vertices)
    bound_base = min_degree(graph) if used_mode == MODE_ALWAYS_CONNECTED else diameter(graph)
    return 2 * bound_base * n, 2 * (n - 1) * (bound_base + 1)
