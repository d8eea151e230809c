"""Mechanical checkers for the structural guarantees of word-built temporal
graphs.

Each checker takes a temporal graph and returns a LemmaReport: either the
preconditions did not hold (not applicable, vacuously passing, with a note),
or the property was checked everywhere it is quantified and any violations
are listed with concrete witnesses. The properties are theorems of the
construction, so a violation on any input means an implementation bug; the
checkers exist to make that falsifiable on arbitrary inputs.

Checker ids, their claims, and their witness tuples:

* letter-recurrence (always-connected only): every symbol occurs in every
  window of degree(v)+1 consecutive factors that fits inside the lifetime.
  Witness: (token, window_start).
* edge-recurrence (always-connected only): every underlying edge is active in
  every window of delta+1 consecutive timesteps (delta = minimum degree), and
  in every window of min(deg(u), deg(v))+1 timesteps.
  Witness: (window_kind, u, v, window_start).
* occurrence-balance (connected underlying only): occurrence counts of any
  two symbols differ by at most their distance.
  Witness: (x, y, count_x, count_y, distance).
* interleaving (connected underlying only): for symbols x, y at distance d',
  the i-th occurrence position of y lies between the (i-d')-th and (i+d')-th
  occurrence positions of x, out-of-range indices meaning -inf/+inf.
  Witness: (x, y, i).
* union-windows (connected underlying only): (a) the first d timestep edge
  sets union to the underlying edge set, d the diameter; (b) an edge active
  at t <= T-d-1 is active again within [t+1, t+d+1]; (c) every window of d+1
  consecutive timesteps unions to the underlying edge set. Windows that do
  not fit inside the lifetime are skipped and noted.
  Witness: ("first-window", u, v) | ("reactivation", u, v, t)
  | ("window-union", t, u, v).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import StaticGraph, _bfs_distances, is_connected
from .temporal import TemporalGraph

LETTER_RECURRENCE = "letter-recurrence"
EDGE_RECURRENCE = "edge-recurrence"
OCCURRENCE_BALANCE = "occurrence-balance"
INTERLEAVING = "interleaving"
UNION_WINDOWS = "union-windows"


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    applicable: bool
    passed: bool
    violations: tuple[tuple, ...] = ()
    notes: str = ""

    def __post_init__(self) -> None:
        if self.applicable and self.passed != (not self.violations):
            raise ValueError("pass must mirror the absence of violations")
        if not self.applicable and (not self.passed or self.violations):
            raise ValueError("inapplicable reports pass vacuously, without witnesses")


def _checked(lemma_id: str, violations: list[tuple], notes: str = "") -> LemmaReport:
    return LemmaReport(lemma_id, True, not violations, tuple(violations), notes)


def _vacuous(lemma_id: str, note: str) -> LemmaReport:
    return LemmaReport(lemma_id, False, True, (), note)


def _all_pairs_distances(graph: StaticGraph) -> dict:
    return {v: _bfs_distances(graph, v) for v in graph.vertices}


def check_letter_recurrence(tg: TemporalGraph) -> LemmaReport:
    """Every symbol recurs within any degree(v)+1 consecutive factors."""
    if not tg.always_connected:
        return _vacuous(LETTER_RECURRENCE, "not connected in every timestep")
    lifetime = tg.lifetime
    violations: list[tuple] = []
    unfit: list[str] = []
    for v in tg.base.vertices:
        span = len(tg.base.adjacency[v]) + 1
        if lifetime - span + 1 < 1:
            unfit.append(v.token)
            continue
        for t in range(1, lifetime - span + 2):
            if all(v not in tg.factor_letters[s] for s in range(t - 1, t - 1 + span)):
                violations.append((v.token, t))
    notes = ""
    if unfit:
        notes = "windows exceed the lifetime for: " + ", ".join(sorted(unfit))
    return _checked(LETTER_RECURRENCE, violations, notes)


def check_edge_recurrence(tg: TemporalGraph) -> LemmaReport:
    """Every edge recurs within delta+1 timesteps, and within
    min(deg(u), deg(v))+1 timesteps."""
    if not tg.always_connected:
        return _vacuous(EDGE_RECURRENCE, "not connected in every timestep")
    lifetime = tg.lifetime
    if not tg.base.edges:
        return _checked(EDGE_RECURRENCE, [], "no edges to check")
    delta = min(len(tg.base.adjacency[v]) for v in tg.base.vertices)
    violations: list[tuple] = []
    any_window = False
    for u, v in sorted(tg.base.edges):
        local = min(len(tg.base.adjacency[u]), len(tg.base.adjacency[v]))
        for kind, gap in (("delta-window", delta), ("min-degree-window", local)):
            for t in range(1, lifetime - gap + 1):
                any_window = True
                if all((u, v) not in tg.active[s] for s in range(t - 1, t + gap)):
                    violations.append((kind, u.token, v.token, t))
    notes = "" if any_window else "no window fits inside the lifetime"
    return _checked(EDGE_RECURRENCE, violations, notes)


def check_occurrence_balance(tg: TemporalGraph) -> LemmaReport:
    """Occurrence counts of two symbols differ by at most their distance."""
    if not is_connected(tg.base):
        return _vacuous(OCCURRENCE_BALANCE, "underlying graph is disconnected")
    counts = {v: len(tg.word.occurrences[v]) for v in tg.base.vertices}
    distances = _all_pairs_distances(tg.base)
    violations: list[tuple] = []
    vertices = tg.base.vertices
    for i, x in enumerate(vertices):
        for y in vertices[i + 1 :]:
            gap = abs(counts[x] - counts[y])
            if gap > distances[x][y]:
                violations.append((x.token, y.token, counts[x], counts[y], distances[x][y]))
    return _checked(OCCURRENCE_BALANCE, violations)


def check_interleaving(tg: TemporalGraph) -> LemmaReport:
    """Occurrences of symbols at distance d' stay within d' occurrence ranks
    of each other."""
    if not is_connected(tg.base):
        return _vacuous(INTERLEAVING, "underlying graph is disconnected")
    distances = _all_pairs_distances(tg.base)
    occurrences = tg.word.occurrences
    violations: list[tuple] = []
    for x in tg.base.vertices:
        chi = occurrences[x]

        def chi_at(rank: int) -> float:
            if rank < 1:
                return float("-inf")
            if rank > len(chi):
                return float("inf")
            return chi[rank - 1]

        for y in tg.base.vertices:
            if x == y:
                continue
            spread = distances[x][y]
            for i, position in enumerate(occurrences[y], start=1):
                if not chi_at(i - spread) <= position <= chi_at(i + spread):
                    violations.append((x.token, y.token, i))
    return _checked(INTERLEAVING, violations)


def check_union_windows(tg: TemporalGraph) -> LemmaReport:
    """Diameter-sized windows of timesteps jointly activate every edge."""
    if not is_connected(tg.base):
        return _vacuous(UNION_WINDOWS, "underlying graph is disconnected")
    graph = tg.base
    lifetime = tg.lifetime
    dia = max(
        max(dist.values()) for dist in _all_pairs_distances(graph).values()
    )
    edges = graph.edges
    violations: list[tuple] = []
    skipped: list[str] = []

    if dia <= lifetime:
        seen = frozenset().union(*tg.active[:dia]) if dia else frozenset()
        for u, v in sorted(edges - seen):
            violations.append(("first-window", u.token, v.token))
    else:
        skipped.append("first-window")

    if lifetime - dia - 1 >= 1:
        for t in range(1, lifetime - dia):
            for u, v in sorted(tg.active[t - 1]):
                if all((u, v) not in tg.active[s] for s in range(t, t + dia + 1)):
                    violations.append(("reactivation", u.token, v.token, t))
    else:
        skipped.append("reactivation")

    if lifetime - dia >= 1:
        for t in range(1, lifetime - dia + 1):
            window = frozenset().union(*tg.active[t - 1 : t + dia])
            for u, v in sorted(edges - window):
                violations.append(("window-union", t, u.token, v.token))
    else:
        skipped.append("window-union")

    if len(skipped) == 3:
        return _vacuous(
            UNION_WINDOWS,
            f"diameter {dia} exceeds lifetime {lifetime}: no window fits",
        )
    notes = ""
    if skipped:
        notes = "skipped (window does not fit): " + ", ".join(skipped)
    return _checked(UNION_WINDOWS, violations, notes)


CHECKS = {
    LETTER_RECURRENCE: check_letter_recurrence,
    EDGE_RECURRENCE: check_edge_recurrence,
    OCCURRENCE_BALANCE: check_occurrence_balance,
    INTERLEAVING: check_interleaving,
    UNION_WINDOWS: check_union_windows,
}


def run_all(tg: TemporalGraph) -> list[LemmaReport]:
    """Run every checker; never raises on any well-formed temporal graph."""
    return [check(tg) for check in CHECKS.values()]
