"""Branch-vertex selection for graphs of minimum degree 3.

The dispatch is a greedy heuristic: take the highest-degree vertex, and among
degree-4 candidates prefer one with coupled satellites, otherwise maximize a
conservative estimate of how much cycle structure each branch destroys. The
estimate components are lower bounds on the tau drop only for children that
stay connected (and, on the exclude side, only while the neighborhood stays
sparse); correctness never depends on them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graph import Graph
from .reductions import satellites


class RuleTag(Enum):
    HIGH_DEGREE = "high_degree_ge5"
    DEGREE4 = "degree4"
    DEGREE3_REGULAR = "degree3_regular"


@dataclass(frozen=True)
class BranchPlan:
    vertex: int
    satellites: frozenset[int]
    rule_tag: RuleTag
    note: str
    est_vector: tuple[int, int]


def estimate_vector(g: Graph, v: int) -> tuple[int, int]:
    """(include, exclude) estimates of the tau drop.

    Include: removing v costs its degree minus one circuit-rank units.
    Exclude: removing N[v] costs at least the neighbors' degree sum minus
    2 deg(v) minus 1, clamped at zero.
    """
    d = g.degree(v)
    if d < 3:
        raise ValueError(f"estimate needs degree >= 3, got {d}")
    neighbor_sum = sum(g.degree(w) for w in g.neighbors(v))
    include = d - 1
    exclude = max(0, neighbor_sum - 2 * d + 1)
    return include, exclude


def coupled_satellites(g: Graph, v: int) -> frozenset[int]:
    """Satellites safe for coupled branching.

    Coupling z with v is justified by an exchange argument that needs at least
    one excluded neighbor of v inside N(z), which holds whenever
    deg(z) >= deg(v) - 1. Lower-degree satellites are left uncoupled.
    """
    d = g.degree(v)
    return frozenset(z for z in satellites(g, v) if g.degree(z) >= d - 1)


def shortest_cycle_through(g: Graph, v: int) -> int:
    """Length of the shortest cycle containing v; a large sentinel when v lies
    on none. One BFS per incident edge, with that edge removed."""
    best = g.num_vertices() + 1
    for w in sorted(g.neighbors(v)):
        dist = _bfs_avoiding_edge(g, v, w)
        if dist is not None:
            best = min(best, dist + 1)
    return best


def _bfs_avoiding_edge(g: Graph, src: int, dst: int) -> int | None:
    seen = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for x in g.neighbors(u):
            if u == src and x == dst:
                continue
            if x not in seen:
                seen[x] = seen[u] + 1
                if x == dst:
                    return seen[x]
                queue.append(x)
    return None


def select(g: Graph) -> BranchPlan:
    """Pick the branch vertex for a reduced graph (minimum degree >= 3)."""
    if g.num_vertices() == 0:
        raise ValueError("cannot select from an empty graph")
    if g.min_degree() < 3:
        raise ValueError("selection expects minimum degree >= 3; reduce first")
    maxdeg = g.max_degree()
    if maxdeg >= 5:
        v = min(u for u in g.vertices() if g.degree(u) == maxdeg)
        return BranchPlan(
            vertex=v,
            satellites=coupled_satellites(g, v),
            rule_tag=RuleTag.HIGH_DEGREE,
            note=f"degree-{maxdeg} vertex, min id among maximum degree",
            est_vector=estimate_vector(g, v),
        )
    if maxdeg == 4:
        cands = [u for u in sorted(g.vertices()) if g.degree(u) == 4]
        sats = {u: coupled_satellites(g, u) for u in cands}
        pool = [u for u in cands if sats[u]] or cands
        v = max(pool, key=lambda u: (estimate_vector(g, u)[1], -u))
        note = (
            f"degree-4 vertex with {len(sats[v])} coupled satellite(s)"
            if sats[v]
            else "degree-4 vertex maximizing the exclude estimate"
        )
        return BranchPlan(
            vertex=v,
            satellites=sats[v],
            rule_tag=RuleTag.DEGREE4,
            note=note,
            est_vector=estimate_vector(g, v),
        )
    # 3-regular: the exclude estimate ties, so bias toward short cycles
    v = min(sorted(g.vertices()), key=lambda u: (shortest_cycle_through(g, u), u))
    return BranchPlan(
        vertex=v,
        satellites=coupled_satellites(g, v),
        rule_tag=RuleTag.DEGREE3_REGULAR,
        note=f"3-regular, on a cycle of length {shortest_cycle_through(g, v)}",
        est_vector=estimate_vector(g, v),
    )
