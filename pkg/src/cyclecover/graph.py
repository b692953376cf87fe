"""Mutable undirected simple graph with stable, never-reused vertex ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

VertexId = int


class Graph:
    """Adjacency-set graph: no self-loops, no parallel edges.

    Ids are arbitrary non-negative ints and need not be contiguous. Once an id
    has been used it is retired forever on deletion; fresh ids from
    ``add_vertex()`` are strictly larger than any id ever seen, so traces and
    certificates can refer to deleted vertices without ambiguity.
    """

    __slots__ = ("_adj", "_m", "_next_id", "_retired")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._m = 0
        self._next_id = 0
        self._retired: set[int] = set()

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], vertices: Iterable[int] = ()) -> "Graph":
        """Build a graph from unordered id pairs; duplicates dedup silently."""
        g = cls()
        for v in vertices:
            if not g.has_vertex(v):
                g.add_vertex(v)
        for pair in edges:
            u, v = pair
            g.add_edge(u, v)
        return g

    # mutation

    def add_vertex(self, v: int | None = None) -> int:
        if v is None:
            v = self._next_id
        if v < 0:
            raise ValueError(f"vertex id must be non-negative, got {v}")
        if v in self._adj:
            raise ValueError(f"vertex {v} is already present")
        if v in self._retired:
            raise ValueError(f"vertex id {v} was deleted and may not be reused")
        self._adj[v] = set()
        self._next_id = max(self._next_id, v + 1)
        return v

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        for x in (u, v):
            if x not in self._adj:
                self.add_vertex(x)
        if v not in self._adj[u]:
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._m += 1

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self._adj.get(u, ()):
            raise ValueError(f"edge {{{u}, {v}}} is not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def remove_vertex(self, v: int) -> None:
        nbrs = self._require(v)
        for w in nbrs:
            self._adj[w].discard(v)
        self._m -= len(nbrs)
        del self._adj[v]
        self._retired.add(v)

    def contract_pair(self, keep: int, absorb: int) -> None:
        """Re-home absorb's edges onto keep, then delete absorb.

        Parallel edges collapse; a keep-absorb edge becomes a self-loop and is
        dropped.
        """
        if keep == absorb:
            raise ValueError("contract_pair needs two distinct vertices")
        self._require(keep)
        nbrs = self._require(absorb)
        for w in list(nbrs):
            self.remove_edge(absorb, w)
            if w != keep:
                self.add_edge(keep, w)
        del self._adj[absorb]
        self._retired.add(absorb)

    # queries

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v: int) -> int:
        return len(self._require(v))

    def neighbors(self, v: int) -> set[int]:
        """Live neighbor set. Treat as read-only; mutate via graph methods."""
        return self._require(v)

    def closed_neighborhood(self, v: int) -> set[int]:
        return self._require(v) | {v}

    def vertices(self) -> Iterator[int]:
        return iter(self._adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def num_vertices(self) -> int:
        return len(self._adj)

    def num_edges(self) -> int:
        return self._m

    def max_degree(self) -> int:
        if not self._adj:
            return 0
        return max(len(nbrs) for nbrs in self._adj.values())

    def min_degree(self) -> int:
        if not self._adj:
            return 0
        return min(len(nbrs) for nbrs in self._adj.values())

    def connected_components(self) -> list[list[int]]:
        """Components as sorted id lists, ordered by smallest member."""
        seen: set[int] = set()
        comps: list[list[int]] = []
        for s in sorted(self._adj):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comp.sort()
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def is_forest(self) -> bool:
        # acyclic iff m = n - c
        return self._m == len(self._adj) - len(self.connected_components())

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        keep_set = set(keep)
        sub = Graph()
        for v in keep_set:
            self._require(v)
            sub.add_vertex(v)
        for v in keep_set:
            for w in self._adj[v]:
                if w in keep_set and v < w:
                    sub.add_edge(v, w)
        sub._next_id = self._next_id
        return sub

    def clone(self) -> "Graph":
        g = Graph()
        g._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        g._m = self._m
        g._next_id = self._next_id
        g._retired = set(self._retired)
        return g

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges())

    def check_invariants(self) -> None:
        """Symmetry and the degree-sum identity; raises AssertionError."""
        total = 0
        for u, nbrs in self._adj.items():
            if u in nbrs:
                raise AssertionError(f"self-loop at {u}")
            for v in nbrs:
                if u not in self._adj.get(v, ()):
                    raise AssertionError(f"asymmetric edge {{{u}, {v}}}")
            total += len(nbrs)
        if total != 2 * self._m:
            raise AssertionError(f"degree sum {total} != 2m = {2 * self._m}")

    def _require(self, v: int) -> set[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not live") from None

    def __repr__(self) -> str:
        return f"Graph(n={len(self._adj)}, m={self._m})"
