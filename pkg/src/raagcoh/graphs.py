"""Finite simplicial graphs on vertices 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from raagcoh.errors import GraphFormatError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u} {v} out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return sorted(w for e in self.edges if v in e for w in e if w != v)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def permuted(self, perm) -> "Graph":
        """Image of this graph under the relabeling v -> perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabeled 0..k-1, plus the map back into self."""
        back = tuple(sorted(vertices))
        index = {v: i for i, v in enumerate(back)}
        sub = Graph.from_edges(len(back), ((index[u], index[v]) for u, v in self.edges
                                           if u in index and v in index))
        return sub, back

    def __str__(self):
        return format_graph(self)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph.from_edges(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def parse_graph(text: str) -> Graph:
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) != 2:
                raise GraphFormatError("expected 'graph <n>' header", lineno)
            n = _parse_int(parts[1], lineno)
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
            continue
        if parts[0] != "edge" or len(parts) != 3:
            raise GraphFormatError(f"expected 'edge <u> <v>', got {line!r}", lineno)
        u, v = _parse_int(parts[1], lineno), _parse_int(parts[2], lineno)
        if u == v:
            raise GraphFormatError(f"loop edge at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range (n={n})", lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        edges.add(key)
    if n is None:
        raise GraphFormatError("missing 'graph <n>' header", 1)
    return Graph(n, frozenset(edges))


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"not an integer: {tok!r}", lineno) from None


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"] + [f"edge {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return sum(1 for e in g.edges if v in e)


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as (induced subgraph, relabeling back into g),
    ordered by smallest original vertex."""
    adj = g.adjacency()
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(g.induced(comp))
    return out


@dataclass(frozen=True)
class IsoWitness:
    # mapping[v] is the image in the second graph of vertex v of the first
    mapping: tuple[int, ...]

    def check(self, g: Graph, h: Graph) -> bool:
        m = self.mapping
        return (g.n == h.n and sorted(m) == list(range(g.n))
                and g.permuted(m).edges == h.edges)


def _colors(g: Graph, adj) -> list[tuple]:
    deg = [len(a) for a in adj]
    return [(deg[v], tuple(sorted(deg[w] for w in adj[v]))) for v in range(g.n)]


def are_isomorphic(g: Graph, h: Graph) -> Optional[IsoWitness]:
    """Backtracking isomorphism test with degree/neighbour-degree refinement.

    Vertices of g are mapped in index order, candidates in h are tried in
    ascending order, so the returned witness is the lexicographically first.
    """
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    adj_g, adj_h = g.adjacency(), h.adjacency()
    col_g, col_h = _colors(g, adj_g), _colors(h, adj_h)
    if sorted(col_g) != sorted(col_h):
        return None
    n = g.n
    candidates = [[w for w in range(n) if col_h[w] == col_g[v]] for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            if all((mapping[u] in adj_h[w]) == (u in adj_g[v]) for u in range(v)):
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    if extend(0):
        return IsoWitness(tuple(mapping))
    return None
