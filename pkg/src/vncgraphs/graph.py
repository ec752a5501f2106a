"""Simple undirected graphs as sorted adjacency lists over 0-based vertices.

Includes the structural queries used by the certification pipeline: girth,
connectivity, induced subgraphs, quotient graphs and s-arc counting.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .group import OrbitPartition


class Graph:
    """Immutable simple graph: no loops, no multi-edges, symmetric adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        if len(adj) != n:
            raise ValueError("adjacency list length does not match n")
        rows = []
        for v, nbrs in enumerate(adj):
            row = tuple(sorted(nbrs))
            if any(w == v for w in row):
                raise ValueError(f"loop at vertex {v}")
            if any(row[i] == row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"multi-edge at vertex {v}")
            if row and (row[0] < 0 or row[-1] >= n):
                raise ValueError(f"neighbor out of range at vertex {v}")
            rows.append(row)
        for v, row in enumerate(rows):
            for w in row:
                if v not in rows[w]:
                    raise ValueError(f"asymmetric adjacency: {v}->{w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # --- construction ---------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build from an edge list; duplicates collapse, loops are errors."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [sorted(s) for s in nbrs])

    def relabeled(self, mapping: Sequence[int]) -> Graph:
        """Image graph under the vertex bijection v -> mapping[v]."""
        if sorted(mapping) != list(range(self.n)):
            raise ValueError("mapping is not a bijection on the vertices")
        return Graph.from_edges(
            self.n, [(mapping[u], mapping[v]) for u, v in self.edges()])

    # --- basic queries ----------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(row) for row in self.adj))

    def is_regular(self, k: int | None = None) -> bool:
        degs = {len(row) for row in self.adj}
        if len(degs) > 1:
            return False
        if k is None:
            return True
        return not degs or degs == {k}

    def is_cubic(self) -> bool:
        return self.n > 0 and self.is_regular(3)

    def num_edges(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    # --- connectivity, distances, girth ------------------------------------

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n

    def bfs_distances(self, root: int) -> list[int | float]:
        dist: list[int | float] = [math.inf] * self.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] == math.inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int | float:
        if self.n == 0:
            return 0
        best = 0
        for v in range(self.n):
            worst = max(self.bfs_distances(v))
            if worst is math.inf:
                return math.inf
            best = max(best, worst)
        return best

    def girth(self) -> int | float:
        """Length of a shortest cycle; ``math.inf`` for forests."""
        best = math.inf
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] >= best:
                    continue
                for w in self.adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        # non-tree edge closes a cycle through the root side
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    # --- derived graphs -----------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph on the given vertex set, relabeled 0..|B|-1 in order.

        Returns the graph together with the list mapping new index ->
        original vertex.
        """
        order = sorted(set(vertices))
        if order and (order[0] < 0 or order[-1] >= self.n):
            raise ValueError("vertex out of range")
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges()
                 if u in index and v in index]
        return Graph.from_edges(len(order), edges), order

    def quotient_graph(self, partition: OrbitPartition) -> Graph:
        """Graph on the blocks; blocks adjacent iff some cross edge exists.

        Intra-block edges are dropped (the simple-graph quotient); analyse
        them separately with ``induced_subgraph``.
        """
        if partition.degree != self.n:
            raise ValueError("partition does not cover the vertex set")
        block_of = partition.block_of
        edges = set()
        for u, v in self.edges():
            bu, bv = block_of[u], block_of[v]
            if bu != bv:
                edges.add((min(bu, bv), max(bu, bv)))
        return Graph.from_edges(len(partition), sorted(edges))

    # --- s-arcs ---------------------------------------------------------

    def count_s_arcs(self, s: int) -> int:
        """Number of s-arcs: walks (v0,...,vs) with no immediate backtrack."""
        if s < 0:
            raise ValueError("s must be nonnegative")
        if s == 0:
            return self.n
        # counts[(u, v)] = number of k-arcs ending with the arc u -> v
        counts = {(u, v): 1 for u in range(self.n) for v in self.adj[u]}
        for _ in range(s - 1):
            nxt = {}
            for (u, v), c in counts.items():
                for w in self.adj[v]:
                    if w != u:
                        key = (v, w)
                        nxt[key] = nxt.get(key, 0) + c
            counts = nxt
        return sum(counts.values())

    def s_arcs(self, s: int) -> Iterator[tuple[int, ...]]:
        """Enumerate all s-arcs (used as an oracle at small scale)."""
        if s == 0:
            for v in range(self.n):
                yield (v,)
            return
        stack: list[tuple[int, ...]] = []
        for u in range(self.n):
            for v in self.adj[u]:
                stack.append((u, v))
        for start in stack:
            partial = [start]
            while partial:
                walk = partial.pop()
                if len(walk) == s + 1:
                    yield walk
                    continue
                u, v = walk[-2], walk[-1]
                for w in self.adj[v]:
                    if w != u:
                        partial.append(walk + (w,))

    # --- serialization -----------------------------------------------------

    def to_edge_lines(self) -> list[str]:
        """Edge-list format: first line "n m", then "u v" with u < v sorted."""
        lines = [f"{self.n} {self.num_edges()}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return lines

    @classmethod
    def from_edge_lines(cls, lines: Iterable[str]) -> Graph:
        """Parse the edge-list format; lines starting with '#' are ignored."""
        body = [ln.strip() for ln in lines]
        body = [ln for ln in body if ln and not ln.startswith("#")]
        if not body:
            raise ValueError("empty edge-list data")
        head = body[0].split()
        n, m = int(head[0]), int(head[1])
        edges = []
        for ln in body[1:]:
            u, v = map(int, ln.split())
            edges.append((u, v))
        if len(edges) != m:
            raise ValueError(f"expected {m} edges, found {len(edges)}")
        return cls.from_edges(n, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines)


def is_s_arc(graph: Graph, walk: Sequence[int]) -> bool:
    """Check the s-arc conditions: consecutive adjacency, no backtracking."""
    if any(not graph.has_edge(walk[i], walk[i + 1]) for i in range(len(walk) - 1)):
        return False
    return all(walk[i - 1] != walk[i + 1] for i in range(1, len(walk) - 1))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def lexicographic_cycle_2k1(n: int) -> Graph:
    """The 4-regular graph C_n[2K1] on 2n vertices.

    Vertices x_i -> 2i and y_i -> 2i+1; x_i and y_i are never adjacent.
    """
    if n < 3:
        raise ValueError("C_n[2K1] requires n >= 3")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        x_i, y_i, x_j, y_j = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
        edges.extend([(x_i, x_j), (y_i, y_j), (x_i, y_j), (y_i, x_j)])
    return Graph.from_edges(2 * n, edges)
