"""Simple undirected graphs plus the structural queries the rigidity layers need.

Vertices are the integers ``0..n-1``.  Graph values are immutable after
construction, so every query here is safe to share across threads.
"""

from __future__ import annotations

import warnings
from collections import deque
from collections.abc import Iterable

Edge = tuple[int, int]

GRAPH6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Raised when graph input text cannot be parsed."""


class GraphFormatWarning(UserWarning):
    """Non-fatal oddities in graph input (duplicate edges, edge-count mismatch)."""


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def as_vertex_set(vertices: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Sorted tuple of distinct vertex indices, range-checked against ``n``."""
    out = sorted(set(int(v) for v in vertices))
    if out and out[0] < 0:
        raise ValueError(f"negative vertex index {out[0]}")
    if n is not None and out and out[-1] >= n:
        raise ValueError(f"vertex {out[-1]} out of range for n={n}")
    return tuple(out)


class Graph:
    """Immutable simple graph: no self-loops, no parallel edges.

    Adjacency sets and per-vertex neighbor bitmasks are precomputed once;
    bitmasks make clique tests cheap for the construction routines.
    """

    __slots__ = ("n", "edges", "_adj", "_mask")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            seen.add(normalize_edge(u, v))
        self.n = n
        self.edges = frozenset(seen)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._mask = tuple(sum(1 << w for w in a) for a in adj)

    # -- basic queries ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._mask[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """True iff the given vertices are pairwise adjacent."""
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        for v in vs:
            if mask & ~(self._mask[v] | (1 << v)):
                return False
        return True

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self.edges) + [(u, v)])

    def add_edges(self, new_edges: Iterable[Edge]) -> "Graph":
        return Graph(self.n, list(self.edges) + list(new_edges))

    def remove_edges(self, gone: Iterable[Edge]) -> "Graph":
        drop = {normalize_edge(u, v) for u, v in gone}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- serialization ---------------------------------------------------

    def to_edge_list(self) -> str:
        """Canonical edge-list text: header line then sorted edges, byte-stable."""
        lines = [f"{self.n} {self.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"


# -- factories -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + w) for u in range(a) for w in range(b)])


# -- parsing -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" header plus one "u v" line per edge.

    Duplicate edges are dropped with a warning; a mismatch between the
    declared and final edge count is also only a warning.  Malformed lines,
    out-of-range endpoints and self-loops raise ``GraphParseError`` carrying
    the offending line number.
    """
    lines = text.splitlines()
    header_no = None
    for idx, raw in enumerate(lines):
        if raw.strip():
            header_no = idx
            break
    if header_no is None:
        raise GraphParseError("line 1: empty input")
    parts = lines[header_no].split()
    if len(parts) != 2:
        raise GraphParseError(f"line {header_no + 1}: expected header 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"line {header_no + 1}: non-integer header") from None
    if n < 0 or m < 0:
        raise GraphParseError(f"line {header_no + 1}: negative count in header")

    edges: set[Edge] = set()
    for idx in range(header_no + 1, len(lines)):
        raw = lines[idx].strip()
        if not raw:
            continue
        no = idx + 1
        parts = raw.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {no}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {no}: non-integer endpoint") from None
        if u == v:
            raise GraphParseError(f"line {no}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {no}: endpoint out of range [0, {n})")
        e = normalize_edge(u, v)
        if e in edges:
            warnings.warn(
                f"line {no}: duplicate edge ({u},{v}) dropped", GraphFormatWarning
            )
        edges.add(e)
    if len(edges) != m:
        warnings.warn(
            f"edge count mismatch: header says {m}, got {len(edges)} after dedup",
            GraphFormatWarning,
        )
    return Graph(n, edges)


def parse_graph6(text: str) -> Graph:
    """Parse a single graph in graph6 format (optional ">>graph6<<" header)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    s = s.strip()
    if not s:
        raise GraphParseError("empty graph6 payload")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise GraphParseError("invalid graph6 byte")
    if data[0] <= 62:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        pos = 8
    else:
        raise GraphParseError("truncated graph6 size field")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos < need:
        raise GraphParseError("truncated graph6 edge bits")
    bits = []
    for b in data[pos : pos + need]:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse edge-list text, or graph6 when the leading byte says so.

    graph6 is detected by the ">>graph6<<" header or a first byte >= 63
    (edge-list input always starts with a decimal digit).
    """
    stripped = text.lstrip()
    if not stripped:
        raise GraphParseError("line 1: empty input")
    if stripped.startswith(GRAPH6_HEADER) or ord(stripped[0]) >= 63:
        return parse_graph6(text)
    return parse_edge_list(text)


# -- connectivity ----------------------------------------------------------


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths (s,t non-adjacent).

    Unit-capacity max-flow on the split digraph: vertex v becomes arc
    v_in -> v_out of capacity 1, each edge becomes two infinite arcs.
    """
    n = g.n
    big = n + 1
    # node ids: in(v) = 2v, out(v) = 2v + 1
    adj: list[list[list[int]]] = [[] for _ in range(2 * n)]

    def add_arc(a: int, b: int, cap: int) -> None:
        adj[a].append([b, cap, len(adj[b])])
        adj[b].append([a, 0, len(adj[a]) - 1])

    for v in range(n):
        add_arc(2 * v, 2 * v + 1, 1 if v not in (s, t) else big)
    for u, v in g.edges:
        add_arc(2 * u + 1, 2 * v, big)
        add_arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent: list[tuple[int, int] | None] = [None] * (2 * n)
        parent[source] = (-1, -1)
        queue = deque([source])
        while queue and parent[sink] is None:
            a = queue.popleft()
            for i, arc in enumerate(adj[a]):
                b, cap, _ = arc
                if cap > 0 and parent[b] is None:
                    parent[b] = (a, i)
                    queue.append(b)
        if parent[sink] is None:
            return flow
        b = sink
        while b != source:
            a, i = parent[b]  # type: ignore[misc]
            adj[a][i][1] -= 1
            rev = adj[a][i][2]
            adj[b][rev][1] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity.

    Convention: complete graphs have connectivity n-1, disconnected graphs 0.
    Uses the standard candidate-pair scheme around a minimum-degree vertex,
    so only O(n + deg^2) max-flow calls are needed.
    """
    n = g.n
    if n <= 1:
        return 0
    if g.is_complete():
        return n - 1
    if not is_connected(g):
        return 0
    v = min(range(n), key=g.degree)
    best = n - 1
    non_neighbors = [w for w in range(n) if w != v and not g.has_edge(v, w)]
    for w in non_neighbors:
        best = min(best, _local_vertex_connectivity(g, v, w))
    nbrs = sorted(g.neighbors(v))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            if not g.has_edge(x, y):
                best = min(best, _local_vertex_connectivity(g, x, y))
    return best


# -- cliques ---------------------------------------------------------------


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each sorted, in lexicographic order.

    Bron-Kerbosch with pivoting on bitmasks.  Isolated vertices yield
    singleton cliques; the empty graph on 0 vertices yields no cliques.
    """
    n = g.n
    if n == 0:
        return []
    masks = g._mask
    out: list[tuple[int, ...]] = []

    def bits(mask: int) -> list[int]:
        res = []
        while mask:
            b = mask & -mask
            res.append(b.bit_length() - 1)
            mask ^= b
        return res

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(bits(r)))
            return
        pivot_pool = p | x
        pivot = -1
        best = -1
        for u in bits(pivot_pool):
            c = (p & masks[u]).bit_count()
            if c > best:
                best, pivot = c, u
        for v in bits(p & ~masks[pivot]):
            vb = 1 << v
            expand(r | vb, p & masks[v], x & masks[v])
            p ^= vb
            x |= vb

    expand(0, (1 << n) - 1, 0)
    return sorted(out)


# -- subgraphs and paths ---------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the given vertices, relabeled 0..k-1 in sorted order.

    Returns the subgraph together with the relabeling: entry i of the map is
    the original label of new vertex i.
    """
    vs = as_vertex_set(vertices, g.n)
    index = {old: new for new, old in enumerate(vs)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(vs), edges), vs


def path_avoiding(g: Graph, u: int, v: int, v0: Iterable[int]) -> bool:
    """True iff some u-v path has all internal vertices outside ``v0``.

    The edge uv itself counts.  BFS over (V minus v0) plus {u, v}.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoint out of range")
    blocked = set(as_vertex_set(v0, g.n)) - {u, v}
    seen = {u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b == v:
                return True
            if b not in seen and b not in blocked:
                seen.add(b)
                queue.append(b)
    return False
