"""Graph constructions: vertex extensions, the ordered-subgraph builder, and
the clique-split families used for connectivity-versus-rigidity bounds."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph_core import Edge, Graph, vertex_connectivity
from .rigidity import Cover

RULE_FIRST = "first-d-vertices"
RULE_A = "a"
RULE_B = "b"
RULE_C = "c"


def zero_extension(g: Graph, d: int, targets: Iterable[int]) -> Graph:
    """Add a new vertex joined to d distinct existing vertices."""
    ts = list(targets)
    if len(ts) != d:
        raise ValueError(f"need exactly {d} target vertices, got {len(ts)}")
    if len(set(ts)) != len(ts):
        raise ValueError("target vertices must be distinct")
    for t in ts:
        if not (0 <= t < g.n):
            raise ValueError(f"target {t} out of range")
    new = g.n
    return Graph(g.n + 1, list(g.edges) + [(t, new) for t in ts])


def one_extension(g: Graph, d: int, edge: Edge, targets: Iterable[int]) -> Graph:
    """Delete edge ab, add a new vertex joined to a, b and d-1 further vertices."""
    a, b = edge
    if not g.has_edge(a, b):
        raise ValueError(f"({a},{b}) is not an edge")
    ts = list(targets)
    if len(ts) != d - 1:
        raise ValueError(f"need exactly {d - 1} further targets, got {len(ts)}")
    anchors = [a, b, *ts]
    if len(set(anchors)) != d + 1:
        raise ValueError("new neighbors must be d+1 distinct vertices")
    for t in ts:
        if not (0 <= t < g.n):
            raise ValueError(f"target {t} out of range")
    new = g.n
    kept = [e for e in g.edges if e != (min(a, b), max(a, b))]
    return Graph(g.n + 1, kept + [(w, new) for w in anchors])


@dataclass(frozen=True)
class GpiStep:
    """Per-vertex trace of the ordered construction."""

    position: int
    vertex: int
    backdeg: int
    rule: str
    chosen: tuple[int, ...]
    nonadjacent_pair: tuple[int, int] | None


@dataclass(frozen=True)
class GpiResult:
    subgraph: Graph
    steps: tuple[GpiStep, ...]

    @property
    def edge_count(self) -> int:
        return self.subgraph.edge_count


def validate_ordering(n: int, ordering: Sequence[int]) -> list[int]:
    order = [int(v) for v in ordering]
    if sorted(order) != list(range(n)):
        raise ValueError("ordering must be a permutation of range(n)")
    return order


def _first_nonadjacent_pair(g: Graph, back: list[int], back_mask: int) -> tuple[int, int]:
    for x in back:
        higher = back_mask & ~g.neighbor_mask(x) & ~((1 << (x + 1)) - 1)
        if higher:
            y = (higher & -higher).bit_length() - 1
            return x, y
    raise AssertionError("no non-adjacent pair in a non-clique set")


def build_gpi(g: Graph, d: int, ordering: Sequence[int]) -> GpiResult:
    """Process vertices in order, keeping a bounded set of backward edges.

    A vertex with at most d earlier neighbors keeps them all; with more, it
    keeps d of them when the earlier neighborhood is a clique, and otherwise
    d+1 of them including a non-adjacent pair.  Choices are deterministic:
    lexicographically smallest admissible sets.  Requires d >= 2.
    """
    if d < 2:
        raise ValueError("ordered construction requires dimension >= 2")
    order = validate_ordering(g.n, ordering)
    placed = 0
    edges: list[Edge] = []
    steps: list[GpiStep] = []
    for i, v in enumerate(order):
        back_mask = g.neighbor_mask(v) & placed
        back = []
        m = back_mask
        while m:
            bit = m & -m
            back.append(bit.bit_length() - 1)
            m ^= bit
        k = len(back)
        pair = None
        if k <= d:
            rule = RULE_FIRST if i < d else RULE_A
            chosen = tuple(back)
        elif g.is_clique(back):
            rule = RULE_B
            chosen = tuple(back[:d])
        else:
            rule = RULE_C
            x, y = _first_nonadjacent_pair(g, back, back_mask)
            pair = (x, y)
            rest = [w for w in back if w != x and w != y]
            chosen = tuple(sorted([x, y, *rest[: d - 1]]))
        edges.extend((v, w) for w in chosen)
        steps.append(GpiStep(i, v, k, rule, chosen, pair))
        placed |= 1 << v
    return GpiResult(Graph(g.n, edges), tuple(steps))


def gpi_edge_count(g: Graph, d: int, ordering: Sequence[int]) -> int:
    """|E_pi| without building the subgraph or trace (Monte Carlo hot path)."""
    if d < 2:
        raise ValueError("ordered construction requires dimension >= 2")
    placed = 0
    total = 0
    for v in ordering:
        back_mask = g.neighbor_mask(v) & placed
        k = back_mask.bit_count()
        if k <= d:
            total += k
        else:
            clique = True
            m = back_mask
            while m:
                bit = m & -m
                u = bit.bit_length() - 1
                if back_mask & ~(g.neighbor_mask(u) | bit):
                    clique = False
                    break
                m ^= bit
            total += d if clique else d + 1
        placed |= 1 << v
    return total


def harary_graph(k: int, s: int) -> Graph:
    """The circulant-style k-connected k-regular graph on s vertices."""
    if not 2 <= k < s:
        raise ValueError("need 2 <= k < s")
    if (k * s) % 2:
        raise ValueError("k*s must be even")
    edges = []
    half = k // 2
    for i in range(s):
        for j in range(1, half + 1):
            edges.append((i, (i + j) % s))
    if k % 2:
        for i in range(s // 2):
            edges.append((i, i + s // 2))
    return Graph(s, edges)


def lovasz_yemini_family(d: int, s: int, base: Graph | None = None) -> tuple[Graph, Cover]:
    """Split-vertex family: highly connected but rank-deficient for large s.

    Every vertex of a k-regular k-connected base graph (k = d(d+1)-1) blows
    up into a k-clique; each base edge becomes a single "split" edge using
    one fresh clique vertex per endpoint.  Returns the graph together with
    its natural cover (split edges loose, one part per clique) for the
    clique-decomposition rank bound.
    """
    if d < 2:
        raise ValueError("family needs dimension >= 2")
    k = d * (d + 1) - 1
    if s < k + 1:
        raise ValueError(f"need s >= {k + 1}")
    if (k * s) % 2:
        raise ValueError("k*s must be even")
    if base is None:
        base = harary_graph(k, s)
    else:
        if base.n != s:
            raise ValueError("base graph must have s vertices")
        if any(base.degree(v) != k for v in range(s)):
            raise ValueError(f"base graph must be {k}-regular")
        if vertex_connectivity(base) != k:
            raise ValueError(f"base graph must be exactly {k}-connected")
    next_free = [v * k for v in range(s)]
    split: list[Edge] = []
    for a, b in sorted(base.edges):
        split.append((next_free[a], next_free[b]))
        next_free[a] += 1
        next_free[b] += 1
    parts = []
    edges: list[Edge] = list(split)
    for v in range(s):
        lo = v * k
        part = tuple(
            (lo + i, lo + j) for i in range(k) for j in range(i + 1, k)
        )
        parts.append(part)
        edges.extend(part)
    return Graph(k * s, edges), Cover(tuple(split), tuple(parts))


def sharpness_example(d: int) -> Graph:
    """Two complete graphs on d(d+1) vertices joined by a perfect matching."""
    if d < 2:
        raise ValueError("needs dimension >= 2")
    dd = d * (d + 1)
    edges = []
    for block in (0, dd):
        edges.extend(
            (block + i, block + j) for i in range(dd) for j in range(i + 1, dd)
        )
    edges.extend((i, i + dd) for i in range(dd))
    return Graph(2 * dd, edges)


def sharpness_matching(d: int) -> tuple[Edge, ...]:
    """The d(d+1) independent edges joining the two blocks."""
    dd = d * (d + 1)
    return tuple((i, i + dd) for i in range(dd))
