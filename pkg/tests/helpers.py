"""Shared test utilities: random instance generators and independent
brute-force oracles (kept deliberately naive, separate from the library)."""

from __future__ import annotations

import itertools
import random

from rigidity_forge.combinatorics import CliqueSystem
from rigidity_forge.graph_core import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_clique_system(
    rng: random.Random, n: int, d: int, max_sets: int = 5
) -> CliqueSystem:
    """Random system satisfying the pairwise-intersection hypotheses."""
    target = rng.randint(1, max_sets)
    sets: list[frozenset[int]] = []
    for _ in range(40):
        if len(sets) >= target:
            break
        size = rng.randint(1, n - 1)
        h = frozenset(rng.sample(range(n), size))
        if h in sets:
            continue
        if any(len(h & other) > d - 2 for other in sets):
            continue
        sets.append(h)
    return CliqueSystem(n, d, tuple(sets))


# -- oracles ---------------------------------------------------------------


def brute_vertex_connectivity(g: Graph) -> int:
    """Minimum vertex-cut size by exhaustive subset search (tiny n only)."""
    n = g.n
    if n <= 1:
        return 0
    if g.is_complete():
        return n - 1

    def disconnected_without(gone: set[int]) -> bool:
        remaining = [v for v in range(n) if v not in gone]
        if len(remaining) <= 1:
            return False
        seen = {remaining[0]}
        stack = [remaining[0]]
        while stack:
            a = stack.pop()
            for b in g.neighbors(a):
                if b not in gone and b not in seen:
                    seen.add(b)
                    stack.append(b)
        return len(seen) < len(remaining)

    for k in range(n - 1):
        for cut in itertools.combinations(range(n), k):
            if disconnected_without(set(cut)):
                return k
    return n - 1


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques by checking every vertex subset (tiny n only)."""
    cliques = [
        set(sub)
        for size in range(1, g.n + 1)
        for sub in itertools.combinations(range(g.n), size)
        if g.is_clique(sub)
    ]
    maximal = [
        c for c in cliques if not any(c < other for other in cliques)
    ]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_covered_count(system: CliqueSystem, m: int) -> int:
    count = 0
    for sub in itertools.combinations(range(system.n), m):
        s = frozenset(sub)
        if any(s <= h for h in system.sets):
            count += 1
    return count
