"""Exact counting layer: covered-subset bounds, the sharp per-vertex rank
densities, and the exact expected size of the ordered subgraph.

Everything here is exact rational or integer arithmetic; no floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .graph_core import Graph


@dataclass(frozen=True)
class CliqueSystem:
    """A family H_1..H_r of subsets of [n] with a dimension parameter d.

    The set-system hypotheses (proper subsets, pairwise distinct, pairwise
    intersections of size at most d-2) are checked by
    :meth:`hypothesis_violation` rather than at construction, so that the
    verifier can classify bad systems as inapplicable instead of crashing.
    """

    n: int
    d: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ground set size must be non-negative")
        object.__setattr__(self, "sets", tuple(frozenset(h) for h in self.sets))
        for h in self.sets:
            for x in h:
                if not (0 <= x < self.n):
                    raise ValueError(f"member {x} outside [0, {self.n})")

    def hypothesis_violation(self, m: int | None = None) -> str | None:
        """Reason the counting-lemma hypotheses fail, or None if they hold."""
        if self.d < 2:
            return f"d={self.d} < 2"
        if m is not None and not (self.d + 1 <= m <= self.n - 1):
            return f"m={m} outside [{self.d + 1}, {self.n - 1}]"
        for j, h in enumerate(self.sets):
            if len(h) >= self.n:
                return f"H_{j} is not a proper subset of the ground set"
        for j1, j2 in itertools.combinations(range(len(self.sets)), 2):
            a, b = self.sets[j1], self.sets[j2]
            if a == b:
                return f"H_{j1} and H_{j2} coincide"
            if len(a & b) > self.d - 2:
                return f"|H_{j1} ∩ H_{j2}| = {len(a & b)} > d-2"
        return None


def covered_subset_count(system: CliqueSystem, m: int, method: str = "enumerate") -> int:
    """Number of m-subsets of [n] contained in some H_j.

    "enumerate" checks every m-subset (always valid).  "binomial" uses the
    pairwise inclusion-exclusion shortcut, which is exact only when no
    m-subset can lie in three of the sets; it is guarded by m > 2(d-2) plus
    the system hypotheses.  "auto" picks the shortcut when the guard holds.
    """
    if not (0 <= m <= system.n):
        raise ValueError(f"m={m} out of range [0, {system.n}]")
    if method not in ("enumerate", "binomial", "auto"):
        raise ValueError(f"unknown method {method!r}")
    shortcut_ok = (
        system.hypothesis_violation() is None and m > 2 * (system.d - 2)
    )
    if method == "binomial" and not shortcut_ok:
        raise ValueError("binomial shortcut guard failed; use enumerate")
    if method != "enumerate" and shortcut_ok:
        total = sum(comb(len(h), m) for h in system.sets)
        for a, b in itertools.combinations(system.sets, 2):
            total -= comb(len(a & b), m)
        return total
    masks = [sum(1 << x for x in h) for h in system.sets]
    bit = [1 << i for i in range(system.n)]
    count = 0
    for combo in itertools.combinations(bit, m):
        s = 0
        for b in combo:
            s |= b
        for h in masks:
            if s & ~h == 0:
                count += 1
                break
    return count


@dataclass(frozen=True)
class CombLemmaReport:
    status: str  # "checked" or "inapplicable"
    reason: str | None
    count: int | None
    bound: int | None
    holds: bool | None


def verify_comblemma(system: CliqueSystem, m: int) -> CombLemmaReport:
    """Check count <= C(n-1, m) for an admissible system; the inequality is a
    theorem, so this exists for fuzzing, not deciding."""
    reason = system.hypothesis_violation(m)
    if reason is not None:
        return CombLemmaReport("inapplicable", reason, None, None, None)
    count = covered_subset_count(system, m)
    bound = comb(system.n - 1, m)
    return CombLemmaReport("checked", None, count, bound, count <= bound)


def m_dk(d: int, k: int) -> Fraction:
    """Sharp per-vertex rank density for k-connected non-rigid graphs."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if not 1 <= k < d * (d + 1):
        raise ValueError(f"k={k} outside [1, {d * (d + 1)})")
    if k <= d:
        return Fraction(k, 2)
    return d + Fraction(1, 2) - Fraction(d * (d + 1), 2 * k)


def grn_lower_bound(n_vertices: int, n_edges: int) -> int:
    """floor(sqrt(|E| / (6 |V|))), computed exactly in integers."""
    if n_vertices < 1:
        raise ValueError("need at least one vertex")
    if n_edges < 0:
        raise ValueError("edge count must be non-negative")
    return isqrt(n_edges // (6 * n_vertices))


def _clique_size_counts(g: Graph, v: int) -> list[int]:
    """counts[i] = number of i-subsets of N(v) inducing a clique in g."""
    nbrs = sorted(g.neighbors(v))
    k = len(nbrs)
    index = {w: i for i, w in enumerate(nbrs)}
    local = [0] * k
    for i, w in enumerate(nbrs):
        mask = 0
        for x in g.neighbors(w):
            j = index.get(x)
            if j is not None:
                mask |= 1 << j
        local[i] = mask
    counts = [0] * (k + 1)

    def grow(candidates: int, size: int) -> None:
        counts[size] += 1
        m = candidates
        while m:
            bit = m & -m
            i = bit.bit_length() - 1
            m ^= bit
            grow(candidates & local[i] & ~((bit << 1) - 1), size + 1)

    grow((1 << k) - 1, 0)
    return counts


def exact_expected_gpi_edges(g: Graph, d: int, degree_cap: int = 20) -> Fraction:
    """Exact expectation of |E_pi| over a uniformly random vertex ordering.

    Linearity over vertices: conditioned on the backward degree being i, the
    backward neighborhood is uniform over the i-subsets of N(v), and the
    backward degree itself is uniform on 0..deg(v).  A vertex keeps
    min(i, d) edges, plus one more exactly when i >= d+1 and the backward
    set is not a clique.
    """
    if d < 2:
        raise ValueError("ordered construction requires dimension >= 2")
    total = Fraction(0)
    for v in range(g.n):
        k = g.degree(v)
        if k > degree_cap:
            raise ValueError(
                f"degree {k} of vertex {v} exceeds enumeration cap {degree_cap}"
            )
        expected_min = Fraction(sum(min(i, d) for i in range(k + 1)), k + 1)
        rule_c_prob = Fraction(0)
        if k >= d + 1:
            counts = _clique_size_counts(g, v)
            for i in range(d + 1, k + 1):
                rule_c_prob += Fraction(comb(k, i) - counts[i], (k + 1) * comb(k, i))
        total += expected_min + rule_c_prob
    return total
