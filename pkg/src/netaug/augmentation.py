"""Maximal edge addition under distance-preservation constraints.

The single-pair solver builds a chain of cliques over BFS levels between the
pair, which is an optimal shape: any denser graph would shorten the pair
distance. Two multi-pair algorithms lift this to a whole set of monitored
(leader, node) pairs taken from a PMI sequence: one intersects the per-pair
chain solutions, the other scans a shuffled complement edge list and keeps
every edge whose addition preserves all monitored distances, repeated
best-of-c. Both therefore keep the PMI sequence (and the controllability
bound it certifies) valid on the augmented graph.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .controllability import PMISequence, distance_to_leader_vectors, is_pmi
from .errors import DisconnectedGraphError, SizeGuardError
from .graphs import Edge, Graph, bfs_distances, canonical_edge, complement_edges

__all__ = [
    "LevelPartition",
    "CliqueChain",
    "AugmentationResult",
    "classify_fixed_nodes",
    "level_partition",
    "build_clique_chain",
    "augment_pair",
    "augment_pair_brute_force",
    "augment_intersection",
    "augment_randomized",
    "addable_edge_upper_bound",
    "success_probability_bound",
    "BRUTE_FORCE_GUARD",
]

#: Exhaustive pair search refuses graphs larger than this.
BRUTE_FORCE_GUARD = 8


@dataclass(frozen=True)
class LevelPartition:
    """Nodes split into consecutive levels between a pair: level 0 is ``{a}``,
    the last level is ``{b}``, and every node on an a-b geodesic sits at its
    distance from ``a``."""

    a: int
    b: int
    levels: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.levels) - 1


@dataclass(frozen=True)
class CliqueChain:
    """A level partition plus all within-level and consecutive-level edges."""

    partition: LevelPartition
    edges: frozenset[Edge]


@dataclass(frozen=True)
class AugmentationResult:
    """Edge set produced by an augmentation run, plus audit fields.

    ``upper_bound_addable`` bounds ``len(added)`` from above;
    ``seed``/``repetitions`` are ``None`` for deterministic algorithms.
    """

    algorithm: str
    edges_before: frozenset[Edge]
    edges_after: frozenset[Edge]
    added: frozenset[Edge]
    upper_bound_addable: int
    pmi_length: int | None = None
    seed: int | None = None
    repetitions: int | None = None
    runtime_ms: float = 0.0

    def to_json(self, include_runtime: bool = False) -> dict:
        return {
            "algorithm": self.algorithm,
            "seed": self.seed,
            "c": self.repetitions,
            "edges_before": len(self.edges_before),
            "edges_after": len(self.edges_after),
            "added_edges": [list(e) for e in sorted(self.added)],
            "upper_bound": self.upper_bound_addable,
            "pmi_length": self.pmi_length,
            "runtime_ms": self.runtime_ms if include_runtime else 0.0,
        }


def _pair_distances(g: Graph, a: int, b: int) -> tuple[list[int], list[int], int]:
    if a == b:
        raise ValueError(f"pair nodes must differ, got ({a},{b})")
    for node in (a, b):
        if not (0 <= node < g.n):
            raise ValueError(f"node {node} out of range for n={g.n}")
    dist_a = bfs_distances(g, a)
    if dist_a[b] is None:
        raise DisconnectedGraphError(f"nodes {a} and {b} are unreachable from each other")
    dist_b = bfs_distances(g, b)
    return dist_a, dist_b, dist_a[b]  # type: ignore[return-value]


def classify_fixed_nodes(g: Graph, a: int, b: int) -> list[bool]:
    """Flag per node: True iff it lies on some shortest path between the pair.

    Nodes unreachable from the pair's component are free.
    """
    dist_a, dist_b, k = _pair_distances(g, a, b)
    return [
        dist_a[v] is not None and dist_b[v] is not None and dist_a[v] + dist_b[v] == k
        for v in range(g.n)
    ]


def _build_levels(
    dist_a: list[int], dist_b: list[int], a: int, b: int, k: int
) -> LevelPartition:
    half = k // 2
    level_of: list[int] = []
    for v in range(len(dist_a)):
        da, db = dist_a[v], dist_b[v]
        if da is None or db is None:
            raise DisconnectedGraphError(
                f"node {v} is unreachable from the pair ({a},{b})"
            )
        if da + db == k:
            level_of.append(da)
        elif k == 1:
            # With only two levels the chain is the complete graph either way;
            # level 1 keeps level 0 = {a}.
            level_of.append(1)
        elif da <= half:
            level_of.append(da)
        elif db <= (half if k % 2 == 1 else half - 1):
            level_of.append(k - db)
        else:
            level_of.append(half)
    levels = [[] for _ in range(k + 1)]
    for v, lvl in enumerate(level_of):
        levels[lvl].append(v)
    return LevelPartition(a=a, b=b, levels=tuple(tuple(sorted(l)) for l in levels))


def level_partition(g: Graph, a: int, b: int) -> LevelPartition:
    """Split all nodes into the k+1 levels used by the clique-chain construction.

    Geodesic nodes sit at their distance from ``a``; an off-geodesic node
    keeps its distance from whichever endpoint is within the near half,
    and falls to the middle level ``k // 2`` otherwise.
    """
    dist_a, dist_b, k = _pair_distances(g, a, b)
    return _build_levels(dist_a, dist_b, a, b, k)


def _chain_edge_set(partition: LevelPartition) -> set[Edge]:
    edges: set[Edge] = set()
    levels = partition.levels
    for i, level in enumerate(levels):
        for idx, u in enumerate(level):
            for v in level[idx + 1 :]:
                edges.add((u, v))
        if i + 1 < len(levels):
            for u in level:
                for w in levels[i + 1]:
                    edges.add(canonical_edge(u, w))
    return edges


def build_clique_chain(partition: LevelPartition) -> CliqueChain:
    """All within-level plus consecutive-level edges over the partition."""
    return CliqueChain(partition=partition, edges=frozenset(_chain_edge_set(partition)))


def _pair_upper_bound(g: Graph, dist_a: list[int], dist_b: list[int], k: int) -> int:
    comp = complement_edges(g)
    forbidden = 0
    for u, v in comp:
        if (
            dist_a[u] is not None
            and dist_a[v] is not None
            and dist_a[u] + dist_b[u] == k
            and dist_a[v] + dist_b[v] == k
            and abs(dist_a[u] - dist_a[v]) >= 2
        ):
            forbidden += 1
    return len(comp) - forbidden


def augment_pair(g: Graph, a: int, b: int) -> AugmentationResult:
    """Maximal edge addition preserving the distance between one node pair.

    For adjacent pairs the answer is the complete graph; otherwise the chain
    of cliques over the level partition. Runs in time linear in the graph
    plus the output size.
    """
    start = time.perf_counter()
    dist_a, dist_b, k = _pair_distances(g, a, b)
    if k == 1:
        edges_after = frozenset(
            (u, v) for u in range(g.n) for v in range(u + 1, g.n)
        )
    else:
        edges_after = build_clique_chain(_build_levels(dist_a, dist_b, a, b, k)).edges
    return AugmentationResult(
        algorithm="clique-chain",
        edges_before=g.edges,
        edges_after=edges_after,
        added=frozenset(edges_after - g.edges),
        upper_bound_addable=_pair_upper_bound(g, dist_a, dist_b, k),
        runtime_ms=(time.perf_counter() - start) * 1000.0,
    )


def _bfs_on(adj: list[set[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def augment_pair_brute_force(g: Graph, a: int, b: int) -> tuple[int, frozenset[Edge]]:
    """True optimum of the single-pair problem by exhaustive subset search.

    Returns ``(max_total_edges, one_optimal_edge_set)``. Search prunes any
    superset of a set that already shortens the pair distance, and starts
    from the clique-chain solution as incumbent. Guarded to ``n <= 8``.
    """
    if g.n > BRUTE_FORCE_GUARD:
        raise SizeGuardError(
            f"brute force is limited to n <= {BRUTE_FORCE_GUARD}, got n={g.n}"
        )
    dist_a, dist_b, k = _pair_distances(g, a, b)

    def single_edge_ok(edge: Edge, da: list[int], db: list[int]) -> bool:
        u, v = edge
        return min(da[u] + db[v], da[v] + db[u]) + 1 >= k

    candidates = [
        e for e in sorted(complement_edges(g)) if single_edge_ok(e, dist_a, dist_b)
    ]
    best: list[Edge] = sorted(augment_pair(g, a, b).added)
    adj = [set(s) for s in g.adjacency]

    def dfs(accepted: list[Edge], cands: list[Edge], da: list[int], db: list[int]):
        nonlocal best
        if len(accepted) + len(cands) <= len(best):
            return
        if not cands:
            best = list(accepted)
            return
        edge, rest = cands[0], cands[1:]
        u, v = edge
        adj[u].add(v)
        adj[v].add(u)
        da2, db2 = _bfs_on(adj, a), _bfs_on(adj, b)
        accepted.append(edge)
        dfs(accepted, [f for f in rest if single_edge_ok(f, da2, db2)], da2, db2)
        accepted.pop()
        adj[u].remove(v)
        adj[v].remove(u)
        dfs(accepted, rest, da, db)

    dfs([], candidates, dist_a, dist_b)  # type: ignore[arg-type]
    edges_after = frozenset(g.edges | set(best))
    return len(edges_after), edges_after


def _validated_pairs(
    g: Graph, leaders: Sequence[int], pmi: PMISequence
) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    """Check the PMI sequence against the graph; return leaders and monitored pairs."""
    leaders = tuple(leaders)
    actual = distance_to_leader_vectors(g, leaders)  # validates leaders/connectivity
    seen: set[int] = set()
    for dv in pmi.vectors:
        if not (0 <= dv.node < g.n):
            raise ValueError(f"PMI node {dv.node} out of range for n={g.n}")
        if dv.node in seen:
            raise ValueError(f"PMI node {dv.node} listed twice")
        seen.add(dv.node)
        if dv.dist != actual[dv.node].dist:
            raise ValueError(
                f"PMI vector for node {dv.node} does not match the graph: "
                f"{dv.dist} vs {actual[dv.node].dist}"
            )
    check = is_pmi(pmi.raw_vectors())
    if not check.ok:
        raise ValueError(f"sequence is not PMI, violation at positions {check.violation}")
    pairs = [(ell, v) for ell in leaders for v in pmi.nodes() if ell != v]
    return leaders, pairs


def addable_edge_upper_bound(g: Graph, leaders: Sequence[int], pmi: PMISequence) -> int:
    """Upper bound on how many complement edges any distance-preserving run can add.

    A missing edge is unusable when both endpoints lie on a common shortest
    path from a leader to a monitored node at depths two or more apart:
    adding it would create a shortcut on that path.
    """
    leaders, pairs = _validated_pairs(g, leaders, pmi)
    dist: dict[int, list[int]] = {}
    for node in set(leaders) | set(pmi.nodes()):
        dist[node] = bfs_distances(g, node)  # type: ignore[assignment]
    comp = complement_edges(g)
    forbidden = 0
    for u, v in comp:
        for ell, x in pairs:
            d_ell, d_x = dist[ell], dist[x]
            span = d_ell[x]
            if (
                d_ell[u] + d_x[u] == span
                and d_ell[v] + d_x[v] == span
                and abs(d_ell[u] - d_ell[v]) >= 2
            ):
                forbidden += 1
                break
    return len(comp) - forbidden


def augment_intersection(
    g: Graph, leaders: Sequence[int], pmi: PMISequence
) -> AugmentationResult:
    """Densify by intersecting the per-pair chain solutions over all monitored pairs.

    Every edge kept belongs to the chain solution of each (leader, monitored
    node) pair, so all monitored distances survive and the PMI sequence stays
    valid. With no monitored pair (a one-element sequence holding the only
    leader) the result is the complete graph.
    """
    start = time.perf_counter()
    leaders, pairs = _validated_pairs(g, leaders, pmi)
    current = {(u, v) for u in range(g.n) for v in range(u + 1, g.n)}
    dist_cache: dict[int, list[int]] = {}

    def cached(node: int) -> list[int]:
        if node not in dist_cache:
            dist_cache[node] = bfs_distances(g, node)  # type: ignore[assignment]
        return dist_cache[node]

    for ell, v in pairs:
        d_ell = cached(ell)
        k = d_ell[v]
        if k == 1:
            continue  # adjacent pair constrains nothing
        part = _build_levels(d_ell, cached(v), ell, v, k)
        current &= _chain_edge_set(part)
    return AugmentationResult(
        algorithm="intersection",
        edges_before=g.edges,
        edges_after=frozenset(current),
        added=frozenset(current - g.edges),
        upper_bound_addable=addable_edge_upper_bound(g, leaders, pmi),
        pmi_length=len(pmi),
        runtime_ms=(time.perf_counter() - start) * 1000.0,
    )


def _relax_insert(adj: list[set[int]], dist: list[int], x: int, y: int) -> None:
    """Propagate distance decreases after inserting edge (x, y) into ``adj``."""
    if dist[x] + 1 < dist[y]:
        start, base = y, dist[x] + 1
    elif dist[y] + 1 < dist[x]:
        start, base = x, dist[y] + 1
    else:
        return
    dist[start] = base
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if du + 1 < dist[w]:
                dist[w] = du + 1
                queue.append(w)


def augment_randomized(
    g: Graph,
    leaders: Sequence[int],
    pmi: PMISequence,
    seed: int = 0,
    repetitions: int = 1,
) -> AugmentationResult:
    """Densify by a seeded random scan over missing edges, best of ``repetitions``.

    Each repetition shuffles the complement edge list (stream
    ``default_rng([seed, repetition])``, so enlarging ``repetitions`` never
    changes earlier repetitions) and accepts an edge iff adding it to the
    accumulated graph keeps every monitored (leader, node) distance at its
    original value. The repetition that accepts the most edges wins; ties go
    to the earliest. Acceptance is tested against cached per-source distance
    arrays updated incrementally, which is equivalent to re-running BFS after
    every insertion.
    """
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    start = time.perf_counter()
    leaders, pairs = _validated_pairs(g, leaders, pmi)
    sources = sorted(set(leaders) | set(pmi.nodes()))
    base_dist = {s: bfs_distances(g, s) for s in sources}
    original = {
        (ell, v): base_dist[ell][v] for ell, v in pairs
    }
    comp = sorted(complement_edges(g))

    best_added: list[Edge] | None = None
    for rep in range(repetitions):
        rng = np.random.default_rng([seed, rep])
        order = [comp[i] for i in rng.permutation(len(comp))]
        adj = [set(s) for s in g.adjacency]
        dist = {s: list(base_dist[s]) for s in sources}
        added: list[Edge] = []
        for x, y in order:
            ok = True
            for ell, v in pairs:
                d_ell, d_v = dist[ell], dist[v]
                span = original[(ell, v)]
                if d_ell[x] + d_v[y] + 1 < span or d_ell[y] + d_v[x] + 1 < span:
                    ok = False
                    break
            if ok:
                adj[x].add(y)
                adj[y].add(x)
                added.append((x, y))
                for s in sources:
                    _relax_insert(adj, dist[s], x, y)
        if best_added is None or len(added) > len(best_added):
            best_added = added
    assert best_added is not None
    edges_after = frozenset(g.edges | set(best_added))
    return AugmentationResult(
        algorithm="randomized",
        edges_before=g.edges,
        edges_after=edges_after,
        added=frozenset(best_added),
        upper_bound_addable=addable_edge_upper_bound(g, leaders, pmi),
        pmi_length=len(pmi),
        seed=seed,
        repetitions=repetitions,
        runtime_ms=(time.perf_counter() - start) * 1000.0,
    )


def success_probability_bound(
    total_legal: int, optimal_size: int, ratio: float, repetitions: int
) -> float:
    """Probability that best-of-c random scans reach ``ratio`` times the optimum.

    Evaluates ``1 - exp(-c * (tau/T)^ceil(ratio*tau))`` with ``T`` individually
    legal edges and an optimal solution of size ``tau``. The exponent is
    rounded up to an integer, which can only lower the bound (conservative).
    Nondecreasing in ``repetitions``.
    """
    if total_legal < 1:
        raise ValueError(f"total_legal must be >= 1, got {total_legal}")
    if not (1 <= optimal_size <= total_legal):
        raise ValueError(
            f"optimal_size must satisfy 1 <= tau <= {total_legal}, got {optimal_size}"
        )
    if not (0.0 < ratio <= 1.0):
        raise ValueError(f"ratio must lie in (0, 1], got {ratio}")
    if repetitions < 0:
        raise ValueError(f"repetitions must be >= 0, got {repetitions}")
    exponent = math.ceil(ratio * optimal_size - 1e-9)
    base = optimal_size / total_legal
    return 1.0 - math.exp(-repetitions * base**exponent)
