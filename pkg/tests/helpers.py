"""Shared test utilities: seeded graph factories and independent oracles.

The oracles here deliberately take different routes than the library code
(forward enumeration vs backward memo search, full-subset scans vs pruned
DFS, pseudo-inverse resistances vs eigenvalue sums) so they can catch bugs
in the implementations they check.
"""

from __future__ import annotations

import numpy as np

from netaug import (
    GenSpec,
    Graph,
    bfs_distances,
    complement_edges,
    erdos_renyi,
    is_connected,
    is_pmi,
)


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """First connected G(n, p) draw from the seeded stream."""
    for attempt in range(1000):
        g = erdos_renyi(GenSpec(model="erdos-renyi", n=n, p=p, seed=seed + 7919 * attempt))
        if is_connected(g):
            return g
    raise AssertionError(f"no connected sample for n={n}, p={p}")


def all_pairs_min_plus(g: Graph) -> np.ndarray:
    """All-pairs hop distances by repeated (min, +) matrix squaring."""
    big = 10 * g.n
    dist = np.full((g.n, g.n), big)
    np.fill_diagonal(dist, 0)
    for u, v in g.edges:
        dist[u, v] = dist[v, u] = 1
    for _ in range(int(np.ceil(np.log2(max(g.n, 2))))):
        dist = np.min(dist[:, :, None] + dist[None, :, :], axis=1)
    return dist


def brute_pmi_length(vectors) -> int:
    """Longest PMI run by forward extension over all orderings of all subsets."""
    distinct = sorted(set(tuple(v) for v in vectors))
    best = 0

    def extend(seq: list, remaining: list):
        nonlocal best
        best = max(best, len(seq))
        for i, vec in enumerate(remaining):
            if is_pmi(seq + [vec]).ok:
                extend(seq + [vec], remaining[:i] + remaining[i + 1 :])

    extend([], distinct)
    return best


def full_subset_pair_optimum(g: Graph, a: int, b: int) -> int:
    """Max |E'| preserving d(a, b), by scanning every complement subset."""
    comp = sorted(complement_edges(g))
    assert len(comp) <= 14, "full-subset oracle is for tiny instances"
    k = bfs_distances(g, a)[b]
    best = g.num_edges()
    for mask in range(1 << len(comp)):
        extra = [comp[i] for i in range(len(comp)) if mask >> i & 1]
        if g.num_edges() + len(extra) <= best:
            continue
        h = g.add_edges(extra)
        if bfs_distances(h, a)[b] == k:
            best = g.num_edges() + len(extra)
    return best


def reference_randomized_scan(g: Graph, leaders, pmi, seed: int, repetitions: int):
    """Pure-BFS replay of the randomized scan, for oracle-equivalence checks.

    Uses the same shuffle streams as augment_randomized but re-runs full BFS
    from every leader after tentatively adding each candidate edge.
    """
    comp = sorted(complement_edges(g))
    pairs = [(ell, v) for ell in leaders for v in pmi.nodes() if ell != v]
    d0 = {(ell, v): bfs_distances(g, ell)[v] for ell, v in pairs}
    best: list | None = None
    for rep in range(repetitions):
        rng = np.random.default_rng([seed, rep])
        order = [comp[i] for i in rng.permutation(len(comp))]
        current = set(g.edges)
        added = []
        for edge in order:
            h = Graph(g.n, current | {edge})
            if all(bfs_distances(h, ell)[v] == d0[(ell, v)] for ell, v in pairs):
                current.add(edge)
                added.append(edge)
        if best is None or len(added) > len(best):
            best = added
    assert best is not None
    return frozenset(g.edges | set(best))


def effective_resistance_total(g: Graph) -> float:
    """Sum of pairwise effective resistances via the Laplacian pseudo-inverse."""
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
        lap[u, u] += 1.0
        lap[v, v] += 1.0
    pinv = np.linalg.pinv(lap)
    total = 0.0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            total += pinv[u, u] + pinv[v, v] - 2 * pinv[u, v]
    return total


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
