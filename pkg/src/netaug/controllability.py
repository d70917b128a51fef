"""Distance-based controllability bounds for leader-follower Laplacian networks.

The central object is a sequence of distance-to-leader vectors that is
*pseudo-monotonically increasing* (PMI): every element has a coordinate on
which all later elements are strictly larger. The length of such a sequence
lower-bounds the dimension of the strong structurally controllable subspace
for every choice of positive edge weights, which this module checks
numerically through controllability-matrix ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DisconnectedGraphError, SizeGuardError
from .graphs import Graph, WeightAssignment, bfs_distances, weighted_laplacian

__all__ = [
    "DistanceVector",
    "PMISequence",
    "PMICheck",
    "RankValidationReport",
    "distance_to_leader_vectors",
    "is_pmi",
    "pmi_exact",
    "pmi_greedy",
    "input_matrix",
    "controllability_rank",
    "validate_ssc_bound",
    "kirchhoff_index",
]

#: Exhaustive PMI search refuses instances with more distinct vectors than this.
PMI_EXACT_GUARD = 20

#: Random-weight validation samples log-uniformly from this range.
WEIGHT_RANGE = (0.1, 10.0)

#: Singular values below this fraction of the largest count as zero.
RANK_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DistanceVector:
    """Hop distances from one node to each leader, in leader order."""

    node: int
    dist: tuple[int, ...]


@dataclass(frozen=True)
class PMISequence:
    """An ordered run of distance vectors with one witness coordinate each.

    ``witnesses[i]`` is the (0-based) coordinate on which every later vector
    strictly exceeds ``vectors[i]``.
    """

    vectors: tuple[DistanceVector, ...]
    witnesses: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def nodes(self) -> tuple[int, ...]:
        return tuple(dv.node for dv in self.vectors)

    def raw_vectors(self) -> list[tuple[int, ...]]:
        return [dv.dist for dv in self.vectors]

    def to_json(self) -> list[dict]:
        return [
            {"node": dv.node, "vector": list(dv.dist), "witness": w}
            for dv, w in zip(self.vectors, self.witnesses)
        ]

    @classmethod
    def from_json(cls, items: Sequence[dict]) -> "PMISequence":
        vectors = tuple(DistanceVector(int(it["node"]), tuple(int(x) for x in it["vector"])) for it in items)
        witnesses = tuple(int(it["witness"]) for it in items)
        return cls(vectors, witnesses)


@dataclass(frozen=True)
class PMICheck:
    """Outcome of a PMI test: witnesses on success, an offending pair otherwise."""

    ok: bool
    witnesses: tuple[int, ...] | None = None
    violation: tuple[int, int] | None = None


def _check_leaders(g: Graph, leaders: Sequence[int]) -> tuple[int, ...]:
    leaders = tuple(leaders)
    if not leaders:
        raise ValueError("at least one leader is required")
    if len(set(leaders)) != len(leaders):
        raise ValueError(f"leaders must be distinct, got {leaders}")
    for ell in leaders:
        if not (0 <= ell < g.n):
            raise ValueError(f"leader {ell} out of range for n={g.n}")
    return leaders


def distance_to_leader_vectors(g: Graph, leaders: Sequence[int]) -> list[DistanceVector]:
    """One vector per node: entry j is the hop distance to leader j.

    Requires a connected graph (one BFS pass per leader).
    """
    leaders = _check_leaders(g, leaders)
    per_leader = []
    for ell in leaders:
        dist = bfs_distances(g, ell)
        if None in dist:
            raise DisconnectedGraphError("distance-to-leader vectors need a connected graph")
        per_leader.append(dist)
    return [
        DistanceVector(v, tuple(per_leader[j][v] for j in range(len(leaders))))
        for v in range(g.n)
    ]


def is_pmi(vectors: Sequence[Sequence[int]]) -> PMICheck:
    """Check the strictly-increasing-witness condition on a vector sequence.

    On success the returned witnesses certify the sequence: for each position
    ``i`` every later vector is strictly larger at coordinate ``witnesses[i]``.
    On failure ``violation`` is ``(i, j)`` for the first position ``i`` with
    no valid coordinate, with ``j`` one later index that blocks it.
    """
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return PMICheck(ok=True, witnesses=())
    m = len(vecs[0])
    for v in vecs:
        if len(v) != m:
            raise ValueError("all vectors must have the same length")
    witnesses: list[int] = []
    for i, v in enumerate(vecs):
        chosen = None
        blocker: int | None = None
        for alpha in range(m):
            bad = next((j for j in range(i + 1, len(vecs)) if vecs[j][alpha] <= v[alpha]), None)
            if bad is None:
                chosen = alpha
                break
            if blocker is None or bad < blocker:
                blocker = bad
        if chosen is None:
            return PMICheck(ok=False, violation=(i, blocker if blocker is not None else i + 1))
        witnesses.append(chosen)
    return PMICheck(ok=True, witnesses=tuple(witnesses))


def _distinct_vectors(g: Graph, leaders: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Map each distinct distance vector to its smallest node id."""
    rep: dict[tuple[int, ...], int] = {}
    for dv in distance_to_leader_vectors(g, leaders):
        if dv.dist not in rep or dv.node < rep[dv.dist]:
            rep[dv.dist] = dv.node
    return rep


def _witnesses_for(vecs: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Smallest valid witness per position (position is known to admit one)."""
    check = is_pmi(vecs)
    assert check.ok and check.witnesses is not None
    return check.witnesses


def pmi_exact(g: Graph, leaders: Sequence[int]) -> PMISequence:
    """Longest PMI sequence by exhaustive search; certificate-quality but small-only.

    Vectors are selected back to front: a vector may precede a chosen suffix
    iff some coordinate is strictly below the suffix's componentwise minimum.
    Memoized on the chosen set; refuses instances with more than
    ``PMI_EXACT_GUARD`` distinct vectors (use ``pmi_greedy`` there).
    """
    rep = _distinct_vectors(g, leaders)
    if len(rep) > PMI_EXACT_GUARD:
        raise SizeGuardError(
            f"{len(rep)} distinct vectors exceed the exhaustive guard "
            f"({PMI_EXACT_GUARD}); use pmi_greedy"
        )
    vectors = sorted(rep)
    m = len(tuple(leaders))
    inf = float("inf")
    memo: dict[frozenset[int], int] = {}

    def suffix_min(used: frozenset[int]) -> list[float]:
        mins = [inf] * m
        for idx in used:
            for j, x in enumerate(vectors[idx]):
                if x < mins[j]:
                    mins[j] = x
        return mins

    def best(used: frozenset[int]) -> int:
        if used in memo:
            return memo[used]
        mins = suffix_min(used)
        out = 0
        for idx, vec in enumerate(vectors):
            if idx in used:
                continue
            if any(vec[j] < mins[j] for j in range(m)):
                out = max(out, 1 + best(used | {idx}))
        memo[used] = out
        return out

    # Reconstruct one optimal sequence, last element first.
    used: frozenset[int] = frozenset()
    reversed_pick: list[int] = []
    remaining = best(used)
    while remaining > 0:
        mins = suffix_min(used)
        for idx, vec in enumerate(vectors):
            if idx in used or not any(vec[j] < mins[j] for j in range(m)):
                continue
            if 1 + best(used | {idx}) == remaining:
                reversed_pick.append(idx)
                used = used | {idx}
                remaining -= 1
                break
    order = [vectors[idx] for idx in reversed(reversed_pick)]
    chosen = tuple(DistanceVector(rep[vec], vec) for vec in order)
    return PMISequence(chosen, _witnesses_for(order))


def pmi_greedy(g: Graph, leaders: Sequence[int]) -> PMISequence:
    """Deterministic greedy PMI sequence; exact for a single leader.

    Maintains one threshold per coordinate (the last witness value there).
    A vector stays eligible while it exceeds every threshold componentwise;
    among eligible vectors the one with the smallest attainable witness value
    is taken (ties: smaller coordinate, then smaller node id), and that
    coordinate's threshold rises to the value.
    """
    rep = _distinct_vectors(g, leaders)
    m = len(tuple(leaders))
    thresholds = [-1] * m
    unused = set(rep)
    chosen: list[DistanceVector] = []
    witnesses: list[int] = []
    while True:
        pick: tuple[int, int, int, tuple[int, ...]] | None = None
        for vec in unused:
            if all(vec[j] > thresholds[j] for j in range(m)):
                alpha = min(range(m), key=lambda j: (vec[j], j))
                cand = (vec[alpha], alpha, rep[vec], vec)
                if pick is None or cand < pick:
                    pick = cand
        if pick is None:
            break
        value, alpha, node, vec = pick
        thresholds[alpha] = value
        unused.remove(vec)
        chosen.append(DistanceVector(node, vec))
        witnesses.append(alpha)
    return PMISequence(tuple(chosen), tuple(witnesses))


def input_matrix(n: int, leaders: Sequence[int]) -> np.ndarray:
    """n-by-m 0/1 matrix with one column per leader (a single 1 at its row)."""
    leaders = tuple(leaders)
    mat = np.zeros((n, len(leaders)), dtype=float)
    for j, ell in enumerate(leaders):
        if not (0 <= ell < n):
            raise ValueError(f"leader {ell} out of range for n={n}")
        mat[ell, j] = 1.0
    return mat


def controllability_rank(
    laplacian: np.ndarray, inputs: np.ndarray, tolerance: float = RANK_TOLERANCE
) -> int:
    """Numerical rank of ``[B, -LB, (-L)^2 B, ..., (-L)^(n-1) B]``.

    The Laplacian is scaled by its max row sum before taking powers; that
    rescales whole column blocks by positive constants, which leaves the rank
    unchanged while keeping ``tolerance * sigma_max`` meaningful for large n.
    """
    lap = np.asarray(laplacian, dtype=float)
    mat_b = np.asarray(inputs, dtype=float)
    n = lap.shape[0]
    if lap.shape != (n, n) or mat_b.ndim != 2 or mat_b.shape[0] != n:
        raise ValueError(
            f"dimension mismatch: laplacian {lap.shape}, inputs {mat_b.shape}"
        )
    scale = max(1.0, float(np.abs(lap).sum(axis=1).max()))
    step = -lap / scale
    blocks = [mat_b]
    for _ in range(n - 1):
        blocks.append(step @ blocks[-1])
    gamma = np.hstack(blocks)
    singular = np.linalg.svd(gamma, compute_uv=False)
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular > tolerance * singular[0]))


@dataclass(frozen=True)
class RankValidationReport:
    """Result of sampling random weights against a claimed rank bound."""

    claimed_bound: int
    trials: int
    min_rank: int
    passed: bool
    ranks: tuple[int, ...]
    failing_weights: tuple[tuple[int, int, float], ...] | None = None

    def to_json(self) -> dict:
        return {
            "claimed_bound": self.claimed_bound,
            "trials": self.trials,
            "min_rank": self.min_rank,
            "passed": self.passed,
            "ranks": list(self.ranks),
            "failing_weights": None
            if self.failing_weights is None
            else [[u, v, w] for u, v, w in self.failing_weights],
        }


def _sample_weights(g: Graph, rng: np.random.Generator) -> WeightAssignment:
    lo, hi = np.log10(WEIGHT_RANGE[0]), np.log10(WEIGHT_RANGE[1])
    edges = g.sorted_edges()
    values = 10.0 ** rng.uniform(lo, hi, size=len(edges))
    return {e: float(w) for e, w in zip(edges, values)}


def validate_ssc_bound(
    g: Graph,
    leaders: Sequence[int],
    bound: int,
    trials: int = 25,
    seed: int = 0,
    tolerance: float = RANK_TOLERANCE,
) -> RankValidationReport:
    """Check that the controllability rank stays >= ``bound`` under random weights.

    Draws ``trials`` independent weight assignments, log-uniform over
    ``WEIGHT_RANGE`` (stream ``default_rng([seed, trial])`` per trial, so
    trials are order-independent). A failure report carries the offending
    sample; since the bound holds for *all* positive weights, a failure
    indicates an implementation bug rather than an unlucky draw.
    """
    leaders = _check_leaders(g, leaders)
    if bound < 1:
        raise ValueError(f"claimed bound must be >= 1, got {bound}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if None in bfs_distances(g, 0):
        raise DisconnectedGraphError("rank validation needs a connected graph")
    mat_b = input_matrix(g.n, leaders)
    ranks: list[int] = []
    failing: WeightAssignment | None = None
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        weights = _sample_weights(g, rng)
        rank = controllability_rank(weighted_laplacian(g, weights), mat_b, tolerance)
        ranks.append(rank)
        if rank < bound and failing is None:
            failing = weights
    min_rank = min(ranks)
    return RankValidationReport(
        claimed_bound=bound,
        trials=trials,
        min_rank=min_rank,
        passed=min_rank >= bound,
        ranks=tuple(ranks),
        failing_weights=None
        if failing is None
        else tuple((u, v, w) for (u, v), w in sorted(failing.items())),
    )


def kirchhoff_index(g: Graph) -> float:
    """Sum of reciprocals of the nonzero eigenvalues of the unweighted Laplacian.

    Lower is more robust; adding any edge to a connected graph strictly
    decreases it.
    """
    if g.n == 1:
        return 0.0
    lap = np.zeros((g.n, g.n), dtype=float)
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
        lap[u, u] += 1.0
        lap[v, v] += 1.0
    eigenvalues = np.linalg.eigvalsh(lap)
    if eigenvalues[1] <= 1e-9:
        raise DisconnectedGraphError("Kirchhoff index needs a connected graph")
    return float(np.sum(1.0 / eigenvalues[1:]))
