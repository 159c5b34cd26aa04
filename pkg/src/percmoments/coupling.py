"""Layered growth of an open cluster and its branching-process envelope.

The *birth process* replays a percolation realization as generations of
particles: generation 0 is the start vertex, and each particle claims the
still-empty neighbors it can reach through open edges.  Generation ``n``
therefore occupies exactly the vertices at open-path distance ``n``, and the
particle count summed over generations equals the cluster size.

The *branching process* is the same growth with the vacancy constraint
dropped: the first individual has ``Binomial(D, p)`` offspring and every
later individual ``Binomial(D-1, p)``.  Its generation sizes stochastically
dominate the birth process; :func:`dominance_report` checks this empirically
via tail probabilities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadIndexError, BadParameterError
from .graphs import Graph
from .percolation import EdgeConfig, _check_config, _check_probability

__all__ = [
    "GenerationTrace",
    "BranchingTrace",
    "TailRow",
    "DominanceReport",
    "run_birth_process",
    "sample_branching_generations",
    "branching_generation_samples",
    "dominance_report",
]

# Largest generation size that can still be fed to a 64-bit binomial sampler.
_SIZE_LIMIT = 1 << 62


@dataclass(frozen=True)
class GenerationTrace:
    """Per-generation record of one birth process.

    ``layers[n]`` lists the vertices first occupied at generation ``n`` (in
    claim order), ``counts[n]`` its cardinality, and
    ``per_particle_offspring[n][i]`` the number of children of the ``i``-th
    particle of generation ``n``.  All three are padded with empties out to
    generation ``N - 1``, after which nothing can grow.
    """

    start_vertex: int
    layers: tuple[tuple[int, ...], ...]
    counts: tuple[int, ...]
    per_particle_offspring: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        """Total particle count; equals the cluster size of the start vertex."""
        return sum(self.counts)


@dataclass(frozen=True)
class BranchingTrace:
    """Generation sizes of one branching run, truncated at the horizon."""

    generation_sizes: tuple[int, ...]
    total: int


def run_birth_process(
    graph: Graph,
    config: EdgeConfig,
    x: int,
    order_rng: np.random.Generator | None = None,
) -> GenerationTrace:
    """Grow the open cluster of ``x`` generation by generation.

    Particles within a generation act sequentially: by default in canonical
    order (parent order, then adjacency order), which makes traces
    reproducible.  ``order_rng`` shuffles the within-generation order instead;
    layers-as-sets and counts are invariant to that choice, only the
    parent/child attribution moves.
    """
    if not 0 <= x < graph.n_vertices:
        raise BadIndexError(f"vertex {x} out of range [0, {graph.n_vertices})")
    _check_config(graph, config)

    open_adj: list[list[int]] = [[] for _ in range(graph.n_vertices)]
    for is_open, (u, v) in zip(config.open_flags, graph.edges):
        if is_open:
            open_adj[u].append(v)
            open_adj[v].append(u)
    for lst in open_adj:
        lst.sort()

    occupied = bytearray(graph.n_vertices)
    occupied[x] = 1
    layers = [(x,)]
    offspring: list[tuple[int, ...]] = []
    current = [x]

    while current and len(layers) < graph.n_vertices:
        if order_rng is not None:
            current = [current[i] for i in order_rng.permutation(len(current))]
        next_layer: list[int] = []
        counts_here: list[int] = []
        for z in current:
            born = 0
            for y in open_adj[z]:
                if not occupied[y]:
                    occupied[y] = 1
                    next_layer.append(y)
                    born += 1
            counts_here.append(born)
        offspring.append(tuple(counts_here))
        if next_layer:
            layers.append(tuple(next_layer))
        current = next_layer

    n = graph.n_vertices
    while len(layers) < n:
        layers.append(())
    while len(offspring) < n:
        offspring.append(())

    return GenerationTrace(
        start_vertex=x,
        layers=tuple(layers),
        counts=tuple(len(layer) for layer in layers),
        per_particle_offspring=tuple(offspring),
    )


def _check_branching_args(degree: int, p: float, horizon: int) -> float:
    if degree < 1:
        raise BadParameterError(f"degree must be >= 1, got {degree}")
    if horizon < 1:
        raise BadParameterError(f"horizon must be >= 1, got {horizon}")
    return _check_probability(p)


def sample_branching_generations(
    degree: int, p: float, horizon: int, rng: np.random.Generator
) -> BranchingTrace:
    """One branching run: sizes ``X_0 .. X_horizon``.

    Generation 1 is ``Binomial(D, p)``; thereafter each of the ``X_n``
    individuals contributes ``Binomial(D-1, p)`` offspring, which is drawn as
    the aggregate ``Binomial(X_n * (D-1), p)`` (same distribution, one draw).
    """
    p = _check_branching_args(degree, p, horizon)
    sizes = [1, int(rng.binomial(degree, p))]
    for _ in range(2, horizon + 1):
        n_trials = sizes[-1] * (degree - 1)
        if n_trials > _SIZE_LIMIT:
            raise BadParameterError("branching generation size exceeds 2^62")
        sizes.append(int(rng.binomial(n_trials, p)) if n_trials else 0)
    return BranchingTrace(generation_sizes=tuple(sizes), total=sum(sizes))


def branching_generation_samples(
    degree: int, p: float, horizon: int, replicates: int, rng: np.random.Generator
) -> np.ndarray:
    """Generation-size matrix of shape (replicates, horizon+1), vectorized."""
    p = _check_branching_args(degree, p, horizon)
    if replicates < 1:
        raise BadParameterError(f"replicates must be >= 1, got {replicates}")
    out = np.zeros((replicates, horizon + 1), dtype=np.int64)
    out[:, 0] = 1
    out[:, 1] = rng.binomial(degree, p, size=replicates)
    for n in range(2, horizon + 1):
        trials = out[:, n - 1] * (degree - 1)
        if trials.max(initial=0) > _SIZE_LIMIT:
            raise BadParameterError("branching generation size exceeds 2^62")
        out[:, n] = rng.binomial(trials, p)
    return out


# ---------------------------------------------------------------------------
# tail-probability comparison of birth vs branching generations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TailRow:
    """Empirical P(Y_n >= k) vs P(X_n >= k) with standard errors."""

    generation: int
    k: int
    birth_tail: float
    branching_tail: float
    birth_se: float
    branching_se: float
    within_tolerance: bool


@dataclass(frozen=True)
class DominanceReport:
    degree: int
    p: float
    horizon: int
    replicates: int
    seed: int
    rows: tuple[TailRow, ...] = field(repr=False)

    def violations(self) -> tuple[TailRow, ...]:
        return tuple(r for r in self.rows if not r.within_tolerance)


def _tails(values: np.ndarray, k_max: int, replicates: int) -> tuple[np.ndarray, np.ndarray]:
    hist = np.bincount(np.minimum(values, k_max), minlength=k_max + 1)
    above = np.cumsum(hist[::-1])[::-1]  # above[k] = #{v >= k}
    tail = above[1:] / replicates
    se = np.sqrt(tail * (1.0 - tail) / replicates)
    return tail, se


def dominance_report(graph: Graph, p: float, replicates: int, seed: int) -> DominanceReport:
    """Compare birth-process and branching generation sizes tail by tail.

    Birth samples come from fresh percolation realizations with a uniform
    start vertex; branching samples are independent runs with the same degree
    and probability, truncated at horizon ``N - 1`` (both ensembles then span
    generations ``0 .. N-1``).  A row is flagged when the birth tail exceeds
    the branching tail by more than three standard errors of the difference.
    """
    p = _check_probability(p)
    if replicates < 1:
        raise BadParameterError(f"replicates must be >= 1, got {replicates}")

    n = graph.n_vertices
    horizon = n - 1
    rng = np.random.default_rng(seed)

    starts = rng.integers(n, size=replicates)
    open_rows = rng.random((replicates, graph.n_edges)) < p
    birth = np.zeros((replicates, n), dtype=np.int64)
    for r in range(replicates):
        config = EdgeConfig(open_flags=tuple(map(bool, open_rows[r])), p=p)
        trace = run_birth_process(graph, config, int(starts[r]))
        birth[r] = trace.counts

    branching = branching_generation_samples(graph.degree, p, horizon, replicates, rng)

    rows: list[TailRow] = []
    for gen in range(horizon + 1):
        y = birth[:, gen]
        xg = branching[:, gen]
        k_max = max(1, int(y.max()), int(xg.max()))
        y_tail, y_se = _tails(y, k_max, replicates)
        x_tail, x_se = _tails(xg, k_max, replicates)
        for k in range(1, k_max + 1):
            se_diff = float(np.hypot(y_se[k - 1], x_se[k - 1]))
            rows.append(
                TailRow(
                    generation=gen,
                    k=k,
                    birth_tail=float(y_tail[k - 1]),
                    branching_tail=float(x_tail[k - 1]),
                    birth_se=float(y_se[k - 1]),
                    branching_se=float(x_se[k - 1]),
                    within_tolerance=bool(
                        y_tail[k - 1] <= x_tail[k - 1] + 3.0 * se_diff
                    ),
                )
            )
    return DominanceReport(
        degree=graph.degree,
        p=p,
        horizon=horizon,
        replicates=replicates,
        seed=seed,
        rows=tuple(rows),
    )
