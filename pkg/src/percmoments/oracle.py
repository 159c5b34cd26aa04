"""Exact cluster-size moments by enumeration of all edge configurations.

Every function here walks the full set of 2^|E| open/closed configurations,
so graphs are capped at :data:`DEFAULT_EDGE_CAP` edges unless the caller
raises the cap explicitly.  Enumeration is done in vectorized blocks: the
block's configuration indices are expanded to bit matrices and cluster
labels are relaxed to a fixpoint with numpy minimum-propagation.

Three independent routes to the moments are exposed:

* :func:`exact_moments` weights per-configuration size sums directly;
* :func:`moment_polynomial` collects exact integer counts per number of open
  edges and evaluates the resulting polynomial in p (exact rationals via
  :mod:`fractions` are available on the result);
* :func:`connectivity_moments` goes through pairwise connection
  probabilities, E(S) = mean_x sum_y P(x <-> y).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .bounds import MomentPair
from .errors import TooManyEdgesError
from .graphs import Graph
from .percolation import _check_probability

__all__ = [
    "DEFAULT_EDGE_CAP",
    "MomentPolynomial",
    "ConnectivityTable",
    "exact_moments",
    "moment_polynomial",
    "connectivity_moments",
    "pair_connectivity",
    "vertex_isolation_counts",
    "vertex_isolation_probability",
]

DEFAULT_EDGE_CAP = 24
_BLOCK = 4096


def _check_cap(graph: Graph, max_edges: int | None) -> None:
    cap = DEFAULT_EDGE_CAP if max_edges is None else max_edges
    if graph.n_edges > cap:
        raise TooManyEdgesError(
            f"{graph.n_edges} edges exceeds enumeration cap {cap}; "
            f"2^{graph.n_edges} configurations is too many"
        )


def _config_blocks(
    graph: Graph, max_edges: int | None
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (open_matrix, labels) blocks covering all configurations.

    ``open_matrix`` is (n_edges, block) boolean, column j the open flags of
    one configuration; ``labels`` is (n_vertices, block) with each vertex
    carrying the smallest vertex id in its cluster.
    """
    _check_cap(graph, max_edges)
    n, m = graph.n_vertices, graph.n_edges
    edges = graph.edges
    total = 1 << m
    bit_shifts = np.arange(m, dtype=np.uint64)[:, None]
    base_labels = np.arange(n, dtype=np.int16)[:, None]

    for lo in range(0, total, _BLOCK):
        hi = min(lo + _BLOCK, total)
        idx = np.arange(lo, hi, dtype=np.uint64)
        open_matrix = ((idx[None, :] >> bit_shifts) & np.uint64(1)).astype(bool)

        labels = np.broadcast_to(base_labels, (n, hi - lo)).copy()
        prev = -1
        while True:
            for e, (u, v) in enumerate(edges):
                t = open_matrix[e]
                low = np.minimum(labels[u], labels[v])
                np.copyto(labels[u], low, where=t)
                np.copyto(labels[v], low, where=t)
            cur = int(labels.sum(dtype=np.int64))
            if cur == prev:
                break
            prev = cur
        yield open_matrix, labels


def _same_cluster(labels: np.ndarray) -> np.ndarray:
    """Indicator tensor (N, N, block) of vertices sharing a cluster."""
    return labels[:, None, :] == labels[None, :, :]


def _cluster_sizes(labels: np.ndarray) -> np.ndarray:
    """Per-vertex cluster sizes (N, block) from a label block."""
    return _same_cluster(labels).sum(axis=1, dtype=np.int64)


def _config_weights(open_matrix: np.ndarray, p: float) -> np.ndarray:
    m = open_matrix.shape[0]
    n_open = open_matrix.sum(axis=0, dtype=np.int64)
    return p**n_open * (1.0 - p) ** (m - n_open)


def exact_moments(graph: Graph, p: float, max_edges: int | None = None) -> MomentPair:
    """E(S) and E(S^2) by direct probability-weighted enumeration."""
    p = _check_probability(p)
    first_acc = 0.0
    second_acc = 0.0
    for open_matrix, labels in _config_blocks(graph, max_edges):
        w = _config_weights(open_matrix, p)
        sizes = _cluster_sizes(labels)
        first_acc += float(w @ sizes.sum(axis=0))
        second_acc += float(w @ (sizes * sizes).sum(axis=0))
    n = graph.n_vertices
    return MomentPair(first=first_acc / n, second=second_acc / n, kind="exact")


@dataclass(frozen=True)
class MomentPolynomial:
    """Exact moments as polynomials in p, via integer configuration counts.

    ``first_counts[m]`` is sum over all configurations with exactly m open
    edges of sum_x S_x, an exact integer; likewise ``second_counts`` with
    S_x^2.  Then N * E(S) = sum_m first_counts[m] p^m (1-p)^(|E|-m).
    """

    n_vertices: int
    n_edges: int
    first_counts: tuple[int, ...]
    second_counts: tuple[int, ...]

    @property
    def first_coeffs(self) -> tuple[Fraction, ...]:
        """Exact rational coefficients of E(S) in the binomial-weight basis."""
        return tuple(Fraction(c, self.n_vertices) for c in self.first_counts)

    @property
    def second_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.n_vertices) for c in self.second_counts)

    def evaluate(self, p: float) -> MomentPair:
        p = _check_probability(p)
        m = np.arange(self.n_edges + 1)
        weights = p**m * (1.0 - p) ** (self.n_edges - m)
        first = float(weights @ np.array(self.first_counts, dtype=np.float64))
        second = float(weights @ np.array(self.second_counts, dtype=np.float64))
        n = self.n_vertices
        return MomentPair(first=first / n, second=second / n, kind="exact")

    def to_json_dict(self) -> dict:
        """JSON-ready form; counts as strings so arbitrary ints survive."""
        return {
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "denominator": self.n_vertices,
            "first_counts": [str(c) for c in self.first_counts],
            "second_counts": [str(c) for c in self.second_counts],
        }


def moment_polynomial(graph: Graph, max_edges: int | None = None) -> MomentPolynomial:
    """Integer configuration counts per number of open edges.

    Per-block partial counts stay far below 2^53 (at most 4096
    configurations, each contributing at most N^3), so accumulating through
    float64 bincount weights is exact before conversion to int64.
    """
    m = graph.n_edges
    first = np.zeros(m + 1, dtype=np.int64)
    second = np.zeros(m + 1, dtype=np.int64)
    for open_matrix, labels in _config_blocks(graph, max_edges):
        n_open = open_matrix.sum(axis=0, dtype=np.int64)
        sizes = _cluster_sizes(labels)
        first += np.bincount(
            n_open, weights=sizes.sum(axis=0), minlength=m + 1
        ).astype(np.int64)
        second += np.bincount(
            n_open, weights=(sizes * sizes).sum(axis=0), minlength=m + 1
        ).astype(np.int64)
    return MomentPolynomial(
        n_vertices=graph.n_vertices,
        n_edges=m,
        first_counts=tuple(int(c) for c in first),
        second_counts=tuple(int(c) for c in second),
    )


@dataclass(frozen=True)
class ConnectivityTable:
    """Pairwise (and optionally triple) connection probabilities."""

    p: float
    pair_probs: np.ndarray = field(repr=False)
    triple_probs: np.ndarray | None = field(repr=False, default=None)


def pair_connectivity(
    graph: Graph,
    p: float,
    include_triples: bool = False,
    max_edges: int | None = None,
) -> ConnectivityTable:
    """P(x <-> y) for all pairs; optionally P(x <-> y, x <-> z) triples.

    The triple tensor is (N, N, N) and adds an einsum per block, so keep it
    to small graphs.
    """
    p = _check_probability(p)
    n = graph.n_vertices
    pair = np.zeros((n, n))
    triple = np.zeros((n, n, n)) if include_triples else None
    for open_matrix, labels in _config_blocks(graph, max_edges):
        w = _config_weights(open_matrix, p)
        same = _same_cluster(labels)
        pair += np.tensordot(same, w, axes=([2], [0]))
        if triple is not None:
            triple += np.einsum("xyb,xzb,b->xyz", same, same, w)
    return ConnectivityTable(p=p, pair_probs=pair, triple_probs=triple)


def connectivity_moments(
    graph: Graph, p: float, max_edges: int | None = None
) -> MomentPair:
    """Moments through connection probabilities rather than size sums.

    E(S) is the mean over x of sum_y P(x <-> y); E(S^2) the mean over x of
    sum_{y,z} P(x <-> y, x <-> z), accumulated per start vertex.  Same
    answers as :func:`exact_moments` through a different reduction.
    """
    p = _check_probability(p)
    n = graph.n_vertices
    pair = np.zeros((n, n))
    second_per_x = np.zeros(n)
    for open_matrix, labels in _config_blocks(graph, max_edges):
        w = _config_weights(open_matrix, p)
        same = _same_cluster(labels)
        pair += np.tensordot(same, w, axes=([2], [0]))
        sizes = same.sum(axis=1, dtype=np.int64)
        second_per_x += (sizes.astype(np.float64) ** 2) @ w
    first = float(pair.sum(axis=1).mean())
    second = float(second_per_x.mean())
    return MomentPair(first=first, second=second, kind="exact")


def vertex_isolation_counts(
    graph: Graph, vertex: int, max_edges: int | None = None
) -> tuple[int, ...]:
    """Per-m counts of configurations leaving ``vertex`` isolated.

    Entry m counts configurations with m open edges in which every edge
    incident to ``vertex`` is closed.  Exactly binomial(|E| - D, m), which
    makes sum_m counts[m] p^m q^(|E|-m) = q^D an exact identity.
    """
    graph.neighbors(vertex)  # validates the index
    m = graph.n_edges
    incident = np.array(
        [u == vertex or v == vertex for (u, v) in graph.edges], dtype=bool
    )
    counts = np.zeros(m + 1, dtype=np.int64)
    for open_matrix, _ in _config_blocks(graph, max_edges):
        isolated = ~open_matrix[incident].any(axis=0)
        n_open = open_matrix.sum(axis=0, dtype=np.int64)
        counts += np.bincount(n_open[isolated], minlength=m + 1)
    return tuple(int(c) for c in counts)


def vertex_isolation_probability(
    graph: Graph, p: float, vertex: int, max_edges: int | None = None
) -> float:
    """P(all edges at ``vertex`` closed), by enumeration; equals (1-p)^D."""
    p = _check_probability(p)
    counts = np.array(vertex_isolation_counts(graph, vertex, max_edges), dtype=np.float64)
    m = np.arange(graph.n_edges + 1)
    return float(counts @ (p**m * (1.0 - p) ** (graph.n_edges - m)))
