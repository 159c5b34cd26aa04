"""Finite simple connected D-regular graphs.

Vertices are ``0..N-1``.  Edges are stored as ``(min, max)`` pairs sorted
lexicographically; the position of an edge in that order is its *edge index*,
which is how percolation configurations refer to edges.  Adjacency lists are
sorted ascending.  Both orderings are load-bearing: they fix the iteration
order of the birth process and of the enumeration oracle, so that seeded runs
are reproducible.

Canonical vertex labelings of the named graphs
----------------------------------------------
tetrahedron   K4.
cube          vertices are the 3-bit words 0..7, edges join words differing
              in exactly one bit (identical to ``hypercube(3)``).
octahedron    K6 minus the perfect matching {(0,1), (2,3), (4,5)}; each pair
              is a pair of opposite poles.
dodecahedron  outer 10-cycle on 0..9, spokes i -- 10+i, inner vertices
              10..19 joined as 10+i -- 10+((i+2) mod 10) (two inner
              pentagons).
icosahedron   apex 0 over upper pentagon 1..5, apex 11 under lower pentagon
              6..10, antiprism edges i -- 5+i and i -- 6+(i mod 5) for
              i = 1..5.
ring(N)       cycle 0 -- 1 -- ... -- N-1 -- 0.
complete(N)   K_N.
hypercube(d)  vertices are d-bit words, edges join words at Hamming
              distance 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadIndexError,
    BadParameterError,
    InfeasibleError,
    NotConnectedError,
    NotRegularError,
    NotSimpleError,
    RetryLimitError,
)

__all__ = [
    "Graph",
    "build_from_edge_list",
    "generate_builtin",
    "generate_random_regular",
    "load_edge_file",
    "format_edge_file",
    "BUILTIN_NAMES",
]

BUILTIN_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


@dataclass(frozen=True)
class Graph:
    """Validated simple connected D-regular graph; immutable and shareable."""

    n_vertices: int
    degree: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    label: str = "custom"

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n_vertices:
            raise BadIndexError(f"vertex {v} out of range [0, {self.n_vertices})")
        return self.adjacency[v]

    def edge_array(self) -> np.ndarray:
        """Edges as an (|E|, 2) int array, in edge-index order."""
        return np.asarray(self.edges, dtype=np.int64)


def _connected(n: int, adjacency: Sequence[Sequence[int]]) -> bool:
    seen = bytearray(n)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == n


def build_from_edge_list(
    n_vertices: int, edges: Iterable[tuple[int, int]], label: str = "custom"
) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Raises ``NotSimpleError`` on loops/duplicates, ``NotRegularError`` if
    degrees differ, ``NotConnectedError`` if disconnected, ``BadIndexError``
    on out-of-range vertices.
    """
    if n_vertices < 2:
        raise BadParameterError(f"need at least 2 vertices, got {n_vertices}")
    edge_list = list(edges)
    if not edge_list:
        raise BadParameterError("edge list is empty")

    seen: set[tuple[int, int]] = set()
    canonical: list[tuple[int, int]] = []
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise BadIndexError(f"edge ({u}, {v}) out of range [0, {n_vertices})")
        if u == v:
            raise NotSimpleError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise NotSimpleError(f"duplicate edge {e}")
        seen.add(e)
        canonical.append(e)
    canonical.sort()

    adjacency: list[list[int]] = [[] for _ in range(n_vertices)]
    for u, v in canonical:
        adjacency[u].append(v)
        adjacency[v].append(u)
    degrees = {len(a) for a in adjacency}
    if len(degrees) != 1:
        raise NotRegularError(f"vertex degrees vary: {sorted(degrees)}")
    degree = degrees.pop()
    if degree == 0:
        raise NotRegularError("graph has no edges at some vertex")
    if not _connected(n_vertices, adjacency):
        raise NotConnectedError("graph is not connected")

    return Graph(
        n_vertices=n_vertices,
        degree=degree,
        edges=tuple(canonical),
        adjacency=tuple(tuple(sorted(a)) for a in adjacency),
        label=label,
    )


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------


def _ring_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def _complete_edges(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _hypercube_edges(d: int) -> list[tuple[int, int]]:
    return [(u, u ^ (1 << b)) for u in range(1 << d) for b in range(d) if u < u ^ (1 << b)]


def _octahedron_edges() -> list[tuple[int, int]]:
    poles = {(0, 1), (2, 3), (4, 5)}
    return [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in poles]


def _dodecahedron_edges() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 10) for i in range(10)]
    spokes = [(i, 10 + i) for i in range(10)]
    inner = [(10 + i, 10 + ((i + 2) % 10)) for i in range(10)]
    return outer + spokes + inner


def _icosahedron_edges() -> list[tuple[int, int]]:
    edges = [(0, i) for i in range(1, 6)]
    edges += [(i, i % 5 + 1) for i in range(1, 6)]          # upper pentagon
    edges += [(11, i) for i in range(6, 11)]
    edges += [(i, (i - 5) % 5 + 6) for i in range(6, 11)]   # lower pentagon
    for i in range(1, 6):                                   # antiprism band
        edges.append((i, 5 + i))
        edges.append((i, 6 + i % 5))
    return edges


_NAME_RE = re.compile(r"^([a-z]+)(?:\((\d+)\))?$")


def generate_builtin(name: str) -> Graph:
    """Build a named graph: one of the five Platonic solids, or the
    parameterized families ``ring(N)``, ``complete(N)``, ``hypercube(d)``."""
    m = _NAME_RE.match(name.strip().lower())
    if not m:
        raise BadParameterError(f"cannot parse graph name {name!r}")
    base, arg = m.group(1), m.group(2)

    fixed = {
        "tetrahedron": (4, _complete_edges(4)),
        "cube": (8, _hypercube_edges(3)),
        "octahedron": (6, _octahedron_edges()),
        "dodecahedron": (20, _dodecahedron_edges()),
        "icosahedron": (12, _icosahedron_edges()),
    }
    if base in fixed:
        if arg is not None:
            raise BadParameterError(f"{base} takes no parameter")
        n, edges = fixed[base]
        return build_from_edge_list(n, edges, label=base)

    if base in ("ring", "complete", "hypercube"):
        if arg is None:
            raise BadParameterError(f"{base} needs a parameter, e.g. {base}(8)")
        k = int(arg)
        if base == "ring":
            if k < 3:
                raise BadParameterError("ring needs N >= 3")
            return build_from_edge_list(k, _ring_edges(k), label=f"ring({k})")
        if base == "complete":
            if k < 2:
                raise BadParameterError("complete needs N >= 2")
            return build_from_edge_list(k, _complete_edges(k), label=f"complete({k})")
        if k < 1:
            raise BadParameterError("hypercube needs d >= 1")
        return build_from_edge_list(1 << k, _hypercube_edges(k), label=f"hypercube({k})")

    raise BadParameterError(f"unknown graph name {name!r}")


def generate_random_regular(
    n_vertices: int, degree: int, seed: int, max_attempts: int = 10_000
) -> Graph:
    """Random simple connected regular graph via the pairing model.

    Stubs are shuffled and paired; attempts producing a loop, a duplicate
    edge, or a disconnected graph are discarded and retried.  Deterministic
    given ``seed``.
    """
    if n_vertices * degree % 2 != 0:
        raise InfeasibleError(f"N*D must be even, got N={n_vertices}, D={degree}")
    if not 1 <= degree < n_vertices:
        raise InfeasibleError(f"need 1 <= D < N, got N={n_vertices}, D={degree}")
    if degree == 1 and n_vertices != 2:
        raise InfeasibleError("a connected 1-regular graph must have exactly 2 vertices")

    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n_vertices), degree)
    for _ in range(max_attempts):
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        edges = set()
        ok = True
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                ok = False
                break
            e = (u, v) if u < v else (v, u)
            if e in edges:
                ok = False
                break
            edges.add(e)
        if not ok:
            continue
        try:
            return build_from_edge_list(
                n_vertices, edges, label=f"random({n_vertices},{degree},{seed})"
            )
        except NotConnectedError:
            continue
    raise RetryLimitError(
        f"no simple connected {degree}-regular graph on {n_vertices} vertices "
        f"found in {max_attempts} attempts"
    )


# ---------------------------------------------------------------------------
# edge-list text files: first line "N D", one "u v" per line, '#' comments
# ---------------------------------------------------------------------------


def load_edge_file(path: str | Path) -> Graph:
    path = Path(path)
    lines = [
        ln.strip()
        for ln in path.read_text().splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise BadParameterError(f"{path}: no content")
    head = lines[0].split()
    if len(head) != 2:
        raise BadParameterError(f"{path}: first line must be 'N D', got {lines[0]!r}")
    n, declared_degree = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise BadParameterError(f"{path}: bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    graph = build_from_edge_list(n, edges, label=path.stem)
    if graph.degree != declared_degree:
        raise BadParameterError(
            f"{path}: header declares D={declared_degree} but edges are {graph.degree}-regular"
        )
    return graph


def format_edge_file(graph: Graph) -> str:
    lines = [f"{graph.n_vertices} {graph.degree}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"
