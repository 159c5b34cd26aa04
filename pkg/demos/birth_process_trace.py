"""Layered growth of one open cluster.

Samples a percolation configuration on the dodecahedron and grows the
cluster of a start vertex one generation at a time: generation n holds
the vertices at open-path distance n. The generation counts always sum
to the cluster size, which is the identity behind the moment bounds.
"""

import numpy as np

from percmoments import cluster_of, generate_builtin, run_birth_process, sample_config


def main() -> None:
    rng = np.random.default_rng(20)
    g = generate_builtin("dodecahedron")
    p = 0.45
    config = sample_config(g, p, rng)
    x = int(rng.integers(g.n_vertices))

    trace = run_birth_process(g, config, x)
    print(f"graph: {g.label}  p={p}  start vertex {trace.start_vertex}")
    for n, layer in enumerate(trace.layers):
        if n > 0 and not layer:
            break
        print(f"  generation {n}: count={trace.counts[n]:2d}  vertices={sorted(layer)}")
    print(f"total occupied: {trace.total}")

    # the layered view and plain connected-component search must agree
    flat = cluster_of(g, config, x)
    print(f"cluster_of size agrees: {flat.size == trace.total}")

    # per-particle offspring counts refine the generation totals: the
    # children born to generation n are exactly generation n + 1
    depth = max(n for n, c in enumerate(trace.counts) if c)
    births = [sum(trace.per_particle_offspring[n]) for n in range(depth)]
    print(f"offspring sums per generation: {births}")
    print(f"next-generation counts match: {births == list(trace.counts[1:depth + 1])}")


if __name__ == "__main__":
    main()
