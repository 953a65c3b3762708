"""Deterministic and seeded graph families used by the test corpus and CLI.

Seeds drive `random.Random` instances local to each call, so identical
arguments always produce identical graphs.
"""

from __future__ import annotations

import random

from .graphs import Graph, GraphError, ResourceLimitError, mask_of
from .theta import is_partial_cube
from .median import halfspace_hull, is_median_by_convex_U, peripheral_convex_expansion


def hypercube(n: int) -> Graph:
    """Q_n with vertices indexed by their label value."""
    if not 0 <= n <= 20:
        raise GraphError(f"hypercube dimension {n} outside the supported 0..20")
    edges = []
    for v in range(1 << n):
        for b in range(n):
            if not (v >> b) & 1:
                edges.append((v, v | (1 << b)))
    return Graph(1 << n, edges)


def even_cycle(k: int) -> Graph:
    """C_{2k}."""
    if k < 2:
        raise GraphError("even cycles need half-length at least 2")
    n = 2 * k
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("paths need at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graphs need at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform attachment: vertex v joins a uniformly random earlier vertex."""
    if n < 1:
        raise GraphError("trees need at least one vertex")
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def attach_pendants(g: Graph, m: int, seed: int = 0) -> Graph:
    """Add m degree-1 vertices, sites round-robin over V with a seeded
    starting vertex.  Pendants are peripheral expansions over single
    vertices, so median inputs stay median."""
    if m < 0:
        raise GraphError("pendant count must be nonnegative")
    if m and g.n == 0:
        raise GraphError("cannot attach pendants to an empty graph")
    start = random.Random(seed).randrange(g.n) if g.n else 0
    edges = list(g.edges)
    for j in range(m):
        edges.append(((start + j) % g.n, g.n + j))
    return Graph(g.n + m, edges)


def example_41(n: int, m: int) -> Graph:
    """K_n together with m isolated vertices; Cl = (x+1)^n + mx."""
    if n < 1 or m < 0:
        raise GraphError("need n >= 1 and m >= 0")
    return Graph(n + m, complete(n).edges)


def example_42(n: int, m: int, max_vertices: int = 200_000) -> Graph:
    """Q_n with m pendants; C = (x+2)^n + m(x+1)."""
    if n < 1 or m < 0:
        raise GraphError("need n >= 1 and m >= 0")
    if (1 << n) + m > max_vertices:
        raise ResourceLimitError(
            f"graph would have {(1 << n) + m} vertices, over the guard of "
            f"{max_vertices}; use the closed-form polynomial instead"
        )
    q = hypercube(n)
    edges = list(q.edges)
    for j in range(m):
        edges.append((j % q.n, q.n + j))
    return Graph(q.n + m, edges)


def trihex() -> Graph:
    """Three hexagons glued along the edges (2,3), (3,4), (3,9) of the
    first; 13 vertices, 15 edges, a partial cube of isometric dimension 6
    that is not median."""
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
        (2, 6), (6, 7), (7, 8), (8, 9), (3, 9),
        (9, 10), (10, 11), (11, 12), (4, 12),
    ]
    return Graph(13, edges)


def random_median_graph(steps: int, seed: int = 0) -> Graph:
    """Grow a median graph from a single vertex by seeded peripheral convex
    expansions; each step expands over the hull of 1-3 random vertices.
    The result is median by construction and re-checked before returning."""
    if steps < 1:
        raise GraphError("need at least one expansion step")
    rng = random.Random(seed)
    g = Graph(1, [])
    cert = is_partial_cube(g)
    for _ in range(steps):
        if g.n > 400:
            # keep the corpus small: a single-vertex base adds one pendant
            base = mask_of([rng.randrange(g.n)])
            hull = base
        else:
            picks = [rng.randrange(g.n) for _ in range(rng.randint(1, 3))]
            hull = halfspace_hull(g, cert, mask_of(picks))
        g = peripheral_convex_expansion(g, cert.dist, hull)
        cert = is_partial_cube(g)
        assert cert.verdict
    if not is_median_by_convex_U(g, cert):
        raise AssertionError("expansion walk produced a non-median graph")
    return g


def hypercube_minus_vertex(n: int) -> Graph:
    """Q_n without its all-ones vertex: a partial cube, not median for
    n >= 3."""
    if n < 2:
        raise GraphError("needs dimension at least 2")
    q = hypercube(n)
    top = q.n - 1
    return Graph(q.n - 1, [e for e in q.edges if top not in e])


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Seeded G(n, p); pairs examined in ascending order."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError("need n >= 0 and p in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)
