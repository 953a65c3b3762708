"""Shared test oracles: small, dumb, and independent of the library code.

Everything here recomputes from definitions (pure-Python BFS, exhaustive
cycle enumeration, definition-level convexity) so the fast implementations
have something honest to be compared against.
"""

from __future__ import annotations

from collections import deque

import networkx as nx

from pcubes.graphs import Graph, bits_list


def bfs_distances(g: Graph) -> list[list[int]]:
    """All-pairs distances by plain BFS; -1 for unreachable."""
    out = []
    for s in range(g.n):
        d = [-1] * g.n
        d[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if d[v] == -1:
                    d[v] = d[u] + 1
                    q.append(v)
        out.append(d)
    return out


def all_simple_cycles(g: Graph) -> set[tuple[int, ...]]:
    """Every simple cycle, once, as a canonical vertex tuple.

    A cycle is listed starting at its least vertex, walking toward the
    smaller of that vertex's two cycle neighbors, so rotations and
    reflections collapse.
    """
    cycles: set[tuple[int, ...]] = set()

    def extend(start: int, path: list[int], used: set[int]):
        u = path[-1]
        for v in g.adj[u]:
            if v == start and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.add(tuple(path))
            elif v > start and v not in used:
                path.append(v)
                used.add(v)
                extend(start, path, used)
                used.remove(v)
                path.pop()

    for s in range(g.n):
        extend(s, [s], {s})
    return cycles


def cycle_is_isometric(g: Graph, dist, cyc: tuple[int, ...]) -> bool:
    """Definition check: cycle distances realize graph distances."""
    L = len(cyc)
    for i in range(L):
        for j in range(i + 1, L):
            around = min(j - i, L - (j - i))
            if int(dist[cyc[i], cyc[j]]) != around:
                return False
    return True


def isometric_cycles_brute(g: Graph, dist) -> set[tuple[int, ...]]:
    return {c for c in all_simple_cycles(g) if cycle_is_isometric(g, dist, c)}


def brute_convex(g: Graph, dist, s: int) -> bool:
    """Definition check: no geodesic between members leaves the set."""
    members = bits_list(s)
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            duv = int(dist[u, v])
            if duv < 0:
                return False
            for w in range(g.n):
                if (s >> w) & 1:
                    continue
                if int(dist[u, w]) >= 0 and int(dist[u, w]) + int(dist[w, v]) == duv:
                    return False
    return True


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(a), to_networkx(b))


def odd_cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
