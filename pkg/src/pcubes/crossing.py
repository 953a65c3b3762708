"""Crossing classes, isometric cycles, crossing graphs, simplex graphs.

Two relation classes of a partial cube cross when all four intersections of
their halfspaces are populated; equivalently, both classes appear on one
isometric cycle.  The crossing graph has one vertex per class and joins
crossing pairs.  The simplex graph of an arbitrary graph H has one vertex
per clique of H (the empty clique included) and joins cliques differing by
exactly one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import (
    Graph,
    GraphError,
    ResourceLimitError,
    bits_list,
    full_mask,
    iter_bits,
)
from .theta import PartialCubeCertificate, Sides, all_sides, is_partial_cube


class NotPartialCubeError(GraphError):
    def __init__(self, message: str, certificate: PartialCubeCertificate):
        super().__init__(message)
        self.certificate = certificate


def canonical_cycle(seq) -> tuple[int, ...]:
    """Lexicographically least rotation of either direction."""
    ln = len(seq)
    best = None
    for s in (list(seq), list(reversed(seq))):
        for r in range(ln):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class IsometricCycle:
    """A cycle realizing all its distances in the host graph.

    `vertices` is stored in canonical form (least rotation/reflection).
    """

    vertices: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq) -> "IsometricCycle":
        return cls(canonical_cycle(seq))

    @property
    def canonical_form(self) -> tuple[int, ...]:
        return self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [
            (vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        ]


def _is_isometric_cycle(seq: tuple[int, ...], dist) -> bool:
    ln = len(seq)
    for i in range(ln):
        for j in range(i + 1, ln):
            around = min(j - i, ln - (j - i))
            if int(dist[seq[i], seq[j]]) != around:
                return False
    return True


def _geodesics(g: Graph, dist, a: int, w: int, banned: frozenset[int] | set[int]):
    """All geodesics a -> w whose interior vertices exceed a and avoid `banned`."""
    out = []
    path = [a]

    def grow(cur: int) -> None:
        if cur == w:
            out.append(tuple(path))
            return
        step = int(dist[cur, w]) - 1
        for x in g.adj[cur]:
            if int(dist[x, w]) == step and (x == w or (x > a and x not in banned)):
                path.append(x)
                grow(x)
                path.pop()

    grow(a)
    return out


def isometric_cycles(
    g: Graph, dist, max_vertices: int = 4096
) -> list[IsometricCycle]:
    """Enumerate all isometric cycles.

    A cycle of length 2k splits at any antipodal pair into two disjoint
    geodesics, and an odd cycle of length 2k+1 into two geodesics meeting an
    edge, so candidates are built by pairing geodesic arcs anchored at the
    least cycle vertex; each candidate is then checked against the full
    distance condition and deduplicated by canonical form.  Worst-case cost
    is exponential, hence the vertex guard.
    """
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"isometric cycle enumeration refused: {g.n} vertices exceeds "
            f"the guard of {max_vertices}"
        )
    found: set[tuple[int, ...]] = set()
    for a in range(g.n):
        row = dist[a]
        # even cycles: a and w antipodal, two disjoint arcs
        for w in range(a + 1, g.n):
            if int(row[w]) < 2:
                continue
            first_arcs = _geodesics(g, dist, a, w, frozenset())
            for p in first_arcs:
                inner = frozenset(p[1:-1])
                for q in _geodesics(g, dist, a, w, inner):
                    if q[1] <= p[1]:
                        continue
                    cyc = p + tuple(reversed(q[1:-1]))
                    if _is_isometric_cycle(cyc, dist):
                        found.add(canonical_cycle(cyc))
        # odd cycles: arcs from a to both ends of an antipodal edge
        for w1, w2 in g.edges:
            if w1 <= a or w2 <= a:
                continue
            if int(row[w1]) != int(row[w2]) or int(row[w1]) < 1:
                continue
            for p in _geodesics(g, dist, a, w1, frozenset()):
                used = frozenset(p[1:])
                if w2 in used:
                    continue
                for q in _geodesics(g, dist, a, w2, used):
                    cyc = p + tuple(reversed(q[1:]))
                    if _is_isometric_cycle(cyc, dist):
                        found.add(canonical_cycle(cyc))
    return [
        IsometricCycle(vs) for vs in sorted(found, key=lambda t: (len(t), t))
    ]


def crosses_quadrant(
    g: Graph, dist, cert: PartialCubeCertificate, c1: int, c2: int
) -> bool:
    """Quadrant test: do all four halfspace intersections meet?"""
    if c1 == c2:
        raise GraphError("crossing is defined for distinct classes")
    if not cert.verdict:
        raise GraphError("crossing requires a partial cube")
    a1 = _side_bool(g, dist, cert, c1)
    a2 = _side_bool(g, dist, cert, c2)
    return bool(
        (a1 & a2).any()
        and (a1 & ~a2).any()
        and (~a1 & a2).any()
        and (~a1 & ~a2).any()
    )


def _side_bool(g: Graph, dist, cert: PartialCubeCertificate, c: int):
    a, b = g.edges[cert.theta.classes[c][0]]
    return dist[a, :] < dist[b, :]


def crosses_cycle(
    g: Graph,
    dist,
    cert: PartialCubeCertificate,
    cycles: list[IsometricCycle],
    c1: int,
    c2: int,
) -> bool:
    """Cycle test: do both classes occur on a common isometric cycle?"""
    if c1 == c2:
        raise GraphError("crossing is defined for distinct classes")
    if not cert.verdict:
        raise GraphError("crossing requires a partial cube")
    cls = cert.theta.class_of
    for cyc in cycles:
        present = {cls[g.edge_id(u, v)] for u, v in cyc.edge_pairs()}
        if c1 in present and c2 in present:
            return True
    return False


@dataclass(frozen=True)
class CrossingGraph:
    graph: Graph
    class_of_vertex: tuple[int, ...]  # vertex i <-> class i


def crossing_graph(g: Graph, cert: PartialCubeCertificate | None = None) -> CrossingGraph:
    """Crossing graph of a partial cube with at least two vertices.

    Vertex i stands for class i (class ids are ordered by least edge id);
    adjacency is decided by the quadrant test.
    """
    if cert is None:
        cert = is_partial_cube(g)
    if not cert.verdict:
        raise NotPartialCubeError("crossing graph requires a partial cube", cert)
    if g.n == 1:
        raise GraphError("crossing graph is undefined for a one-vertex graph")
    k = cert.idim
    dist = cert.dist
    side = np.zeros((k, g.n), dtype=bool)
    for c in range(k):
        side[c] = _side_bool(g, dist, cert, c)
    counts = side.astype(np.int64) @ side.astype(np.int64).T
    size = side.sum(axis=1).astype(np.int64)
    edges = []
    for c1 in range(k):
        for c2 in range(c1 + 1, k):
            both = counts[c1, c2]
            if (
                both > 0
                and size[c1] - both > 0
                and size[c2] - both > 0
                and g.n - size[c1] - size[c2] + both > 0
            ):
                edges.append((c1, c2))
    return CrossingGraph(Graph(k, edges), tuple(range(k)))


def alternating_square(
    g: Graph, dist, cert: PartialCubeCertificate, c1: int, c2: int
) -> IsometricCycle | None:
    """Least 4-cycle whose opposite edge pairs lie in classes c1 and c2."""
    if c1 == c2:
        raise GraphError("alternating squares need distinct classes")
    if not cert.verdict:
        raise GraphError("alternating squares require a partial cube")
    cls = cert.theta.class_of
    best = None
    for e in cert.theta.classes[c1]:
        p, q = g.edges[e]
        for u, v in ((p, q), (q, p)):
            for x in g.adj[u]:
                if x == v or cls[g.edge_id(u, x)] != c2:
                    continue
                for w in g.adj[v]:
                    if (
                        w != u
                        and cls[g.edge_id(v, w)] == c2
                        and g.has_edge(x, w)
                        and cls[g.edge_id(x, w)] == c1
                    ):
                        cand = canonical_cycle((u, v, w, x))
                        if best is None or cand < best:
                            best = cand
    return None if best is None else IsometricCycle(best)


@dataclass(frozen=True)
class SimplexGraph:
    graph: Graph
    cliques: tuple[tuple[int, ...], ...]  # vertex id -> clique, ascending members
    vertex_of_clique: dict[tuple[int, ...], int]


def simplex_graph(h: Graph, max_cliques: int = 200_000) -> SimplexGraph:
    """Graph on all cliques of h (empty one included), joined when they
    differ in exactly one vertex.  Guarded by a clique-count cap."""
    cliques: list[tuple[int, ...]] = []

    def extend(cur: tuple[int, ...], candidates: int) -> None:
        cliques.append(cur)
        if len(cliques) > max_cliques:
            raise ResourceLimitError(
                f"more than {max_cliques} cliques; rerun with a higher cap "
                "or a smaller graph"
            )
        for v in iter_bits(candidates):
            extend(cur + (v,), candidates & h.nbr_mask[v] & ~((1 << (v + 1)) - 1))

    extend((), full_mask(h.n))
    cliques.sort(key=lambda c: (len(c), c))
    index = {c: i for i, c in enumerate(cliques)}
    edges = []
    for c in cliques:
        if not c:
            continue
        i = index[c]
        for v in c:
            parent = tuple(x for x in c if x != v)
            edges.append((index[parent], i))
    return SimplexGraph(Graph(len(cliques), edges), tuple(cliques), index)


def verify_simplex_identity(h: Graph, max_cliques: int = 200_000) -> bool:
    """Check that h is reproduced as the crossing graph of its simplex graph.

    Uses the natural identification: the relation class of the simplex-graph
    edge (K, K + v) corresponds to the vertex v of h.  Verifies the
    identification is well defined and a bijection, then compares crossing
    adjacency with the adjacency of h.
    """
    s = simplex_graph(h, max_cliques)
    cert = is_partial_cube(s.graph)
    if not cert.verdict:
        return False
    classes = cert.theta.classes
    if len(classes) != h.n:
        return False
    rep: list[int] = []
    for eids in classes:
        vals = set()
        for e in eids:
            p, q = s.graph.edges[e]
            diff = set(s.cliques[p]) ^ set(s.cliques[q])
            if len(diff) != 1:
                return False
            vals.add(diff.pop())
        if len(vals) != 1:
            return False
        rep.append(vals.pop())
    if sorted(rep) != list(range(h.n)):
        return False
    dist = cert.dist
    for c1 in range(len(classes)):
        for c2 in range(c1 + 1, len(classes)):
            crossing = crosses_quadrant(s.graph, dist, cert, c1, c2)
            if crossing != h.has_edge(rep[c1], rep[c2]):
                return False
    return True


def coordinate_crossing_pairs(
    g: Graph,
    labels: tuple[int, ...],
    cert: PartialCubeCertificate | None = None,
) -> frozenset[tuple[int, int]]:
    """Crossing adjacency keyed by hypercube coordinates instead of class ids.

    `labels` must be an isometric labeling of g; every class then flips a
    single coordinate, which names it independently of class numbering, so
    results are comparable across graphs sharing one coordinate frame.
    """
    if cert is None:
        cert = is_partial_cube(g)
    if not cert.verdict:
        raise NotPartialCubeError("coordinate crossing requires a partial cube", cert)
    coords = []
    for eids in cert.theta.classes:
        flips = {labels[u] ^ labels[v] for u, v in (g.edges[e] for e in eids)}
        if len(flips) != 1:
            raise GraphError("labeling inconsistent: one class flips several coordinates")
        flip = flips.pop()
        if flip == 0 or flip & (flip - 1):
            raise GraphError("labeling inconsistent: class flip is not one coordinate")
        coords.append(flip.bit_length() - 1)
    if len(set(coords)) != len(coords):
        raise GraphError("labeling inconsistent: two classes flip one coordinate")
    dist = cert.dist
    out = set()
    for c1 in range(len(coords)):
        for c2 in range(c1 + 1, len(coords)):
            if crosses_quadrant(g, dist, cert, c1, c2):
                out.add(tuple(sorted((coords[c1], coords[c2]))))
    return frozenset(out)
