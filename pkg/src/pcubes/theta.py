"""Djokovic-Winkler edge relation, partial cube recognition, embeddings.

Edges e = uv and f = xy are related when
d(u,x) + d(v,y) != d(u,y) + d(v,x).  A connected graph is a partial cube
(isometric subgraph of a hypercube) iff it is bipartite and this relation
is transitive; its classes then cut the graph into halfspace pairs and give
coordinates for the hypercube embedding.

For connected bipartite graphs the relation has a cut form that this module
exploits: every edge uv splits V into W(u over v) = {w : d(u,w) < d(v,w)}
and its mirror, and e is related to f iff f has one endpoint on each side
of e's split.  Two consequences keep recognition near-linear: edges with
identical splits are always related, and relatedness between two groups of
identical-split edges is decided by any single representative pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphs import (
    Graph,
    GraphError,
    INFINITE,
    Bipartition,
    all_pairs_distances,
    bits_list,
    bool_to_mask,
    full_mask,
    is_bipartite,
)


@dataclass(frozen=True)
class ThetaPartition:
    """Candidate classes: connected components of the edge relation.

    `is_equivalence` is true iff every intra-class pair is related; when it
    is false, `witness` holds edge ids (e, g, f) with e~g and g~f but not
    e~f.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    is_equivalence: bool
    witness: tuple[int, int, int] | None


@dataclass(frozen=True, eq=False)
class PartialCubeCertificate:
    verdict: bool
    connected: bool
    bipartition: Bipartition
    theta: ThetaPartition | None  # None when the graph is disconnected
    idim: int | None  # class count when verdict holds
    dist: np.ndarray  # cached all-pairs distances


@dataclass(frozen=True)
class HypercubeEmbedding:
    labels: tuple[int, ...]  # vertex -> coordinate bitmask
    class_bit: tuple[int, ...]  # class id -> coordinate index
    base: int  # vertex with the all-zero label


@dataclass(frozen=True)
class Sides:
    """Halfspaces of one class, oriented by its least edge (a, b), a < b."""

    class_id: int
    a: int
    b: int
    w_ab: int  # vertices strictly closer to a
    w_ba: int
    u_ab: int  # w_ab vertices incident with a class edge
    u_ba: int


def theta_related(g: Graph, dist: np.ndarray, e: int, f: int) -> bool:
    """Exact evaluation of the distance inequality for edge ids e, f."""
    u, v = g.edges[e]
    x, y = g.edges[f]
    return int(dist[u, x]) + int(dist[v, y]) != int(dist[u, y]) + int(dist[v, x])


def _relation_components(count: int, rows: list[int]):
    """Components, completeness, and a transitivity witness for a relation.

    `rows[i]` is the bitmask of items related to item i (reflexive).
    Returns (components as sorted index lists, is_complete, witness triple
    of indices or None).
    """
    comps = []
    seen = 0
    for s in range(count):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        stack = [s]
        while stack:
            i = stack.pop()
            fresh = rows[i] & ~comp
            comp |= fresh
            stack.extend(bits_list(fresh))
        seen |= comp
        comps.append(comp)
    for comp in comps:
        for i in bits_list(comp):
            missing = comp & ~rows[i]
            if missing:
                j = next(iter(bits_list(missing)))
                return comps, False, _transitivity_witness(rows, i, j)
    return comps, True, None


def _transitivity_witness(rows: list[int], i: int, j: int):
    # i and j share a component but are unrelated; walk a relation path and
    # return the first triple that breaks transitivity.
    prev = {i: None}
    q = deque([i])
    while q:
        x = q.popleft()
        if x == j:
            break
        for y in bits_list(rows[x]):
            if y not in prev:
                prev[y] = x
                q.append(y)
    path = [j]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()  # i ... j
    for t in range(2, len(path)):
        if not (rows[i] >> path[t]) & 1:
            return (i, path[t - 1], path[t])
    raise AssertionError("no transitivity violation on relation path")


def theta_classes(g: Graph, dist: np.ndarray | None = None) -> ThetaPartition:
    """Partition the edges into relation components and verify transitivity.

    Classes are ordered by their least edge id.  Requires a connected graph.
    """
    if dist is None:
        dist = all_pairs_distances(g)
    if g.n > 0 and (dist[0, :] == INFINITE).any():
        raise GraphError("theta classes are defined for connected graphs only")
    m = g.m
    if m == 0:
        return ThetaPartition((), (), True, None)
    ends = np.array(g.edges, dtype=np.int64)
    eu, ev = ends[:, 0], ends[:, 1]
    if is_bipartite(g).ok:
        classes, complete, witness = _classes_bipartite(g, dist, eu, ev)
    else:
        classes, complete, witness = _classes_general(g, dist, eu, ev)
    classes.sort(key=lambda ids: ids[0])
    class_of = [0] * m
    for c, ids in enumerate(classes):
        for e in ids:
            class_of[e] = c
    return ThetaPartition(
        tuple(class_of), tuple(tuple(ids) for ids in classes), complete, witness
    )


def _classes_bipartite(g: Graph, dist, eu, ev):
    m = g.m
    groups: dict[bytes, list[int]] = {}
    block = 4096
    for start in range(0, m, block):
        side = dist[eu[start : start + block], :] < dist[ev[start : start + block], :]
        # canonicalize each split so vertex 0 sits on the True side
        side ^= ~side[:, 0][:, None]
        packed = np.packbits(side, axis=1, bitorder="little")
        for i in range(side.shape[0]):
            groups.setdefault(packed[i].tobytes(), []).append(start + i)
    members = sorted(groups.values(), key=lambda ids: ids[0])
    reps = np.array([ids[0] for ids in members])
    rep_side = dist[eu[reps], :] < dist[ev[reps], :]
    rel = rep_side[:, eu[reps]] != rep_side[:, ev[reps]]
    np.fill_diagonal(rel, True)
    rows = [bool_to_mask(rel[i]) for i in range(len(reps))]
    comps, complete, wit_idx = _relation_components(len(reps), rows)
    classes = [
        sorted(e for gi in bits_list(comp) for e in members[gi]) for comp in comps
    ]
    witness = None
    if wit_idx is not None:
        witness = tuple(int(reps[i]) for i in wit_idx)
    return classes, complete, witness


def _classes_general(g: Graph, dist, eu, ev):
    m = g.m
    rows = []
    for e in range(m):
        u, v = g.edges[e]
        rel = dist[u, eu] + dist[v, ev] != dist[u, ev] + dist[v, eu]
        rows.append(bool_to_mask(rel))
    comps, complete, witness = _relation_components(m, rows)
    classes = [bits_list(comp) for comp in comps]
    return classes, complete, witness


def is_partial_cube(g: Graph) -> PartialCubeCertificate:
    """Winkler's criterion: connected, bipartite, relation transitive."""
    dist = all_pairs_distances(g)
    connected = g.n > 0 and not (dist == INFINITE).any()
    bip = is_bipartite(g)
    if not connected:
        return PartialCubeCertificate(False, False, bip, None, None, dist)
    theta = theta_classes(g, dist)
    verdict = bip.ok and theta.is_equivalence
    idim = len(theta.classes) if verdict else None
    return PartialCubeCertificate(verdict, True, bip, theta, idim, dist)


def embed(g: Graph, cert: PartialCubeCertificate) -> HypercubeEmbedding:
    """Coordinatize a partial cube; class c drives bit c of every label.

    Vertex 0 gets the all-zero label; bit c is set on the halfspace of class
    c not containing vertex 0.  The result is checked: hypercube (Hamming)
    distance must reproduce the graph metric exactly.
    """
    if not cert.verdict:
        raise GraphError("hypercube embedding requires a partial cube")
    dist = cert.dist
    k = cert.idim
    labels = [0] * g.n
    ones_rows = []
    for c, eids in enumerate(cert.theta.classes):
        a, b = g.edges[eids[0]]
        side_a = dist[a, :] < dist[b, :]
        ones = ~side_a if side_a[0] else side_a
        ones_rows.append(ones)
        for u in np.flatnonzero(ones):
            labels[u] |= 1 << c
    if g.n and not labels[0] == 0:
        raise AssertionError("base vertex must carry the all-zero label")
    if k <= 63:
        arr = np.array(labels, dtype=np.uint64)
        ham = np.bitwise_count(arr[:, None] ^ arr[None, :]).astype(np.int32)
        ok = bool((ham == dist).all())
    else:
        ok = all(
            (labels[u] ^ labels[v]).bit_count() == int(dist[u, v])
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )
    if not ok:
        raise AssertionError("embedding violates the Hamming-distance invariant")
    return HypercubeEmbedding(tuple(labels), tuple(range(k)), 0)


def sides(g: Graph, dist: np.ndarray, cert: PartialCubeCertificate, c: int) -> Sides:
    """Halfspaces W and their boundaries U for class c of a partial cube."""
    if not cert.verdict:
        raise GraphError("sides require a partial cube")
    eids = cert.theta.classes[c]
    a, b = g.edges[eids[0]]
    side_a = dist[a, :] < dist[b, :]
    w_ab = bool_to_mask(side_a)
    w_ba = full_mask(g.n) ^ w_ab
    u_ab = u_ba = 0
    for e in eids:
        x, y = g.edges[e]
        if side_a[x]:
            u_ab |= 1 << x
            u_ba |= 1 << y
        else:
            u_ab |= 1 << y
            u_ba |= 1 << x
    return Sides(c, a, b, w_ab, w_ba, u_ab, u_ba)


def all_sides(g: Graph, cert: PartialCubeCertificate) -> list[Sides]:
    return [sides(g, cert.dist, cert, c) for c in range(len(cert.theta.classes))]


def convexity_by_boundary(
    g: Graph,
    dist: np.ndarray,
    cert: PartialCubeCertificate | None,
    s: int,
) -> bool:
    """Convexity test for a connected induced subgraph of a bipartite graph.

    The subgraph on `s` is convex iff no edge leaving it is related to an
    edge inside it.  Rejects disconnected subgraphs; the empty set and
    singletons are convex.
    """
    bip = cert.bipartition if cert is not None else is_bipartite(g)
    if not bip.ok:
        raise GraphError("boundary convexity criterion requires a bipartite graph")
    members = bits_list(s)
    if len(members) <= 1:
        return True
    comp = 1 << members[0]
    stack = [members[0]]
    while stack:
        u = stack.pop()
        fresh = g.nbr_mask[u] & s & ~comp
        comp |= fresh
        stack.extend(bits_list(fresh))
    if comp != s:
        raise GraphError("boundary convexity criterion requires a connected subgraph")
    inner = []
    boundary = []
    for e, (u, v) in enumerate(g.edges):
        inside = ((s >> u) & 1) + ((s >> v) & 1)
        if inside == 2:
            inner.append(e)
        elif inside == 1:
            boundary.append(e)
    if not inner or not boundary:
        return True
    if cert is not None and cert.verdict:
        cls = cert.theta.class_of
        return not ({cls[e] for e in inner} & {cls[e] for e in boundary})
    ends = np.array([g.edges[e] for e in inner], dtype=np.int64)
    xs, ys = ends[:, 0], ends[:, 1]
    for e in boundary:
        p, q = g.edges[e]
        side = dist[p, :] < dist[q, :]
        if (side[xs] != side[ys]).any():
            return False
    return True
