"""Median graph recognition, expansions, peeling, and the median closure.

A median graph gives every vertex triple exactly one median.  Median graphs
are the partial cubes whose boundary sets U are convex, and exactly the
graphs obtainable from a single vertex by repeated peripheral convex
expansions.  The closure embeds a partial cube in its hypercube and
repeatedly adds the hypercube hulls of maximal isometric cycles until the
vertex set stabilizes; the result is median and has the same crossing
structure as the input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import (
    Graph,
    GraphError,
    INFINITE,
    ResourceLimitError,
    all_pairs_distances,
    bits_list,
    bool_to_mask,
    full_mask,
    induced_distances,
    induced_subgraph,
    is_bipartite,
    is_convex,
    mask_of,
)
from .theta import (
    PartialCubeCertificate,
    convexity_by_boundary,
    embed,
    is_partial_cube,
    sides,
)
from .crossing import (
    IsometricCycle,
    NotPartialCubeError,
    isometric_cycles,
)


# ---------------------------------------------------------------------------
# recognition

def is_median_by_triples(g: Graph, dist: np.ndarray) -> bool:
    """Brute-force recognizer: every triple has exactly one median."""
    n = g.n
    if n and (dist[0, :] == INFINITE).any():
        raise GraphError("median recognition requires a connected graph")
    if n <= 2:
        return True
    d = dist.astype(np.int64)
    # on_geo[u, w, x] is true when x lies on a u,w-geodesic
    on_geo = d[:, None, :] + d[None, :, :] == d[:, :, None]
    for u in range(n):
        mu = on_geo[u]
        for v in range(u + 1, n):
            between = np.flatnonzero(mu[v])
            counts = (mu[:, between] & on_geo[v][:, between]).sum(axis=1)
            if not (counts == 1).all():
                return False
    return True


def _connected_within(g: Graph, s: int) -> bool:
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
    return comp == s


def _convex_in_partial_cube(g: Graph, cert: PartialCubeCertificate, s: int) -> bool:
    if bin(s).count("1") <= 1:
        return True
    if not _connected_within(g, s):
        return False
    return convexity_by_boundary(g, cert.dist, cert, s)


def is_median_by_convex_U(
    g: Graph, cert: PartialCubeCertificate | None = None
) -> bool:
    """Structural recognizer: partial cube with all boundary sets convex."""
    if cert is None:
        cert = is_partial_cube(g)
    if not cert.verdict:
        return False
    for c in range(len(cert.theta.classes)):
        sd = sides(g, cert.dist, cert, c)
        if not _convex_in_partial_cube(g, cert, sd.u_ab):
            return False
        if not _convex_in_partial_cube(g, cert, sd.u_ba):
            return False
    return True


# ---------------------------------------------------------------------------
# expansions and contractions

@dataclass(frozen=True)
class ExpansionSpec:
    """Isometric cover {V1, V2} of a graph, as vertex bitmasks."""

    v1: int
    v2: int


def _validate_cover(g: Graph, spec: ExpansionSpec, dist: np.ndarray) -> None:
    n = g.n
    if spec.v1 | spec.v2 != full_mask(n) or n == 0:
        raise GraphError("expansion sides must cover the whole vertex set")
    if spec.v1 & spec.v2 == 0:
        raise GraphError("expansion sides must intersect")
    only1 = spec.v1 & ~spec.v2
    only2 = spec.v2 & ~spec.v1
    for u, v in g.edges:
        if ((only1 >> u) & 1 and (only2 >> v) & 1) or (
            (only2 >> u) & 1 and (only1 >> v) & 1
        ):
            raise GraphError(
                f"edge ({u}, {v}) joins the private parts of the two sides"
            )
    for side in (spec.v1, spec.v2):
        if side == full_mask(n):
            continue
        verts = bits_list(side)
        sub = induced_distances(g, verts)
        idx = np.array(verts)
        if (sub != dist[np.ix_(idx, idx)]).any():
            raise GraphError("expansion side does not induce an isometric subgraph")


def _expansion_parts(g: Graph, spec: ExpansionSpec):
    verts1 = bits_list(spec.v1)
    verts2 = bits_list(spec.v2)
    map1 = {v: i for i, v in enumerate(verts1)}
    map2 = {v: len(verts1) + i for i, v in enumerate(verts2)}
    edges = []
    for u, v in g.edges:
        if (spec.v1 >> u) & 1 and (spec.v1 >> v) & 1:
            edges.append((map1[u], map1[v]))
        if (spec.v2 >> u) & 1 and (spec.v2 >> v) & 1:
            edges.append((map2[u], map2[v]))
    shared = spec.v1 & spec.v2
    for w in bits_list(shared):
        edges.append((map1[w], map2[w]))
    return Graph(len(verts1) + len(verts2), edges), map1, map2


def expansion(
    g: Graph, spec: ExpansionSpec, dist: np.ndarray | None = None
) -> Graph:
    """Expand over an isometric cover: duplicate the shared part and match
    the copies.  Validation is eager; invalid covers raise."""
    if dist is None:
        dist = all_pairs_distances(g)
    _validate_cover(g, spec, dist)
    graph, _, _ = _expansion_parts(g, spec)
    return graph


def _is_convex_set(g: Graph, dist: np.ndarray, s: int) -> bool:
    if bin(s).count("1") <= 1:
        return True
    if not _connected_within(g, s):
        return False
    if is_bipartite(g).ok:
        return convexity_by_boundary(g, dist, None, s)
    return is_convex(g, dist, s)


def peripheral_convex_expansion(g: Graph, dist: np.ndarray, s: int) -> Graph:
    """Expand over {V, S} for a convex nonempty S; the copy of S becomes a
    new peripheral halfspace.  New copies get ids g.n, g.n+1, ... following
    the ascending order of S."""
    if s == 0:
        raise GraphError("peripheral expansion needs a nonempty vertex set")
    if s & ~full_mask(g.n):
        raise GraphError("expansion set contains out-of-range vertices")
    if not _is_convex_set(g, dist, s):
        raise GraphError("peripheral expansion needs a convex vertex set")
    graph, _, _ = _expansion_parts(g, ExpansionSpec(full_mask(g.n), s))
    return graph


def contract_class(
    g: Graph, cert: PartialCubeCertificate, c: int
) -> tuple[Graph, tuple[int, ...]]:
    """Collapse every edge of class c; returns the quotient and the old->new
    vertex map.  Inverse of an expansion step."""
    if not cert.verdict:
        raise GraphError("class contraction requires a partial cube")
    partner: dict[int, int] = {}
    for e in cert.theta.classes[c]:
        u, v = g.edges[e]
        if u in partner or v in partner:
            raise GraphError("class edges do not form a matching")
        partner[u] = v
        partner[v] = u
    rep = [min(x, partner.get(x, x)) for x in range(g.n)]
    kept = sorted(set(rep))
    new_id = {r: i for i, r in enumerate(kept)}
    cls = cert.theta.class_of
    edges = set()
    for e, (u, v) in enumerate(g.edges):
        if cls[e] == c:
            continue
        a, b = new_id[rep[u]], new_id[rep[v]]
        edges.add((a, b) if a < b else (b, a))
    return Graph(len(kept), sorted(edges)), tuple(new_id[rep[x]] for x in range(g.n))


def find_peripheral_class(g: Graph, cert: PartialCubeCertificate) -> int | None:
    """Least class one of whose halfspaces is all boundary (U = W)."""
    if not cert.verdict:
        raise GraphError("peripheral classes require a partial cube")
    for c in range(len(cert.theta.classes)):
        sd = sides(g, cert.dist, cert, c)
        if sd.u_ab == sd.w_ab or sd.u_ba == sd.w_ba:
            return c
    return None


@dataclass(frozen=True)
class PeelStep:
    """One peripheral peel: drop a halfspace that is entirely boundary.

    `class_id` names the peeled class in the pre-peel graph; `kept` lists the
    surviving old vertex ids in ascending order (their positions are the ids
    in the peeled graph); `matching` pairs each removed vertex with its kept
    neighbor across the class; `convex_set` is the bitmask, in peeled-graph
    ids, of the expansion base that undoes the peel.
    """

    class_id: int
    convex_set: int
    kept: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]


def peripheral_decomposition(g: Graph) -> list[PeelStep]:
    """Peel peripheral halfspaces down to a single vertex.

    Succeeds exactly on median graphs; a missing peripheral class on the way
    down raises, signaling a non-median input.
    """
    steps: list[PeelStep] = []
    h = g
    while h.n > 1:
        cert = is_partial_cube(h)
        if not cert.verdict:
            raise GraphError("peripheral decomposition requires a median graph")
        c = find_peripheral_class(h, cert)
        if c is None:
            raise GraphError(
                "no peripheral class found: the graph is not median"
            )
        sd = sides(h, cert.dist, cert, c)
        if sd.u_ab == sd.w_ab:
            removed, kept_mask, u_kept = sd.w_ab, sd.w_ba, sd.u_ba
        else:
            removed, kept_mask, u_kept = sd.w_ba, sd.w_ab, sd.u_ab
        _, remap = induced_subgraph(h, kept_mask)
        matching = []
        for e in cert.theta.classes[c]:
            u, v = h.edges[e]
            if (removed >> u) & 1:
                matching.append((u, v))
            else:
                matching.append((v, u))
        steps.append(
            PeelStep(
                c,
                mask_of(remap[x] for x in bits_list(u_kept)),
                tuple(bits_list(kept_mask)),
                tuple(sorted(matching)),
            )
        )
        h, _ = induced_subgraph(h, kept_mask)
    return steps


def replay_peripheral_decomposition(
    steps: list[PeelStep],
) -> tuple[Graph, tuple[int, ...]]:
    """Rebuild a graph from its peel record by expanding from a vertex.

    Returns the rebuilt graph together with the vertex bijection original id
    -> rebuilt id, which callers can check to be an isomorphism.
    """
    r = Graph(1, [])
    iso = {0: 0}  # current peeled-level id -> rebuilt id
    for st in reversed(steps):
        dist_r = all_pairs_distances(r)
        mask_r = mask_of(iso[v] for v in bits_list(st.convex_set))
        base_n = r.n
        r = peripheral_convex_expansion(r, dist_r, mask_r)
        copy_id = {v: base_n + i for i, v in enumerate(bits_list(mask_r))}
        pos = {old: i for i, old in enumerate(st.kept)}
        new_iso = {old: iso[pos[old]] for old in st.kept}
        for removed, kept in st.matching:
            new_iso[removed] = copy_id[iso[pos[kept]]]
        iso = new_iso
    return r, tuple(iso[v] for v in range(len(iso)))


# ---------------------------------------------------------------------------
# hulls and halfspaces in hypercube coordinates

def hull_in_hypercube(labels, max_dimension: int = 30) -> frozenset[int]:
    """Smallest subcube (as a label set) containing the given labels.

    Coordinates on which all labels agree stay fixed; the rest range freely.
    """
    it = iter(labels)
    try:
        first = next(it)
    except StopIteration:
        raise GraphError("hull of an empty label set is undefined") from None
    lo = hi = first
    for lab in it:
        lo &= lab
        hi |= lab
    free = hi & ~lo
    if free.bit_count() > max_dimension:
        raise ResourceLimitError(
            f"subcube hull spans {free.bit_count()} free coordinates, "
            f"more than the guard of {max_dimension}"
        )
    out = []
    sub = free
    while True:
        out.append(lo | sub)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return frozenset(out)


def halfspace_hull(g: Graph, cert: PartialCubeCertificate, s: int) -> int:
    """Convex hull inside a partial cube, as the intersection of all
    halfspaces containing s.  Fast equivalent of the geodesic fixpoint."""
    if not cert.verdict:
        raise GraphError("halfspace hull requires a partial cube")
    if s == 0:
        return 0
    dist = cert.dist
    cur = full_mask(g.n)
    for eids in cert.theta.classes:
        a, b = g.edges[eids[0]]
        side = dist[a, :] < dist[b, :]
        w_ab = bool_to_mask(side)
        w_ba = full_mask(g.n) ^ w_ab
        if s & w_ba == 0:
            cur &= w_ab
        elif s & w_ab == 0:
            cur &= w_ba
    return cur


def theta_occurrence(g: Graph, cert: PartialCubeCertificate, s: int) -> frozenset[int]:
    """Ids of classes having at least one edge inside the vertex set s."""
    cls = cert.theta.class_of
    return frozenset(
        cls[e]
        for e, (u, v) in enumerate(g.edges)
        if (s >> u) & 1 and (s >> v) & 1
    )


def maximal_isometric_cycles(
    g: Graph,
    dist: np.ndarray,
    labels,
    max_vertices: int = 4096,
) -> list[IsometricCycle]:
    """Isometric cycles maximal under containment of their subcube hulls."""
    cycles = isometric_cycles(g, dist, max_vertices)
    boxes = []
    for cyc in cycles:
        lo = hi = labels[cyc.vertices[0]]
        for v in cyc.vertices[1:]:
            lo &= labels[v]
            hi |= labels[v]
        boxes.append((lo, hi))

    def strictly_inside(b1, b2):
        return b1 != b2 and (b2[0] & ~b1[0]) == 0 and (b1[1] & ~b2[1]) == 0

    out = []
    for i, cyc in enumerate(cycles):
        if not any(strictly_inside(boxes[i], boxes[j]) for j in range(len(cycles)) if j != i):
            out.append(cyc)
    return out


# ---------------------------------------------------------------------------
# median closure

@dataclass(frozen=True)
class ClosureRound:
    """State of one closure round: the graph, its labels, the maximal
    isometric cycles found, and the labels their hulls contribute."""

    graph: Graph
    labels: tuple[int, ...]
    max_cycles: tuple[IsometricCycle, ...]
    added_labels: tuple[int, ...]


@dataclass(frozen=True)
class ClosureTrace:
    idim: int
    rounds: tuple[ClosureRound, ...]
    final: Graph
    final_labels: tuple[int, ...]

    @property
    def expansion_rounds(self) -> int:
        """Number of rounds that added vertices."""
        return len(self.rounds) - 1


def _graph_from_labels(labels: list[int], idim: int) -> Graph:
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for i, lab in enumerate(labels):
        for b in range(idim):
            other = lab ^ (1 << b)
            j = index.get(other)
            if j is not None and j > i:
                edges.append((i, j))
    return Graph(len(labels), edges)


def median_closure(g: Graph, max_vertices: int = 4096) -> ClosureTrace:
    """Iterate hull-filling of maximal isometric cycles until stable.

    Works on hypercube labels rather than on materialized hypercubes.  Each
    round must preserve the class count; the final graph must pass median
    recognition.  A vertex guard aborts oversized intermediate graphs.
    """
    cert = is_partial_cube(g)
    if not cert.verdict:
        raise NotPartialCubeError("median closure requires a partial cube", cert)
    if g.n == 1:
        raise GraphError("median closure is undefined for a one-vertex graph")
    idim = cert.idim
    emb = embed(g, cert)
    cur_graph, cur_labels, cur_cert = g, list(emb.labels), cert
    rounds: list[ClosureRound] = []
    for _ in range(2 ** idim + 1):
        cycles = maximal_isometric_cycles(
            cur_graph, cur_cert.dist, cur_labels, max_vertices
        )
        hull_labels: set[int] = set()
        for cyc in cycles:
            hull_labels |= hull_in_hypercube(
                [cur_labels[v] for v in cyc.vertices], max_dimension=idim
            )
        added = sorted(hull_labels - set(cur_labels))
        rounds.append(
            ClosureRound(cur_graph, tuple(cur_labels), tuple(cycles), tuple(added))
        )
        if not added:
            break
        new_labels = sorted(set(cur_labels) | hull_labels)
        if len(new_labels) > max_vertices:
            raise ResourceLimitError(
                f"median closure grew past the guard of {max_vertices} vertices"
            )
        cur_graph = _graph_from_labels(new_labels, idim)
        cur_labels = new_labels
        cur_cert = is_partial_cube(cur_graph)
        if not cur_cert.verdict or cur_cert.idim != idim:
            raise AssertionError("closure round broke the class structure")
    else:
        raise AssertionError("median closure failed to stabilize")
    if not is_median_by_convex_U(cur_graph, cur_cert):
        raise AssertionError("median closure result failed median recognition")
    return ClosureTrace(idim, tuple(rounds), cur_graph, tuple(cur_labels))
