"""Immutable graphs with canonical edge ids, plus metric primitives.

Vertices are 0..n-1.  Edges are stored lexicographically sorted with u < v,
and the position of an edge in that sorted tuple is its stable edge id.
Vertex sets are plain Python ints used as bitmasks (bit v set <=> v in set).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


class GraphError(ValueError):
    """Invalid graph construction or an operation on unsuitable input."""


class ResourceLimitError(RuntimeError):
    """An enumeration guard tripped; results would be incomplete otherwise."""


#: sentinel used in distance matrices for unreachable pairs
INFINITE = -1


class Graph:
    """Undirected simple graph, immutable after construction.

    Attributes:
        n: number of vertices.
        edges: tuple of (u, v) pairs with u < v, sorted lexicographically.
        adj: tuple of sorted neighbor tuples.
        nbr_mask: tuple of neighbor bitmasks.
    """

    __slots__ = ("n", "edges", "adj", "nbr_mask", "_edge_id")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        canon = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u} (edge ({u}, {v}))")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range for n={n} (edge ({u}, {v}))")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "nbr_mask", tuple(masks))
        object.__setattr__(self, "_edge_id", {e: i for i, e in enumerate(canon)})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.nbr_mask[u] >> v) & 1 == 1

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_id[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph; rejects loops, duplicates, and out-of-range vertices."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# vertex-set (bitmask) helpers

def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=bool)
    for v in iter_bits(mask):
        out[v] = True
    return out


def bool_to_mask(arr: np.ndarray) -> int:
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


# ---------------------------------------------------------------------------
# basic operations

def induced_subgraph(g: Graph, vertices: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the bitmask `vertices`.

    Returns the subgraph and the old->new vertex map; new ids follow the
    ascending order of the old ones.
    """
    keep = bits_list(vertices)
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if (vertices >> u) & 1 and (vertices >> v) & 1
    ]
    return Graph(len(keep), edges), remap


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of `h` are shifted up by g.n."""
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, list(g.edges) + shifted)


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1 << 0
    stack = [0]
    while stack:
        u = stack.pop()
        fresh = g.nbr_mask[u] & ~seen
        seen |= fresh
        stack.extend(iter_bits(fresh))
    return seen == full_mask(g.n)


def connected_components(g: Graph) -> list[int]:
    """Component bitmasks, ordered by least vertex."""
    comps = []
    seen = 0
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        stack = [s]
        while stack:
            u = stack.pop()
            fresh = g.nbr_mask[u] & ~comp
            comp |= fresh
            stack.extend(iter_bits(fresh))
        seen |= comp
        comps.append(comp)
    return comps


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Dense hop-count matrix (int32); INFINITE (-1) marks unreachable pairs."""
    n = g.n
    if n == 0:
        return np.zeros((0, 0), dtype=np.int32)
    if not g.edges:
        d = np.full((n, n), INFINITE, dtype=np.int32)
        np.fill_diagonal(d, 0)
        return d
    rows = []
    cols = []
    for u, v in g.edges:
        rows += (u, v)
        cols += (v, u)
    adj = csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n)
    )
    d = shortest_path(adj, method="D", unweighted=True)
    out = np.full((n, n), INFINITE, dtype=np.int32)
    finite = np.isfinite(d)
    out[finite] = d[finite].astype(np.int32)
    return out


class Bipartition:
    """Result of a 2-coloring attempt.

    Either `colors` is a tuple of 0/1 colors (one proper 2-coloring per
    component, roots colored 0) and `odd_cycle` is None, or `colors` is None
    and `odd_cycle` is a closed odd walk witnessing non-bipartiteness.
    """

    __slots__ = ("colors", "odd_cycle")

    def __init__(self, colors, odd_cycle):
        self.colors = colors
        self.odd_cycle = odd_cycle

    @property
    def ok(self) -> bool:
        return self.colors is not None

    def __repr__(self):
        if self.ok:
            return "Bipartition(ok)"
        return f"Bipartition(odd_cycle={self.odd_cycle})"


def is_bipartite(g: Graph) -> Bipartition:
    """2-color the graph or return an odd cycle as witness."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    q.append(v)
                elif color[v] == color[u]:
                    return Bipartition(None, _odd_cycle(parent, u, v))
    return Bipartition(tuple(color), None)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    # u and v are same-colored BFS-tree vertices joined by an edge; the two
    # tree branches up to their lowest common ancestor close an odd cycle.
    anc_u = [u]
    x = u
    while parent[x] != -1:
        x = parent[x]
        anc_u.append(x)
    pos = {y: i for i, y in enumerate(anc_u)}
    path_v = [v]
    x = v
    while x not in pos:
        x = parent[x]
        path_v.append(x)
    up = anc_u[: pos[x] + 1]  # u .. lca
    down = path_v[:-1][::-1]  # child of lca .. v
    return tuple(up + down)


def interval(g: Graph, dist: np.ndarray, u: int, v: int) -> int:
    """Bitmask of vertices on shortest u,v-paths."""
    if dist[u, v] == INFINITE:
        raise GraphError(f"vertices {u} and {v} are in different components")
    on = dist[u, :] + dist[:, v] == dist[u, v]
    on &= dist[u, :] != INFINITE
    return bool_to_mask(on)


def ell_step(g: Graph, dist: np.ndarray, s: int) -> int:
    """Union of intervals over all vertex pairs of the bitmask `s`."""
    members = bits_list(s)
    if len(members) <= 1:
        return s
    idx = np.array(members)
    sub = dist[np.ix_(idx, idx)]
    if (sub == INFINITE).any():
        raise GraphError("vertex set spans more than one component")
    out = np.zeros(g.n, dtype=bool)
    rows = dist[idx, :]  # rows[i, w] = d(members[i], w)
    for i in range(len(members)):
        # vertices on a geodesic from members[i] to any members[j]
        sums = rows[i][None, :] + rows  # sums[j, w] = d(mi, w) + d(w, mj)
        out |= (sums == sub[i][:, None]).any(axis=0)
    # mask out other components (their sentinel sums could alias real ones)
    out &= dist[idx[0], :] != INFINITE
    return bool_to_mask(out)


def convex_hull(g: Graph, dist: np.ndarray, s: int) -> int:
    """Smallest geodesically closed superset, by iterating ell_step."""
    cur = s
    for _ in range(g.n + 1):
        nxt = ell_step(g, dist, cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise AssertionError("convex hull iteration failed to stabilize")


def is_convex(g: Graph, dist: np.ndarray, s: int) -> bool:
    """True iff `s` is geodesically closed and induces a connected subgraph.

    The empty set and singletons are convex; any other set meeting several
    components is not.
    """
    members = bits_list(s)
    if len(members) <= 1:
        return True
    idx = np.array(members)
    if (dist[np.ix_(idx, idx)] == INFINITE).any():
        return False
    return ell_step(g, dist, s) == s


def medians_of_triple(g: Graph, dist: np.ndarray, u: int, v: int, w: int) -> int:
    """Bitmask of vertices lying in all three pairwise intervals."""
    for a, b in ((u, v), (u, w), (v, w)):
        if dist[a, b] == INFINITE:
            raise GraphError(f"vertices {a} and {b} are in different components")
    on = (dist[u, :] + dist[:, v] == dist[u, v])
    on &= dist[u, :] + dist[:, w] == dist[u, w]
    on &= dist[v, :] + dist[:, w] == dist[v, w]
    return bool_to_mask(on)


def induced_distances(g: Graph, vertices: list[int]) -> np.ndarray:
    """Hop counts inside the induced subgraph, indexed like `vertices`."""
    pos = {v: i for i, v in enumerate(vertices)}
    k = len(vertices)
    out = np.full((k, k), INFINITE, dtype=np.int32)
    vset = set(vertices)
    for i, s in enumerate(vertices):
        out[i, i] = 0
        q = deque([s])
        seen = {s}
        while q:
            u = q.popleft()
            for x in g.adj[u]:
                if x in vset and x not in seen:
                    seen.add(x)
                    out[i, pos[x]] = out[i, pos[u]] + 1
                    q.append(x)
    return out
