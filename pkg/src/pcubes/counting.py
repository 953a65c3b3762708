"""Cube and clique polynomials, with independent oracles and the identity
C(G, x) <= Cl(G#, x+1) packaged as a single verification report.

The cube polynomial counts induced hypercubes by dimension; the clique
polynomial counts cliques by size (empty clique included).  For a median
graph the cube polynomial equals the clique polynomial of the crossing
graph evaluated at x+1, and for every other partial cube it is strictly
coefficientwise smaller.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    ResourceLimitError,
    full_mask,
    induced_subgraph,
    mask_of,
)
from .polynomials import ONE, Poly, X, add, mul, normalize, poly_leq, shift
from .theta import HypercubeEmbedding, PartialCubeCertificate, embed, is_partial_cube
from .crossing import NotPartialCubeError, crossing_graph
from .median import is_median_by_convex_U


# ---------------------------------------------------------------------------
# cube polynomial

def cube_polynomial(
    g: Graph,
    cert: PartialCubeCertificate | None = None,
    embedding: HypercubeEmbedding | None = None,
) -> Poly:
    """Count induced hypercubes by dimension, via coordinates.

    Every induced cube in a partial cube is a coordinate subcube, so it is
    enumerated exactly once from its coordinatewise-minimal corner by growing
    the set of free coordinates in ascending order.
    """
    if cert is None:
        cert = is_partial_cube(g)
    if not cert.verdict:
        raise NotPartialCubeError("cube polynomial needs a partial cube", cert)
    if embedding is None:
        embedding = embed(g, cert)
    labels = embedding.labels
    present = set(labels)
    k = cert.idim
    counts = [0] * (k + 1)
    counts[0] = g.n

    cache: dict[tuple[int, int], bool] = {}

    def corner_cube(anchor: int, mask: int) -> bool:
        # every label anchor | sub, sub subset of mask, is present
        if mask == 0:
            return anchor in present
        key = (anchor, mask)
        val = cache.get(key)
        if val is None:
            low = mask & -mask
            rest = mask ^ low
            val = corner_cube(anchor, rest) and corner_cube(anchor | low, rest)
            cache[key] = val
        return val

    def grow(anchor: int, mask: int, dim: int, cands: list[int]) -> None:
        for i, b in enumerate(cands):
            bit = 1 << b
            if corner_cube(anchor | bit, mask):
                counts[dim + 1] += 1
                grow(anchor, mask | bit, dim + 1, cands[i + 1 :])

    for lab in labels:
        ups = [
            b
            for b in range(k)
            if not (lab >> b) & 1 and (lab | (1 << b)) in present
        ]
        grow(lab, 0, 0, ups)
    return normalize(tuple(counts))


def _matched_pair(g: Graph, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True when two disjoint equal-size induced cubes are joined by a
    perfect matching that is also an isomorphism between them."""
    mask_b = mask_of(b)
    sigma = {}
    for u in a:
        nb = g.nbr_mask[u] & mask_b
        if nb == 0 or nb & (nb - 1):
            return False
        sigma[u] = nb.bit_length() - 1
    mask_a = mask_of(a)
    for v in b:
        nb = g.nbr_mask[v] & mask_a
        if nb == 0 or nb & (nb - 1):
            return False
    for i, u in enumerate(a):
        su = sigma[u]
        for w in a[i + 1 :]:
            if g.has_edge(u, w) != g.has_edge(su, sigma[w]):
                return False
    return True


def cube_polynomial_oracle(g: Graph, max_per_level: int = 2048) -> Poly:
    """Brute-force cube count for any graph: induced Q_k found by pairing
    two disjoint induced Q_{k-1} copies joined by a matching isomorphism.
    Guarded per level; meant for small graphs and cross-checks."""
    counts = []
    level = [(v,) for v in range(g.n)]
    while level:
        counts.append(len(level))
        nxt = {}
        for i, a in enumerate(level):
            mask_a = mask_of(a)
            for b in level[i + 1 :]:
                if mask_a & mask_of(b):
                    continue
                if _matched_pair(g, a, b):
                    verts = tuple(sorted(a + b))
                    nxt[verts] = True
        level = sorted(nxt)
        if len(level) > max_per_level:
            raise ResourceLimitError(
                f"more than {max_per_level} induced cubes on one level"
            )
    return normalize(tuple(counts))


# ---------------------------------------------------------------------------
# clique polynomial

def clique_polynomial_recursive(g: Graph) -> Poly:
    """Clique polynomial by deleting the least vertex:
    Cl(G) = Cl(G - v) + x Cl(G[N(v)]).  Memoized on vertex bitmasks
    within this call."""
    memo: dict[int, Poly] = {0: ONE}

    def rec(mask: int) -> Poly:
        val = memo.get(mask)
        if val is None:
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            val = add(rec(rest), mul(X, rec(g.nbr_mask[v] & rest)))
            memo[mask] = val
        return val

    return rec(full_mask(g.n))


def clique_polynomial_enumerate(g: Graph) -> Poly:
    """Direct clique count by ascending-id extension; the empty clique
    contributes the constant term."""
    counts = [0] * (g.n + 1)

    def visit(cand: int, size: int) -> None:
        counts[size] += 1
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            visit(cand & g.nbr_mask[v] & ~((1 << (v + 1)) - 1), size + 1)

    visit(full_mask(g.n), 0)
    return normalize(tuple(counts))


# ---------------------------------------------------------------------------
# the inequality under test

@dataclass(frozen=True)
class TheoremReport:
    """Both sides of C(G, x) <= Cl(G#, x+1) plus the verdicts tying them
    together.  Non-partial-cube inputs get a report with every claim unset."""

    cube_poly: Poly | None
    crossing_clique_shifted: Poly | None
    leq_holds: bool | None
    equality: bool | None
    is_median: bool | None
    is_partial_cube: bool


def verify_theorem(
    g: Graph, cert: PartialCubeCertificate | None = None
) -> TheoremReport:
    """Compare the cube polynomial with the shifted clique polynomial of the
    crossing graph; equality characterizes median graphs."""
    if cert is None:
        cert = is_partial_cube(g)
    if not cert.verdict:
        return TheoremReport(None, None, None, None, None, False)
    if g.n == 1:
        raise GraphError("the comparison is undefined for a one-vertex graph")
    cube = cube_polynomial(g, cert)
    cg = crossing_graph(g, cert)
    shifted = shift(clique_polynomial_recursive(cg.graph), 1)
    leq = poly_leq(cube, shifted)
    return TheoremReport(
        cube,
        shifted,
        leq,
        cube == shifted,
        is_median_by_convex_U(g, cert),
        True,
    )


# ---------------------------------------------------------------------------
# expansion recursion

def _cube_poly_any(g: Graph) -> Poly:
    cert = is_partial_cube(g)
    if cert.verdict:
        return cube_polynomial(g, cert)
    return cube_polynomial_oracle(g)


def expansion_formula_check(gstar: Graph, g1set: int, g2set: int) -> bool:
    """Check the cube-polynomial recursion on an expanded graph.

    `g1set` and `g2set` are the two side copies inside the expanded graph;
    they must partition its vertices, and the edges between them must form a
    matching that is an isomorphism of the shared copies.  Verifies
    C(G) = C(G1) + C(G2) + x C(G0), and when one side is entirely shared
    also the peripheral form C(G) = C(G1) + (x+1) C(G0).
    """
    n = gstar.n
    if g1set & g2set or g1set | g2set != full_mask(n) or not g1set or not g2set:
        raise GraphError("side copies must partition the vertex set")
    cross = [
        (u, v)
        for u, v in gstar.edges
        if ((g1set >> u) & 1) != ((g1set >> v) & 1)
    ]
    if not cross:
        raise GraphError("no matching edges between the side copies")
    u1 = [u if (g1set >> u) & 1 else v for u, v in cross]
    u2 = [v if (g1set >> u) & 1 else u for u, v in cross]
    if len(set(u1)) != len(cross) or len(set(u2)) != len(cross):
        raise GraphError("edges between the side copies do not form a matching")
    order = sorted(range(len(cross)), key=lambda i: u1[i])
    shared1 = tuple(u1[i] for i in order)
    shared2 = tuple(u2[i] for i in order)
    sigma = dict(zip(shared1, shared2))
    for i, u in enumerate(shared1):
        for w in shared1[i + 1 :]:
            if gstar.has_edge(u, w) != gstar.has_edge(sigma[u], sigma[w]):
                raise GraphError("shared copies are not matched isomorphically")

    g1, _ = induced_subgraph(gstar, g1set)
    g2, _ = induced_subgraph(gstar, g2set)
    g0, _ = induced_subgraph(gstar, mask_of(shared1))
    total = _cube_poly_any(gstar)
    p1 = _cube_poly_any(g1)
    p2 = _cube_poly_any(g2)
    p0 = _cube_poly_any(g0)
    ok = total == add(add(p1, p2), mul(X, p0))
    if len(shared1) == bin(g2set).count("1") or len(shared1) == bin(g1set).count("1"):
        base = p1 if len(shared1) == bin(g2set).count("1") else p2
        ok = ok and total == add(base, mul((1, 1), p0))
    return ok


# ---------------------------------------------------------------------------
# change of basis

def x_plus_one_expansion(p: Poly) -> tuple[int, ...]:
    """Coefficients b_i with p(x) = sum b_i (x+1)^i, by repeated synthetic
    division.  Negative b_i are possible and returned as-is."""
    cur = list(normalize(p))
    out = []
    while cur:
        acc = 0
        vals = []
        for c in reversed(cur):
            acc = c - acc
            vals.append(acc)
        out.append(vals[-1])
        quotient = vals[:-1]
        cur = quotient[::-1]
    return tuple(out)
