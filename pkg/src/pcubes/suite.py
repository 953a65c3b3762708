"""Cross-check battery the corpus command runs over generated graphs.

Each check either verifies one of the structural identities relating cubes,
cliques, classes, and crossings, or plays two independent computation routes
against each other.  Checks skip graphs they do not apply to (wrong family,
over a size guard) and report pass/fail with a short detail string.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    bits_list,
    convex_hull,
    full_mask,
    induced_subgraph,
    is_bipartite,
    mask_of,
)
from .theta import convexity_by_boundary, embed, is_partial_cube, sides
from .crossing import (
    coordinate_crossing_pairs,
    crosses_cycle,
    crosses_quadrant,
    crossing_graph,
    isometric_cycles,
    verify_simplex_identity,
)
from .median import (
    ExpansionSpec,
    contract_class,
    expansion,
    halfspace_hull,
    is_median_by_convex_U,
    is_median_by_triples,
    median_closure,
    peripheral_convex_expansion,
    theta_occurrence,
)
from .counting import (
    clique_polynomial_enumerate,
    clique_polynomial_recursive,
    cube_polynomial,
    cube_polynomial_oracle,
    expansion_formula_check,
    verify_theorem,
    x_plus_one_expansion,
)
from .polynomials import poly_leq, poly_lt

TRIPLES_LIMIT = 80
CUBE_ORACLE_LIMIT = 14
CLIQUE_ORACLE_LIMIT = 12
CYCLE_CHECK_LIMIT = 150
CLOSURE_LIMIT = 120
EXPANSION_LIMIT = 80
SIMPLEX_LIMIT = 12


@dataclass
class CheckOutcome:
    check: str
    graph: str
    status: str  # pass | fail | skip
    detail: str = ""


class _Ctx:
    """Lazy per-graph caches shared by the checks."""

    def __init__(self, label: str, g: Graph):
        self.label = label
        self.g = g
        self.rng = random.Random(f"corpus:{label}")
        self._cert = None
        self._crossing = None
        self._embedding = None

    @property
    def cert(self):
        if self._cert is None:
            self._cert = is_partial_cube(self.g)
        return self._cert

    @property
    def crossing(self):
        if self._crossing is None:
            self._crossing = crossing_graph(self.g, self.cert)
        return self._crossing

    @property
    def embedding(self):
        if self._embedding is None:
            self._embedding = embed(self.g, self.cert)
        return self._embedding

    def seeded_connected_set(self, max_size: int) -> int:
        g = self.g
        start = self.rng.randrange(g.n)
        s = {start}
        target = self.rng.randint(1, max_size)
        while len(s) < target:
            border = set()
            for v in s:
                border |= set(bits_list(g.nbr_mask[v]))
            border -= s
            if not border:
                break
            s.add(self.rng.choice(sorted(border)))
        return mask_of(s)


SKIP = ("skip", "")
PASS = ("pass", "")


def _fail(detail: str):
    return ("fail", detail)


def check_equality_iff_median(ctx: _Ctx):
    if not ctx.cert.verdict or ctx.g.n < 2:
        return SKIP
    rep = verify_theorem(ctx.g, ctx.cert)
    if not rep.leq_holds:
        return _fail("cube polynomial not below shifted clique polynomial")
    if rep.equality != rep.is_median:
        return _fail(f"equality={rep.equality} but median={rep.is_median}")
    if not rep.is_median and not poly_lt(rep.cube_poly, rep.crossing_clique_shifted):
        return _fail("non-median partial cube without strict inequality")
    return PASS


def check_recognizers_agree(ctx: _Ctx):
    g = ctx.g
    if g.n > TRIPLES_LIMIT or g.n == 0:
        return SKIP
    if not is_bipartite(g).ok or not ctx.cert.connected:
        return SKIP
    a = is_median_by_triples(g, ctx.cert.dist)
    b = is_median_by_convex_U(g, ctx.cert)
    if a != b:
        return _fail(f"triple recognizer says {a}, convexity recognizer says {b}")
    return PASS


def check_cube_oracle_agrees(ctx: _Ctx):
    if not ctx.cert.verdict or ctx.g.n > CUBE_ORACLE_LIMIT:
        return SKIP
    fast = cube_polynomial(ctx.g, ctx.cert)
    slow = cube_polynomial_oracle(ctx.g)
    if fast != slow:
        return _fail(f"coordinate count {fast} != pairing count {slow}")
    return PASS


def check_clique_oracle_agrees(ctx: _Ctx):
    if ctx.g.n > CLIQUE_ORACLE_LIMIT:
        return SKIP
    a = clique_polynomial_recursive(ctx.g)
    b = clique_polynomial_enumerate(ctx.g)
    if a != b:
        return _fail(f"recursion {a} != enumeration {b}")
    return PASS


def check_crossing_routes_agree(ctx: _Ctx):
    if not ctx.cert.verdict or ctx.g.n > CYCLE_CHECK_LIMIT or ctx.g.m == 0:
        return SKIP
    cert = ctx.cert
    k = cert.idim
    cycles = isometric_cycles(ctx.g, cert.dist)
    cg = ctx.crossing.graph
    for c1 in range(k):
        for c2 in range(c1 + 1, k):
            quad = crosses_quadrant(ctx.g, cert.dist, cert, c1, c2)
            cyc = crosses_cycle(ctx.g, cert.dist, cert, cycles, c1, c2)
            if quad != cyc:
                return _fail(f"classes ({c1}, {c2}): quadrant {quad}, cycle {cyc}")
            if quad != cg.has_edge(c1, c2):
                return _fail(f"classes ({c1}, {c2}) disagree with crossing graph")
    return PASS


def check_w_sides_convex(ctx: _Ctx):
    if not ctx.cert.verdict:
        return SKIP
    cert = ctx.cert
    for c in range(cert.idim):
        sd = sides(ctx.g, cert.dist, cert, c)
        for w in (sd.w_ab, sd.w_ba):
            if not convexity_by_boundary(ctx.g, cert.dist, cert, w):
                return _fail(f"halfspace of class {c} not convex")
    return PASS


def check_u_sides_matched(ctx: _Ctx):
    """The two boundary sets of a class are isomorphic via the class
    matching, and corresponding edges lie in the same class."""
    if not ctx.cert.verdict:
        return SKIP
    g, cert = ctx.g, ctx.cert
    cls = cert.theta.class_of
    for c, eids in enumerate(cert.theta.classes):
        sd = sides(g, cert.dist, cert, c)
        sigma = {}
        for e in eids:
            u, v = g.edges[e]
            if (sd.w_ab >> u) & 1:
                sigma[u] = v
                sigma[v] = u
            else:
                sigma[v] = u
                sigma[u] = v
        edges_a = [
            (u, v)
            for u, v in g.edges
            if (sd.u_ab >> u) & 1 and (sd.u_ab >> v) & 1
        ]
        edges_b = [
            (u, v)
            for u, v in g.edges
            if (sd.u_ba >> u) & 1 and (sd.u_ba >> v) & 1
        ]
        if len(edges_a) != len(edges_b):
            return _fail(f"class {c}: boundary sides have different edge counts")
        for u, v in edges_a:
            if not g.has_edge(sigma[u], sigma[v]):
                return _fail(f"class {c}: edge ({u}, {v}) has no matched image")
            if cls[g.edge_id(u, v)] != cls[g.edge_id(sigma[u], sigma[v])]:
                return _fail(f"class {c}: matched edges in different classes")
    return PASS


def check_occurrence_hull_stable(ctx: _Ctx, samples: int = 5):
    """Classes occurring in a connected subgraph are exactly those of its
    hull; also plays the halfspace hull against the geodesic fixpoint."""
    if not ctx.cert.verdict or ctx.g.n < 2:
        return SKIP
    g, cert = ctx.g, ctx.cert
    for _ in range(samples):
        s = ctx.seeded_connected_set(max_size=max(2, g.n // 2))
        hull = halfspace_hull(g, cert, s)
        if hull != convex_hull(g, cert.dist, s):
            return _fail("halfspace hull differs from geodesic fixpoint hull")
        if theta_occurrence(g, cert, s) != theta_occurrence(g, cert, hull):
            return _fail("hull changed the set of occurring classes")
    return PASS


def check_convex_crossing_induced(ctx: _Ctx, samples: int = 4):
    """In a median graph the crossing graph of a convex subgraph embeds as
    an induced subgraph of the host's crossing graph.  (Not true of partial
    cubes at large: two classes can cross in the host while a convex
    subgraph meets both without any crossing between them.)"""
    if not ctx.cert.verdict or ctx.g.m == 0:
        return SKIP
    if not is_median_by_convex_U(ctx.g, ctx.cert):
        return SKIP
    g, cert = ctx.g, ctx.cert
    host = ctx.crossing.graph
    for _ in range(samples):
        s = ctx.seeded_connected_set(max_size=max(2, g.n // 2))
        hull = halfspace_hull(g, cert, s)
        sub, remap = induced_subgraph(g, hull)
        if sub.m == 0:
            continue
        cert_sub = is_partial_cube(sub)
        if not cert_sub.verdict:
            return _fail("convex subgraph is not a partial cube")
        inv = {new: old for old, new in remap.items()}
        mapped = []
        for eids in cert_sub.theta.classes:
            u, v = sub.edges[eids[0]]
            mapped.append(cert.theta.class_of[g.edge_id(inv[u], inv[v])])
        if len(set(mapped)) != len(mapped):
            return _fail("two subgraph classes landed in one host class")
        sub_cg = crossing_graph(sub, cert_sub).graph
        k = len(mapped)
        for i in range(k):
            for j in range(i + 1, k):
                if sub_cg.has_edge(i, j) != host.has_edge(mapped[i], mapped[j]):
                    return _fail(
                        f"crossing mismatch for classes {mapped[i]}, {mapped[j]}"
                    )
    return PASS


def check_closure_rounds(ctx: _Ctx):
    """Closure rounds only grow the cube polynomial, preserve the crossing
    structure, and end median."""
    if not ctx.cert.verdict or ctx.g.n < 2 or ctx.g.n > CLOSURE_LIMIT:
        return SKIP
    trace = median_closure(ctx.g)
    polys = []
    for rnd in trace.rounds:
        cert_r = is_partial_cube(rnd.graph)
        if not cert_r.verdict:
            return _fail("closure round left the partial cube class")
        polys.append(cube_polynomial(rnd.graph, cert_r))
    for i in range(len(polys) - 1):
        if not poly_leq(polys[i], polys[i + 1]):
            return _fail(f"cube polynomial shrank between rounds {i} and {i + 1}")
        if trace.rounds[i].added_labels and not poly_lt(polys[i], polys[i + 1]):
            return _fail(f"round {i} added vertices without strict growth")
    before = coordinate_crossing_pairs(ctx.g, list(trace.rounds[0].labels), ctx.cert)
    after = coordinate_crossing_pairs(trace.final, list(trace.final_labels))
    if before != after:
        return _fail("closure changed the crossing structure")
    if not is_median_by_convex_U(trace.final):
        return _fail("closure result is not median")
    return PASS


def check_expansion_recursion(ctx: _Ctx):
    """Rebuild the graph as an expansion of each class contraction and a
    fresh peripheral expansion; the cube polynomial recursion must hold."""
    if not ctx.cert.verdict or ctx.g.n < 2 or ctx.g.n > EXPANSION_LIMIT:
        return SKIP
    g, cert = ctx.g, ctx.cert
    for c in range(min(cert.idim, 3)):
        sd = sides(g, cert.dist, cert, c)
        contracted, vmap = contract_class(g, cert, c)
        v1 = mask_of(vmap[x] for x in bits_list(sd.w_ab))
        v2 = mask_of(vmap[x] for x in bits_list(sd.w_ba))
        rebuilt = expansion(contracted, ExpansionSpec(v1, v2))
        size1 = bin(v1).count("1")
        g1set = full_mask(size1)
        g2set = full_mask(rebuilt.n) ^ g1set
        if rebuilt.n != g.n:
            return _fail(f"class {c}: expansion changed the vertex count")
        if not expansion_formula_check(rebuilt, g1set, g2set):
            return _fail(f"class {c}: cube recursion failed on the rebuild")
    s = ctx.seeded_connected_set(max_size=3)
    hull = halfspace_hull(g, cert, s)
    grown = peripheral_convex_expansion(g, cert.dist, hull)
    if not expansion_formula_check(
        grown, full_mask(g.n), full_mask(grown.n) ^ full_mask(g.n)
    ):
        return _fail("peripheral growth violated the cube recursion")
    return PASS


def check_basis_counts_cliques(ctx: _Ctx):
    """For median graphs the cube polynomial written in powers of (x+1)
    counts the cliques of the crossing graph."""
    if not ctx.cert.verdict or ctx.g.n < 2:
        return SKIP
    if not is_median_by_convex_U(ctx.g, ctx.cert):
        return SKIP
    b = x_plus_one_expansion(cube_polynomial(ctx.g, ctx.cert))
    cl = clique_polynomial_enumerate(ctx.crossing.graph)
    if tuple(b) != cl:
        return _fail(f"basis coefficients {b} != clique counts {cl}")
    return PASS


def check_simplex_identity(ctx: _Ctx):
    if ctx.g.n > SIMPLEX_LIMIT:
        return SKIP
    try:
        ok = verify_simplex_identity(ctx.g)
    except GraphError as e:
        return _fail(str(e))
    if not ok:
        return _fail("simplex crossing graph does not match the input")
    return PASS


CHECKS = [
    ("equality_iff_median", check_equality_iff_median),
    ("recognizers_agree", check_recognizers_agree),
    ("cube_oracle_agrees", check_cube_oracle_agrees),
    ("clique_oracle_agrees", check_clique_oracle_agrees),
    ("crossing_routes_agree", check_crossing_routes_agree),
    ("w_sides_convex", check_w_sides_convex),
    ("u_sides_matched", check_u_sides_matched),
    ("occurrence_hull_stable", check_occurrence_hull_stable),
    ("convex_crossing_induced", check_convex_crossing_induced),
    ("closure_rounds", check_closure_rounds),
    ("expansion_recursion", check_expansion_recursion),
    ("basis_counts_cliques", check_basis_counts_cliques),
    ("simplex_identity", check_simplex_identity),
]


def run_corpus(items: list[tuple[str, Graph]]) -> list[CheckOutcome]:
    out = []
    for label, g in items:
        ctx = _Ctx(label, g)
        for name, fn in CHECKS:
            try:
                status, detail = fn(ctx)
            except Exception as e:  # a crash is a failure, not a skip
                status, detail = "fail", f"{type(e).__name__}: {e}"
            out.append(CheckOutcome(name, label, status, detail))
    return out
