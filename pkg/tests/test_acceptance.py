"""Acceptance battery.

Each test below is one gate and prints one PASSED/FAILED line under
``pytest -v``.  Everything is exact integer arithmetic; there are no
tolerances anywhere.
"""

import random
import time

from pcubes.graphs import (
    Graph,
    all_pairs_distances,
    bits_list,
    induced_subgraph,
    is_convex,
    mask_of,
)
from pcubes.polynomials import (
    X,
    add,
    is_log_concave,
    is_unimodal,
    has_internal_zeros,
    poly_lt,
    power,
    scale,
)
from pcubes.theta import convexity_by_boundary, embed, is_partial_cube, sides
from pcubes.crossing import (
    coordinate_crossing_pairs,
    crosses_cycle,
    crosses_quadrant,
    crossing_graph,
    isometric_cycles,
    verify_simplex_identity,
)
from pcubes.median import (
    halfspace_hull,
    is_median_by_convex_U,
    is_median_by_triples,
    median_closure,
    theta_occurrence,
)
from pcubes.counting import (
    clique_polynomial_enumerate,
    clique_polynomial_recursive,
    cube_polynomial,
    cube_polynomial_oracle,
    expansion_formula_check,
    verify_theorem,
    x_plus_one_expansion,
)
from pcubes.generators import (
    even_cycle,
    example_41,
    example_42,
    hypercube,
    hypercube_minus_vertex,
    path,
    random_graph,
    random_median_graph,
    random_tree,
    trihex,
)


def corpus():
    """Fixed battery of labeled graphs: partial cubes of every implemented
    family plus non-partial-cube controls."""
    return [
        ("p2", path(2)),
        ("p5", path(5)),
        ("c4", even_cycle(2)),
        ("c6", even_cycle(3)),
        ("c10", even_cycle(5)),
        ("q2", hypercube(2)),
        ("q3", hypercube(3)),
        ("q3-v", hypercube_minus_vertex(3)),
        ("q4-v", hypercube_minus_vertex(4)),
        ("tree9", random_tree(9, 5)),
        ("trihex", trihex()),
        ("ex42", example_42(3, 2)),
        ("ex41", example_41(4, 3)),
        ("rmg6", random_median_graph(6, 11)),
        ("rmg14", random_median_graph(14, 12)),
        ("rg7", random_graph(7, 0.5, 21)),
        ("rg9", random_graph(9, 0.35, 22)),
    ]


def seeded_connected_set(g, rng):
    start = rng.randrange(g.n)
    target = rng.randint(1, g.n)
    s = 1 << start
    frontier = [start]
    while bin(s).count("1") < target and frontier:
        v = frontier.pop(rng.randrange(len(frontier)))
        for w in g.adj[v]:
            if not s >> w & 1:
                s |= 1 << w
                frontier.append(w)
    return s


def test_equality_on_two_hundred_generated_median_graphs():
    started = time.perf_counter()
    for seed in range(200):
        steps = seed % 25 + 1
        g = random_median_graph(steps, seed)
        rep = verify_theorem(g)
        assert rep.is_median, f"seed {seed}: generator output not median"
        assert rep.equality, (
            f"seed {seed}: cube polynomial {rep.cube_poly} differs from "
            f"shifted crossing clique polynomial {rep.crossing_clique_shifted}"
        )
    assert time.perf_counter() - started < 120


def test_strict_inequality_on_non_median_partial_cubes():
    graphs = (
        [(f"c{2 * k}", even_cycle(k)) for k in range(3, 9)]
        + [(f"q{n}-v", hypercube_minus_vertex(n)) for n in range(3, 7)]
        + [("trihex", trihex())]
    )
    for label, g in graphs:
        rep = verify_theorem(g)
        assert rep.is_partial_cube, label
        assert rep.is_median is False, label
        assert rep.leq_holds, label
        assert poly_lt(rep.cube_poly, rep.crossing_clique_shifted), label


def test_trihex_closure_rounds_and_crossing_preservation():
    g = trihex()
    cert = is_partial_cube(g)
    emb = embed(g, cert)
    trace = median_closure(g)
    assert [r.graph.n for r in trace.rounds] == [13, 19, 20]
    assert trace.expansion_rounds == 2
    assert is_median_by_convex_U(trace.final)
    assert is_median_by_triples(trace.final, all_pairs_distances(trace.final))
    before = coordinate_crossing_pairs(g, emb.labels, cert)
    after = coordinate_crossing_pairs(trace.final, trace.final_labels)
    assert before == after


def test_clique_family_shape_thresholds_n6():
    n = 6

    def fam(m):
        return add(power((1, 1), n), scale(X, m))

    def lc(p):
        return is_log_concave(p) and not has_internal_zeros(p)

    assert lc(fam(5)) and is_unimodal(fam(5))
    assert not lc(fam(6)) and is_unimodal(fam(6))
    assert is_unimodal(fam(9))
    assert not is_unimodal(fam(10))
    assert (n * n + n) // (2 * n - 4) == 5
    assert (n * n - 3 * n) // 2 == 9
    # the formulas name the exact boundaries over a scan
    last_lc = max(m for m in range(0, 13) if lc(fam(m)))
    last_uni = max(m for m in range(0, 13) if is_unimodal(fam(m)))
    assert last_lc == 5 and last_uni == 9


def test_cube_family_shape_thresholds_n9_and_closed_form():
    n = 9

    def fam(m, dim=n):
        return add(power((2, 1), dim), scale((1, 1), m))

    def lc(p):
        return is_log_concave(p) and not has_internal_zeros(p)

    assert is_unimodal(fam(2304))
    assert not is_unimodal(fam(2305))
    assert lc(fam(1645))
    assert not lc(fam(1646))
    assert (n * n - 5 * n) // 2 * 2 ** (n - 2) + 1 == 2305
    assert (n * n + n) * 2 ** (n - 2) // (n - 2) == 1645
    for m in range(0, 51):
        assert cube_polynomial(example_42(3, m)) == fam(m, dim=3)


def test_simplex_identity_on_all_small_types_and_random_graphs():
    up_to_three = [
        Graph(1, []),
        Graph(2, []),
        Graph(2, [(0, 1)]),
        Graph(3, []),
        Graph(3, [(0, 1)]),
        Graph(3, [(0, 1), (1, 2)]),
        Graph(3, [(0, 1), (1, 2), (0, 2)]),
    ]
    four_vertex_types = [
        Graph(4, []),
        Graph(4, [(0, 1)]),
        Graph(4, [(0, 1), (2, 3)]),
        Graph(4, [(0, 1), (1, 2)]),
        Graph(4, [(0, 1), (1, 2), (0, 2)]),
        Graph(4, [(0, 1), (1, 2), (2, 3)]),
        Graph(4, [(0, 1), (0, 2), (0, 3)]),
        Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
        Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]),
        Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ]
    assert len(four_vertex_types) == 11
    for g in up_to_three + four_vertex_types:
        assert verify_simplex_identity(g), (g.n, g.edges)
    for i in range(50):
        g = random_graph(5 + i % 4, 0.5, 1000 + i)
        assert verify_simplex_identity(g), f"random graph {i}"


def test_oracle_equivalences_across_corpus():
    for label, g in corpus():
        cert = is_partial_cube(g)
        if cert.verdict and g.n <= 14:
            assert cube_polynomial(g, cert) == cube_polynomial_oracle(g), label
        if g.n <= 12:
            assert clique_polynomial_recursive(g) == clique_polynomial_enumerate(g), label
        if cert.verdict and g.n >= 2:
            cycles = isometric_cycles(g, cert.dist)
            cg = crossing_graph(g, cert)
            for c1 in range(cert.idim):
                for c2 in range(c1 + 1, cert.idim):
                    q = crosses_quadrant(g, cert.dist, cert, c1, c2)
                    assert q == crosses_cycle(g, cert.dist, cert, cycles, c1, c2), (
                        label,
                        c1,
                        c2,
                    )
                    assert q == cg.graph.has_edge(c1, c2), (label, c1, c2)
        if cert.connected and cert.bipartition.ok:
            assert is_median_by_triples(g, cert.dist) == is_median_by_convex_U(
                g, cert
            ), label


def test_structural_identities_across_corpus():
    items = corpus()
    pcs = []
    for label, g in items:
        cert = is_partial_cube(g)
        if cert.verdict and g.n >= 2:
            pcs.append((label, g, cert))

    # halfspaces are convex, by both the boundary criterion and the
    # geodesic definition
    for label, g, cert in pcs:
        for c in range(cert.idim):
            sd = sides(g, cert.dist, cert, c)
            for half in (sd.w_ab, sd.w_ba):
                assert convexity_by_boundary(g, cert.dist, cert, half), (label, c)
                assert is_convex(g, cert.dist, half), (label, c)

    # boundary sets of one class are matched isomorphically, edge class
    # by edge class
    for label, g, cert in pcs:
        cls = cert.theta.class_of
        for c in range(cert.idim):
            sd = sides(g, cert.dist, cert, c)
            sigma = {}
            for e in cert.theta.classes[c]:
                u, v = g.edges[e]
                if (sd.w_ab >> u) & 1:
                    sigma[u] = v
                else:
                    sigma[v] = u
            assert mask_of(sigma) == sd.u_ab and mask_of(sigma.values()) == sd.u_ba
            members = bits_list(sd.u_ab)
            for i, x in enumerate(members):
                for y in members[i + 1 :]:
                    assert g.has_edge(x, y) == g.has_edge(sigma[x], sigma[y]), (
                        label,
                        c,
                    )
                    if g.has_edge(x, y):
                        assert cls[g.edge_id(x, y)] == cls[
                            g.edge_id(sigma[x], sigma[y])
                        ], (label, c)

    # classes occurring in a connected subgraph survive unchanged in its hull
    samples = 0
    k = 0
    while samples < 100:
        label, g, cert = pcs[k % len(pcs)]
        rng = random.Random(f"hull:{k}")
        k += 1
        s = seeded_connected_set(g, rng)
        hull = halfspace_hull(g, cert, s)
        assert theta_occurrence(g, cert, s) == theta_occurrence(g, cert, hull), label
        samples += 1
    assert samples == 100

    # in a median graph, crossing inside a convex subgraph is exactly
    # crossing of the same classes in the host
    for label, g, cert in pcs:
        if not is_median_by_convex_U(g, cert):
            continue
        rng = random.Random(f"convex:{label}")
        for _ in range(5):
            hull = halfspace_hull(g, cert, seeded_connected_set(g, rng))
            sub, remap = induced_subgraph(g, hull)
            if sub.n < 2 or sub.m == 0:
                continue
            scert = is_partial_cube(sub)
            assert scert.verdict, label
            inv = {w: v for v, w in remap.items()}
            host_class = []
            for eids in scert.theta.classes:
                owners = {
                    cert.theta.class_of[g.edge_id(inv[sub.edges[e][0]], inv[sub.edges[e][1]])]
                    for e in eids
                }
                assert len(owners) == 1, (label, "one subgraph class, one host class")
                host_class.append(owners.pop())
            assert len(set(host_class)) == len(host_class), label
            for c1 in range(scert.idim):
                for c2 in range(c1 + 1, scert.idim):
                    assert crosses_quadrant(sub, scert.dist, scert, c1, c2) == (
                        crosses_quadrant(g, cert.dist, cert, host_class[c1], host_class[c2])
                    ), (label, host_class[c1], host_class[c2])

    # cube polynomial recursion across every class split, peripheral form
    # included when one boundary fills its halfspace
    for label, g, cert in pcs:
        for c in range(cert.idim):
            sd = sides(g, cert.dist, cert, c)
            assert expansion_formula_check(g, sd.w_ab, sd.w_ba), (label, c)

    # expansion of the cube polynomial in powers of x+1 counts the cliques
    # of the crossing graph on median members
    for label, g, cert in pcs:
        if not is_median_by_convex_U(g, cert):
            continue
        b = x_plus_one_expansion(cube_polynomial(g, cert))
        cg = crossing_graph(g, cert)
        assert b == clique_polynomial_recursive(cg.graph), label
