import pytest
from hypothesis import given, settings, strategies as st

from pcubes.graphs import (
    Graph,
    GraphError,
    ResourceLimitError,
    disjoint_union,
    full_mask,
    mask_of,
)
from pcubes.polynomials import ONE, add, mul, poly_leq, shift
from pcubes.crossing import NotPartialCubeError, crossing_graph
from pcubes.counting import (
    TheoremReport,
    clique_polynomial_enumerate,
    clique_polynomial_recursive,
    cube_polynomial,
    cube_polynomial_oracle,
    expansion_formula_check,
    verify_theorem,
    x_plus_one_expansion,
)
from pcubes.theta import is_partial_cube
from pcubes.generators import (
    complete,
    even_cycle,
    example_41,
    hypercube,
    hypercube_minus_vertex,
    path,
    random_graph,
    random_median_graph,
    random_tree,
    trihex,
)

from conftest import odd_cycle_graph


class TestCubePolynomial:
    def test_pinned_values(self):
        assert cube_polynomial(path(3)) == (3, 2)
        assert cube_polynomial(hypercube(3)) == (8, 12, 6, 1)
        assert cube_polynomial(hypercube_minus_vertex(3)) == (7, 9, 3)
        assert cube_polynomial(even_cycle(3)) == (6, 6)
        assert cube_polynomial(trihex()) == (13, 15)  # hexagons only, no squares
        assert cube_polynomial(Graph(1, [])) == (1,)

    def test_constant_and_linear_terms(self):
        for g in (path(6), hypercube(4), trihex(), random_tree(11, 8)):
            p = cube_polynomial(g)
            assert p[0] == g.n
            assert p[1] == g.m

    def test_hypercube_binomials(self):
        # Q_n holds binom(n, k) 2^(n-k) subcubes of dimension k
        from math import comb

        for n in range(1, 6):
            p = cube_polynomial(hypercube(n))
            assert p == tuple(comb(n, k) * 2 ** (n - k) for k in range(n + 1))

    def test_rejects_non_partial_cube(self):
        with pytest.raises(NotPartialCubeError):
            cube_polynomial(complete(3))


class TestCubeOracle:
    def test_pinned_values(self):
        assert cube_polynomial_oracle(even_cycle(3)) == (6, 6)
        assert cube_polynomial_oracle(even_cycle(2)) == (4, 4, 1)
        assert cube_polynomial_oracle(path(5)) == (5, 4)
        # works on non partial cubes too: K4 has edges but no induced square
        assert cube_polynomial_oracle(complete(4)) == (4, 6)
        assert cube_polynomial_oracle(odd_cycle_graph(5)) == (5, 5)

    def test_level_guard(self):
        with pytest.raises(ResourceLimitError):
            cube_polynomial_oracle(hypercube(3), max_per_level=5)

    @pytest.mark.parametrize(
        "g",
        [
            path(7),
            even_cycle(4),
            hypercube(3),
            hypercube_minus_vertex(4),
            trihex(),
            random_tree(12, 6),
            random_median_graph(10, 42),
        ],
        ids=["p7", "c8", "q3", "q4-v", "trihex", "tree12", "rmg10"],
    )
    def test_agrees_with_fast_route(self, g):
        assert cube_polynomial_oracle(g) == cube_polynomial(g)

    @given(st.integers(1, 10), st.integers(0, 10**6))
    @settings(max_examples=20, deadline=None)
    def test_agrees_on_random_median_graphs(self, steps, seed):
        g = random_median_graph(steps, seed)
        if g.n > 14:
            return
        assert cube_polynomial_oracle(g) == cube_polynomial(g)


class TestCliquePolynomial:
    def test_pinned_values(self):
        assert clique_polynomial_recursive(complete(3)) == (1, 3, 3, 1)
        assert clique_polynomial_recursive(Graph(4, [])) == (1, 4)
        assert clique_polynomial_recursive(Graph(0, [])) == ONE
        assert clique_polynomial_recursive(example_41(6, 10)) == (1, 16, 15, 20, 15, 6, 1)

    def test_empty_clique_always_counted(self):
        for g in (Graph(0, []), complete(5), random_graph(7, 0.5, 3)):
            assert clique_polynomial_recursive(g)[0] == 1

    def test_degree_is_clique_number(self):
        assert len(clique_polynomial_recursive(complete(5))) == 6
        assert len(clique_polynomial_recursive(even_cycle(3))) == 3  # max clique K2
        assert len(clique_polynomial_recursive(Graph(3, []))) == 2

    @pytest.mark.parametrize(
        "g",
        [
            complete(4),
            path(6),
            even_cycle(3),
            odd_cycle_graph(7),
            Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
        ],
        ids=["k4", "p6", "c6", "c7", "two-triangles"],
    )
    def test_routes_agree(self, g):
        assert clique_polynomial_recursive(g) == clique_polynomial_enumerate(g)

    @given(st.integers(0, 12), st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_routes_agree_on_random_graphs(self, n, seed):
        g = random_graph(n, 0.5, seed)
        assert clique_polynomial_recursive(g) == clique_polynomial_enumerate(g)

    def test_disjoint_union_multiplies_nothing(self):
        # cliques of a disjoint union: Cl(G + H) = Cl(G) + Cl(H) - 1
        a, b = complete(3), path(3)
        lhs = clique_polynomial_recursive(disjoint_union(a, b))
        rhs = add(clique_polynomial_recursive(a), clique_polynomial_recursive(b))
        assert add(lhs, ONE) == rhs


class TestVerifyTheorem:
    def test_median_graph_equality(self):
        rep = verify_theorem(path(3))
        assert rep.is_partial_cube and rep.is_median
        assert rep.leq_holds and rep.equality
        assert rep.cube_poly == (3, 2)
        assert rep.crossing_clique_shifted == (3, 2)

    def test_c6_strict(self):
        rep = verify_theorem(even_cycle(3))
        assert rep.is_partial_cube and not rep.is_median
        assert rep.leq_holds and not rep.equality
        assert rep.cube_poly == (6, 6)
        # crossing graph is K3, so the other side is (x+2)^3
        assert rep.crossing_clique_shifted == (8, 12, 6, 1)

    def test_q3_minus_vertex_strict(self):
        rep = verify_theorem(hypercube_minus_vertex(3))
        assert rep.leq_holds and not rep.equality and not rep.is_median
        assert rep.cube_poly == (7, 9, 3)
        assert rep.crossing_clique_shifted == (8, 12, 6, 1)

    def test_trihex(self):
        rep = verify_theorem(trihex())
        assert rep.leq_holds and not rep.equality and not rep.is_median
        assert rep.cube_poly == (13, 15)
        # G# has 6 vertices, 9 edges and 4 triangles; constant term 20
        # matches the vertex count of the median closure
        assert rep.crossing_clique_shifted == (20, 36, 21, 4)

    def test_non_partial_cube_report(self):
        rep = verify_theorem(complete(3))
        assert rep == TheoremReport(None, None, None, None, None, False)

    def test_one_vertex_rejected(self):
        with pytest.raises(GraphError):
            verify_theorem(Graph(1, []))

    @given(st.integers(1, 18), st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_equality_on_generated_median_graphs(self, steps, seed):
        rep = verify_theorem(random_median_graph(steps, seed))
        assert rep.leq_holds and rep.equality and rep.is_median


class TestExpansionFormula:
    def test_square_as_doubled_edge(self):
        # C4 with cycle order 0-1-2-3: copies {0,1} and {2,3}
        assert expansion_formula_check(even_cycle(2), mask_of([0, 1]), mask_of([2, 3]))

    def test_pendant_on_edge(self):
        assert expansion_formula_check(path(3), mask_of([0, 1]), mask_of([2]))

    def test_c6_as_expanded_c4(self):
        # C6 split along one class: arcs {5, 0, 1} and {2, 3, 4}
        assert expansion_formula_check(even_cycle(3), mask_of([0, 1, 5]), mask_of([2, 3, 4]))

    def test_rejects_non_partition(self):
        g = even_cycle(2)
        with pytest.raises(GraphError, match="partition"):
            expansion_formula_check(g, mask_of([0, 1]), mask_of([1, 2, 3]))
        with pytest.raises(GraphError, match="partition"):
            expansion_formula_check(g, mask_of([0]), mask_of([2, 3]))
        with pytest.raises(GraphError, match="partition"):
            expansion_formula_check(g, 0, full_mask(4))

    def test_rejects_no_cross_edges(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(GraphError, match="matching"):
            expansion_formula_check(g, mask_of([0, 1]), mask_of([2, 3]))

    def test_rejects_non_matching_cross_edges(self):
        g = path(3)
        with pytest.raises(GraphError, match="matching"):
            expansion_formula_check(g, mask_of([0, 2]), mask_of([1]))

    def test_rejects_unmatched_shared_structure(self):
        # cross edges pair 1<->2 and 4<->3, but {1,4} induces an edge while
        # {2,3} does not, so the shared copies differ
        g = Graph(6, [(0, 1), (1, 4), (4, 5), (1, 2), (4, 3)])
        with pytest.raises(GraphError, match="isomorphic"):
            expansion_formula_check(g, mask_of([0, 1, 4, 5]), mask_of([2, 3]))


class TestBasisExpansion:
    def test_pinned(self):
        assert x_plus_one_expansion((8, 12, 6, 1)) == (1, 3, 3, 1)
        assert x_plus_one_expansion((3, 2)) == (1, 2)
        assert x_plus_one_expansion((1, 2, 1)) == (0, 0, 1)
        assert x_plus_one_expansion(()) == ()
        assert x_plus_one_expansion((5,)) == (5,)

    def test_negative_coefficients_possible(self):
        assert x_plus_one_expansion((0, 1)) == (-1, 1)

    @given(st.lists(st.integers(0, 30), max_size=6))
    @settings(max_examples=100, deadline=None)
    def test_reconstruction(self, cs):
        from pcubes.polynomials import normalize

        p = normalize(tuple(cs))
        b = x_plus_one_expansion(p)
        # rebuild sum b_i (x+1)^i with plain integer convolution
        acc = [0] * (len(b) + 1)
        basis = [1]
        for coef in b:
            for j, val in enumerate(basis):
                acc[j] += coef * val
            carry = [0] * (len(basis) + 1)
            for j, val in enumerate(basis):
                carry[j] += val
                carry[j + 1] += val
            basis = carry
        while len(acc) > 0 and (not acc or acc[-1] == 0):
            if not acc or acc[-1] != 0:
                break
            acc.pop()
        assert tuple(acc) == p

    def test_median_basis_counts_are_crossing_cliques(self):
        for g in (hypercube(3), path(5), random_median_graph(14, 17)):
            cube = cube_polynomial(g)
            cg = crossing_graph(g)
            assert x_plus_one_expansion(cube) == clique_polynomial_recursive(cg.graph)
