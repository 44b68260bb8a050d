from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, naive_id
from idpoly import _kernels
from idpoly.algorithms import (
    ALGORITHMS,
    RecursiveEngine,
    enumerate_essential_sets,
    enumerate_mids,
    id_brute_force,
    id_coefficient_formula,
    id_essential_formula,
    id_inclusion_exclusion,
    id_recursive,
    independence_polynomial,
    looped_pivot_rule,
)
from idpoly.errors import GraphError, LoopedGraphError, SizeBoundError
from idpoly.families import complete_graph, cycle_graph, path_graph, random_graph
from idpoly.graph import Graph, disjoint_union
from idpoly.polynomial import X, ZERO, Polynomial

P = Polynomial
LOOPED_K1 = Graph(1, loops=[0])


def naive_ind(G):
    counts = [0] * (G.n + 1)
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            if not any(G.has_edge(a, b) for a, b in combinations(S, 2)):
                counts[k] += 1
    return P(counts)


class TestBruteForce:
    def test_complete(self):
        assert id_brute_force(complete_graph(5)) == P([0, 5])

    def test_empty_graph(self):
        assert id_brute_force(Graph(0)) == P([1])

    def test_looped_vertex(self):
        assert id_brute_force(LOOPED_K1) == ZERO

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            id_brute_force(path_graph(27))
        with pytest.raises(SizeBoundError):
            id_brute_force(path_graph(6), max_n=5)

    @given(graphs(max_n=8, loops=True))
    def test_matches_naive_definition(self, G):
        assert list(id_brute_force(G).coeffs) == naive_id(G)

    @pytest.mark.parametrize("n, prob, seed", [(15, 0.3, 1), (17, 0.5, 2), (21, 0.2, 5)])
    def test_numpy_and_python_kernels_agree(self, n, prob, seed):
        G = random_graph(n, prob, seed).with_loops([1, 3, n - 1])
        args = (G.adj, G.loop_mask, n)
        assert _kernels.ids_histogram_np(*args) == _kernels.ids_histogram_py(*args)

    @given(graphs(max_n=6, loops=True))
    def test_numpy_kernel_on_small_graphs(self, G):
        args = (G.adj, G.loop_mask, G.n)
        assert _kernels.ids_histogram_np(*args) == _kernels.ids_histogram_py(*args)

    @settings(max_examples=40)
    @given(graphs(max_n=10, min_n=1))
    def test_value_at_one_counts_maximal_independent_sets(self, G):
        H = nx.Graph()
        H.add_nodes_from(range(G.n))
        H.add_edges_from(G.edges)
        mis = sum(1 for _ in nx.find_cliques(nx.complement(H)))
        assert id_brute_force(G)(1) == mis


class TestRecursive:
    def test_c4(self, c4):
        assert id_recursive(c4) == P([0, 0, 2])

    def test_p2(self):
        assert id_recursive(path_graph(2)) == P([0, 2])

    def test_edgeless(self):
        assert id_recursive(Graph(3)) == P([0, 0, 0, 1])

    def test_empty_and_looped(self):
        assert id_recursive(Graph(0)) == P([1])
        assert id_recursive(LOOPED_K1) == ZERO
        assert id_recursive(Graph(3, [(0, 1), (1, 2)], loops=[0, 1, 2])) == ZERO

    def test_c4_pivot_terms(self, c4):
        # pivot 0: id(P_3) - id(1°-2-3°) + x id(K_1)
        eng = RecursiveEngine(c4)
        full = c4.full_mask
        minus_v = eng._id(full & ~1, 0)
        circ_v = eng._id(full & ~1, 0b1010)
        closed = eng._id(0b0100, 0)
        assert (minus_v, circ_v, closed) == (P([0, 1, 1]), X, X)
        assert minus_v - circ_v + X * closed == P([0, 0, 2])

    def test_long_path_is_fast_and_shallow(self):
        eng = RecursiveEngine(path_graph(300))
        result = eng.run()
        assert result(1) > 0
        assert len(eng.memo) < 5000

    @given(graphs(max_n=9, loops=True))
    def test_matches_brute_force_with_loops(self, G):
        assert id_recursive(G) == id_brute_force(G)

    @given(graphs(max_n=8, min_n=1, loops=True))
    def test_looped_pivot_rule(self, G):
        for v in G.loops:
            assert looped_pivot_rule(G, v) == id_brute_force(G)

    def test_looped_pivot_rule_needs_loop(self, p3):
        with pytest.raises(GraphError):
            looped_pivot_rule(p3, 0)


class TestInclusionExclusion:
    def test_k2(self):
        assert id_inclusion_exclusion(complete_graph(2)) == P([0, 2])

    def test_p3(self, p3):
        assert id_inclusion_exclusion(p3) == P([0, 1, 1])

    def test_e1(self):
        assert id_inclusion_exclusion(Graph(1)) == X

    def test_rejects_loops_and_bound(self):
        with pytest.raises(LoopedGraphError):
            id_inclusion_exclusion(LOOPED_K1)
        with pytest.raises(SizeBoundError):
            id_inclusion_exclusion(path_graph(25))

    @pytest.mark.parametrize("n, prob, seed", [(15, 0.3, 1), (16, 0.6, 2)])
    def test_kernels_agree(self, n, prob, seed):
        G = random_graph(n, prob, seed)
        assert _kernels.signed_iso_histogram_np(G.adj, n) == _kernels.signed_iso_histogram_py(
            G.adj, n
        )


class TestEssential:
    def test_k2(self):
        assert enumerate_essential_sets(complete_graph(2)) == [{0}, {1}]
        assert id_essential_formula(complete_graph(2)) == P([0, 2])

    def test_p3(self, p3):
        assert set(enumerate_essential_sets(p3)) == {
            frozenset(s) for s in ({1}, {0, 1}, {1, 2}, {0, 2})
        }
        assert id_essential_formula(p3) == P([0, 1, 1])

    def test_k1(self):
        assert enumerate_essential_sets(Graph(1)) == [frozenset()]
        assert id_essential_formula(Graph(1)) == X

    def test_rejects_empty_graph_and_loops(self):
        with pytest.raises(GraphError):
            id_essential_formula(Graph(0))
        with pytest.raises(LoopedGraphError):
            id_essential_formula(LOOPED_K1)

    @given(graphs(max_n=7, min_n=1))
    def test_family_is_the_predicate(self, G):
        nbrs = [set(G.neighbors(v)) for v in range(G.n)]
        expected = {
            frozenset(S)
            for k in range(G.n + 1)
            for S in combinations(range(G.n), k)
            if any(v not in S and nbrs[v] <= set(S) for v in range(G.n))
        }
        assert set(enumerate_essential_sets(G)) == expected

    @given(graphs(max_n=7, min_n=1))
    def test_lemma(self, G):
        fam = set(enumerate_essential_sets(G))
        assert min(map(len, fam)) == G.min_degree()
        assert all(G.neighbors(v) in fam for v in range(G.n))

    @pytest.mark.parametrize("n, prob, seed", [(15, 0.3, 1), (16, 0.5, 4)])
    def test_kernels_agree(self, n, prob, seed):
        G = random_graph(n, prob, seed)
        assert _kernels.signed_essential_histogram_np(
            G.adj, n
        ) == _kernels.signed_essential_histogram_py(G.adj, n)


class TestCoefficientFormula:
    def test_k2(self):
        assert id_coefficient_formula(complete_graph(2)) == P([0, 2])

    def test_e2(self):
        assert id_coefficient_formula(Graph(2)) == P([0, 0, 1])

    def test_p3(self, p3):
        assert id_coefficient_formula(p3) == P([0, 1, 1])


class TestAgreement:
    @given(graphs(max_n=9))
    def test_five_way(self, G):
        ref = id_brute_force(G)
        for name, fn in ALGORITHMS.items():
            if name == "essential" and G.n == 0:
                continue
            assert fn(G) == ref, name

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_multiplicative(self, G, H):
        assert id_recursive(disjoint_union(G, H)) == id_brute_force(G) * id_brute_force(H)

    @given(graphs(max_n=9, min_n=1))
    def test_nonnegative_with_a_positive_coefficient(self, G):
        p = id_brute_force(G)
        assert all(c >= 0 for c in p.coeffs) and any(p.coeffs)
        assert p[0] == 0


class TestIndependence:
    def test_examples(self):
        assert independence_polynomial(complete_graph(2)) == P([1, 2])
        assert independence_polynomial(Graph(2)) == P([1, 2, 1])
        assert independence_polynomial(Graph(1)) == P([1, 1])
        assert independence_polynomial(Graph(0)) == P([1])

    def test_rejects_loops(self):
        with pytest.raises(LoopedGraphError):
            independence_polynomial(LOOPED_K1)

    @given(graphs(max_n=9))
    def test_matches_enumeration(self, G):
        assert independence_polynomial(G) == naive_ind(G)

    def test_long_cycle(self):
        # ind(C_n)(1) is the Lucas number L_n
        lucas = [2, 1]
        for _ in range(60):
            lucas.append(lucas[-1] + lucas[-2])
        assert independence_polynomial(cycle_graph(60))(1) == lucas[60]


class TestEnumerateMids:
    def test_p3(self, p3):
        assert enumerate_mids(p3) == [{1}, {0, 2}]

    def test_k3(self):
        assert enumerate_mids(complete_graph(3)) == [{0}, {1}, {2}]

    def test_looped(self):
        assert enumerate_mids(LOOPED_K1) == []

    def test_order(self):
        sets = enumerate_mids(cycle_graph(6))
        assert sets == [{0, 3}, {1, 4}, {2, 5}, {0, 2, 4}, {1, 3, 5}]

    @given(graphs(max_n=8, loops=True))
    def test_sizes_match_polynomial(self, G):
        sets = enumerate_mids(G)
        counts = [0] * (G.n + 1)
        for s in sets:
            counts[len(s)] += 1
        assert P(counts) == id_brute_force(G)
        assert all(not (a < b or b < a) for a, b in combinations(sets, 2))
