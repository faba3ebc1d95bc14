from __future__ import annotations

import math
import threading

import pytest

from chromres import (
    EdgeSet,
    GnpParams,
    Graph,
    GraphFormatError,
    RegimeWarning,
    generate_gnp,
    induced_subgraph,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
    union,
)


def gnp(n, p, seed):
    return generate_gnp(GnpParams(n, p, seed))


class TestGenerate:
    def test_degenerate_low_p(self):
        g = generate_gnp(GnpParams(5, 1e-12, 3))
        assert g.edge_count == 0

    def test_degenerate_high_p(self):
        with pytest.warns(RegimeWarning):
            g = generate_gnp(GnpParams(4, 0.999999, 1))
        assert g.edge_count == 6

    def test_edge_count_within_four_sigma(self):
        g = gnp(1000, 0.5, 7)
        pairs = math.comb(1000, 2)
        mean = pairs / 2
        sigma = math.sqrt(pairs * 0.25)
        assert abs(g.edge_count - mean) <= 4 * sigma
        g.validate()

    def test_determinism_and_thread_independence(self):
        a = to_edge_list(gnp(60, 0.3, 11))
        b = to_edge_list(gnp(60, 0.3, 11))
        assert a == b
        out = {}

        def worker():
            out["g"] = to_edge_list(gnp(60, 0.3, 11))

        t = threading.Thread(target=worker)
        t.start()
        t.join()
        assert out["g"] == a

    def test_seed_sensitivity(self):
        assert gnp(40, 0.5, 1) != gnp(40, 0.5, 2)

    def test_empirical_pair_frequency(self):
        # fixed pairs over 200 fixed seeds: binomial(200, 0.5) stays well
        # inside [0.4, 0.6] (4-sigma is ~0.14)
        hits_01 = hits_far = 0
        for seed in range(200):
            g = gnp(200, 0.5, seed)
            hits_01 += g.has_edge(0, 1)
            hits_far += g.has_edge(37, 101)
        assert 0.4 <= hits_01 / 200 <= 0.6
        assert 0.4 <= hits_far / 200 <= 0.6

    def test_param_validation(self):
        with pytest.raises(ValueError):
            GnpParams(0, 0.5, 1)
        with pytest.raises(ValueError):
            GnpParams(5, 0.0, 1)
        with pytest.raises(ValueError):
            GnpParams(5, 1.0, 1)
        with pytest.warns(RegimeWarning):
            GnpParams(100, 0.6, 1)
        with pytest.warns(RegimeWarning):
            GnpParams(100, 0.1, 1)  # below n^(-1/3) ~ 0.215


class TestUnion:
    def test_add_edge_to_empty(self):
        g = union(Graph.empty(3), EdgeSet.from_pairs([(0, 1)]))
        assert g.edge_count == 1 and g.has_edge(0, 1)

    def test_idempotent_overlap(self):
        k3 = Graph.complete(3)
        g = union(k3, EdgeSet.from_pairs([(0, 1)]))
        assert g == k3

    def test_disjoint_count(self):
        c5 = Graph.cycle(5)
        g = union(c5, EdgeSet.from_pairs([(0, 2), (1, 3)]))
        assert g.edge_count == 7

    def test_original_unchanged_and_monotone(self):
        g = gnp(20, 0.3, 5)
        before = g.rows
        e = EdgeSet.from_pairs([(0, 1), (2, 17)])
        h = union(g, e)
        assert g.rows == before
        for u, v in g.edges():
            assert h.has_edge(u, v)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            union(Graph.empty(3), EdgeSet.from_pairs([(0, 3)]))


class TestInduced:
    def test_empty_selection(self):
        h, mapping = induced_subgraph(gnp(6, 0.5, 1), [])
        assert h.n == 0 and mapping == ()

    def test_k5_to_k3(self):
        h, mapping = induced_subgraph(Graph.complete(5), [1, 3, 4])
        assert h == Graph.complete(3)
        assert mapping == (1, 3, 4)

    def test_c5_prefix_is_path(self):
        h, _ = induced_subgraph(Graph.cycle(5), [0, 1, 2])
        assert h.edge_count == 2
        assert h.has_edge(0, 1) and h.has_edge(1, 2) and not h.has_edge(0, 2)

    def test_identity(self):
        g = gnp(15, 0.4, 9)
        h, mapping = induced_subgraph(g, range(15))
        assert h == g and mapping == tuple(range(15))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(Graph.empty(3), [5])


class TestSerialization:
    def test_single_vertex(self):
        g = Graph.empty(1)
        text = to_edge_list(g)
        assert text == "1 0\n"
        assert parse_edge_list(text) == g

    def test_k3(self):
        text = to_edge_list(Graph.complete(3))
        assert text.splitlines() == ["3 3", "0 1", "0 2", "1 2"]
        assert parse_edge_list(text) == Graph.complete(3)

    def test_gnp_roundtrip(self):
        from chromres import io_roundtrip

        g = gnp(50, 0.5, 3)
        assert io_roundtrip(g) == g
        assert parse_edge_list(to_edge_list(g)) == g
        assert parse_dimacs(to_dimacs(g)) == g

    def test_dimacs_one_based(self):
        text = to_dimacs(Graph.from_edges(3, [(0, 2)]))
        assert "e 1 3" in text

    def test_dimacs_comments_ok(self):
        g = parse_dimacs("c hello\np edge 3 1\ne 1 2\n")
        assert g.edge_count == 1 and g.has_edge(0, 1)

    @pytest.mark.parametrize("bad", [
        "",
        "3\n",
        "3 2\n0 1\n",          # header claims 2 edges
        "3 1\n1 0\n",          # u >= v
        "3 1\n0 3\n",          # v out of range
        "3 1\n0 x\n",
        "3 2\n0 1\n0 1\n",     # duplicate edge
    ])
    def test_malformed_edge_list(self, bad):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)

    @pytest.mark.parametrize("bad", [
        "e 1 2\n",                       # missing header
        "p edge 3 2\ne 1 2\n",           # count mismatch
        "p edge 3 1\ne 1 4\n",           # out of range
        "p edge 3 1\nq 1 2\n",           # unknown line
    ])
    def test_malformed_dimacs(self, bad):
        with pytest.raises(GraphFormatError):
            parse_dimacs(bad)


class TestEdgeSet:
    def test_normalization_and_m(self):
        e = EdgeSet.from_pairs([(3, 1), (1, 3), (0, 2)])
        assert e.m == 2
        assert e.sorted_pairs() == [(0, 2), (1, 3)]

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            EdgeSet.from_pairs([(2, 2)])

    def test_max_degree(self):
        e = EdgeSet.from_pairs([(0, 1), (0, 2), (0, 3), (1, 2)])
        assert e.max_degree() == 3
