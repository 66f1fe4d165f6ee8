"""Membership deciders, criticality, theorem reports, localization scans.

The three deciders are cross-checked on the full n <= 4 catalog here
(the oracle included) and the ridge/localization pair up to n = 5; the
complete n = 6 run belongs to the acceptance suite.
"""

import pytest

from wellcov import (
    Edge,
    Graph,
    OracleSizeError,
    complement,
    edge_localization_scan,
    generate,
    gorenstein_combinatorial_check,
    independence_number,
    is_alpha_critical_direct,
    is_alpha_critical_fibers,
    is_edge_alpha_critical,
    is_in_wp_localization,
    is_in_wp_oracle,
    is_in_wp_ridge,
    localization,
    main_theorem_report,
    non_critical_edge,
    w_index,
    wp_oracle_counterexample,
)
from wellcov.bitset import VertexSet
from wellcov.catalog import labeled_graphs


def small_catalog(max_n: int):
    for n in range(1, max_n + 1):
        yield from labeled_graphs(n)


class TestDeciders:
    def test_three_routes_agree_n4(self):
        memo: dict = {}
        for g in small_catalog(4):
            for p in (1, 2, 3):
                o = is_in_wp_oracle(g, p)
                assert o == is_in_wp_ridge(g, p)
                assert o == is_in_wp_localization(g, p, memo)

    def test_membership_is_downward_monotone(self):
        for g in small_catalog(5):
            for p in (1, 2, 3):
                if is_in_wp_ridge(g, p + 1):
                    assert is_in_wp_ridge(g, p)

    def test_order_below_p_excludes(self):
        k2 = generate("complete:n=2").graph
        assert not is_in_wp_oracle(k2, 3)
        assert not is_in_wp_ridge(k2, 3)
        assert not is_in_wp_localization(k2, 3)
        # the witness is the all-empty family
        assert wp_oracle_counterexample(k2, 3) == (
            VertexSet.empty(2), VertexSet.empty(2), VertexSet.empty(2))

    def test_known_values(self, c5, c7, c4, star):
        assert is_in_wp_oracle(c5, 2) and not is_in_wp_oracle(c5, 3)
        assert is_in_wp_oracle(c7, 1) and not is_in_wp_oracle(c7, 2)
        assert is_in_wp_oracle(c4, 1) and not is_in_wp_oracle(c4, 2)
        assert not is_in_wp_oracle(star, 1)

    def test_complete_graphs_reach_their_order(self):
        k4 = generate("complete:n=4").graph
        for p in (1, 2, 3, 4):
            assert is_in_wp_oracle(k4, p)
        assert not is_in_wp_oracle(k4, 5)

    def test_oracle_guard(self):
        g = generate("cycle:n=11").graph
        with pytest.raises(OracleSizeError):
            is_in_wp_oracle(g, 1)
        assert is_in_wp_oracle(g, 1, allow_large=True) == is_in_wp_ridge(g, 1)

    def test_counterexample_is_unextendable(self, c7):
        witness = wp_oracle_counterexample(c7, 2)
        assert witness is not None
        # disjoint independent sets by construction
        seen = VertexSet.empty(7)
        for part in witness:
            assert seen.isdisjoint(part)
            seen = seen | part
        assert wp_oracle_counterexample(c5 := generate("cycle:n=5").graph, 2) is None
        assert is_in_wp_oracle(c5, 2)


class TestWIndex:
    def test_values(self, c4, c5, c7, petersen_complement, star):
        assert w_index(c4) == 1
        assert w_index(c5) == 2
        assert w_index(c7) == 1
        assert w_index(petersen_complement) == 3
        assert w_index(star) is None

    def test_complete_graph_index_is_order(self):
        assert w_index(generate("complete:n=6").graph) == 6

    def test_index_is_the_last_member_level(self):
        for g in small_catalog(5):
            w = w_index(g)
            if w is None:
                assert not is_in_wp_ridge(g, 1)
            else:
                assert is_in_wp_ridge(g, w)
                assert not is_in_wp_ridge(g, w + 1)

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_blowup_family(self, q):
        assert w_index(generate(f"c7_blowup:q={q}").graph) == q


class TestCriticality:
    def test_edgeless_vacuous(self):
        g = Graph.from_edges(3, [])
        assert is_alpha_critical_direct(g)
        assert is_alpha_critical_fibers(g) == (True, None)

    def test_cycles_critical(self, c5, c7):
        for g in (c5, c7):
            assert is_alpha_critical_direct(g)
            ok, uncovered = is_alpha_critical_fibers(g)
            assert ok and uncovered is None

    def test_path_not_critical(self, p4):
        assert not is_alpha_critical_direct(p4)
        assert non_critical_edge(p4) == Edge(1, 2)
        ok, uncovered = is_alpha_critical_fibers(p4)
        assert not ok and uncovered == Edge(1, 2)

    def test_single_edge_predicate(self, p4):
        assert is_edge_alpha_critical(p4, Edge(0, 1))
        assert not is_edge_alpha_critical(p4, Edge(1, 2))

    def test_routes_agree_n5(self):
        for g in small_catalog(5):
            assert is_alpha_critical_direct(g) == is_alpha_critical_fibers(g)[0]


class TestLocalization:
    def test_alpha_never_survives(self):
        # any independent set of the localization extends by the vertex
        for g in small_catalog(5):
            alpha = independence_number(g)
            for v in range(g.n):
                sub = localization(g, VertexSet.of(g.n, [v]))
                if sub is not None:
                    assert independence_number(sub.graph) <= alpha - 1

    def test_members_drop_alpha_exactly_one(self):
        for g in small_catalog(5):
            if not is_in_wp_ridge(g, 1):
                continue
            alpha = independence_number(g)
            for v in range(g.n):
                sub = localization(g, VertexSet.of(g.n, [v]))
                if alpha == 1:
                    assert sub is None
                else:
                    assert sub is not None
                    assert independence_number(sub.graph) == alpha - 1


class TestEdgeScan:
    def test_rejects_p1(self, c5):
        with pytest.raises(ValueError):
            edge_localization_scan(c5, 1)

    def test_doubled_c7(self):
        fam = generate("c7_blowup:q=2")
        entries = edge_localization_scan(fam.graph, 2)
        assert len(entries) == 35
        by_edge = {e.edge.endpoints(): e for e in entries}
        # the seven within-class edges pass, the 28 cross edges fail
        passing = [e for e in entries if e.in_lower_class]
        failing = [e for e in entries if e.in_lower_class is False]
        assert len(passing) == 7 and len(failing) == 28
        classes = fam.classes
        for i, cls in enumerate(classes):
            u, v = cls.to_tuple()
            assert by_edge[(u, v)].in_lower_class
        assert not any(e.empty for e in entries)

    def test_petersen_complement(self, petersen_complement):
        entries = edge_localization_scan(petersen_complement, 3)
        assert len(entries) == 30
        assert all(e.vertex_count == 1 for e in entries)
        assert all(e.in_lower_class is False for e in entries)
        lower = edge_localization_scan(petersen_complement, 2)
        assert all(e.in_lower_class is True for e in lower)

    def test_empty_localization_reported(self, c4):
        entries = edge_localization_scan(c4, 2)
        assert all(e.empty and e.vertex_count == 0 for e in entries)
        assert all(e.in_lower_class is None for e in entries)


class TestTheoremReport:
    def test_all_true_instance(self, petersen_complement):
        rep = main_theorem_report(petersen_complement, 3)
        assert rep.all_equal and rep.all_true
        assert rep.r == 2
        assert rep.witnesses == {}

    def test_all_false_with_witnesses(self, petersen_complement):
        rep = main_theorem_report(petersen_complement, 4)
        assert rep.all_equal and not rep.all_true
        assert set(rep.witnesses) == {"cond_a", "cond_b", "cond_c", "cond_d"}

    def test_path_fails_every_condition(self, p4):
        rep = main_theorem_report(p4, 1)
        assert rep.all_equal and not rep.all_true

    def test_catalog_equivalence_n4(self):
        for g in small_catalog(4):
            for p in (1, 2):
                assert main_theorem_report(g, p).all_equal

    def test_blowup_instances(self):
        # n = 14 at q = 2 is past the oracle guard but its independent
        # set space is tiny, so the literal route stays cheap
        for q in (1, 2):
            g = generate(f"c7_blowup:q={q}").graph
            rep = main_theorem_report(g, q, allow_large=True)
            assert rep.all_true
            assert not main_theorem_report(g, q + 1, allow_large=True).all_true


class TestGorenstein:
    def test_c5_positive(self, c5):
        rep = gorenstein_combinatorial_check(c5)
        assert rep.applicable and rep.all_equal
        assert rep.triangle_free_w2 is True

    def test_c7_negative(self, c7):
        rep = gorenstein_combinatorial_check(c7)
        assert rep.applicable and rep.all_equal
        assert rep.triangle_free_w2 is False

    def test_c4_negative(self, c4):
        rep = gorenstein_combinatorial_check(c4)
        assert rep.applicable and rep.all_equal
        assert rep.triangle_free_w2 is False

    def test_isolated_vertex_inapplicable(self):
        g = Graph.from_edges(3, [(0, 1)])
        rep = gorenstein_combinatorial_check(g)
        assert not rep.applicable

    def test_catalog_routes_agree(self):
        for g in small_catalog(5):
            rep = gorenstein_combinatorial_check(g)
            if rep.applicable:
                assert rep.all_equal
