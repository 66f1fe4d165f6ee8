"""Family generator tests.

Labelings are frozen, so expectations here are literal edge sets.  The
structural invariants cross two construction routes: the blowup family
against the generic product, and the clique union against the
multipartite complement.
"""

import pytest

from wellcov import (
    FamilySpec,
    complement,
    generate,
    lexicographic_product,
)
from tests import _naive


class TestParse:
    def test_bare_name(self):
        spec = FamilySpec.parse("petersen")
        assert spec.name == "petersen" and spec.params == ()

    def test_single_param(self):
        spec = FamilySpec.parse("cycle:n=7")
        assert spec.param("n") == 7

    def test_dash_alias(self):
        assert FamilySpec.parse("petersen-complement").name == "petersen_complement"
        assert FamilySpec.parse("c7-blowup:q=2").name == "c7_blowup"

    def test_list_param(self):
        spec = FamilySpec.parse("complete_multipartite:parts=3,3,2")
        assert spec.param("parts") == (3, 3, 2)

    def test_two_params(self):
        spec = FamilySpec.parse("disjoint_cliques:r=3,p=2")
        assert spec.param("r") == 3 and spec.param("p") == 2

    @pytest.mark.parametrize("bad", [
        "nosuch", "cycle", "cycle:m=7", "cycle:n=x", "cycle:n=7,n=8",
        "petersen:n=1", "cycle:n=2", "c7_blowup:q=0", "path:n=0",
        "complete_multipartite:parts=", "disjoint_cliques:r=3",
    ])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            generate(bad)


class TestFrozenLabelings:
    def test_cycle(self):
        g = generate("cycle:n=4").graph
        assert {e.endpoints() for e in g.edges()} == {(0, 1), (1, 2), (2, 3), (0, 3)}

    def test_path(self):
        g = generate("path:n=3").graph
        assert {e.endpoints() for e in g.edges()} == {(0, 1), (1, 2)}
        assert generate("path:n=1").graph.n == 1

    def test_complete(self):
        g = generate("complete:n=4").graph
        assert g.is_complete() and g.edge_count == 6

    def test_complete_multipartite(self):
        fam = generate("complete_multipartite:parts=2,2")
        assert [c.to_tuple() for c in fam.classes] == [(0, 1), (2, 3)]
        assert {e.endpoints() for e in fam.graph.edges()} == {
            (0, 2), (0, 3), (1, 2), (1, 3)}

    def test_petersen(self):
        g = generate("petersen").graph
        outer = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
        spokes = {(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)}
        inner = {(5, 7), (7, 9), (6, 9), (6, 8), (5, 8)}
        assert {e.endpoints() for e in g.edges()} == outer | spokes | inner

    def test_disjoint_cliques(self):
        fam = generate("disjoint_cliques:r=2,p=3")
        assert [c.to_tuple() for c in fam.classes] == [(0, 1, 2), (3, 4, 5)]
        assert {e.endpoints() for e in fam.graph.edges()} == {
            (0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}


class TestInvariants:
    def test_petersen_is_3_regular_girth5(self):
        g = generate("petersen").graph
        assert g.n == 10 and g.edge_count == 15
        assert all(g.degree(v) == 3 for v in range(10))
        # nonadjacent vertices share exactly one neighbor, adjacent none
        for u in range(10):
            for v in range(u + 1, 10):
                common = len(g.neighborhood(u) & g.neighborhood(v))
                assert common == (0 if g.has_edge(u, v) else 1)

    def test_petersen_complement_matches(self):
        g = generate("petersen_complement").graph
        assert g.adj == complement(generate("petersen").graph).adj

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_blowup_agrees_with_product(self, q):
        fam = generate(f"c7_blowup:q={q}")
        prod = lexicographic_product(generate("cycle:n=7").graph, q)
        assert fam.graph.adj == prod.graph.adj
        assert [c.bits for c in fam.classes] == [c.bits for c in prod.classes]

    @pytest.mark.parametrize("r,p", [(2, 2), (3, 2), (2, 3)])
    def test_clique_union_is_multipartite_complement(self, r, p):
        union = generate(f"disjoint_cliques:r={r},p={p}").graph
        parts = ",".join([str(p)] * r)
        multi = generate(f"complete_multipartite:parts={parts}").graph
        assert complement(union).adj == multi.adj

    def test_multipartite_independence(self):
        fam = generate("complete_multipartite:parts=3,2")
        assert _naive.maximal_independent_sets(fam.graph) == [(0, 1, 2), (3, 4)]
