"""Verification suite plumbing on small catalogs.

The full n = 6 sweep is exercised by the acceptance suite; here the
machinery itself is checked at n <= 4 where a run takes milliseconds.
"""

import pytest

from wellcov import (
    codec_suite,
    corollary_discrepancies,
    equivalence_discrepancies,
    examples_suite,
    generate,
    run_suite,
    sweep_catalog,
)
from wellcov.verify import catalog_suite


class TestPerGraphChecks:
    def test_clean_graph_yields_nothing(self, c5):
        assert equivalence_discrepancies(c5, (1, 2, 3)) == []
        assert corollary_discrepancies(c5, (1, 2, 3)) == []

    def test_records_carry_location(self, c5):
        recs = equivalence_discrepancies(c5, (1,))
        assert recs == []


class TestSweep:
    def test_small_sweep_clean(self):
        sweep = sweep_catalog(4)
        assert sweep.ok
        assert sweep.graphs_checked == 2 + 8 + 64 + 1
        assert sweep.discrepancies() == []

    def test_find_hits_at_n4(self):
        sweep = sweep_catalog(4)
        assert sorted(sweep.find_hits[(4, 2, 2)]) == ["CK", "CQ", "C`"]
        # the edgeless graph lands in the trivial p = 1 cell
        assert sweep.find_hits[(4, 4, 1)] == ["C?"]
        assert (4, 1, 4) not in sweep.find_hits


class TestSuites:
    def test_catalog_suite_lines(self):
        result, sweep = catalog_suite(4, (1, 2))
        assert result.passed
        assert sweep.ok
        keys = [line.key for line in result.lines]
        assert "deciders-agree" in keys
        assert "rigidity-find" in keys
        assert "sweep-runtime" in keys

    def test_examples_suite_passes(self):
        result = examples_suite()
        assert result.passed
        assert [line.key for line in result.lines] == [
            "petersen-complement", "c7-blowup"]

    def test_codec_suite_passes(self):
        assert codec_suite().passed

    def test_run_suite_dispatch(self):
        assert [r.name for r in run_suite("examples")] == ["examples"]
        with pytest.raises(ValueError):
            run_suite("nosuch")
