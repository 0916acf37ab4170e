"""
Acceptance-scale checks: the separating families, oracle equivalence over
the small-graph catalog, large random sweeps and the desk-scale protocol.

Run with ``pytest -m slow``.
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gbounds.bounds.domination import (
    bipartite_sweep,
    gamma_cssf,
    gamma_hm1,
    gamma_hm2,
    gamma_hm3,
)
from gbounds.bounds.factory import INDEPENDENCE_TABLE
from gbounds.bounds.independence import alpha_acl, alpha_cw, alpha_hm, alpha_hr, alpha_s
from gbounds.core.graph import find_bipartition
from gbounds.core.named import complete_bipartite, cycle, path, small_graph_catalog, star
from gbounds.experiment import (
    CEIL,
    FLOOR,
    EvaluationOptions,
    ProtocolConfig,
    evaluate_graph,
    find_witnesses,
    run_protocol,
)
from gbounds.oracle import VerificationOptions, exhaustive_bip_distribution, verify_graph
from gbounds.randgraph import RngConfig, draw_sample

pytestmark = pytest.mark.slow


class TestSeparatingFamilies:
    """Test cases for the graphs that separate the bounds."""

    @pytest.mark.parametrize("m", [100, 2500, 10**4])
    def test_star(self, m):
        """Test gamma_CSSF > 3m/4 and gamma_HM1 < 2 sqrt(m) on K_{1,m}."""
        g = star(m)
        assert gamma_cssf(g).value > Fraction(3 * m, 4)
        hm1 = gamma_hm1(g).value
        assert hm1 * hm1 < 4 * m

    @pytest.mark.parametrize("m", [50, 200])
    def test_balanced_complete_bipartite(self, m):
        """Test the lower bounds on K_{m,m}."""
        g = complete_bipartite(m, m)
        assert alpha_cw(g).value == Fraction(2 * m, m + 1)
        assert alpha_s(g).value == Fraction(2 * m, m + 1)
        assert alpha_acl(g).value < 4
        assert alpha_hr(g).value == 2
        assert alpha_hm(g).value >= Fraction(9 * m, 100)
        if m == 200:
            assert alpha_hm(g).value >= Fraction(m, 10)

    def test_unbalanced_complete_bipartite(self):
        """Test K_{2,1000}, where only the bipartite bound is tight."""
        g = complete_bipartite(2, 1000)
        assert gamma_hm3(g).value == 2
        assert gamma_hm1(g).value > 60
        assert gamma_hm2(g).value > 600
        assert gamma_cssf(g).value > 600


class TestOracleEquivalence:
    """Test cases for exact agreement with the exhaustive enumerations."""

    def test_catalog(self):
        """Test every graph in Gamma on at most six vertices."""
        checked = 0
        for g in small_graph_catalog(6):
            result = verify_graph(g)
            assert result.passed, [str(f) for f in result.failures]
            checked += 1
        assert checked == 137

    def test_full_side_coefficient(self, k22):
        """Test K_{2,2} at (2, 0), where the variance is exactly zero."""
        bip = find_bipartition(k22)
        assert exhaustive_bip_distribution(k22, bip, 2, 0).variance == 0

    def test_random_bipartite_grids(self):
        """Test k >= 0 and the oracle over full grids of 100 bipartite graphs."""
        rng = RngConfig(seed=2024, stream=(9,))
        options = VerificationOptions(distributions=frozenset({"bip"}), sandwich=False)
        checked = 0
        index = 0
        while checked < 100:
            sample = draw_sample("bip", 6 + index % 7, {"p_r": 0.3, "p_a": 0.0}, rng, index)
            index += 1
            bip = find_bipartition(sample.graph)
            if bip is None or min(len(bip.side_a), len(bip.side_b)) < 2:
                continue
            if max(len(bip.side_a), len(bip.side_b)) > 6:
                continue
            assert all(terms.k >= 0 for terms in bipartite_sweep(sample.graph, bip))
            assert verify_graph(sample.graph, options).passed
            checked += 1


class TestRandomSweeps:
    """Test cases for the sandwich and ordering over random graphs."""

    def test_sandwich(self):
        """Test the exact oracles against every bound on 500 small graphs."""
        rng = RngConfig(seed=17)
        options = VerificationOptions(distributions=frozenset())
        for index in range(500):
            n = 5 + index % 8
            if index % 2:
                sample = draw_sample("gnp", n, {"p": 0.2 + 0.1 * (index % 6)}, rng, index)
            else:
                sample = draw_sample("bip", n, {"p_r": 0.1, "p_a": 0.1}, rng, index)
            result = verify_graph(sample.graph, options)
            assert result.passed, [str(f) for f in result.failures]

    def test_upper_bound_order(self):
        """Test gamma_HM1 <= gamma_CSSF and gamma_HM1 <= gamma_HM2 up to n = 80."""
        rng = RngConfig(seed=31)
        for index in range(1000):
            n = 10 + index % 71
            model = "gnp" if index % 2 else "bip"
            params = {"p": 0.3} if model == "gnp" else {"p_r": 0.05, "p_a": 0.05}
            g = draw_sample(model, n, params, rng, index).graph
            hm1 = gamma_hm1(g).value
            assert hm1 <= gamma_cssf(g).value
            assert hm1 <= gamma_hm2(g).value


@pytest.fixture(scope="module")
def desk_runs(tmp_path_factory):
    """Both published grids at 50 graphs per cell."""
    runs = {}
    for model in ("gnp", "bip"):
        out_dir = tmp_path_factory.mktemp(f"protocol_{model}")
        config = ProtocolConfig.published_grid(model, 0.1, seed=7, out_dir=str(out_dir), workers=2)
        runs[model] = run_protocol(config)
    return runs


class TestDeskProtocol:
    """Test cases for the desk-scale random-graph protocol."""

    @pytest.mark.parametrize("model", ["gnp", "bip"])
    def test_forced_zero_cells(self, desk_runs, model):
        """Test that gamma_HM1 is never beaten by gamma_CSSF or gamma_HM2."""
        run = desk_runs[model]
        assert not run.failures
        assert run.domination.percentage("gamma_cssf", "gamma_hm1") == 0.0
        assert run.domination.percentage("gamma_hm2", "gamma_hm1") == 0.0

    def test_bands(self, desk_runs):
        """Test the loose bands around the published percentages."""
        gnp, bip = desk_runs["gnp"], desk_runs["bip"]
        assert bip.domination.percentage("gamma_hm1", "gamma_cssf") > 30
        assert gnp.domination.percentage("gamma_hm1", "gamma_cssf") < 15
        assert gnp.independence.percentage("alpha_acl", "alpha_hm") > 40

    def test_incomparability_witnesses(self, desk_runs):
        """Test that every ordered pair has a strict-win witness."""
        options = EvaluationOptions(oracle_max_n=0)
        corpus = list(desk_runs["gnp"].reports) + list(desk_runs["bip"].reports)
        for g in (star(20), path(9), cycle(9), complete_bipartite(50, 50)):
            corpus.append(evaluate_graph(g, options, graph_id=f"named:{g.n}:{g.edge_count}"))
        found = find_witnesses(corpus, INDEPENDENCE_TABLE, CEIL)
        found.update(find_witnesses(corpus, ("gamma_cssf", "gamma_hm2"), FLOOR))
        missing = [pair for pair, witness in found.items() if witness is None]
        assert not missing
