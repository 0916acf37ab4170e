"""
Tests for the seeded random graph models.
"""

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gbounds.core.errors import InvalidParameterError, RejectionCapError
from gbounds.core.formats import encode_graph6, read_graphs
from gbounds.core.graph import gamma_class
from gbounds.core.named import complete_bipartite
from gbounds.randgraph import (
    SIDE_DISTRIBUTION,
    RngConfig,
    batch_metadata,
    draw_sample,
    export_batch,
    generate_batch,
    sample_bip_perturbed,
    sample_gnp,
)


class TestRngConfig:
    """Test cases for the stream contract."""

    def test_same_index_same_stream(self):
        """Test that generators are pure functions of the seed tuple."""
        rng = RngConfig(seed=42, stream=(0, 3))
        first = rng.generator(5).random(4)
        second = rng.generator(5).random(4)
        assert first.tolist() == second.tolist()
        assert rng.generator(6).random(4).tolist() != first.tolist()

    def test_stream_words_matter(self):
        """Test that different cells draw from different streams."""
        left = RngConfig(seed=1, stream=(0, 0)).generator(0).random(3)
        right = RngConfig(seed=1, stream=(0, 1)).generator(0).random(3)
        assert left.tolist() != right.tolist()

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed):
        """Test the 64-bit seed range."""
        with pytest.raises(InvalidParameterError):
            RngConfig(seed=seed)

    def test_negative_stream_word(self):
        """Test that stream words must be non-negative."""
        with pytest.raises(InvalidParameterError):
            RngConfig(seed=0, stream=(-1,))


class TestModels:
    """Test cases for the gnp and bip models."""

    def test_gnp_deterministic(self):
        """Test that the same index reproduces the same graph."""
        rng = RngConfig(seed=7)
        assert sample_gnp(20, 0.3, rng, 4) == sample_gnp(20, 0.3, rng, 4)

    def test_gnp_in_gamma(self):
        """Test that accepted samples are connected and non-complete."""
        rng = RngConfig(seed=11)
        for index in range(20):
            g = sample_gnp(12, 0.3, rng, index)
            assert g.n == 12
            assert gamma_class(g).in_gamma

    def test_gnp_edge_count(self):
        """Test that the mean edge count of G(10, 0.5) is within 5 sigma of 22.5."""
        rng = RngConfig(seed=5)
        counts = [sample_gnp(10, 0.5, rng, index).edge_count for index in range(500)]
        sigma = (45 * 0.25 / 500) ** 0.5
        assert abs(sum(counts) / 500 - 22.5) <= 5 * sigma

    def test_bip_side_sizes(self):
        """Test that |A| stays in 1..n-1 and the sample lies in Gamma."""
        rng = RngConfig(seed=3)
        for index in range(30):
            sample = draw_sample("bip", 10, {"p_r": 0.1, "p_a": 0.05}, rng, index)
            assert 1 <= sample.side_a <= 9
            assert gamma_class(sample.graph).in_gamma

    def test_bip_without_noise_is_complete_bipartite(self):
        """Test that p_R = p_A = 0 gives K_{|A|, n-|A|}."""
        rng = RngConfig(seed=5)
        sample = draw_sample("bip", 8, {"p_r": 0.0, "p_a": 0.0}, rng, 0)
        assert sample.graph == complete_bipartite(sample.side_a, 8 - sample.side_a)
        assert sample.attempts == 1

    def test_bip_helper(self):
        """Test the convenience wrapper against draw_sample."""
        rng = RngConfig(seed=9)
        sample = draw_sample("bip", 10, {"p_r": 0.05, "p_a": 0.02}, rng, 2)
        assert sample_bip_perturbed(10, 0.05, 0.02, rng, 2) == sample.graph

    def test_rejection_cap(self):
        """Test that a hopeless cell gives up after the cap."""
        with pytest.raises(RejectionCapError) as exc_info:
            sample_gnp(10, 0.01, RngConfig(seed=0), 0, cap=3)
        assert exc_info.value.attempts == 3

    @pytest.mark.parametrize("p", [0.0, 1.0, 1.5, -0.2])
    def test_gnp_probability(self, p):
        """Test that p must lie strictly between 0 and 1."""
        with pytest.raises(InvalidParameterError):
            sample_gnp(10, p, RngConfig(seed=0), 0)

    def test_bip_probability(self):
        """Test that bip probabilities must lie in [0, 1]."""
        with pytest.raises(InvalidParameterError):
            draw_sample("bip", 10, {"p_r": 1.2, "p_a": 0.0}, RngConfig(seed=0), 0)

    def test_small_n(self):
        """Test that n < 3 is rejected."""
        with pytest.raises(InvalidParameterError):
            sample_gnp(2, 0.5, RngConfig(seed=0), 0)

    def test_unknown_model(self):
        """Test the error for an unknown model."""
        with pytest.raises(InvalidParameterError, match="Available"):
            draw_sample("ba", 10, {}, RngConfig(seed=0), 0)


class TestBatches:
    """Test cases for batch generation and export."""

    def test_index_order(self):
        """Test that a batch starting mid-stream matches single draws."""
        rng = RngConfig(seed=21)
        batch = generate_batch("gnp", 15, {"p": 0.3}, rng, count=4, start=10)
        assert [s.index for s in batch] == [10, 11, 12, 13]
        assert batch[2].graph == sample_gnp(15, 0.3, rng, 12)

    @pytest.mark.slow
    def test_workers_do_not_change_output(self):
        """Test that a pool of workers reproduces the sequential batch."""
        rng = RngConfig(seed=8)
        params = {"p_r": 0.05, "p_a": 0.05}
        sequential = generate_batch("bip", 12, params, rng, count=6)
        parallel = generate_batch("bip", 12, params, rng, count=6, workers=2)
        assert [s.graph for s in sequential] == [s.graph for s in parallel]

    def test_metadata(self):
        """Test the provenance recorded for a bip batch."""
        rng = RngConfig(seed=4)
        params = {"p_r": 0.1, "p_a": 0.1}
        batch = generate_batch("bip", 9, params, rng, count=3)
        meta = batch_metadata("bip", 9, params, rng, batch)
        assert meta["indices"] == [0, 1, 2]
        assert meta["rng"]["seed"] == 4
        assert meta["side_distribution"] == SIDE_DISTRIBUTION
        assert meta["side_sizes"] == [s.side_a for s in batch]
        assert "side_sizes" not in batch_metadata("gnp", 9, {"p": 0.5}, rng, [])

    def test_export(self, tmp_path):
        """Test the graph6 file and its JSON sidecar, with a dotted stem."""
        rng = RngConfig(seed=2)
        batch = generate_batch("gnp", 10, {"p": 0.4}, rng, count=3)
        meta = batch_metadata("gnp", 10, {"p": 0.4}, rng, batch)
        graph_path, meta_path = export_batch(batch, str(tmp_path / "out" / "gnp_p0.4"), meta)
        assert graph_path.name == "gnp_p0.4.g6"
        assert meta_path.name == "gnp_p0.4.json"
        read_back = [g for _, g in read_graphs(str(graph_path))]
        assert [encode_graph6(g) for g in read_back] == [encode_graph6(s.graph) for s in batch]
        assert json.loads(meta_path.read_text())["model"] == "gnp"
