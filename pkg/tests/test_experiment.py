"""
Tests for bound reports, comparison matrices and the protocol runner.
"""

import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import pandas as pd
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gbounds.bounds.base import LOWER, UPPER, BoundValue
from gbounds.core.errors import GraphFormatError, InvalidParameterError, NotInGammaError
from gbounds.core.formats import parse_graph6
from gbounds.core.named import star
from gbounds.experiment import (
    CEIL,
    FLOOR,
    BoundReport,
    EvaluationOptions,
    ProtocolCell,
    ProtocolConfig,
    compare,
    compare_domination,
    compare_independence,
    evaluate_graph,
    find_witnesses,
    iter_reports,
    published_cells,
    read_reports,
    run_protocol,
    save_reports,
    write_reports,
)


def _report(graph_id: str, **values: Fraction) -> BoundReport:
    bounds = {}
    for name, value in values.items():
        kind = UPPER if name.startswith("gamma") else LOWER
        bounds[name] = BoundValue(name=name, kind=kind, value=Fraction(value))
    return BoundReport(graph_id=graph_id, n=5, m=4, bounds=bounds)


class TestEvaluateGraph:
    """Test cases for per-graph evaluation."""

    def test_path(self, p3):
        """Test the report of P_3, including the oracle."""
        report = evaluate_graph(p3, graph_id="p3")
        assert report.graph6 == "Bg"
        assert report.value("gamma_hm1") == Fraction(3, 2)
        assert report.integered("gamma_cssf") == 1
        assert report.integered("alpha_cw") == 2
        assert "gamma_hm3" not in report.bounds
        assert report.oracle == {"gamma": 1, "alpha": 2}

    def test_bipartite_gets_hm3(self, k22):
        """Test that gamma_HM3 appears for a graph with two sides of size 2."""
        assert evaluate_graph(k22).value("gamma_hm3") == 2

    def test_subset_without_oracle(self, c5):
        """Test a bound selection with the oracle disabled."""
        options = EvaluationOptions(bounds=("alpha_hr",), oracle_max_n=0)
        report = evaluate_graph(c5, options)
        assert list(report.bounds) == ["alpha_hr"]
        assert report.oracle is None

    def test_large_graph_omits_graph6(self):
        """Test that graph6 is dropped above 512 vertices."""
        options = EvaluationOptions(bounds=("alpha_cw",), oracle_max_n=0)
        report = evaluate_graph(star(600), options)
        assert report.graph6 is None

    def test_not_in_gamma(self):
        """Test that K_3 is refused."""
        with pytest.raises(NotInGammaError):
            evaluate_graph(parse_graph6("Bw"))


class TestReportPersistence:
    """Test cases for the JSON-lines report format."""

    def test_write_and_read(self, p3, c4):
        """Test that records survive a write and read, with the meta line skipped."""
        reports = [evaluate_graph(p3, graph_id="a"), evaluate_graph(c4, graph_id="b")]
        handle = io.StringIO()
        assert write_reports(handle, reports, meta={"seed": 1}) == 2
        lines = handle.getvalue().splitlines()
        assert json.loads(lines[0]) == {"meta": {"seed": 1}}
        handle.seek(0)
        loaded = list(iter_reports(handle))
        assert [r.graph_id for r in loaded] == ["a", "b"]
        assert loaded[0].value("gamma_hm1") == Fraction(3, 2)
        assert loaded[0].bounds["gamma_cssf"].argopt == 1
        assert loaded[1].oracle == reports[1].oracle

    def test_record_fields(self, k22):
        """Test the serialized form of a bipartite argopt."""
        record = evaluate_graph(k22, graph_id="k22").to_record()
        entry = record["bounds"]["gamma_hm3"]
        assert (entry["num"], entry["den"]) == (2, 1)
        assert isinstance(entry["argopt"], list)
        assert "timings" not in record

    def test_timings_opt_in(self, p3):
        """Test that timings are written only when requested."""
        report = evaluate_graph(p3, EvaluationOptions(timings=True))
        assert set(report.to_record()["timings"]) == set(report.bounds)

    def test_bad_line(self):
        """Test the line number of a malformed record."""
        handle = io.StringIO('{"meta": {}}\n\nnot json\n')
        with pytest.raises(GraphFormatError) as exc_info:
            list(iter_reports(handle))
        assert exc_info.value.line == 3

    @pytest.mark.parametrize("payload", ["5", "[1, 2]", "\"meta\"", "null"])
    def test_non_object_line(self, payload):
        """Test that a JSON value other than an object is a format error."""
        handle = io.StringIO('{"meta": {}}\n' + payload + "\n")
        with pytest.raises(GraphFormatError) as exc_info:
            list(iter_reports(handle))
        assert exc_info.value.line == 2

    def test_unknown_bound_name(self):
        """Test that a record naming an unknown bound is rejected."""
        record = {"graph_id": "x", "n": 3, "m": 2, "bounds": {"gamma_zz": {"num": 1, "den": 1}}}
        with pytest.raises(GraphFormatError):
            list(iter_reports(io.StringIO(json.dumps(record) + "\n")))

    def test_save_creates_directories(self, tmp_path, p3):
        """Test save_reports and read_reports on disk."""
        target = tmp_path / "nested" / "reports.jsonl"
        save_reports(str(target), [evaluate_graph(p3, graph_id="p3")])
        assert [r.graph_id for r in read_reports(str(target))] == ["p3"]


class TestCompare:
    """Test cases for the strict-win matrices."""

    def test_floor_rule(self):
        """Test that equal floors are not wins."""
        reports = [
            _report("g1", gamma_cssf=Fraction(5, 2), gamma_hm1=Fraction(3, 2), gamma_hm2=2),
            _report("g2", gamma_cssf=Fraction(5, 2), gamma_hm1=Fraction(5, 2), gamma_hm2=3),
        ]
        matrix = compare_domination(reports)
        assert matrix.wins[("gamma_hm1", "gamma_cssf")] == 1
        assert matrix.wins[("gamma_cssf", "gamma_hm2")] == 1
        assert matrix.wins[("gamma_hm2", "gamma_cssf")] == 0
        assert matrix.percentage("gamma_hm1", "gamma_cssf") == 50.0
        assert matrix.percentage("gamma_hm1", "gamma_hm1") is None

    def test_ceil_rule(self):
        """Test the ceiled comparison of lower bounds."""
        reports = [
            _report(
                "g1",
                alpha_acl=Fraction(5, 2),
                alpha_s=3,
                alpha_hr=2,
                alpha_hm=Fraction(21, 10),
            )
        ]
        matrix = compare_independence(reports)
        assert matrix.wins[("alpha_hm", "alpha_hr")] == 1
        assert matrix.wins[("alpha_acl", "alpha_s")] == 0
        assert matrix.wins[("alpha_s", "alpha_acl")] == 0

    def test_catalog_has_no_forced_wins(self, catalog5):
        """Test that gamma_HM1 is never beaten by gamma_CSSF or gamma_HM2."""
        reports = [evaluate_graph(g, EvaluationOptions(oracle_max_n=0)) for g in catalog5]
        matrix = compare_domination(reports)
        assert matrix.wins[("gamma_cssf", "gamma_hm1")] == 0
        assert matrix.wins[("gamma_hm2", "gamma_hm1")] == 0

    def test_order_independent(self, catalog5):
        """Test that shuffling the corpus does not change the counts."""
        reports = [evaluate_graph(g, EvaluationOptions(oracle_max_n=0)) for g in catalog5]
        forward = compare_independence(reports)
        backward = compare_independence(list(reversed(reports)))
        assert forward.wins == backward.wins

    def test_empty_corpus(self):
        """Test that an empty corpus is rejected."""
        with pytest.raises(InvalidParameterError):
            compare_domination([])

    def test_missing_bound(self):
        """Test that a report without a table bound is rejected."""
        with pytest.raises(InvalidParameterError, match="lacks"):
            compare_domination([_report("g", gamma_cssf=2, gamma_hm1=2)])

    def test_unknown_rule(self):
        """Test the error for an unknown rule."""
        reports = [_report("g", gamma_cssf=2, gamma_hm1=2)]
        with pytest.raises(InvalidParameterError):
            compare(reports, ["gamma_cssf", "gamma_hm1"], "round")

    def test_frame_and_csv(self, tmp_path):
        """Test the labelled frame and its CSV form."""
        reports = [
            _report("g1", gamma_cssf=3, gamma_hm1=Fraction(3, 2), gamma_hm2=2),
            _report("g2", gamma_cssf=3, gamma_hm1=3, gamma_hm2=3),
            _report("g3", gamma_cssf=3, gamma_hm1=3, gamma_hm2=3),
        ]
        matrix = compare_domination(reports)
        frame = matrix.to_frame()
        assert list(frame.columns) == ["γ_CSSF", "γ_HM1", "γ_HM2"]
        assert pd.isna(frame.loc["γ_HM1", "γ_HM1"])
        path = matrix.to_csv(str(tmp_path / "dom.csv"))
        read_back = pd.read_csv(path, index_col=0)
        assert read_back.loc["γ_HM1", "γ_CSSF"] == pytest.approx(33.3)
        assert matrix.to_dict()["percentages"]["gamma_hm1"]["gamma_cssf"] == 33.3
        assert matrix.to_dict()["percentages"]["gamma_hm1"]["gamma_hm1"] is None
        assert "n = 3" in str(matrix)


class TestWitnesses:
    """Test cases for witness search."""

    def test_first_sorted_id(self):
        """Test that the smallest graph id wins and missing pairs map to None."""
        reports = [
            _report("b", gamma_cssf=3, gamma_hm2=2),
            _report("a", gamma_cssf=3, gamma_hm2=2),
            _report("c", gamma_cssf=2),
        ]
        found = find_witnesses(reports, ["gamma_cssf", "gamma_hm2"], FLOOR)
        assert found[("gamma_hm2", "gamma_cssf")] == "a"
        assert found[("gamma_cssf", "gamma_hm2")] is None

    def test_ceil_witness(self):
        """Test a lower-bound witness."""
        reports = [_report("x", alpha_hr=3, alpha_hm=Fraction(5, 2))]
        found = find_witnesses(reports, ["alpha_hr", "alpha_hm"], CEIL)
        assert found == {("alpha_hr", "alpha_hm"): None, ("alpha_hm", "alpha_hr"): None}


class TestProtocol:
    """Test cases for the protocol configuration and runner."""

    def test_grid_sizes(self):
        """Test the published grids."""
        assert len(published_cells("gnp")) == 40
        assert len(published_cells("bip")) == 36
        with pytest.raises(InvalidParameterError):
            published_cells("ba")

    def test_scaled_grid(self, tmp_path):
        """Test the sample count of a scaled grid."""
        config = ProtocolConfig.published_grid("gnp", 0.1, seed=7, out_dir=str(tmp_path))
        assert config.samples == 50
        tiny = ProtocolConfig.published_grid("bip", 0.0001, seed=7, out_dir=str(tmp_path))
        assert tiny.samples == 1
        with pytest.raises(InvalidParameterError):
            ProtocolConfig.published_grid("gnp", 0, seed=7, out_dir=str(tmp_path))

    def test_cell_tag(self):
        """Test cell tags."""
        assert ProtocolCell(10, {"p": 0.2}).tag == "n10_p0.2"
        assert ProtocolCell(25, {"p_r": 0.05, "p_a": 0.1}).tag == "n25_p_a0.1_p_r0.05"

    def test_invalid_config(self, tmp_path):
        """Test the validation of a hand-built configuration."""
        with pytest.raises(InvalidParameterError):
            ProtocolConfig("ba", [ProtocolCell(10, {"p": 0.5})], 1, 0, str(tmp_path))
        with pytest.raises(InvalidParameterError):
            ProtocolConfig("gnp", [], 1, 0, str(tmp_path))
        with pytest.raises(InvalidParameterError):
            ProtocolConfig("gnp", [ProtocolCell(10, {"p": 0.5})], 0, 0, str(tmp_path))

    def test_provenance(self, tmp_path):
        """Test the provenance record of a bip configuration."""
        config = ProtocolConfig("bip", published_cells("bip")[:2], 3, 11, str(tmp_path))
        record = config.provenance()
        assert record["seed"] == 11
        assert record["samples_per_cell"] == 3
        assert record["grid"][0] == {"n": 10, "p_a": 0.02, "p_r": 0.02}
        assert "side_distribution" in record
        assert "out_dir" not in record

    def test_rerun_is_byte_identical(self, tmp_path):
        """Test that the same configuration writes the same files."""
        cells = [ProtocolCell(8, {"p": 0.4}), ProtocolCell(10, {"p": 0.5})]
        first = run_protocol(ProtocolConfig("gnp", cells, 3, 5, str(tmp_path / "one")))
        run_protocol(ProtocolConfig("gnp", cells, 3, 5, str(tmp_path / "two")))
        assert len(first.reports) == 6
        assert first.reports[0].graph_id == "gnp/n8_p0.4/0"
        for name in ("reports.jsonl", "domination.csv", "independence.csv", "provenance.json"):
            assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()

    def test_failed_cell_is_recorded(self, tmp_path):
        """Test that a cell exhausting the cap is skipped and recorded."""
        cells = [ProtocolCell(10, {"p": 0.01}), ProtocolCell(6, {"p": 0.6})]
        config = ProtocolConfig("gnp", cells, 2, 3, str(tmp_path), rejection_cap=5)
        run = run_protocol(config)
        assert len(run.failures) == 1
        assert run.failures[0]["cell"] == {"n": 10, "p": 0.01}
        assert len(run.reports) == 2
        provenance = json.loads((tmp_path / "provenance.json").read_text())
        assert provenance["failures"][0]["attempts"] == 5
        assert provenance["graphs"] == 2

    def test_all_cells_failed(self, tmp_path):
        """Test that no matrices are written when nothing was evaluated."""
        config = ProtocolConfig(
            "gnp", [ProtocolCell(10, {"p": 0.01})], 2, 3, str(tmp_path), rejection_cap=2
        )
        run = run_protocol(config)
        assert run.reports == []
        assert run.domination is None
        assert not (tmp_path / "domination.csv").exists()
        assert (tmp_path / "reports.jsonl").exists()
