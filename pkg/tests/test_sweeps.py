import json

import pytest

from oddpack import SearchBudget, run_sweep, suite_names


def strip_timing(records):
    return [{k: v for k, v in r.items() if k != "seconds"} for r in records]


class TestRunSweep:
    def test_all_suites_registered(self):
        assert set(suite_names()) == {
            "observation2", "pbm-extractors", "geelen-dichotomy",
            "erdos-gallai", "tight-families", "twin-reduction",
            "konig-observation1", "dense-dichotomy-k1"}

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_sweep("made-up-suite")

    def test_unknown_option_rejected(self):
        with pytest.raises(ValueError):
            run_sweep("observation2", overrides={"bogus": 1})

    @pytest.mark.parametrize("suite,overrides", [
        ("observation2", {"max_n": 4, "samples": 2}),
        ("erdos-gallai", {"max_n": 4, "samples": 2}),
        ("twin-reduction", {"max_n": 4, "samples": 2}),
        ("konig-observation1", {"max_n": 4, "samples": 2}),
        ("geelen-dichotomy", {"max_n": 4, "samples": 2}),
        ("dense-dichotomy-k1", {"samples": 2}),
        ("tight-families", {"max_n": 5}),
    ])
    def test_small_runs_are_green(self, suite, overrides):
        report = run_sweep(suite, overrides=overrides)
        assert report.summary["counterexamples"] == 0
        assert report.summary["budget_exceeded"] == 0
        assert report.summary["ok"] == report.summary["instances"] > 0

    def test_pbm_suite_green_small(self):
        report = run_sweep("pbm-extractors", overrides={"max_n": 4, "samples": 2})
        assert report.summary["counterexamples"] == 0
        assert report.summary["ok"] == report.summary["instances"]

    def test_records_sorted_and_json_ready(self):
        report = run_sweep("erdos-gallai", overrides={"max_n": 3, "samples": 2})
        ids = [r["instance"] for r in report.records]
        assert ids == sorted(ids)
        for record in report.records:
            json.dumps(record)   # payloads must serialize

    def test_budget_object_controls_options(self):
        # a zero-node budget trips on the first search tick; bipartite
        # instances may finish without ticking, so only require some trips
        budget = SearchBudget(max_nodes=0)
        report = run_sweep("observation2", budget,
                           overrides={"max_n": 4, "samples": 0})
        assert report.summary["budget_exceeded"] > 0
        assert report.summary["counterexamples"] == 0
        assert (report.summary["budget_exceeded"] + report.summary["ok"]
                == report.summary["instances"])

    def test_parallel_matches_serial(self):
        serial = run_sweep("erdos-gallai", overrides={"max_n": 4, "samples": 2})
        parallel = run_sweep("erdos-gallai", overrides={"max_n": 4, "samples": 2},
                             workers=2)
        assert strip_timing(serial.records) == strip_timing(parallel.records)

    def test_summary_reports_options(self):
        report = run_sweep("observation2", overrides={"max_n": 3, "samples": 1})
        assert report.summary["options"]["max_n"] == 3
        assert report.summary["options"]["samples"] == 1

    def test_counterexamples_property(self):
        report = run_sweep("observation2", overrides={"max_n": 3, "samples": 1})
        assert report.counterexamples == ()


class TestConfigFile:
    def test_config_section_applies(self, tmp_path):
        cfg = tmp_path / "sweep.ini"
        cfg.write_text("[observation2]\nmax_n = 3\nsamples = 1\n")
        report = run_sweep("observation2", config_path=str(cfg))
        assert report.summary["options"]["max_n"] == 3
        assert report.summary["options"]["samples"] == 1

    def test_overrides_beat_config(self, tmp_path):
        cfg = tmp_path / "sweep.ini"
        cfg.write_text("[observation2]\nmax_n = 3\nsamples = 5\n")
        report = run_sweep("observation2", config_path=str(cfg),
                           overrides={"samples": 1})
        assert report.summary["options"]["samples"] == 1

    def test_env_var_is_picked_up(self, tmp_path, monkeypatch):
        cfg = tmp_path / "sweep.ini"
        cfg.write_text("[observation2]\nmax_n = 3\nsamples = 0\n")
        monkeypatch.setenv("ODDPACK_SWEEP_CONFIG", str(cfg))
        report = run_sweep("observation2")
        assert report.summary["options"]["max_n"] == 3

    def test_unreadable_config_rejected(self):
        with pytest.raises(ValueError):
            run_sweep("observation2", config_path="/nonexistent/sweep.ini")

    def test_bad_option_type_rejected(self, tmp_path):
        cfg = tmp_path / "sweep.ini"
        cfg.write_text("[observation2]\nmax_n = banana\n")
        with pytest.raises(ValueError):
            run_sweep("observation2", config_path=str(cfg))
