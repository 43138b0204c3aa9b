import json

import pytest

from oddpack import complete_bipartite, complete_graph, format_dimacs
from oddpack.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k6_file(tmp_path):
    target = tmp_path / "k6.col"
    target.write_text(format_dimacs(complete_graph(6)))
    return str(target)


@pytest.fixture
def k33_file(tmp_path):
    target = tmp_path / "k33.col"
    target.write_text(format_dimacs(complete_bipartite(3, 3)))
    return str(target)


class TestCoverCommands:
    def test_occ_json_shape(self, capsys, k6_file):
        code, out, _ = run(capsys, ["occ", "--input", k6_file, "--json"])
        assert code == 0
        data = json.loads(out)
        assert data == {"size": 4, "members": [1, 2, 3, 4], "verified": True}

    def test_occ_reads_stdin(self, capsys, monkeypatch):
        text = format_dimacs(complete_graph(5))
        code, out, _ = run(capsys, ["occ", "--json"], stdin=text,
                           monkeypatch=monkeypatch)
        assert code == 0
        assert json.loads(out)["size"] == 3

    def test_s_occ_uses_terminals(self, capsys, k6_file):
        code, out, _ = run(capsys, ["s-occ", "--input", k6_file,
                                    "--terminals", "1", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["size"] == 1 and data["members"] == [1]

    def test_nice_partition_cross_check(self, capsys, k6_file):
        code, out, _ = run(capsys, ["nice-partition", "--input", k6_file,
                                    "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["coverSize"] == data["tauWithin"] == 4

    def test_tau_and_critical(self, capsys, k6_file):
        code, out, _ = run(capsys, ["tau", "--input", k6_file, "--json"])
        assert code == 0 and json.loads(out) == {"tau": 5}
        code, out, _ = run(capsys, ["tau-critical", "--input", k6_file, "--json"])
        assert code == 0 and json.loads(out)["critical"] is True

    def test_tau_critical_negative_exit(self, capsys, tmp_path):
        target = tmp_path / "p3.col"
        target.write_text("p edge 3 2\ne 1 2\ne 2 3\n")
        code, out, _ = run(capsys, ["tau-critical", "--input", str(target),
                                    "--json"])
        assert code == 1
        assert json.loads(out)["critical"] is False


class TestPbmAndLinkage:
    def test_pbm_brute(self, capsys, k6_file):
        code, out, _ = run(capsys, ["pbm", "--input", k6_file,
                                    "--pairs", "1,2;3,4", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["present"] and data["verified"]
        assert set(data["edges"]) == {"1", "2"}

    def test_pbm_extract_methods(self, capsys, k6_file):
        for method in ("extract4k", "independent"):
            argv = ["pbm", "--input", k6_file, "--pairs", "1,2;3,4",
                    "--method", method, "--json"]
            code, out, _ = run(capsys, argv)
            if method == "independent":
                assert code == 2     # terminals are adjacent in K6
            else:
                assert code == 0
                assert json.loads(out)["verified"]

    def test_pbm_parity_subset(self, capsys, k6_file):
        code, out, _ = run(capsys, ["pbm", "--input", k6_file,
                                    "--pairs", "1,2;3,4",
                                    "--parity-set", "2", "--json"])
        assert code == 0
        assert set(json.loads(out)["edges"]) == {"2"}

    def test_pbm_absent_exit_one(self, capsys, tmp_path):
        # star: every edge of pair 2 touches the center, terminal of pair 1
        target = tmp_path / "star.col"
        target.write_text("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n")
        code, out, _ = run(capsys, ["pbm", "--input", str(target),
                                    "--pairs", "1,2;3,4", "--json"])
        assert code == 1
        assert json.loads(out) == {"method": "brute", "present": False}

    def test_linkage_and_parity_linkage(self, capsys, k6_file):
        code, out, _ = run(capsys, ["linkage", "--input", k6_file,
                                    "--pairs", "1,2;3,4", "--json"])
        assert code == 0 and json.loads(out)["present"]
        code, out, _ = run(capsys, ["parity-linkage", "--input", k6_file,
                                    "--pairs", "1,2;3,4",
                                    "--demands", "1:odd,2:even", "--json"])
        assert code == 0
        assert json.loads(out)["parities"] == ["odd", "even"]

    def test_parity_linkage_absent(self, capsys, k33_file):
        code, out, _ = run(capsys, ["parity-linkage", "--input", k33_file,
                                    "--pairs", "1,2", "--demands", "1:odd",
                                    "--json"])
        assert code == 1
        assert json.loads(out) == {"present": False}


class TestPackingCommands:
    def test_odd_z_paths_both_branches(self, capsys, k6_file):
        code, out, _ = run(capsys, ["odd-z-paths", "--input", k6_file,
                                    "--z", "1,2", "--ell", "1", "--json"])
        assert code == 0
        assert json.loads(out)["kind"] == "packing"
        code, out, _ = run(capsys, ["odd-z-paths", "--input", k6_file,
                                    "--z", "1,2", "--ell", "2", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "cover" and data["hittingSet"] == [1]

    def test_pack_present_and_absent(self, capsys, k6_file):
        code, out, _ = run(capsys, ["pack", "--input", k6_file,
                                    "--s", "1,2,3", "--k", "2", "--json"])
        assert code == 0 and len(json.loads(out)["cycles"]) == 2
        code, out, _ = run(capsys, ["pack", "--input", k6_file,
                                    "--s", "1", "--k", "2", "--json"])
        assert code == 1
        assert json.loads(out) == {"present": False, "k": 2}

    def test_dichotomy_flags(self, capsys, k6_file):
        code, out, _ = run(capsys, ["dichotomy", "--input", k6_file,
                                    "--s", "1,2,3,4,5,6", "--k", "2",
                                    "--measure-connectivity", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "packing" and data["connectivity"] == 5
        assert data["boundMet"] is True

    def test_dichotomy_bipartite_fields(self, capsys, k6_file):
        code, out, _ = run(capsys, ["dichotomy-bipartite", "--input", k6_file,
                                    "--s", "1,2,3,4,5,6", "--k", "2", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["tauK"] == 1 and data["relaxedBound"] == 3

    def test_triangles(self, capsys, k6_file, k33_file):
        code, out, _ = run(capsys, ["triangles", "--input", k6_file,
                                    "--k", "2", "--json"])
        assert code == 0 and len(json.loads(out)["cycles"]) == 2
        code, out, _ = run(capsys, ["triangles", "--input", k33_file,
                                    "--k", "1", "--json"])
        assert code == 1


class TestGen:
    def test_gen_dimacs_pipes_back(self, capsys):
        code, out, _ = run(capsys, ["gen", "--family", "tightCover",
                                    "--k", "2", "--tau", "2", "--side-size", "5"])
        assert code == 0
        assert out.startswith("c family tightCover\n")
        assert "c designated 6,7\n" in out
        from oddpack import parse_dimacs
        assert parse_dimacs(out).n == 10

    def test_gen_json_mode(self, capsys):
        code, out, _ = run(capsys, ["gen", "--family", "nonParityLinked",
                                    "--k", "2", "--side-size", "5", "--json"])
        assert code == 0
        data = json.loads(out)
        assert data["n"] == 10
        assert data["pairs"] == [[6, 8], [7, 9]]
        assert data["demands"] == {"1": "odd", "2": "odd"}

    def test_gen_random_needs_seed(self, capsys):
        code, _, err = run(capsys, ["gen", "--family", "randomGnp",
                                    "--n", "8", "--p", "0.5"])
        assert code == 2 and "seed" in err

    def test_gen_random_deterministic(self, capsys):
        argv = ["gen", "--family", "randomGnp", "--n", "8", "--p", "0.5",
                "--seed", "zed"]
        code1, out1, _ = run(capsys, argv)
        code2, out2, _ = run(capsys, argv)
        assert code1 == code2 == 0 and out1 == out2

    def test_gen_missing_parameters(self, capsys):
        code, _, err = run(capsys, ["gen", "--family", "tightCover", "--k", "2"])
        assert code == 2


class TestErrorsAndSweep:
    def test_bad_dimacs_exit_two(self, capsys, monkeypatch):
        code, _, err = run(capsys, ["occ"], stdin="garbage\n",
                           monkeypatch=monkeypatch)
        assert code == 2 and "error" in err

    def test_missing_file_exit_two(self, capsys):
        code, _, err = run(capsys, ["occ", "--input", "/no/such/file.col"])
        assert code == 2

    def test_vertex_out_of_range_exit_two(self, capsys, k6_file):
        code, _, err = run(capsys, ["pack", "--input", k6_file,
                                    "--s", "99", "--k", "1"])
        assert code == 2 and "99" in err

    def test_budget_exit_three(self, capsys, tmp_path):
        from oddpack import gen_tight_cover
        g, _ = gen_tight_cover(2, 2, 7)
        target = tmp_path / "tc.col"
        target.write_text(format_dimacs(g))
        code, _, err = run(capsys, ["occ", "--input", str(target),
                                    "--budget-nodes", "5"])
        assert code == 3 and "budget" in err

    def test_sweep_emits_ldjson_and_summary(self, capsys):
        code, out, _ = run(capsys, ["sweep", "erdos-gallai",
                                    "--max-n", "3", "--samples", "2"])
        assert code == 0
        lines = out.strip().split("\n")
        records, summary = lines[:-1], json.loads(lines[-1])
        assert summary["counterexamples"] == 0
        assert len(records) == summary["instances"]
        for line in records:
            assert json.loads(line)["verdict"] == "ok"

    def test_sweep_respects_config(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.ini"
        cfg.write_text("[erdos-gallai]\nmax_n = 3\nsamples = 1\n")
        code, out, _ = run(capsys, ["sweep", "erdos-gallai",
                                    "--config", str(cfg)])
        assert code == 0
        summary = json.loads(out.strip().split("\n")[-1])
        assert summary["options"]["max_n"] == 3
