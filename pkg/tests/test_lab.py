from __future__ import annotations

import json

import pytest

from chromres import (
    EdgeSet,
    ExperimentConfig,
    GnpParams,
    Graph,
    concentration_sample,
    density_audit,
    generate_gnp,
    parse_config,
    run_experiment,
    union,
)
from chromres.cli import main as cli_main
from chromres.lab import comparable_table, csv_to_rows


def gnp(n, p, seed):
    return generate_gnp(GnpParams(n, p, seed))


class TestDensityAudit:
    def test_empty_graph_clean(self):
        report = density_audit(Graph.empty(20), 0.3, 2.0)
        assert report.violations == () and report.exhaustive

    def test_half_density_thresholds_are_vacuous(self):
        # at p = 1/2 every size below s_max already satisfies the bound,
        # so the exhaustive audit has nothing to enumerate
        report = density_audit(gnp(20, 0.5, 9), 0.5, 1.0)
        assert report.checked_sizes == ()
        assert report.violations == ()

    def test_planted_clique_violates(self):
        g = union(Graph.empty(20), EdgeSet.from_pairs(
            (u, v) for u in range(6) for v in range(u + 1, 6)))
        report = density_audit(g, 0.1, 5.5)
        assert report.s_max >= 6
        assert report.bound_per_vertex * 6 < 15
        assert any(set(s) == set(range(6)) for s, _, _ in report.violations)
        # every reported violation recounts correctly
        for subset, size, edges in report.violations:
            mask = 0
            for v in subset:
                mask |= 1 << v
            recount = sum((g.rows[v] & mask).bit_count() for v in subset) // 2
            assert recount == edges > report.bound_per_vertex * size

    def test_reproducible_across_workers(self):
        g = union(gnp(18, 0.12, 4), EdgeSet.from_pairs(
            (u, v) for u in range(5) for v in range(u + 1, 5)))
        reports = [density_audit(g, 0.12, 5.0, workers=w) for w in (1, 2, 1)]
        assert reports[0] == reports[1] == reports[2]

    def test_sampled_mode_not_exhaustive(self):
        report = density_audit(gnp(40, 0.12, 7), 0.12, 5.0,
                               mode="sampled", samples=50, seed=3)
        assert not report.exhaustive

    def test_budget_guard(self):
        from chromres.lab import AuditBudgetError

        g = gnp(26, 0.12, 1)
        with pytest.raises(AuditBudgetError):
            density_audit(g, 0.12, 8.0, exhaustive_budget=1000)

    def test_needs_np_above_one(self):
        with pytest.raises(ValueError):
            density_audit(Graph.empty(5), 0.1, 1.0)


class TestConcentrationSample:
    def test_zero_trials_empty_summary(self):
        summary = concentration_sample(40, 0.5, 1.0, 4.0, trials=0, seed=1)
        assert summary.trials == 0 and summary.ratios == ()
        assert summary.mean_ratio is None

    def test_degenerate_near_empty_graph(self):
        # n=3, p ~ 0: k0 = 2, the family is all C(3,2) pairs and mu ~ 3
        summary = concentration_sample(3, 1e-9, 1.0, 4.0, trials=5, seed=2)
        assert summary.k0 == 2
        for r in summary.ratios:
            assert r == pytest.approx(1.0, abs=1e-6)

    def test_deterministic(self):
        a = concentration_sample(20, 0.5, 1.0, 4.0, trials=8, seed=5)
        b = concentration_sample(20, 0.5, 1.0, 4.0, trials=8, seed=5)
        assert a == b

    def test_summary_shape(self):
        s = concentration_sample(20, 0.5, 1.0, 40.0, trials=10, seed=3)
        assert len(s.ratios) == 10 and len(s.quantiles) == 5
        assert s.quantiles[0] <= s.quantiles[2] <= s.quantiles[4]
        assert 0.0 <= s.frac_below_three_fifths <= 1.0

    def test_frozen_fixture_with_active_deletion(self):
        # regression pin at a cap where the deletion machinery actually
        # bites (multiplier 40 -> cap ~9.6, partial retention)
        import pathlib

        fixture = json.loads(
            (pathlib.Path(__file__).parent / "data"
             / "concentration_fixture_cap40.json").read_text())
        fresh = concentration_sample(40, 0.5, 1.0, 40.0, trials=50, seed=1)
        assert json.loads(json.dumps(fresh.to_json())) == fixture


CONFIG_TEXT = """
# three-row smoke sweep
n = 30
p = 0.5
seeds = 0..2
strategy = none
epsilon = 1.0
theta = 1.0
exact_limit = 0
"""


class TestExperiment:
    def test_parse_config(self):
        config = parse_config(CONFIG_TEXT)
        assert config.n_list == (30,)
        assert config.seeds == (0, 1, 2)
        assert config.strategy == "none"

    def test_parse_config_strategy_params_and_knobs(self):
        config = parse_config(
            "n=20\np=0.5\nseeds=1,2\nstrategy=random_budget\n"
            "strategy.m=5\nknobs.family_size_limit=40\n")
        assert config.params_dict() == {"m": 5.0}
        assert config.knobs.family_size_limit == 40

    def test_parse_config_rejects_unknown(self):
        with pytest.raises(ValueError):
            parse_config("n=10\np=0.5\nseeds=1\nwat=4\n")

    def test_rows_verify(self):
        rows = run_experiment(parse_config(CONFIG_TEXT))
        assert len(rows) == 3
        for row in rows:
            assert row["error"] == ""
            assert row["verify_ok"] is True
            assert row["edges_added"] == 0

    def test_planted_clique_rows_have_clique_floor(self):
        config = parse_config(
            "n=60\np=0.5\nseeds=0,1\nstrategy=plant_clique\nstrategy.t=12\n"
            "exact_limit=0\n")
        for row in run_experiment(config):
            assert row["error"] == ""
            assert row["dsatur_colors"] >= 12

    def test_planted_clique_at_n150_default_size(self):
        # default t = ceil(n/log_b(np)) = 25 at (150, 0.5); the planted
        # clique pins dsatur at or above t on every row
        config = parse_config(
            "n=150\np=0.5\nseeds=0,1\nstrategy=plant_clique\nexact_limit=0\n")
        for row in run_experiment(config):
            assert row["error"] == ""
            assert row["dsatur_colors"] >= 25

    def test_reproducible_across_workers_and_runs(self):
        config = parse_config(CONFIG_TEXT)
        t1 = comparable_table(run_experiment(config, workers=1))
        t2 = comparable_table(run_experiment(config, workers=3))
        assert t1 == t2

    def test_csv_json_roundtrip(self, tmp_path):
        csv_path = tmp_path / "rows.csv"
        json_path = tmp_path / "rows.json"
        config = parse_config(
            CONFIG_TEXT + f"csv = {csv_path}\njson = {json_path}\n")
        rows = run_experiment(config)
        parsed = csv_to_rows(csv_path.read_text())
        assert comparable_table(parsed) == comparable_table(rows)
        payload = json.loads(json_path.read_text())
        assert comparable_table(payload["rows"]) == comparable_table(rows)
        assert payload["rows"][0]["trace"] is not None

    def test_per_row_error_capture(self):
        config = parse_config(
            "n=6\np=0.5\nseeds=0\nstrategy=random_budget\nstrategy.m=900\n")
        rows = run_experiment(config)
        assert len(rows) == 1
        assert "ValueError" in rows[0]["error"]

    def test_config_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(n_list=(), p_list=(0.5,), seeds=(1,))
        with pytest.raises(ValueError):
            ExperimentConfig(n_list=(5,), p_list=(0.5,), seeds=(1, 1))
        with pytest.raises(ValueError):
            ExperimentConfig(n_list=(5,), p_list=(0.5,), seeds=(1,),
                             strategy="nope")


class TestCli:
    def test_generate_and_color(self, tmp_path, capsys):
        graph_path = tmp_path / "g.txt"
        assert cli_main(["generate", "--n", "20", "--p", "0.5", "--seed", "3",
                         "--out", str(graph_path)]) == 0
        assert cli_main(["color", str(graph_path), "--method", "dsatur"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["num_colors"] >= 1

    def test_exact_color_c5(self, tmp_path, capsys):
        p = tmp_path / "c5.txt"
        p.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        assert cli_main(["color", str(p), "--method", "exact"]) == 0
        assert json.loads(capsys.readouterr().out)["chi"] == 3

    def test_resilience_c5(self, tmp_path, capsys):
        p = tmp_path / "c5.txt"
        p.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        assert cli_main(["resilience", str(p), "--chi-cap", "3",
                         "--m-max", "5"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["result"] == 3 and len(out["witness_edges"]) == 3

    def test_isets_and_attack(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        assert cli_main(["generate", "--n", "12", "--p", "0.5", "--seed", "1",
                         "--out", str(p)]) == 0
        assert cli_main(["isets", str(p), "--k", "3"]) == 0
        fam = json.loads(capsys.readouterr().out)
        assert fam["k"] == 3
        assert cli_main(["attack", str(p), "--strategy", "plant_clique",
                         "--t", "5"]) == 0
        wrapper = json.loads(capsys.readouterr().out)
        assert wrapper["m"] == len(wrapper["edges"])

    def test_audit(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        assert cli_main(["generate", "--n", "18", "--p", "0.4", "--seed", "2",
                         "--out", str(p)]) == 0
        assert cli_main(["audit", str(p), "--p", "0.4", "--epsilon", "1.0"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["exhaustive"] is True

    def test_experiment_exit_codes(self, tmp_path):
        ok_cfg = tmp_path / "ok.cfg"
        ok_cfg.write_text("n=14\np=0.5\nseeds=0,1\nstrategy=none\nexact_limit=0\n")
        assert cli_main(["experiment", str(ok_cfg)]) == 0
        bad_cfg = tmp_path / "bad.cfg"
        bad_cfg.write_text(
            "n=6\np=0.5\nseeds=0\nstrategy=random_budget\nstrategy.m=900\n")
        assert cli_main(["experiment", str(bad_cfg)]) == 2
        assert cli_main(["experiment", str(tmp_path / "missing.cfg")]) == 1

    def test_dimacs_output(self, tmp_path):
        p = tmp_path / "g.col"
        assert cli_main(["generate", "--n", "8", "--p", "0.3", "--seed", "1",
                         "--out", str(p), "--format", "dimacs"]) == 0
        assert p.read_text().startswith("p edge 8 ")

    def test_witness_edge_list_output(self, tmp_path, capsys):
        p = tmp_path / "c5.txt"
        p.write_text("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n")
        out = tmp_path / "witness.txt"
        assert cli_main(["resilience", str(p), "--chi-cap", "3",
                         "--m-max", "5", "--edges-out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "5 3" and len(lines) == 4
