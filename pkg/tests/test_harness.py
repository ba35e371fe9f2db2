import json
import os

import numpy as np
import pytest

from pupeck import cli, glm, harness
from pupeck.data import load_csv, preprocess
from pupeck.labelling import scar_label
from pupeck.metrics import accuracy, auc, confusion


# ---------------------------------------------------------------------------
# replication_count

def test_replication_count_small_table():
    assert harness.replication_count(32561, 5) == 100


def test_replication_count_large_table():
    assert harness.replication_count(10000, 100) == 10


def test_replication_count_row_rule():
    assert harness.replication_count(9999, 100) == 100


def test_replication_count_invalid():
    with pytest.raises(ValueError):
        harness.replication_count(0, 5)


# ---------------------------------------------------------------------------
# config plumbing

def test_canonical_method_aliases():
    assert harness.canonical_method("LASSCLUST_STRICT") == "strict_lassclust"
    assert harness.canonical_method("naive") == "naive"
    with pytest.raises(ValueError):
        harness.canonical_method("mystery")


def test_config_validation():
    with pytest.raises(ValueError):
        harness.ExperimentConfig(dataset_paths=[], c_list=[1.5])
    with pytest.raises(ValueError):
        harness.ExperimentConfig(dataset_paths=[], scheme="sometimes")
    with pytest.raises(ValueError):
        harness.ExperimentConfig(dataset_paths=[], split=1.0)


def test_stratified_split_keeps_labeled_positives_in_train():
    rng = np.random.default_rng(0)
    s = (rng.random(200) < 0.1).astype(int)
    tr, te = harness._stratified_split(s, 0.7, seed=1)
    assert np.sum(s[tr] == 1) >= 1
    assert sorted(np.concatenate([tr, te]).tolist()) == list(range(200))
    frac = np.sum(s[tr] == 0) / np.sum(s == 0)
    assert 0.65 <= frac <= 0.75


# ---------------------------------------------------------------------------
# run_experiment

@pytest.fixture(scope="module")
def tiny_grid(bench_dir):
    cfg = harness.ExperimentConfig(
        dataset_paths=[str(bench_dir / "breastc.csv")],
        scheme="scar", c_list=[0.5], q_list=[1.0], R=2,
        methods=["NAIVE", "CLUST"], master_seed=7, n_replications=3)
    return cfg, harness.run_experiment(cfg)


def test_row_count_matches_grid(tiny_grid):
    cfg, rows = tiny_grid
    # 1 dataset x 1 c x 3 reps x (naive + clust x 1 q)
    assert len(rows) == 3 * 2
    assert all(not r.error for r in rows)


def test_q_only_on_pecking_methods(tiny_grid):
    _, rows = tiny_grid
    for r in rows:
        if r.method == "naive":
            assert r.q is None
        else:
            assert r.q == 1.0


def test_metrics_in_unit_interval(tiny_grid):
    _, rows = tiny_grid
    for r in rows:
        assert 0.0 <= r.accuracy <= 1.0
        assert 0.0 <= r.f1 <= 1.0
        assert 0.0 <= r.auc <= 1.0
        assert r.fit_seconds >= 0.0


def test_naive_at_c_one_equals_supervised(bench_dir):
    cfg = harness.ExperimentConfig(
        dataset_paths=[str(bench_dir / "breastc.csv")],
        scheme="scar", c_list=[1.0], methods=["NAIVE"],
        master_seed=3, n_replications=1)
    row = harness.run_experiment(cfg)[0]

    ds = preprocess(load_csv(str(bench_dir / "breastc.csv"), "class"))
    name = "breastc"
    sa = scar_label(ds, 1.0, seed=harness._cell_seed(3, name, "scar", 1.0, 0, "label"))
    assert np.array_equal(sa.s, ds.y)  # c = 1 labels everything
    tr, te = harness._stratified_split(sa.s, 0.7,
                                       seed=harness._cell_seed(3, name, "scar", 1.0, 0, "split"))
    fit = glm.fit_logistic(ds.X[tr], ds.y[tr])
    post = glm.predict_posterior(fit, ds.X[te])
    cc = confusion(ds.y[te], (post >= 0.5).astype(int))
    assert row.accuracy == pytest.approx(accuracy(cc), abs=1e-12)
    assert row.auc == pytest.approx(auc(ds.y[te], post), abs=1e-12)


def test_error_rows_keep_run_alive(tmp_path):
    # a 12-row table with 2 positives: under c=0.3 some replications label
    # nobody, which must surface as error rows rather than aborting
    lines = ["a,b,class"]
    rng = np.random.default_rng(5)
    ys = [1, 1] + [0] * 10
    for i in range(12):
        lines.append(f"{rng.random():.6f},{rng.random():.6f},{ys[i]}")
    p = tmp_path / "sparse.csv"
    p.write_text("\n".join(lines) + "\n", encoding="utf-8")
    cfg = harness.ExperimentConfig(
        dataset_paths=[str(p)], scheme="scar", c_list=[0.3],
        methods=["NAIVE"], master_seed=1, n_replications=20,
        corr_threshold=1.0)
    rows = harness.run_experiment(cfg)
    assert len(rows) == 20
    assert any(r.error for r in rows)
    assert any(not r.error for r in rows)


def test_artif_token_synthesizes(bench_dir):
    cfg = harness.ExperimentConfig(
        dataset_paths=["artif"], scheme="nonscar", c_list=[0.5],
        methods=["NAIVE"], master_seed=2, n_replications=1)
    rows = harness.run_experiment(cfg)
    assert rows[0].dataset == "artif"
    assert not rows[0].error


# ---------------------------------------------------------------------------
# reports

def test_emit_single_row_summary(tmp_path):
    row = harness.ResultRow(dataset="d", scheme="scar", method="naive", c_target=0.5,
                            realized_c=0.5, q=None, replication_index=0,
                            accuracy=0.8, f1=0.7, auc=0.9, fit_seconds=0.1)
    paths = harness.emit_report([row], tmp_path)
    summary = harness.summary_from_rows([row])
    assert len(summary) == 1
    line = summary[0]
    assert line["accuracy_mean"] == 0.8 and line["accuracy_sd"] == 0.0
    assert line["f1_mean"] == 0.7 and line["auc_mean"] == 0.9
    assert os.path.exists(paths["timing"])


def test_summary_one_line_per_method_q(tiny_grid, tmp_path):
    _, rows = tiny_grid
    summary = harness.summary_from_rows(rows)
    keys = [(s["q"], s["method"]) for s in summary]
    assert keys == [(1.0, "clust"), (None, "naive")]


def test_summary_round_trip(tiny_grid, tmp_path):
    _, rows = tiny_grid
    paths = harness.emit_report(rows, tmp_path / "rep")
    regenerated = harness.load_raw_csv(paths["raw"])
    assert harness.summary_from_rows(regenerated) == harness.summary_from_rows(rows)


def test_raw_csv_has_no_timing_column(tiny_grid, tmp_path):
    _, rows = tiny_grid
    paths = harness.emit_report(rows, tmp_path / "rep2")
    header = open(paths["raw"], encoding="utf-8").readline().strip().split(",")
    assert "fit_seconds" not in header
    timing_header = open(paths["timing"], encoding="utf-8").readline().strip().split(",")
    assert "fit_seconds" in timing_header


def test_rerun_byte_identical_raw(bench_dir, tmp_path):
    cfg = harness.ExperimentConfig(
        dataset_paths=[str(bench_dir / "breastc.csv")],
        scheme="nonscar", c_list=[0.5], q_list=[1.0], R=2,
        methods=["NAIVE", "CLUST"], master_seed=13, n_replications=2)
    a = harness.emit_report(harness.run_experiment(cfg), tmp_path / "a")
    b = harness.emit_report(harness.run_experiment(cfg), tmp_path / "b")
    assert open(a["raw"], "rb").read() == open(b["raw"], "rb").read()


def test_emit_empty_rows_error(tmp_path):
    with pytest.raises(ValueError):
        harness.emit_report([], tmp_path)


# ---------------------------------------------------------------------------
# CLI surfaces

def test_cli_datasets_describe(bench_dir, capsys):
    rc = cli.main(["datasets", "describe", str(bench_dir / "banknote.csv"),
                   "--target", "class"])
    assert rc == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0].startswith("dataset,n_features,n_obs")
    cells = out[1].split(",")
    assert cells[0] == "banknote"
    assert cells[1] == "5" and cells[2] == "1372"
    assert float(cells[8]) == pytest.approx(0.43, abs=0.02)


def test_cli_run_and_summarize(bench_dir, tmp_path, capsys):
    cfg = {
        "dataset_paths": [str(bench_dir / "breastc.csv")],
        "scheme": "SCAR", "c_list": [0.8], "q_list": [1.0], "R": 2,
        "methods": ["NAIVE"], "master_seed": 4, "n_replications": 2,
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg), encoding="utf-8")
    out_dir = tmp_path / "out"
    rc = cli.main(["run", "--config", str(cfg_path), "--out", str(out_dir)])
    assert rc == 0
    capsys.readouterr()
    assert (out_dir / "results_raw.csv").exists()
    assert (out_dir / "summary.csv").exists()
    assert (out_dir / "timing.csv").exists()

    sum_dir = tmp_path / "resum"
    rc = cli.main(["summarize", "--raw", str(out_dir / "results_raw.csv"),
                   "--out", str(sum_dir)])
    assert rc == 0
    capsys.readouterr()
    original = (out_dir / "summary.csv").read_text(encoding="utf-8")
    regenerated = (sum_dir / "summary.csv").read_text(encoding="utf-8")
    assert original == regenerated
