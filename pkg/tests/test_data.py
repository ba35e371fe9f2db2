import numpy as np
import pytest

from pupeck import glm
from pupeck.data import (Dataset, RawTable, artif_design, generate_artif, load_csv,
                         mean_abs_corr, preprocess, summarize)


def write_csv(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


def raw_from_dataset(ds):
    return RawTable(column_names=list(ds.feature_names),
                    columns=[ds.X[:, j] for j in range(ds.X.shape[1])],
                    n_rows=ds.X.shape[0], target_name="class", y=ds.y)


# ---------------------------------------------------------------------------
# load_csv

def test_load_csv_lexicographic_target(tmp_path):
    p = write_csv(tmp_path / "t.csv", "a,b,label\n1,2,yes\n3,4,no\n5,6,yes\n")
    raw = load_csv(p, "label")
    assert raw.n_rows == 3
    assert raw.y.tolist() == [1, 0, 1]  # "no" -> 0, "yes" -> 1
    assert raw.column_names == ["a", "b"]


def test_load_csv_categorical_feature_encoding(tmp_path):
    p = write_csv(tmp_path / "t.csv", "color,label\nred,0\nblue,1\ngreen,0\nblue,1\n")
    raw = load_csv(p, "label")
    # lexicographic levels: blue=0, green=1, red=2
    assert raw.columns[0].tolist() == [2.0, 0.0, 1.0, 0.0]


def test_load_csv_wrong_arity_row(tmp_path):
    p = write_csv(tmp_path / "t.csv", "a,b,label\n1,2,0\n1,2,3,1\n")
    with pytest.raises(ValueError, match="expected 3 fields"):
        load_csv(p, "label")


def test_load_csv_missing_cell_rejected(tmp_path):
    p = write_csv(tmp_path / "t.csv", "a,b,label\n1,,0\n2,3,1\n")
    with pytest.raises(ValueError, match="empty cell"):
        load_csv(p, "label")


def test_load_csv_nonbinary_target(tmp_path):
    p = write_csv(tmp_path / "t.csv", "a,label\n1,x\n2,y\n3,z\n")
    with pytest.raises(ValueError, match="distinct values"):
        load_csv(p, "label")


def test_load_csv_missing_file():
    with pytest.raises(OSError):
        load_csv("/nonexistent/nowhere.csv", "label")


def test_load_csv_missing_target_column(tmp_path):
    p = write_csv(tmp_path / "t.csv", "a,b\n1,2\n")
    with pytest.raises(ValueError, match="target column"):
        load_csv(p, "label")


def test_banknote_table_row_count(bench_dir):
    raw = load_csv(str(bench_dir / "banknote.csv"), "class")
    assert raw.n_rows == 1372


# ---------------------------------------------------------------------------
# preprocess

def make_raw(cols, y=None, names=None):
    cols = [np.asarray(c, dtype=float) for c in cols]
    n = len(cols[0])
    if y is None:
        y = np.arange(n) % 2
    return RawTable(column_names=names or [f"f{i}" for i in range(len(cols))],
                    columns=cols, n_rows=n, target_name="class",
                    y=np.asarray(y, dtype=np.int64))


def test_modal_share_boundary_retained():
    col = [1, 1, 1, 1, 1, 1, 1, 1, 1, 2]  # modal share exactly 0.9
    other = list(range(10))
    ds = preprocess(make_raw([col, other]), min_unique=2)
    assert "f0" in ds.feature_names


def test_modal_share_above_boundary_dropped():
    col = [1] * 19 + [2]  # modal share 0.95
    other = list(range(20))
    ds = preprocess(make_raw([col, other]), min_unique=2)
    assert "f0" not in ds.feature_names


def test_identical_features_keep_exactly_one():
    a = list(range(10))
    ds = preprocess(make_raw([a, a]), corr_threshold=0.9, min_unique=2)
    assert ds.feature_names == ["f0"]  # later-indexed duplicate dropped


def test_min_max_scaling_values():
    ds = preprocess(make_raw([[0.0, 5.0, 10.0]], y=[0, 1, 0]), min_unique=3)
    assert ds.X[:, 0].tolist() == [0.0, 0.5, 1.0]


def test_min_unique_filter():
    coarse = [1, 2, 1, 2, 1, 2, 1, 2, 1, 2]   # 2 unique values < 5
    fine = list(range(10))
    ds = preprocess(make_raw([coarse, fine]))
    assert ds.feature_names == ["f1"]


def test_all_features_eliminated_error():
    with pytest.raises(ValueError, match="eliminated"):
        preprocess(make_raw([[1, 2] * 5]))  # 2 uniques < default min_unique


def test_zero_variance_target_error():
    with pytest.raises(ValueError, match="target"):
        preprocess(make_raw([list(range(6))], y=[1] * 6))


def test_preprocess_idempotent():
    rng = np.random.default_rng(0)
    cols = [rng.normal(size=50), rng.normal(size=50), rng.normal(size=50)]
    cols.append(cols[0] * 0.999 + rng.normal(size=50) * 0.001)  # near-duplicate
    ds1 = preprocess(make_raw(cols))
    ds2 = preprocess(raw_from_dataset(ds1))
    assert ds2.feature_names == ds1.feature_names
    assert np.allclose(ds2.X, ds1.X, atol=1e-12)


def test_feature_order_is_subsequence():
    rng = np.random.default_rng(1)
    cols = [rng.normal(size=40) for _ in range(6)]
    cols[3] = cols[1] + rng.normal(size=40) * 1e-6  # forces a drop at index 3
    ds = preprocess(make_raw(cols))
    original = [f"f{i}" for i in range(6)]
    positions = [original.index(nm) for nm in ds.feature_names]
    assert positions == sorted(positions)


# ---------------------------------------------------------------------------
# summarize

def test_perfectly_correlated_pair_mac_one():
    a = np.linspace(0, 1, 10)
    ds = Dataset(X=np.column_stack([a, 1.0 - a]), y=np.arange(10) % 2,
                 feature_names=["a", "b"])  # rho = -1, |rho| = 1
    assert summarize(ds).mean_abs_corr == pytest.approx(1.0, abs=1e-12)


def test_banknote_mean_abs_corr(banknote_ds):
    sm = summarize(banknote_ds)
    assert sm.mean_abs_corr == pytest.approx(0.43, abs=0.02)
    assert sm.n_obs == 1372 and sm.n_features == 5
    assert sm.n_pos == 762 and sm.n_neg == 610
    assert sm.pos_pct == pytest.approx(55.54, abs=0.01)


def test_independent_gaussians_mac_near_zero():
    rng = np.random.default_rng(2)
    X = rng.standard_normal((10_000, 4))
    assert mean_abs_corr(X) == pytest.approx(0.0, abs=0.05)


def test_summary_count_identities(breastc_ds):
    sm = summarize(breastc_ds)
    assert sm.n_noncont + sm.n_cont == sm.n_features
    assert sm.n_neg + sm.n_pos == sm.n_obs
    assert sm.pos_pct == pytest.approx(100.0 * sm.n_pos / sm.n_obs)
    assert sm.n_noncont == 9 and sm.n_cont == 1


def test_single_feature_mac_flagged_zero():
    ds = Dataset(X=np.linspace(0, 1, 8)[:, None], y=np.arange(8) % 2, feature_names=["a"])
    with pytest.warns(UserWarning):
        assert summarize(ds).mean_abs_corr == 0.0


def test_mac_in_unit_interval(wdbc_ds, artif_ds):
    for ds in (wdbc_ds, artif_ds):
        assert 0.0 <= summarize(ds).mean_abs_corr <= 1.0


# ---------------------------------------------------------------------------
# generate_artif

def test_artif_positive_share(artif_ds):
    sm = summarize(artif_ds)
    assert sm.n_obs == 2000
    assert sm.n_features == 21
    assert abs(sm.pos_pct - 51.15) <= 3.0


def test_artif_zero_signal_symmetric():
    X, y, beta = artif_design(4000, 5, 1, seed=3, beta_coef=0.0)
    assert abs(y.mean() - 0.5) < 0.03


def test_artif_scaled_unit_range(artif_ds):
    assert np.allclose(artif_ds.X.min(axis=0), 0.0)
    assert np.allclose(artif_ds.X.max(axis=0), 1.0)


def test_artif_invalid_relevant_count():
    with pytest.raises(ValueError):
        artif_design(100, 3, 4, seed=0)


def test_artif_large_n_coefficient_recovery():
    X, y, beta = artif_design(100_000, 3, 1, seed=4)
    fit = glm.fit_logistic(X[:, :1], y)
    assert fit.beta[0] == pytest.approx(beta[0], rel=0.10)


def test_artif_determinism():
    d1 = generate_artif(seed=9)
    d2 = generate_artif(seed=9)
    assert np.array_equal(d1.X, d2.X) and np.array_equal(d1.y, d2.y)
