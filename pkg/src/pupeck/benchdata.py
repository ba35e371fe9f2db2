"""Benchmark tables for offline experiments.

wdbc is the real Wisconsin diagnostic breast cancer table re-exported
from scikit-learn (positive class = benign). The banknote and breastc
tables are deterministic synthetic stand-ins: the originals are not
redistributable inside this package, so these generators reproduce
their documented shape instead (row/column counts, class balance, mean
absolute correlation, and the qualitative geometry that matters here:
banknote's dominant 2-means split carries no class information, while
breastc's integer severity scores separate the classes cleanly).
"""

import csv
import os

import numpy as np

BANKNOTE_N, BANKNOTE_POS = 1372, 762
BREASTC_N, BREASTC_POS = 683, 444


def _exact_binary(n, n_ones, rng):
    y = np.zeros(n, dtype=np.int64)
    y[rng.permutation(n)[:n_ones]] = 1
    return y


def banknote_like(seed: int = 20250801):
    """5 continuous features, 1372 rows, 55.5% positive, mean |corr| near 0.43.

    A latent 50/50 blob indicator (independent of the class) shifts the
    first two features far apart, so 2-means recovers the blobs rather
    than the classes; the class signal lives in two other features.
    """
    rng = np.random.default_rng(seed)
    n = BANKNOTE_N
    y = _exact_binary(n, BANKNOTE_POS, rng)
    blob = _exact_binary(n, n // 2, rng)
    u = rng.standard_normal(n)
    z = rng.standard_normal((n, 5))
    X = np.column_stack([
        u + 0.72 * z[:, 0] + 2.4 * blob,
        u + 0.72 * z[:, 1] + 2.4 * blob,
        u + 0.68 * z[:, 2] + 1.9 * y,
        u + 0.68 * z[:, 3] - 1.6 * y,
        u + 0.88 * z[:, 4],
    ])
    names = [f"wave{j + 1}" for j in range(5)]
    return names, X, y


def breastc_like(seed: int = 20250802):
    """9 integer severity scores (1..10) plus one continuous column, 683 rows.

    Negatives (35%) carry high scores, positives low ones, with a shared
    per-row severity factor producing strong inter-feature correlation.
    """
    rng = np.random.default_rng(seed)
    n = BREASTC_N
    y = _exact_binary(n, BREASTC_POS, rng)
    severity = rng.standard_normal(n)
    base = 1.5 + 2.8 * (1 - y) + 1.2 * severity
    cols = []
    for _ in range(9):
        raw = base + 1.3 * rng.standard_normal(n)
        cols.append(np.clip(np.round(raw), 1, 10))
    cols.append(2.0 + 2.0 * (1 - y) + 1.2 * severity + 1.3 * rng.standard_normal(n))
    names = [f"score{j + 1}" for j in range(9)] + ["score_cont"]
    return names, np.column_stack(cols), y


def wdbc_table():
    """Real WDBC features; positive class (1) = benign, matching 357/212."""
    from sklearn.datasets import load_breast_cancer
    d = load_breast_cancer()
    names = [s.replace(" ", "_") for s in d.feature_names]
    return names, d.data.astype(float), d.target.astype(np.int64)


def _write_csv(path, names, X, y, target_name="class"):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(names + [target_name])
        for i in range(X.shape[0]):
            w.writerow([format(v, ".10g") for v in X[i]] + [int(y[i])])


def write_benchmark_csvs(out_dir):
    """Write banknote.csv, breastc.csv and wdbc.csv; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = {}
    for name, maker in (("banknote", banknote_like), ("breastc", breastc_like),
                        ("wdbc", wdbc_table)):
        path = os.path.join(out_dir, f"{name}.csv")
        names, X, y = maker()
        _write_csv(path, names, X, y)
        paths[name] = path
    return paths


if __name__ == "__main__":
    import argparse

    ap = argparse.ArgumentParser(description="Write the benchmark CSV tables")
    ap.add_argument("--out", default="data", help="output directory")
    args = ap.parse_args()
    for name, path in write_benchmark_csvs(args.out).items():
        print(f"wrote {path}")
