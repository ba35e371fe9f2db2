"""Dataset ingestion, preprocessing and the synthetic `artif` generator.

Preprocessing applies, in order: a quasi-constant filter, a greedy
pairwise-correlation filter, min-max scaling, and a minimum-unique-values
filter. Categorical columns are integer-encoded by lexicographic level
order at load time.
"""

import csv
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .glm import sigmoid


@dataclass
class RawTable:
    """Pre-filter table: all columns numeric, target mapped to {0,1}."""
    column_names: list          # feature names, target excluded
    columns: list               # list of float arrays, one per feature
    n_rows: int
    target_name: str
    y: np.ndarray               # length-n vector in {0,1}


@dataclass
class Dataset:
    X: np.ndarray               # n x p, each retained feature min-max scaled to [0,1]
    y: np.ndarray               # length-n binary
    feature_names: list


@dataclass
class DatasetSummary:
    n_features: int
    n_obs: int
    n_noncont: int              # features with < 15 unique values
    n_cont: int
    n_neg: int
    n_pos: int
    pos_pct: float
    mean_abs_corr: float


def _encode_column(cells):
    """Parse a column as floats, or integer-encode it by sorted level order."""
    try:
        return np.array([float(c) for c in cells], dtype=float)
    except ValueError:
        levels = sorted(set(cells))
        code = {v: i for i, v in enumerate(levels)}
        return np.array([code[c] for c in cells], dtype=float)


def load_csv(path, target_column: str) -> RawTable:
    """Read a comma-delimited, headed, UTF-8 table into a RawTable.

    The target column must take exactly two distinct values; they map to
    {0,1} by lexicographic order (e.g. "no" -> 0, "yes" -> 1). Rows with
    the wrong number of fields and empty cells are rejected, not imputed.
    """
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file") from None
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
            if any(cell.strip() == "" for cell in row):
                raise ValueError(f"{path}:{lineno}: empty cell (missing values are not imputed)")
            rows.append(row)
    if not rows:
        raise ValueError(f"{path}: no data rows")
    if target_column not in header:
        raise ValueError(f"target column {target_column!r} not in header {header}")
    t_idx = header.index(target_column)

    raw_target = [r[t_idx] for r in rows]
    levels = sorted(set(raw_target))
    if len(levels) != 2:
        raise ValueError(f"target column {target_column!r} has {len(levels)} distinct values, need exactly 2")
    try:
        order = sorted(levels, key=float)
    except ValueError:
        order = levels
    y = np.array([order.index(v) for v in raw_target], dtype=np.int64)

    names, columns = [], []
    for j, name in enumerate(header):
        if j == t_idx:
            continue
        names.append(name)
        columns.append(_encode_column([r[j] for r in rows]))
    return RawTable(column_names=names, columns=columns, n_rows=len(rows),
                    target_name=target_column, y=y)


def _pearson_abs(rows):
    """|Pearson correlation| matrix (rows = variables); NaN from constants -> 0."""
    with np.errstate(invalid="ignore", divide="ignore"):
        r = np.corrcoef(rows)
    return np.nan_to_num(np.abs(r), nan=0.0)


def preprocess(raw: RawTable, corr_threshold: float = 0.9,
               quasi_const_share: float = 0.9, min_unique: int = 5) -> Dataset:
    """Filter and scale a RawTable into a model-ready Dataset.

    Steps, in order: drop features whose modal value share strictly
    exceeds quasi_const_share; greedily drop the later-indexed feature of
    every pair with |Pearson rho| above corr_threshold; min-max scale;
    keep only features with at least min_unique distinct values.
    """
    if not (0.0 < corr_threshold <= 1.0):
        raise ValueError("corr_threshold must be in (0, 1]")
    y = np.asarray(raw.y)
    if np.unique(y).size < 2:
        raise ValueError("zero-variance target")

    names = list(raw.column_names)
    cols = [np.asarray(c, dtype=float) for c in raw.columns]
    n = raw.n_rows

    # (1) quasi-constant filter
    keep = []
    for j, c in enumerate(cols):
        _, counts = np.unique(c, return_counts=True)
        if counts.max() / n <= quasi_const_share:
            keep.append(j)
    names = [names[j] for j in keep]
    cols = [cols[j] for j in keep]

    # (2) greedy correlation filter: drop the later-indexed offender
    if len(cols) >= 2:
        mat = np.vstack(cols)
        corr = _pearson_abs(mat)
        kept = []
        for j in range(len(cols)):
            if all(corr[i, j] <= corr_threshold for i in kept):
                kept.append(j)
        names = [names[j] for j in kept]
        cols = [cols[j] for j in kept]

    # (3) min-max scaling; constants at this point are degenerate
    scaled_names, scaled = [], []
    for name, c in zip(names, cols):
        lo, hi = c.min(), c.max()
        if hi == lo:
            warnings.warn(f"dropping feature {name!r}: constant after filtering")
            continue
        scaled_names.append(name)
        scaled.append((c - lo) / (hi - lo))

    # (4) minimum-unique-values filter
    final_names, final = [], []
    for name, c in zip(scaled_names, scaled):
        if np.unique(c).size >= min_unique:
            final_names.append(name)
            final.append(c)

    if not final:
        raise ValueError("preprocessing eliminated every feature")
    return Dataset(X=np.column_stack(final), y=y.astype(np.int64), feature_names=final_names)


def mean_abs_corr(X) -> float:
    """Average absolute pairwise Pearson correlation over feature pairs."""
    X = np.asarray(X, dtype=float)
    p = X.shape[1]
    if p < 2:
        warnings.warn("mean_abs_corr undefined for fewer than 2 features; reporting 0")
        return 0.0
    corr = _pearson_abs(X.T)
    iu = np.triu_indices(p, k=1)
    return float(2.0 / (p * (p - 1)) * np.sum(corr[iu]))


def summarize(ds: Dataset) -> DatasetSummary:
    """Per-dataset properties: dimensions, class balance, correlation level."""
    n, p = ds.X.shape
    uniques = np.array([np.unique(ds.X[:, j]).size for j in range(p)])
    n_noncont = int(np.sum(uniques < 15))
    n_pos = int(np.sum(ds.y == 1))
    return DatasetSummary(
        n_features=p,
        n_obs=n,
        n_noncont=n_noncont,
        n_cont=p - n_noncont,
        n_neg=n - n_pos,
        n_pos=n_pos,
        pos_pct=100.0 * n_pos / n,
        mean_abs_corr=mean_abs_corr(ds.X),
    )


def artif_design(n: int, p: int, n_relevant: int, seed: int,
                 sigma0: float = 0.6, beta_coef: float = 1.5):
    """Raw synthetic design: (X, y, beta) before any scaling.

    Relevant column j (1-based, j <= n_relevant) is uniform with standard
    deviation j*sigma0; the rest are unit-scale Gaussian noise. Uniform
    relevant columns keep their variance edge after min-max scaling, so
    both the highest-variance selection and the cluster geometry stay
    tied to the informative features. y ~ Bernoulli(sigmoid(X beta)) with
    intercept 0: centered regressors put the expected positive share at 1/2.
    """
    if not (1 <= n_relevant <= p):
        raise ValueError("need 1 <= n_relevant <= p")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, p))
    for j in range(n_relevant):
        half_width = sigma0 * (j + 1) * math.sqrt(3.0)
        X[:, j] = rng.uniform(-half_width, half_width, size=n)
    beta = np.zeros(p)
    beta[:n_relevant] = beta_coef
    y = (rng.random(n) < sigmoid(X @ beta)).astype(np.int64)
    return X, y, beta


def generate_artif(n: int = 2000, p: int = 21, n_relevant: int = 3, seed: int = 0,
                   sigma0: float = 0.6, beta_coef: float = 1.5) -> Dataset:
    """Synthetic benchmark dataset, routed through the standard preprocessing."""
    X, y, _ = artif_design(n, p, n_relevant, seed, sigma0=sigma0, beta_coef=beta_coef)
    raw = RawTable(
        column_names=[f"x{j + 1}" for j in range(p)],
        columns=[X[:, j] for j in range(p)],
        n_rows=n,
        target_name="class",
        y=y,
    )
    return preprocess(raw)
