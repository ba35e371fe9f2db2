"""Monte Carlo experiment orchestration.

For every (dataset, c, replication) cell the harness regenerates the
surrogate labels, splits 70/30 stratified on the surrogate, fits each
configured method on the training part and scores the predicted class
against the true labels on the test part. Per-cell seeds derive from a
stable hash of the cell key, so results are reproducible regardless of
execution order. Wall-clock fit times go to a separate timing report:
the raw results CSV must be byte-identical across reruns.
"""

import csv
import hashlib
import os
import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import glm, labelling, metrics, pecking
from .data import Dataset, generate_artif, load_csv, preprocess

METHOD_NAIVE = "naive"
METHOD_CLUST = "clust"
METHOD_STRICT = "strict_lassclust"
METHOD_NONSTRICT = "nonstrict_lassclust"
METHOD_LASSOJOINT = "lasso_joint"
METHOD_ORDER = (METHOD_NAIVE, METHOD_CLUST, METHOD_STRICT, METHOD_NONSTRICT, METHOD_LASSOJOINT)
PECKING_METHODS = {METHOD_CLUST: pecking.MODE_CLUST,
                   METHOD_STRICT: pecking.MODE_STRICT,
                   METHOD_NONSTRICT: pecking.MODE_NONSTRICT}

_METHOD_ALIASES = {
    "NAIVE": METHOD_NAIVE,
    "CLUST": METHOD_CLUST,
    "LASSCLUST_STRICT": METHOD_STRICT,
    "LASSCLUST_NONSTRICT": METHOD_NONSTRICT,
    "LASSOJOINT": METHOD_LASSOJOINT,
}


def canonical_method(name: str) -> str:
    name = name.strip()
    if name in METHOD_ORDER:
        return name
    if name.upper() in _METHOD_ALIASES:
        return _METHOD_ALIASES[name.upper()]
    raise ValueError(f"unknown method {name!r}")


@dataclass
class ExperimentConfig:
    dataset_paths: list
    scheme: str = labelling.SCHEME_NONSCAR
    c_list: list = field(default_factory=lambda: [0.3, 0.5, 0.8])
    q_list: list = field(default_factory=lambda: [0.25, 0.5, 1.0])
    R: int = 5
    split: float = 0.7
    methods: list = field(default_factory=lambda: list(METHOD_ORDER))
    master_seed: int = 0
    corr_threshold: float = 0.9
    target_column: str = "class"
    n_replications: int | None = None   # None -> replication_count rule
    n_vars: int = 1                     # non-SCAR generator knob
    cv_folds: int = 10
    grid_size: int = 100
    delta_factor: float = 0.5

    def __post_init__(self):
        self.methods = [canonical_method(m) for m in self.methods]
        self.scheme = self.scheme.strip().lower()
        if self.scheme not in (labelling.SCHEME_SCAR, labelling.SCHEME_NONSCAR):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if not all(0.0 < c <= 1.0 for c in self.c_list):
            raise ValueError("every c must lie in (0, 1]")
        if not all(0.0 < q <= 1.0 for q in self.q_list):
            raise ValueError("every q must lie in (0, 1]")
        if not (0.0 < self.split < 1.0):
            raise ValueError("split must lie in (0, 1)")


@dataclass
class ResultRow:
    dataset: str
    scheme: str
    method: str
    c_target: float
    realized_c: float
    q: float | None
    replication_index: int
    accuracy: float
    f1: float
    auc: float
    fit_seconds: float
    error: str = ""


def replication_count(n_rows: int, n_cols: int) -> int:
    """100 replications for small tables, 10 once both dimensions are large."""
    if n_rows <= 0 or n_cols <= 0:
        raise ValueError("dimensions must be positive")
    return 100 if (n_cols < 100 or n_rows < 10000) else 10


def _cell_seed(*parts) -> int:
    key = "|".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big") % (2 ** 62)


def _stratified_split(s, split, seed):
    """Train/test indices with each surrogate stratum split separately."""
    rng = np.random.default_rng(seed)
    train, test = [], []
    for cls in (0, 1):
        idx = rng.permutation(np.flatnonzero(s == cls))
        if idx.size == 0:
            continue
        cut = int(round(split * idx.size))
        if idx.size >= 2:
            cut = min(max(cut, 1), idx.size - 1)
        else:
            cut = idx.size  # a lone member goes to train
        train.append(idx[:cut])
        test.append(idx[cut:])
    return np.sort(np.concatenate(train)), np.sort(np.concatenate(test))


def load_dataset(path, target_column="class", corr_threshold=0.9, artif_seed=0) -> Dataset:
    """Load + preprocess a CSV path; the literal name "artif" is synthesized."""
    stem = os.path.splitext(os.path.basename(str(path)))[0]
    if stem == "artif" and not os.path.exists(str(path)):
        return generate_artif(seed=artif_seed)
    raw = load_csv(path, target_column)
    return preprocess(raw, corr_threshold=corr_threshold)


def _fit_method(method, X_tr, s_tr, q, R, cfg: ExperimentConfig, seed):
    gcfg = pecking.GlmConfig(n_folds=cfg.cv_folds, grid_size=cfg.grid_size,
                             delta_factor=cfg.delta_factor)
    if method == METHOD_NAIVE:
        return glm.fit_logistic(X_tr, s_tr)
    if method == METHOD_LASSOJOINT:
        return glm.lasso_joint_pipeline(X_tr, s_tr, seed=seed, n_folds=gcfg.n_folds,
                                        grid_size=gcfg.grid_size, delta_factor=gcfg.delta_factor)
    ds_tr = Dataset(X=X_tr, y=s_tr, feature_names=[f"f{j}" for j in range(X_tr.shape[1])])
    return pecking.run_pecking(ds_tr, s_tr, q=q, R=R, fitter=PECKING_METHODS[method],
                               glm_config=gcfg, seed=seed)


def _evaluate(model, X_te, y_te):
    if isinstance(model, pecking.PeckedModel):
        post = glm.predict_posterior(model.coefficients, X_te)
    else:
        post = glm.predict_posterior(model, X_te)
    pred = (post >= 0.5).astype(np.int64)
    cc = metrics.confusion(y_te, pred)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # degenerate-F1 warnings are recorded in the value
        f1v = metrics.f1(cc)
    return metrics.accuracy(cc), f1v, metrics.auc(y_te, post)


def run_experiment(cfg: ExperimentConfig) -> list:
    """Execute the full grid; failures become error rows, the run continues."""
    rows = []
    for path in cfg.dataset_paths:
        name = os.path.splitext(os.path.basename(str(path)))[0]
        ds = load_dataset(path, cfg.target_column, cfg.corr_threshold,
                          artif_seed=_cell_seed(cfg.master_seed, name, "gen"))
        n, p = ds.X.shape
        n_reps = cfg.n_replications if cfg.n_replications else replication_count(n, p)
        for c in cfg.c_list:
            for rep in range(n_reps):
                if cfg.scheme == labelling.SCHEME_SCAR:
                    sa = labelling.scar_label(ds, c, seed=_cell_seed(cfg.master_seed, name, cfg.scheme, c, rep, "label"))
                else:
                    sa = labelling.non_scar_label(ds, c, seed=_cell_seed(cfg.master_seed, name, cfg.scheme, c, rep, "label"),
                                                  n_vars=cfg.n_vars)
                tr, te = _stratified_split(sa.s, cfg.split,
                                           seed=_cell_seed(cfg.master_seed, name, cfg.scheme, c, rep, "split"))
                X_tr, X_te = ds.X[tr], ds.X[te]
                s_tr, y_te = sa.s[tr], ds.y[te]
                for method in cfg.methods:
                    q_values = cfg.q_list if method in PECKING_METHODS else [None]
                    for q in q_values:
                        fit_seed = _cell_seed(cfg.master_seed, name, cfg.scheme, c, rep, method, q, "fit")
                        base = dict(dataset=name, scheme=cfg.scheme, method=method,
                                    c_target=float(c), realized_c=sa.realized_c,
                                    q=None if q is None else float(q), replication_index=rep)
                        try:
                            t0 = time.perf_counter()
                            model = _fit_method(method, X_tr, s_tr, q, cfg.R, cfg, fit_seed)
                            fit_s = time.perf_counter() - t0
                            acc, f1v, aucv = _evaluate(model, X_te, y_te)
                            rows.append(ResultRow(accuracy=acc, f1=f1v, auc=aucv,
                                                  fit_seconds=fit_s, **base))
                        except Exception as exc:
                            rows.append(ResultRow(accuracy=float("nan"), f1=float("nan"),
                                                  auc=float("nan"), fit_seconds=float("nan"),
                                                  error=f"{type(exc).__name__}: {exc}", **base))
    return rows


# ---------------------------------------------------------------------------
# reports

RAW_HEADER = ["dataset", "scheme", "method", "c_target", "realized_c", "q",
              "replication_index", "accuracy", "f1", "auc", "error"]
SUMMARY_HEADER = ["q", "method", "accuracy_mean", "accuracy_sd", "f1_mean", "f1_sd",
                  "auc_mean", "auc_sd", "n_rows"]
TIMING_HEADER = ["dataset", "method", "q", "replication_index", "fit_seconds"]


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        v = float(v)  # builtin repr, even for numpy float subclasses
        if np.isnan(v):
            return ""
        return repr(v)
    return str(v)


def _sd(values):
    return float(np.std(values, ddof=1)) if len(values) > 1 else 0.0


def summary_from_rows(rows):
    """Per-(q, method) mean and sd of each metric, error rows excluded."""
    groups = {}
    for r in rows:
        if r.error:
            continue
        groups.setdefault((r.q, r.method), []).append(r)
    out = []
    def sort_key(key):
        q, method = key
        order = METHOD_ORDER.index(method) if method in METHOD_ORDER else len(METHOD_ORDER)
        return (q is None, q if q is not None else 0.0, order)
    for (q, method) in sorted(groups, key=sort_key):
        g = groups[(q, method)]
        accs = [r.accuracy for r in g]
        f1s = [r.f1 for r in g]
        aucs = [r.auc for r in g]
        out.append({"q": q, "method": method,
                    "accuracy_mean": float(np.mean(accs)), "accuracy_sd": _sd(accs),
                    "f1_mean": float(np.mean(f1s)), "f1_sd": _sd(f1s),
                    "auc_mean": float(np.mean(aucs)), "auc_sd": _sd(aucs),
                    "n_rows": len(g)})
    return out


def emit_report(rows, out_dir):
    """Write raw rows, a per-(method, q) summary and a timing table.

    Timing is kept out of the raw rows file on purpose: raw results must
    be byte-identical when a run is repeated with the same seed.
    """
    if not rows:
        raise ValueError("no rows to report")
    os.makedirs(out_dir, exist_ok=True)
    raw_path = os.path.join(out_dir, "results_raw.csv")
    with open(raw_path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(RAW_HEADER)
        for r in rows:
            w.writerow([r.dataset, r.scheme, r.method, _fmt(r.c_target), _fmt(r.realized_c),
                        _fmt(r.q), r.replication_index, _fmt(r.accuracy), _fmt(r.f1),
                        _fmt(r.auc), r.error])
    summary_path = os.path.join(out_dir, "summary.csv")
    _write_summary(summary_from_rows(rows), summary_path)
    timing_path = os.path.join(out_dir, "timing.csv")
    with open(timing_path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(TIMING_HEADER)
        for r in rows:
            if not r.error:
                w.writerow([r.dataset, r.method, _fmt(r.q), r.replication_index,
                            _fmt(r.fit_seconds)])
    return {"raw": raw_path, "summary": summary_path, "timing": timing_path}


def _write_summary(summary, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(SUMMARY_HEADER)
        for line in summary:
            w.writerow([_fmt(line["q"]), line["method"],
                        _fmt(line["accuracy_mean"]), _fmt(line["accuracy_sd"]),
                        _fmt(line["f1_mean"]), _fmt(line["f1_sd"]),
                        _fmt(line["auc_mean"]), _fmt(line["auc_sd"]), line["n_rows"]])


def load_raw_csv(path):
    """Read a raw results CSV back into ResultRow objects (no timing)."""
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            def f(key):
                return float(rec[key]) if rec[key] != "" else float("nan")
            rows.append(ResultRow(
                dataset=rec["dataset"], scheme=rec["scheme"], method=rec["method"],
                c_target=f("c_target"), realized_c=f("realized_c"),
                q=None if rec["q"] == "" else float(rec["q"]),
                replication_index=int(rec["replication_index"]),
                accuracy=f("accuracy"), f1=f("f1"), auc=f("auc"),
                fit_seconds=float("nan"), error=rec["error"]))
    return rows


def summarize_raw(raw_path, out_dir):
    """Regenerate the summary CSV from a raw results CSV."""
    rows = load_raw_csv(raw_path)
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, "summary.csv")
    _write_summary(summary_from_rows(rows), path)
    return path
