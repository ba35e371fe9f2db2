"""Cluster-cleaning ("pecking") of PU surrogate labels.

One repetition seeds the unlabeled layer with a q-fraction of the
labeled positives, 2-means clusters the seeded set, and relabels the
cluster holding more seeds as positive. Repetitions are aggregated as
plain coefficient means (clust) or as support-intersection /
support-union means of the penalized joint pipeline (strict /
non-strict).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import glm
from .cluster import two_means
from .data import Dataset

MODE_CLUST = "clust"
MODE_STRICT = "strict"
MODE_NONSTRICT = "nonstrict"
MODES = (MODE_CLUST, MODE_STRICT, MODE_NONSTRICT)


@dataclass
class GlmConfig:
    """Knobs of the penalized pipeline used by the strict/non-strict modes."""
    n_folds: int = 10
    grid_size: int = 100
    delta_factor: float = 0.5   # threshold = delta_factor * lambda_min


@dataclass
class CleanedLabels:
    y_hat: np.ndarray             # length-n binary cleaned labels
    cluster_pos_indices: np.ndarray  # members of the positive-designated cluster
    pecked_indices: np.ndarray    # the drawn q-fraction of {s=1}


@dataclass
class PeckedModel:
    mode: str
    coefficients: glm.Coefficients
    per_rep: list
    q: float
    R: int
    per_rep_c_hat: list = field(default_factory=list)


def peck_once(ds: Dataset, s, q: float, seed: int) -> CleanedLabels:
    """One cleaning pass: seed, cluster, relabel.

    Draws ceil(q * #{s=1}) labeled rows (at least 1), adds them to the
    unlabeled layer, 2-means clusters that set, and designates the
    cluster with more drawn members as positive; ties go to the cluster
    whose centroid is nearer the mean of all labeled rows. Every s=1 row
    keeps y_hat=1 regardless of where it clusters.
    """
    s = np.asarray(s).astype(np.int64)
    if not (0.0 < q <= 1.0):
        raise ValueError("q must be in (0, 1]")
    labeled = np.flatnonzero(s == 1)
    if labeled.size < 1:
        raise ValueError("no labeled examples to peck from")
    rng = np.random.default_rng([int(seed), 0])
    n_draw = min(labeled.size, max(1, math.ceil(q * labeled.size)))
    drawn = np.sort(rng.choice(labeled, size=n_draw, replace=False))

    pool = np.sort(np.concatenate([np.flatnonzero(s == 0), drawn]))
    clus = two_means(ds.X[pool], seed=int(seed) * 2 + 1)

    drawn_mask = np.isin(pool, drawn)
    seeds_in = np.array([np.sum(drawn_mask & (clus.assignment == k)) for k in (0, 1)])
    if seeds_in[0] != seeds_in[1]:
        pos_cluster = int(np.argmax(seeds_in))
    else:
        labeled_mean = ds.X[labeled].mean(axis=0)
        dists = np.sum((clus.centroids - labeled_mean) ** 2, axis=1)
        pos_cluster = int(np.argmin(dists))

    cluster_pos = pool[clus.assignment == pos_cluster]
    y_hat = np.zeros(s.shape[0], dtype=np.int64)
    y_hat[cluster_pos] = 1
    y_hat[labeled] = 1
    return CleanedLabels(y_hat=y_hat, cluster_pos_indices=cluster_pos, pecked_indices=drawn)


def aggregate_coefficients(per_rep, mode: str) -> glm.Coefficients:
    """Combine per-repetition fits into one coefficient vector.

    clust: elementwise mean. strict: mean restricted to features present
    in every repetition, zero elsewhere. nonstrict: for each feature in
    the union support, mean over the repetitions where it is nonzero.
    The intercept is always averaged over all repetitions.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if not per_rep:
        raise ValueError("empty repetition list")
    arities = {c.beta.shape[0] for c in per_rep}
    if len(arities) != 1:
        raise ValueError("repetitions disagree on feature arity")
    betas = np.vstack([c.beta for c in per_rep])
    intercept = float(np.mean([c.intercept for c in per_rep]))

    if mode == MODE_CLUST:
        beta = betas.mean(axis=0)
    elif mode == MODE_STRICT:
        present = betas != 0.0
        in_all = present.all(axis=0)
        beta = np.where(in_all, betas.mean(axis=0), 0.0)
    else:
        present = betas != 0.0
        counts = present.sum(axis=0)
        with np.errstate(invalid="ignore"):
            beta = np.where(counts > 0, betas.sum(axis=0) / np.maximum(counts, 1), 0.0)
    return glm.Coefficients(intercept=intercept, beta=beta)


def run_pecking(ds: Dataset, s, q: float, R: int = 5, fitter: str = MODE_CLUST,
                glm_config: GlmConfig | None = None, seed: int = 0) -> PeckedModel:
    """R pecking repetitions, one fit per repetition, mode-specific aggregate.

    clust fits plain logistic regression on the cleaned labels; strict
    and nonstrict run the CV-Lasso -> threshold -> joint pipeline with
    the cleaned labels as the surrogate input.
    """
    if fitter not in MODES:
        raise ValueError(f"unknown fitter {fitter!r}")
    cfg = glm_config or GlmConfig()
    per_rep, c_hats = [], []
    for r in range(R):
        rep_seed = int(np.random.default_rng([int(seed), r]).integers(2 ** 62))
        try:
            cleaned = peck_once(ds, s, q, seed=rep_seed)
            if fitter == MODE_CLUST:
                per_rep.append(glm.fit_logistic(ds.X, cleaned.y_hat))
            else:
                jm = glm.lasso_joint_pipeline(ds.X, cleaned.y_hat, seed=rep_seed,
                                              n_folds=cfg.n_folds, grid_size=cfg.grid_size,
                                              delta_factor=cfg.delta_factor)
                per_rep.append(jm.coefficients)
                c_hats.append(jm.c_hat)
        except Exception as exc:
            raise RuntimeError(f"pecking repetition {r} failed: {exc}") from exc
    agg = aggregate_coefficients(per_rep, fitter)
    return PeckedModel(mode=fitter, coefficients=agg, per_rep=per_rep, q=float(q),
                       R=int(R), per_rep_c_hat=c_hats)
