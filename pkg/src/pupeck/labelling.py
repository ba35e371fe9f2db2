"""Surrogate-label generators for positive-unlabeled experiments.

Only positives may be labeled: s_i = 1 implies y_i = 1 for every
generated assignment. The SCAR generator labels each positive with a
constant probability c. The non-SCAR generator builds a feature-driven
propensity from the highest-variance column, so labeling probability
varies across positives while its mean is pinned to the requested c.
"""

from dataclasses import dataclass

import numpy as np

from .data import Dataset

SCHEME_SCAR = "scar"
SCHEME_NONSCAR = "nonscar"


@dataclass
class SurrogateAssignment:
    s: np.ndarray               # length-n binary
    realized_c: float           # empirical P(S=1 | Y=1)
    scheme: str
    seed: int


def _finish(ds, s, scheme, seed) -> SurrogateAssignment:
    n_pos = int(np.sum(ds.y == 1))
    realized = float(np.sum(s) / n_pos) if n_pos > 0 else 0.0
    return SurrogateAssignment(s=s.astype(np.int64), realized_c=realized,
                               scheme=scheme, seed=int(seed))


def scar_label(ds: Dataset, c: float, seed: int) -> SurrogateAssignment:
    """Label each positive independently with probability c."""
    if not (0.0 < c <= 1.0):
        raise ValueError("c must be in (0, 1]")
    pos = np.flatnonzero(ds.y == 1)
    if pos.size == 0:
        raise ValueError("dataset has no positives")
    rng = np.random.default_rng(seed)
    s = np.zeros(ds.y.shape[0], dtype=np.int64)
    s[pos] = rng.random(pos.size) < c
    return _finish(ds, s, SCHEME_SCAR, seed)


def _propensity_from_score(z, c_target):
    """Map a score to propensities clip(z_norm + b, 0, 1) with mean c_target.

    The intercept b is solved by bisection: the clipped mean is monotone
    nondecreasing in b, runs from 0 (b <= -1) to 1 (b >= 1), and equals
    c_target at the returned solution.
    """
    z = np.asarray(z, dtype=float)
    zn = (z - z.min()) / (z.max() - z.min())
    lo, hi = -1.0, 1.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if np.mean(np.clip(zn + mid, 0.0, 1.0)) < c_target:
            lo = mid
        else:
            hi = mid
    return np.clip(zn + 0.5 * (lo + hi), 0.0, 1.0)


def non_scar_label(ds: Dataset, c_target: float, seed: int, n_vars: int = 1) -> SurrogateAssignment:
    """Feature-dependent labeling of positives at a target mean frequency.

    The score for each positive is the running (cumulative) sum of the
    selected top-variance feature values, accumulated over positives in
    increasing order of that feature, which makes the propensity a
    monotone function of the feature itself. A constant selected feature
    falls back to the next-highest-variance column.
    """
    if not (0.0 < c_target < 1.0):
        raise ValueError("c_target must be in (0, 1)")
    pos = np.flatnonzero(ds.y == 1)
    if pos.size < 2:
        raise ValueError("need at least 2 positives")
    n, p = ds.X.shape

    order_by_var = np.argsort(-ds.X.var(axis=0), kind="stable")
    chosen = None
    for start in range(p - n_vars + 1):
        cand = order_by_var[start:start + n_vars]
        vals = ds.X[np.ix_(pos, cand)].sum(axis=1)
        if vals.max() > vals.min():
            chosen = vals
            break
    if chosen is None:
        raise ValueError("every candidate feature is constant over the positives")

    rank = np.argsort(chosen, kind="stable")
    cumsum_sorted = np.cumsum(chosen[rank])
    z = np.empty(pos.size)
    z[rank] = cumsum_sorted
    e = _propensity_from_score(z, c_target)

    rng = np.random.default_rng(seed)
    s = np.zeros(n, dtype=np.int64)
    s[pos] = rng.random(pos.size) < e
    return _finish(ds, s, SCHEME_NONSCAR, seed)


def empirical_c(sa: SurrogateAssignment, ds: Dataset) -> float:
    """A-posteriori label frequency: sum(s) / sum(y)."""
    n_pos = int(np.sum(ds.y == 1))
    if n_pos == 0:
        raise ValueError("dataset has no positives")
    return float(np.sum(sa.s) / n_pos)
