"""Logistic-regression machinery.

Covers the unpenalized MLE, an L1-penalized fit with cross-validated
penalty selection, coefficient thresholding, and the joint likelihood
that estimates (beta, c) from positive-unlabeled surrogate labels.

The L1 solver is coordinate descent on a quadratic majorizer of the
logistic loss (curvature bound 1/4), so the penalized objective is
guaranteed non-increasing after every sweep. Hot loops are JIT-compiled
with numba; features are standardized internally and coefficients
reported on the original scale.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from numba import njit
from scipy.optimize import minimize_scalar

C_MIN = 1e-3  # lower box constraint for the label frequency


# ---------------------------------------------------------------------------
# basic pieces

def sigmoid(t):
    """Numerically stable logistic function exp(t)/(1+exp(t))."""
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    pos = t >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-t[pos]))
    et = np.exp(t[~pos])
    out[~pos] = et / (1.0 + et)
    if out.ndim == 0:
        return float(out)
    return out


def _softplus_stable(t):
    """log(1 + exp(t)) without overflow."""
    t = np.asarray(t, dtype=float)
    return np.maximum(t, 0.0) + np.log1p(np.exp(-np.abs(t)))


def logistic_nll(X, labels, intercept, beta):
    """Mean negative log-likelihood of the logistic model."""
    eta = intercept + np.asarray(X, dtype=float) @ np.asarray(beta, dtype=float)
    s = np.asarray(labels, dtype=float)
    return float(np.mean(_softplus_stable(eta) - s * eta))


def logistic_nll_grad(X, labels, intercept, beta):
    """Gradient of logistic_nll with respect to (intercept, beta)."""
    X = np.asarray(X, dtype=float)
    s = np.asarray(labels, dtype=float)
    p = sigmoid(intercept + X @ np.asarray(beta, dtype=float))
    resid = p - s
    return float(np.mean(resid)), X.T @ resid / X.shape[0]


def _check_design(X, labels):
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    s = np.asarray(labels, dtype=float)
    if X.shape[0] != s.shape[0]:
        raise ValueError("X and labels disagree on the number of rows")
    if not np.all(np.isfinite(X)):
        raise ValueError("non-finite feature value")
    vals = np.unique(s)
    if not np.all(np.isin(vals, (0.0, 1.0))):
        raise ValueError("labels must be binary 0/1")
    if vals.size < 2:
        raise ValueError("labels contain a single class")
    return X, s


@dataclass
class Coefficients:
    """Intercept and per-feature weights of a fitted logistic model."""
    intercept: float
    beta: np.ndarray
    lam: float | None = None          # penalty at which the fit was produced
    converged: bool = True
    separated: bool = False
    objective_path: np.ndarray | None = None  # per-sweep penalized objective (L1 fits)

    @property
    def support(self) -> set:
        return {int(j) for j in np.nonzero(self.beta)[0]}


@dataclass
class JointModel:
    """(beta, c) pair maximizing the PU observed-data likelihood."""
    coefficients: Coefficients
    c_hat: float
    converged: bool = True
    loglik: float = float("nan")
    loglik_path: list = field(default_factory=list)


@dataclass
class LambdaSelection:
    lambda_grid: np.ndarray       # strictly descending
    cv_mean_loss: np.ndarray      # mean held-out deviance per grid point
    lambda_min: float
    n_folds_used: int = 0


# ---------------------------------------------------------------------------
# unpenalized MLE (damped Newton / IRLS)

def fit_logistic(X, labels, max_iter: int = 100, tol: float = 1e-8) -> Coefficients:
    """Maximum-likelihood logistic fit via damped Newton iterations.

    Separable data is caught by a norm guard: once the coefficient norm
    exceeds 1e3 the current iterate is returned flagged as separated.
    """
    X, s = _check_design(X, labels)
    n, p = X.shape
    Xt = np.hstack([np.ones((n, 1)), X])
    theta = np.zeros(p + 1)
    nll = logistic_nll(X, s, theta[0], theta[1:])
    converged = False
    separated = False
    for _ in range(max_iter):
        eta = Xt @ theta
        prob = sigmoid(eta)
        g = Xt.T @ (prob - s) / n
        if np.max(np.abs(g)) < tol * 1e-2:
            converged = True
            break
        w = np.clip(prob * (1.0 - prob), 1e-10, None)
        H = (Xt * w[:, None]).T @ Xt / n + 1e-12 * np.eye(p + 1)
        try:
            step = np.linalg.solve(H, g)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(H, g, rcond=None)[0]
        alpha = 1.0
        slope = float(g @ step)
        for _ in range(50):
            cand = theta - alpha * step
            cand_nll = logistic_nll(X, s, cand[0], cand[1:])
            if cand_nll <= nll - 1e-4 * alpha * slope:
                break
            alpha *= 0.5
        delta = float(np.max(np.abs(cand - theta)))
        theta, nll = cand, cand_nll
        if np.linalg.norm(theta) > 1e3:
            separated = True
            break
        if delta < tol:
            converged = True
            break
    return Coefficients(intercept=float(theta[0]), beta=theta[1:].copy(),
                        converged=converged, separated=separated)


# ---------------------------------------------------------------------------
# L1-penalized fit: majorized coordinate descent (numba kernels)

@njit(cache=True)
def _sig(t):
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


@njit(cache=True)
def _sp(t):
    # log(1 + exp(t))
    if t > 35.0:
        return t
    if t < -35.0:
        return math.exp(t)
    return math.log1p(math.exp(t))


@njit(cache=True)
def _pen_obj(eta, s, beta, lam):
    n = eta.shape[0]
    acc = 0.0
    for i in range(n):
        acc += _sp(eta[i]) - s[i] * eta[i]
    acc /= n
    pen = 0.0
    for j in range(beta.shape[0]):
        pen += abs(beta[j])
    return acc + lam * pen


@njit(cache=True, fastmath=True)
def _kkt(X, s, pvec, beta, lam, a):
    """Max KKT violation of the penalized objective at the current point."""
    n, p = X.shape
    gm = 0.0
    for i in range(n):
        gm += pvec[i] - s[i]
    res = abs(gm / n)
    for j in range(p):
        if a[j] <= 0.0:
            continue
        g = 0.0
        for i in range(n):
            g += X[i, j] * (pvec[i] - s[i])
        g /= n
        if beta[j] == 0.0:
            v = abs(g) - lam
            if v < 0.0:
                v = 0.0
        else:
            sign = 1.0 if beta[j] > 0.0 else -1.0
            v = abs(g + lam * sign)
        if v > res:
            res = v
    return res


@njit(cache=True, fastmath=True)
def _mm_sweep(X, s, lam, b0, beta, eta, a, idx, pvec, r):
    """One anchored majorizer pass over the coordinates listed in idx.

    Re-anchors a quadratic upper bound (curvature 1/4) of the logistic
    loss at the current point, then soft-thresholds the intercept and
    each listed coordinate once. The true penalized objective cannot
    increase. Returns the largest coordinate move.
    """
    n = X.shape[0]
    for i in range(n):
        pvec[i] = _sig(eta[i])
        r[i] = 4.0 * (s[i] - pvec[i])
    dm = 0.0
    for i in range(n):
        dm += r[i]
    dm /= n
    b0 += dm
    maxd = abs(dm)
    for i in range(n):
        r[i] -= dm
        eta[i] += dm
    for jj in range(idx.shape[0]):
        j = idx[jj]
        if a[j] <= 0.0:
            continue
        rho = 0.0
        for i in range(n):
            rho += X[i, j] * r[i]
        rho = rho / (4.0 * n) + a[j] * beta[j]
        if rho > lam:
            bn = (rho - lam) / a[j]
        elif rho < -lam:
            bn = (rho + lam) / a[j]
        else:
            bn = 0.0
        d = bn - beta[j]
        if d != 0.0:
            beta[j] = bn
            for i in range(n):
                r[i] -= X[i, j] * d
                eta[i] += X[i, j] * d
            ad = abs(d)
            if ad > maxd:
                maxd = ad
    return b0, maxd


@njit(cache=True, fastmath=True)
def _cd_fit(X, s, lam, b0, beta, eta, max_sweeps, tol, kkt_tol, obj_out, record):
    """One penalized fit at fixed lam; beta and eta are updated in place.

    Alternates full coordinate sweeps with sweeps over the active
    (nonzero) set; every sweep is an anchored majorizer pass, so the
    recorded objective sequence is non-increasing. Converges when a full
    sweep barely moves and the KKT residual is within kkt_tol. Returns
    (b0, n_anchors, kkt_residual).
    """
    n, p = X.shape
    a = np.empty(p)
    for j in range(p):
        acc = 0.0
        for i in range(n):
            acc += X[i, j] * X[i, j]
        a[j] = acc / (4.0 * n)
    all_idx = np.arange(p)
    pvec = np.empty(n)
    r = np.empty(n)
    anchors = 0
    kkt = np.inf
    sweeps = 0
    while sweeps < max_sweeps:
        if record:
            obj_out[anchors] = _pen_obj(eta, s, beta, lam)
            anchors += 1
        b0, maxd = _mm_sweep(X, s, lam, b0, beta, eta, a, all_idx, pvec, r)
        sweeps += 1
        if maxd < 100.0 * tol:
            for i in range(n):
                pvec[i] = _sig(eta[i])
            kkt = _kkt(X, s, pvec, beta, lam, a)
            if kkt <= kkt_tol or maxd < tol:
                if record:
                    obj_out[anchors] = _pen_obj(eta, s, beta, lam)
                    anchors += 1
                return b0, anchors, kkt
        # iterate the active set until it stops moving, then re-verify
        nact = 0
        for j in range(p):
            if beta[j] != 0.0:
                nact += 1
        if nact > 0:
            active = np.empty(nact, dtype=np.int64)
            k = 0
            for j in range(p):
                if beta[j] != 0.0:
                    active[k] = j
                    k += 1
            while sweeps < max_sweeps:
                if record:
                    obj_out[anchors] = _pen_obj(eta, s, beta, lam)
                    anchors += 1
                b0, maxd = _mm_sweep(X, s, lam, b0, beta, eta, a, active, pvec, r)
                sweeps += 1
                if maxd < tol:
                    break
    for i in range(n):
        pvec[i] = _sig(eta[i])
    kkt = _kkt(X, s, pvec, beta, lam, a)
    if record:
        obj_out[anchors] = _pen_obj(eta, s, beta, lam)
        anchors += 1
    return b0, anchors, kkt


@njit(cache=True)
def _cd_path(X, s, lams, max_sweeps, tol, kkt_tol):
    """Warm-started fits along a descending penalty grid (standardized X)."""
    n, p = X.shape
    m = lams.shape[0]
    B0 = np.zeros(m)
    B = np.zeros((m, p))
    kkts = np.zeros(m)
    beta = np.zeros(p)
    sbar = 0.0
    for i in range(n):
        sbar += s[i]
    sbar /= n
    b0 = math.log(sbar / (1.0 - sbar))
    eta = np.full(n, b0)
    obj_buf = np.empty(2)
    for k in range(m):
        b0, _, kk = _cd_fit(X, s, lams[k], b0, beta, eta, max_sweeps, tol, kkt_tol, obj_buf, False)
        B0[k] = b0
        for j in range(p):
            B[k, j] = beta[j]
        kkts[k] = kk
    return B0, B, kkts


def _standardize(X):
    mu = X.mean(axis=0)
    sd = X.std(axis=0)
    sd = np.where(sd == 0.0, 1.0, sd)
    return np.asfortranarray((X - mu) / sd), mu, sd


def _destandardize(b0_std, beta_std, mu, sd):
    beta = beta_std / sd
    intercept = b0_std - float(np.sum(beta_std * mu / sd))
    return intercept, beta


def lambda_max(X, labels) -> float:
    """Smallest penalty that zeroes every coefficient (standardized scale)."""
    X, s = _check_design(X, labels)
    Xs, _, _ = _standardize(X)
    sbar = s.mean()
    return float(np.max(np.abs(Xs.T @ (s - sbar))) / X.shape[0])


def fit_lasso(X, labels, lam: float, max_iter: int = 1000, tol: float = 1e-8,
              kkt_tol: float = 1e-7) -> Coefficients:
    """L1-penalized logistic fit; intercept unpenalized.

    Minimizes mean-NLL + lam * ||beta||_1 with features standardized
    internally; coefficients come back on the original feature scale.
    """
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    X, s = _check_design(X, labels)
    n, p = X.shape
    if p == 0:
        sbar = s.mean()
        return Coefficients(intercept=float(np.log(sbar / (1 - sbar))), beta=np.zeros(0), lam=lam)
    Xs, mu, sd = _standardize(X)
    sbar = s.mean()
    b0 = float(np.log(sbar / (1 - sbar)))
    beta = np.zeros(p)
    eta = np.full(n, b0)
    obj = np.empty(max_iter + 2)
    b0, anchors, kkt = _cd_fit(Xs, s, float(lam), b0, beta, eta,
                               max_iter, tol, kkt_tol, obj, True)
    beta[np.abs(beta) < 1e-10] = 0.0  # boundary-equality dust from soft-thresholding
    intercept, beta_orig = _destandardize(b0, beta, mu, sd)
    return Coefficients(intercept=intercept, beta=beta_orig, lam=float(lam),
                        converged=bool(kkt <= max(kkt_tol, 1e-5)),
                        objective_path=obj[:anchors].copy())


def kkt_residual(X, labels, coef: Coefficients, lam: float) -> float:
    """Max KKT violation of an L1 fit, on the standardized scale it was solved on."""
    X, s = _check_design(X, labels)
    Xs, mu, sd = _standardize(X)
    beta_std = coef.beta * sd
    b0_std = coef.intercept + float(np.sum(coef.beta * mu))
    p = sigmoid(b0_std + Xs @ beta_std)
    g = Xs.T @ (p - s) / X.shape[0]
    res = abs(float(np.mean(p - s)))
    for j in range(X.shape[1]):
        if beta_std[j] == 0.0:
            res = max(res, max(abs(g[j]) - lam, 0.0))
        else:
            res = max(res, abs(g[j] + lam * np.sign(beta_std[j])))
    return res


def make_lambda_grid(X, labels, grid_size: int = 100, ratio: float = 1e-4) -> np.ndarray:
    lmax = lambda_max(X, labels)
    return np.geomspace(lmax, lmax * ratio, grid_size)


def lasso_path(X, labels, lambda_grid=None, grid_size: int = 100,
               max_iter: int = 500, tol: float = 1e-7, kkt_tol: float = 1e-6):
    """Warm-started L1 fits along a descending grid; returns (grid, fits)."""
    X, s = _check_design(X, labels)
    if lambda_grid is None:
        lambda_grid = make_lambda_grid(X, s, grid_size)
    lambda_grid = np.asarray(lambda_grid, dtype=float)
    if np.any(np.diff(lambda_grid) >= 0):
        raise ValueError("lambda grid must be strictly descending")
    Xs, mu, sd = _standardize(X)
    B0, B, kkts = _cd_path(Xs, s, lambda_grid, max_iter, tol, kkt_tol)
    B[np.abs(B) < 1e-10] = 0.0
    fits = []
    for k, lam in enumerate(lambda_grid):
        intercept, beta = _destandardize(B0[k], B[k], mu, sd)
        fits.append(Coefficients(intercept=intercept, beta=beta, lam=float(lam),
                                 converged=bool(kkts[k] <= max(kkt_tol, 1e-5))))
    return lambda_grid, fits


def _stratified_folds(labels, n_folds, rng):
    """Fold index per observation; each class spread round-robin over folds."""
    fold = np.empty(labels.shape[0], dtype=np.int64)
    for cls in (0, 1):
        idx = np.flatnonzero(labels == cls)
        idx = rng.permutation(idx)
        fold[idx] = np.arange(idx.size) % n_folds
    return fold


def cv_select_lambda(X, labels, n_folds: int = 10, grid_size: int = 100,
                     seed: int = 0) -> LambdaSelection:
    """Pick the penalty minimizing mean held-out deviance over a log grid.

    The grid runs from lambda_max down to lambda_max * 1e-4; folds are
    stratified on the labels; ties resolve to the larger penalty.
    """
    X, s = _check_design(X, labels)
    n = X.shape[0]
    if n < n_folds:
        raise ValueError("fewer observations than folds")
    min_class = int(min(np.sum(s == 0), np.sum(s == 1)))
    if min_class < 2:
        raise ValueError("need at least 2 observations of each class for CV")
    if min_class < n_folds:
        warnings.warn(f"reducing n_folds from {n_folds} to {min_class} so every fold sees both classes")
        n_folds = min_class
    grid = make_lambda_grid(X, s, grid_size)
    rng = np.random.default_rng(seed)
    fold = _stratified_folds(s, n_folds, rng)
    total_dev = np.zeros(grid.size)
    for f in range(n_folds):
        tr = fold != f
        te = ~tr
        Xs, mu, sd = _standardize(X[tr])
        B0, B, _ = _cd_path(Xs, s[tr], grid, 150, 1e-5, 1e-4)
        Xte = X[te]
        ste = s[te]
        for k in range(grid.size):
            intercept, beta = _destandardize(B0[k], B[k], mu, sd)
            eta = intercept + Xte @ beta
            total_dev[k] += 2.0 * float(np.sum(_softplus_stable(eta) - ste * eta))
    cv_mean = total_dev / n
    lam_min = float(grid[int(np.argmin(cv_mean))])
    return LambdaSelection(lambda_grid=grid, cv_mean_loss=cv_mean,
                           lambda_min=lam_min, n_folds_used=n_folds)


def threshold_support(coef: Coefficients, delta: float) -> set:
    """Indices of nonzero coefficients with magnitude at least delta."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    beta = coef.beta
    return {int(j) for j in np.flatnonzero((beta != 0.0) & (np.abs(beta) >= delta))}


# ---------------------------------------------------------------------------
# joint (beta, c) likelihood

def _joint_loglik(eta, s, c):
    """Mean log-likelihood of P(S=1|x) = c * sigmoid(eta)."""
    # log(c p) = log c - softplus(-eta)
    # log(1 - c p) = log(exp(-eta) + (1 - c)) - softplus(-eta)
    sp_neg = _softplus_stable(-eta)
    ll_pos = math.log(c) - sp_neg
    if c >= 1.0:
        log_one_minus = -eta - sp_neg
    else:
        log_one_minus = np.logaddexp(-eta, math.log1p(-c)) - sp_neg
    return float(np.mean(np.where(s == 1.0, ll_pos, log_one_minus)))


def _joint_eta_derivs(eta, s, c):
    """First and (negated, clipped) second derivative of the loglik wrt eta."""
    p = sigmoid(eta)
    # c = 1 with saturated p gives 0/0 in the s=0 terms; clamp the denominator
    one_minus_cp = np.maximum(1.0 - c * p, 1e-12)
    d1 = np.where(s == 1.0, 1.0 - p, -c * p * (1.0 - p) / one_minus_cp)
    d2_pos = -p * (1.0 - p)
    d2_neg = (-c * (1.0 - 2.0 * p) * p * (1.0 - p) * one_minus_cp
              - (c * p * (1.0 - p)) ** 2) / one_minus_cp ** 2
    d2 = np.where(s == 1.0, d2_pos, d2_neg)
    return d1, np.clip(-d2, 1e-10, None)


def fit_joint(X, s, seed: int = 0, max_iter: int = 200, tol: float = 1e-9,
              c_fixed: float | None = None) -> JointModel:
    """Maximize the PU likelihood sum s*log(c*sigma) + (1-s)*log(1-c*sigma).

    Alternates a damped Newton step in beta (fixed c) with a bounded 1-D
    optimization in c (fixed beta) until the joint log-likelihood stops
    improving. c is box-constrained to (1e-3, 1].
    """
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    s = np.asarray(s, dtype=float)
    if np.all(s == 0):
        raise ValueError("no labeled examples (all s = 0)")
    if np.all(s == 1):
        raise ValueError("labels are single-class (all s = 1)")
    n, k = X.shape
    Xt = np.hstack([np.ones((n, 1)), X])

    def optimize(theta0, c0):
        theta, c = theta0.copy(), c0
        eta = Xt @ theta
        ll = _joint_loglik(eta, s, c)
        path = [ll]
        converged = False
        for _ in range(max_iter):
            # beta-step: damped Newton at fixed c
            for _ in range(50):
                d1, w = _joint_eta_derivs(eta, s, c)
                g = Xt.T @ d1 / n
                if np.max(np.abs(g)) < 1e-12:
                    break
                H = (Xt * w[:, None]).T @ Xt / n + 1e-10 * np.eye(k + 1)
                try:
                    step = np.linalg.solve(H, g)
                except np.linalg.LinAlgError:
                    step = np.linalg.lstsq(H, g, rcond=None)[0]
                alpha, gained = 1.0, 0.0
                for _ in range(40):
                    cand = theta + alpha * step
                    eta_c = Xt @ cand
                    ll_c = _joint_loglik(eta_c, s, c)
                    if ll_c > ll:
                        gained = ll_c - ll
                        theta, eta, ll = cand, eta_c, ll_c
                        break
                    alpha *= 0.5
                if gained < 0.1 * tol or np.linalg.norm(theta) > 1e4:
                    break
            # c-step: bounded 1-D maximization at fixed beta
            if c_fixed is None:
                res = minimize_scalar(lambda cc: -_joint_loglik(eta, s, cc),
                                      bounds=(C_MIN, 1.0), method="bounded",
                                      options={"xatol": 1e-12})
                if -res.fun > ll:
                    c, ll = float(res.x), float(-res.fun)
            path.append(ll)
            if path[-1] - path[-2] < tol:
                converged = True
                break
        return theta, c, ll, path, converged

    naive = fit_logistic(X, s)
    theta0 = np.concatenate([[naive.intercept], naive.beta])
    if c_fixed is not None:
        c0 = float(c_fixed)
    else:
        # mean naive posterior over labeled rows estimates the label frequency
        c0 = float(np.clip(np.mean(sigmoid(Xt @ theta0)[s == 1.0]), C_MIN + 1e-9, 1.0))
    theta, c, ll, path, converged = optimize(theta0, c0)
    if not converged:
        # one seeded restart from a perturbed start; keep the better optimum
        rng = np.random.default_rng(seed)
        alt = optimize(theta0 + 0.5 * rng.standard_normal(theta0.shape), c0)
        if alt[2] > ll:
            theta, c, ll, path, converged = alt
    coef = Coefficients(intercept=float(theta[0]), beta=theta[1:].copy())
    return JointModel(coefficients=coef, c_hat=float(c), converged=converged,
                      loglik=ll, loglik_path=path)


def predict_posterior(model, X) -> np.ndarray:
    """Posterior P(Y=1|x) = sigmoid(x' beta); the label frequency divides out."""
    coef = model.coefficients if isinstance(model, JointModel) else model
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    if X.shape[1] != coef.beta.shape[0]:
        raise ValueError(f"feature arity mismatch: model has {coef.beta.shape[0]}, X has {X.shape[1]}")
    return sigmoid(coef.intercept + X @ coef.beta)


def lasso_joint_pipeline(X, s, seed: int = 0, n_folds: int = 10,
                         grid_size: int = 100, delta_factor: float = 0.5) -> JointModel:
    """CV-tuned Lasso, threshold at delta = delta_factor * lambda_min, then joint fit.

    Returns a JointModel whose coefficient vector is expanded back to the
    full feature arity (zeros outside the selected support).
    """
    X = np.asarray(X, dtype=float)
    sel = cv_select_lambda(X, s, n_folds=n_folds, grid_size=grid_size, seed=seed)
    lasso = fit_lasso(X, s, sel.lambda_min)
    supp = sorted(threshold_support(lasso, delta_factor * sel.lambda_min))
    jm = fit_joint(X[:, supp], s, seed=seed)
    beta_full = np.zeros(X.shape[1])
    beta_full[supp] = jm.coefficients.beta
    coef = Coefficients(intercept=jm.coefficients.intercept, beta=beta_full,
                        lam=sel.lambda_min, converged=jm.converged)
    return JointModel(coefficients=coef, c_hat=jm.c_hat, converged=jm.converged,
                      loglik=jm.loglik, loglik_path=jm.loglik_path)
