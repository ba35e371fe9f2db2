"""2-means clustering (Lloyd's algorithm with k-means++ seeding and restarts)."""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class Clustering:
    assignment: np.ndarray        # length-m vector in {0,1}
    centroids: np.ndarray         # 2 x p
    within_sse: float
    iterations: int
    converged: bool
    sse_path: list = field(default_factory=list)  # SSE after each Lloyd iteration


def _init_plusplus(points, rng):
    """k-means++ seeding for k=2: first centroid uniform, second ~ squared distance."""
    m = points.shape[0]
    i0 = int(rng.integers(m))
    c0 = points[i0]
    d2 = np.sum((points - c0) ** 2, axis=1)
    total = d2.sum()
    if total <= 0.0:
        # all points coincide with the first centroid; caller guards this globally
        i1 = int(rng.integers(m))
    else:
        i1 = int(rng.choice(m, p=d2 / total))
    return np.vstack([c0, points[i1]]).astype(float)


def _hartigan_refine(points, assignment, max_moves=200):
    """Strictly improving single-point moves until none remain.

    Lloyd stops at assignment-stable solutions that a single reassignment
    (with the centroid update priced in) can still improve; this polish
    removes exactly those. Returns (assignment, centroids, sse).
    """
    assignment = assignment.copy()
    for _ in range(max_moves):
        sizes = np.array([np.sum(assignment == 0), np.sum(assignment == 1)])
        cents = np.vstack([points[assignment == k].mean(axis=0) for k in (0, 1)])
        d = np.stack([np.sum((points - cents[k]) ** 2, axis=1) for k in (0, 1)], axis=1)
        own = assignment
        other = 1 - assignment
        n_own = sizes[own]
        n_other = sizes[other]
        rows = np.arange(points.shape[0])
        with np.errstate(divide="ignore", invalid="ignore"):
            gain = (n_other / (n_other + 1.0)) * d[rows, other] - \
                   (n_own / (n_own - 1.0)) * d[rows, own]
        gain[n_own <= 1] = np.inf  # a lone member may not leave its cluster
        best = int(np.argmin(gain))
        if gain[best] >= -1e-12:
            break
        assignment[best] = other[best]
    cents = np.vstack([points[assignment == k].mean(axis=0) for k in (0, 1)])
    d0 = np.sum((points - cents[0]) ** 2, axis=1)
    d1 = np.sum((points - cents[1]) ** 2, axis=1)
    sse = float(np.where(assignment == 1, d1, d0).sum())
    return assignment, cents, sse


def _lloyd(points, centroids, max_iter, tol):
    m = points.shape[0]
    assignment = np.zeros(m, dtype=np.int64)
    sse_path = []
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        d0 = np.sum((points - centroids[0]) ** 2, axis=1)
        d1 = np.sum((points - centroids[1]) ** 2, axis=1)
        new_assignment = (d1 < d0).astype(np.int64)

        # empty-cluster repair: move the point farthest from its centroid
        for k in (0, 1):
            if not np.any(new_assignment == k):
                dist_own = np.where(new_assignment == 1, d1, d0)
                far = int(np.argmax(dist_own))
                new_assignment[far] = k

        new_centroids = np.vstack([
            points[new_assignment == 0].mean(axis=0),
            points[new_assignment == 1].mean(axis=0),
        ])
        d0 = np.sum((points - new_centroids[0]) ** 2, axis=1)
        d1 = np.sum((points - new_centroids[1]) ** 2, axis=1)
        sse = float(np.where(new_assignment == 1, d1, d0).sum())
        if sse_path:
            assert sse <= sse_path[-1] + 1e-9 * max(1.0, sse_path[-1])
        sse_path.append(sse)

        move = float(np.max(np.abs(new_centroids - centroids)))
        stable = np.array_equal(new_assignment, assignment) and it > 1
        assignment, centroids = new_assignment, new_centroids
        if stable or move < tol:
            converged = True
            break
    return assignment, centroids, sse_path[-1], it, converged, sse_path


def two_means(points, seed, n_restarts: int = 5, max_iter: int = 100, tol: float = 1e-8) -> Clustering:
    """Best-of-restarts Lloyd's 2-means; deterministic given seed.

    Restart r uses its own stream derived from (seed, r); the best restart
    by within-cluster SSE wins, ties going to the lowest restart index.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim == 1:
        points = points[:, None]
    m = points.shape[0]
    if m < 2:
        raise ValueError("2-means needs at least 2 points")
    if np.all(points == points[0]):
        raise ValueError("all points identical; no meaningful 2-partition exists")

    best = None
    for r in range(n_restarts):
        rng = np.random.default_rng([int(seed), r])
        centroids = _init_plusplus(points, rng)
        assignment, cents, sse, iters, conv, path = _lloyd(points, centroids, max_iter, tol)
        # polish: Lloyd-stable partitions need not be single-move-stable
        assignment, cents, sse_ref = _hartigan_refine(points, assignment)
        if sse_ref < sse - 1e-15:
            sse = sse_ref
            path = path + [sse_ref]
        if best is None or sse < best.within_sse:
            best = Clustering(assignment=assignment, centroids=cents, within_sse=sse,
                              iterations=iters, converged=conv, sse_path=path)
    if not (np.any(best.assignment == 0) and np.any(best.assignment == 1)):
        raise ValueError("degenerate clustering: an empty cluster survived repair")
    return best
