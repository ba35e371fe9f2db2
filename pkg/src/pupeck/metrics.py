"""Binary classification metrics: confusion counts, accuracy, F1 and AUC."""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def confusion(y_true, y_pred) -> ConfusionCounts:
    """Count true/false positives and negatives of a hard 0/1 prediction."""
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    if y_true.shape != y_pred.shape:
        raise ValueError(f"length mismatch: {y_true.shape} vs {y_pred.shape}")
    if y_true.size < 1:
        raise ValueError("empty input")
    tp = int(np.sum((y_true == 1) & (y_pred == 1)))
    fp = int(np.sum((y_true == 0) & (y_pred == 1)))
    tn = int(np.sum((y_true == 0) & (y_pred == 0)))
    fn = int(np.sum((y_true == 1) & (y_pred == 0)))
    return ConfusionCounts(tp=tp, fp=fp, tn=tn, fn=fn)


def accuracy(cc: ConfusionCounts) -> float:
    if cc.total == 0:
        raise ValueError("no evaluated instances")
    return (cc.tp + cc.tn) / cc.total


def f1(cc: ConfusionCounts) -> float:
    """F1 = 2 * precision * recall / (precision + recall).

    Degenerate cases (no predicted positives or no actual positives)
    are defined as 0 and flagged with a warning.
    """
    if cc.total == 0:
        raise ValueError("no evaluated instances")
    if cc.tp + cc.fp == 0 or cc.tp + cc.fn == 0 or cc.tp == 0:
        warnings.warn("degenerate F1 (zero precision or recall denominator); returning 0.0")
        return 0.0
    precision = cc.tp / (cc.tp + cc.fp)
    recall = cc.tp / (cc.tp + cc.fn)
    return 2.0 * precision * recall / (precision + recall)


def auc(y_true, scores) -> float:
    """Probability that a random positive outscores a random negative.

    Mann-Whitney formulation with ties counted 1/2; equals the
    trapezoidal area under the ROC curve.
    """
    y_true = np.asarray(y_true)
    scores = np.asarray(scores, dtype=float)
    if y_true.shape != scores.shape:
        raise ValueError("length mismatch between labels and scores")
    n_pos = int(np.sum(y_true == 1))
    n_neg = int(np.sum(y_true == 0))
    if n_pos == 0 or n_neg == 0:
        raise ValueError("AUC requires both classes present")
    ranks = rankdata(scores)
    rank_sum_pos = float(np.sum(ranks[y_true == 1]))
    return (rank_sum_pos - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)
