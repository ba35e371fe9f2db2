"""Positive-unlabeled classification via cluster cleaning and logistic models.

The package provides: dataset loading/preprocessing (`data`), SCAR and
non-SCAR surrogate-label generators (`labelling`), 2-means clustering
(`cluster`), penalized logistic machinery and the joint (beta, c)
likelihood (`glm`), the pecking cleaning procedure (`pecking`),
classification metrics (`metrics`) and a reproducible benchmark harness
(`harness`).
"""

from .cluster import Clustering, two_means
from .data import (Dataset, DatasetSummary, RawTable, generate_artif, load_csv,
                   mean_abs_corr, preprocess, summarize)
from .glm import (Coefficients, JointModel, LambdaSelection, cv_select_lambda,
                  fit_joint, fit_lasso, fit_logistic, lasso_joint_pipeline,
                  lasso_path, predict_posterior, sigmoid, threshold_support)
from .harness import (ExperimentConfig, ResultRow, emit_report, replication_count,
                      run_experiment, summarize_raw)
from .labelling import SurrogateAssignment, empirical_c, non_scar_label, scar_label
from .metrics import ConfusionCounts, accuracy, auc, confusion, f1
from .pecking import (CleanedLabels, GlmConfig, PeckedModel, aggregate_coefficients,
                      peck_once, run_pecking)

__version__ = "0.1.0"
