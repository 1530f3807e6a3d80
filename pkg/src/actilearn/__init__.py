"""Accelerometer activity recognition with classical classifiers and
pool-based active learning."""

from .activities import ACTIVITY_NAMES, NUM_ACTIVITIES, UNLABELED, activity_id, activity_name
from .signals import (RawSample, RawStream, UniformSeries, Window,
                      lowpass_filter, make_windows, resample_uniform)
from .features import (FEATURE_NAMES, NUM_FEATURES, FeatureVector, Spectrum,
                       Standardizer, extract_features, feature_matrix,
                       power_spectrum, standardize)
from .classifiers import (KnnClassifier, MlpClassifier, QdaClassifier,
                          SvmBinaryClassifier, SvmOvaClassifier,
                          StandardizedClassifier, make_classifier)
from .reduction import FeatureSubset, LdaProjection, fit_lda, project, sfs_select
from .active import (LearningCurve, PoolState, QueryStrategy, run_active_learning,
                     select_query, uncertainty_ann, uncertainty_knn,
                     uncertainty_qda, uncertainty_scores, uncertainty_svm)
from .synth import ClassSignalSpec, SynthSpec, default_class_specs, generate_synthetic
from .harness import (Dataset, EvalReport, PassiveConfig, PassiveResult,
                      dataset_from_streams, evaluate, run_passive_experiment,
                      split_dataset)

__version__ = "0.1.0"
