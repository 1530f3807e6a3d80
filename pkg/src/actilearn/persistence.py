"""Plain-text key-value persistence for trained models and reduction
artifacts.

Format: one ``key = value`` pair per line, starting with ``model_type`` and
``format_version``. Floats are written with ``repr`` so a save/load round
trip reproduces predictions bit for bit.
"""

from __future__ import annotations

import numpy as np

from .classifiers import (KnnClassifier, MlpClassifier, QdaClassifier,
                          StandardizedClassifier, SvmBinaryClassifier,
                          SvmOvaClassifier)
from .features import Standardizer
from .reduction import FeatureSubset, LdaProjection

FORMAT_VERSION = 1


def _fmt(v) -> str:
    return repr(float(v))


def _fmt_vec(a) -> str:
    return " ".join(repr(float(v)) for v in np.asarray(a, dtype=np.float64).ravel())


def _parse_vec(s: str) -> np.ndarray:
    if not s.strip():
        return np.empty(0)
    return np.array([float(tok) for tok in s.split()], dtype=np.float64)


def _matrix_items(key: str, M) -> list[tuple[str, str]]:
    M = np.asarray(M, dtype=np.float64)
    return [(f"{key}.{i}", _fmt_vec(M[i])) for i in range(M.shape[0])]


def _parse_matrix(kv: dict, key: str, rows: int) -> np.ndarray:
    return np.stack([_parse_vec(kv[f"{key}.{i}"]) for i in range(rows)])


def _scaler_items(prefix: str, scaler: Standardizer) -> list[tuple[str, str]]:
    return [(f"{prefix}.mean", _fmt_vec(scaler.mean_)),
            (f"{prefix}.std", _fmt_vec(scaler.std_))]


def _scaler_from(kv: dict, prefix: str) -> Standardizer:
    scaler = Standardizer()
    scaler.mean_ = _parse_vec(kv[f"{prefix}.mean"])
    scaler.std_ = _parse_vec(kv[f"{prefix}.std"])
    return scaler


def _qda_items(model: QdaClassifier) -> list[tuple[str, str]]:
    c = model.class_count
    items = [("reg", _fmt(model.reg)), ("class_count", str(c)),
             ("dim", str(model.means_.shape[1])),
             ("priors", _fmt_vec(model.priors_)),
             ("log_dets", _fmt_vec(model.log_dets_)),
             ("lambdas", _fmt_vec(model.lambdas_))]
    items += _matrix_items("mean", model.means_)
    for i in range(c):
        items += _matrix_items(f"cov.{i}", model.covariances_[i])
    return items


def _qda_from(kv: dict) -> QdaClassifier:
    model = QdaClassifier(reg=float(kv["reg"]))
    c = int(kv["class_count"])
    d = int(kv["dim"])
    model.priors_ = _parse_vec(kv["priors"])
    model.log_dets_ = _parse_vec(kv["log_dets"])
    model.lambdas_ = _parse_vec(kv["lambdas"])
    model.means_ = _parse_matrix(kv, "mean", c)
    model.covariances_ = np.stack([_parse_matrix(kv, f"cov.{i}", d) for i in range(c)])
    return model


def _knn_items(model: KnnClassifier) -> list[tuple[str, str]]:
    items = [("k", str(model.k)), ("class_count", str(model.class_count)),
             ("labels", " ".join(str(int(v)) for v in model.labels_))]
    items += _scaler_items("scaler", model.scaler)
    items += _matrix_items("train", model.train_)
    return items


def _knn_from(kv: dict) -> KnnClassifier:
    model = KnnClassifier(k=int(kv["k"]))
    model.class_count = int(kv["class_count"])
    model.labels_ = np.array([int(v) for v in kv["labels"].split()], dtype=np.int64)
    model.scaler = _scaler_from(kv, "scaler")
    model.train_ = _parse_matrix(kv, "train", model.labels_.size)
    return model


def _svm_binary_items(prefix: str, b: SvmBinaryClassifier) -> list[tuple[str, str]]:
    items = [
        (f"{prefix}.sigma", _fmt(b.sigma)), (f"{prefix}.c_box", _fmt(b.c_box)),
        (f"{prefix}.tol", _fmt(b.tol)), (f"{prefix}.max_iter", str(b.max_iter)),
        (f"{prefix}.target_class", str(b.target_class)),
        (f"{prefix}.bias", _fmt(b.bias_)),
        (f"{prefix}.converged", "true" if b.converged_ else "false"),
        (f"{prefix}.kkt_violation", _fmt(b.kkt_violation_)),
        (f"{prefix}.support_count", str(b.support_vectors_.shape[0])),
        (f"{prefix}.coef", _fmt_vec(b.coef_)),
    ]
    items += _matrix_items(f"{prefix}.sv", b.support_vectors_)
    return items


def _svm_binary_from(kv: dict, prefix: str, dim: int) -> SvmBinaryClassifier:
    b = SvmBinaryClassifier(sigma=float(kv[f"{prefix}.sigma"]),
                            c_box=float(kv[f"{prefix}.c_box"]),
                            tol=float(kv[f"{prefix}.tol"]),
                            max_iter=int(kv[f"{prefix}.max_iter"]),
                            target_class=int(kv[f"{prefix}.target_class"]))
    b.bias_ = float(kv[f"{prefix}.bias"])
    b.converged_ = kv[f"{prefix}.converged"] == "true"
    b.kkt_violation_ = float(kv[f"{prefix}.kkt_violation"])
    count = int(kv[f"{prefix}.support_count"])
    b.coef_ = _parse_vec(kv[f"{prefix}.coef"])
    if count:
        b.support_vectors_ = _parse_matrix(kv, f"{prefix}.sv", count)
    else:
        b.support_vectors_ = np.empty((0, dim))
    return b


def _svm_items(model: SvmOvaClassifier) -> list[tuple[str, str]]:
    items = [("class_count", str(model.class_count)),
             ("dim", str(model.binaries_[0].support_vectors_.shape[1])),
             ("c_box", _fmt(model.c_box)), ("tol", _fmt(model.tol)),
             ("max_iter", str(model.max_iter))]
    for c, b in enumerate(model.binaries_):
        items += _svm_binary_items(f"binary.{c}", b)
    return items


def _svm_from(kv: dict) -> SvmOvaClassifier:
    model = SvmOvaClassifier(c_box=float(kv["c_box"]), tol=float(kv["tol"]),
                             max_iter=int(kv["max_iter"]))
    model.class_count = int(kv["class_count"])
    dim = int(kv["dim"])
    model.binaries_ = [_svm_binary_from(kv, f"binary.{c}", dim)
                       for c in range(model.class_count)]
    model.sigma = model.binaries_[0].sigma if model.binaries_ else None
    return model


def _mlp_items(model: MlpClassifier) -> list[tuple[str, str]]:
    items = [("hidden", str(model.hidden)), ("epochs", str(model.epochs)),
             ("learning_rate", _fmt(model.learning_rate)),
             ("momentum", _fmt(model.momentum)),
             ("batch_size", str(model.batch_size)), ("seed", str(model.seed)),
             ("class_count", str(model.class_count)),
             ("dim", str(model.w1.shape[0])),
             ("b1", _fmt_vec(model.b1)), ("b2", _fmt_vec(model.b2))]
    items += _matrix_items("w1", model.w1)
    items += _matrix_items("w2", model.w2)
    return items


def _mlp_from(kv: dict) -> MlpClassifier:
    model = MlpClassifier(hidden=int(kv["hidden"]), epochs=int(kv["epochs"]),
                          learning_rate=float(kv["learning_rate"]),
                          momentum=float(kv["momentum"]),
                          batch_size=int(kv["batch_size"]), seed=int(kv["seed"]))
    model.class_count = int(kv["class_count"])
    dim = int(kv["dim"])
    model.b1 = _parse_vec(kv["b1"])
    model.b2 = _parse_vec(kv["b2"])
    model.w1 = _parse_matrix(kv, "w1", dim)
    model.w2 = _parse_matrix(kv, "w2", model.hidden)
    return model


def _standardized_items(model: StandardizedClassifier) -> list[tuple[str, str]]:
    items = _scaler_items("scaler", model.scaler)
    items += [("base." + k, v) for k, v in _model_items(model.base)]
    return items


def _standardized_from(kv: dict) -> StandardizedClassifier:
    base_kv = {k[len("base."):]: v for k, v in kv.items() if k.startswith("base.")}
    model = StandardizedClassifier(_model_from(base_kv))
    model.scaler = _scaler_from(kv, "scaler")
    return model


def _lda_items(proj: LdaProjection) -> list[tuple[str, str]]:
    items = [("dim", str(proj.mean.size)), ("components", str(proj.components)),
             ("mean", _fmt_vec(proj.mean)),
             ("eigenvalues", _fmt_vec(proj.eigenvalues))]
    items += _matrix_items("axis", proj.matrix.T)  # one row per component
    return items


def _lda_from(kv: dict) -> LdaProjection:
    m = int(kv["components"])
    matrix = _parse_matrix(kv, "axis", m).T
    return LdaProjection(_parse_vec(kv["mean"]), matrix, _parse_vec(kv["eigenvalues"]))


def _subset_items(subset: FeatureSubset) -> list[tuple[str, str]]:
    return [("indices", " ".join(str(i) for i in subset.indices)),
            ("scores", _fmt_vec(subset.scores))]


def _subset_from(kv: dict) -> FeatureSubset:
    indices = [int(v) for v in kv["indices"].split()] if kv["indices"].strip() else []
    return FeatureSubset(indices, [float(v) for v in _parse_vec(kv["scores"])])


_TYPE_NAMES = {
    QdaClassifier: "qda", KnnClassifier: "knn", SvmOvaClassifier: "svm",
    MlpClassifier: "mlp", StandardizedClassifier: "standardized",
    LdaProjection: "lda_projection", FeatureSubset: "feature_subset",
}
_ITEMS = {
    "qda": _qda_items, "knn": _knn_items, "svm": _svm_items, "mlp": _mlp_items,
    "standardized": _standardized_items, "lda_projection": _lda_items,
    "feature_subset": _subset_items,
}
_FROM = {
    "qda": _qda_from, "knn": _knn_from, "svm": _svm_from, "mlp": _mlp_from,
    "standardized": _standardized_from, "lda_projection": _lda_from,
    "feature_subset": _subset_from,
}


def _model_items(model) -> list[tuple[str, str]]:
    for cls, name in _TYPE_NAMES.items():
        if type(model) is cls:
            return [("model_type", name), ("format_version", str(FORMAT_VERSION))] \
                + _ITEMS[name](model)
    raise TypeError(f"cannot persist object of type {type(model).__name__}")


def _model_from(kv: dict):
    name = kv.get("model_type")
    if name not in _FROM:
        raise ValueError(f"unknown model_type {name!r}")
    version = int(kv.get("format_version", "0"))
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported format_version {version}; this build reads {FORMAT_VERSION}")
    return _FROM[name](kv)


def model_to_text(model) -> str:
    return "".join(f"{k} = {v}\n" for k, v in _model_items(model))


def model_from_text(text: str):
    kv: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"malformed model line {lineno}: {line!r}")
        key, _, value = line.partition("=")
        kv[key.strip()] = value.strip()
    return _model_from(kv)


def save_model(path, model) -> None:
    from .fileio import atomic_write
    atomic_write(path, model_to_text(model))


def load_model(path):
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_text(fh.read())
