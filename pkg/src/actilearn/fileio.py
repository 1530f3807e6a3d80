"""Readers and writers for every file the pipeline emits.

All writes are whole-file atomic (temp file + rename) and deterministic:
floats are serialized with ``repr`` so identical runs produce byte-identical
files, and every format round-trips through its own reader.
"""

from __future__ import annotations

import configparser
import os
import tempfile

import numpy as np

from .activities import ACTIVITY_NAMES, activity_id, activity_name
from .features import FEATURE_NAMES
from .harness import Dataset, EvalReport
from .signals import RawStream

RAW_HEADER = "timestamp_s,ax_g,ay_g,az_g,label"
CURVE_HEADER = "round,mean_accuracy,std_accuracy"
CURVE_LONG_HEADER = "run,round,accuracy"


def atomic_write(path, text: str) -> None:
    """Write the whole file via a temp sibling and rename."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _r(v) -> str:
    return repr(float(v))


# -- raw accelerometer streams ------------------------------------------------

def write_raw_stream(path, stream: RawStream) -> None:
    lines = [RAW_HEADER]
    for i in range(len(stream)):
        x, y, z = stream.values[i]
        lines.append(f"{_r(stream.timestamps[i])},{_r(x)},{_r(y)},{_r(z)},"
                     f"{activity_name(int(stream.labels[i]))}")
    atomic_write(path, "\n".join(lines) + "\n")


def read_raw_stream(path) -> RawStream:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or lines[0] != RAW_HEADER:
        raise ValueError(f"{path}: expected header {RAW_HEADER!r}")
    times, values, labels = [], [], []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 5:
            raise ValueError(f"{path}:{lineno}: expected 5 comma-separated fields")
        times.append(float(parts[0]))
        values.append([float(parts[1]), float(parts[2]), float(parts[3])])
        labels.append(activity_id(parts[4]))
    return RawStream(times, values, labels)


# -- feature files -------------------------------------------------------------

def write_features(path, data: Dataset) -> None:
    lines = [",".join(data.feature_names) + ",label"]
    for i in range(data.X.shape[0]):
        row = ",".join(_r(v) for v in data.X[i])
        lines.append(f"{row},{activity_name(int(data.y[i]))}")
    atomic_write(path, "\n".join(lines) + "\n")


def read_features(path) -> Dataset:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty feature file")
    header = lines[0].split(",")
    if header[-1] != "label":
        raise ValueError(f"{path}: last column must be 'label'")
    names = tuple(header[:-1])
    expected = len(names)
    X, y = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != expected + 1:
            raise ValueError(f"{path}:{lineno}: expected {expected + 1} fields")
        X.append([float(v) for v in parts[:-1]])
        y.append(activity_id(parts[-1]))
    return Dataset(np.array(X, dtype=np.float64).reshape(len(X), expected),
                   np.array(y, dtype=np.int64),
                   class_names=ACTIVITY_NAMES, feature_names=names,
                   provenance=os.fspath(path))


def canonical_feature_check(data: Dataset) -> None:
    if data.feature_names != FEATURE_NAMES:
        raise ValueError("feature file does not carry the 31 canonical feature columns")


# -- learning curves -----------------------------------------------------------

def write_curve(path, curve) -> None:
    lines = [f"# warning: {w}" for w in curve.warnings]
    lines.append(CURVE_HEADER)
    mean, std = curve.mean_curve, curve.std_curve
    for rnd in range(curve.rounds + 1):
        lines.append(f"{rnd},{_r(mean[rnd])},{_r(std[rnd])}")
    atomic_write(path, "\n".join(lines) + "\n")


def read_curve(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns (rounds, mean, std); comment lines are skipped."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != CURVE_HEADER:
        raise ValueError(f"{path}: expected header {CURVE_HEADER!r}")
    rows = [ln.split(",") for ln in lines[1:]]
    rounds = np.array([int(r[0]) for r in rows])
    mean = np.array([float(r[1]) for r in rows])
    std = np.array([float(r[2]) for r in rows])
    return rounds, mean, std


def write_curve_long(path, curve) -> None:
    lines = [CURVE_LONG_HEADER]
    for run in range(curve.accuracies.shape[0]):
        for rnd in range(curve.rounds + 1):
            lines.append(f"{run},{rnd},{_r(curve.accuracies[run, rnd])}")
    atomic_write(path, "\n".join(lines) + "\n")


def read_curve_long(path) -> np.ndarray:
    """Returns the (runs, rounds + 1) accuracy matrix."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != CURVE_LONG_HEADER:
        raise ValueError(f"{path}: expected header {CURVE_LONG_HEADER!r}")
    rows = [ln.split(",") for ln in lines[1:]]
    runs = max(int(r[0]) for r in rows) + 1
    rounds = max(int(r[1]) for r in rows) + 1
    acc = np.zeros((runs, rounds))
    for r in rows:
        acc[int(r[0]), int(r[1])] = float(r[2])
    return acc


# -- evaluation reports --------------------------------------------------------

def write_report(path, report: EvalReport) -> None:
    lines = ["[config]"]
    for key in sorted(report.config):
        lines.append(f"{key} = {report.config[key]}")
    lines.append("")
    lines.append("[results]")
    lines.append(f"rate = {_r(report.rate)}")
    lines.append(f"per_class_recall = {' '.join(_r(v) for v in report.per_class_recall)}")
    lines.append("")
    lines.append("[confusion]")
    for i in range(report.confusion.shape[0]):
        lines.append(f"row_{i} = {' '.join(str(int(v)) for v in report.confusion[i])}")
    atomic_write(path, "\n".join(lines) + "\n")


def read_report(path) -> EvalReport:
    parser = configparser.ConfigParser()
    with open(path, "r", encoding="utf-8") as fh:
        parser.read_file(fh)
    config = dict(parser["config"]) if parser.has_section("config") else {}
    rate = float(parser["results"]["rate"])
    recall = np.array([float(v) for v in parser["results"]["per_class_recall"].split()])
    rows = []
    i = 0
    while parser.has_option("confusion", f"row_{i}"):
        rows.append([int(v) for v in parser["confusion"][f"row_{i}"].split()])
        i += 1
    return EvalReport(np.array(rows, dtype=np.int64), rate, recall, config)
