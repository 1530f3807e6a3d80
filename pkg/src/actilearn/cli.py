"""Command-line surface: synthetic data, feature extraction, training,
evaluation, reduction fitting, and the passive/active experiment drivers."""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .activities import ACTIVITY_NAMES, activity_name
from .active import QueryStrategy, run_active_learning
from .classifiers import CLASSIFIER_KINDS, make_classifier
from .config import classifier_hyper, load_config
from .fileio import (atomic_write, canonical_feature_check, read_curve,
                     read_features, read_raw_stream, write_curve,
                     write_curve_long, write_features, write_raw_stream,
                     write_report)
from .harness import (Dataset, PassiveConfig, dataset_from_streams, evaluate,
                      run_passive_experiment, split_dataset, summary_rows)
from .persistence import load_model, save_model
from .reduction import FeatureSubset, LdaProjection, fit_lda, project, sfs_select
from .svgplot import curve_plot_svg
from .synth import SynthSpec, default_class_specs, generate_synthetic


def _out_path(args, name: str) -> str:
    os.makedirs(args.out_dir, exist_ok=True)
    return os.path.join(args.out_dir, name)


def _pipeline_kwargs(cfg) -> dict:
    return {
        "rate": cfg.getfloat("pipeline", "rate_hz"),
        "cutoff": cfg.getfloat("pipeline", "cutoff_hz"),
        "gap_threshold": cfg.getfloat("pipeline", "gap_threshold_s"),
        "window_size": cfg.getint("pipeline", "window_size"),
        "overlap_fraction": cfg.getfloat("pipeline", "overlap_fraction"),
    }


def _apply_reduction(args, X: np.ndarray) -> np.ndarray:
    if getattr(args, "lda", None):
        proj = load_model(args.lda)
        if not isinstance(proj, LdaProjection):
            raise ValueError(f"{args.lda} does not hold a discriminant projection")
        return project(proj, X)
    if getattr(args, "subset", None):
        subset = load_model(args.subset)
        if not isinstance(subset, FeatureSubset):
            raise ValueError(f"{args.subset} does not hold a feature subset")
        return X[:, subset.indices]
    return X


def cmd_synth(args, cfg) -> int:
    spec = SynthSpec(
        classes=default_class_specs(cfg.getfloat("synth", "noise_std")),
        duration_s=cfg.getfloat("synth", "duration_s"),
        rate_hz=cfg.getfloat("synth", "rate_hz"),
        seed=args.seed,
    )
    for label, stream in enumerate(generate_synthetic(spec)):
        path = _out_path(args, f"raw_{activity_name(label)}.csv")
        write_raw_stream(path, stream)
        print(path)
    return 0


def cmd_features(args, cfg) -> int:
    streams = [read_raw_stream(p) for p in args.inputs]
    data = dataset_from_streams(streams, provenance=";".join(args.inputs),
                                **_pipeline_kwargs(cfg))
    if data.X.shape[0] == 0:
        raise ValueError("no labeled windows produced; check inputs and window size")
    out = _out_path(args, args.out)
    write_features(out, data)
    print(f"{out}: {data.X.shape[0]} windows x {data.X.shape[1]} features")
    return 0


def cmd_lda(args, cfg) -> int:
    data = read_features(args.features)
    components = cfg.get("lda", "components").strip()
    m = int(components) if components else None
    proj = fit_lda(data.X, data.y, m)
    out = _out_path(args, args.out)
    save_model(out, proj)
    print(f"{out}: {proj.components} components, eigenvalues "
          + " ".join(f"{v:.4g}" for v in proj.eigenvalues))
    return 0


def cmd_sfs(args, cfg) -> int:
    data = read_features(args.features)
    hyper = classifier_hyper(cfg, args.classifier, args.seed)
    subset = sfs_select(data.X, data.y,
                        lambda: make_classifier(args.classifier, **hyper),
                        target_size=cfg.getint("sfs", "target_size"),
                        folds=cfg.getint("sfs", "folds"), seed=args.seed,
                        class_count=data.class_count)
    out = _out_path(args, args.out)
    save_model(out, subset)
    for idx, score in zip(subset.indices, subset.scores):
        print(f"{data.feature_names[idx]} (index {idx}): cv rate {score:.4f}")
    print(out)
    return 0


def cmd_train(args, cfg) -> int:
    data = read_features(args.features)
    X = _apply_reduction(args, data.X)
    hyper = classifier_hyper(cfg, args.classifier, args.seed)
    model = make_classifier(args.classifier, **hyper)
    model.fit(X, data.y, data.class_count)
    out = _out_path(args, args.out)
    save_model(out, model)
    print(out)
    return 0


def cmd_eval(args, cfg) -> int:
    data = read_features(args.features)
    X = _apply_reduction(args, data.X)
    model = load_model(args.model)
    view = Dataset(X, data.y, data.class_names,
                   tuple(f"f{i}" for i in range(X.shape[1])), data.provenance)
    report = evaluate(model, view, {"model": args.model, "features": args.features})
    out = _out_path(args, args.out)
    write_report(out, report)
    print(f"classification rate: {report.rate!r}")
    print(out)
    return 0


def cmd_passive(args, cfg) -> int:
    data = read_features(args.features)
    canonical_feature_check(data)
    hyper = {kind: classifier_hyper(cfg, kind, args.seed) for kind in CLASSIFIER_KINDS}
    components = cfg.get("lda", "components").strip()
    config = PassiveConfig(
        train_fraction=cfg.getfloat("split", "train_fraction"),
        seed=args.seed,
        lda_components=int(components) if components else None,
        sfs_target_size=cfg.getint("sfs", "target_size"),
        sfs_folds=cfg.getint("sfs", "folds"),
        hyper=hyper,
    )
    result = run_passive_experiment(data, config)
    for (kind, space), report in sorted(result.reports.items()):
        write_report(_out_path(args, f"passive_{kind}_{space}.report.txt"), report)
    rows = summary_rows(result)
    summary = "classifier,space,rate\n" + "\n".join(",".join(r) for r in rows) + "\n"
    atomic_write(_out_path(args, "passive_summary.csv"), summary)
    for kind, space, rate in rows:
        print(f"{kind:5s} {space:9s} {rate}")
    print(_out_path(args, "passive_summary.csv"))
    return 0


def cmd_active(args, cfg) -> int:
    data = read_features(args.features)
    hyper = classifier_hyper(cfg, args.classifier, args.seed)
    factory = lambda: make_classifier(args.classifier, **hyper)
    common = {
        "rounds": cfg.getint("active", "rounds"),
        "runs": cfg.getint("active", "runs"),
        "seeds_per_class": cfg.getint("active", "seeds_per_class"),
        "test_fraction": cfg.getfloat("active", "test_fraction"),
        "master_seed": args.seed,
    }
    strategies = [("uncertainty", QueryStrategy("uncertainty", cfg.getfloat("active", "epsilon")))]
    if args.baseline:
        strategies.append(("random", QueryStrategy("random")))
    curves = []
    for name, strategy in strategies:
        curve = run_active_learning(data.X, data.y, factory, strategy, **common)
        write_curve(_out_path(args, f"curve_{args.classifier}_{name}.csv"), curve)
        write_curve_long(_out_path(args, f"curve_{args.classifier}_{name}_runs.csv"), curve)
        for warning in curve.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        curves.append((name, curve.mean_curve))
        print(f"{name}: final mean rate {float(curve.mean_curve[-1])!r}")
    svg = curve_plot_svg(curves, f"{args.classifier} active learning")
    atomic_write(_out_path(args, f"curve_{args.classifier}.svg"), svg)
    print(_out_path(args, f"curve_{args.classifier}.svg"))
    return 0


def cmd_report(args, cfg) -> int:
    curve_files = sorted(f for f in os.listdir(args.in_dir)
                         if f.startswith("curve_") and f.endswith(".csv")
                         and not f.endswith("_runs.csv"))
    if not curve_files:
        raise ValueError(f"no curve files found in {args.in_dir}")
    series = []
    for fname in curve_files:
        _, mean, _ = read_curve(os.path.join(args.in_dir, fname))
        series.append((fname[len("curve_"):-len(".csv")], mean))
        print(f"{fname}: final mean rate {float(mean[-1])!r}")
    svg = curve_plot_svg(series, "learning curves")
    out = _out_path(args, "curves_overview.svg")
    atomic_write(out, svg)
    print(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    common.add_argument("--config", default=None, help="key=value config file")
    common.add_argument("--out-dir", default=".", help="output directory (default .)")

    parser = argparse.ArgumentParser(
        prog="actilearn",
        description="Accelerometer activity recognition and active-learning experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", parents=[common], help="emit synthetic raw streams")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("features", parents=[common], help="raw stream CSVs -> feature file")
    p.add_argument("inputs", nargs="+", help="raw stream CSV files")
    p.add_argument("--out", default="features.csv")
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("lda", parents=[common], help="fit a discriminant projection")
    p.add_argument("--features", required=True)
    p.add_argument("--out", default="lda.txt")
    p.set_defaults(func=cmd_lda)

    p = sub.add_parser("sfs", parents=[common], help="greedy wrapper feature selection")
    p.add_argument("--features", required=True)
    p.add_argument("--classifier", choices=CLASSIFIER_KINDS, default="knn")
    p.add_argument("--out", default="sfs.txt")
    p.set_defaults(func=cmd_sfs)

    p = sub.add_parser("train", parents=[common], help="fit one classifier")
    p.add_argument("--features", required=True)
    p.add_argument("--classifier", choices=CLASSIFIER_KINDS, required=True)
    p.add_argument("--lda", default=None, help="projection file to apply first")
    p.add_argument("--subset", default=None, help="feature subset file to apply first")
    p.add_argument("--out", default="model.txt")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", parents=[common], help="evaluate a saved model")
    p.add_argument("--features", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--lda", default=None, help="projection file applied at train time")
    p.add_argument("--subset", default=None, help="subset file applied at train time")
    p.add_argument("--out", default="eval.report.txt")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("passive", parents=[common],
                       help="full classifier x feature-space grid")
    p.add_argument("--features", required=True)
    p.set_defaults(func=cmd_passive)

    p = sub.add_parser("active", parents=[common], help="active-learning curves")
    p.add_argument("--features", required=True)
    p.add_argument("--classifier", choices=CLASSIFIER_KINDS, default="knn")
    p.add_argument("--baseline", action=argparse.BooleanOptionalAction, default=True,
                   help="also run the random-sampling baseline (default on)")
    p.set_defaults(func=cmd_active)

    p = sub.add_parser("report", parents=[common], help="summarize emitted curve files")
    p.add_argument("--in-dir", required=True)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except Exception as exc:  # one-line machine-parsable failure
        message = str(exc).replace("\n", " ")
        print(f"error: {type(exc).__name__}: {message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
