"""Key=value configuration files (INI sections) with documented defaults.

Every tunable in the pipeline has a key here; a config file only needs the
keys it wants to override. Empty string means "auto" where noted.
"""

from __future__ import annotations

import configparser

DEFAULTS: dict[str, dict[str, str]] = {
    "pipeline": {
        "rate_hz": "50.0",
        "cutoff_hz": "25.0",
        "gap_threshold_s": "1.0",
        "window_size": "256",
        "overlap_fraction": "0.0",
    },
    "synth": {
        "noise_std": "0.8",
        "duration_s": "60.0",
        "rate_hz": "50.0",
    },
    "split": {
        "train_fraction": "0.75",
    },
    "qda": {
        "reg": "1e-06",
    },
    "knn": {
        "k": "5",
    },
    "svm": {
        "sigma": "",        # auto: median pairwise training distance
        "c_box": "10.0",
        "tol": "0.001",
    },
    "mlp": {
        "hidden": "16",
        "epochs": "400",
        "learning_rate": "0.1",
        "momentum": "0.9",
        "batch_size": "16",
        "seed": "",         # auto: the experiment seed
    },
    "lda": {
        "components": "",   # auto: min(C - 1, d)
    },
    "sfs": {
        "target_size": "5",
        "folds": "5",
    },
    "active": {
        "rounds": "300",
        "runs": "50",
        "seeds_per_class": "4",
        "test_fraction": "0.25",
        "epsilon": "0.1",
    },
}


def load_config(path: str | None) -> configparser.ConfigParser:
    """Defaults overlaid with the file's sections; unknown keys rejected."""
    parser = configparser.ConfigParser()
    parser.read_dict(DEFAULTS)
    if path is not None:
        override = configparser.ConfigParser()
        with open(path, "r", encoding="utf-8") as fh:
            override.read_file(fh)
        for section in override.sections():
            if section not in DEFAULTS:
                raise ValueError(f"unknown config section [{section}]")
            for key, value in override[section].items():
                if key not in DEFAULTS[section]:
                    raise ValueError(f"unknown config key {key!r} in section [{section}]")
                parser[section][key] = value
    return parser


def classifier_hyper(cfg: configparser.ConfigParser, kind: str, seed: int) -> dict:
    """Constructor keywords for one classifier kind."""
    if kind == "qda":
        return {"reg": cfg.getfloat("qda", "reg")}
    if kind == "knn":
        return {"k": cfg.getint("knn", "k")}
    if kind == "svm":
        sigma = cfg.get("svm", "sigma").strip()
        return {"sigma": float(sigma) if sigma else None,
                "c_box": cfg.getfloat("svm", "c_box"),
                "tol": cfg.getfloat("svm", "tol")}
    if kind == "mlp":
        mlp_seed = cfg.get("mlp", "seed").strip()
        return {"hidden": cfg.getint("mlp", "hidden"),
                "epochs": cfg.getint("mlp", "epochs"),
                "learning_rate": cfg.getfloat("mlp", "learning_rate"),
                "momentum": cfg.getfloat("mlp", "momentum"),
                "batch_size": cfg.getint("mlp", "batch_size"),
                "seed": int(mlp_seed) if mlp_seed else seed}
    raise ValueError(f"unknown classifier kind {kind!r}")
