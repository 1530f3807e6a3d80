import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for oracles.py

from actilearn.harness import dataset_from_streams
from actilearn.signals import Window
from actilearn.synth import SynthSpec, default_class_specs, generate_synthetic


def random_window(rng, label=0, size=256, scale=1.0):
    return Window(rng.normal(0.0, scale, size=(size, 3)), label, (0, 0))


@pytest.fixture(scope="session")
def default_dataset():
    """The default synthetic dataset (60 s per class, generator seed 42)."""
    return dataset_from_streams(generate_synthetic(SynthSpec(seed=42)))


@pytest.fixture(scope="session")
def pool_dataset():
    """Larger synthetic dataset sized for active-learning experiments."""
    spec = SynthSpec(classes=default_class_specs(), duration_s=300.0, seed=42)
    return dataset_from_streams(generate_synthetic(spec))


@pytest.fixture(scope="session")
def gaussian_blobs():
    """Three well-separated 2-D blobs (>= 6 sigma between means)."""
    rng = np.random.default_rng(11)
    centers = np.array([[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]])
    X = np.vstack([rng.normal(c, 1.0, size=(60, 2)) for c in centers])
    y = np.repeat(np.arange(3), 60)
    return X, y
