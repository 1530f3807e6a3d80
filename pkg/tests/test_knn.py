import numpy as np
import pytest

from actilearn.classifiers import KnnClassifier

from oracles import brute_knn_predict


def test_training_point_with_k1_returns_own_label():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(30, 4))
    y = rng.integers(0, 3, size=30)
    model = KnnClassifier(k=1).fit(X, y)
    assert np.array_equal(model.predict(X), y)


def test_majority_vote():
    X = np.array([[0.0], [0.1], [5.0], [-0.1]])
    y = np.array([0, 0, 1, 1])
    model = KnnClassifier(k=3).fit(X, y)
    assert model.predict([[0.0]])[0] == 0  # neighbors 0, 0, 1


def test_vote_tie_resolves_to_nearest_tied_label():
    # k=2: one neighbor of each class; class of the nearest one wins.
    X = np.array([[0.0], [1.0], [10.0]])
    y = np.array([1, 0, 1])
    model = KnnClassifier(k=2).fit(X, y)
    assert model.predict([[0.1]])[0] == 1
    assert model.predict([[0.9]])[0] == 0


def test_distance_tie_prefers_smaller_training_index():
    # Symmetric integer data keeps standardization exact, so the two nearest
    # neighbors of the origin tie bit-for-bit; index order decides.
    X = np.array([[-1.0], [1.0], [3.0], [-3.0]])
    y = np.array([2, 0, 1, 1])
    model = KnnClassifier(k=1).fit(X, y)
    assert model.predict([[0.0]])[0] == 2


def test_matches_brute_force_oracle():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(200, 6))
    y = rng.integers(0, 5, size=200)
    queries = rng.normal(size=(1000, 6))
    for k in (1, 3, 5):
        model = KnnClassifier(k=k).fit(X, y)
        got = model.predict(queries)
        train_std = model.train_
        for i in range(queries.shape[0]):
            q_std = model.scaler.transform(queries[i:i + 1])[0]
            assert got[i] == brute_knn_predict(train_std, y, q_std, k)


def test_vote_proportions_sum_to_one():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(50, 3))
    y = rng.integers(0, 4, size=50)
    model = KnnClassifier(k=5).fit(X, y)
    props = model.vote_proportions(rng.normal(size=(20, 3)))
    np.testing.assert_allclose(props.sum(axis=1), 1.0)
    assert (props >= 0).all()


def test_scale_invariance_of_predictions():
    # Standardization absorbs any common positive rescaling of the inputs.
    rng = np.random.default_rng(3)
    X = rng.normal(size=(60, 4))
    y = rng.integers(0, 3, size=60)
    Xq = rng.normal(size=(25, 4))
    base = KnnClassifier(k=5).fit(X, y).predict(Xq)
    scaled = KnnClassifier(k=5).fit(X * 37.0, y).predict(Xq * 37.0)
    assert np.array_equal(base, scaled)


def test_rejects_bad_k():
    X = np.zeros((3, 2))
    y = np.array([0, 1, 0])
    with pytest.raises(ValueError, match="k="):
        KnnClassifier(k=4).fit(X, y)
    with pytest.raises(ValueError, match="k="):
        KnnClassifier(k=0).fit(X, y)


def test_rejects_dimension_mismatch():
    model = KnnClassifier(k=1).fit(np.zeros((4, 2)), np.array([0, 1, 0, 1]))
    with pytest.raises(ValueError, match="features"):
        model.predict([[1.0, 2.0, 3.0]])
