"""k-nearest-neighbor classification by exhaustive Euclidean scan."""

import numpy as np

from ..base import ParamsMixin, check_feature_matrix, check_labels, check_fitted
from ..errors import TrainingDegenerateError


class KNearestNeighbors(ParamsMixin):
    """Majority label among the k nearest stored samples.

    k must be a positive odd integer (default 1) no larger than the training
    set. Neighbor order is by squared Euclidean distance with ties at the
    lower training index; label ties break by the smallest summed neighbor
    distance, then by label order.
    """

    def __init__(self, k=1):
        self.k = k

    def fit(self, X, y):
        if self.k < 1 or self.k % 2 == 0:
            raise ValueError(f"k must be a positive odd integer, got {self.k}")
        X = check_feature_matrix(X)
        y = check_labels(y, X.shape[0])
        if self.k > X.shape[0]:
            raise TrainingDegenerateError(
                f"k={self.k} exceeds training size {X.shape[0]}"
            )
        self.X_ = X
        self.y_ = y
        self.classes_ = sorted(set(y))
        self.n_features_ = X.shape[1]
        return self

    def _predict_one(self, sq_dists):
        order = np.lexsort((np.arange(len(sq_dists)), sq_dists))
        nearest = order[: self.k]
        counts = {}
        dist_sum = {}
        for i in nearest:
            lab = self.y_[i]
            counts[lab] = counts.get(lab, 0) + 1
            dist_sum[lab] = dist_sum.get(lab, 0.0) + float(np.sqrt(sq_dists[i]))
        best = max(counts.values())
        tied = [lab for lab, c in counts.items() if c == best]
        tied.sort(key=lambda lab: (dist_sum[lab], lab))
        return tied[0]

    def predict(self, X):
        check_fitted(self, "X_")
        X = check_feature_matrix(X, n_features=self.n_features_)
        sq = (
            np.sum(X * X, axis=1)[:, None]
            + np.sum(self.X_ * self.X_, axis=1)[None, :]
            - 2.0 * (X @ self.X_.T)
        )
        np.maximum(sq, 0.0, out=sq)
        return [self._predict_one(row) for row in sq]

    def score(self, X, y):
        pred = self.predict(X)
        y = check_labels(y, len(pred))
        return float(np.mean([p == t for p, t in zip(pred, y)]))
