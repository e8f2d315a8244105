"""Labeled feature-vector datasets fed to the classifiers."""

from dataclasses import dataclass

import numpy as np

from ..base import check_feature_matrix, check_labels


def flatten_sequence(matrix):
    """Row-major flattening of a (T, cols) per-frame feature matrix.

    A 90-frame single-person matrix becomes a length-540 vector; the
    two-person matrix becomes length 1080.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D feature matrix, got shape {matrix.shape}")
    return matrix.reshape(-1)


@dataclass
class LabeledDataset:
    """Fixed-length feature vectors with class labels.

    vectors: (n, L) float array; labels: one string per row; label_set: the
    declared classes (training requires at least 2, each with >= 1 sample).
    Labels must be single tokens: no whitespace or commas, so they survive
    the text formats used for manifests and model files.
    """

    vectors: np.ndarray
    labels: list[str]
    label_set: tuple[str, ...] = ()

    def __post_init__(self):
        self.vectors = check_feature_matrix(self.vectors, name="vectors")
        self.labels = check_labels(self.labels, self.vectors.shape[0])
        for lab in self.labels:
            if not lab or any(ch.isspace() for ch in lab) or "," in lab:
                raise ValueError(f"label {lab!r} must be a single comma-free token")
        if not self.label_set:
            self.label_set = tuple(sorted(set(self.labels)))
        else:
            self.label_set = tuple(self.label_set)
            unknown = set(self.labels) - set(self.label_set)
            if unknown:
                raise ValueError(f"labels outside declared set: {sorted(unknown)}")

    def __len__(self):
        return self.vectors.shape[0]

    @property
    def n_features(self):
        return self.vectors.shape[1]

    @property
    def total_scalars(self):
        """Total count of feature scalars across all samples."""
        return int(self.vectors.size)

    def subset(self, indices):
        idx = list(indices)
        return LabeledDataset(
            self.vectors[idx], [self.labels[i] for i in idx], self.label_set
        )

    def class_counts(self):
        counts = {lab: 0 for lab in self.label_set}
        for lab in self.labels:
            counts[lab] += 1
        return counts
