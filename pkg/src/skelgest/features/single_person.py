"""Single-person hand-gesture features.

Six per-frame features: for each of six fixed arm triangles, the Euclidean
distance from the triangle's centroid to the spine joint, divided by the
mean sensor depth of the two points. Dividing by depth makes the features
dimensionless and independent of how far the subject stands from the sensor.
"""

import io

import numpy as np

from ..base import ParamsMixin
from ..errors import DegenerateDepthError
from ..skeleton import Joint

# Fixed feature order: shoulder-level, forearm-level, hand-level, left before
# right at each level. Classifier input columns depend on this order.
TRIANGLES = (
    (Joint.SHOULDER_CENTER, Joint.SHOULDER_LEFT, Joint.ELBOW_LEFT),
    (Joint.SHOULDER_CENTER, Joint.SHOULDER_RIGHT, Joint.ELBOW_RIGHT),
    (Joint.SHOULDER_LEFT, Joint.ELBOW_LEFT, Joint.WRIST_LEFT),
    (Joint.SHOULDER_RIGHT, Joint.ELBOW_RIGHT, Joint.WRIST_RIGHT),
    (Joint.ELBOW_LEFT, Joint.WRIST_LEFT, Joint.HAND_LEFT),
    (Joint.ELBOW_RIGHT, Joint.WRIST_RIGHT, Joint.HAND_RIGHT),
)

N_FEATURES = len(TRIANGLES)

CSV_COLUMNS = tuple(f"d{i + 1}" for i in range(N_FEATURES))

# (6, 3) row indices of the triangle vertices inside a frame array
_TRIANGLE_ROWS = np.array([[j.row for j in tri] for tri in TRIANGLES])
_SPINE_ROW = Joint.SPINE.row


def triangle_centroid(a, b, c):
    """Component-wise mean of three vertices."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    c = np.asarray(c, dtype=np.float64)
    return (a + b + c) / 3.0


def normalized_distance(centroid, spine):
    """Euclidean distance between the points divided by their mean depth.

    Computed as 2 * ||c - s|| / (c_z + s_z). Raises DegenerateDepthError
    when the mean depth is not positive; a real sensor reports depths well
    above zero, so that indicates corrupt capture.
    """
    c = np.asarray(centroid, dtype=np.float64)
    s = np.asarray(spine, dtype=np.float64)
    depth_sum = c[2] + s[2]
    if depth_sum <= 0.0:
        raise DegenerateDepthError(depth_sum / 2.0)
    return 2.0 * float(np.linalg.norm(c - s)) / float(depth_sum)


def frame_features(frame):
    """The six normalized centroid-to-spine distances of one frame."""
    joints = np.asarray(frame.joints if hasattr(frame, "joints") else frame, dtype=np.float64)
    spine = joints[_SPINE_ROW]
    out = np.empty(N_FEATURES)
    for i in range(N_FEATURES):
        centroid = joints[_TRIANGLE_ROWS[i]].mean(axis=0)
        depth_sum = centroid[2] + spine[2]
        if depth_sum <= 0.0:
            raise DegenerateDepthError(depth_sum / 2.0, triangle=i + 1)
        out[i] = 2.0 * np.linalg.norm(centroid - spine) / depth_sum
    return out


def sequence_features(seq):
    """(T, 6) feature matrix for a sequence, one row per frame in order."""
    joints = seq.joints  # (T, 20, 3)
    centroids = joints[:, _TRIANGLE_ROWS].mean(axis=2)  # (T, 6, 3)
    spine = joints[:, _SPINE_ROW][:, None, :]  # (T, 1, 3)
    depth_sums = centroids[:, :, 2] + spine[:, :, 2]  # (T, 6)
    bad = np.argwhere(depth_sums <= 0.0)
    if bad.size:
        t, i = bad[0]
        raise DegenerateDepthError(depth_sums[t, i] / 2.0, triangle=int(i) + 1, frame=int(t))
    dists = np.linalg.norm(centroids - spine, axis=2)
    return 2.0 * dists / depth_sums


def features_to_csv(matrix, frame_column=False):
    """CSV text for a (T, 6) feature matrix, header d1..d6."""
    matrix = np.asarray(matrix, dtype=np.float64)
    out = io.StringIO()
    header = ("frame," if frame_column else "") + ",".join(CSV_COLUMNS)
    out.write(header + "\n")
    for t, row in enumerate(matrix):
        prefix = f"{t}," if frame_column else ""
        out.write(prefix + ",".join(repr(float(v)) for v in row) + "\n")
    return out.getvalue()


class SinglePersonFeatures(ParamsMixin):
    """Transformer from skeleton sequences to per-sequence feature vectors.

    transform() accepts a list of SkeletonSequence and returns a
    (n_sequences, T*6) array of row-major flattened per-frame features.
    All sequences must share the same frame count. With flatten=False the
    result is a (n, T, 6) stack instead.
    """

    def __init__(self, flatten=True):
        self.flatten = flatten

    def fit(self, X, y=None):
        return self

    def transform(self, X):
        mats = [sequence_features(seq) for seq in X]
        lengths = {m.shape[0] for m in mats}
        if len(lengths) > 1:
            raise ValueError(f"sequences have differing frame counts: {sorted(lengths)}")
        stacked = np.stack(mats)
        if self.flatten:
            return stacked.reshape(stacked.shape[0], -1)
        return stacked

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform(X)
