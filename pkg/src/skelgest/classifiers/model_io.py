"""Trained-model persistence in a self-describing versioned text format.

Layout (one record per line, whitespace separated):

    skelgest-model v1
    kind <svm|edt|knn>
    labels <K> <label-1> ... <label-K>
    scalar <name> <value>
    array <name> <rows> <cols>
    <rows lines of cols repr-formatted floats>
    tree <index> <n_nodes>
    <n_nodes lines of: feature threshold left right label>
    end

Floats are written with repr, so a save/load round trip reproduces bit-equal
predictions. The trailing `end` sentinel turns truncation into a
ModelFormatError instead of a silently shorter model.
"""

import numpy as np

from ..errors import ModelFormatError
from .knn import KNearestNeighbors
from .svm import GaussianKernelSVM
from .trees import BaggedTreeEnsemble, DecisionTree

_MAGIC = "skelgest-model"
_VERSION = "v1"


def _fmt_array(name, arr):
    arr = np.atleast_2d(np.asarray(arr, dtype=np.float64))
    lines = [f"array {name} {arr.shape[0]} {arr.shape[1]}"]
    for row in arr:
        lines.append(" ".join(repr(float(v)) for v in row))
    return lines


def dumps_model(model):
    lines = [f"{_MAGIC} {_VERSION}"]
    if isinstance(model, GaussianKernelSVM):
        lines.append("kind svm")
        lines.append(f"labels {len(model.classes_)} " + " ".join(model.classes_))
        lines.append(f"scalar sigma {model.sigma!r}")
        lines.append(f"scalar C {model.C!r}")
        lines.append(f"scalar tol {model.tol!r}")
        lines.append(f"scalar n_features {model.n_features_}")
        lines += _fmt_array("X", model.X_)
        lines += _fmt_array("dual_coef", model.dual_coef_)
        lines += _fmt_array("bias", model.bias_)
    elif isinstance(model, BaggedTreeEnsemble):
        lines.append("kind edt")
        lines.append(f"labels {len(model.classes_)} " + " ".join(model.classes_))
        lines.append(f"scalar n_trees {model.n_trees}")
        lines.append(f"scalar bootstrap_fraction {model.bootstrap_fraction!r}")
        lines.append(f"scalar seed {model.seed}")
        lines.append(f"scalar n_features {model.n_features_}")
        for t, tree in enumerate(model.trees_):
            lines.append(f"tree {t} {len(tree.feature)}")
            for i in range(len(tree.feature)):
                lines.append(
                    f"{int(tree.feature[i])} {float(tree.threshold[i])!r} "
                    f"{int(tree.children[i, 0])} {int(tree.children[i, 1])} {int(tree.label[i])}"
                )
    elif isinstance(model, KNearestNeighbors):
        lines.append("kind knn")
        lines.append(f"labels {len(model.classes_)} " + " ".join(model.classes_))
        lines.append(f"scalar k {model.k}")
        lines.append(f"scalar n_features {model.n_features_}")
        lines += _fmt_array("X", model.X_)
        y_idx = [model.classes_.index(lab) for lab in model.y_]
        lines.append(f"array y_idx 1 {len(y_idx)}")
        lines.append(" ".join(str(i) for i in y_idx))
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    lines.append("end")
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text):
        self.lines = text.splitlines()
        self.pos = 0

    def next_line(self):
        if self.pos >= len(self.lines):
            raise ModelFormatError("unexpected end of model file")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect_fields(self, keyword, count=None):
        fields = self.next_line().split()
        if not fields or fields[0] != keyword:
            raise ModelFormatError(f"expected {keyword!r} record, got {fields[:1]}")
        if count is not None and len(fields) != count:
            raise ModelFormatError(f"{keyword!r} record has {len(fields)} fields, expected {count}")
        return fields


def _read_scalar(reader, name):
    fields = reader.expect_fields("scalar", 3)
    if fields[1] != name:
        raise ModelFormatError(f"expected scalar {name!r}, got {fields[1]!r}")
    try:
        return float(fields[2])
    except ValueError:
        raise ModelFormatError(f"bad scalar value {fields[2]!r}") from None


def _read_int(reader, name):
    # ints are parsed directly; float round-tripping would clip wide seeds
    fields = reader.expect_fields("scalar", 3)
    if fields[1] != name:
        raise ModelFormatError(f"expected scalar {name!r}, got {fields[1]!r}")
    try:
        return int(fields[2])
    except ValueError:
        raise ModelFormatError(f"bad integer value {fields[2]!r}") from None


def _read_array(reader, name):
    fields = reader.expect_fields("array", 4)
    if fields[1] != name:
        raise ModelFormatError(f"expected array {name!r}, got {fields[1]!r}")
    try:
        rows, cols = int(fields[2]), int(fields[3])
    except ValueError:
        raise ModelFormatError("bad array shape") from None
    out = np.empty((rows, cols))
    for r in range(rows):
        values = reader.next_line().split()
        if len(values) != cols:
            raise ModelFormatError(f"array {name!r} row {r} has {len(values)} values, expected {cols}")
        try:
            out[r] = [float(v) for v in values]
        except ValueError:
            raise ModelFormatError(f"array {name!r} row {r} holds a non-float") from None
    return out


def loads_model(text):
    reader = _Reader(text)
    header = reader.next_line().split()
    if header[:1] != [_MAGIC]:
        raise ModelFormatError("not a skelgest model file")
    if header[1:] != [_VERSION]:
        raise ModelFormatError(f"unsupported model version {header[1:]}")
    kind = reader.expect_fields("kind", 2)[1]
    labels = reader.expect_fields("labels")
    try:
        n_labels = int(labels[1])
    except (IndexError, ValueError):
        raise ModelFormatError("bad labels record") from None
    classes = labels[2:]
    if len(classes) != n_labels:
        raise ModelFormatError(f"labels record lists {len(classes)} labels, declared {n_labels}")

    if kind == "svm":
        model = GaussianKernelSVM(
            sigma=_read_scalar(reader, "sigma"),
            C=_read_scalar(reader, "C"),
            tol=_read_scalar(reader, "tol"),
        )
        model.classes_ = classes
        model.n_features_ = _read_int(reader, "n_features")
        model.X_ = _read_array(reader, "X")
        model.dual_coef_ = _read_array(reader, "dual_coef")
        model.bias_ = _read_array(reader, "bias").reshape(-1)
        if model.dual_coef_.shape != (n_labels, model.X_.shape[0]):
            raise ModelFormatError("svm coefficient shape mismatch")
    elif kind == "edt":
        n_trees = _read_int(reader, "n_trees")
        model = BaggedTreeEnsemble(
            n_trees=n_trees,
            bootstrap_fraction=_read_scalar(reader, "bootstrap_fraction"),
            seed=_read_int(reader, "seed"),
        )
        model.classes_ = classes
        model.n_features_ = _read_int(reader, "n_features")
        model.trees_ = []
        for t in range(n_trees):
            fields = reader.expect_fields("tree", 3)
            if int(fields[1]) != t:
                raise ModelFormatError(f"tree {fields[1]} out of order, expected {t}")
            n_nodes = int(fields[2])
            tree = DecisionTree(n_labels)
            feature, threshold, children, label = [], [], [], []
            for _ in range(n_nodes):
                vals = reader.next_line().split()
                if len(vals) != 5:
                    raise ModelFormatError("tree node record needs 5 fields")
                try:
                    feature.append(int(vals[0]))
                    threshold.append(float(vals[1]))
                    children.append((int(vals[2]), int(vals[3])))
                    label.append(int(vals[4]))
                except ValueError:
                    raise ModelFormatError("bad tree node record") from None
            tree.feature = np.asarray(feature, dtype=np.int64)
            tree.threshold = np.asarray(threshold, dtype=np.float64)
            tree.children = np.asarray(children, dtype=np.int64).reshape(-1, 2)
            tree.label = np.asarray(label, dtype=np.int64)
            model.trees_.append(tree)
    elif kind == "knn":
        model = KNearestNeighbors(k=_read_int(reader, "k"))
        model.classes_ = classes
        model.n_features_ = _read_int(reader, "n_features")
        model.X_ = _read_array(reader, "X")
        y_idx = _read_array(reader, "y_idx").reshape(-1).astype(int)
        if len(y_idx) != model.X_.shape[0]:
            raise ModelFormatError("knn label count mismatch")
        model.y_ = [classes[i] for i in y_idx]
    else:
        raise ModelFormatError(f"unknown model kind {kind!r}")

    if reader.next_line().strip() != "end":
        raise ModelFormatError("missing end sentinel")
    return model


def save_model(model, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_model(model))


def load_model(path):
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ModelFormatError(f"cannot read model file: {exc}") from None
    return loads_model(text)
