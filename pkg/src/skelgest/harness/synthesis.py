"""Synthetic sequence generation, dataset assembly, and splitting.

Everything here is a pure function of (configuration, seed): per-sample
noise streams derive from the dataset seed and the sample's global index,
and split shuffles derive from the split seed and the class index.
"""

import os

import numpy as np

from ..classifiers.dataset import LabeledDataset
from ..errors import DepthRangeViolationError, StratifyError
from ..features import single_person, two_person
from ..rng import PortableRNG
from ..skeleton import SkeletonSequence, write_skeleton_file
from .templates import DEPTH_RANGE, get_template

FEATURE_KINDS = {
    "single": single_person.sequence_features,
    "two_person": two_person.sequence_features,
}


def generate_sequence(template, n_frames, seed, noise_std=None):
    """Sample a template at n_frames uniform times and add Gaussian jitter.

    The noiseless trajectory must stay inside the sensor depth range;
    leaving it raises DepthRangeViolationError. noise_std overrides the
    template's own value when given.
    """
    if n_frames < 1:
        raise ValueError(f"need at least 1 frame, got {n_frames}")
    std = template.noise_std if noise_std is None else float(noise_std)
    ts = np.linspace(0.0, 1.0, n_frames) if n_frames > 1 else np.array([0.0])
    clean = template.trajectory(ts)
    lo, hi = DEPTH_RANGE
    depths = clean[:, :, 2]
    if depths.min() < lo or depths.max() > hi:
        z = depths.min() if depths.min() < lo else depths.max()
        raise DepthRangeViolationError(template.name, float(z), lo, hi)
    joints = clean
    if std > 0.0:
        noise = PortableRNG(seed).normal_array(clean.size).reshape(clean.shape)
        joints = clean + std * noise
    return SkeletonSequence(joints, source_label=template.name)


def make_sequences(config):
    """All sequences for a config, class-major, with their labels.

    Sample i of class c uses the noise stream spawned from the config seed
    at global index c * samples_per_class + i.
    """
    base = PortableRNG(config.seed)
    sequences, labels = [], []
    templates = {name: _resolve_template(config, name) for name in config.classes}
    g = 0
    for name in config.classes:
        for _ in range(config.samples_per_class):
            seq = generate_sequence(
                templates[name], config.frames, base.spawn(g).seed, config.noise_std
            )
            sequences.append(seq)
            labels.append(name)
            g += 1
    return sequences, labels


def _resolve_template(config, name):
    if config.templates and name in config.templates:
        return config.templates[name]
    return get_template(name)


def build_dataset(config, feature_kind=None):
    """Generate, featurize, and flatten every sample into a LabeledDataset."""
    kind = feature_kind or config.feature_kind
    if kind not in FEATURE_KINDS:
        raise ValueError(f"feature_kind must be one of {sorted(FEATURE_KINDS)}, got {kind!r}")
    featurize = FEATURE_KINDS[kind]
    sequences, labels = make_sequences(config)
    vectors = np.stack([featurize(seq).reshape(-1) for seq in sequences])
    return LabeledDataset(vectors, labels, tuple(config.classes))


def stratified_split(data, fraction, seed):
    """Per-class split into disjoint, exhaustive (train, test) datasets.

    Each class keeps round(fraction * count) samples for training, clamped
    so both sides stay non-empty. Classes with fewer than 2 samples raise
    StratifyError.
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"fraction must be in (0, 1), got {fraction}")
    base = PortableRNG(seed)
    by_class = {lab: [] for lab in data.label_set}
    for i, lab in enumerate(data.labels):
        by_class[lab].append(i)
    train_idx, test_idx = [], []
    for ci, lab in enumerate(data.label_set):
        idx = by_class[lab]
        if len(idx) < 2:
            raise StratifyError(lab, len(idx))
        rng = base.spawn(ci)
        rng.shuffle(idx)
        n_train = int(fraction * len(idx) + 0.5)
        n_train = min(max(n_train, 1), len(idx) - 1)
        train_idx.extend(idx[:n_train])
        test_idx.extend(idx[n_train:])
    return data.subset(train_idx), data.subset(test_idx)


def export_dataset(config, out_dir):
    """Write every sequence as a skeleton text file plus a labels manifest.

    Returns the manifest path. Manifest lines are `filename,label`, one per
    sequence, in generation order.
    """
    os.makedirs(out_dir, exist_ok=True)
    sequences, labels = make_sequences(config)
    counter = {}
    manifest_lines = []
    for seq, label in zip(sequences, labels):
        i = counter.get(label, 0)
        counter[label] = i + 1
        filename = f"{label}_{i:03d}.txt"
        write_skeleton_file(os.path.join(out_dir, filename), seq)
        manifest_lines.append(f"{filename},{label}")
    manifest_path = os.path.join(out_dir, "labels.csv")
    with open(manifest_path, "w", encoding="ascii") as fh:
        fh.write("\n".join(manifest_lines) + "\n")
    return manifest_path
