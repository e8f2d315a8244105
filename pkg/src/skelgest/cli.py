"""Command-line front end.

Subcommands: extract-features, train, predict, evaluate, friedman,
gen-synth, round-trip-check. Exit codes are a stable contract: 0 success,
1 usage error, 2 input/format error, 3 computation error. Result data goes
to stdout only when no output file is given; diagnostics go to stderr.
The SKELGEST_SEED environment variable supplies the default seed.
"""

import argparse
import os
import sys

import numpy as np

from . import evaluation
from .classifiers import (
    BaggedTreeEnsemble,
    GaussianKernelSVM,
    KNearestNeighbors,
    load_model,
    save_model,
)
from .errors import ComputationError, InputFormatError
from .features import single_person, two_person
from .harness import ExperimentConfig, export_dataset
from .harness.templates import BENCHMARK_CLASSES
from .skeleton import parse_skeleton_stream, read_skeleton_file, serialize_skeleton_stream

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_COMPUTE = 3


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed(fallback=0):
    env = os.environ.get("SKELGEST_SEED")
    if env is None:
        return fallback
    try:
        return int(env)
    except ValueError:
        raise InputFormatError(f"SKELGEST_SEED must be an integer, got {env!r}") from None


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_matrix(path):
    """Feature CSV as a float matrix; tolerates a header and a frame column."""
    rows = []
    drop_first = False
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    if not lines:
        raise InputFormatError(f"{path} is empty")
    start = 0
    first = lines[0].split(",")
    try:
        float(first[0])
    except ValueError:
        start = 1
        drop_first = first[0].strip().lower() == "frame"
    for ln_no, ln in enumerate(lines[start:], start=start + 1):
        fields = ln.split(",")
        if drop_first:
            fields = fields[1:]
        try:
            rows.append([float(v) for v in fields])
        except ValueError:
            raise InputFormatError(f"{path} line {ln_no}: non-numeric value") from None
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise InputFormatError(f"{path}: ragged rows with widths {sorted(widths)}")
    return np.asarray(rows, dtype=np.float64)


def _load_labels(path):
    """Labels manifest: one `name,label` (or bare `label`) line per sample."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    labels = [ln.split(",")[-1].strip() for ln in lines]
    if not labels:
        raise InputFormatError(f"{path} holds no labels")
    return labels


def _load_manifest(path):
    """(filename, label) pairs for batch feature extraction."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    pairs = []
    for ln_no, ln in enumerate(lines, start=1):
        fields = [f.strip() for f in ln.split(",")]
        if len(fields) != 2:
            raise InputFormatError(f"{path} line {ln_no}: expected 'filename,label'")
        pairs.append((fields[0], fields[1]))
    return pairs


_FEATURE_MODULES = {"single": single_person, "two-person": two_person}


def cmd_extract_features(args):
    module = _FEATURE_MODULES[args.mode]
    if args.manifest:
        base = os.path.dirname(os.path.abspath(args.manifest))
        pairs = _load_manifest(args.manifest)
        rows, labels = [], []
        for filename, label in pairs:
            seq = read_skeleton_file(os.path.join(base, filename))
            rows.append(module.sequence_features(seq).reshape(-1))
            labels.append(label)
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise InputFormatError(f"sequences in {args.manifest} have differing lengths")
        matrix_text = "\n".join(",".join(repr(float(v)) for v in row) for row in rows) + "\n"
        _emit(matrix_text, args.out)
        if args.labels_out:
            with open(args.labels_out, "w", encoding="ascii") as fh:
                fh.write("\n".join(f"{f},{lab}" for (f, _), lab in zip(pairs, labels)) + "\n")
        return EXIT_OK
    seq = read_skeleton_file(args.input)
    feats = module.sequence_features(seq)
    if args.flatten:
        text = ",".join(repr(float(v)) for v in feats.reshape(-1)) + "\n"
    else:
        text = module.features_to_csv(feats, frame_column=args.frame_column)
    _emit(text, args.out)
    return EXIT_OK


def cmd_train(args):
    X = _load_matrix(args.features)
    y = _load_labels(args.labels)
    if len(y) != X.shape[0]:
        raise InputFormatError(f"{X.shape[0]} feature rows but {len(y)} labels")
    seed = args.seed if args.seed is not None else _default_seed(0)
    if args.model == "svm":
        model = GaussianKernelSVM(sigma=args.sigma, C=args.cost, tol=args.tol)
    elif args.model == "edt":
        model = BaggedTreeEnsemble(
            n_trees=args.trees, bootstrap_fraction=args.bootstrap_fraction, seed=seed
        )
    else:
        model = KNearestNeighbors(k=args.k)
    model.fit(X, y)
    accuracy = model.score(X, y)
    save_model(model, args.out)
    print(f"training accuracy: {accuracy:.4f}")
    return EXIT_OK


def cmd_predict(args):
    model = load_model(args.model)
    X = _load_matrix(args.features)
    predicted = model.predict(X)
    _emit("\n".join(predicted) + "\n", args.out)
    return EXIT_OK


def cmd_evaluate(args):
    model = load_model(args.model)
    X = _load_matrix(args.features)
    y = _load_labels(args.labels)
    if len(y) != X.shape[0]:
        raise InputFormatError(f"{X.shape[0]} feature rows but {len(y)} labels")
    predicted = model.predict(X)
    labels = sorted(set(y) | set(model.classes_))
    report = evaluation.evaluate(y, predicted, labels=labels)
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(report.to_csv())
        print(report.summary(), file=sys.stderr, end="")
    else:
        sys.stdout.write(report.summary())
    return EXIT_OK


def cmd_friedman(args):
    try:
        with open(args.scores, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InputFormatError(f"cannot read {args.scores}: {exc}") from None
    names = []
    rows = []
    for ln_no, ln in enumerate(lines, start=1):
        fields = [f.strip() for f in ln.split(",")]
        try:
            float(fields[0])
            name = None
        except ValueError:
            name, fields = fields[0], fields[1:]
        try:
            row = [float(v) for v in fields]
        except ValueError:
            if ln_no == 1:
                continue  # header row
            raise InputFormatError(f"{args.scores} line {ln_no}: non-numeric score") from None
        names.append(name if name is not None else f"algorithm-{len(rows) + 1}")
        rows.append(row)
    if len(rows) < 2 or len({len(r) for r in rows}) != 1:
        raise InputFormatError(f"{args.scores}: need a C x D score grid with C >= 2")
    scores = np.asarray(rows)
    ranks = evaluation.rank_algorithms(scores)
    result = evaluation.friedman(ranks)
    sys.stdout.write(evaluation.friedman_table(result, ranks, names))
    return EXIT_OK


def cmd_gen_synth(args):
    seed = args.seed if args.seed is not None else _default_seed(7)
    classes = tuple(c.strip() for c in args.classes.split(",")) if args.classes else BENCHMARK_CLASSES
    config = ExperimentConfig(
        classes=classes,
        samples_per_class=args.samples_per_class,
        frames=args.frames,
        seed=seed,
        noise_std=args.noise_std,
    )
    manifest = export_dataset(config, args.out_dir)
    print(
        f"wrote {len(classes) * args.samples_per_class} sequences to {args.out_dir} "
        f"(manifest: {manifest})",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_round_trip_check(args):
    with open(args.input, "r", encoding="ascii") as fh:
        text = fh.read()
    seq = parse_skeleton_stream(text)
    again = parse_skeleton_stream(serialize_skeleton_stream(seq))
    if not np.array_equal(seq.joints, again.joints):
        raise InputFormatError(f"{args.input}: round trip altered coordinates")
    print(f"round-trip OK: {len(seq)} frames")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="skelgest", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract-features", help="skeleton file(s) to feature CSV")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="one skeleton text file")
    src.add_argument("--manifest", help="filename,label manifest; one flattened row per file")
    p.add_argument("--mode", choices=sorted(_FEATURE_MODULES), required=True)
    p.add_argument("--out", help="output CSV (default stdout)")
    p.add_argument("--flatten", action="store_true", help="emit one flattened row")
    p.add_argument("--frame-column", action="store_true", help="prepend a frame index column")
    p.add_argument("--labels-out", help="with --manifest: write the labels sidecar here")
    p.set_defaults(func=cmd_extract_features)

    p = sub.add_parser("train", help="fit a classifier on features + labels")
    p.add_argument("--features", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--model", choices=("svm", "edt", "knn"), required=True)
    p.add_argument("--out", required=True, help="model file to write")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--sigma", type=float, default=1.0, help="svm kernel width")
    p.add_argument("--cost", type=float, default=10.0, help="svm soft-margin penalty")
    p.add_argument("--tol", type=float, default=1e-3, help="svm KKT tolerance")
    p.add_argument("--trees", type=int, default=100, help="edt ensemble size")
    p.add_argument("--bootstrap-fraction", type=float, default=0.30)
    p.add_argument("--k", type=int, default=1, help="knn neighbor count (odd)")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="predict labels for feature rows")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="metrics report for a model on features + labels")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--report", help="write CSV report here instead of stdout")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("friedman", help="rank a C x D score grid and test significance")
    p.add_argument("--scores", required=True, help="CSV of per-dataset scores, one algorithm per row")
    p.set_defaults(func=cmd_friedman)

    p = sub.add_parser("gen-synth", help="write a synthetic labeled skeleton dataset")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--classes", help="comma-separated template names (default: benchmark 8)")
    p.add_argument("--samples-per-class", type=int, default=30)
    p.add_argument("--frames", type=int, default=90)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--noise-std", type=float, default=None)
    p.set_defaults(func=cmd_gen_synth)

    p = sub.add_parser("round-trip-check", help="verify parse/serialize identity for a file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_round_trip_check)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"skelgest: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComputationError as exc:
        print(f"skelgest: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"skelgest: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"skelgest: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
