"""End-to-end experiment orchestration.

An experiment is: generate synthetic sequences, featurize and flatten,
stratified train/test split, train one classifier, predict, evaluate.
Every artifact is a pure function of the config (including its seed);
wall-clock timings ride along in the report but stay out of its
deterministic summary.
"""

import time
from dataclasses import dataclass, field

from ..classifiers import BaggedTreeEnsemble, GaussianKernelSVM, KNearestNeighbors
from ..errors import ConfigError
from ..evaluation import evaluate
from .synthesis import FEATURE_KINDS, build_dataset, stratified_split
from .templates import BENCHMARK_CLASSES

CLASSIFIERS = {
    "svm": GaussianKernelSVM,
    "edt": BaggedTreeEnsemble,
    "knn": KNearestNeighbors,
}

_CONFIG_MAGIC = "skelgest-config"
_CONFIG_VERSION = "v1"


@dataclass
class ExperimentConfig:
    classes: tuple = BENCHMARK_CLASSES
    samples_per_class: int = 30
    frames: int = 90
    seed: int = 7
    noise_std: float | None = None  # None: use each template's own std
    feature_kind: str = "single"
    classifier: str = "svm"
    split_fraction: float = 0.8
    params: dict = field(default_factory=dict)
    templates: dict | None = None  # overrides for class -> GestureTemplate

    def __post_init__(self):
        self.classes = tuple(self.classes)
        if not self.classes:
            raise ValueError("config needs at least one class")
        if self.frames < 1:
            raise ValueError(f"frames must be >= 1, got {self.frames}")
        if not 0.0 < self.split_fraction < 1.0:
            raise ValueError(f"split_fraction must be in (0, 1), got {self.split_fraction}")
        if self.feature_kind not in FEATURE_KINDS:
            raise ValueError(f"unknown feature_kind {self.feature_kind!r}")
        if self.classifier not in CLASSIFIERS:
            raise ValueError(f"unknown classifier {self.classifier!r}")


def make_classifier(config):
    params = dict(config.params)
    if config.classifier == "edt":
        params.setdefault("seed", config.seed)
    return CLASSIFIERS[config.classifier](**params)


def run_experiment(config):
    """Generate, split, train, predict, evaluate; returns the report.

    The report's summary() is byte-identical across runs with the same
    config; report.timings carries the wall-clock seconds per stage.
    """
    timings = {}
    t0 = time.perf_counter()
    data = build_dataset(config)
    timings["build_dataset"] = time.perf_counter() - t0

    train, test = stratified_split(data, config.split_fraction, config.seed)

    model = make_classifier(config)
    t0 = time.perf_counter()
    model.fit(train.vectors, train.labels)
    timings["train"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    predicted = model.predict(test.vectors)
    timings["predict"] = time.perf_counter() - t0

    report = evaluate(test.labels, predicted, labels=list(data.label_set))
    report.timings = timings
    return report


# --- config files: versioned plain-text key/value documents ---

_SCALAR_KEYS = {
    "samples_per_class": int,
    "frames": int,
    "seed": int,
    "noise_std": float,
    "feature_kind": str,
    "classifier": str,
    "split_fraction": float,
}


def dumps_config(config):
    lines = [f"{_CONFIG_MAGIC} {_CONFIG_VERSION}"]
    lines.append("classes = " + ",".join(config.classes))
    for key in _SCALAR_KEYS:
        value = getattr(config, key)
        if value is None:
            continue
        lines.append(f"{key} = {value}")
    for name, value in sorted(config.params.items()):
        lines.append(f"param.{name} = {value}")
    return "\n".join(lines) + "\n"


def _parse_value(text):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def loads_config(text):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0].split() != [_CONFIG_MAGIC, _CONFIG_VERSION]:
        raise ConfigError(f"config must start with '{_CONFIG_MAGIC} {_CONFIG_VERSION}'")
    kwargs = {}
    params = {}
    for ln in lines[1:]:
        if "=" not in ln:
            raise ConfigError(f"bad config line: {ln!r}")
        key, _, value = ln.partition("=")
        key, value = key.strip(), value.strip()
        if key == "classes":
            kwargs["classes"] = tuple(c.strip() for c in value.split(",") if c.strip())
        elif key in _SCALAR_KEYS:
            try:
                kwargs[key] = _SCALAR_KEYS[key](value)
            except ValueError:
                raise ConfigError(f"bad value for {key}: {value!r}") from None
        elif key.startswith("param."):
            params[key[len("param."):]] = _parse_value(value)
        else:
            raise ConfigError(f"unknown config key {key!r}")
    if params:
        kwargs["params"] = params
    try:
        return ExperimentConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path):
    with open(path, "r", encoding="ascii") as fh:
        return loads_config(fh.read())


def save_config(config, path):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_config(config))
