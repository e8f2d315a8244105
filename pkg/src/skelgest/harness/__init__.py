from .experiment import (
    ExperimentConfig,
    dumps_config,
    load_config,
    loads_config,
    make_classifier,
    run_experiment,
    save_config,
)
from .synthesis import (
    build_dataset,
    export_dataset,
    generate_sequence,
    make_sequences,
    stratified_split,
)
from .templates import (
    BASE_POSE,
    BENCHMARK_CLASSES,
    DEPTH_RANGE,
    GestureTemplate,
    INTERACTION_PAIRS,
    INTERACTION_TEMPLATES,
    SINGLE_PERSON_TEMPLATES,
    get_template,
)

__all__ = [
    "ExperimentConfig",
    "run_experiment",
    "make_classifier",
    "load_config",
    "save_config",
    "loads_config",
    "dumps_config",
    "build_dataset",
    "export_dataset",
    "generate_sequence",
    "make_sequences",
    "stratified_split",
    "GestureTemplate",
    "BASE_POSE",
    "BENCHMARK_CLASSES",
    "DEPTH_RANGE",
    "INTERACTION_PAIRS",
    "INTERACTION_TEMPLATES",
    "SINGLE_PERSON_TEMPLATES",
    "get_template",
]
