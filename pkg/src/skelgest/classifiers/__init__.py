from .dataset import LabeledDataset, flatten_sequence
from .knn import KNearestNeighbors
from .model_io import dumps_model, load_model, loads_model, save_model
from .svm import GaussianKernelSVM, gaussian_kernel
from .trees import BaggedTreeEnsemble, DecisionTree

__all__ = [
    "LabeledDataset",
    "flatten_sequence",
    "GaussianKernelSVM",
    "gaussian_kernel",
    "BaggedTreeEnsemble",
    "DecisionTree",
    "KNearestNeighbors",
    "save_model",
    "load_model",
    "dumps_model",
    "loads_model",
]
