"""Estimator plumbing: get_params/set_params and input validation.

The classes here make the feature extractors and classifiers duck-type
compatible with scikit-learn style pipelines without depending on
scikit-learn itself.
"""

import inspect

import numpy as np

from .errors import DimensionMismatchError


class ParamsMixin:
    """get_params/set_params over the keyword arguments of __init__."""

    @classmethod
    def _param_names(cls):
        sig = inspect.signature(cls.__init__)
        return [
            name
            for name, p in sig.parameters.items()
            if name != "self" and p.kind not in (p.VAR_POSITIONAL, p.VAR_KEYWORD)
        ]

    def get_params(self, deep=True):
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise ValueError(f"unknown parameter {name!r} for {type(self).__name__}")
            setattr(self, name, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


def check_feature_matrix(X, n_features=None, name="X"):
    """Coerce to a finite 2-D float64 array, optionally checking width."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {X.shape}")
    if X.size and not np.isfinite(X).all():
        raise ValueError(f"{name} contains NaN or Inf")
    if n_features is not None and X.shape[1] != n_features:
        raise DimensionMismatchError(n_features, X.shape[1])
    return X


def check_labels(y, n_samples):
    """Labels as a list of strings, one per sample."""
    y = [str(v) for v in y]
    if len(y) != n_samples:
        raise ValueError(f"{len(y)} labels for {n_samples} samples")
    return y


def check_fitted(estimator, attribute):
    if not hasattr(estimator, attribute):
        raise RuntimeError(f"{type(estimator).__name__} is not fitted yet")
