"""Splitting, built-in classifiers, metrics, permutation importance and model files."""

from .features import FeatureEncoder
from .forest import ForestHyper, ForestModel, fit_forest
from .importance import ImportanceEntry, ImportanceReport, permutation_importance
from .logistic import LogisticHyper, LogisticModel, fit_logistic, loss_and_grad
from .metrics import ClassificationReport, classification_report, display_percent, roc_auc
from .persist import SCHEMA_VERSION, load_model, save_model
from .split import SplitSpec, split_indices, train_test_split
from .tree import TreeHyper, TreeModel, fit_tree


def predict_proba(model, X):
    return model.predict_proba(X)


def predict(model, X):
    return model.predict(X)


get_classification_report = classification_report

__all__ = [
    "ClassificationReport", "FeatureEncoder", "ForestHyper", "ForestModel", "ImportanceEntry",
    "ImportanceReport", "LogisticHyper", "LogisticModel", "SCHEMA_VERSION", "SplitSpec",
    "TreeHyper", "TreeModel", "classification_report", "display_percent", "fit_forest",
    "fit_logistic", "fit_tree", "get_classification_report", "load_model", "loss_and_grad",
    "permutation_importance", "predict", "predict_proba", "roc_auc", "save_model",
    "split_indices", "train_test_split",
]
