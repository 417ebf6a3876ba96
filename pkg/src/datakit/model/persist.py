"""JSON model files (schema version 1)."""

from __future__ import annotations

import json
from dataclasses import asdict
from typing import Any

import numpy as np

from .forest import ForestHyper, ForestModel
from .logistic import LogisticHyper, LogisticModel
from .tree import TreeHyper, TreeModel
from ..errors import MalformedModelFile, SchemaVersionMismatch

SCHEMA_VERSION = 1

Model = LogisticModel | TreeModel | ForestModel


def _tree_params(t: TreeModel) -> dict:
    return {
        "n_features": t.n_features,
        "feature": t.feature.tolist(),
        "threshold": t.threshold.tolist(),
        "left": t.left.tolist(),
        "right": t.right.tolist(),
        "counts": t.counts.tolist(),
    }


def _tree_from(params: dict, hyper: TreeHyper, names: list[str]) -> TreeModel:
    return TreeModel(
        feature=np.asarray(params["feature"], dtype=np.int64),
        threshold=np.asarray(params["threshold"], dtype=float),
        left=np.asarray(params["left"], dtype=np.int64),
        right=np.asarray(params["right"], dtype=np.int64),
        counts=np.asarray(params["counts"], dtype=np.int64).reshape(-1, 2),
        n_features=int(params["n_features"]),
        hyper=hyper,
        feature_names=names,
    )


def model_to_dict(model: Model) -> dict:
    if isinstance(model, LogisticModel):
        params: dict[str, Any] = {
            "weights": model.weights.tolist(),
            "bias": model.bias,
            "feature_means": model.feature_means.tolist(),
            "feature_stds": model.feature_stds.tolist(),
        }
    elif isinstance(model, TreeModel):
        params = _tree_params(model)
    elif isinstance(model, ForestModel):
        params = {
            "n_features": model.n_features,
            "features_per_split": model.features_per_split,
            "tree_seeds": [str(s) for s in model.tree_seeds],  # u64 exceeds JSON-safe ints
            "trees": [_tree_params(t) for t in model.trees],
        }
    else:
        raise TypeError(f"cannot serialise {type(model).__name__}")
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": model.kind,
        "feature_names": list(model.feature_names),
        "hyperparameters": asdict(model.hyper),
        "params": params,
        "meta": model.meta,
    }


def save_model(model: Model) -> str:
    return json.dumps(model_to_dict(model), indent=1, sort_keys=False) + "\n"


def model_from_dict(doc: dict) -> Model:
    if not isinstance(doc, dict) or "schema_version" not in doc:
        raise MalformedModelFile("MalformedModelFile: missing schema_version")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"SchemaVersionMismatch: file has version {doc['schema_version']}, expected {SCHEMA_VERSION}"
        )
    try:
        kind = doc["kind"]
        names = list(doc["feature_names"])
        hyper = doc["hyperparameters"]
        p = doc["params"]
        meta = dict(doc.get("meta") or {})
        if kind == "logistic":
            model: Model = LogisticModel(
                weights=np.asarray(p["weights"], dtype=float),
                bias=float(p["bias"]),
                feature_means=np.asarray(p["feature_means"], dtype=float),
                feature_stds=np.asarray(p["feature_stds"], dtype=float),
                hyper=LogisticHyper(**hyper),
                feature_names=names,
            )
        elif kind == "tree":
            model = _tree_from(p, TreeHyper(**hyper), names)
        elif kind == "forest":
            fh = ForestHyper(**hyper)
            k = int(p["features_per_split"])
            n = int(p["n_features"])
            th = TreeHyper(fh.max_depth, fh.min_samples_split, None if k == n else k)
            model = ForestModel(
                trees=[_tree_from(t, th, names) for t in p["trees"]],
                tree_seeds=[int(s) for s in p["tree_seeds"]],
                features_per_split=k,
                n_features=n,
                hyper=fh,
                feature_names=names,
            )
        else:
            raise MalformedModelFile(f"MalformedModelFile: unknown model kind {kind!r}")
    except MalformedModelFile:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedModelFile(f"MalformedModelFile: {exc!r}") from None
    model.meta = meta
    return model


def load_model(document: str | bytes) -> Model:
    try:
        doc = json.loads(document)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedModelFile(f"MalformedModelFile: {exc}") from None
    return model_from_dict(doc)
