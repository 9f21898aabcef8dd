"""Exact partition functions, 2-lifts and Bethe bounds for graph homomorphism models."""

from .graph import (
    CapExceeded,
    Graph,
    GraphParseError,
    Signing,
    apply_lift,
    enumerate_signings,
    girth,
    girth_boost,
    load_graph,
    parse_graph,
)
from .models import ModelError, SpinModel, hardcore, ising, named_model, potts, widom_rowlinson
from .partition import hom, partition_value, random_cluster, rc_polynomial
from .classes import classify

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Graph",
    "GraphParseError",
    "ModelError",
    "Signing",
    "SpinModel",
    "apply_lift",
    "classify",
    "enumerate_signings",
    "girth",
    "girth_boost",
    "hardcore",
    "hom",
    "ising",
    "load_graph",
    "named_model",
    "parse_graph",
    "partition_value",
    "potts",
    "random_cluster",
    "rc_polynomial",
    "widom_rowlinson",
]
