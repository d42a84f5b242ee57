"""Loose Hamilton paths in the 3-uniform cube hypergraph Q(d)."""

__version__ = "0.1.0"

from .builder import cover, lhc_path
from .config import classify, in_S, in_Sprime
from .core import enumerate_edges, enumerate_vertices, vertex
from .paths import LoosePath, PathCertificate, verify
from .search import check_lhp_nonexistence, find_covering_path, run_base_case
from .store import WitnessStore, load
from .symmetry import Symmetry, normalize

__all__ = [
    "LoosePath", "PathCertificate", "Symmetry", "WitnessStore", "check_lhp_nonexistence",
    "classify", "cover", "enumerate_edges", "enumerate_vertices", "find_covering_path",
    "in_S", "in_Sprime", "lhc_path", "load", "normalize", "run_base_case", "verify", "vertex",
]
