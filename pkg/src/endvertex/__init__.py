"""Coprime graphs of finite groups and their end vertices."""
from .constructions import build, load_catalog, parse_spec
from .coprimegraph import build_graph, end_vertices
from .permgroup import FiniteGroup, Permutation, generate
from .presentation import parse_presentation, realize

__all__ = [
    "FiniteGroup",
    "Permutation",
    "build",
    "build_graph",
    "end_vertices",
    "generate",
    "load_catalog",
    "parse_presentation",
    "parse_spec",
    "realize",
]

__version__ = "0.1.0"
