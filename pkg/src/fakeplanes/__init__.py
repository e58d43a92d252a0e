"""Derivation replay toolkit for fake projective planes."""

from .cohomology import DimInterval, Fact, chi, infer, refute
from .picard import FakePlane, LineBundleClass, TorsionGroup, get_plane
from .scripts import Options, Verdict, export, list_results, replay

__all__ = [
    "DimInterval", "Fact", "FakePlane", "LineBundleClass", "Options", "TorsionGroup",
    "Verdict", "chi", "export", "get_plane", "infer", "list_results", "refute", "replay",
]
