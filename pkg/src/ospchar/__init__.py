"""Exact characters and superdimensions for the [0,...,0,p] and [0,...,0,r,p-r]
representations of so(N) and osp(m|n)."""

from .partitions import Partition, SkewShape, RectBound, HookBound
from .symfunc import MonomialExpansion, EvaluationPoint
from .characters import CharacterSum, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "CharacterSum",
    "EvaluationPoint",
    "HookBound",
    "MonomialExpansion",
    "Partition",
    "RectBound",
    "SkewShape",
    "TruncatedSeries",
]
