"""Blocks, Wilson classes, block-wise routing and atomic parts."""

from .atomic import AtomicPartition, atomic_parts
from .blocks import (ArrowDepiction, BlockDecomposition, StructureError, arrow_depiction,
                     block_decomposition, cut_vertices, is_biconnected)
from .routing import replay, route_in_star_fs
from .wilson import (WilsonClass, WilsonTag, classify_block, is_theta0, is_wilsonian,
                     predict_component_size, predicted_component_size)

__all__ = [
    "AtomicPartition", "atomic_parts", "ArrowDepiction", "BlockDecomposition",
    "StructureError", "arrow_depiction", "block_decomposition", "cut_vertices",
    "is_biconnected", "replay", "route_in_star_fs", "WilsonClass", "WilsonTag",
    "classify_block", "is_theta0", "is_wilsonian", "predict_component_size",
    "predicted_component_size",
]
