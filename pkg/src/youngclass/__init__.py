"""Shapes of permutations, the double dominance order and Young classes."""

from .partitions import (
    Partition,
    add,
    conj_add,
    conjugate,
    cover_chain,
    cover_refine,
    covers_below,
    dominates,
    doubly_dominates,
    hook_envelope,
    is_cover,
    parse_partition,
    partitions_of,
)
from .permutations import (
    Permutation,
    all_permutations,
    delete_points,
    direct_sum,
    inflate,
    involves,
    occurrence,
    parse_permutation,
    reverse,
    skew_sum,
    theta,
)
from .tableaux import StandardTableau, TableauPair, rsk, shape

__all__ = [
    "Partition", "add", "conj_add", "conjugate", "cover_chain", "cover_refine", "covers_below",
    "dominates", "doubly_dominates", "hook_envelope", "is_cover", "parse_partition", "partitions_of",
    "Permutation", "all_permutations", "delete_points", "direct_sum", "inflate", "involves",
    "occurrence", "parse_permutation", "reverse", "skew_sum", "theta",
    "StandardTableau", "TableauPair", "rsk", "shape",
]
