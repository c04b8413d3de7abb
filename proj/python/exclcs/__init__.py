"""Longest common subsequence excluding a pattern as a substring."""

from ._exclcs import (
    InfeasiblePattern,
    InternalInvariantError,
    OracleSizeError,
    brute_force,
    diff,
    plain_lcs,
    prefix_function,
    shrink,
    sigma,
    solve,
    state_tensor,
    transition_table,
)

__all__ = [
    "InfeasiblePattern",
    "InternalInvariantError",
    "OracleSizeError",
    "brute_force",
    "diff",
    "plain_lcs",
    "prefix_function",
    "shrink",
    "sigma",
    "solve",
    "state_tensor",
    "transition_table",
]
