"""Exact enumeration of permutations by increasing-run structure.

Thin wrapper around the ``_runcount`` extension module.  All results are
exact: coefficient lists come back as Python ints of arbitrary size.

Quick tour::

    >>> import runcount
    >>> runcount.stat_series("pk", 6)[6]      # peak polynomial over S_6
    [32, 416, 272]
    >>> runcount.stat_polynomial("udr", 4)    # brute-force cross-check
    [0, 1, 7, 11, 5]
    >>> runcount.predicate_count("allPVEven", 8)
    1632
"""

from ._runcount import (
    append_map,
    check,
    compute_network,
    euler_numbers,
    eval_recipe_document,
    pkshift_map,
    predicate_count,
    recipe_description,
    recipe_names,
    ribbon_count,
    shift_map,
    stat_polynomial,
    stat_series,
)

__all__ = [
    "append_map",
    "check",
    "compute_network",
    "euler_numbers",
    "eval_recipe_document",
    "pkshift_map",
    "predicate_count",
    "recipe_description",
    "recipe_names",
    "ribbon_count",
    "shift_map",
    "stat_polynomial",
    "stat_series",
]

__version__ = "1.0.0"
