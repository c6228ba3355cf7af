"""Exact computations for nilCoxeter algebras, the interval ring, and its
Koszul dual. The heavy lifting lives in the compiled extension module."""

from ._nilcox import (
    check_resolution,
    ext_ranks,
    group_info,
    image_dimension,
    koszul_duality,
    loewy_dims,
    normalize,
    verify_all,
    verify_matrix_relations,
    x_graded_ranks,
    zring_rank,
)

__all__ = [
    "check_resolution",
    "ext_ranks",
    "group_info",
    "image_dimension",
    "koszul_duality",
    "loewy_dims",
    "normalize",
    "verify_all",
    "verify_matrix_relations",
    "x_graded_ranks",
    "zring_rank",
]
