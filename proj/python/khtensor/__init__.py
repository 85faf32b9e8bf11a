"""Tensor product algebras for sl2, their categorified tangle invariants,
and Khovanov homology of braid closures."""

from ._khtensor import (
    __version__,
    algebra_dim,
    hom_dims,
    jones,
    jw_coefficients,
    kh,
    pairing,
    verify_relations,
)

__all__ = [
    "__version__",
    "algebra_dim",
    "hom_dims",
    "jones",
    "jw_coefficients",
    "kh",
    "pairing",
    "verify_relations",
]
