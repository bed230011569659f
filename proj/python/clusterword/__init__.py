"""Burrows-Wheeler clustering words and discrete/continuous interval exchanges.

Words are passed and returned in the text format of the command line:
digit strings such as ``"122131313"`` or comma-separated letters such as
``"10,2,10,1"``. Exact reals are strings such as ``"4/9"`` or
``"-1/2+1/2*sqrt(5)"``.
"""

from ._clusterword import (
    DiscreteIET,
    bwt,
    canonical_conjugate,
    census,
    clustering_image,
    clustering_report,
    continuous_taus,
    continuous_trajectory,
    from_clustering_word,
    inverse_bwt,
    is_primitive,
    keane_check,
    minimality_criterion_r3,
    sturmian_word,
    verify,
)

__all__ = [
    "DiscreteIET",
    "bwt",
    "canonical_conjugate",
    "census",
    "clustering_image",
    "clustering_report",
    "continuous_taus",
    "continuous_trajectory",
    "from_clustering_word",
    "inverse_bwt",
    "is_primitive",
    "keane_check",
    "minimality_criterion_r3",
    "sturmian_word",
    "verify",
]
