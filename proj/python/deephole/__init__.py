"""Standard Reed-Solomon codes, exact error distances and deep holes.

Words and polynomials are plain lists of canonical integer encodings;
polynomial coefficient lists run low to high. Reports come back as
dicts mirroring the CLI's JSON output.
"""

from ._core import (
    CyclicRSCode,
    DeepholeError,
    Field,
    RSCode,
    bch_designed_distance_check,
    census_conjecture43,
    construct_cyclic_deep_hole,
    construct_deep_hole,
    count_theorem12_deep_holes,
    count_trivial_deep_holes,
    cyclic_error_distance,
    cyclic_to_poly,
    deep_hole_image,
    degree_of_word,
    dft,
    dft_poly,
    distance_preservation_check,
    error_distance,
    eval_word,
    hamming_distance,
    idft,
    idft_poly,
    interpolate,
    lemma11_bounds,
    poly_str,
    poly_to_cyclic,
    product_of_linear_factors,
    reproduce_table,
    verify_theorem12,
    __version__,
)

__all__ = [
    "CyclicRSCode",
    "DeepholeError",
    "Field",
    "RSCode",
    "bch_designed_distance_check",
    "census_conjecture43",
    "construct_cyclic_deep_hole",
    "construct_deep_hole",
    "count_theorem12_deep_holes",
    "count_trivial_deep_holes",
    "cyclic_error_distance",
    "cyclic_to_poly",
    "deep_hole_image",
    "degree_of_word",
    "dft",
    "dft_poly",
    "distance_preservation_check",
    "error_distance",
    "eval_word",
    "hamming_distance",
    "idft",
    "idft_poly",
    "interpolate",
    "lemma11_bounds",
    "poly_str",
    "poly_to_cyclic",
    "product_of_linear_factors",
    "reproduce_table",
    "verify_theorem12",
    "__version__",
]
