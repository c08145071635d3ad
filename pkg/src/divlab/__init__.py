"""divlab: exact constructions, bounds and searches for intersecting families."""

from .family import (
    Family,
    cross_intersecting,
    is_saturated,
    saturate,
    mask_of,
    elements_of,
)
from .canonical import canonical_form, are_isomorphic
from .constructions import (
    FANO_LINES,
    KernelTriple,
    example_t,
    family_fi,
    family_triangle,
    family_uvw,
    family_uvw_star,
    fano_families,
    full_star,
    lex_family,
    shift,
    shift_closure,
)
from .formulas import (
    BoundVerdict,
    binom,
    check_theorem,
    cross_lemma_bounds,
    fano_lower_threshold,
    main_bound,
    mpw_bound,
    parse_ratio,
    prop_binom_ratio,
    ratio_str,
)
from .search import (
    SearchResult,
    max_c_diversity,
    max_size_with_degree_cap,
    extremal_c_diversity_families,
)
from .cross import cross_max_compatible, verify_hilton, verify_lemma_fk
from .stability import (
    StabilityReport,
    TriangleDecomposition,
    find_stability_triple,
    triangle_decomposition,
    verify_lemma_key2,
)

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FANO_LINES",
    "BoundVerdict",
    "KernelTriple",
    "SearchResult",
    "StabilityReport",
    "TriangleDecomposition",
    "are_isomorphic",
    "binom",
    "canonical_form",
    "check_theorem",
    "cross_intersecting",
    "cross_lemma_bounds",
    "cross_max_compatible",
    "elements_of",
    "example_t",
    "extremal_c_diversity_families",
    "family_fi",
    "family_triangle",
    "family_uvw",
    "family_uvw_star",
    "fano_families",
    "fano_lower_threshold",
    "find_stability_triple",
    "full_star",
    "is_saturated",
    "lex_family",
    "main_bound",
    "mask_of",
    "max_c_diversity",
    "max_size_with_degree_cap",
    "mpw_bound",
    "parse_ratio",
    "prop_binom_ratio",
    "ratio_str",
    "saturate",
    "shift",
    "shift_closure",
    "triangle_decomposition",
    "verify_hilton",
    "verify_lemma_fk",
    "verify_lemma_key2",
]
