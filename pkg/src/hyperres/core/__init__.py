"""Uniform families as bitmasks, exact solvers and canonical forms."""

from .canon import canonical_family, canonical_form, canonical_form_bruteforce, canonical_labeling
from .family import (
    MAX_N,
    FamilyError,
    KFamily,
    Matching,
    VertexSet,
    as_mask,
    full_mask,
    k_subsets,
    mask_of,
    popcount,
    vertices_of,
)
from .io import (
    ArityError,
    DuplicateEdgeError,
    FamilyParseError,
    HeaderError,
    VertexRangeError,
    family_to_json,
    format_family,
    parse_family,
    read_family,
    write_family,
)
from .solvers import (
    covering_number,
    delete,
    greedy_disjoint,
    intersection_level,
    is_t_intersecting,
    link,
    matching_number,
    max_disjoint,
    maximum_matching,
    minimum_cover,
    trace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
