"""Braided embeddings of solenoids: presentations, homology, classification.

The package models a solenoid embedded in the 3-sphere as a tower of
braided solid tori, presents the fundamental groups of its truncated
complements, simplifies and Abelianizes them exactly, classifies the
solenoids themselves and the rational subgroups their homology limits
to, and certifies non-Abelianness with finite permutation quotients.
"""

from .braids import (
    BraidWord,
    StrandOutOfRange,
    UnknownRow,
    artin_image,
    b_unknot,
    braid_exponent_sum,
    braid_mirror,
    braid_perm,
    closure_components,
    format_braid,
    full_twist,
    parse_braid,
    table1_braid,
    table1_rows,
)
from .homs import (
    HomAssignment,
    SearchResult,
    alternating_witness,
    evaluate_word,
    format_assignment,
    parse_assignment,
    pull_back_assignment,
    search_homs,
    transport_assignment,
    verify_hom,
)
from .presentations import (
    AbelianInvariants,
    Elimination,
    GroupPresentation,
    NotDyadicShape,
    abelianize,
    dyadic_form,
    dyadic_form_with_map,
    format_presentation,
    h1_scaling,
    parse_presentation,
    piece_presentation,
    smith_normal_form,
    tietze_reduce,
    tietze_reduce_with_trace,
    truncate,
)
from .qsubgroups import (
    HeightDescriptor,
    format_heights,
    heights_from_sequence,
    limit_member,
    parse_heights,
    parse_rational,
    q_isomorphic,
    q_member,
    sequence_from_heights,
    shift_multiplier,
)
from .schemes import (
    ChoiceBits,
    Diagnostic,
    EmbeddingScheme,
    LevelSpec,
    LevelUnavailable,
    UnsupportedStrandCount,
    format_choices,
    format_scheme,
    geometry_scheme,
    merge_to_avoid_2,
    parse_choices,
    parse_scheme,
    trefoil_scheme,
    unknotted_scheme,
    validate_scheme,
)
from .sequences import (
    DefiningSequence,
    format_sequence,
    homeomorphic,
    multiplicities,
    normalize,
    parse_sequence,
    prime_factors,
)
from .words import (
    EMPTY,
    DegreeMismatch,
    FreeWord,
    MissingImage,
    ParseError,
    Permutation,
    Symbol,
    cyclically_reduce,
    exponent_sum,
    format_permutation,
    format_word,
    gen,
    parse_permutation,
    parse_symbol,
    parse_word,
    perm_compose,
    perm_cycles,
    perm_inverse,
    reduce,
    replace,
    substitute,
)

__version__ = "0.1.0"
