"""Flat plumbing basket words, their boundary links, and exact link invariants."""

from .diagram import (
    BoundaryTrace,
    ChordDiagram,
    Crossing,
    PlanarDiagram,
    boundary_components,
    diagram_from_crossings,
    interleaved,
    pd_text,
    to_chords,
    to_planar_diagram,
)
from .invariants import (
    LinkFingerprint,
    SeifertMatrix,
    alexander,
    bracket_state_sum,
    core_linking_oracle,
    fingerprint,
    jones,
    jones_of_diagram,
    kauffman_bracket,
    linking_matrix,
    orient_and_writhe,
    seifert_matrix,
)
from .laurent import LaurentPolynomial
from .words import (
    BasketWord,
    HandleSlide,
    InvalidMove,
    InvalidWord,
    Move,
    NotFactorable,
    PageReflection,
    PageRotation,
    PermutationsPresentation,
    Reduction,
    Rotation,
    apply_move,
    apply_reduction,
    apply_slide,
    canonical_form,
    find_reductions,
    find_slides,
    from_permutations,
    relabel_pages,
    rotate,
    to_permutations,
    validate,
)

__version__ = "0.1.0"
