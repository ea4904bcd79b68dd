"""Milnor invariants of pure braids and string links."""

from .braid import (
    BraidLetter,
    BraidWord,
    Permutation,
    braid_commutator,
    compose_braids,
    invert_braid,
    is_pure,
    permutation,
    pure_generator,
    random_braid,
    random_pure_braid,
    to_slice_word,
)
from .diagram import (
    Cap,
    Cross,
    Cup,
    SliceWord,
    StringLinkDiagram,
    borromean,
    clasp_commutator,
    commutator,
    compose,
    conjugate,
    delete_components,
    embed,
    hopf,
    invert,
    linking_matrix,
    long_knot,
    random_string_link,
    split_knot,
    trivial,
    validate,
    whitehead,
    wiggle,
)
from .dsl import format_dsl, load_diagram, parse_dsl
from .errors import StringLinkError
from .magnus import (
    MilnorValue,
    all_mu_up_to_weight,
    delta,
    first_nonvanishing_weight,
    longitudes,
    mu,
    mu_bar,
    sato_levine,
)
from .series import FreeWord, TruncatedSeries, magnus_expand
from .wirtinger import WirtingerPresentation, presentation_from_diagram

__all__ = [name for name in dir() if not name.startswith("_")]
