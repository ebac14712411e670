"""Exact free products of trioids, dimonoids and trialgebras, built on a
noncommutative rewriting engine over doubled alphabets."""

from .alphabet import Alphabet, EMPTY_WORD, Letter, Word, cmp_deglex, deglex_key
from .errors import InputError, OperationError, TriprodError
from .free_product import Family, FpElement
from .gsb import (
    BUDGET_EXHAUSTED,
    COMPLETED,
    Composition,
    CompletionResult,
    GsbReport,
    RewriteSystem,
    complete,
    compositions,
    irr_words,
    is_gsb,
)
from .ncpoly import Polynomial, format_poly, parse_poly, word_poly
from .replicated import (
    BracketedTerm,
    Op,
    in_psi_image,
    phi,
    psi_inverse_render,
    tri_op,
)
from .structures import (
    AssociatedQuotient,
    AxiomReport,
    TrialgebraTable,
    TrioidTable,
    adjoin_zero,
    associated_quotient,
    check_axioms,
    load_presentation,
    relations,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AssociatedQuotient",
    "AxiomReport",
    "BUDGET_EXHAUSTED",
    "BracketedTerm",
    "COMPLETED",
    "Composition",
    "CompletionResult",
    "EMPTY_WORD",
    "Family",
    "FpElement",
    "GsbReport",
    "InputError",
    "Letter",
    "Op",
    "OperationError",
    "Polynomial",
    "RewriteSystem",
    "TrialgebraTable",
    "TrioidTable",
    "TriprodError",
    "Word",
    "adjoin_zero",
    "associated_quotient",
    "check_axioms",
    "cmp_deglex",
    "complete",
    "compositions",
    "deglex_key",
    "format_poly",
    "in_psi_image",
    "irr_words",
    "is_gsb",
    "load_presentation",
    "parse_poly",
    "phi",
    "psi_inverse_render",
    "relations",
    "tri_op",
    "word_poly",
]
