"""Ribbon graphs as arrow presentations: partial duals, partial Petrials and
enumerators for regular and checkerboard colourable twisted duals."""

from .core import (
    ArrowPresentation,
    Circle,
    Occurrence,
    PresentationError,
    canonical_form,
    equals,
    make_presentation,
    normal_form,
    parse_presentation,
    serialize,
    validate,
)
from .petrial import cc_petrial_enumeration, enumerate_cc_petrials
from .pipeline import enumerate_rcc_twisted_duals, has_cc_twisted_dual
from .regular import enumerate_regular_partial_duals
from .topology import (
    boundary_count,
    boundary_decomposition,
    checkerboard_colouring,
    connected_components,
    degrees,
    euler_genus,
    is_eulerian,
    is_orientable,
)
from .twist import TwistWord, apply_word, contract, delete, parse_word, partial_dual, partial_petrial

__version__ = "0.1.0"

__all__ = [
    "ArrowPresentation",
    "Circle",
    "Occurrence",
    "PresentationError",
    "TwistWord",
    "apply_word",
    "boundary_count",
    "boundary_decomposition",
    "canonical_form",
    "cc_petrial_enumeration",
    "checkerboard_colouring",
    "connected_components",
    "contract",
    "degrees",
    "delete",
    "enumerate_cc_petrials",
    "enumerate_rcc_twisted_duals",
    "enumerate_regular_partial_duals",
    "equals",
    "euler_genus",
    "has_cc_twisted_dual",
    "is_eulerian",
    "is_orientable",
    "make_presentation",
    "normal_form",
    "parse_presentation",
    "parse_word",
    "partial_dual",
    "partial_petrial",
    "serialize",
    "validate",
]
