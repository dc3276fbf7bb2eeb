"""Archimedean-type conditions decided exactly over finite categories."""

from archcat.core import (
    CategoryError,
    Decision,
    FiniteCategory,
    Morphism,
    Violation,
    compose,
    hom,
    identity_of,
    validate_category,
)
from archcat.arrow import (
    ArrowCategory,
    Square,
    build_arrow_category,
    is_commuting_square,
    is_submorphism,
    is_unitary_equivalent,
)
from archcat.archimedean import (
    ArchReport,
    NvClosure,
    is_archimedean_bounded,
    is_archimedean_composition,
    is_bounded_class,
    nv_closure,
    unit_equivalents,
)
from archcat.thin import Preorder, enumerate_preorders, to_category
from archcat.semigroup import OrderedSemigroup

__version__ = "0.1.0"

__all__ = [
    "ArchReport",
    "ArrowCategory",
    "CategoryError",
    "Decision",
    "FiniteCategory",
    "Morphism",
    "NvClosure",
    "OrderedSemigroup",
    "Preorder",
    "Square",
    "Violation",
    "build_arrow_category",
    "compose",
    "enumerate_preorders",
    "hom",
    "identity_of",
    "is_archimedean_bounded",
    "is_archimedean_composition",
    "is_bounded_class",
    "is_commuting_square",
    "is_submorphism",
    "is_unitary_equivalent",
    "nv_closure",
    "to_category",
    "unit_equivalents",
    "validate_category",
]
