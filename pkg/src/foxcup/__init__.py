"""Cup products, first homology and Sunada pairs from finite group presentations."""
from .cup import CupMatrix, CupSummary, abelianization_matrix, cup_matrix, cup_nullity, kappa_matrix
from .echelon import EchelonPresentation, echelon_presentation, fox_jacobian
from .group_ring import (
    GroupRingElement,
    augmentation,
    augmented_fox,
    double_fox,
    fox_derivative,
    fox_derivative_elem,
)
from .homology import HomologyReport, h1_integral
from .words import (
    Presentation,
    PresentationError,
    Word,
    free_reduce,
    invert,
    parse_presentation,
    parse_word,
    power,
    render_word,
)

__version__ = "0.1.0"
