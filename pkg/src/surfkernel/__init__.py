"""Presentations of kernel subgroups of products of genus-2 surface groups.

Generate the presentation variants, verify every relator in the ambient
product with Dehn's algorithm, check the identity corpus the construction
relies on, and compute abelianization invariants exactly.
"""

from .words import Word, Symbol, sym, commutator, conjugate, cyclic_reduce, substitute
from .dehn import SymmetrizedRelators, dehn_reduce, GateFailed
from .ambient import AmbientWord, project, torus_image, in_kernel
from .presentations import (
    Variant,
    Presentation,
    build_presentation,
    embedding_map,
    lifting_map,
    projection_preimages,
)
from .abelianization import abelianize, betti, smith_normal_form

__all__ = [
    "Word", "Symbol", "sym", "commutator", "conjugate", "cyclic_reduce", "substitute",
    "SymmetrizedRelators", "dehn_reduce", "GateFailed",
    "AmbientWord", "project", "torus_image", "in_kernel",
    "Variant", "Presentation", "build_presentation", "embedding_map",
    "lifting_map", "projection_preimages",
    "abelianize", "betti", "smith_normal_form",
]

__version__ = "0.1.0"
