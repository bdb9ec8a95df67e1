"""Exact computation in the q-shuffle algebra on the letters x, y.

Modules: :mod:`.coeff` (Laurent polynomials in q), :mod:`.words` (words,
linear combinations, word families, classification), :mod:`.shuffle` (the
q-shuffle product), :mod:`.relations` (catalogued identities and their
verifier), :mod:`.series` (truncated generating functions), :mod:`.cli`.
"""

from .coeff import LaurentInt, eval_at_one, q_int, q_power
from .shuffle import BACKEND, commutator_qk, shuffle_oracle, star, star_power
from .words import (
    FreeElement,
    Letter,
    Word,
    WordClass,
    alternating,
    bilinear_form,
    classify,
    doubly_alternating,
    free_mul,
    in_U_by_orthogonality,
    span_J_degree,
    truncate,
)

__version__ = "0.1.0"
