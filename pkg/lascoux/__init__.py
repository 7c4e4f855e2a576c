"""
lascoux

Exact arithmetic for Lascoux, key and Grothendieck polynomials: tableau and
compatible-pair generating functions, left keys, reverse row insertion and
the Ψ bijection, and the Lascoux-basis expansions of L_α · G_w(x_1..x_n)
and of 𝔊_w.

The library logs through loguru under the "lascoux" name and stays silent
until setup_logging() is called.
"""

from loguru import logger

from lascoux.combi_core import Key, Partition, WeakComposition, cap_n, key_leq, key_of, wt_key
from lascoux.errors import (
    DomainError,
    IdentityCheckError,
    InternalAssertionError,
    LascouxError,
    NegativeCoefficientError,
    NoPreimageError,
    NotInSpanError,
    UsageError,
)
from lascoux.expansion import (
    build_p1,
    expand_grothendieck,
    expand_in_lascoux_basis,
    expand_key_product,
    expand_product,
)
from lascoux.heckewords import CompatiblePair, Permutation, Word, hecke_eval
from lascoux.insertion import TableauPair, forward_insert, psi, psi_inverse, reverse_insert
from lascoux.leftkey import left_key_increasing, left_key_rssyt, left_key_via_jdt
from lascoux.polynomials import (
    ExpansionResult,
    LPolynomial,
    grothendieck,
    grothendieck_stable_truncated,
    key_polynomial,
    lascoux,
)
from lascoux.setops import FinSet, triangle_left
from lascoux.tableaux import RSSYT, RSVT, IncreasingTableau

__version__ = "0.1.0"

logger.disable("lascoux")

__all__ = [
    "CompatiblePair",
    "DomainError",
    "ExpansionResult",
    "FinSet",
    "IdentityCheckError",
    "IncreasingTableau",
    "InternalAssertionError",
    "Key",
    "LPolynomial",
    "LascouxError",
    "NegativeCoefficientError",
    "NoPreimageError",
    "NotInSpanError",
    "Partition",
    "Permutation",
    "RSSYT",
    "RSVT",
    "TableauPair",
    "UsageError",
    "WeakComposition",
    "Word",
    "build_p1",
    "cap_n",
    "expand_grothendieck",
    "expand_in_lascoux_basis",
    "expand_key_product",
    "expand_product",
    "forward_insert",
    "grothendieck",
    "grothendieck_stable_truncated",
    "hecke_eval",
    "key_leq",
    "key_of",
    "key_polynomial",
    "lascoux",
    "left_key_increasing",
    "left_key_rssyt",
    "left_key_via_jdt",
    "psi",
    "psi_inverse",
    "reverse_insert",
    "triangle_left",
    "wt_key",
]
