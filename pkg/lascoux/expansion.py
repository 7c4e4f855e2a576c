"""
Lascoux-basis expansions

expand_product writes 𝔏_α · G_w(x_1..x_n) in the Lascoux basis by
enumerating increasing tableaux P whose small entries form P_1 and whose
large entries read a Hecke word of 1^N × w. expand_grothendieck does the
same for 𝔊_w. expand_in_lascoux_basis is an independent exact linear
solve used to certify both.
"""

from enum import Enum
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from lascoux.combi_core import WeakComposition, cap_n, wt_key
from lascoux.config import get_settings
from lascoux.errors import (
    DomainError,
    IdentityCheckError,
    InternalAssertionError,
    NegativeCoefficientError,
    NotInSpanError,
)
from lascoux.heckewords import CompatiblePair, Permutation, Word, hecke_eval, shift_perm
from lascoux.leftkey import left_key_increasing
from lascoux.polynomials import (
    ExpansionResult,
    LPolynomial,
    Monomial,
    default_grothendieck_n,
    grothendieck,
    grothendieck_stable_truncated,
    key_polynomial,
    lascoux,
    stanley_truncated,
)
from lascoux.setops import FinSet
from lascoux.tableaux import IncreasingTableau, enumerate_increasing, reading_word, restrict_below
from lascoux.utils.logging import get_logger, log_execution_time

logger = get_logger(__name__)


class HeckeReading(str, Enum):
    """How a tableau's reading word is matched against w in the Grothendieck expansion."""

    REVERSED = "reversed"  # [rev(word(P))]_H = w⁻¹
    FORWARD = "forward"  # [word(P)]_H = w⁻¹


def _resolve_verify(verify: Optional[bool]) -> bool:
    return get_settings().verify_identities if verify is None else verify


def _prefix_below(letters: Sequence[int], inversions: frozenset) -> bool:
    """The 0-Hecke product of the prefix lies below the target in left weak order."""
    return hecke_eval(letters).inversions() <= inversions


def build_p1(alpha: WeakComposition) -> IncreasingTableau:
    """
    The increasing tableau with column c = {i + c − 1 : α_i ≥ c}.

    Raises:
        InternalAssertionError: If its left key does not have weight α.
    """
    width = max(alpha.entries, default=0)
    columns = [
        [i + c - 1 for i, a in enumerate(alpha.entries, start=1) if a >= c] for c in range(1, width + 1)
    ]
    p1 = IncreasingTableau.from_columns(columns)
    n = max(alpha.n, p1.max_entry)
    weight = wt_key(left_key_increasing(p1), n)
    if weight.entries[: alpha.n] != alpha.entries or any(weight.entries[alpha.n :]):
        raise InternalAssertionError(
            "P_1 does not have left-key weight alpha",
            details={"alpha": str(alpha), "weight": str(weight)},
        )
    return p1


def default_threshold(n: int, p1: IncreasingTableau) -> int:
    """Smallest N exceeding both n and every entry of P_1."""
    return max(n, p1.max_entry) + 1


def _product_setup(
    alpha: WeakComposition,
    n: int,
    p1_override: Optional[IncreasingTableau],
    threshold: Optional[int],
) -> Tuple[IncreasingTableau, int]:
    if alpha.n != n:
        raise DomainError("alpha must have length n", details={"alpha": str(alpha), "n": n})
    if p1_override is None:
        p1 = build_p1(alpha)
    else:
        p1 = p1_override
        if p1.num_rows > n:
            raise DomainError("P_1 has more than n rows", details={"rows": p1.num_rows, "n": n})
        weight = wt_key(left_key_increasing(p1), n)
        if weight != alpha:
            raise DomainError(
                "P_1 override must have left-key weight alpha",
                details={"alpha": str(alpha), "weight": str(weight)},
            )
    big_n = default_threshold(n, p1) if threshold is None else threshold
    if big_n <= n or big_n <= p1.max_entry:
        raise DomainError("threshold must exceed n and every entry of P_1", details={"N": big_n, "n": n})
    return p1, big_n


def product_tableaux(
    alpha: WeakComposition,
    w: Permutation,
    n: int,
    p1_override: Optional[IncreasingTableau] = None,
    threshold: Optional[int] = None,
) -> List[IncreasingTableau]:
    """
    Increasing tableaux P with at most n rows such that the entries below N
    form P_1 and the entries above N read a Hecke word of 1^N × w.
    """
    p1, big_n = _product_setup(alpha, n, p1_override, threshold)
    shifted = shift_perm(w, big_n)
    target_inversions = shifted.inversions()
    p1_columns = p1.column_sets()
    alphabet = p1.entries() | FinSet(range(big_n + 1, shifted.size))

    def prune(columns: Tuple[FinSet, ...]) -> bool:
        index = len(columns) - 1
        expected = p1_columns[index] if index < len(p1_columns) else FinSet()
        if columns[-1].below(big_n) != expected:
            return False
        large = [v for col in columns for v in reversed(col.elements) if v > big_n]
        return _prefix_below(large, target_inversions)

    def qualifies(p: IncreasingTableau) -> bool:
        return (
            restrict_below(p, big_n) == p1
            and hecke_eval(reading_word(p).above(big_n)) == shifted
        )

    found = list(enumerate_increasing(n, alphabet, constraint=qualifies, prune=prune))
    logger.bind(alpha=str(alpha), w=str(w), n=n, N=big_n, tableaux=len(found)).debug("product tableaux")
    return found


@log_execution_time(level="INFO")
def expand_product(
    alpha: WeakComposition,
    w: Permutation,
    n: int,
    p1_override: Optional[IncreasingTableau] = None,
    verify: Optional[bool] = None,
    threshold: Optional[int] = None,
) -> ExpansionResult:
    """
    Expand 𝔏_α · G_w(x_1..x_n) in the Lascoux basis.

    Every qualifying tableau P contributes β^{|P| − ℓ(w) − |α|} to the
    coefficient of 𝔏_γ with γ = wt(cap_n(K₋(P))).

    Args:
        alpha: Weak composition of length n.
        w: Permutation.
        n: Number of variables.
        p1_override: Another increasing tableau with left-key weight alpha.
        verify: Check the polynomial identity; defaults to the settings value.
        threshold: The split value N; defaults to the smallest valid one.

    Raises:
        IdentityCheckError: If verification is on and the sides differ.

    Example:
        >>> expand_product(WeakComposition((1,)), Permutation(), 1).lines()
        ['L_(1) : 1']
    """
    length = w.length()
    counts: Dict[Tuple[WeakComposition, int], int] = {}
    for p in product_tableaux(alpha, w, n, p1_override, threshold):
        k = p.size - length - alpha.size
        if k < 0:
            raise InternalAssertionError("negative beta exponent", details={"size": p.size, "w": str(w)})
        gamma = wt_key(cap_n(left_key_increasing(p), n), n)
        counts[(gamma, k)] = counts.get((gamma, k), 0) + 1
    result = ExpansionResult.from_counts(counts)

    if _resolve_verify(verify):
        lhs = lascoux(alpha, n) * grothendieck_stable_truncated(w, n)
        _check_identity(lhs, result.to_polynomial(n), "lascoux times stable grothendieck", alpha=str(alpha), w=str(w), n=n)
    logger.bind(alpha=str(alpha), w=str(w), n=n, terms=len(result)).info("product expanded")
    return result


def expand_key_product(
    alpha: WeakComposition,
    w: Permutation,
    n: int,
    p1_override: Optional[IncreasingTableau] = None,
    verify: Optional[bool] = None,
) -> ExpansionResult:
    """
    Expand κ_α · F_w(x_1..x_n) in key polynomials: only tableaux whose
    large letters read a reduced word contribute.
    """
    target = w.length() + alpha.size
    counts: Dict[Tuple[WeakComposition, int], int] = {}
    for p in product_tableaux(alpha, w, n, p1_override):
        if p.size == target:
            gamma = wt_key(cap_n(left_key_increasing(p), n), n)
            counts[(gamma, 0)] = counts.get((gamma, 0), 0) + 1
    result = ExpansionResult.from_counts(counts)
    if _resolve_verify(verify):
        lhs = key_polynomial(alpha, n) * stanley_truncated(w, n)
        _check_identity(lhs, result.key_polynomial_sum(n), "key times stanley", alpha=str(alpha), w=str(w), n=n)
    return result


def grothendieck_tableaux(
    w: Permutation,
    n: Optional[int] = None,
    reading: HeckeReading = HeckeReading.REVERSED,
) -> List[IncreasingTableau]:
    """Increasing tableaux over [n] with at most n rows matching w under the chosen reading."""
    n = default_grothendieck_n(w) if n is None else n
    # [rev(a)]_H is the inverse of [a]_H, so both readings constrain word(P) itself
    word_target = w if reading is HeckeReading.REVERSED else w.inverse()
    inversions = word_target.inversions()

    def prune(columns: Tuple[FinSet, ...]) -> bool:
        letters = [v for col in columns for v in reversed(col.elements)]
        return _prefix_below(letters, inversions)

    def qualifies(p: IncreasingTableau) -> bool:
        word = reading_word(p)
        if reading is HeckeReading.REVERSED:
            return hecke_eval(word.reversed()) == w.inverse()
        return hecke_eval(word) == w.inverse()

    return list(enumerate_increasing(n, FinSet(range(1, n + 1)), constraint=qualifies, prune=prune))


def _grothendieck_counts(w: Permutation, n: int, reading: HeckeReading) -> ExpansionResult:
    length = w.length()
    counts: Dict[Tuple[WeakComposition, int], int] = {}
    for p in grothendieck_tableaux(w, n, reading):
        gamma = wt_key(left_key_increasing(p), n)
        k = p.size - length
        counts[(gamma, k)] = counts.get((gamma, k), 0) + 1
    return ExpansionResult.from_counts(counts)


@log_execution_time(level="INFO")
def expand_grothendieck(
    w: Permutation,
    n: Optional[int] = None,
    verify: Optional[bool] = None,
) -> ExpansionResult:
    """
    Expand 𝔊_w in the Lascoux basis: Σ_P β^{|P| − ℓ(w)} 𝔏_{wt(K₋(P))} over
    increasing tableaux P with [rev(word(P))]_H = w⁻¹, entries in [n] and
    at most n rows.

    Raises:
        IdentityCheckError: If verification is on and the sides differ; the
            details record whether the forward reading would have matched.
    """
    n = default_grothendieck_n(w) if n is None else n
    result = _grothendieck_counts(w, n, HeckeReading.REVERSED)
    if _resolve_verify(verify):
        expected = grothendieck(w, n)
        if expected != result.to_polynomial(n):
            alternate = _grothendieck_counts(w, n, HeckeReading.FORWARD)
            forward_holds = expected == alternate.to_polynomial(n)
            logger.bind(w=str(w), forward_holds=forward_holds).error("grothendieck expansion mismatch")
            raise IdentityCheckError(
                "grothendieck expansion does not reproduce the grothendieck polynomial",
                details={"w": str(w), "n": n, "forward_reading_holds": forward_holds},
            )
    logger.bind(w=str(w), n=n, terms=len(result)).info("grothendieck expanded")
    return result


def _check_identity(lhs: LPolynomial, rhs: LPolynomial, what: str, **context: object) -> None:
    if lhs != rhs:
        diff = lhs - rhs
        logger.bind(what=what, **context).error("identity check failed")
        raise IdentityCheckError(
            f"{what}: expansion disagrees with the product",
            details={**context, "difference_terms": len(diff), "difference": str(diff)[:400]},
        )


@log_execution_time(level="INFO")
def expand_in_lascoux_basis(p: LPolynomial, n: int) -> ExpansionResult:
    """
    Solve Σ c_{γ,k} β^k 𝔏_γ = p exactly over Q.

    Candidates are γ with |γ| between the least and greatest x-degree of p,
    γ_i at most the x_i-degree of p, and β-shifts k that match some term's
    x-degree minus β-degree.

    Raises:
        NotInSpanError: If the system is inconsistent or the solution is not integral.
        NegativeCoefficientError: If some coefficient is negative.
    """
    if p.n != n:
        raise DomainError("polynomial has a different number of variables", details={"p": p.n, "n": n})
    if p.is_zero():
        return ExpansionResult()

    low, high = p.total_degrees()
    shifts = {sum(e) - b for (b, e) in p.terms}
    max_beta = p.max_beta_degree
    candidates: List[Tuple[WeakComposition, int]] = []
    for entries in product(*(range(p.x_degree(i) + 1) for i in range(1, n + 1))):
        size = sum(entries)
        if not low <= size <= high:
            continue
        for shift in sorted(shifts):
            k = size - shift
            if 0 <= k <= max_beta:
                candidates.append((WeakComposition(tuple(entries)), k))

    row_of: Dict[Monomial, int] = {}
    rows: Dict[int, Dict[int, object]] = {}

    def put(mono: Monomial, col: int, value: int) -> None:
        r = row_of.setdefault(mono, len(row_of))
        rows.setdefault(r, {})[col] = QQ(value)

    for col, (gamma, k) in enumerate(candidates):
        for (b, e), c in lascoux(gamma, n).terms.items():
            put((b + k, e), col, c)
    rhs = len(candidates)
    for mono, c in p.terms.items():
        put(mono, rhs, c)

    matrix = DomainMatrix(rows, (len(row_of), rhs + 1), QQ)
    reduced, pivots = matrix.rref()
    if rhs in pivots:
        raise NotInSpanError("polynomial is not in the span of the candidate Lascoux polynomials", details={"candidates": rhs})
    if len(pivots) != rhs:
        raise InternalAssertionError("candidate Lascoux polynomials are dependent", details={"rank": len(pivots), "candidates": rhs})

    solved = reduced.to_Matrix()
    counts: Dict[Tuple[WeakComposition, int], int] = {}
    negatives = []
    for row, col in enumerate(pivots):
        value = solved[row, rhs]
        if value == 0:
            continue
        if not value.is_integer:
            raise NotInSpanError("expansion has non-integral coefficients", details={"gamma": str(candidates[col][0]), "value": str(value)})
        if value < 0:
            negatives.append((str(candidates[col][0]), candidates[col][1], int(value)))
            continue
        counts[candidates[col]] = int(value)
    if negatives:
        raise NegativeCoefficientError("expansion has negative coefficients", details={"terms": negatives})
    logger.bind(n=n, candidates=len(candidates), terms=len(counts)).debug("basis expansion solved")
    return ExpansionResult.from_counts(counts)


def shuffle_pairs(small: CompatiblePair, large: CompatiblePair) -> CompatiblePair:
    """
    Merge two compatible pairs whose letters are disjoint into the unique
    compatible pair containing both as subsequences.
    """
    steps = sorted(
        list(zip(small.a.letters, small.i.letters)) + list(zip(large.a.letters, large.i.letters)),
        key=lambda step: (step[1], -step[0]),
    )
    return CompatiblePair(Word(tuple(a for a, _ in steps)), Word(tuple(i for _, i in steps)))
