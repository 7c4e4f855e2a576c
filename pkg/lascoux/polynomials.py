"""
Polynomials in x_1..x_n over Z[β]

LPolynomial is an exact sparse polynomial keyed by (β-degree, exponent
vector). The generating functions built here (Lascoux, key, Grothendieck,
truncated stable Grothendieck, Stanley, Schur) are sums over tableaux or
compatible pairs, never divided differences.
"""

import re
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from lascoux.combi_core import Key, Partition, WeakComposition, key_leq, key_of, sorted_partition
from lascoux.errors import DomainError, InternalAssertionError
from lascoux.heckewords import PairMode, Permutation, enumerate_compatible_pairs
from lascoux.leftkey import left_key_rssyt
from lascoux.tableaux import RSSYT, enumerate_rsvt, flatten_l, wt_tableau
from lascoux.utils.logging import get_logger, log_execution_time

logger = get_logger(__name__)

Monomial = Tuple[int, Tuple[int, ...]]

_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+)|b(?:\^(\d+))?|x(\d+)(?:\^(\d+))?)$")


class LPolynomial:
    """
    Exact polynomial in x_1..x_n whose coefficients are integer polynomials in β.

    Example:
        >>> x1, x2 = LPolynomial.x(2, 1), LPolynomial.x(2, 2)
        >>> str(x1 * x2 + LPolynomial.beta(2) * x1)
        'x1*x2 + b*x1'
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, int]] = None):
        if n < 0:
            raise DomainError("number of variables must be nonnegative", details={"n": n})
        self.n = n
        clean: Dict[Monomial, int] = {}
        for (bdeg, exps), coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or bdeg < 0 or any(e < 0 for e in exps):
                raise DomainError("malformed monomial", details={"n": n, "monomial": (bdeg, exps)})
            if coeff:
                clean[(bdeg, exps)] = clean.get((bdeg, exps), 0) + coeff
        self._terms: Dict[Monomial, int] = {k: v for k, v in clean.items() if v}

    # ========== Constructors ==========

    @classmethod
    def zero(cls, n: int) -> "LPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "LPolynomial":
        return cls(n, {(0, (0,) * n): 1})

    @classmethod
    def monomial(cls, n: int, exponents: Sequence[int], beta_degree: int = 0, coeff: int = 1) -> "LPolynomial":
        return cls(n, {(beta_degree, tuple(exponents)): coeff})

    @classmethod
    def x(cls, n: int, i: int) -> "LPolynomial":
        if not 1 <= i <= n:
            raise DomainError(f"variable x{i} out of range for n={n}")
        return cls.monomial(n, tuple(1 if j == i else 0 for j in range(1, n + 1)))

    @classmethod
    def beta(cls, n: int) -> "LPolynomial":
        return cls.monomial(n, (0,) * n, beta_degree=1)

    # ========== Arithmetic ==========

    def _check(self, other: "LPolynomial") -> None:
        if self.n != other.n:
            raise DomainError("polynomials live in different numbers of variables", details={"left": self.n, "right": other.n})

    def __add__(self, other: Union["LPolynomial", int]) -> "LPolynomial":
        if isinstance(other, int):
            other = LPolynomial.one(self.n) * other
        self._check(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, 0) + coeff
        return LPolynomial(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "LPolynomial":
        return LPolynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "LPolynomial") -> "LPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["LPolynomial", int]) -> "LPolynomial":
        if isinstance(other, int):
            return LPolynomial(self.n, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        terms: Dict[Monomial, int] = {}
        for (b1, e1), c1 in self._terms.items():
            for (b2, e2), c2 in other._terms.items():
                key = (b1 + b2, tuple(a + b for a, b in zip(e1, e2)))
                terms[key] = terms.get(key, 0) + c1 * c2
        return LPolynomial(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LPolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, int):
            return self == LPolynomial.one(self.n) * other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # ========== Inspection ==========

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(sorted(self._terms.items(), key=lambda item: _sort_key(item[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponents: Sequence[int], beta_degree: int = 0) -> int:
        return self._terms.get((beta_degree, tuple(exponents)), 0)

    def beta_part(self, k: int) -> "LPolynomial":
        """Terms of β-degree exactly k (the β^k factor is kept)."""
        return LPolynomial(self.n, {m: c for m, c in self._terms.items() if m[0] == k})

    def beta_zero(self) -> "LPolynomial":
        """Substitute β = 0."""
        return self.beta_part(0)

    @property
    def max_beta_degree(self) -> int:
        return max((b for b, _ in self._terms), default=0)

    def x_degree(self, i: int) -> int:
        """Largest exponent of x_i."""
        return max((e[i - 1] for _, e in self._terms), default=0)

    def total_degrees(self) -> Tuple[int, int]:
        """(min, max) total x-degree over the terms."""
        degrees = [sum(e) for _, e in self._terms]
        return (min(degrees), max(degrees)) if degrees else (0, 0)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def permute_variables(self, perm: Sequence[int]) -> "LPolynomial":
        """Send x_i to x_{perm[i-1]}."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise DomainError("not a permutation of the variables", details={"perm": tuple(perm)})
        terms: Dict[Monomial, int] = {}
        for (b, e), c in self._terms.items():
            new = [0] * self.n
            for i, exp in enumerate(e):
                new[perm[i] - 1] = exp
            terms[(b, tuple(new))] = c
        return LPolynomial(self.n, terms)

    # ========== Text form ==========

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for (b, e), c in self:
            factors = []
            if abs(c) != 1 or (b == 0 and not any(e)):
                factors.append(str(abs(c)))
            if b:
                factors.append("b" if b == 1 else f"b^{b}")
            for i, exp in enumerate(e, start=1):
                if exp:
                    factors.append(f"x{i}" if exp == 1 else f"x{i}^{exp}")
            body = "*".join(factors)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LPolynomial(n={self.n}, '{self}')"

    @classmethod
    def parse(cls, text: str, n: int) -> "LPolynomial":
        """Inverse of str(); accepts integers, b, b^k, xi and xi^k joined by '*'."""
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        terms: Dict[Monomial, int] = {}
        pos = 0
        for match in _TERM_RE.finditer(text):
            if match.start() != pos or not match.group(2).strip():
                raise DomainError("cannot parse polynomial", details={"text": text})
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff, bdeg, exps = sign, 0, [0] * n
            for factor in match.group(2).strip().split("*"):
                f = _FACTOR_RE.match(factor.strip())
                if not f:
                    raise DomainError("cannot parse polynomial factor", details={"factor": factor})
                number, bexp, var, vexp = f.groups()
                if number is not None:
                    coeff *= int(number)
                elif var is not None:
                    i = int(var)
                    if not 1 <= i <= n:
                        raise DomainError(f"variable x{i} out of range for n={n}")
                    exps[i - 1] += int(vexp or 1)
                else:
                    bdeg += int(bexp or 1)
            key = (bdeg, tuple(exps))
            terms[key] = terms.get(key, 0) + coeff
        if pos != len(text):
            raise DomainError("cannot parse polynomial", details={"text": text})
        return cls(n, terms)


def _sort_key(mono: Monomial) -> Tuple[int, Tuple[int, ...]]:
    b, e = mono
    return (b, tuple(-v for v in e))


def poly_add(a: LPolynomial, b: LPolynomial) -> LPolynomial:
    return a + b


def poly_mul(a: LPolynomial, b: LPolynomial) -> LPolynomial:
    return a * b


def _certify_nonnegative(poly: LPolynomial, what: str) -> LPolynomial:
    if not poly.is_nonnegative():
        raise InternalAssertionError(f"{what} has a negative coefficient", details={"polynomial": str(poly)})
    return poly


# ========== Generating functions ==========


@lru_cache(maxsize=4096)
def _lascoux_cached(alpha: WeakComposition) -> LPolynomial:
    n = alpha.n
    target = key_of(alpha)
    shape = sorted_partition(alpha)
    left_keys: Dict[RSSYT, Key] = {}
    terms: Dict[Monomial, int] = {}
    for t in enumerate_rsvt(shape, n):
        flat = flatten_l(t)
        key = left_keys.get(flat)
        if key is None:
            key = left_keys[flat] = left_key_rssyt(flat)
        if not key_leq(key, target):
            continue
        weight = wt_tableau(t, n)
        mono = (weight.size - alpha.size, weight.entries)
        terms[mono] = terms.get(mono, 0) + 1
    return _certify_nonnegative(LPolynomial(n, terms), f"lascoux{alpha}")


@log_execution_time()
def lascoux(alpha: WeakComposition, n: Optional[int] = None) -> LPolynomial:
    """
    The Lascoux polynomial of α in n = len(α) variables.

    Sum over RSVTs T of shape sorted_partition(α), entries in [n], with
    K₋(L(T)) ≤ key(α) entrywise, of β^{|wt(T)| − |α|} x^{wt(T)}.

    Raises:
        DomainError: If n is given and differs from len(α).
    """
    if n is not None and n != alpha.n:
        raise DomainError("alpha must have length n", details={"alpha": str(alpha), "n": n})
    return _lascoux_cached(alpha)


def key_polynomial(alpha: WeakComposition, n: Optional[int] = None) -> LPolynomial:
    """κ_α: the β = 0 part of the Lascoux polynomial."""
    return lascoux(alpha, n).beta_zero()


def key_bounded_rsvt_sum(key: Key, n: int) -> LPolynomial:
    """
    Sum over RSVTs Q of the key's shape with max(Q) ≤ n and K₋(L(Q)) ≤ key
    of β^{|wt(Q)| − |key|} x^{wt(Q)}. Equals the Lascoux polynomial of
    wt(cap_n(key)).
    """
    if len(key.rows) > n:
        raise DomainError("key has more than n rows", details={"rows": len(key.rows), "n": n})
    cells = sum(key.column_lengths)
    terms: Dict[Monomial, int] = {}
    for q in enumerate_rsvt(key.shape, n):
        if key_leq(left_key_rssyt(flatten_l(q)), key):
            weight = wt_tableau(q, n)
            mono = (weight.size - cells, weight.entries)
            terms[mono] = terms.get(mono, 0) + 1
    return _certify_nonnegative(LPolynomial(n, terms), f"capped key sum {key}")


def _pair_sum(w: Permutation, mode: PairMode, n: int) -> LPolynomial:
    length = w.length()
    terms: Dict[Monomial, int] = {}
    for pair in enumerate_compatible_pairs(w.inverse(), mode, n if mode is PairMode.CAP else None):
        mono = (len(pair) - length, pair.i.weight(n).entries)
        terms[mono] = terms.get(mono, 0) + 1
    return LPolynomial(n, terms)


def default_grothendieck_n(w: Permutation) -> int:
    """Variables needed by the Grothendieck polynomial of w."""
    return max(1, w.size - 1)


@log_execution_time()
def grothendieck(w: Permutation, n: Optional[int] = None) -> LPolynomial:
    """
    𝔊_w as the sum over bounded compatible pairs (a, i) with [a]_H = w⁻¹
    of β^{ℓ(a) − ℓ(w)} x^{wt(i)}.

    Args:
        w: Permutation.
        n: Number of variables; at least the support bound minus one.
    """
    needed = default_grothendieck_n(w)
    n = needed if n is None else n
    if n < needed and w.size > 1:
        raise DomainError("too few variables for this permutation", details={"w": str(w), "n": n, "needed": needed})
    return _certify_nonnegative(_pair_sum(w, PairMode.BOUNDED, n), f"grothendieck {w}")


@log_execution_time()
def grothendieck_stable_truncated(w: Permutation, n: int) -> LPolynomial:
    """G_w(x_1..x_n): the sum over pairs with [a]_H = w⁻¹ and every i_j ≤ n."""
    if n < 1:
        raise DomainError("n must be positive", details={"n": n})
    return _certify_nonnegative(_pair_sum(w, PairMode.CAP, n), f"stable grothendieck {w}")


def stanley_truncated(w: Permutation, n: int) -> LPolynomial:
    """F_w(x_1..x_n), the β = 0 part of G_w(x_1..x_n)."""
    return grothendieck_stable_truncated(w, n).beta_zero()


def schur_polynomial(shape: Partition, n: int) -> LPolynomial:
    """s_λ(x_1..x_n) from semistandard tableaux (rows weak, columns strict)."""
    cells = shape.cells()
    filling: Dict[Tuple[int, int], int] = {}
    terms: Dict[Monomial, int] = {}

    def fill(index: int) -> None:
        if index == len(cells):
            exps = [0] * n
            for v in filling.values():
                exps[v - 1] += 1
            mono = (0, tuple(exps))
            terms[mono] = terms.get(mono, 0) + 1
            return
        r, c = cells[index]
        low = 1
        if c > 1:
            low = max(low, filling[(r, c - 1)])
        if r > 1:
            low = max(low, filling[(r - 1, c)] + 1)
        for v in range(low, n + 1):
            filling[(r, c)] = v
            fill(index + 1)
        filling.pop((r, c), None)

    fill(0)
    return _certify_nonnegative(LPolynomial(n, terms), f"schur {shape.parts}")


# ========== Expansion results ==========


class ExpansionResult:
    """
    Finite sum Σ c_γ(β) 𝔏_γ with c_γ ∈ Z≥0[β], stored as γ ↦ (c_0, c_1, …).

    Example:
        >>> r = ExpansionResult({WeakComposition((1,)): (1,)})
        >>> r.lines()
        ['L_(1) : 1']
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[WeakComposition, Sequence[int]]] = None):
        clean: Dict[WeakComposition, Tuple[int, ...]] = {}
        for gamma, coeffs in (terms or {}).items():
            coeffs = list(coeffs)
            if any(c < 0 for c in coeffs):
                raise DomainError("expansion coefficients must be nonnegative", details={"gamma": str(gamma)})
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            if coeffs:
                clean[gamma] = tuple(coeffs)
        self._terms = clean

    @classmethod
    def from_counts(cls, counts: Mapping[Tuple[WeakComposition, int], int]) -> "ExpansionResult":
        """Build from (γ, β-degree) ↦ count."""
        grouped: Dict[WeakComposition, List[int]] = {}
        for (gamma, k), c in counts.items():
            row = grouped.setdefault(gamma, [])
            row.extend([0] * (k + 1 - len(row)))
            row[k] += c
        return cls(grouped)

    @property
    def terms(self) -> Mapping[WeakComposition, Tuple[int, ...]]:
        return MappingProxyType(self._terms)

    def coefficient(self, gamma: WeakComposition) -> Tuple[int, ...]:
        return self._terms.get(gamma, ())

    def items(self) -> List[Tuple[int, WeakComposition, int]]:
        """(k, γ, c) triples sorted by k then γ."""
        return sorted(
            ((k, gamma, c) for gamma, coeffs in self._terms.items() for k, c in enumerate(coeffs) if c),
            key=lambda item: (item[0], item[1].entries),
        )

    def row(self, k: int) -> Dict[WeakComposition, int]:
        """Coefficients of β^k."""
        return {gamma: coeffs[k] for gamma, coeffs in self._terms.items() if len(coeffs) > k and coeffs[k]}

    def beta_zero(self) -> "ExpansionResult":
        return ExpansionResult({gamma: (c,) for gamma, c in self.row(0).items()})

    def tableau_count(self) -> int:
        """Sum of all coefficients at β = 1."""
        return sum(sum(coeffs) for coeffs in self._terms.values())

    def to_polynomial(self, n: int) -> LPolynomial:
        """Σ c_γ(β) 𝔏_γ as an explicit polynomial."""
        total = LPolynomial.zero(n)
        beta = LPolynomial.beta(n)
        for k, gamma, c in self.items():
            power = LPolynomial.one(n)
            for _ in range(k):
                power = power * beta
            total = total + lascoux(gamma, n) * power * c
        return total

    def key_polynomial_sum(self, n: int) -> LPolynomial:
        """Σ c_γ(0) κ_γ."""
        total = LPolynomial.zero(n)
        for gamma, c in self.row(0).items():
            total = total + key_polynomial(gamma, n) * c
        return total

    def lines(self) -> List[str]:
        out = []
        for k, gamma, c in self.items():
            power = "" if k == 0 else ("b " if k == 1 else f"b^{k} ")
            out.append(f"{power}L_{gamma} : {c}")
        return out

    def to_json_dict(self) -> Dict[str, List[int]]:
        return {",".join(str(v) for v in gamma.entries): list(coeffs) for gamma, coeffs in self._terms.items()}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Sequence[int]]) -> "ExpansionResult":
        terms = {}
        for key, coeffs in data.items():
            entries = tuple(int(v) for v in key.split(",")) if key else ()
            terms[WeakComposition(entries)] = tuple(int(c) for c in coeffs)
        return cls(terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExpansionResult):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"ExpansionResult({ {str(g): c for g, c in sorted(self._terms.items())} })"
