"""
Operators on finite sets of positive integers

FinSet is an immutable sorted set with 1-based order statistics. The two
greedy operators build left keys: triangle_left (T ◁ S) lets every element
of S, largest first, pick the largest unpicked element of T below it;
triangle_right_geq (T ⊵ S) lets every element of S, smallest first, pick
the smallest unpicked element of T at least as large.
"""

from bisect import bisect_left, bisect_right
from typing import Iterable, Iterator, List, Sequence, Tuple

from lascoux.errors import DomainError


class FinSet:
    """
    Finite set of positive integers with order statistics.

    S(i) is the i-th smallest element (1-based); S_{<x}, S_{≤x}, S_{>x} and
    S_{≥x} are the restrictions below/above x.

    Example:
        >>> s = FinSet([7, 1, 3])
        >>> s.nth(2), s.below(7)
        (3, FinSet([1, 3]))
    """

    __slots__ = ("_elements",)

    def __init__(self, elements: Iterable[int] = ()):
        items = set()
        for v in elements:
            if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
                raise DomainError("FinSet elements must be positive integers", details={"element": v})
            items.add(v)
        self._elements: Tuple[int, ...] = tuple(sorted(items))

    @classmethod
    def _from_sorted(cls, elements: Sequence[int]) -> "FinSet":
        obj = cls.__new__(cls)
        obj._elements = tuple(elements)
        return obj

    @classmethod
    def of(cls, *elements: int) -> "FinSet":
        return cls(elements)

    @property
    def elements(self) -> Tuple[int, ...]:
        """Elements in increasing order."""
        return self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int):
            return False
        i = bisect_left(self._elements, x)
        return i < len(self._elements) and self._elements[i] == x

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FinSet):
            return self._elements == other._elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elements)

    def __repr__(self) -> str:
        return f"FinSet({list(self._elements)})"

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self._elements) + "}"

    def __bool__(self) -> bool:
        return bool(self._elements)

    def nth(self, i: int) -> int:
        """S(i), the i-th smallest element."""
        if not 1 <= i <= len(self._elements):
            raise DomainError(f"index {i} out of range for a set of size {len(self)}", details={"set": str(self)})
        return self._elements[i - 1]

    @property
    def min(self) -> int:
        if not self._elements:
            raise DomainError("min of empty set")
        return self._elements[0]

    @property
    def max(self) -> int:
        if not self._elements:
            raise DomainError("max of empty set")
        return self._elements[-1]

    def below(self, x: int) -> "FinSet":
        """S_{<x}."""
        return FinSet._from_sorted(self._elements[: bisect_left(self._elements, x)])

    def at_most(self, x: int) -> "FinSet":
        """S_{≤x}."""
        return FinSet._from_sorted(self._elements[: bisect_right(self._elements, x)])

    def above(self, x: int) -> "FinSet":
        """S_{>x}."""
        return FinSet._from_sorted(self._elements[bisect_right(self._elements, x):])

    def at_least(self, x: int) -> "FinSet":
        """S_{≥x}."""
        return FinSet._from_sorted(self._elements[bisect_left(self._elements, x):])

    def add(self, x: int) -> "FinSet":
        """S ⊔ x; x must not already be present."""
        if x in self:
            raise DomainError(f"{x} already in {self}")
        return FinSet(self._elements + (x,))

    def remove(self, x: int) -> "FinSet":
        """S − x; x must be present."""
        if x not in self:
            raise DomainError(f"{x} not in {self}")
        return FinSet._from_sorted(tuple(v for v in self._elements if v != x))

    def __or__(self, other: "FinSet") -> "FinSet":
        return FinSet(self._elements + other._elements)

    def __and__(self, other: "FinSet") -> "FinSet":
        return FinSet._from_sorted(tuple(v for v in self._elements if v in other))

    def __sub__(self, other: "FinSet") -> "FinSet":
        return FinSet._from_sorted(tuple(v for v in self._elements if v not in other))

    def __le__(self, other: "FinSet") -> bool:
        return all(v in other for v in self._elements)

    def __lt__(self, other: "FinSet") -> bool:
        return len(self) < len(other) and self <= other


def triangle_left(t: FinSet, s: FinSet) -> FinSet:
    """
    T ◁ S, computed greedily.

    Elements of S are visited in decreasing order; each picks the largest
    unpicked element of T strictly below it, or nothing.
    """
    available: List[int] = list(t.elements)
    picked: List[int] = []
    for x in reversed(s.elements):
        i = bisect_left(available, x)
        if i:
            picked.append(available.pop(i - 1))
    return FinSet._from_sorted(sorted(picked))


def triangle_left_recursive(t: FinSet, s: FinSet) -> FinSet:
    """T ◁ S by its recursive definition; used to cross-check triangle_left."""
    if not s or not t or s.max <= t.min:
        return FinSet()
    m = t.below(s.max).max
    rest = triangle_left_recursive(t.below(m), s.remove(s.max))
    return rest.add(m)


def triangle_chain(columns: Sequence[FinSet]) -> FinSet:
    """S_1 ◁ S_2 ◁ … ◁ S_k, evaluated right to left."""
    if not columns:
        raise DomainError("triangle_chain needs at least one set")
    acc = columns[-1]
    for col in reversed(columns[:-1]):
        acc = triangle_left(col, acc)
    return acc


def triangle_right_geq(t: FinSet, s: FinSet) -> FinSet:
    """
    T ⊵ S: elements of S, smallest first, each pick the smallest unpicked
    element of T that is at least as large.
    """
    available: List[int] = list(t.elements)
    picked: List[int] = []
    for x in s.elements:
        i = bisect_left(available, x)
        if i < len(available):
            picked.append(available.pop(i))
    return FinSet._from_sorted(sorted(picked))


def dominates(t: FinSet, s: FinSet) -> bool:
    """T ⪯ S: |T| ≥ |S| and T(i) < S(i) for every i ∈ [|S|]."""
    if len(t) < len(s):
        return False
    return all(a < b for a, b in zip(t.elements, s.elements))
