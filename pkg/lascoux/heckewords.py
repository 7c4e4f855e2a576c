"""
Permutations, words and the 0-Hecke monoid

The 0-Hecke product [a]_H of a word a = a_1 … a_l is computed by applying
s_{a_1}, s_{a_2}, … in turn on the value side: s_j swaps the values j and
j + 1 when j currently precedes j + 1 (the length goes up) and does
nothing otherwise. With this reading [421433]_H has one-line 24153 and
[rev(a)]_H is the inverse of [a]_H.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from lascoux.combi_core import WeakComposition
from lascoux.errors import DomainError
from lascoux.utils.logging import get_logger

logger = get_logger(__name__)


class Permutation:
    """
    Finite-support permutation of the positive integers.

    Stored as the one-line values on [1..K] with K minimal, so w and 1^0 × w
    compare equal and the identity has K = 0.

    Example:
        >>> w = Permutation([2, 1, 4, 3])
        >>> w.length(), w(3), w.inverse() == w
        (2, 4, True)
    """

    __slots__ = ("_one_line",)

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(values)
        if any(isinstance(v, bool) or not isinstance(v, int) for v in vals) or sorted(vals) != list(
            range(1, len(vals) + 1)
        ):
            raise DomainError("one-line notation must be a bijection of [1..K]", details={"values": vals})
        k = len(vals)
        while k and vals[k - 1] == k:
            k -= 1
        self._one_line: Tuple[int, ...] = vals[:k]

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def simple(cls, i: int) -> "Permutation":
        """The simple transposition s_i = (i, i+1)."""
        if i < 1:
            raise DomainError("simple transpositions are indexed from 1", details={"i": i})
        values = list(range(1, i + 2))
        values[i - 1], values[i] = values[i], values[i - 1]
        return cls(values)

    @property
    def size(self) -> int:
        """Minimal K such that the permutation fixes every value beyond K."""
        return len(self._one_line)

    def __call__(self, i: int) -> int:
        return self._one_line[i - 1] if 1 <= i <= len(self._one_line) else i

    def one_line(self, length: Optional[int] = None) -> Tuple[int, ...]:
        """One-line notation padded with fixed points to `length`."""
        length = self.size if length is None else length
        if length < self.size:
            raise DomainError("one-line length shorter than the support", details={"length": length, "support": self.size})
        return self._one_line + tuple(range(self.size + 1, length + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for pos, val in enumerate(self._one_line, start=1):
            inv[val - 1] = pos
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        k = max(self.size, other.size)
        return Permutation(self(other(i)) for i in range(1, k + 1))

    def inversions(self) -> FrozenSet[Tuple[int, int]]:
        """Position pairs p < q with w(p) > w(q)."""
        vals = self._one_line
        return frozenset(
            (p + 1, q + 1) for p in range(len(vals)) for q in range(p + 1, len(vals)) if vals[p] > vals[q]
        )

    def length(self) -> int:
        return len(self.inversions())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Permutation):
            return self._one_line == other._one_line
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._one_line)

    def __repr__(self) -> str:
        return f"Permutation({list(self._one_line)})"

    def __str__(self) -> str:
        if not self._one_line:
            return "1"
        if self.size <= 9:
            return "".join(str(v) for v in self._one_line)
        return ",".join(str(v) for v in self._one_line)


@dataclass(frozen=True)
class Word:
    """A finite word over the positive integers."""

    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        for v in letters:
            if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
                raise DomainError("word letters must be positive integers", details={"letters": letters})
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *letters: int) -> "Word":
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def reversed(self) -> "Word":
        """rev(a)."""
        return Word(self.letters[::-1])

    def weight(self, n: int) -> WeakComposition:
        """Occurrences of each letter of [n]."""
        counts = [0] * n
        for v in self.letters:
            if v > n:
                raise DomainError(f"letter {v} exceeds n={n}", details={"word": str(self)})
            counts[v - 1] += 1
        return WeakComposition(tuple(counts))

    def above(self, threshold: int) -> "Word":
        """Subword of letters strictly greater than threshold."""
        return Word(tuple(v for v in self.letters if v > threshold))

    def below(self, threshold: int) -> "Word":
        """Subword of letters strictly smaller than threshold."""
        return Word(tuple(v for v in self.letters if v < threshold))

    def __str__(self) -> str:
        if all(v <= 9 for v in self.letters):
            return "".join(str(v) for v in self.letters)
        return ",".join(str(v) for v in self.letters)


@dataclass(frozen=True)
class CompatiblePair:
    """
    A pair (a, i) of equal-length words with i weakly increasing and a
    strictly decreasing along every plateau of i.

    Example:
        >>> CompatiblePair(Word.of(4, 2, 1, 4, 3, 3), Word.of(1, 1, 1, 2, 2, 3)).is_bounded
        True
    """

    a: Word
    i: Word

    def __post_init__(self) -> None:
        if len(self.a) != len(self.i):
            raise DomainError("compatible pair words must have equal length", details={"a": str(self.a), "i": str(self.i)})
        for j in range(len(self.i) - 1):
            if self.i[j] > self.i[j + 1]:
                raise DomainError("i must be weakly increasing", details={"i": str(self.i)})
            if self.i[j] == self.i[j + 1] and self.a[j] <= self.a[j + 1]:
                raise DomainError(
                    "a must strictly decrease where i is constant",
                    details={"a": str(self.a), "i": str(self.i), "position": j + 1},
                )

    @property
    def is_bounded(self) -> bool:
        """i_j ≤ a_j for every j."""
        return all(x <= a for a, x in zip(self.a, self.i))

    def __len__(self) -> int:
        return len(self.a)

    def split_at(self, threshold: int) -> Tuple["CompatiblePair", "CompatiblePair"]:
        """Split into the letters below and above threshold, keeping positions' i-values."""
        if threshold in self.a.letters:
            raise DomainError("split threshold occurs in the word", details={"threshold": threshold})
        small = [(a, x) for a, x in zip(self.a, self.i) if a < threshold]
        large = [(a, x) for a, x in zip(self.a, self.i) if a > threshold]
        return _pair_from_steps(small), _pair_from_steps(large)

    def __str__(self) -> str:
        return f"({self.a}, {self.i})"


def _pair_from_steps(steps: Sequence[Tuple[int, int]]) -> CompatiblePair:
    return CompatiblePair(Word(tuple(a for a, _ in steps)), Word(tuple(x for _, x in steps)))


def _apply_letter(state: List[int], positions: List[int], j: int) -> bool:
    """0-Hecke action of s_j on a one-line state; returns True when the length went up."""
    p, q = positions[j], positions[j + 1]
    if p > q:
        return False
    state[p], state[q] = j + 1, j
    positions[j], positions[j + 1] = q, p
    return True


def hecke_eval(a: Union[Word, Sequence[int]]) -> Permutation:
    """[a]_H, the 0-Hecke product of the word."""
    letters = a.letters if isinstance(a, Word) else tuple(a)
    k = max(letters, default=0) + 1
    state = list(range(k + 1))  # index 0 unused
    positions = list(range(k + 1))
    for j in letters:
        _apply_letter(state, positions, j)
    return Permutation(state[1:])


def coxeter_length(w: Permutation) -> int:
    return w.length()


def is_hecke_word(a: Word, w: Permutation) -> bool:
    return hecke_eval(a) == w


def is_reduced(a: Word) -> bool:
    return hecke_eval(a).length() == len(a)


def shift_perm(w: Permutation, shift: int) -> Permutation:
    """1^N × w: fixes 1..N and sends i > N to w(i − N) + N."""
    if shift < 0:
        raise DomainError("shift must be nonnegative", details={"N": shift})
    if w.size == 0:
        return w
    return Permutation(tuple(range(1, shift + 1)) + tuple(v + shift for v in w.one_line()))


class PairMode(str, Enum):
    """Constraint on the i-word of enumerated compatible pairs."""

    BOUNDED = "bounded"
    CAP = "cap"


def enumerate_compatible_pairs(
    w: Permutation,
    mode: PairMode = PairMode.BOUNDED,
    n: Optional[int] = None,
) -> Iterator[CompatiblePair]:
    """
    Every compatible pair (a, i) with [a]_H = w, in bounded or capped mode.

    Bounded mode requires i_j ≤ a_j, cap mode requires i_j ≤ n. The search
    extends prefixes whose 0-Hecke product stays below w in left weak order
    (inversion sets contained in w's), which is exactly when the prefix can
    still be completed.
    """
    mode = PairMode(mode)
    if mode is PairMode.CAP and (n is None or n < 1):
        raise DomainError("cap mode needs n >= 1", details={"n": n})
    k = w.size
    target = list((0,) + w.one_line(k))
    inversions = w.inversions()
    i_max = n if mode is PairMode.CAP else max(k - 1, 0)

    a_word: List[int] = []
    i_word: List[int] = []

    def extend(state: List[int], positions: List[int]) -> Iterator[CompatiblePair]:
        if state == target:
            yield CompatiblePair(Word(tuple(a_word)), Word(tuple(i_word)))
        last_i = i_word[-1] if i_word else 1
        for i_val in range(last_i, (i_max or 0) + 1):
            for letter in range(1, k):
                if i_word and i_val == last_i and letter >= a_word[-1]:
                    continue
                if mode is PairMode.BOUNDED and i_val > letter:
                    continue
                p, q = positions[letter], positions[letter + 1]
                if p < q and (p, q) not in inversions:
                    continue
                next_state, next_positions = state[:], positions[:]
                _apply_letter(next_state, next_positions, letter)
                a_word.append(letter)
                i_word.append(i_val)
                yield from extend(next_state, next_positions)
                a_word.pop()
                i_word.pop()

    logger.bind(w=str(w), mode=mode.value, n=n).debug("enumerating compatible pairs")
    yield from extend(list(range(k + 1)), list(range(k + 1)))
