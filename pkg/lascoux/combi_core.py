"""
Combinatorial value types

Weak compositions, partitions, skew shapes and keys, together with the
operations relating them: key_of, wt_key, cap_n, key_leq and
sorted_partition. All types are immutable and validated on construction.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from lascoux.errors import DomainError

Cell = Tuple[int, int]


def _as_int_tuple(values: Iterable[int], what: str) -> Tuple[int, ...]:
    out = tuple(values)
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{what} must contain integers", details={"values": out})
    return out


@dataclass(frozen=True, order=True)
class WeakComposition:
    """
    A finite sequence (α_1, …, α_n) of nonnegative integers.

    Ordering is lexicographic on the entries so results sort stably.

    Example:
        >>> alpha = WeakComposition((1, 0, 2))
        >>> alpha.n, alpha.size
        (3, 3)
    """

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = _as_int_tuple(self.entries, "weak composition")
        if any(v < 0 for v in entries):
            raise DomainError("weak composition entries must be nonnegative", details={"entries": entries})
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zero(cls, n: int) -> "WeakComposition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        """Number of variables (length)."""
        return len(self.entries)

    @property
    def size(self) -> int:
        """|α|, the sum of the entries."""
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.entries) + ")"


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers (row lengths)."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(v for v in _as_int_tuple(self.parts, "partition"))
        # trailing zeros are harmless and dropped
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(v <= 0 for v in parts):
            raise DomainError("partition parts must be positive", details={"parts": parts})
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError("partition parts must weakly decrease", details={"parts": parts})
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def row_length(self, row: int) -> int:
        """Length of 1-based row, 0 beyond the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1)))

    def cells(self) -> List[Cell]:
        """Cells (row, column), 1-based, in row-major order."""
        return [(r, c) for r, length in enumerate(self.parts, start=1) for c in range(1, length + 1)]

    def contains(self, other: "Partition") -> bool:
        return all(self.row_length(r) >= other.row_length(r) for r in range(1, len(other) + 1))

    def addable_corners(self) -> List[Cell]:
        """Cells whose addition leaves a partition, top to bottom."""
        corners = []
        for r in range(1, len(self.parts) + 2):
            c = self.row_length(r) + 1
            if r == 1 or self.row_length(r - 1) >= c:
                corners.append((r, c))
        return corners

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.parts) + ")"


@dataclass(frozen=True)
class Shape:
    """A skew shape λ/μ with μ ⊆ λ."""

    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise DomainError(
                "inner partition must fit inside the outer partition",
                details={"outer": self.outer.parts, "inner": self.inner.parts},
            )

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return self.inner.row_length(r) < c <= self.outer.row_length(r)

    def cells(self) -> List[Cell]:
        return [
            (r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(self.inner.row_length(r) + 1, self.outer.row_length(r) + 1)
        ]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size


@dataclass(frozen=True)
class Key:
    """
    A key: columns C_1 ⊇ C_2 ⊇ … of positive integers.

    Columns are stored as ascending tuples; trailing empty columns are dropped.
    Reading the j-th smallest entry of each column gives row j, so rows of a
    key weakly increase left to right.
    """

    columns: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cols = [tuple(sorted(set(_as_int_tuple(col, "key column")))) for col in self.columns]
        for col, raw in zip(cols, self.columns):
            if len(col) != len(tuple(raw)):
                raise DomainError("key columns must not repeat entries", details={"column": tuple(raw)})
        while cols and not cols[-1]:
            cols.pop()
        for col in cols:
            if not col:
                raise DomainError("only trailing key columns may be empty", details={"columns": cols})
            if col[0] <= 0:
                raise DomainError("key entries must be positive", details={"column": col})
        for left, right in zip(cols, cols[1:]):
            if not set(right) <= set(left):
                raise DomainError(
                    "key columns must be nested",
                    details={"left": left, "right": right},
                )
        object.__setattr__(self, "columns", tuple(cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Key":
        """Build a key from its rows (row j holds the j-th smallest entry of each column)."""
        width = max((len(row) for row in rows), default=0)
        columns = [[row[c] for row in rows if len(row) > c] for c in range(width)]
        return cls(tuple(tuple(col) for col in columns))

    @property
    def column_lengths(self) -> Tuple[int, ...]:
        return tuple(len(col) for col in self.columns)

    @property
    def shape(self) -> Partition:
        """Row-length partition of the key."""
        return Partition(self.column_lengths).conjugate()

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        height = len(self.columns[0]) if self.columns else 0
        return tuple(tuple(col[j] for col in self.columns if len(col) > j) for j in range(height))

    @property
    def max_entry(self) -> int:
        return self.columns[0][-1] if self.columns else 0

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        return " | ".join(",".join(str(v) for v in col) for col in self.columns)


def key_of(alpha: WeakComposition) -> Key:
    """The unique key of weight α: column c holds every i with α_i ≥ c."""
    width = max(alpha.entries, default=0)
    return Key(
        tuple(
            tuple(i for i, a in enumerate(alpha.entries, start=1) if a >= c)
            for c in range(1, width + 1)
        )
    )


def wt_key(key: Key, n: int) -> WeakComposition:
    """Count occurrences of each i ∈ [n]; every entry must be at most n."""
    if key.max_entry > n:
        raise DomainError(
            f"key has entry {key.max_entry} larger than n={n}",
            details={"key": str(key), "n": n},
        )
    counts = [0] * n
    for col in key.columns:
        for v in col:
            counts[v - 1] += 1
    return WeakComposition(tuple(counts))


def cap_column(column: Sequence[int], n: int) -> Tuple[int, ...]:
    """Drop entries > n and refill with the largest values of [n] missing from the column."""
    if len(column) > n:
        raise DomainError(
            f"column of length {len(column)} cannot be capped at n={n}",
            details={"column": tuple(column), "n": n},
        )
    kept = [v for v in column if v <= n]
    dropped = len(column) - len(kept)
    present = set(kept)
    fill: List[int] = []
    v = n
    while len(fill) < dropped:
        if v not in present:
            fill.append(v)
        v -= 1
    return tuple(sorted(kept + fill))


def cap_n(key: Key, n: int) -> Key:
    """Apply cap_column to every column; the result is again a key."""
    return Key(tuple(cap_column(col, n) for col in key.columns))


def key_leq(first: Key, second: Key) -> bool:
    """
    Entrywise comparison of keys of the same shape.

    Returns False when the shapes differ.
    """
    if first.column_lengths != second.column_lengths:
        return False
    return all(a <= b for ca, cb in zip(first.columns, second.columns) for a, b in zip(ca, cb))


def sorted_partition(alpha: WeakComposition) -> Partition:
    """Sort the entries of α decreasingly and drop zeros."""
    return Partition(tuple(sorted((a for a in alpha.entries if a > 0), reverse=True)))
