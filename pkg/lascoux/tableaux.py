"""
Tableau families

IncreasingTableau (rows and columns strictly increasing), RSSYT (rows weakly
decreasing, columns strictly decreasing), RSVT (set-valued, reverse) and
DottedSkewTableau (skew increasing filling with bullets), plus reading
words, weights, the L flattening and the enumerators the polynomial
formulas run on.
"""

from itertools import combinations
from typing import (
    Callable,
    ClassVar,
    Dict,
    Generic,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from lascoux.combi_core import Cell, Partition, Shape, WeakComposition
from lascoux.errors import DomainError
from lascoux.heckewords import Word
from lascoux.setops import FinSet, dominates

E = TypeVar("E")
TableauT = TypeVar("TableauT", bound="_Tableau")

BULLET = "•"
DottedEntry = Union[int, str]


class _Tableau(Generic[E]):
    """Shared storage for fillings of a normal (straight) shape."""

    __slots__ = ("_rows",)
    family: ClassVar[str] = "tableau"

    def __init__(self, rows: Iterable[Iterable[E]] = ()):
        built = [tuple(self._coerce(v) for v in row) for row in rows]
        while built and not built[-1]:
            built.pop()
        lengths = [len(row) for row in built]
        if any(length == 0 for length in lengths) or any(
            lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)
        ):
            raise DomainError(f"{self.family} rows must form a partition shape", details={"rows": lengths})
        self._rows: Tuple[Tuple[E, ...], ...] = tuple(built)
        self._validate()

    @classmethod
    def _coerce(cls, value: object) -> E:
        raise NotImplementedError

    def _validate(self) -> None:
        raise NotImplementedError

    @classmethod
    def from_columns(cls: "type[TableauT]", columns: Sequence[Sequence[E]]) -> "TableauT":
        """Build from columns listed top to bottom."""
        height = max((len(col) for col in columns), default=0)
        return cls([[col[r] for col in columns if len(col) > r] for r in range(height)])

    @property
    def rows(self) -> Tuple[Tuple[E, ...], ...]:
        return self._rows

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self._rows))

    @property
    def num_rows(self) -> int:
        return len(self._rows)

    @property
    def num_cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def size(self) -> int:
        """Number of cells."""
        return sum(len(row) for row in self._rows)

    def __len__(self) -> int:
        return self.size

    def is_empty(self) -> bool:
        return not self._rows

    def has_cell(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self._rows) and 1 <= c <= len(self._rows[r - 1])

    def entry(self, r: int, c: int) -> E:
        """Entry at 1-based (row, column)."""
        if not self.has_cell(r, c):
            raise DomainError(f"no cell ({r},{c}) in {self.family}", details={"shape": self.shape.parts})
        return self._rows[r - 1][c - 1]

    def cells(self) -> Iterator[Tuple[int, int, E]]:
        for r, row in enumerate(self._rows, start=1):
            for c, v in enumerate(row, start=1):
                yield r, c, v

    def columns(self) -> Tuple[Tuple[E, ...], ...]:
        """Columns read top to bottom."""
        return tuple(
            tuple(row[c] for row in self._rows if len(row) > c) for c in range(self.num_cols)
        )

    def is_outer_cell(self, r: int, c: int) -> bool:
        """(r, c) is in the shape and neither (r+1, c) nor (r, c+1) is."""
        return self.has_cell(r, c) and not self.has_cell(r + 1, c) and not self.has_cell(r, c + 1)

    def outer_cells(self) -> List[Cell]:
        return [(r, len(row)) for r, row in enumerate(self._rows, start=1) if self.is_outer_cell(r, len(row))]

    def __eq__(self, other: object) -> bool:
        if type(other) is type(self):
            return self._rows == other._rows  # type: ignore[attr-defined]
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(row) for row in self._rows]})"


def _is_positive_int(v: object) -> bool:
    return isinstance(v, int) and not isinstance(v, bool) and v > 0


class IncreasingTableau(_Tableau[int]):
    """
    Positive integers, rows and columns strictly increasing.

    Example:
        >>> p = IncreasingTableau([[1, 4, 6, 7], [3, 7], [7]])
        >>> p.column_sets()[0]
        FinSet([1, 3, 7])
    """

    __slots__ = ()
    family = "increasing tableau"

    @classmethod
    def _coerce(cls, value: object) -> int:
        if not _is_positive_int(value):
            raise DomainError("increasing tableau entries must be positive integers", details={"entry": value})
        return value  # type: ignore[return-value]

    def _validate(self) -> None:
        for r, row in enumerate(self._rows):
            for c, v in enumerate(row):
                if c and row[c - 1] >= v:
                    raise DomainError("rows must strictly increase", details={"row": r + 1, "entries": row})
                if r and self._rows[r - 1][c] >= v:
                    raise DomainError("columns must strictly increase", details={"cell": (r + 1, c + 1)})

    def column_sets(self) -> Tuple[FinSet, ...]:
        return tuple(FinSet(col) for col in self.columns())

    def entries(self) -> FinSet:
        """Set of values appearing in the tableau."""
        return FinSet(v for row in self._rows for v in row)

    @property
    def max_entry(self) -> int:
        return max((row[-1] for row in self._rows), default=0)


class RSSYT(_Tableau[int]):
    """Reverse semistandard tableau: rows weakly decrease, columns strictly decrease."""

    __slots__ = ()
    family = "reverse semistandard tableau"

    @classmethod
    def _coerce(cls, value: object) -> int:
        if not _is_positive_int(value):
            raise DomainError("RSSYT entries must be positive integers", details={"entry": value})
        return value  # type: ignore[return-value]

    def _validate(self) -> None:
        for r, row in enumerate(self._rows):
            for c, v in enumerate(row):
                if c and row[c - 1] < v:
                    raise DomainError("RSSYT rows must weakly decrease", details={"row": r + 1, "entries": row})
                if r and self._rows[r - 1][c] <= v:
                    raise DomainError("RSSYT columns must strictly decrease", details={"cell": (r + 1, c + 1)})

    def column_sets(self) -> Tuple[FinSet, ...]:
        return tuple(FinSet(col) for col in self.columns())


class RSVT(_Tableau[Tuple[int, ...]]):
    """
    Reverse set-valued tableau.

    Each cell holds a nonempty set, stored as a descending tuple. Horizontally
    min(left) ≥ max(right); vertically min(top) > max(bottom).
    """

    __slots__ = ()
    family = "reverse set-valued tableau"

    @classmethod
    def _coerce(cls, value: object) -> Tuple[int, ...]:
        if isinstance(value, int):
            value = (value,)
        items = tuple(sorted(set(value), reverse=True))  # type: ignore[arg-type]
        if not items or not all(_is_positive_int(v) for v in items):
            raise DomainError("RSVT cells must be nonempty sets of positive integers", details={"cell": value})
        return items

    def _validate(self) -> None:
        for r, row in enumerate(self._rows):
            for c, cell in enumerate(row):
                if c and row[c - 1][-1] < cell[0]:
                    raise DomainError("RSVT rows violate min(left) >= max(right)", details={"cell": (r + 1, c + 1)})
                if r and self._rows[r - 1][c][-1] <= cell[0]:
                    raise DomainError("RSVT columns violate min(top) > max(bottom)", details={"cell": (r + 1, c + 1)})

    @property
    def weight_size(self) -> int:
        """|wt(Q)|, counting every member of every cell."""
        return sum(len(cell) for row in self._rows for cell in row)

    @property
    def min_entry(self) -> int:
        return min(cell[-1] for row in self._rows for cell in row)

    @property
    def max_entry(self) -> int:
        return max((cell[0] for row in self._rows for cell in row), default=0)


class DottedSkewTableau:
    """
    Skew increasing filling with bullets and an order parameter m.

    Integers compare as usual and m < • < m + 1, so bullets sit strictly
    between m and m + 1 in every row and column comparison.
    """

    __slots__ = ("shape", "_grid", "order_param")

    def __init__(self, shape: Shape, grid: Mapping[Cell, DottedEntry], order_param: int = 0):
        if order_param < 0:
            raise DomainError("order parameter must be nonnegative", details={"m": order_param})
        grid = dict(grid)
        if set(grid) != set(shape.cells()):
            raise DomainError(
                "dotted tableau must fill its skew shape exactly",
                details={"missing": sorted(set(shape.cells()) - set(grid)), "extra": sorted(set(grid) - set(shape.cells()))},
            )
        for cell, v in grid.items():
            if v != BULLET and not _is_positive_int(v):
                raise DomainError("dotted entries must be positive integers or bullets", details={"cell": cell, "entry": v})
        self.shape = shape
        self._grid: Dict[Cell, DottedEntry] = grid
        self.order_param = order_param
        self._validate()

    @classmethod
    def from_grid(cls, grid: Mapping[Cell, DottedEntry], order_param: int = 0) -> "DottedSkewTableau":
        """Infer the skew shape from the filled cells; every row must be a nonempty interval."""
        if not grid:
            return cls(Shape(Partition(())), {}, order_param)
        n_rows = max(r for r, _ in grid)
        outer, inner = [], []
        for r in range(1, n_rows + 1):
            cols = sorted(c for rr, c in grid if rr == r)
            if not cols or cols != list(range(cols[0], cols[-1] + 1)):
                raise DomainError("each row must be a nonempty interval of cells", details={"row": r})
            outer.append(cols[-1])
            inner.append(cols[0] - 1)
        return cls(Shape(Partition(tuple(outer)), Partition(tuple(inner))), grid, order_param)

    def _order_key(self, v: DottedEntry) -> Tuple[int, int]:
        return (self.order_param, 1) if v == BULLET else (v, 0)  # type: ignore[return-value]

    def _validate(self) -> None:
        for (r, c), v in self._grid.items():
            key = self._order_key(v)
            for neighbour in ((r, c + 1), (r + 1, c)):
                if neighbour in self._grid and not key < self._order_key(self._grid[neighbour]):
                    raise DomainError(
                        "dotted tableau must strictly increase along rows and columns",
                        details={"cell": (r, c), "next": neighbour, "m": self.order_param},
                    )

    @property
    def grid(self) -> Dict[Cell, DottedEntry]:
        return dict(self._grid)

    def entry(self, r: int, c: int) -> DottedEntry:
        return self._grid[(r, c)]

    def bullets(self) -> List[Cell]:
        return sorted(cell for cell, v in self._grid.items() if v == BULLET)

    @property
    def max_entry(self) -> int:
        return max((v for v in self._grid.values() if v != BULLET), default=0)  # type: ignore[type-var]

    def column_sets(self) -> Dict[int, FinSet]:
        """Integer entries per column index (bullets excluded)."""
        cols: Dict[int, List[int]] = {}
        for (r, c), v in self._grid.items():
            if v != BULLET:
                cols.setdefault(c, []).append(v)  # type: ignore[arg-type]
        return {c: FinSet(vals) for c, vals in cols.items()}

    def with_order_param(self, m: int) -> "DottedSkewTableau":
        return DottedSkewTableau(self.shape, self._grid, m)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DottedSkewTableau):
            return (self._grid, self.order_param) == (other._grid, other.order_param)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((tuple(sorted(self._grid.items())), self.order_param))

    def __repr__(self) -> str:
        return f"DottedSkewTableau({dict(sorted(self._grid.items()))}, m={self.order_param})"


def reading_word(p: IncreasingTableau) -> Word:
    """Columns left to right, each read bottom to top."""
    return Word(tuple(v for col in p.columns() for v in reversed(col)))


def flatten_l(q: RSVT) -> RSSYT:
    """L(Q): keep the largest number of every cell."""
    return RSSYT([[cell[0] for cell in row] for row in q.rows])


def restrict_below(p: IncreasingTableau, bound: int) -> IncreasingTableau:
    """Keep the entries smaller than bound; what remains has normal shape."""
    return IncreasingTableau([[v for v in row if v < bound] for row in p.rows])


def wt_tableau(t: Union[IncreasingTableau, RSSYT, RSVT], n: int) -> WeakComposition:
    """Occurrences of each i ∈ [n]; set-valued cells count every member."""
    counts = [0] * n
    for _, _, v in t.cells():
        for x in v if isinstance(v, tuple) else (v,):
            if x > n:
                raise DomainError(f"entry {x} exceeds n={n}", details={"family": t.family})
            counts[x - 1] += 1
    return WeakComposition(tuple(counts))


def rsvt_remove_min(q: RSVT) -> Tuple[RSVT, Cell, int, int]:
    """
    Remove the minimum value from its rightmost occurrence.

    Returns:
        (Q', cell, alpha, value) where alpha is 1 when the value was alone in
        the cell (the cell disappears) and 0 otherwise.
    """
    if q.is_empty():
        raise DomainError("cannot remove the minimum of an empty RSVT")
    value = q.min_entry
    holders = [(r, c) for r, c, cell in q.cells() if value in cell]
    r, c = max(holders, key=lambda rc: rc[1])
    rows = [list(row) for row in q.rows]
    cell = rows[r - 1][c - 1]
    if len(cell) == 1:
        if c != len(rows[r - 1]) or (r < len(rows) and len(rows[r]) >= c):
            raise DomainError("rightmost minimum is not removable", details={"cell": (r, c)})
        rows[r - 1].pop()
        alpha = 1
    else:
        rows[r - 1][c - 1] = tuple(v for v in cell if v != value)
        alpha = 0
    return RSVT(rows), (r, c), alpha, value


def _columns_to_tableau(columns: Sequence[FinSet]) -> IncreasingTableau:
    return IncreasingTableau.from_columns([col.elements for col in columns])


def enumerate_increasing(
    max_rows: int,
    alphabet: Union[FinSet, Iterable[int]],
    constraint: Optional[Callable[[IncreasingTableau], bool]] = None,
    prune: Optional[Callable[[Tuple[FinSet, ...]], bool]] = None,
    max_cells: Optional[int] = None,
) -> Iterator[IncreasingTableau]:
    """
    All increasing tableaux with at most max_rows rows over the alphabet.

    Tableaux are grown column by column: a new column is any subset of the
    alphabet, no longer than the previous one, dominating it in the ⪯
    sense. `prune` sees the partial column tuple and cuts the branch when it
    returns False; `constraint` filters complete tableaux. The empty tableau
    is included.
    """
    letters = alphabet if isinstance(alphabet, FinSet) else FinSet(alphabet)
    if max_rows < 0:
        raise DomainError("max_rows must be nonnegative", details={"max_rows": max_rows})
    candidates: List[FinSet] = [
        FinSet._from_sorted(combo)
        for size in range(1, min(max_rows, len(letters)) + 1)
        for combo in combinations(letters.elements, size)
    ]

    def grow(columns: Tuple[FinSet, ...], cells: int) -> Iterator[IncreasingTableau]:
        tableau = _columns_to_tableau(columns)
        if constraint is None or constraint(tableau):
            yield tableau
        limit = len(columns[-1]) if columns else max_rows
        for col in candidates:
            if len(col) > limit:
                continue
            if max_cells is not None and cells + len(col) > max_cells:
                continue
            if columns and not dominates(columns[-1], col):
                continue
            extended = columns + (col,)
            if prune is not None and not prune(extended):
                continue
            yield from grow(extended, cells + len(col))

    yield from grow((), 0)


def _subsets_by_max(n: int) -> Dict[int, List[Tuple[int, ...]]]:
    """Nonempty subsets of [n] as descending tuples, grouped by their maximum."""
    groups: Dict[int, List[Tuple[int, ...]]] = {}
    for size in range(1, n + 1):
        for combo in combinations(range(1, n + 1), size):
            groups.setdefault(combo[-1], []).append(tuple(reversed(combo)))
    return groups


def enumerate_rsvt(
    shape: Partition,
    n: int,
    constraint: Optional[Callable[[RSVT], bool]] = None,
) -> Iterator[RSVT]:
    """All RSVTs of the given shape with entries in [n], filtered by constraint."""
    groups = _subsets_by_max(n)
    order = [(r, c) for c in range(1, (shape.parts[0] if shape.parts else 0) + 1) for r in range(1, len(shape) + 1) if shape.row_length(r) >= c]
    filling: Dict[Cell, Tuple[int, ...]] = {}

    def fill(index: int) -> Iterator[RSVT]:
        if index == len(order):
            tableau = RSVT([[filling[(r, c)] for c in range(1, shape.row_length(r) + 1)] for r in range(1, len(shape) + 1)])
            if constraint is None or constraint(tableau):
                yield tableau
            return
        r, c = order[index]
        bound = n
        if c > 1:
            bound = min(bound, filling[(r, c - 1)][-1])
        if r > 1:
            bound = min(bound, filling[(r - 1, c)][-1] - 1)
        for top in range(1, bound + 1):
            for cell in groups.get(top, ()):
                filling[(r, c)] = cell
                yield from fill(index + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def enumerate_rssyt(shape: Partition, n: int) -> Iterator[RSSYT]:
    """All RSSYTs of the given shape with entries in [n]."""
    order = [(r, c) for r in range(1, len(shape) + 1) for c in range(1, shape.row_length(r) + 1)]
    filling: Dict[Cell, int] = {}

    def fill(index: int) -> Iterator[RSSYT]:
        if index == len(order):
            yield RSSYT([[filling[(r, c)] for c in range(1, shape.row_length(r) + 1)] for r in range(1, len(shape) + 1)])
            return
        r, c = order[index]
        upper = n if c == 1 else filling[(r, c - 1)]
        if r > 1:
            upper = min(upper, filling[(r - 1, c)] - 1)
        for v in range(1, upper + 1):
            filling[(r, c)] = v
            yield from fill(index + 1)
        filling.pop((r, c), None)

    yield from fill(0)
