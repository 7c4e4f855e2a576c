"""
Reverse row insertion and the Ψ bijection

reverse_insert removes one step from an increasing tableau along its
bumping path and returns the ejected number. psi applies it repeatedly,
driven by the smallest entries of a reverse set-valued tableau, to turn a
tableau pair into a compatible pair. forward_insert inverts one reverse
step by searching the tableaux that could have produced it and replaying
reverse_insert on each.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

from lascoux.combi_core import Cell
from lascoux.errors import DomainError, NonUniquePreimageError, NoPreimageError
from lascoux.heckewords import CompatiblePair, Word
from lascoux.setops import FinSet
from lascoux.tableaux import RSVT, IncreasingTableau, rsvt_remove_min
from lascoux.utils.logging import get_logger

logger = get_logger(__name__)

Rows = Sequence[Sequence[int]]


class RowCase(str, Enum):
    """Case taken by reverse insertion in one row."""

    D = "D"
    DR = "DR"
    IR = "IR"
    NR = "NR"
    INIT_REMOVE = "INIT-REMOVE"


@dataclass(frozen=True)
class TableauPair:
    """An increasing tableau P and an RSVT Q of the same shape."""

    p: IncreasingTableau
    q: RSVT

    def __post_init__(self) -> None:
        if self.p.shape != self.q.shape:
            raise DomainError(
                "P and Q must have the same shape",
                details={"p": self.p.shape.parts, "q": self.q.shape.parts},
            )

    @classmethod
    def empty(cls) -> "TableauPair":
        return cls(IncreasingTableau(), RSVT())


@dataclass(frozen=True)
class ReverseInsertResult:
    p_prime: IncreasingTableau
    m: int
    trace: Tuple[RowCase, ...] = field(default=(), compare=False)


class InsertionPreimage(NamedTuple):
    p: IncreasingTableau
    cell: Cell
    alpha: int


def _ejectable(rows: Rows, x: int) -> bool:
    if not rows or x not in rows[0]:
        return False
    if x + 1 not in rows[0]:
        return True
    return _ejectable(rows[1:], x + 1)


def is_ejectable(p: IncreasingTableau, x: int) -> bool:
    """
    x is in the first row, and either x + 1 is not, or x + 1 is ejectable
    in the rows below.
    """
    return _ejectable(p.rows, x)


def bumping_path(p: IncreasingTableau, r: int, c: int) -> List[Cell]:
    """
    Cells (r, c_r), …, (1, c_1) with c_r = c and c_i the largest column
    with P(i, c_i) < P(i + 1, c_{i+1}).
    """
    if not p.has_cell(r, c):
        raise DomainError(f"({r},{c}) is not a cell of the tableau", details={"shape": p.shape.parts})
    path = [(r, c)]
    value = p.entry(r, c)
    for i in range(r - 1, 0, -1):
        row = p.rows[i - 1]
        col = max(j for j, v in enumerate(row, start=1) if v < value)
        path.append((i, col))
        value = row[col - 1]
    return path


def reverse_insert(p: IncreasingTableau, cell: Cell, alpha: int) -> ReverseInsertResult:
    """
    Reverse row insertion from an outer cell.

    Args:
        p: Increasing tableau.
        cell: Outer cell (r, c) of p where the insertion starts.
        alpha: 1 removes the cell, 0 keeps the shape.

    Returns:
        ReverseInsertResult with the new tableau, the ejected number and
        the per-row case trace (bottom row first).

    Raises:
        DomainError: If cell is not an outer cell or alpha is not 0/1.
    """
    r, c = cell
    if alpha not in (0, 1):
        raise DomainError("alpha must be 0 or 1", details={"alpha": alpha})
    if not p.is_outer_cell(r, c):
        raise DomainError(f"({r},{c}) is not an outer cell", details={"shape": p.shape.parts})

    path = bumping_path(p, r, c)
    column_of = {row: col for row, col in path}
    value_of = {row: p.entry(row, col) for row, col in path}
    rows: List[List[int]] = [list(row) for row in p.rows]
    trace: List[RowCase] = []

    infinity: Optional[int] = None  # the α = 0 sentinel sits above every value
    if alpha == 1:
        rows[r - 1].pop()
        if not rows[r - 1]:
            rows.pop()
        trace.append(RowCase.INIT_REMOVE)
        m_next: Optional[int] = value_of[r]
        alpha_next = 1
        i = r - 1
    else:
        m_next = infinity
        alpha_next = 0
        i = r

    while i >= 1:
        m_i = value_of[i]
        row_values = set(rows[i - 1])
        if m_i + 1 in row_values:
            trace.append(RowCase.D)
            alpha_i = alpha_next
        elif alpha_next == 1 and m_next is not None and m_next not in row_values:
            rows[i - 1][column_of[i] - 1] = m_next
            trace.append(RowCase.DR)
            alpha_i = 1
        else:
            below = rows[i:]
            candidates = [
                x
                for x in (below[0] if below else ())
                if m_i < x and (m_next is None or x < m_next) and _ejectable(below, x)
            ]
            if candidates:
                rows[i - 1][column_of[i] - 1] = max(candidates)
                trace.append(RowCase.IR)
                alpha_i = 1
            else:
                trace.append(RowCase.NR)
                alpha_i = 0
        m_next, alpha_next = m_i, alpha_i
        i -= 1

    return ReverseInsertResult(IncreasingTableau(rows), value_of[1], tuple(trace))


def psi(pair: TableauPair) -> CompatiblePair:
    """
    Ψ(P, Q): repeatedly take the smallest entry q of Q at its rightmost
    cell, remove it, reverse insert P from that cell, and record (m, q).
    """
    p, q = pair.p, pair.q
    a: List[int] = []
    i: List[int] = []
    while not q.is_empty():
        q, cell, alpha, value = rsvt_remove_min(q)
        result = reverse_insert(p, cell, alpha)
        p = result.p_prime
        a.append(result.m)
        i.append(value)
    return CompatiblePair(Word(tuple(a)), Word(tuple(i)))


def _row_options(
    orig: Sequence[int],
    values: Sequence[int],
    above: Optional[Sequence[int]],
) -> List[Tuple[List[int], int, int, bool]]:
    """(row, column, path value, is new cell) for one row of a preimage."""
    options: List[Tuple[List[int], int, int, bool]] = []
    for col, v in enumerate(orig, start=1):
        options.append((list(orig), col, v, False))
    for col in range(1, len(orig) + 1):
        left = orig[col - 2] if col > 1 else 0
        right = orig[col] if col < len(orig) else None
        for v in values:
            if v == orig[col - 1] or v <= left or (right is not None and v >= right):
                continue
            if above is not None and (col > len(above) or above[col - 1] >= v):
                continue
            row = list(orig)
            row[col - 1] = v
            options.append((row, col, v, False))
    col = len(orig) + 1
    if above is None or len(above) >= col:
        for v in values:
            if orig and v <= orig[-1]:
                continue
            if above is not None and above[col - 1] >= v:
                continue
            options.append((list(orig) + [v], col, v, True))
    return options


def forward_insert(
    p_prime: IncreasingTableau,
    m: int,
    alphabet: Optional[FinSet] = None,
) -> InsertionPreimage:
    """
    The unique (P, cell, α) with reverse_insert(P, cell, α) = (P', m).

    P agrees with P' outside one cell per row of a bumping path (plus the new
    corner when α = 1), and each changed value comes from entries(P') ∪ {m}.
    Candidate paths are rebuilt top-down and every complete candidate is
    replayed through reverse_insert.

    Raises:
        NoPreimageError: If no candidate reverse-inserts to (P', m).
        NonUniquePreimageError: If several candidates do.
    """
    pool = set(p_prime.entries()) | {m}
    if alphabet is not None:
        pool &= set(alphabet)
    values = sorted(pool)
    target = [list(row) for row in p_prime.rows]
    height = len(target)
    found: Set[InsertionPreimage] = set()

    def check(rows: List[List[int]], cell: Cell, alpha: int) -> None:
        try:
            candidate = IncreasingTableau(rows)
            result = reverse_insert(candidate, cell, alpha)
        except DomainError:
            return
        if result.m == m and result.p_prime == p_prime:
            found.add(InsertionPreimage(candidate, cell, alpha))

    def descend(i: int, built: List[List[int]], prev_col: int, prev_val: int) -> None:
        orig = target[i - 1] if i <= height else []
        above = built[-1] if built else None
        for row, col, value, is_new in _row_options(orig, values, above):
            if i == 1:
                if value != m:
                    continue
            else:
                # the path one row up must land exactly on prev_col
                if value <= prev_val:
                    continue
                if prev_col < len(above) and above[prev_col] < value:  # type: ignore[arg-type]
                    continue
            rows = built + [row]
            if is_new:
                check(rows + target[i:], (i, col), 1)
                continue
            below_len = len(target[i]) if i < height else 0
            if col == len(row) and below_len < col:
                check(rows + target[i:], (i, col), 0)
            if i < height + 1:
                descend(i + 1, rows, col, value)

    if alphabet is None or m in pool:
        descend(1, [], 0, 0)

    if not found:
        raise NoPreimageError(
            "no tableau reverse-inserts to the given output",
            details={"p_prime": [list(r) for r in p_prime.rows], "m": m},
        )
    if len(found) > 1:
        raise NonUniquePreimageError(
            "several tableaux reverse-insert to the given output",
            details={"count": len(found), "m": m},
        )
    return found.pop()


def psi_inverse(pair: CompatiblePair) -> TableauPair:
    """Rebuild (P, Q) from (a, i), inserting the letters right to left."""
    alphabet = FinSet(pair.a.letters)
    p = IncreasingTableau()
    cells: Dict[Cell, List[int]] = {}
    for letter, index in zip(reversed(pair.a.letters), reversed(pair.i.letters)):
        p, cell, alpha = forward_insert(p, letter, alphabet)
        if alpha == 1:
            if cell in cells:
                raise DomainError("insertion reported an existing cell as new", details={"cell": cell})
            cells[cell] = [index]
        else:
            if cell not in cells:
                raise DomainError("insertion reported a missing cell", details={"cell": cell})
            cells[cell].append(index)
    height = max((r for r, _ in cells), default=0)
    q_rows = [
        [tuple(cells[(r, c)]) for c in range(1, 1 + sum(1 for rr, _ in cells if rr == r))]
        for r in range(1, height + 1)
    ]
    return TableauPair(p, RSVT(q_rows))
