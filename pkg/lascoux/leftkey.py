"""
Left keys

K₋ of an increasing tableau through ◁ chains, the same key through
K-theoretic jeu de taquin anti-rectification, and K₋ of a reverse
semistandard tableau through ⊵ chains. The jdt path is slow and exists to
cross-check the chain formula.
"""

from collections import deque
from typing import Callable, Dict, List, Sequence, Set, Tuple

from lascoux.combi_core import Cell, Key, Partition, Shape
from lascoux.config import get_settings
from lascoux.errors import DomainError, InternalAssertionError
from lascoux.setops import FinSet, triangle_chain, triangle_right_geq
from lascoux.tableaux import BULLET, RSSYT, DottedSkewTableau, IncreasingTableau
from lascoux.utils.logging import get_logger

logger = get_logger(__name__)

CornerChooser = Callable[[Sequence[Cell]], Cell]


def left_key_increasing(p: IncreasingTableau) -> Key:
    """Column i of K₋(P) is P_1 ◁ P_2 ◁ … ◁ P_i."""
    columns = p.column_sets()
    return Key(tuple(triangle_chain(columns[: i + 1]).elements for i in range(len(columns))))


def left_key_rssyt(t: RSSYT) -> Key:
    """Column i of K₋(T) is T_1 ⊵ (T_2 ⊵ (… ⊵ T_i))."""
    columns = t.column_sets()
    result = []
    for i in range(len(columns)):
        acc = columns[i]
        for col in reversed(columns[:i]):
            acc = triangle_right_geq(col, acc)
        result.append(acc.elements)
    return Key(tuple(result))


def _neighbours(cell: Cell) -> Tuple[Cell, ...]:
    r, c = cell
    return ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1))


def _components(cells: Set[Cell]) -> List[List[Cell]]:
    """Connected components under edge adjacency, each sorted."""
    seen: Set[Cell] = set()
    components = []
    for start in sorted(cells):
        if start in seen:
            continue
        seen.add(start)
        queue, component = deque([start]), []
        while queue:
            cell = queue.popleft()
            component.append(cell)
            for nb in _neighbours(cell):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        components.append(sorted(component))
    return components


def _check_alternating_ribbon(component: List[Cell], grid: Dict[Cell, object]) -> None:
    members = set(component)
    rows: Dict[int, int] = {}
    cols: Dict[int, int] = {}
    for r, c in component:
        rows[r] = rows.get(r, 0) + 1
        cols[c] = cols.get(c, 0) + 1
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= members:
            raise DomainError("{m, •} cells contain a 2x2 block", details={"cell": (r, c)})
        for nb in ((r + 1, c), (r, c + 1)):
            if nb in members and grid[nb] == grid[(r, c)]:
                raise DomainError("{m, •} component does not alternate", details={"cells": ((r, c), nb)})
    if max(rows.values()) > 2 or max(cols.values()) > 2:
        raise DomainError("{m, •} component is not a short ribbon", details={"cells": component})


def revkjdt_step(t: DottedSkewTableau) -> DottedSkewTableau:
    """
    One reverse K-jdt move: swap m and • on every alternating ribbon of
    two or more cells, then lower the order parameter to m − 1.

    Raises:
        DomainError: If the order parameter is already 0.
    """
    m = t.order_param
    if m < 1:
        raise DomainError("revkjdt_step needs order parameter m >= 1", details={"m": m})
    grid = t.grid
    active = {cell for cell, v in grid.items() if v == m or v == BULLET}
    for component in _components(active):
        _check_alternating_ribbon(component, grid)
        if len(component) > 1:
            for cell in component:
                grid[cell] = m if grid[cell] == BULLET else BULLET
    return DottedSkewTableau(t.shape, grid, m - 1)


def revkjdt_step_cellwise(t: DottedSkewTableau) -> DottedSkewTableau:
    """The same move as simultaneous replacement of adjacent m/• pairs."""
    m = t.order_param
    if m < 1:
        raise DomainError("revkjdt_step needs order parameter m >= 1", details={"m": m})
    grid = t.grid
    updated = dict(grid)
    for cell, v in grid.items():
        if v == BULLET and any(grid.get(nb) == m for nb in _neighbours(cell)):
            updated[cell] = m
        elif v == m and any(grid.get(nb) == BULLET for nb in _neighbours(cell)):
            updated[cell] = BULLET
    return DottedSkewTableau(t.shape, updated, m - 1)


def leftmost_corner(corners: Sequence[Cell]) -> Cell:
    return min(corners, key=lambda cell: cell[1])


def anti_rectify(
    t: DottedSkewTableau,
    rect_rows: int,
    rect_cols: int,
    choose: CornerChooser = leftmost_corner,
) -> DottedSkewTableau:
    """
    Slide the entries of a skew increasing tableau into the bottom-right of
    the rect_rows × rect_cols rectangle.

    Each round places one • at an addable corner of the outer shape chosen
    by `choose`, sweeps revkjdt_step from the largest entry down to order 0,
    then folds the bullets into the inner shape. Returns a bullet-free
    tableau of rectangular outer shape.
    """
    if t.bullets():
        raise DomainError("anti-rectification starts from a bullet-free tableau")
    outer = [t.shape.outer.row_length(r) for r in range(1, rect_rows + 1)]
    inner = [t.shape.inner.row_length(r) for r in range(1, rect_rows + 1)]
    if len(t.shape.outer) > rect_rows or any(length > rect_cols for length in outer):
        raise DomainError(
            "tableau does not fit the rectangle",
            details={"shape": t.shape.outer.parts, "rows": rect_rows, "cols": rect_cols},
        )
    grid = t.grid
    top = t.max_entry
    cap = get_settings().anti_rectify_cap_factor * max(1, len(grid)) * rect_rows * rect_cols + 1
    rounds = 0
    while True:
        corners = [
            (r, outer[r - 1] + 1)
            for r in range(1, rect_rows + 1)
            if outer[r - 1] < rect_cols and (r == 1 or outer[r - 2] > outer[r - 1])
        ]
        if not corners:
            break
        rounds += 1
        if rounds > cap:
            raise InternalAssertionError(
                "anti-rectification did not terminate",
                details={"rounds": rounds, "rows": rect_rows, "cols": rect_cols},
            )
        corner = choose(corners)
        outer[corner[0] - 1] += 1
        grid[corner] = BULLET
        state = DottedSkewTableau(_shape(outer, inner), grid, top)
        for _ in range(top):
            state = revkjdt_step(state)
        grid = state.grid
        for r, c in state.bullets():
            del grid[(r, c)]
            inner[r - 1] += 1
        # validates that the bullets sat at the left end of their rows
        DottedSkewTableau(_shape(outer, inner), grid, 0)
    logger.bind(rounds=rounds, rows=rect_rows, cols=rect_cols).trace("anti-rectified")
    return DottedSkewTableau(_shape(outer, inner), grid, 0)


def _shape(outer: List[int], inner: List[int]) -> Shape:
    return Shape(Partition(tuple(outer)), Partition(tuple(inner)))


def as_skew(p: IncreasingTableau) -> DottedSkewTableau:
    """View a normal-shape increasing tableau as a bullet-free skew filling."""
    grid = {(r, c): v for r, c, v in p.cells()}
    return DottedSkewTableau(Shape(p.shape), grid, 0)


def anti_rectify_leftmost(p: IncreasingTableau, rect_rows: int, rect_cols: int) -> DottedSkewTableau:
    """Anti-rectify p inside the rectangle, always filling the leftmost addable corner."""
    return anti_rectify(as_skew(p), rect_rows, rect_cols, leftmost_corner)


def leftmost_column(t: DottedSkewTableau) -> FinSet:
    """Entries of the smallest-index column that holds any entry."""
    cols = t.column_sets()
    if not cols:
        return FinSet()
    return cols[min(cols)]


def left_key_via_jdt(p: IncreasingTableau) -> Key:
    """
    K₋(P) by anti-rectification: column j is the leftmost column of the
    anti-rectified first j columns of P in a (rows of P) × j rectangle.
    """
    columns = []
    for j in range(1, p.num_cols + 1):
        first_j = IncreasingTableau([row[:j] for row in p.rows])
        result = anti_rectify_leftmost(first_j, p.num_rows, j)
        columns.append(leftmost_column(result).elements)
    return Key(tuple(columns))
