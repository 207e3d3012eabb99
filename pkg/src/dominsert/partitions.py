"""Integer partitions, dominoes on their diagrams, 2-cores and 2-quotients.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty shape.  Cells are 1-indexed ``(row, col)`` pairs with rows
counted top-down, so the cell diagonally outwards from ``(k, l)`` is
``(k + 1, l + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

HORIZONTAL = "h"
VERTICAL = "v"


@dataclass(frozen=True, order=True)
class DominoShape:
    """Placement of a domino: topmost-leftmost cell plus orientation."""

    row: int
    col: int
    orient: str

    def __post_init__(self):
        if self.row < 1 or self.col < 1 or self.orient not in (HORIZONTAL, VERTICAL):
            raise ValueError(f"bad domino placement {self}")

    def cells(self):
        if self.orient == HORIZONTAL:
            return ((self.row, self.col), (self.row, self.col + 1))
        return ((self.row, self.col), (self.row + 1, self.col))

    @property
    def min_col(self):
        return self.col

    @property
    def max_col(self):
        return self.col + 1 if self.orient == HORIZONTAL else self.col

    @property
    def min_row(self):
        return self.row

    @property
    def max_row(self):
        return self.row + 1 if self.orient == VERTICAL else self.row

    def transposed(self):
        flip = VERTICAL if self.orient == HORIZONTAL else HORIZONTAL
        return DominoShape(self.col, self.row, flip)

    def to_json(self):
        return {"row": self.row, "col": self.col, "orient": self.orient}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["row"]), int(data["col"]), data["orient"])


def domino_of_cells(cell_a, cell_b):
    """Domino covering two edge-adjacent cells."""
    (r1, c1), (r2, c2) = sorted((cell_a, cell_b))
    if (r1, c1 + 1) == (r2, c2):
        return DominoShape(r1, c1, HORIZONTAL)
    if (r1 + 1, c1) == (r2, c2):
        return DominoShape(r1, c1, VERTICAL)
    raise ValueError(f"cells {cell_a} and {cell_b} are not adjacent")


def as_partition(parts):
    """Validate and normalise a partition (trailing zeros are dropped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for earlier, later in zip(parts, parts[1:]):
        if earlier < later:
            raise ValueError(f"{parts} is not weakly decreasing")
    if parts and parts[-1] < 0:
        raise ValueError(f"{parts} has negative parts")
    return parts


def is_partition(parts):
    try:
        as_partition(parts)
    except ValueError:
        return False
    return True


def size(lam):
    return sum(lam)


def part(lam, row):
    """Row length with zero padding, 1-indexed."""
    return lam[row - 1] if 1 <= row <= len(lam) else 0


def col_height(lam, col):
    return sum(1 for p in lam if p >= col)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(col_height(lam, c) for c in range(1, lam[0] + 1))


def cells(lam):
    for r, length in enumerate(lam, start=1):
        for c in range(1, length + 1):
            yield (r, c)


def contains(outer, inner):
    return all(part(outer, r) >= p for r, p in enumerate(inner, start=1))


def staircase(r):
    """The staircase (r, r-1, ..., 1); every 2-core has this form."""
    return tuple(range(r, 0, -1))


def staircase_order(lam):
    """r when lam is a staircase, otherwise None."""
    r = len(lam)
    return r if lam == staircase(r) else None


def add_domino(lam, dom):
    rows = list(lam)
    for r, c in sorted(dom.cells()):
        while len(rows) < r:
            rows.append(0)
        if rows[r - 1] != c - 1:
            raise ValueError(f"cannot add {dom} to {lam}")
        rows[r - 1] = c
    return as_partition(rows)


def remove_domino(lam, dom):
    rows = list(lam)
    for r, c in sorted(dom.cells(), reverse=True):
        if part(lam, r) < c:
            raise ValueError(f"{dom} not inside {lam}")
        if rows[r - 1] != c:
            raise ValueError(f"cannot remove {dom} from {lam}")
        rows[r - 1] = c - 1
    return as_partition(rows)


def domino_successors(lam):
    """All (mu, placement) with mu obtained from lam by adding one domino."""
    out = []
    rows = len(lam)
    for r in range(1, rows + 2):
        length = part(lam, r)
        # horizontal at the end of row r
        if r == 1 or part(lam, r - 1) >= length + 2:
            dom = DominoShape(r, length + 1, HORIZONTAL)
            out.append((add_domino(lam, dom), dom))
        # vertical in rows r, r+1
        if part(lam, r + 1) == length and (r == 1 or part(lam, r - 1) >= length + 1):
            dom = DominoShape(r, length + 1, VERTICAL)
            out.append((add_domino(lam, dom), dom))
    out.sort(key=lambda md: (md[1].row, md[1].col, md[1].orient))
    return out


def domino_predecessors(lam):
    """All (mu, placement) with lam obtained from mu by adding one domino."""
    out = []
    for r in range(1, len(lam) + 1):
        length = lam[r - 1]
        if length >= 2 and part(lam, r + 1) <= length - 2:
            dom = DominoShape(r, length - 1, HORIZONTAL)
            out.append((remove_domino(lam, dom), dom))
        if part(lam, r + 1) == length and part(lam, r + 2) <= length - 1:
            dom = DominoShape(r, length, VERTICAL)
            out.append((remove_domino(lam, dom), dom))
    out.sort(key=lambda md: (md[1].row, md[1].col, md[1].orient))
    return out


def two_core(lam):
    """Strip rim dominoes until none remain; the terminal shape is a staircase.

    The result does not depend on the removal order (checked exhaustively in
    the test suite), so the first available removal is taken at every step.
    """
    lam = as_partition(lam)
    while True:
        preds = domino_predecessors(lam)
        if not preds:
            return lam
        lam = preds[0][0]


def two_quotient(lam):
    """2-quotient via beta-numbers on a 2-abacus with an even bead count.

    Component 0 collects the beads of even position, component 1 the odd
    ones; this fixed convention makes ``size(lam) == size(two_core(lam)) +
    2*(size(q0) + size(q1))`` hold with a stable component order.
    """
    lam = as_partition(lam)
    beads = len(lam) + (len(lam) % 2)
    beta = [part(lam, i) + (beads - i) for i in range(1, beads + 1)]
    evens = sorted((b // 2 for b in beta if b % 2 == 0), reverse=True)
    odds = sorted((b // 2 for b in beta if b % 2 == 1), reverse=True)

    def from_positions(vals):
        k = len(vals)
        return as_partition(v - (k - 1 - i) for i, v in enumerate(vals))

    return from_positions(evens), from_positions(odds)


def odd_rows(lam):
    return sum(1 for p in lam if p % 2 == 1)


def d_stat(lam):
    """Sum of floor(lam_{2i} / 2) over the even-indexed rows."""
    return sum(lam[i] // 2 for i in range(1, len(lam), 2))


def v_stat(lam):
    return sum(p // 2 for p in lam)


@dataclass(frozen=True)
class ShapeStats:
    o: int
    o_conj: int
    d: int
    v: int


def shape_stats(lam):
    lam = as_partition(lam)
    return ShapeStats(odd_rows(lam), odd_rows(conjugate(lam)), d_stat(lam), v_stat(lam))


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """All partitions of n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


@lru_cache(maxsize=None)
def enumerate_with_core(r, n):
    """All shapes with 2-core staircase(r) and n dominoes, lexicographically.

    Built as the n-fold domino-successor closure of the staircase; the test
    suite checks this against filtering all partitions of the right size
    through two_core.
    """
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    current = {staircase(r)}
    for _ in range(n):
        current = {mu for lam in current for mu, _ in domino_successors(lam)}
    return tuple(sorted(current))


def skew_cells(outer, inner):
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    out = []
    for r in range(1, len(outer) + 1):
        for c in range(part(inner, r) + 1, part(outer, r) + 1):
            out.append((r, c))
    return out


def skew_domino(outer, inner):
    """The skew outer/inner as a domino placement, or None if not a domino."""
    diff = skew_cells(outer, inner)
    if len(diff) != 2:
        return None
    try:
        return domino_of_cells(*diff)
    except ValueError:
        return None


def add_two_to_row(lam, row):
    """Append two cells to the given row, validating the partition shape."""
    length = part(lam, row)
    if row > 1 and part(lam, row - 1) < length + 2:
        raise ValueError(f"cannot add two cells to row {row} of {lam}")
    rows = list(lam) + [0] * max(0, row - len(lam))
    rows[row - 1] += 2
    return as_partition(rows)


def add_two_to_col(lam, col):
    """Append two cells to the given column, validating the partition shape."""
    return conjugate(add_two_to_row(conjugate(lam), col))


def partition_str(lam):
    return "(" + ",".join(map(str, lam)) + ")"
