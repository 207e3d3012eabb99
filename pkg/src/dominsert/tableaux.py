"""Standard and semistandard domino tableaux and their statistics.

A tableau is a staircase core plus value-labelled domino placements tiling
the skew shape.  Spin is half the number of vertical dominoes; to keep the
arithmetic exact it is usually handled through the integer vertical count
(the exponent of ``s``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    DominoShape,
    as_partition,
    add_domino,
    cells as cells_of,
    conjugate,
    contains,
    domino_of_cells,
    domino_predecessors,
    domino_successors,
    partition_str,
    size,
    skew_cells,
    staircase,
    staircase_order,
    two_core,
)
from .polynomials import MPoly, SPIN


@dataclass(frozen=True)
class DominoTableau:
    core: tuple
    entries: tuple  # (value, DominoShape) sorted by (value, row, col)

    def __post_init__(self):
        if staircase_order(self.core) is None:
            raise ValueError(f"core {self.core} is not a staircase")
        ordered = tuple(sorted(self.entries, key=lambda e: (e[0], e[1].row, e[1].col)))
        object.__setattr__(self, "entries", ordered)
        seen = set(cells_of(self.core))
        for _, dom in ordered:
            for cell in dom.cells():
                if cell in seen:
                    raise ValueError(f"overlapping cell {cell}")
                seen.add(cell)
        self.shape()  # raises when the cells do not form a partition

    def shape(self):
        rows = {}
        for r, c in self.all_cells():
            rows[r] = rows.get(r, 0) + 1
        lengths = [rows.get(r, 0) for r in range(1, len(rows) + 1)]
        lam = as_partition(lengths)
        if set(cells_of(lam)) != set(self.all_cells()):
            raise ValueError("cells do not tile a partition shape")
        return lam

    def all_cells(self):
        out = list(cells_of(self.core))
        for _, dom in self.entries:
            out.extend(dom.cells())
        return out

    def values(self):
        return tuple(value for value, _ in self.entries)

    def weight(self):
        values = self.values()
        if not values:
            return ()
        counts = [0] * max(values)
        for value in values:
            counts[value - 1] += 1
        return tuple(counts)

    def __len__(self):
        return len(self.entries)

    def vertical_count(self):
        return sum(1 for _, dom in self.entries if dom.orient == "v")

    def spin(self):
        return Fraction(self.vertical_count(), 2)

    def odd_vertical(self):
        return sum(1 for _, dom in self.entries if dom.orient == "v" and dom.col % 2 == 1)

    def even_vertical(self):
        return sum(1 for _, dom in self.entries if dom.orient == "v" and dom.col % 2 == 0)

    def restricted(self, max_value):
        return DominoTableau(self.core, tuple(e for e in self.entries if e[0] <= max_value))

    def with_entry(self, value, dom):
        return DominoTableau(self.core, self.entries + ((value, dom),))

    def cell_values(self):
        out = {}
        for value, dom in self.entries:
            for cell in dom.cells():
                out[cell] = value
        return out

    def value_classes(self):
        classes = {}
        for value, dom in self.entries:
            classes.setdefault(value, []).append(dom)
        return classes

    def is_standard(self):
        if sorted(self.values()) != list(range(1, len(self.entries) + 1)):
            return False
        return self.is_semistandard()

    def is_semistandard(self):
        """Prefix shapes are partitions and each value class is a horizontal
        strip of dominoes (pairwise disjoint, increasing column ranges)."""
        shape_so_far = self.core
        for value, dominoes in sorted(self.value_classes().items()):
            previous_max = 0
            for dom in sorted(dominoes, key=lambda d: d.col):
                if dom.min_col <= previous_max:
                    return False
                previous_max = dom.max_col
                try:
                    shape_so_far = add_domino(shape_so_far, dom)
                except ValueError:
                    return False
        return True

    def is_column_semistandard(self):
        return self.conjugated().is_semistandard()

    def chain(self):
        """Shape chain of a standard tableau, from the core up."""
        if not self.is_standard():
            raise ValueError("chain is defined for standard tableaux")
        shapes = [self.core]
        for _, dom in self.entries:
            shapes.append(add_domino(shapes[-1], dom))
        return tuple(shapes)

    def standardized(self, columns=None):
        """Relabel value classes 1..n, left to right within each class.

        ``columns=True`` orders classes top to bottom instead; that is the
        matching convention for column-semistandard tableaux.  By default the
        direction is inferred, preferring rows.
        """
        if columns is None:
            if self.is_semistandard():
                columns = False
            elif self.is_column_semistandard():
                columns = True
            else:
                raise ValueError("tableau is not semistandard in either direction")
        key = (lambda dom: dom.row) if columns else (lambda dom: dom.col)
        entries = []
        next_value = 1
        for _, dominoes in sorted(self.value_classes().items()):
            for dom in sorted(dominoes, key=key):
                entries.append((next_value, dom))
                next_value += 1
        return DominoTableau(self.core, tuple(entries))

    def conjugated(self):
        entries = tuple((value, dom.transposed()) for value, dom in self.entries)
        return DominoTableau(self.core, entries)

    def to_json(self):
        return {
            "core": list(self.core),
            "dominoes": [
                {"value": value, **dom.to_json()} for value, dom in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data):
        entries = tuple(
            (int(d["value"]), DominoShape(int(d["row"]), int(d["col"]), d["orient"]))
            for d in data["dominoes"]
        )
        return cls(as_partition(data["core"]), entries)

    def __str__(self):
        body = ", ".join(f"{value}:{dom.row},{dom.col},{dom.orient}" for value, dom in self.entries)
        return f"[core {partition_str(self.core)} | {body}]"


def empty_tableau(core_order):
    return DominoTableau(staircase(core_order), ())


def tableau_from_chain(shapes, values=None):
    """Build a tableau from a chain of shapes differing by dominoes."""
    shapes = [as_partition(s) for s in shapes]
    values = values or range(1, len(shapes))
    entries = []
    for value, (inner, outer) in zip(values, zip(shapes, shapes[1:])):
        if inner == outer:
            raise ValueError("chain stalls")
        diff = skew_cells(outer, inner)
        if len(diff) != 2:
            raise ValueError(f"{outer}/{inner} is not a domino")
        entries.append((value, domino_of_cells(*diff)))
    return DominoTableau(shapes[0], tuple(entries))


def enumerate_standard(lam):
    """All standard domino tableaux of the given shape."""
    lam = as_partition(lam)
    core = two_core(lam)
    results = []

    def descend(shape, entries):
        if shape == core:
            results.append(DominoTableau(core, tuple(entries)))
            return
        n = (size(shape) - size(core)) // 2
        for mu, dom in domino_predecessors(shape):
            descend(mu, entries + [(n, dom)])

    descend(lam, [])
    results.sort(key=lambda t: t.entries)
    return results


def _strip_extensions(base, limit):
    """All horizontal domino strips addable to base inside limit.

    Yields (dominoes, shape); dominoes are listed left to right, each one
    strictly to the right of the previous.
    """
    found = [((), base)]

    def grow(shape, strip, min_col):
        for mu, dom in domino_successors(shape):
            if dom.min_col > min_col and contains(limit, mu):
                extended = strip + (dom,)
                found.append((extended, mu))
                grow(mu, extended, dom.max_col)

    grow(base, (), 0)
    return found


def enumerate_semistandard(lam, max_value):
    """All semistandard domino tableaux with entries at most max_value."""
    lam = as_partition(lam)
    core = two_core(lam)
    results = []

    def extend(shape, value, entries):
        if value > max_value:
            if shape == lam:
                results.append(DominoTableau(core, tuple(entries)))
            return
        for strip, new_shape in _strip_extensions(shape, lam):
            extend(new_shape, value + 1, entries + [(value, dom) for dom in strip])

    extend(core, 1, [])
    results.sort(key=lambda t: t.entries)
    return results


def enumerate_column_semistandard(lam, max_value):
    lam = as_partition(lam)
    return sorted(
        (t.conjugated() for t in enumerate_semistandard(conjugate(lam), max_value)),
        key=lambda t: t.entries,
    )


def spin_poly(lam):
    """Sum of q^spin over the standard tableaux of the shape, in s = q^(1/2)."""
    poly = MPoly.zero(SPIN)
    for tab in enumerate_standard(lam):
        poly = poly + MPoly.var("s", SPIN, power=tab.vertical_count())
    return poly


def max_spin(lam):
    """Largest spin over the standard tableaux of the shape."""
    tabs = enumerate_standard(lam)
    return max(tab.spin() for tab in tabs)


def cospin(tab):
    value = max_spin(tab.shape()) - tab.spin()
    if value.denominator != 1:
        raise ValueError("cospin must be an integer")
    return int(value)


def max_odd_vertical(lam):
    return max(t.odd_vertical() for t in enumerate_standard(lam))


def max_even_vertical(lam):
    return max(t.even_vertical() for t in enumerate_standard(lam))


def associated_young_tableau(tab):
    """Young tableau obtained by splitting each domino into consecutive values.

    With an empty core, domino i receives 2i-1 and 2i.  With core (1), the
    core cell receives 1 and domino i receives 2i and 2i+1.  The earlier cell
    of a domino (row, then column order) gets the smaller value.
    """
    core_order = staircase_order(tab.core)
    if core_order not in (0, 1):
        raise ValueError("associated Young tableau needs a core of at most one box")
    if not tab.is_standard():
        raise ValueError("associated Young tableau is defined for standard tableaux")
    grid = {}
    if core_order == 1:
        grid[(1, 1)] = 1
    for value, dom in tab.entries:
        first, second = sorted(dom.cells())
        low = 2 * value - 1 + core_order
        grid[first] = low
        grid[second] = low + 1
    lam = tab.shape()
    tableau = tuple(
        tuple(grid[(r, c)] for c in range(1, length + 1))
        for r, length in enumerate(lam, start=1)
    )
    for r, row in enumerate(tableau):
        for c, value in enumerate(row):
            if c + 1 < len(row) and row[c + 1] < value:
                raise ValueError("split tableau is not standard")
            if r + 1 < len(tableau) and c < len(tableau[r + 1]) and tableau[r + 1][c] < value:
                raise ValueError("split tableau is not standard")
    return tableau


def tableau_sign(tab):
    """Sign of the reading word of the associated Young tableau."""
    from .young import syt_sign

    return syt_sign(associated_young_tableau(tab))
