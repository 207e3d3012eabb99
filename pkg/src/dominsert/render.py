"""ASCII rendering of domino tableaux.

Cells are drawn on a character canvas with shared borders; the wall between
the two cells of a domino is omitted, which reproduces the usual picture of
a tiling.  Core cells are hatched.
"""

from __future__ import annotations

CELL_W = 4
CELL_H = 2


def render_tableau(tab):
    lam = tab.shape()
    if not lam:
        return "(empty shape)"
    rows = len(lam)
    cols = lam[0]
    width = cols * CELL_W + 1
    height = rows * CELL_H + 1
    canvas = [[" "] * width for _ in range(height)]

    owner = {}
    for value, dom in tab.entries:
        for cell in dom.cells():
            owner[cell] = (value, dom)
    core_cells = set()
    for r, length in enumerate(tab.core, start=1):
        for c in range(1, length + 1):
            core_cells.add((r, c))

    def same_domino(cell_a, cell_b):
        return cell_a in owner and cell_b in owner and owner[cell_a][1] is owner[cell_b][1]

    def in_shape(cell):
        r, c = cell
        return 1 <= r <= rows and 1 <= c <= (lam[r - 1] if r <= rows else 0)

    for r in range(1, rows + 1):
        for c in range(1, lam[r - 1] + 1):
            top = (r - 1) * CELL_H
            left = (c - 1) * CELL_W
            # horizontal walls
            if not same_domino((r, c), (r - 1, c)):
                for x in range(left, left + CELL_W + 1):
                    canvas[top][x] = "-"
            if not same_domino((r, c), (r + 1, c)) or not in_shape((r + 1, c)):
                for x in range(left, left + CELL_W + 1):
                    canvas[top + CELL_H][x] = "-"
            # vertical walls
            if not same_domino((r, c), (r, c - 1)):
                for y in range(top, top + CELL_H + 1):
                    canvas[y][left] = "|"
            if not same_domino((r, c), (r, c + 1)) or not in_shape((r, c + 1)):
                for y in range(top, top + CELL_H + 1):
                    canvas[y][left + CELL_W] = "|"

    # corners
    for r in range(1, rows + 1):
        for c in range(1, lam[r - 1] + 1):
            top = (r - 1) * CELL_H
            left = (c - 1) * CELL_W
            for y in (top, top + CELL_H):
                for x in (left, left + CELL_W):
                    if canvas[y][x] in "-|":
                        canvas[y][x] = "+"

    # contents: value in the anchor cell of each domino, hatching for the core
    for (r, c) in core_cells:
        y = (r - 1) * CELL_H + 1
        x = (c - 1) * CELL_W + 1
        canvas[y][x : x + CELL_W - 1] = list(":::")
    for value, dom in tab.entries:
        r, c = dom.row, dom.col
        y = (r - 1) * CELL_H + 1
        x = (c - 1) * CELL_W + 1
        text = str(value).rjust(2)
        canvas[y][x : x + len(text)] = list(text)

    return "\n".join("".join(line).rstrip() for line in canvas)
