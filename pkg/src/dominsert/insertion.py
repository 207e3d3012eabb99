"""Domino insertion: bumping, growth rules, and the derived correspondences.

The growth-rule formulation is taken as the authoritative semantics; the
bumping procedure is implemented independently and the two are compared
square-for-square in the test suite.  Both directions share the same local
rules, so a growth diagram can be rebuilt from its boundary chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    DominoShape,
    add_domino,
    add_two_to_col,
    add_two_to_row,
    as_partition,
    col_height,
    domino_of_cells,
    part,
    partition_str,
    skew_domino,
    staircase,
    staircase_order,
)
from .tableaux import DominoTableau, empty_tableau, tableau_from_chain
from .words import (
    COLORED,
    DUAL,
    Biletter,
    Letter,
    biword,
    invert_colored,
    invert_dual,
    is_signed_permutation,
    signed_permutation,
    standardize_top,
    with_kind,
)


# ---------------------------------------------------------------------------
# bumping


def insert_letter(tab, letter):
    """Insert one letter: a horizontal seed in row 1 for an unbarred letter,
    a vertical seed in column 1 for a barred one, then replay the bumps.

    Each displaced domino is compared against the current shape: disjoint
    dominoes stay put, a one-cell overlap slides the free cell to the
    diagonal neighbour, and a fully covered domino bumps to the next row
    (horizontal) or column (vertical).
    """
    value = letter.value
    if value in tab.values():
        raise ValueError(f"value {value} already present")
    lower = [e for e in tab.entries if e[0] < value]
    upper = [e for e in tab.entries if e[0] > value]

    placed = list(lower)
    rows = list(DominoTableau(tab.core, tuple(lower)).shape())

    def occupied(cell):
        r, c = cell
        return r <= len(rows) and c <= rows[r - 1]

    def place(dom):
        for r, c in sorted(dom.cells()):
            while len(rows) < r:
                rows.append(0)
            if rows[r - 1] != c - 1:
                raise ValueError(f"insertion produced a non-partition at {dom}")
            rows[r - 1] = c
        if not all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError("insertion produced a non-partition")

    if letter.barred:
        seed = DominoShape(len(rows) + 1, 1, "v")
    else:
        seed = DominoShape(1, (rows[0] if rows else 0) + 1, "h")
    place(seed)
    placed.append((value, seed))

    for other_value, dom in upper:
        inside = [cell for cell in dom.cells() if occupied(cell)]
        if len(inside) == 0:
            new = dom
        elif len(inside) == 1:
            (k, l) = inside[0]
            free = next(cell for cell in dom.cells() if cell != (k, l))
            new = domino_of_cells(free, (k + 1, l + 1))
        elif dom.orient == "h":
            target_row = dom.row + 1
            new = DominoShape(target_row, part(as_partition(rows), target_row) + 1, "h")
        else:
            target_col = dom.col + 1
            new = DominoShape(col_height(as_partition(rows), target_col) + 1, target_col, "v")
        place(new)
        placed.append((other_value, new))

    return DominoTableau(tab.core, tuple(placed))


@dataclass(frozen=True)
class InsertionResult:
    p: DominoTableau
    q: DominoTableau
    frames: tuple  # insertion tableau after each step

    @property
    def shape(self):
        return self.p.shape()


def insert_word(letters, core=0):
    """Insert a signed permutation; the recording tableau tracks the shapes."""
    letters = tuple(letters)
    if not is_signed_permutation(letters):
        raise ValueError("insert_word expects a signed permutation")
    tab = empty_tableau(core)
    frames = []
    shapes = [tab.shape()]
    for letter in letters:
        tab = insert_letter(tab, letter)
        frames.append(tab)
        shapes.append(tab.shape())
    q = tableau_from_chain(shapes)
    return InsertionResult(tab, q, tuple(frames))


# ---------------------------------------------------------------------------
# growth rules


def word_matrix(letters):
    """Signed permutation matrix: row = position, column = letter value."""
    letters = tuple(letters)
    if not is_signed_permutation(letters):
        raise ValueError("not a signed permutation")
    n = len(letters)
    rows = []
    for letter in letters:
        row = [0] * n
        row[letter.value - 1] = -1 if letter.barred else 1
        rows.append(tuple(row))
    return tuple(rows)


def matrix_word(matrix):
    validate_matrix(matrix)
    letters = []
    for row in matrix:
        for j, entry in enumerate(row, start=1):
            if entry:
                letters.append(Letter(j, entry < 0))
    return tuple(letters)


def validate_matrix(matrix):
    n = len(matrix)
    for row in matrix:
        if len(row) != n or any(entry not in (-1, 0, 1) for entry in row):
            raise ValueError("matrix entries must be 0 or +-1, in a square grid")
        if sum(1 for entry in row if entry) != 1:
            raise ValueError("each row needs exactly one nonzero entry")
    for j in range(n):
        if sum(1 for row in matrix if row[j]) != 1:
            raise ValueError("each column needs exactly one nonzero entry")


def local_rule(lam, mu, nu, entry):
    """Forward local rule: the fourth corner of a square from the other three."""
    if entry == 1:
        if not (lam == mu == nu):
            raise ValueError("a +1 square needs three equal corners")
        return add_two_to_row(lam, 1)
    if entry == -1:
        if not (lam == mu == nu):
            raise ValueError("a -1 square needs three equal corners")
        return add_two_to_col(lam, 1)
    if lam == mu:
        return nu
    if lam == nu:
        return mu
    gamma = skew_domino(nu, lam)
    gamma2 = skew_domino(mu, lam)
    if gamma is None or gamma2 is None:
        raise ValueError("adjacent shapes must differ by single dominoes")
    shared = set(gamma.cells()) & set(gamma2.cells())
    if not shared:
        out = lam
        for cell_pair in (gamma, gamma2):
            out = add_domino(out, cell_pair)
        return out
    if len(shared) == 1:
        ((k, l),) = shared
        cell_set = set(gamma.cells()) | set(gamma2.cells()) | {(k + 1, l + 1)}
        out = list(lam)
        for r, c in sorted(cell_set):
            while len(out) < r:
                out.append(0)
            if out[r - 1] != c - 1:
                raise ValueError("one-cell overlap does not extend the shape")
            out[r - 1] = c
        return as_partition(out)
    # gamma == gamma2: bump below (horizontal) or to the right (vertical)
    grown = add_domino(lam, gamma)
    if gamma.orient == "h":
        return add_two_to_row(grown, gamma.row + 1)
    return add_two_to_col(grown, gamma.col + 1)


def local_rule_reverse(rho, mu, nu):
    """Recover (lam, entry) from the other three corners of a square."""
    if mu == nu:
        if rho == mu:
            return mu, 0
        dom = skew_domino(rho, mu)
        if dom is None:
            raise ValueError("square does not match any local rule")
        if dom.orient == "h" and dom.row == 1:
            lam, entry = mu, 1
        elif dom.orient == "v" and dom.col == 1:
            lam, entry = mu, -1
        elif dom.orient == "h":
            source_row = dom.row - 1
            lam = as_partition(
                tuple(p - 2 if r == source_row else p for r, p in enumerate(mu, start=1))
            )
            entry = 0
        else:
            source_col = dom.col - 1
            height = col_height(mu, source_col)
            if height < 2:
                raise ValueError("square does not match any local rule")
            rows = list(mu)
            rows[height - 1] -= 1
            rows[height - 2] -= 1
            lam = as_partition(rows)
            entry = 0
    else:
        if rho == mu:
            lam, entry = nu, 0
        elif rho == nu:
            lam, entry = mu, 0
        else:
            union_cells = set(cells_list(mu)) | set(cells_list(nu))
            missing = set(cells_list(rho)) - union_cells
            inter = [
                min(part(mu, r), part(nu, r))
                for r in range(1, max(len(mu), len(nu)) + 1)
            ]
            lam = as_partition(inter)
            if missing:
                # rho carries the diagonal cell (k+1, l+1); strip (k, l) from
                # the intersection to recover lam
                if len(missing) != 1:
                    raise ValueError("square does not match any local rule")
                ((k, l),) = missing
                rows = list(lam)
                if k < 2 or l < 2 or k - 1 > len(rows) or rows[k - 2] != l - 1:
                    raise ValueError("square does not match any local rule")
                rows[k - 2] = l - 2
                lam = as_partition(rows)
            entry = 0
    if local_rule(lam, mu, nu, entry) != rho:
        raise ValueError("square does not match any local rule")
    return lam, entry


def cells_list(lam):
    return [(r, c) for r, length in enumerate(lam, start=1) for c in range(1, length + 1)]


@dataclass(frozen=True)
class GrowthDiagram:
    """(n+1) x (n+1) grid of shapes; grid[i][j] holds the shape after the
    first i insertions restricted to values at most j."""

    grid: tuple
    matrix: tuple
    core_order: int

    @property
    def n(self):
        return len(self.matrix)

    def p_chain(self):
        return self.grid[self.n]

    def q_chain(self):
        return tuple(self.grid[i][self.n] for i in range(self.n + 1))

    def p_tableau(self):
        return tableau_from_chain(self.p_chain())

    def q_tableau(self):
        return tableau_from_chain(self.q_chain())

    def spin_ledger_holds(self):
        """Per-square bookkeeping: vertical-domino growth on the two far edges
        matches the two near edges plus 2 exactly on a -1 square."""
        for i in range(self.n):
            for j in range(self.n):
                lam = self.grid[i][j]
                mu = self.grid[i + 1][j]
                nu = self.grid[i][j + 1]
                rho = self.grid[i + 1][j + 1]
                left = _vertical_growth(mu, rho) + _vertical_growth(nu, rho)
                right = (
                    _vertical_growth(lam, mu)
                    + _vertical_growth(lam, nu)
                    + (2 if self.matrix[i][j] == -1 else 0)
                )
                if left != right:
                    return False
        return True

    def to_json(self):
        return {
            "core": self.core_order,
            "matrix": [list(row) for row in self.matrix],
            "grid": [[list(shape) for shape in row] for row in self.grid],
            "p_chain": [list(shape) for shape in self.p_chain()],
            "q_chain": [list(shape) for shape in self.q_chain()],
        }


def _vertical_growth(inner, outer):
    if inner == outer:
        return 0
    dom = skew_domino(outer, inner)
    return 1 if dom.orient == "v" else 0


def growth(matrix_or_word, core=0):
    """Fill the growth diagram of a signed permutation row by row."""
    if matrix_or_word and isinstance(matrix_or_word[0], Letter):
        matrix = word_matrix(matrix_or_word)
    elif matrix_or_word and isinstance(matrix_or_word[0], (tuple, list)):
        matrix = tuple(tuple(row) for row in matrix_or_word)
    else:
        matrix = tuple(matrix_or_word)
    validate_matrix(matrix)
    n = len(matrix)
    base = staircase(core)
    grid = [[base] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            grid[i][j] = local_rule(
                grid[i - 1][j - 1], grid[i][j - 1], grid[i - 1][j], matrix[i - 1][j - 1]
            )
    return GrowthDiagram(tuple(tuple(row) for row in grid), matrix, core)


def growth_reverse(p_chain, q_chain):
    """Rebuild the matrix whose growth diagram has the given boundary chains."""
    p_chain = tuple(as_partition(s) for s in p_chain)
    q_chain = tuple(as_partition(s) for s in q_chain)
    if len(p_chain) != len(q_chain):
        raise ValueError("chains must have equal length")
    if p_chain[-1] != q_chain[-1]:
        raise ValueError("chains must end at the same shape")
    if p_chain[0] != q_chain[0] or staircase_order(p_chain[0]) is None:
        raise ValueError("chains must start at the same staircase core")
    n = len(p_chain) - 1
    core = p_chain[0]
    grid = [[None] * (n + 1) for _ in range(n + 1)]
    grid[n] = list(p_chain)
    for i in range(n + 1):
        grid[i][n] = q_chain[i]
    matrix = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(n - 1, -1, -1):
            lam, entry = local_rule_reverse(grid[i + 1][j + 1], grid[i + 1][j], grid[i][j + 1])
            grid[i][j] = lam
            matrix[i][j] = entry
    for k in range(n + 1):
        if grid[0][k] != core or grid[k][0] != core:
            raise ValueError("chains do not come from an insertion")
    matrix = tuple(tuple(row) for row in matrix)
    validate_matrix(matrix)
    return matrix


def growth_reverse_word(p_tab, q_tab):
    """The signed permutation inserting to the given standard pair."""
    matrix = growth_reverse(p_tab.chain(), q_tab.chain())
    return matrix_word(matrix)


# ---------------------------------------------------------------------------
# semistandard correspondence


def _recording_with_labels(source, core):
    """Insert the bottom permutation of ``source`` and relabel the recording
    tableau by the top row.

    Valid because equal top labels force strictly increasing neg-values
    below, which makes consecutive recording dominoes strictly left to
    right.
    """
    perm = signed_permutation(source)
    labels = [letter.value for letter in source.top]
    result = insert_word(perm, core)
    relabelled = tuple(
        (labels[value - 1], dom) for value, dom in result.q.entries
    )
    out = DominoTableau(result.q.core, relabelled)
    if not out.is_semistandard():
        raise ValueError("recording tableau failed to de-standardize")
    return out


def biword_insert(word, core=0):
    """Semistandard correspondence: a colored biword to an equal-shape pair.

    P records the insertion of the top-standardized inverse; Q is the P of
    the inverse biword.  The pair carries the bottom and top weights and the
    total color equals the sum of the spins.
    """
    if word.kind != COLORED:
        raise ValueError("biword_insert expects a colored biword")
    p_tab = _recording_with_labels(invert_colored(standardize_top(word)), core)
    q_tab = _recording_with_labels(
        invert_colored(standardize_top(invert_colored(word))), core
    )
    if p_tab.shape() != q_tab.shape():
        raise ValueError("insertion produced unequal shapes")
    return p_tab, q_tab


def _destandardize_value(weight, standard_value):
    total = 0
    for value, count in enumerate(weight, start=1):
        total += count
        if standard_value <= total:
            return value
    raise ValueError("standard value outside the weight")


def biword_reverse(p_tab, q_tab, core=0):
    """Inverse of the semistandard correspondence.

    Rebuilds the signed permutation from the standardized pair, then merges
    the standard labels back into the two weights.  A final round trip
    guards against pairs outside the image.
    """
    if p_tab.shape() != q_tab.shape():
        raise ValueError("shapes must agree")
    lam_weight = p_tab.weight()
    mu_weight = q_tab.weight()
    perm = growth_reverse_word(p_tab.standardized(), q_tab.standardized())
    letters = [
        Biletter(
            Letter(_destandardize_value(mu_weight, position)),
            Letter(_destandardize_value(lam_weight, letter.value), letter.barred),
        )
        for position, letter in enumerate(perm, start=1)
    ]
    word = biword(letters, COLORED)
    if biword_insert(word, core) != (p_tab, q_tab):
        raise ValueError("pair is not in the image of the correspondence")
    return word


# ---------------------------------------------------------------------------
# dual correspondences


def _relabel(tab, labels, column_side=False):
    """Replace standard values through the sorted label list."""
    entries = tuple((labels[value - 1], dom) for value, dom in tab.entries)
    out = DominoTableau(tab.core, entries)
    ok = out.is_column_semistandard() if column_side else out.is_semistandard()
    if not ok:
        raise ValueError("relabelled tableau is invalid")
    return out


def dual_insert_alpha(word, core=0):
    """First dual correspondence, on multiplicity-free dual colored biwords.

    P is semistandard, Q column-semistandard; both come from inserting the
    top-standardized word, with Q's labels merged back into the top weight.
    """
    if word.kind != DUAL:
        raise ValueError("dual_insert_alpha expects a dual colored biword")
    if not word.is_multiplicity_free():
        raise ValueError("dual_insert_alpha needs a multiplicity-free biword")
    as_colored = with_kind(standardize_top(word), COLORED)
    p_tab, q_std = biword_insert(as_colored, core)
    labels = [letter.value for letter in word.top]
    q_tab = _relabel(q_std, labels, column_side=True)
    return p_tab, q_tab


def dual_insert_beta(word, core=0):
    """Second dual correspondence, on multiplicity-free colored biwords.

    P is column-semistandard, Q semistandard; both come from the insertion
    of word^(inv_d ost inv_d), with P's labels merged into the bottom weight.
    """
    if word.kind != COLORED:
        raise ValueError("dual_insert_beta expects a colored biword")
    if not word.is_multiplicity_free():
        raise ValueError("dual_insert_beta needs a multiplicity-free biword")
    rewritten = invert_dual(standardize_top(invert_dual(word)))
    p_std, q_tab = biword_insert(rewritten, core)
    bottom_sorted = sorted(word.bottom, key=lambda letter: letter.key())
    labels = [letter.value for letter in bottom_sorted]
    p_tab = _relabel(p_std, labels, column_side=True)
    return p_tab, q_tab


# ---------------------------------------------------------------------------
# rendering helpers


def growth_str(diagram, cells=False):
    """Figure layout: value index upward, insertion index rightward."""
    n = diagram.n
    if cells:
        return _growth_cells_str(diagram)
    widths = [
        max(len(partition_str(diagram.grid[i][j])) for j in range(n + 1))
        for i in range(n + 1)
    ]
    lines = []
    for j in range(n, -1, -1):
        row = [partition_str(diagram.grid[i][j]).ljust(widths[i]) for i in range(n + 1)]
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines)


def _growth_cells_str(diagram):
    n = diagram.n
    blocks = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            shape = diagram.grid[i][j]
            blocks[i][j] = ["#" * p for p in shape] or ["."]
    col_width = [
        max(max((len(line) for line in blocks[i][j]), default=1) for j in range(n + 1))
        for i in range(n + 1)
    ]
    lines = []
    for j in range(n, -1, -1):
        height = max(len(blocks[i][j]) for i in range(n + 1))
        for h in range(height):
            row = []
            for i in range(n + 1):
                block = blocks[i][j]
                text = block[h] if h < len(block) else ""
                row.append(text.ljust(col_width[i]))
            lines.append("  ".join(row).rstrip())
        lines.append("")
    return "\n".join(lines).rstrip()
