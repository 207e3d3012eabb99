"""Colored letters, biwords, and their standardization operators.

A letter is a positive integer with an optional bar, written ``3'`` (or
``-3`` on input).  Letters compare by value with the barred copy first, so
``1' < 1 < 2' < 2 < ...``; ``neg`` maps a barred k to -k and an unbarred k
to k.

Three biword kinds share one representation:

* ``colored``  - bars on the bottom row only; ties on equal tops break by
  ascending bottom neg-value.
* ``doubly``   - bars allowed on both rows; ties on equal unbarred tops break
  ascending, on equal barred tops descending.
* ``dual``     - bars on the bottom row only; ties break by descending
  bottom neg-value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

COLORED = "colored"
DOUBLY = "doubly"
DUAL = "dual"


@dataclass(frozen=True, order=False)
class Letter:
    value: int
    barred: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("letter values are positive")

    @property
    def neg(self):
        return -self.value if self.barred else self.value

    def unbarred(self):
        return Letter(self.value, False)

    def with_bar(self, barred):
        return Letter(self.value, barred)

    def key(self):
        # barred copy sorts before the unbarred copy of the same value
        return (self.value, 0 if self.barred else 1)

    def __str__(self):
        return f"{self.value}'" if self.barred else str(self.value)


class Biletter(NamedTuple):
    top: Letter
    bottom: Letter

    def __str__(self):
        return f"{self.top}/{self.bottom}"


def parse_letter(token):
    token = token.strip()
    barred = False
    if token.endswith("'"):
        barred = True
        token = token[:-1]
    elif token.startswith("-"):
        barred = True
        token = token[1:]
    if not token.isdigit():
        raise ValueError(f"cannot parse letter {token!r}")
    return Letter(int(token), barred)


def parse_word(text):
    """Whitespace- or comma-separated letters."""
    tokens = text.replace(",", " ").split()
    letters = []
    for pos, token in enumerate(tokens, start=1):
        try:
            letters.append(parse_letter(token))
        except ValueError as exc:
            raise ValueError(f"token {pos}: {exc}") from None
    return tuple(letters)


def word_str(letters):
    return " ".join(str(letter) for letter in letters)


def _sort_key(kind):
    if kind == COLORED:
        return lambda bl: (bl.top.key(), bl.bottom.neg)
    if kind == DUAL:
        return lambda bl: (bl.top.key(), -bl.bottom.neg)
    if kind == DOUBLY:
        return lambda bl: (bl.top.key(), -bl.bottom.neg if bl.top.barred else bl.bottom.neg)
    raise ValueError(f"unknown biword kind {kind!r}")


@dataclass(frozen=True)
class ColoredBiword:
    letters: tuple
    kind: str

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    @property
    def top(self):
        return tuple(bl.top for bl in self.letters)

    @property
    def bottom(self):
        return tuple(bl.bottom for bl in self.letters)

    def top_weight(self):
        return _weight(self.top)

    def bottom_weight(self):
        return _weight(self.bottom)

    def is_multiplicity_free(self):
        return len(set(self.letters)) == len(self.letters)

    def __str__(self):
        return " ".join(str(bl) for bl in self.letters)


def _weight(letters):
    if not letters:
        return ()
    top = max(letter.value for letter in letters)
    counts = [0] * top
    for letter in letters:
        counts[letter.value - 1] += 1
    return tuple(counts)


def biword(biletters, kind):
    """Canonically ordered biword of the given kind."""
    biletters = tuple(biletters)
    if kind in (COLORED, DUAL) and any(bl.top.barred for bl in biletters):
        raise ValueError(f"{kind} biwords cannot carry bars on the top row")
    ordered = tuple(sorted(biletters, key=_sort_key(kind)))
    return ColoredBiword(ordered, kind)


def colored_word(letters):
    """Identify a colored word with the biword whose top row is 1..n."""
    letters = tuple(letters)
    return biword(
        (Biletter(Letter(i), letter) for i, letter in enumerate(letters, start=1)),
        COLORED,
    )


def parse_biword(text, kind=COLORED):
    """Parse 'top/bottom' pairs, two rows split by ';' or a newline, or a
    bare word (top row implied 1..n)."""
    if ";" in text or "\n" in text:
        top_text, _, bottom_text = text.replace("\n", ";").partition(";")
        top = parse_word(top_text)
        bottom = parse_word(bottom_text)
        if len(top) != len(bottom):
            raise ValueError("rows have different lengths")
        return biword((Biletter(t, b) for t, b in zip(top, bottom)), kind)
    if "/" not in text:
        return colored_word(parse_word(text))
    pairs = []
    for pos, token in enumerate(text.replace(",", " ").split(), start=1):
        try:
            top_text, bottom_text = token.split("/")
            pairs.append(Biletter(parse_letter(top_text), parse_letter(bottom_text)))
        except ValueError as exc:
            raise ValueError(f"pair {pos}: {exc}") from None
    return biword(pairs, kind)


def is_signed_permutation(letters):
    values = sorted(letter.value for letter in letters)
    return values == list(range(1, len(letters) + 1))


def total_color(word):
    """Number of barred letters (both rows for a biword)."""
    if isinstance(word, ColoredBiword):
        return sum(bl.top.barred + bl.bottom.barred for bl in word.letters)
    return sum(letter.barred for letter in word)


def strip_bars(word):
    if isinstance(word, ColoredBiword):
        return biword(
            (Biletter(bl.top.unbarred(), bl.bottom.unbarred()) for bl in word.letters),
            word.kind,
        )
    return tuple(letter.unbarred() for letter in word)


def neg_values(letters):
    return tuple(letter.neg for letter in letters)


def with_kind(word, kind):
    return biword(word.letters, kind)


def standardize_top(word):
    """Replace the top row by 1..n in display order, keeping its bars."""
    new = tuple(
        Biletter(Letter(i, bl.top.barred), bl.bottom)
        for i, bl in enumerate(word.letters, start=1)
    )
    return biword(new, word.kind)


def invert(word):
    """Swap the rows of each biletter; the result is doubly colored."""
    return biword((Biletter(bl.bottom, bl.top) for bl in word.letters), DOUBLY)


def invert_colored(word):
    """Inverse for colored biwords: move bars to the top row, then swap."""
    if word.kind != COLORED:
        raise ValueError("invert_colored expects a colored biword")
    swapped = (
        Biletter(bl.bottom.unbarred(), bl.top.with_bar(bl.bottom.barred))
        for bl in word.letters
    )
    return biword(swapped, COLORED)


def invert_dual(word):
    """Swap rows moving any bar down; exchanges colored and dual biwords."""
    if word.kind not in (COLORED, DUAL):
        raise ValueError("invert_dual expects a colored or dual biword")
    swapped = (
        Biletter(bl.bottom.unbarred(), bl.top.with_bar(bl.bottom.barred))
        for bl in word.letters
    )
    return biword(swapped, DUAL if word.kind == COLORED else COLORED)


def standardize(word):
    """Full standardization of a colored biword to a signed permutation."""
    if word.kind != COLORED:
        raise ValueError("standardize expects a colored biword")
    step = standardize_top(word)
    step = invert(step)
    step = standardize_top(step)
    step = invert(step)
    return with_kind(step, COLORED)


def dual_standardize(word):
    """Standardization through the dual inverse; multiplicity-free inputs only."""
    if word.kind not in (COLORED, DUAL):
        raise ValueError("dual_standardize expects a colored or dual biword")
    if not word.is_multiplicity_free():
        raise ValueError("dual_standardize requires a multiplicity-free biword")
    step = standardize_top(word)
    step = invert_dual(step)
    step = standardize_top(step)
    step = invert_dual(step)
    return step


def signed_permutation(word):
    """Bottom letters of a colored-permutation biword, in top order."""
    if not is_signed_permutation(word.bottom):
        raise ValueError("biword bottom is not a signed permutation")
    return word.bottom


def group_inverse(letters):
    """Inverse of a signed permutation, as a word."""
    return signed_permutation(invert_colored(colored_word(letters)))


def is_involution(word):
    if isinstance(word, ColoredBiword):
        return word == invert_colored(word)
    return colored_word(word) == invert_colored(colored_word(word))


@dataclass(frozen=True)
class InvolutionProfile:
    """Cycle counts of a signed involution."""

    fixed: int
    barred_fixed: int
    two_cycles: int
    barred_two_cycles: int

    @property
    def length(self):
        return self.fixed + self.barred_fixed + 2 * (self.two_cycles + self.barred_two_cycles)


@dataclass(frozen=True)
class CycleProfile:
    """Cycle data of a colored involution biword, by letter value.

    ``standardized`` predicts the profile of the standardization: within each
    value, the barred fixed points pair up into barred two-cycles, leaving at
    most one barred fixed point.
    """

    fixed: dict
    barred_fixed: dict
    two_cycles: dict
    barred_two_cycles: dict
    standardized: InvolutionProfile


def cycle_profile(word):
    if isinstance(word, tuple):
        word = colored_word(word)
    if word != invert_colored(word):
        raise ValueError("cycle_profile expects a colored involution")
    fixed = {}
    barred_fixed = {}
    two_cycles = {}
    barred_two_cycles = {}
    for bl in word.letters:
        i, j = bl.top.value, bl.bottom.value
        if i == j and not bl.bottom.barred:
            fixed[i] = fixed.get(i, 0) + 1
        elif i == j:
            barred_fixed[i] = barred_fixed.get(i, 0) + 1
        elif i < j and not bl.bottom.barred:
            two_cycles[(i, j)] = two_cycles.get((i, j), 0) + 1
        elif i < j:
            barred_two_cycles[(i, j)] = barred_two_cycles.get((i, j), 0) + 1
    std = InvolutionProfile(
        fixed=sum(fixed.values()),
        barred_fixed=sum(b % 2 for b in barred_fixed.values()),
        two_cycles=sum(two_cycles.values()),
        barred_two_cycles=sum(barred_two_cycles.values())
        + sum(b // 2 for b in barred_fixed.values()),
    )
    return CycleProfile(fixed, barred_fixed, two_cycles, barred_two_cycles, std)


def involution_profile(letters):
    """Cycle counts of a signed permutation with pi * pi = 1."""
    letters = tuple(letters)
    if not is_involution(letters):
        raise ValueError("not an involution")
    profile = cycle_profile(colored_word(letters))
    return InvolutionProfile(
        fixed=sum(profile.fixed.values()),
        barred_fixed=sum(profile.barred_fixed.values()),
        two_cycles=sum(profile.two_cycles.values()),
        barred_two_cycles=sum(profile.barred_two_cycles.values()),
    )


def enumerate_signed_permutations(n):
    """All 2^n n! signed permutations of [n], lexicographically by neg-values."""
    out = []
    for values in itertools.permutations(range(1, n + 1)):
        for bars in itertools.product((False, True), repeat=n):
            out.append(tuple(Letter(v, b) for v, b in zip(values, bars)))
    out.sort(key=neg_values)
    return out


def enumerate_involutions(n):
    """All signed involutions in B_n, built from fixed points and two-cycles."""
    results = []

    def build(remaining, assignment):
        if not remaining:
            results.append(tuple(assignment[i] for i in sorted(assignment)))
            return
        i = remaining[0]
        rest = remaining[1:]
        for barred in (False, True):
            assignment[i] = Letter(i, barred)
            build(rest, assignment)
            del assignment[i]
        for j in rest:
            others = tuple(k for k in rest if k != j)
            for barred in (False, True):
                assignment[i] = Letter(j, barred)
                assignment[j] = Letter(i, barred)
                build(others, assignment)
                del assignment[i]
                del assignment[j]

    build(tuple(range(1, n + 1)), {})
    results.sort(key=neg_values)
    return results


def to_json(word):
    if isinstance(word, ColoredBiword):
        return {
            "kind": word.kind,
            "biletters": [[str(bl.top), str(bl.bottom)] for bl in word.letters],
        }
    return {"letters": [str(letter) for letter in word]}


def from_json(data):
    if "biletters" in data:
        pairs = (
            Biletter(parse_letter(t), parse_letter(b)) for t, b in data["biletters"]
        )
        return biword(pairs, data.get("kind", COLORED))
    return tuple(parse_letter(t) for t in data["letters"])
