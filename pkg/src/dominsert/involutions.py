"""Signed involutions, their insertion statistics, and counting identities.

For an involution the insertion and recording tableaux coincide, and the
shape statistics are controlled by the cycle profile: with ``a`` fixed
points, ``b`` barred fixed points, ``c`` two-cycles and ``d`` barred
two-cycles,

* ``sp(P) = b/2 + d``
* ``(o(shape) - o(core)) / 2 = b``
* ``(o(shape') - o(core)) / 2 = a``
* ``d(shape) - d(core) = c + d``

(Each ``+1`` square on the diagonal of the symmetric growth diagram adds
two odd columns, each ``-1`` square two odd rows, and each off-diagonal
cycle exactly one unit of the ``d`` statistic.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .insertion import insert_word
from .partitions import d_stat, enumerate_with_core, odd_rows, conjugate, staircase, two_quotient, size
from .polynomials import MPoly, PARAMS, SPIN, one_plus_q
from .tableaux import spin_poly
from .words import enumerate_involutions, involution_profile
from .young import hook_count, involution_number


@dataclass(frozen=True)
class StatComparison:
    name: str
    lhs: object
    rhs: object

    @property
    def holds(self):
        return self.lhs == self.rhs


def check_involution_stats(pi, core=0):
    """The four shape-statistics equations for a signed involution."""
    profile = involution_profile(pi)
    result = insert_word(pi, core)
    if result.p != result.q:
        raise ValueError("insertion of an involution must be symmetric")
    lam = result.p.shape()
    base = staircase(core)
    return (
        StatComparison("double spin", result.p.vertical_count(), profile.barred_fixed + 2 * profile.barred_two_cycles),
        StatComparison("odd rows", odd_rows(lam) - odd_rows(base), 2 * profile.barred_fixed),
        StatComparison("odd columns", odd_rows(conjugate(lam)) - odd_rows(base), 2 * profile.fixed),
        StatComparison("d statistic", d_stat(lam) - d_stat(base), profile.two_cycles + profile.barred_two_cycles),
    )


def check_vertical_split(pi, core=0):
    """Vertical dominoes by column parity: ev = d and ov = b + d."""
    profile = involution_profile(pi)
    tab = insert_word(pi, core).p
    return (
        StatComparison("even vertical", tab.even_vertical(), profile.barred_two_cycles),
        StatComparison("odd vertical", tab.odd_vertical(), profile.barred_fixed + profile.barred_two_cycles),
    )


def check_insertion_sign(pi, core=0):
    """Sign of the insertion tableau equals (-1)^(barred two-cycles)."""
    from .tableaux import tableau_sign

    profile = involution_profile(pi)
    tab = insert_word(pi, core).p
    return StatComparison("insertion sign", tableau_sign(tab), (-1) ** profile.barred_two_cycles)


def _shape_weight(lam, core):
    base = staircase(core)
    o_diff = odd_rows(lam) - odd_rows(base)
    oc_diff = odd_rows(conjugate(lam)) - odd_rows(base)
    if o_diff % 2 or oc_diff % 2:
        raise ValueError(f"odd-row difference is not even for {lam}")
    return (
        MPoly.var("a", PARAMS, power=o_diff // 2)
        * MPoly.var("b", PARAMS, power=oc_diff // 2)
        * MPoly.var("c", PARAMS, power=d_stat(lam) - d_stat(base))
    )


def involution_poly(n, core=0):
    """Sum over shapes with n dominoes of a^.. b^.. c^.. times the spin
    polynomial; independent of the core."""
    total = MPoly.zero(PARAMS)
    for lam in enumerate_with_core(core, n):
        total = total + _shape_weight(lam, core) * spin_poly(lam).lift(PARAMS)
    return total


def involution_poly_direct(n):
    """The same polynomial, summed over signed involutions by cycle profile."""
    total = MPoly.zero(PARAMS)
    for pi in enumerate_involutions(n):
        profile = involution_profile(pi)
        term = (
            MPoly.var("a", PARAMS, power=profile.barred_fixed)
            * MPoly.var("b", PARAMS, power=profile.fixed)
            * MPoly.var("c", PARAMS, power=profile.two_cycles + profile.barred_two_cycles)
            * MPoly.var("s", PARAMS, power=profile.barred_fixed + 2 * profile.barred_two_cycles)
        )
        total = total + term
    return total


def involution_poly_recursive(n):
    """h(n+1) = (b + a s) h(n) + n c (1 + s^2) h(n-1)."""
    h0 = MPoly.const(1, PARAMS)
    if n == 0:
        return h0
    h1 = MPoly.var("b", PARAMS) + MPoly.var("a", PARAMS) * MPoly.var("s", PARAMS)
    previous, current = h0, h1
    for m in range(1, n):
        nxt = h1 * current + m * MPoly.var("c", PARAMS) * one_plus_q(PARAMS) * previous
        previous, current = current, nxt
    return current


def involution_poly_egf(n):
    """n! times the t^n coefficient of exp((b + a s) t + c (1 + s^2) t^2 / 2).

    Expanded with the exponential formula: the number of involutions of [n]
    with j two-cycles is n! / ((n - 2j)! j! 2^j).
    """
    single = MPoly.var("b", PARAMS) + MPoly.var("a", PARAMS) * MPoly.var("s", PARAMS)
    double = MPoly.var("c", PARAMS) * one_plus_q(PARAMS)
    total = MPoly.zero(PARAMS)
    for j in range(n // 2 + 1):
        count = math.factorial(n) // (math.factorial(n - 2 * j) * math.factorial(j) * 2**j)
        total = total + count * single ** (n - 2 * j) * double**j
    return total


def spin_square_sum(n, core=0):
    """Sum of the squared spin polynomials over shapes with n dominoes."""
    total = MPoly.zero(SPIN)
    for lam in enumerate_with_core(core, n):
        poly = spin_poly(lam)
        total = total + poly * poly
    return total


def spin_square_target(n):
    """(1 + q)^n  n!, written in s."""
    return math.factorial(n) * one_plus_q() ** n


def standard_tableau_count(lam):
    """Number of standard domino tableaux, as a counting oracle.

    The 2-quotient bijection sends a tableau with n dominoes to a pair of
    Young tableaux on the quotient shapes whose entries partition [n], so
    the count carries a binomial factor for the split of the values.
    """
    q0, q1 = two_quotient(lam)
    n = size(q0) + size(q1)
    return math.comb(n, size(q0)) * hook_count(q0) * hook_count(q1)


def classical_counts(n):
    """Hook-length oracles: sum of squares is n!, plain sum is t(n)."""
    from .partitions import enumerate_partitions

    shapes = enumerate_partitions(n)
    counts = [hook_count(lam) for lam in shapes]
    return {
        "sum_fsq": sum(f * f for f in counts),
        "sum_f": sum(counts),
        "factorial": math.factorial(n),
        "involutions": involution_number(n),
    }
