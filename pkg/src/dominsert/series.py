"""Truncated symmetric series over exact coefficients.

Series live in x-variables and optionally y-variables with a bound on the
total degree; coefficients are polynomials in (a, b, c, s) with s = q^(1/2).
Domino functions are homogeneous of degree equal to their number of
dominoes, so bounding the shape size makes every truncated identity exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import (
    as_partition,
    conjugate,
    d_stat,
    enumerate_partitions,
    odd_rows,
    size,
    staircase,
    two_core,
    v_stat,
)
from .polynomials import MPoly, PARAMS
from .tableaux import enumerate_semistandard
from .young import enumerate_ssyt


class TruncatedSeries:
    """Polynomial in x_1..x_nx (and y_1..y_ny) truncated in total degree."""

    __slots__ = ("nx", "ny", "bound", "terms")

    def __init__(self, nx, ny, bound, terms=None):
        self.nx = nx
        self.ny = ny
        self.bound = bound
        table = {}
        if terms:
            width = nx + ny
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != width:
                    raise ValueError(f"monomial {exps} does not fit {width} variables")
                if sum(exps) <= bound and coeff:
                    table[exps] = coeff
        self.terms = table

    @classmethod
    def one(cls, nx, ny, bound):
        return cls(nx, ny, bound, {(0,) * (nx + ny): MPoly.const(1, PARAMS)})

    @classmethod
    def zero(cls, nx, ny, bound):
        return cls(nx, ny, bound)

    def _check(self, other):
        if (self.nx, self.ny, self.bound) != (other.nx, other.ny, other.bound):
            raise ValueError("series configurations differ")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            (self.nx, self.ny, self.bound) == (other.nx, other.ny, other.bound)
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms.get(exps, MPoly.zero(PARAMS)) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return TruncatedSeries(self.nx, self.ny, self.bound, terms)

    def __mul__(self, other):
        if isinstance(other, (int, MPoly)):
            coeff = other if isinstance(other, MPoly) else MPoly.const(other, PARAMS)
            return TruncatedSeries(
                self.nx, self.ny, self.bound,
                {e: c * coeff for e, c in self.terms.items()},
            )
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > self.bound:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(key, MPoly.zero(PARAMS)) + c1 * c2
                if total:
                    terms[key] = total
                else:
                    del terms[key]
        return TruncatedSeries(self.nx, self.ny, self.bound, terms)

    __rmul__ = __mul__

    def subs(self, assignments):
        return TruncatedSeries(
            self.nx, self.ny, self.bound,
            {e: c.subs(assignments) for e, c in self.terms.items()},
        )

    def truncated(self, bound):
        if bound > self.bound:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.nx, self.ny, bound, self.terms)

    def is_symmetric(self):
        """Invariance under permuting the x-block and the y-block."""
        for perm in itertools.permutations(range(self.nx)):
            swapped = {}
            for exps, coeff in self.terms.items():
                key = tuple(exps[perm[i]] for i in range(self.nx)) + exps[self.nx:]
                swapped[key] = coeff
            if swapped != self.terms:
                return False
        for perm in itertools.permutations(range(self.ny)):
            swapped = {}
            for exps, coeff in self.terms.items():
                key = exps[: self.nx] + tuple(exps[self.nx + perm[i]] for i in range(self.ny))
                swapped[key] = coeff
            if swapped != self.terms:
                return False
        return True

    def monomial_str(self, exps):
        names = [f"x{i+1}" for i in range(self.nx)] + [f"y{i+1}" for i in range(self.ny)]
        parts = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps)
            if e
        ]
        return "*".join(parts) if parts else "1"

    def lines(self):
        out = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            out.append(f"{self.monomial_str(exps)}: {self.terms[exps]}")
        return out

    def __str__(self):
        return "\n".join(self.lines()) if self.terms else "0"


@dataclass(frozen=True)
class Factor:
    """One factor (1 + coeff * monomial)^power with power +1 or -1."""

    coeff: MPoly
    exps: tuple
    power: int = 1

    def expand(self, nx, ny, bound):
        degree = sum(self.exps)
        if degree == 0:
            raise ValueError("factor monomial must have positive degree")
        one = MPoly.const(1, PARAMS)
        terms = {(0,) * (nx + ny): one}
        if self.power == 1:
            terms[self.exps] = self.coeff
            return TruncatedSeries(nx, ny, bound, terms)
        if self.power != -1:
            raise ValueError("factor power must be +1 or -1")
        # geometric expansion of 1 / (1 + u): alternating powers of u
        u = -self.coeff
        current = u
        exps = self.exps
        k = 1
        while k * degree <= bound:
            key = tuple(e * k for e in exps)
            if current:
                terms[key] = current
            current = current * u
            k += 1
        return TruncatedSeries(nx, ny, bound, terms)


def expand_product(factors, nx, ny, bound):
    total = TruncatedSeries.one(nx, ny, bound)
    for factor in factors:
        total = total * factor.expand(nx, ny, bound)
    return total


def x_monomial(weight, nx, ny):
    exps = [0] * (nx + ny)
    for i, w in enumerate(weight):
        exps[i] = w
    return tuple(exps)


def y_monomial(weight, nx, ny):
    exps = [0] * (nx + ny)
    for i, w in enumerate(weight):
        exps[nx + i] = w
    return tuple(exps)


def schur(lam, nx, bound, ny=0, block="x"):
    """Schur polynomial by semistandard Young tableau enumeration."""
    lam = as_partition(lam)
    place = x_monomial if block == "x" else y_monomial
    terms = {}
    for tab in enumerate_ssyt(lam, nx if block == "x" else ny):
        weight = [0] * (nx if block == "x" else ny)
        for row in tab:
            for value in row:
                weight[value - 1] += 1
        key = place(weight, nx, ny)
        terms[key] = terms.get(key, MPoly.zero(PARAMS)) + 1
    return TruncatedSeries(nx, ny, bound, terms)


def domino_function(lam, nx, bound, ny=0, block="x", complement=False):
    """Domino function: sum of q^spin x^weight over semistandard fillings.

    With ``complement=True`` the spin exponent is replaced by its complement
    against the domino count, which realises q^(m/2) G(Y; 1/q) for the dual
    Cauchy identity without negative exponents.
    """
    lam = as_partition(lam)
    dominoes = (size(lam) - size(two_core(lam))) // 2
    entries = nx if block == "x" else ny
    place = x_monomial if block == "x" else y_monomial
    terms = {}
    for tab in enumerate_semistandard(lam, entries):
        weight = list(tab.weight()) + [0] * (entries - len(tab.weight()))
        v = tab.vertical_count()
        exponent = dominoes - v if complement else v
        key = place(weight, nx, ny)
        coeff = terms.get(key, MPoly.zero(PARAMS)) + MPoly.var("s", PARAMS, power=exponent)
        terms[key] = coeff
    return TruncatedSeries(nx, ny, bound, terms)


def shapes_up_to(core, max_dominoes):
    from .partitions import enumerate_with_core

    for n in range(max_dominoes + 1):
        yield from enumerate_with_core(core, n)


# ---------------------------------------------------------------------------
# identity sides


def cauchy_sum(core, nx, bound):
    total = TruncatedSeries.zero(nx, nx, 2 * bound)
    for lam in shapes_up_to(core, bound):
        gx = domino_function(lam, nx, 2 * bound, ny=nx, block="x")
        gy = domino_function(lam, nx, 2 * bound, ny=nx, block="y")
        total = total + gx * gy
    return total


def cauchy_product(nx, bound):
    one = MPoly.const(1, PARAMS)
    q = MPoly.var("s", PARAMS, power=2)
    factors = []
    for i in range(nx):
        for j in range(nx):
            exps = [0] * (2 * nx)
            exps[i] += 1
            exps[nx + j] += 1
            factors.append(Factor(-one, tuple(exps), power=-1))
            factors.append(Factor(-q, tuple(exps), power=-1))
    return expand_product(factors, nx, nx, 2 * bound)


def dual_cauchy_sum(core, nx, bound):
    total = TruncatedSeries.zero(nx, nx, 2 * bound)
    for lam in shapes_up_to(core, bound):
        gx = domino_function(lam, nx, 2 * bound, ny=nx, block="x")
        gy = domino_function(conjugate(lam), nx, 2 * bound, ny=nx, block="y", complement=True)
        total = total + gx * gy
    return total


def dual_cauchy_product(nx, bound):
    one = MPoly.const(1, PARAMS)
    q = MPoly.var("s", PARAMS, power=2)
    factors = []
    for i in range(nx):
        for j in range(nx):
            exps = [0] * (2 * nx)
            exps[i] += 1
            exps[nx + j] += 1
            factors.append(Factor(one, tuple(exps)))
            factors.append(Factor(q, tuple(exps)))
    return expand_product(factors, nx, nx, 2 * bound)


def _shape_weight(lam, core):
    base = staircase(core)
    return (
        MPoly.var("a", PARAMS, power=(odd_rows(lam) - odd_rows(base)) // 2)
        * MPoly.var("b", PARAMS, power=(odd_rows(conjugate(lam)) - odd_rows(base)) // 2)
        * MPoly.var("c", PARAMS, power=d_stat(lam) - d_stat(base))
    )


def weighted_domino_sum(core, nx, bound):
    """Three-parameter sum of a^.. b^.. c^.. G(X; q) over one 2-core class."""
    total = TruncatedSeries.zero(nx, 0, bound)
    for lam in shapes_up_to(core, bound):
        total = total + domino_function(lam, nx, bound) * _shape_weight(lam, core)
    return total


def weighted_domino_product(nx, bound):
    """Product side: (1 + a s x_i) over (1 - b x_i)(1 - c q x_i^2), and
    (1 - c x_i x_j)(1 - c q x_i x_j) below the diagonal."""
    a = MPoly.var("a", PARAMS)
    b = MPoly.var("b", PARAMS)
    c = MPoly.var("c", PARAMS)
    s = MPoly.var("s", PARAMS)
    q = MPoly.var("s", PARAMS, power=2)
    factors = []
    for i in range(nx):
        single = [0] * nx
        single[i] = 1
        square = [0] * nx
        square[i] = 2
        factors.append(Factor(a * s, tuple(single)))
        factors.append(Factor(-b, tuple(single), power=-1))
        factors.append(Factor(-c * q, tuple(square), power=-1))
    for i in range(nx):
        for j in range(i + 1, nx):
            pair = [0] * nx
            pair[i] = 1
            pair[j] = 1
            factors.append(Factor(-c, tuple(pair), power=-1))
            factors.append(Factor(-c * q, tuple(pair), power=-1))
    return expand_product(factors, nx, 0, bound)


def schur_sum(nx, bound, weight=None):
    """Sum of (optionally weighted) Schur polynomials over all shapes."""
    total = TruncatedSeries.zero(nx, 0, bound)
    for m in range(bound + 1):
        for lam in enumerate_partitions(m):
            term = schur(lam, nx, bound)
            if weight is not None:
                term = term * weight(lam)
            total = total + term
    return total


# ---------------------------------------------------------------------------
# verification records


def check_cauchy(core, nx, bound):
    return cauchy_sum(core, nx, bound), cauchy_product(nx, bound)


def check_dual_cauchy(core, nx, bound):
    return dual_cauchy_sum(core, nx, bound), dual_cauchy_product(nx, bound)


def check_weighted_sum(core, nx, bound):
    return weighted_domino_sum(core, nx, bound), weighted_domino_product(nx, bound)


def specialization_square(nx, bound):
    """a=b=c=s=1: the square of the classical Schur-sum product identity."""
    lhs = weighted_domino_sum(0, nx, bound).subs({"a": 1, "b": 1, "c": 1, "s": 1})
    classical = schur_sum(nx, bound)
    rhs = classical * classical
    return lhs, rhs


def specialization_zero_spin(nx, bound):
    """s=0: Schur sum weighted by odd columns and column pairs."""
    lhs = weighted_domino_sum(0, nx, bound).subs({"s": 0})

    def weight(lam):
        return (
            MPoly.var("b", PARAMS, power=odd_rows(conjugate(lam)))
            * MPoly.var("c", PARAMS, power=v_stat(conjugate(lam)))
        )

    rhs = schur_sum(nx, bound, weight=weight)
    one = MPoly.const(1, PARAMS)
    b = MPoly.var("b", PARAMS)
    c = MPoly.var("c", PARAMS)
    factors = []
    for i in range(nx):
        single = [0] * nx
        single[i] = 1
        factors.append(Factor(-b, tuple(single), power=-1))
    for i in range(nx):
        for j in range(i + 1, nx):
            pair = [0] * nx
            pair[i] = 1
            pair[j] = 1
            factors.append(Factor(-c, tuple(pair), power=-1))
    product = expand_product(factors, nx, 0, bound)
    return lhs, rhs, product


def specialization_even_rows(nx, bound):
    """a=0, b=c=1 picks out the even-row shapes."""
    lhs = weighted_domino_sum(0, nx, bound).subs({"a": 0, "b": 1, "c": 1})
    total = TruncatedSeries.zero(nx, 0, bound)
    for lam in shapes_up_to(0, bound):
        if all(p % 2 == 0 for p in lam):
            total = total + domino_function(lam, nx, bound)
    return lhs, total


def specialization_even_both(nx, bound):
    """a=b=0, c=1 picks out shapes with even rows and even columns."""
    lhs = weighted_domino_sum(0, nx, bound).subs({"a": 0, "b": 0, "c": 1})
    total = TruncatedSeries.zero(nx, 0, bound)
    for lam in shapes_up_to(0, bound):
        if all(p % 2 == 0 for p in lam) and all(p % 2 == 0 for p in conjugate(lam)):
            total = total + domino_function(lam, nx, bound)
    return lhs, total
