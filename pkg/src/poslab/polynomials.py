"""Sparse multivariate polynomials keyed by exponent vectors."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping


class MonomialPolynomial:
    """Polynomial in ``num_vars`` variables as ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored. Coefficients are ints or Fractions.
    Instances are treated as immutable once built.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, object] | Iterable = ()):
        self.num_vars = num_vars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != num_vars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {num_vars} variables")
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def _raw(cls, num_vars, terms):
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, num_vars: int, c=1) -> "MonomialPolynomial":
        return cls._raw(num_vars, {(0,) * num_vars: c} if c else {})

    @classmethod
    def variable(cls, num_vars: int, i: int, c=1) -> "MonomialPolynomial":
        e = [0] * num_vars
        e[i] = 1
        return cls._raw(num_vars, {tuple(e): c} if c else {})

    def __eq__(self, other):
        if isinstance(other, MonomialPolynomial):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MonomialPolynomial({self.num_vars}, {self.terms!r})"

    def _check(self, other):
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials over different variable sets")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MonomialPolynomial._raw(self.num_vars, out)

    def __neg__(self):
        return MonomialPolynomial._raw(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "MonomialPolynomial":
        if not c:
            return MonomialPolynomial._raw(self.num_vars, {})
        return MonomialPolynomial._raw(self.num_vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MonomialPolynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MonomialPolynomial._raw(self.num_vars, out)

    __rmul__ = scale

    def power_of_variables(self, k: int) -> "MonomialPolynomial":
        """``p(x_1^k, ..., x_N^k)``."""
        return MonomialPolynomial._raw(
            self.num_vars, {tuple(k * x for x in e): c for e, c in self.terms.items()})

    def permute(self, perm) -> "MonomialPolynomial":
        """``p(x_perm[0], ..., x_perm[N-1])``: variable ``i`` is replaced by ``perm[i]``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.num_vars
            for i, x in enumerate(e):
                new[perm[i]] += x
            out[tuple(new)] = c
        return MonomialPolynomial._raw(self.num_vars, out)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def coefficient(self, e) -> object:
        return self.terms.get(tuple(e), 0)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total


def rank_of_polynomials(polys: Iterable[MonomialPolynomial]) -> int:
    """Rank over Q of the span of ``polys`` (exact, fraction-free elimination).

    Each polynomial becomes a sparse integer row; rows are reduced against
    the pivots found so far using integer cross-multiplication.
    """
    pivots: dict = {}  # monomial -> reduced row having it as leading key
    for p in polys:
        row = {e: Fraction(c) for e, c in p.terms.items()}
        den = math.lcm(*(c.denominator for c in row.values())) if row else 1
        vec = {e: int(c * den) for e, c in row.items()}
        while vec:
            lead = max(vec)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = vec
                break
            a, b = vec[lead], piv[lead]
            new = {e: c * b for e, c in vec.items()}
            for e, c in piv.items():
                v = new.get(e, 0) - a * c
                if v:
                    new[e] = v
                else:
                    new.pop(e, None)
            g = math.gcd(*new.values()) if new else 1
            vec = {e: c // g for e, c in new.items()} if g > 1 else new
    return len(pivots)
