"""Weyl and Specht modules realized as explicit polynomial spans.

Group actions, one per module:

* Weyl modules live in ``C[Z]``, ``Z`` a generic ``n x n`` matrix, and
  ``GL_n`` acts by right multiplication, ``(g.f)(Z) = f(Z g)``.
* Specht modules live in ``C[x_1..x_n]`` and ``S_n`` permutes variables,
  ``(s.f)(x_1, ..., x_n) = f(x_s(1), ..., x_s(n))``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .combinatorics import Numbering, SkewShape, as_partition
from .errors import ResourceCapExceeded
from .polynomials import MonomialPolynomial, rank_of_polynomials

WEYL_CAP = (6, 4)     # |lam|, n
SPECHT_CAP = 7        # |lam|


def _z_index(n, i, j):
    # variable z_{i+1, j+1}, row-major
    return i * n + j


def generic_matrix(n: int) -> list[list[MonomialPolynomial]]:
    N = n * n
    return [[MonomialPolynomial.variable(N, _z_index(n, i, j)) for j in range(n)]
            for i in range(n)]


def _perm_sign(perm) -> int:
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def determinant(M: Sequence[Sequence[MonomialPolynomial]], num_vars: int) -> MonomialPolynomial:
    """Leibniz expansion; fine for the small sizes used here."""
    L = len(M)
    total = MonomialPolynomial(num_vars)
    for perm in itertools.permutations(range(L)):
        term = MonomialPolynomial.constant(num_vars, _perm_sign(perm))
        for i in range(L):
            term = term * M[i][perm[i]]
            if not term:
                break
        total = total + term
    return total


def _e_T(T: Numbering, M, num_vars: int) -> MonomialPolynomial:
    """Product over columns of the minor on rows ``1..len`` and columns given by the column."""
    result = MonomialPolynomial.constant(num_vars, 1)
    for col in T.columns():
        if len(set(col)) < len(col):
            return MonomialPolynomial(num_vars)
        minor = [[M[i][c - 1] for c in col] for i in range(len(col))]
        result = result * determinant(minor, num_vars)
        if not result:
            break
    return result


def _check_weyl_numbering(T: Numbering, n: int) -> None:
    if T.shape.inner:
        raise ValueError("Weyl vectors need a straight shape")
    if any(v > n for row in T.rows for v in row):
        raise ValueError(f"entries must lie in 1..{n}")
    if len(T.shape.outer) > n:
        raise ValueError(f"column longer than {n}")


def weyl_vector(T: Numbering, n: int) -> MonomialPolynomial:
    """``e_T`` in the ``n*n`` entries of ``Z`` (row-major variable order)."""
    _check_weyl_numbering(T, n)
    return _e_T(T, generic_matrix(n), n * n)


def all_numberings(lam, n: int):
    lam = as_partition(lam)
    shape = SkewShape(lam)
    cells = lam.size()
    for values in itertools.product(range(1, n + 1), repeat=cells):
        rows, pos = [], 0
        for r in lam:
            rows.append(values[pos:pos + r])
            pos += r
        yield Numbering(shape, tuple(rows))


def weyl_span_dimension(lam, n: int, cap=WEYL_CAP) -> int:
    """Rank of ``{e_T}`` over all numberings ``T`` of ``lam`` with entries in ``[n]``."""
    lam = as_partition(lam)
    if lam.size() > cap[0] or n > cap[1]:
        raise ResourceCapExceeded(f"weyl span capped at |lam| <= {cap[0]}, n <= {cap[1]}")
    if len(lam) > n:
        return 0
    Z = generic_matrix(n)
    seen = set()
    vectors = []
    for T in all_numberings(lam, n):
        v = _e_T(T, Z, n * n)
        if v and v not in seen and -v not in seen:
            seen.add(v)
            vectors.append(v)
    return rank_of_polynomials(vectors)


def canonical_tableau(lam) -> Numbering:
    lam = as_partition(lam)
    return Numbering(SkewShape(lam), tuple((i + 1,) * r for i, r in enumerate(lam)))


def _times_matrix(n: int, b) -> list[list[MonomialPolynomial]]:
    """Entries of ``Z b`` as linear polynomials in the entries of ``Z``."""
    N = n * n
    b = [[Fraction(v) for v in row] for row in b]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            for k in range(n):
                if b[k][j]:
                    e = [0] * N
                    e[_z_index(n, i, k)] = 1
                    terms[tuple(e)] = b[k][j]
            row.append(MonomialPolynomial(N, terms))
        out.append(row)
    return out


def acts_by_scalar(T: Numbering, n: int, b) -> tuple[bool, Fraction]:
    """Whether ``e_T(Z b)`` is a scalar multiple of ``e_T(Z)``, and that scalar.

    The scalar returned is ``prod b_ii ** (number of i in T)``, the value it
    must take if ``T`` is canonical.
    """
    _check_weyl_numbering(T, n)
    N = n * n
    base = _e_T(T, generic_matrix(n), N)
    moved = _e_T(T, _times_matrix(n, b), N)
    scalar = Fraction(1)
    for v, mult in T.content().items():
        scalar *= Fraction(b[v - 1][v - 1]) ** mult
    return moved == base.scale(scalar), scalar


def highest_weight_check(lam, n: int, b) -> bool:
    """``e_T0(Z b) == prod_i b_ii**lam_i * e_T0(Z)`` for upper-triangular invertible ``b``."""
    lam = as_partition(lam)
    if len(b) != n or any(len(row) != n for row in b):
        raise ValueError(f"b must be {n}x{n}")
    if any(b[i][j] for i in range(n) for j in range(i)):
        raise ValueError("b must be upper triangular")
    if any(b[i][i] == 0 for i in range(n)):
        raise ValueError("b must be invertible")
    ok, _ = acts_by_scalar(canonical_tableau(lam), n, b)
    return ok


def specht_vector(T: Numbering, n: int | None = None) -> MonomialPolynomial:
    """Product of column discriminants ``prod_{i<i'} (x_{c_i} - x_{c_i'})``."""
    if T.shape.inner:
        raise ValueError("Specht vectors need a straight shape")
    entries = [v for row in T.rows for v in row]
    size = len(entries)
    if n is None:
        n = size
    if n != size:
        raise ValueError("Specht vectors use n = |lam| variables")
    if sorted(entries) != list(range(1, n + 1)):
        raise ValueError("entries must be distinct and lie in 1..n")
    one = MonomialPolynomial.constant(n, 1)
    result = one
    for col in T.columns():
        for a in range(len(col)):
            for b in range(a + 1, len(col)):
                diff = (MonomialPolynomial.variable(n, col[a] - 1)
                        - MonomialPolynomial.variable(n, col[b] - 1))
                result = result * diff
    return result


def distinct_numberings(lam):
    lam = as_partition(lam)
    n = lam.size()
    shape = SkewShape(lam)
    for perm in itertools.permutations(range(1, n + 1)):
        rows, pos = [], 0
        for r in lam:
            rows.append(perm[pos:pos + r])
            pos += r
        yield Numbering(shape, tuple(rows))


def specht_vectors(lam) -> list[MonomialPolynomial]:
    seen = set()
    out = []
    for T in distinct_numberings(lam):
        v = specht_vector(T)
        if v not in seen and -v not in seen:
            seen.add(v)
            out.append(v)
    return out


def specht_span_dimension(lam, cap: int = SPECHT_CAP) -> int:
    lam = as_partition(lam)
    if lam.size() > cap:
        raise ResourceCapExceeded(f"specht span capped at |lam| <= {cap}")
    return rank_of_polynomials(specht_vectors(lam))


def permute_variables(f: MonomialPolynomial, sigma: Sequence[int]) -> MonomialPolynomial:
    """``(sigma . f)(x_1..x_n) = f(x_sigma(1), ..., x_sigma(n))``; ``sigma`` is 1-based."""
    # variable i of f becomes x_{sigma(i)}
    return f.permute([s - 1 for s in sigma])
