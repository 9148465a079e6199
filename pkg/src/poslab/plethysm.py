"""Plethysm coefficients by exact symmetric-polynomial expansion.

``s_lam[s_mu]`` is evaluated by using the monomials of ``s_mu(x_1..x_N)``,
with multiplicity, as the alphabet for ``s_lam``. The result is then
rewritten in the Schur basis. Everything is exponential in ``|lam|*|mu|``,
so that product is capped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .combinatorics import Partition, as_partition, enumerate_ssyt, partitions_of
from .errors import ResourceCapExceeded, env_cap
from .polynomials import MonomialPolynomial

PLETHYSM_CAP = 10


class NotSymmetric(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class InsufficientVariables(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricFunction:
    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = as_partition(lam)
            if lam.size() != self.degree:
                raise ValueError(f"{list(lam)} is not a partition of {self.degree}")
            if c:
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(as_partition(lam), 0)

    def to_json(self) -> list:
        return [[list(lam), c] for lam, c in sorted(self.coeffs.items(), reverse=True)]


@lru_cache(maxsize=None)
def _schur_cached(lam: Partition, N: int) -> MonomialPolynomial:
    terms: dict = {}
    for T in enumerate_ssyt(lam, N):
        e = [0] * N
        for row in T.rows:
            for v in row:
                e[v - 1] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + 1
    return MonomialPolynomial(N, terms)


def schur_in_monomials(lam, N: int) -> MonomialPolynomial:
    """Schur polynomial ``s_lam(x_1..x_N)`` as the SSYT content generating function."""
    return _schur_cached(as_partition(lam), N)


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: tuple[int, ...]) -> int:
    """Number of SSYT of ``shape`` whose content is ``content`` (any composition).

    Peels off the largest letter as a horizontal strip.
    """
    content = tuple(content)
    while content and content[-1] == 0:
        content = content[:-1]
    if not content:
        return 1 if not shape else 0
    if len(shape) > len(content) or sum(shape) != sum(content):
        return 0
    r = content[-1]
    rest = content[:-1]
    padded = list(shape)
    total = 0
    # inner shape nu with shape/nu a horizontal strip of size r:
    # shape[i+1] <= nu[i] <= shape[i]
    def rec(i, remaining, nu):
        nonlocal total
        if i == len(padded):
            if remaining == 0:
                total += kostka(Partition(nu), rest)
            return
        low = padded[i + 1] if i + 1 < len(padded) else 0
        for v in range(padded[i], low - 1, -1):
            take = padded[i] - v
            if take > remaining:
                break
            rec(i + 1, remaining - take, nu + [v])
    rec(0, r, [])
    return total


def _check_symmetric(p: MonomialPolynomial) -> None:
    N = p.num_vars
    for e, c in p.terms.items():
        for i in range(N - 1):
            if e[i] != e[i + 1]:
                swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2:]
                if p.terms.get(swapped, 0) != c:
                    raise NotSymmetric(f"coefficient of {e} differs from its transpose {swapped}")


def to_schur_basis(p: MonomialPolynomial, d: int) -> SymmetricFunction:
    """Schur expansion of a symmetric polynomial, homogeneous of degree ``d``.

    Requires at least ``d`` variables. Since ``p`` is symmetric it is fixed
    by its coefficients on partition exponents; the dominant remaining
    partition is peeled first, subtracting its Schur polynomial via Kostka
    numbers.
    """
    N = p.num_vars
    if N < d:
        raise InsufficientVariables(f"{N} variables for degree {d}")
    if any(sum(e) != d for e in p.terms):
        raise NotHomogeneous(f"polynomial is not homogeneous of degree {d}")
    _check_symmetric(p)
    shapes = list(partitions_of(d, max_length=N))  # lex-decreasing = dominant first
    m = {lam: p.terms.get(lam.padded(N), 0) for lam in shapes}
    out = {}
    for idx, lam in enumerate(shapes):
        c = m[lam]
        if not c:
            continue
        if Fraction(c).denominator != 1:
            raise ValueError("non-integer Schur coefficient; input is not an integer combination")
        c = int(c)
        out[lam] = c
        for nu in shapes[idx:]:
            k = kostka(lam, tuple(nu))
            if k:
                m[nu] -= c * k
    return SymmetricFunction(d, out)


def from_schur_basis(f: SymmetricFunction, N: int) -> MonomialPolynomial:
    total = MonomialPolynomial(N)
    for lam, c in f.coeffs.items():
        total = total + schur_in_monomials(lam, N).scale(c)
    return total


def _complete_homogeneous_of_alphabet(alphabet: MonomialPolynomial, k_max: int):
    """``[h_0[A], ..., h_kmax[A]]`` by Newton's identity ``k h_k = sum p_i h_{k-i}``.

    The power sum ``p_i[A]`` of the multiset alphabet ``A`` (the monomials
    of ``alphabet`` with multiplicity) is ``alphabet(x_1^i, ..., x_N^i)``.
    """
    N = alphabet.num_vars
    power = [None] + [alphabet.power_of_variables(i) for i in range(1, k_max + 1)]
    h = [MonomialPolynomial.constant(N, 1)]
    for k in range(1, k_max + 1):
        acc = MonomialPolynomial(N)
        for i in range(1, k + 1):
            acc = acc + power[i] * h[k - i]
        h.append(acc.scale(Fraction(1, k)))
    return h


def schur_of_alphabet(lam, alphabet: MonomialPolynomial) -> MonomialPolynomial:
    """``s_lam`` evaluated on the multiset of monomials of ``alphabet``.

    Jacobi-Trudi: ``s_lam = det(h_{lam_i - i + j})``.
    """
    lam = as_partition(lam)
    N = alphabet.num_vars
    L = len(lam)
    if L == 0:
        return MonomialPolynomial.constant(N, 1)
    h = _complete_homogeneous_of_alphabet(alphabet, lam[0] + L - 1)
    zero = MonomialPolynomial(N)

    def entry(i, j):
        idx = lam[i] - i + j
        if idx < 0:
            return zero
        return h[idx]

    total = MonomialPolynomial(N)
    for perm in itertools.permutations(range(L)):
        sign = 1
        for a in range(L):
            for b in range(a + 1, L):
                if perm[a] > perm[b]:
                    sign = -sign
        term = MonomialPolynomial.constant(N, sign)
        for i in range(L):
            e = entry(i, perm[i])
            if not e:
                term = zero
                break
            term = term * e
        total = total + term
    out = {}
    for e, c in total.terms.items():
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError("internal error: non-integral plethysm coefficient")
        out[e] = int(c)
    return MonomialPolynomial(N, out)


def _cap(cap):
    return env_cap(PLETHYSM_CAP) if cap is None else cap


@lru_cache(maxsize=None)
def _plethysm_cached(lam: Partition, mu: Partition) -> SymmetricFunction:
    d = lam.size() * mu.size()
    N = max(d, 1)
    inner = schur_in_monomials(mu, N)
    return to_schur_basis(schur_of_alphabet(lam, inner), d)


def plethysm(lam, mu, cap: int | None = None) -> SymmetricFunction:
    """Full Schur expansion of ``s_lam[s_mu]``."""
    lam, mu = as_partition(lam), as_partition(mu)
    cap = _cap(cap)
    if lam.size() * mu.size() > cap:
        raise ResourceCapExceeded(f"|lam|*|mu| = {lam.size() * mu.size()} exceeds cap {cap}")
    return _plethysm_cached(lam, mu)


def plethysm_constant(lam, mu, pi, cap: int | None = None) -> int:
    lam, mu, pi = map(as_partition, (lam, mu, pi))
    if pi.size() != lam.size() * mu.size():
        return 0
    return plethysm(lam, mu, cap)[pi]


def plethysm_nonvanishing(lam, mu, pi, cap: int | None = None) -> bool:
    """Brute-force oracle (exponential), not a polynomial-time decision procedure."""
    return plethysm_constant(lam, mu, pi, cap) > 0


def plethysm_stretching_values(lam, mu, pi, k_max: int, cap: int | None = None) -> list[int]:
    """``[a(k lam, mu, k pi) for k in 1..k_max]``; ``mu`` is not stretched."""
    lam, mu, pi = map(as_partition, (lam, mu, pi))
    if pi.size() != lam.size() * mu.size():
        raise ValueError("size mismatch: |pi| must equal |lam|*|mu|")
    cap = _cap(cap)
    if k_max * lam.size() * mu.size() > cap:
        raise ResourceCapExceeded(
            f"k_max*|lam|*|mu| = {k_max * lam.size() * mu.size()} exceeds cap {cap}")
    return [plethysm_constant(lam.scaled(k), mu, pi.scaled(k), cap) for k in range(1, k_max + 1)]
