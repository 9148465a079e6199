"""Irreducible characters of the symmetric group and Kronecker coefficients."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Partition, as_partition, partitions_of
from .errors import ResourceCapExceeded, env_cap

# Cap on k*n for stretched Kronecker coefficients.
KRONECKER_STRETCH_CAP = 24


class SizeMismatch(ValueError):
    pass


def _check_same_size(*parts: Partition) -> int:
    sizes = {p.size() for p in parts}
    if len(sizes) != 1:
        raise SizeMismatch(f"partitions of different sizes: {[list(p) for p in parts]}")
    return sizes.pop()


def z_lambda(mu) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    out = 1
    for part, mult in Counter(as_partition(mu)).items():
        out *= part ** mult * math.factorial(mult)
    return out


def class_size(mu, n: int | None = None) -> int:
    mu = as_partition(mu)
    if n is not None and mu.size() != n:
        raise SizeMismatch(f"cycle type {list(mu)} is not a partition of {n}")
    return math.factorial(mu.size()) // z_lambda(mu)


def _beta_set(lam: Partition) -> tuple[int, ...]:
    L = len(lam)
    return tuple(lam[i] + (L - 1 - i) for i in range(L))


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    return Partition(b - (L - 1 - i) for i, b in enumerate(beta))


def rim_hooks(lam: Partition, r: int):
    """``(shape after removal, height)`` for every border strip of size ``r``.

    Uses beta-numbers: removing an ``r``-strip moves a bead from ``b`` to
    the empty position ``b - r``; the height is the number of beads jumped.
    """
    beta = _beta_set(lam)
    occupied = set(beta)
    out = []
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beta if t < c < b)
        out.append((_from_beta([t if c == b else c for c in beta]), height))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], Partition(mu[1:])
    total = 0
    for shape, height in rim_hooks(lam, r):
        total += (-1) ** height * _mn(shape, rest)
    return total


def character(lam, mu) -> int:
    """``chi_lam(mu)`` by the Murnaghan-Nakayama rule (memoized)."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_same_size(lam, mu)
    return _mn(lam, mu)


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: dict

    @classmethod
    def irreducible(cls, lam) -> "ClassFunction":
        lam = as_partition(lam)
        n = lam.size()
        return cls(n, {mu: character(lam, mu) for mu in partitions_of(n)})

    def inner(self, other: "ClassFunction") -> int:
        """``<f, g> = (1/n!) sum_mu |C_mu| f(mu) g(mu)`` (characters are real)."""
        total = sum(class_size(mu) * self.values[mu] * other.values[mu] for mu in self.values)
        q, r = divmod(total, math.factorial(self.n))
        if r:
            raise ArithmeticError("inner product is not an integer")
        return q


def character_table(n: int) -> tuple[list[Partition], list[list[int]]]:
    parts = list(partitions_of(n))
    return parts, [[character(lam, mu) for mu in parts] for lam in parts]


def dimension(lam) -> int:
    lam = as_partition(lam)
    return character(lam, Partition([1] * lam.size()))


def kronecker(alpha, beta, gamma) -> int:
    """Multiplicity of ``S_gamma`` in ``S_alpha ⊗ S_beta`` by the character formula."""
    alpha, beta, gamma = map(as_partition, (alpha, beta, gamma))
    n = _check_same_size(alpha, beta, gamma)
    total = 0
    for mu in partitions_of(n):
        ca = _mn(alpha, mu)
        if not ca:
            continue
        cb = _mn(beta, mu)
        if not cb:
            continue
        total += class_size(mu) * ca * cb * _mn(gamma, mu)
    q, r = divmod(total, math.factorial(n))
    if r:
        raise ArithmeticError(f"internal error: character sum {total} not divisible by {n}!")
    return q


def kronecker_stretching_values(alpha, beta, gamma, k_max: int,
                                cap: int | None = None) -> list[int]:
    """``[kronecker(k alpha, k beta, k gamma) for k in 1..k_max]``.

    All three partitions are stretched (a convention of this library).
    """
    alpha, beta, gamma = map(as_partition, (alpha, beta, gamma))
    n = _check_same_size(alpha, beta, gamma)
    if cap is None:
        cap = env_cap(KRONECKER_STRETCH_CAP)
    if k_max * n > cap:
        raise ResourceCapExceeded(f"k_max * n = {k_max * n} exceeds cap {cap}")
    return [kronecker(alpha.scaled(k), beta.scaled(k), gamma.scaled(k))
            for k in range(1, k_max + 1)]
