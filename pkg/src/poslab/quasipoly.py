"""Quasi-polynomials with exact rational coefficients.

Residue classes are indexed ``1..period``: ``f(k) = constituents[i-1](k)``
where ``k ≡ i (mod period)`` and ``i`` is in ``1..period``. So ``f(1)``
always comes from the first constituent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class FitError(ValueError):
    pass


class InsufficientData(FitError):
    pass


class DoesNotFit(FitError):
    pass


class NotDetected(FitError):
    pass


def _trim(coeffs) -> tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[Fraction], k) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    constituents: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        cons = tuple(_trim(c) for c in self.constituents)
        if len(cons) != self.period:
            raise ValueError(f"{len(cons)} constituents for period {self.period}")
        object.__setattr__(self, "constituents", cons)

    @classmethod
    def polynomial(cls, coeffs) -> "QuasiPolynomial":
        return cls(1, (tuple(coeffs),))

    def constituent(self, k: int) -> tuple[Fraction, ...]:
        i = (k - 1) % self.period  # k ≡ i+1 with i+1 in 1..period
        return self.constituents[i]

    def __call__(self, k: int) -> Fraction:
        return evaluate(self, k)

    def degree(self) -> int:
        return max((len(c) - 1 for c in self.constituents), default=-1)

    def to_json(self) -> dict:
        fmt = lambda v: str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return {"period": self.period,
                "constituents": [[fmt(c) for c in cons] for cons in self.constituents]}

    @classmethod
    def from_json(cls, data: dict) -> "QuasiPolynomial":
        return cls(int(data["period"]),
                   tuple(tuple(Fraction(str(c)) for c in cons) for cons in data["constituents"]))

    def __str__(self) -> str:
        def show(coeffs):
            if not coeffs:
                return "0"
            terms = []
            for p, c in enumerate(coeffs):
                if c:
                    terms.append(str(c) if p == 0 else f"{c}*k" + (f"^{p}" if p > 1 else ""))
            return " + ".join(terms)
        if self.period == 1:
            return show(self.constituents[0])
        return "; ".join(f"k≡{i + 1}: {show(c)}" for i, c in enumerate(self.constituents))


def evaluate(f: QuasiPolynomial, k: int) -> Fraction:
    if k < 1:
        raise ValueError("quasi-polynomials are evaluated at k >= 1")
    return poly_eval(f.constituent(k), k)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def interpolate(points: Sequence[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the Lagrange interpolant through ``points``."""
    total = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = _poly_mul(basis, [Fraction(-xj), Fraction(1)])
                denom *= xi - xj
        scale = Fraction(yi) / denom
        for p, c in enumerate(basis):
            total[p] += scale * c
    return _trim(total)


def _classes(values, period):
    """Sample points of each residue class, ``k`` starting at 1."""
    out = [[] for _ in range(period)]
    for idx, v in enumerate(values):
        k = idx + 1
        out[(k - 1) % period].append((k, v))
    return out


def fit(values: Sequence[int], period: int, degree: int, min_holdout: int = 0) -> QuasiPolynomial:
    """Interpolate each residue class on its first ``degree+1`` points and check the rest.

    Raises:
        InsufficientData: fewer than ``period*(degree+1)`` values, or a class
            with fewer than ``degree+1+min_holdout`` points.
        DoesNotFit: a held-out value disagrees with the interpolant.
    """
    if period < 1 or degree < 0:
        raise ValueError("period must be >= 1 and degree >= 0")
    if len(values) < period * (degree + 1):
        raise InsufficientData(
            f"need {period * (degree + 1)} values for period {period}, degree {degree}")
    constituents = []
    for pts in _classes(values, period):
        if len(pts) < degree + 1 + min_holdout:
            raise InsufficientData(f"residue class with only {len(pts)} points")
        coeffs = interpolate(pts[:degree + 1])
        for k, v in pts[degree + 1:]:
            if poly_eval(coeffs, k) != v:
                raise DoesNotFit(f"value at k={k} is {v}, interpolant gives {poly_eval(coeffs, k)}")
        constituents.append(coeffs)
    return QuasiPolynomial(period, tuple(constituents))


def detect(values: Sequence[int], max_period: int = 6, max_degree: int = 8,
           min_holdout: int = 2) -> tuple[int, int, QuasiPolynomial]:
    """Smallest ``(period, degree)`` that fits with ``min_holdout`` checks per class.

    The holdout requirement is a heuristic guard against overfitting, not a proof.
    """
    for period in range(1, max_period + 1):
        for degree in range(0, max_degree + 1):
            try:
                return period, degree, fit(values, period, degree, min_holdout)
            except FitError:
                continue
    raise NotDetected("no quasi-polynomial structure detected within bounds "
                      f"(period <= {max_period}, degree <= {max_degree})")


def is_positive(f: QuasiPolynomial) -> bool:
    return all(c >= 0 for cons in f.constituents for c in cons)


def is_saturated(f: QuasiPolynomial) -> bool:
    """Either the first constituent is identically zero or ``f(1) != 0``."""
    first = f.constituents[0]
    if not first:
        return True
    return evaluate(f, 1) != 0
