"""Exact rational polytopes in H-representation.

All arithmetic uses :class:`fractions.Fraction`. Linear programs are solved
by a two-phase tableau simplex with Bland's rule, so every optimum and
witness is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels

Rational = Fraction


class PolytopeError(ValueError):
    pass


class InfeasibleError(PolytopeError):
    pass


class UnboundedError(PolytopeError):
    """Raised when an objective or a coordinate is unbounded over the set."""


def to_rational(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q'")
    return Fraction(v)


def _row(coeffs, rhs) -> tuple[tuple[Fraction, ...], Fraction]:
    return tuple(to_rational(c) for c in coeffs), to_rational(rhs)


@dataclass(frozen=True)
class RationalPolytope:
    """``{x : a.x <= b for (a, b) in inequalities, a.x == b for (a, b) in equalities}``."""

    dim: int
    inequalities: tuple = ()
    equalities: tuple = ()

    def __post_init__(self):
        ineq = tuple(_row(a, b) for a, b in self.inequalities)
        eq = tuple(_row(a, b) for a, b in self.equalities)
        for a, _ in ineq + eq:
            if len(a) != self.dim:
                raise PolytopeError(f"row of length {len(a)} in a {self.dim}-dimensional system")
        object.__setattr__(self, "inequalities", ineq)
        object.__setattr__(self, "equalities", eq)

    @classmethod
    def box(cls, lower: Sequence, upper: Sequence) -> "RationalPolytope":
        d = len(lower)
        rows = []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            rows.append((e, upper[i]))
            e = [0] * d
            e[i] = -1
            rows.append((e, -to_rational(lower[i])))
        return cls(d, tuple(rows))

    def contains(self, x: Sequence) -> bool:
        x = [to_rational(v) for v in x]
        if any(sum(a * v for a, v in zip(row, x)) > b for row, b in self.inequalities):
            return False
        return all(sum(a * v for a, v in zip(row, x)) == b for row, b in self.equalities)

    def normalized(self) -> "RationalPolytope":
        """Canonical form: each row scaled to coprime integers, rows sorted, duplicates dropped.

        Equalities are also sign-normalized so the first nonzero coefficient is positive.
        """
        ineq = sorted({_primitive(a, b) for a, b in self.inequalities})
        eq = set()
        for a, b in self.equalities:
            a2, b2 = _primitive(a, b)
            lead = next((c for c in a2 if c), 0)
            if lead < 0:
                a2, b2 = tuple(-c for c in a2), -b2
            eq.add((a2, b2))
        return RationalPolytope(self.dim, tuple(ineq), tuple(sorted(eq)))

    def to_json(self) -> dict:
        def enc(rows):
            return [[_fmt(c) for c in a] + [_fmt(b)] for a, b in rows]
        return {"dim": self.dim, "ineq": enc(self.inequalities), "eq": enc(self.equalities)}

    @classmethod
    def from_json(cls, data: dict) -> "RationalPolytope":
        def dec(rows):
            out = []
            for row in rows:
                vals = [Fraction(str(v)) for v in row]
                out.append((vals[:-1], vals[-1]))
            return tuple(out)
        return cls(int(data["dim"]), dec(data.get("ineq", [])), dec(data.get("eq", [])))


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _primitive(a, b) -> tuple[tuple[int, ...], int]:
    """Scale a row by a positive factor to coprime integer coefficients."""
    vals = list(a) + [b]
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def integer_rows(rows) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row (positive scaling, inequality direction kept)."""
    A, b = [], []
    for a, rhs in rows:
        vals = list(a) + [rhs]
        den = math.lcm(*(Fraction(v).denominator for v in vals)) if vals else 1
        ints = [int(Fraction(v) * den) for v in vals]
        A.append(ints[:-1])
        b.append(ints[-1])
    return A, b


@dataclass(frozen=True)
class LpOutcome:
    status: str  # "feasible" or "infeasible"
    witness: Optional[tuple[Fraction, ...]] = None
    optimum: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


class _Tableau:
    """Dense simplex tableau for ``min c.y`` s.t. ``M y = r``, ``y >= 0``.

    Rows hold ``[coefficients..., rhs]``. ``basis[i]`` is the column basic in
    row ``i``.
    """

    def __init__(self, rows, basis, width):
        self.rows = rows
        self.basis = basis
        self.width = width

    def copy(self) -> "_Tableau":
        return _Tableau([list(r) for r in self.rows], list(self.basis), self.width)

    def pivot(self, i, j):
        rows = self.rows
        piv_row = rows[i]
        p = piv_row[j]
        if p != 1:
            piv_row[:] = [v / p if v else v for v in piv_row]
        nz = [(k, v) for k, v in enumerate(piv_row) if v]
        for k, row in enumerate(rows):
            if k != i:
                f = row[j]
                if f:
                    for c, v in nz:
                        row[c] -= f * v
        self.basis[i] = j

    def run(self, cost, allowed):
        """Minimize ``cost`` over columns ``< allowed`` (Bland's rule).

        Returns False if the objective is unbounded below.
        """
        while True:
            cb = [(cost[b], row) for b, row in zip(self.basis, self.rows) if cost[b]]
            entering = None
            for j in range(allowed):
                z = cost[j]
                for ci, row in cb:
                    if row[j]:
                        z -= ci * row[j]
                if z < 0:
                    entering = j
                    break
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)

    def value(self, j):
        for i, b in enumerate(self.basis):
            if b == j:
                return self.rows[i][-1]
        return Fraction(0)


class LinearProgram:
    """A feasibility-checked LP over ``P`` that can be optimized repeatedly.

    Phase 1 runs once on construction; each :meth:`optimize` call starts
    phase 2 from a copy of the resulting feasible basis.
    """

    def __init__(self, P: RationalPolytope):
        self.dim = d = P.dim
        self.feasible = True
        ineq, eq = [], []
        for a, b in P.inequalities:
            if any(a):
                ineq.append((a, b))
            elif b < 0:
                self.feasible = False
        for a, b in P.equalities:
            if any(a):
                eq.append((a, b))
            elif b != 0:
                self.feasible = False
        self._tab = None
        if not self.feasible or d == 0:
            return

        # columns: x+ (d), x- (d), slacks (one per inequality), artificials
        n_slack = len(ineq)
        n = 2 * d + n_slack
        zero = Fraction(0)
        rows, needs_art = [], []
        for k, (a, b) in enumerate(ineq):
            row = list(a) + [-v for v in a] + [zero] * n_slack
            row[2 * d + k] = Fraction(1)
            if b < 0:
                row = [-v for v in row]
                needs_art.append(True)
            else:
                needs_art.append(False)
            rows.append((row, abs(b)))
        for a, b in eq:
            row = list(a) + [-v for v in a] + [zero] * n_slack
            if b < 0:
                row = [-v for v in row]
            rows.append((row, abs(b)))
            needs_art.append(True)
        n_art = sum(needs_art)
        width = n + n_art
        full, basis = [], []
        art = n
        for k, ((row, b), flag) in enumerate(zip(rows, needs_art)):
            ext = row + [zero] * n_art
            if flag:
                ext[art] = Fraction(1)
                basis.append(art)
                art += 1
            else:
                basis.append(2 * d + k)
            full.append(ext + [b])
        tab = _Tableau(full, basis, width)
        if n_art:
            tab.run([zero] * n + [Fraction(1)] * n_art, width)
            if any(tab.value(j) != 0 for j in range(n, width)):
                self.feasible = False
                return
            i = 0
            while i < len(tab.rows):
                if tab.basis[i] >= n:
                    j = next((j for j in range(n) if tab.rows[i][j] != 0), None)
                    if j is None:
                        del tab.rows[i]
                        del tab.basis[i]
                        continue
                    tab.pivot(i, j)
                i += 1
        self._n = n
        self._width = width
        self._tab = tab

    def _point(self, tab) -> tuple[Fraction, ...]:
        d = self.dim
        vals = [Fraction(0)] * (2 * d)
        for b, row in zip(tab.basis, tab.rows):
            if b < 2 * d:
                vals[b] = row[-1]
        return tuple(vals[j] - vals[d + j] for j in range(d))

    def witness(self) -> Optional[tuple[Fraction, ...]]:
        if not self.feasible:
            return None
        if self.dim == 0:
            return ()
        return self._point(self._tab)

    def optimize(self, objective, maximize: bool):
        """``(status, witness, optimum)`` with status feasible/infeasible/unbounded."""
        if not self.feasible:
            return "infeasible", None, None
        c = [to_rational(v) for v in objective]
        if self.dim == 0:
            return "feasible", (), Fraction(0)
        tab = self._tab.copy()
        sign = -1 if maximize else 1
        d = self.dim
        cost = ([sign * v for v in c] + [-sign * v for v in c]
                + [Fraction(0)] * (self._width - 2 * d))
        if not tab.run(cost, self._n):
            return "unbounded", None, None
        x = self._point(tab)
        opt = sum((a * v for a, v in zip(c, x)), Fraction(0))
        return "feasible", x, opt


def _solve(P: RationalPolytope, objective, maximize):
    return LinearProgram(P).optimize(objective, maximize)


def lp_optimize(P: RationalPolytope, objective: Sequence, sense: str = "max") -> LpOutcome:
    """Exact optimum of ``objective . x`` over ``P``.

    Raises:
        UnboundedError: the objective is unbounded in the requested direction.
    """
    if len(objective) != P.dim:
        raise PolytopeError(f"objective of length {len(objective)} for dim {P.dim}")
    if sense not in ("max", "min"):
        raise PolytopeError(f"sense must be 'max' or 'min', got {sense!r}")
    status, x, opt = _solve(P, objective, sense == "max")
    if status == "unbounded":
        raise UnboundedError(f"objective unbounded ({sense})")
    if status == "infeasible":
        return LpOutcome("infeasible")
    return LpOutcome("feasible", x, opt)


def is_feasible(P: RationalPolytope) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    out = lp_optimize(P, [0] * P.dim)
    return out.feasible, out.witness


def affine_hull(P: RationalPolytope) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Equality system cutting out the affine hull of a nonempty ``P``.

    Declared equalities come first, followed by every inequality whose slack
    is identically zero on ``P``.
    """
    if not is_feasible(P)[0]:
        raise InfeasibleError("affine hull of an empty polytope")
    system = list(P.equalities)
    for a, b in P.inequalities:
        if not any(a):
            if b == 0:
                system.append((a, b))
            continue
        try:
            out = lp_optimize(P, a, "min")
        except UnboundedError:
            continue
        if out.optimum == b:
            system.append((a, b))
    return system


def dilate(P: RationalPolytope, k: int) -> RationalPolytope:
    if k < 1:
        raise PolytopeError("dilation factor must be a positive integer")
    return RationalPolytope(
        P.dim,
        tuple((a, b * k) for a, b in P.inequalities),
        tuple((a, b * k) for a, b in P.equalities),
    )


def coordinate_bounds(P: RationalPolytope) -> Optional[list[tuple[int, int]]]:
    """Integer box ``[ceil(min x_i), floor(max x_i)]`` per coordinate; ``None`` if empty.

    Raises:
        UnboundedError: some coordinate is unbounded.
    """
    lp = LinearProgram(P)
    if not lp.feasible:
        return None
    bounds = []
    for i in range(P.dim):
        e = [0] * P.dim
        e[i] = 1
        s_hi, _, hi = lp.optimize(e, True)
        s_lo, _, lo = lp.optimize(e, False)
        if "unbounded" in (s_hi, s_lo):
            raise UnboundedError(f"coordinate {i} is unbounded")
        bounds.append((math.ceil(lo), math.floor(hi)))
    return bounds


def _kernel_system(P: RationalPolytope):
    rows = list(P.inequalities)
    for a, b in P.equalities:
        rows.append((a, b))
        rows.append((tuple(-v for v in a), -b))
    return integer_rows(rows)


def count_lattice_points(P: RationalPolytope, backend: Optional[str] = None) -> int:
    """Exact number of integer points in a bounded ``P``."""
    bounds = coordinate_bounds(P)
    if bounds is None:
        return 0
    A, b = _kernel_system(P)
    lo = [l for l, _ in bounds]
    hi = [h for _, h in bounds]
    return kernels.count_points(A, b, lo, hi, backend=backend)


def first_lattice_point(P: RationalPolytope, backend: Optional[str] = None) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest integer point of a bounded ``P``."""
    bounds = coordinate_bounds(P)
    if bounds is None:
        return None
    A, b = _kernel_system(P)
    found = kernels.first_point(A, b, [l for l, _ in bounds], [h for _, h in bounds],
                                backend=backend)
    return None if found is None else tuple(found)


def ehrhart_values(P: RationalPolytope, k_max: int) -> list[int]:
    """``[#(kP ∩ Z^d) for k in 1..k_max]``."""
    return [count_lattice_points(dilate(P, k)) for k in range(1, k_max + 1)]
