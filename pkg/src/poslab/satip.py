"""Integer-point existence for polytopes with saturated Ehrhart quasi-polynomials.

Only linear programming and Smith normal forms are used:

1. an empty ``P`` has no integer point;
2. otherwise take the implicit equalities of ``P`` (its affine hull) as an
   integer system ``A x = b``;
3. if that system has no integer solution the affine hull misses the
   lattice, so ``P`` has no integer point;
4. otherwise some dilation of ``P`` meets the lattice, so the Ehrhart
   function is not identically zero, and the saturation promise forces
   ``f(1) != 0``.

The promise is a caller contract and is not checked.
"""

from __future__ import annotations

from typing import Optional

from . import kernels
from .lattice import IntegerMatrix, integer_solution_lattice, solve_integer
from .polyhedra import (RationalPolytope, affine_hull, coordinate_bounds,
                        integer_rows, is_feasible)

CONTRACT = "saturated"
CONTRACT_NOTE = "result valid under saturation hypothesis"


def _hull_system(P: RationalPolytope):
    A, b = integer_rows(affine_hull(P))
    return IntegerMatrix.from_rows(A, P.dim), b


def decide_saturated_ip(P: RationalPolytope) -> bool:
    feasible, _ = is_feasible(P)
    if not feasible:
        return False
    A, b = _hull_system(P)
    return solve_integer(A, b) is not None


def find_integer_point(P: RationalPolytope) -> Optional[tuple[int, ...]]:
    """An integer point of a bounded ``P``, or ``None``.

    The integer solutions of the affine hull are parametrized as
    ``x0 + K t``; the search then runs over integer ``t`` in the reduced
    polytope, which is full-dimensional in those coordinates.
    """
    # boundedness check (raises on unbounded input)
    if coordinate_bounds(P) is None:
        return None
    A, b = _hull_system(P)
    sol = integer_solution_lattice(A, b)
    if sol is None:
        return None
    x0, K = sol
    r = len(K)
    rows = []
    for a, rhs in P.inequalities:
        ax0 = sum(c * v for c, v in zip(a, x0))
        rows.append((tuple(sum(c * k[i] for i, c in enumerate(a)) for k in K), rhs - ax0))
    reduced = RationalPolytope(r, tuple(rows))
    bounds = coordinate_bounds(reduced)
    if bounds is None:
        return None
    iA, ib = integer_rows(reduced.inequalities)
    t = kernels.first_point(iA, ib, [l for l, _ in bounds], [h for _, h in bounds])
    if t is None:
        return None
    x = tuple(x0[i] + sum(tj * k[i] for tj, k in zip(t, K)) for i in range(P.dim))
    if not P.contains(x):
        raise AssertionError(f"internal error: {x} is not in the polytope")
    return x
