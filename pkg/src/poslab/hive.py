"""Hive polytopes: Littlewood-Richardson coefficients as lattice-point counts.

A hive of size ``n`` labels the vertices ``(i, j)``, ``i, j >= 0``,
``i + j <= n`` of a triangular grid. The boundary is fixed by the three
partitions::

    h(i, 0)     = alpha_1 + ... + alpha_i
    h(n - j, j) = |alpha| + beta_1 + ... + beta_j
    h(0, j)     = gamma_1 + ... + gamma_j

For every unit rhombus the labels on the short diagonal (obtuse corners)
must sum to at least the labels on the long diagonal (acute corners).
Interior labels are the polytope coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .combinatorics import Partition, as_partition
from .polyhedra import (RationalPolytope, count_lattice_points, dilate,
                        first_lattice_point, is_feasible)


class SizeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class HiveBoundary:
    n: int
    alpha: Partition
    beta: Partition
    gamma: Partition

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_partition(getattr(self, name)))
        if self.gamma.size() != self.alpha.size() + self.beta.size():
            raise SizeMismatch(
                f"size mismatch: |gamma|={self.gamma.size()} != "
                f"|alpha|+|beta|={self.alpha.size() + self.beta.size()}")
        if self.n < max(len(self.alpha), len(self.beta), len(self.gamma), 1):
            raise ValueError(f"hive side {self.n} too small for the partitions")

    @classmethod
    def of(cls, alpha, beta, gamma, n: Optional[int] = None) -> "HiveBoundary":
        alpha, beta, gamma = map(as_partition, (alpha, beta, gamma))
        if n is None:
            n = max(len(alpha), len(beta), len(gamma), 1)
        return cls(n, alpha, beta, gamma)

    def values(self) -> dict[tuple[int, int], int]:
        n = self.n
        a, b, g = self.alpha.padded(n), self.beta.padded(n), self.gamma.padded(n)
        h = {}
        acc = 0
        for i in range(n + 1):
            h[(i, 0)] = acc
            if i < n:
                acc += a[i]
        for j in range(n + 1):
            h[(n - j, j)] = acc
            if j < n:
                acc += b[j]
        acc = 0
        for j in range(n + 1):
            h[(0, j)] = acc
            if j < n:
                acc += g[j]
        return h


def interior_vertices(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, n - i)]


def rhombi(n: int) -> list[tuple[tuple, tuple, tuple, tuple]]:
    """Unit rhombi as ``(obtuse1, obtuse2, acute1, acute2)``."""
    inside = lambda v: v[0] >= 0 and v[1] >= 0 and v[0] + v[1] <= n
    out = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            candidates = [
                ((i + 1, j), (i, j + 1), (i, j), (i + 1, j + 1)),
                ((i, j), (i + 1, j), (i, j + 1), (i + 1, j - 1)),
                ((i, j), (i, j + 1), (i + 1, j), (i - 1, j + 1)),
            ]
            for rh in candidates:
                if all(inside(v) for v in rh):
                    out.append(rh)
    return out


def hive_polytope(bd: HiveBoundary) -> RationalPolytope:
    """Rhombus inequalities in the interior labels, boundary labels substituted."""
    n = bd.n
    coords = {v: k for k, v in enumerate(interior_vertices(n))}
    fixed = bd.values()
    d = len(coords)
    rows = []
    for ob1, ob2, ac1, ac2 in rhombi(n):
        # acute1 + acute2 - obtuse1 - obtuse2 <= 0
        coeffs = [0] * d
        rhs = 0
        for v, s in ((ac1, 1), (ac2, 1), (ob1, -1), (ob2, -1)):
            if v in coords:
                coeffs[coords[v]] += s
            else:
                rhs -= s * fixed[v]
        rows.append((coeffs, rhs))
    return RationalPolytope(d, tuple(rows))


def expand_hive(bd: HiveBoundary, point) -> dict[tuple[int, int], Fraction]:
    """Full vertex labelling from interior coordinates."""
    h = {v: Fraction(x) for v, x in bd.values().items()}
    for v, x in zip(interior_vertices(bd.n), point):
        h[v] = Fraction(x)
    return h


def is_hive(n: int, h: dict) -> bool:
    return all(h[o1] + h[o2] >= h[a1] + h[a2] for o1, o2, a1, a2 in rhombi(n))


def _boundary_or_none(alpha, beta, gamma, n=None) -> Optional[HiveBoundary]:
    try:
        return HiveBoundary.of(alpha, beta, gamma, n)
    except SizeMismatch:
        return None


def lr_via_hive(alpha, beta, gamma) -> int:
    bd = _boundary_or_none(alpha, beta, gamma)
    if bd is None:
        return 0
    return count_lattice_points(hive_polytope(bd))


def lr_nonvanishing(alpha, beta, gamma) -> bool:
    """Decide ``c > 0`` by LP feasibility of the hive polytope alone.

    Exactness relies on saturation: the hive polytope is nonempty iff some
    dilation has an integer point iff the coefficient itself is positive.
    """
    bd = _boundary_or_none(alpha, beta, gamma)
    if bd is None:
        return False
    return is_feasible(hive_polytope(bd))[0]


def some_hive(alpha, beta, gamma) -> Optional[dict[tuple[int, int], int]]:
    """An integer hive with the given boundary, if any."""
    bd = _boundary_or_none(alpha, beta, gamma)
    if bd is None:
        return None
    pt = first_lattice_point(hive_polytope(bd))
    if pt is None:
        return None
    return {v: int(x) for v, x in expand_hive(bd, pt).items()}


def lr_stretching_values(alpha, beta, gamma, k_max: int) -> list[int]:
    """``[c(k alpha, k beta, k gamma) for k in 1..k_max]`` via dilated hive polytopes."""
    bd = HiveBoundary.of(alpha, beta, gamma)
    P = hive_polytope(bd)
    return [count_lattice_points(dilate(P, k)) for k in range(1, k_max + 1)]
