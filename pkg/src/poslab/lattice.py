"""Smith normal form and integer solutions of linear systems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(f"{len(entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        A, B = self.to_rows(), other.to_rows()
        out = [[sum(A[i][k] * B[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntegerMatrix.from_rows(out, other.cols)

    def apply(self, v: Sequence[int]) -> list[int]:
        return [sum(a * x for a, x in zip(row, v)) for row in self.to_rows()]

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def smith_normal_form(A: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative entries
    and ``D[i,i]`` divides ``D[i+1,i+1]``. Pivots are chosen by minimal
    absolute value among the remaining block.
    """
    m, n = A.rows, A.cols
    D = A.to_rows()
    U = IntegerMatrix.identity(m).to_rows()
    V = IntegerMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row_dst += f * row_src
        D[dst] = [a + f * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, f):  # col_dst += f * col_src
        for row in D:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    if D[t][j]:
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if t < min(m, n) and D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    return (IntegerMatrix.from_rows(U, m), IntegerMatrix.from_rows(D, n),
            IntegerMatrix.from_rows(V, n))


def rank_of_snf(D: IntegerMatrix) -> int:
    return sum(1 for v in D.diagonal() if v)


def solve_integer(A: IntegerMatrix, b: Sequence[int]) -> Optional[list[int]]:
    """Some integer ``x`` with ``A x = b``, or ``None`` when none exists."""
    if len(b) != A.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {A.rows} rows")
    sol = _particular_and_kernel(A, b)
    return None if sol is None else sol[0]


def _particular_and_kernel(A: IntegerMatrix, b: Sequence[int]):
    U, D, V = smith_normal_form(A)
    c = U.apply(list(b))
    diag = D.diagonal()
    r = rank_of_snf(D)
    y = [0] * A.cols
    for i in range(A.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    x = V.apply(y)
    Vr = V.to_rows()
    kernel = [[Vr[i][j] for i in range(A.cols)] for j in range(r, A.cols)]
    return x, kernel


def integer_solution_lattice(A: IntegerMatrix, b: Sequence[int]):
    """``(x0, K)`` so that integer solutions of ``A x = b`` are exactly ``x0 + sum t_j K[j]``.

    Returns ``None`` if there are no integer solutions. ``K`` is a basis of
    the integer kernel lattice.
    """
    return _particular_and_kernel(A, b)
