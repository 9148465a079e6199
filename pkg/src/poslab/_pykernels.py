"""Pure-Python lattice-point kernels (fallback for the compiled ``_kernels``).

Both backends share one contract. The system is ``rows[r] . x <= rhs[r]``
with integer data, searched inside the integer box ``lo <= x <= hi``.
Coordinates are fixed left to right; at each depth the admissible interval
for the next coordinate is derived from every row touching it, using the
minimum the still-free coordinates can contribute over the box.
"""

from __future__ import annotations


def _tail_minima(rows, lo, hi):
    d = len(lo)
    tails = []
    for row in rows:
        t = [0] * (d + 1)
        acc = 0
        for j in range(d - 1, -1, -1):
            a = row[j]
            acc += a * lo[j] if a > 0 else a * hi[j]
            t[j] = acc
        tails.append(t)
    return tails


def _search(rows, rhs, lo, hi, count_only, want_first):
    d = len(lo)
    m = len(rows)
    if any(l > h for l, h in zip(lo, hi)):
        return 0, None
    tails = _tail_minima(rows, lo, hi)
    for r in range(m):
        if tails[r][0] > rhs[r]:
            return 0, None
    if d == 0:
        return 1, []
    by_col = [[(r, rows[r][i]) for r in range(m) if rows[r][i]] for i in range(d)]
    partial = [0] * m
    x = [0] * d
    total = 0

    def interval(i):
        low, high = lo[i], hi[i]
        for r, a in by_col[i]:
            slack = rhs[r] - partial[r] - tails[r][i + 1]
            if a > 0:
                high = min(high, slack // a)
            else:
                low = max(low, -(slack // -a))
        return low, high

    def rec(i):
        nonlocal total
        low, high = interval(i)
        if low > high:
            return None
        if i == d - 1:
            if want_first:
                x[i] = low
                return list(x)
            total += high - low + 1
            return None
        col = by_col[i]
        for v in range(low, high + 1):
            x[i] = v
            for r, a in col:
                partial[r] += a * v
            found = rec(i + 1)
            for r, a in col:
                partial[r] -= a * v
            if found is not None:
                return found
        return None

    first = rec(0)
    return total, first


def count_points(rows, rhs, lo, hi) -> int:
    """Number of integer points of the system inside the box."""
    return _search(rows, rhs, lo, hi, True, False)[0]


def first_point(rows, rhs, lo, hi):
    """Lexicographically smallest integer point, or ``None``."""
    total, first = _search(rows, rhs, lo, hi, False, True)
    if len(lo) == 0:
        return [] if total else None
    return first
