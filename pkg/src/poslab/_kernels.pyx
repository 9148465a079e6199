# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point kernels; same contract as ``poslab._pykernels``."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 floor_div(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef inline i64 ceil_div(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a > 0):
        q += 1
    return q


cdef struct Problem:
    int d
    int m
    i64* A          # m x d, row-major
    i64* b          # m
    i64* lo         # d
    i64* hi         # d
    i64* tails      # m x (d + 1)
    i64* partial    # m
    i64* x          # d


cdef int _interval(Problem* p, int i, i64* low, i64* high) nogil:
    cdef int r
    cdef i64 a, slack, lo_i = p.lo[i], hi_i = p.hi[i]
    for r in range(p.m):
        a = p.A[r * p.d + i]
        if a == 0:
            continue
        slack = p.b[r] - p.partial[r] - p.tails[r * (p.d + 1) + i + 1]
        if a > 0:
            slack = floor_div(slack, a)
            if slack < hi_i:
                hi_i = slack
        else:
            slack = ceil_div(-slack, -a)
            if slack > lo_i:
                lo_i = slack
    low[0] = lo_i
    high[0] = hi_i
    return lo_i <= hi_i


cdef i64 _count(Problem* p, int i) nogil:
    cdef i64 low, high, v, total = 0
    cdef int r
    if not _interval(p, i, &low, &high):
        return 0
    if i == p.d - 1:
        return high - low + 1
    v = low
    while v <= high:
        for r in range(p.m):
            p.partial[r] += p.A[r * p.d + i] * v
        total += _count(p, i + 1)
        for r in range(p.m):
            p.partial[r] -= p.A[r * p.d + i] * v
        v += 1
    return total


cdef int _first(Problem* p, int i) nogil:
    cdef i64 low, high, v
    cdef int r, found
    if not _interval(p, i, &low, &high):
        return 0
    if i == p.d - 1:
        p.x[i] = low
        return 1
    v = low
    while v <= high:
        p.x[i] = v
        for r in range(p.m):
            p.partial[r] += p.A[r * p.d + i] * v
        found = _first(p, i + 1)
        for r in range(p.m):
            p.partial[r] -= p.A[r * p.d + i] * v
        if found:
            return 1
        v += 1
    return 0


cdef int _setup(Problem* p, rows, rhs, lo, hi) except -1:
    cdef int r, j, d = len(lo), m = len(rows)
    cdef i64 a, acc
    p.d = d
    p.m = m
    p.A = <i64*> malloc(sizeof(i64) * (m * d + 1))
    p.b = <i64*> malloc(sizeof(i64) * (m + 1))
    p.lo = <i64*> malloc(sizeof(i64) * (d + 1))
    p.hi = <i64*> malloc(sizeof(i64) * (d + 1))
    p.tails = <i64*> malloc(sizeof(i64) * (m * (d + 1) + 1))
    p.partial = <i64*> malloc(sizeof(i64) * (m + 1))
    p.x = <i64*> malloc(sizeof(i64) * (d + 1))
    if not (p.A and p.b and p.lo and p.hi and p.tails and p.partial and p.x):
        _teardown(p)
        raise MemoryError()
    for j in range(d):
        p.lo[j] = lo[j]
        p.hi[j] = hi[j]
        p.x[j] = 0
    for r in range(m):
        row = rows[r]
        for j in range(d):
            p.A[r * d + j] = row[j]
        p.b[r] = rhs[r]
        p.partial[r] = 0
        acc = 0
        p.tails[r * (d + 1) + d] = 0
        for j in range(d - 1, -1, -1):
            a = p.A[r * d + j]
            acc += a * p.lo[j] if a > 0 else a * p.hi[j]
            p.tails[r * (d + 1) + j] = acc
    return 0


cdef void _teardown(Problem* p):
    free(p.A)
    free(p.b)
    free(p.lo)
    free(p.hi)
    free(p.tails)
    free(p.partial)
    free(p.x)


cdef int _root_ok(Problem* p):
    cdef int r, j
    for j in range(p.d):
        if p.lo[j] > p.hi[j]:
            return 0
    for r in range(p.m):
        if p.tails[r * (p.d + 1)] > p.b[r]:
            return 0
    return 1


def count_points(rows, rhs, lo, hi):
    """Number of integer points of the system inside the box."""
    cdef Problem p
    cdef i64 total = 0
    _setup(&p, rows, rhs, lo, hi)
    try:
        if not _root_ok(&p):
            return 0
        if p.d == 0:
            return 1
        with nogil:
            total = _count(&p, 0)
        return total
    finally:
        _teardown(&p)


def first_point(rows, rhs, lo, hi):
    """Lexicographically smallest integer point, or ``None``."""
    cdef Problem p
    cdef int found
    _setup(&p, rows, rhs, lo, hi)
    try:
        if not _root_ok(&p):
            return None
        if p.d == 0:
            return []
        with nogil:
            found = _first(&p, 0)
        if not found:
            return None
        return [p.x[j] for j in range(p.d)]
    finally:
        _teardown(&p)
