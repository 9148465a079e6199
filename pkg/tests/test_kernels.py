import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poslab import kernels
from poslab import _pykernels

from oracles import box_points

needs_compiled = pytest.mark.skipif(kernels.BACKEND != "cython",
                                    reason="compiled extension not built")

systems = st.integers(1, 4).flatmap(lambda d: st.tuples(
    st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=d, max_size=d),
                       st.integers(-5, 8)), max_size=5),
    st.lists(st.tuples(st.integers(-3, 0), st.integers(0, 3)), min_size=d, max_size=d)))


def unpack(system):
    rows_rhs, box = system
    rows = [r for r, _ in rows_rhs]
    rhs = [b for _, b in rows_rhs]
    return rows, rhs, [l for l, _ in box], [h for _, h in box]


@settings(max_examples=150, deadline=None)
@given(systems)
def test_python_kernel_matches_enumeration(system):
    rows, rhs, lo, hi = unpack(system)
    pts = box_points(list(zip(rows, rhs)), lo, hi)
    assert _pykernels.count_points(rows, rhs, lo, hi) == len(pts)
    first = _pykernels.first_point(rows, rhs, lo, hi)
    assert (None if first is None else tuple(first)) == (min(pts) if pts else None)


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(systems)
def test_backends_agree(system):
    rows, rhs, lo, hi = unpack(system)
    assert (kernels.count_points(rows, rhs, lo, hi, backend="cython")
            == kernels.count_points(rows, rhs, lo, hi, backend="python"))
    assert (kernels.first_point(rows, rhs, lo, hi, backend="cython")
            == kernels.first_point(rows, rhs, lo, hi, backend="python"))


def test_zero_dimensional():
    for backend in ("python", None):
        assert kernels.count_points([[]], [0], [], [], backend=backend) == 1
        assert kernels.count_points([[]], [-1], [], [], backend=backend) == 0
        assert kernels.first_point([[]], [0], [], [], backend=backend) == []


def test_empty_box():
    assert kernels.count_points([[1]], [5], [3], [2]) == 0


def test_huge_values_fall_back_to_python():
    big = 1 << 70
    rows, rhs, lo, hi = [[1], [-1]], [big + 2, -big], [big], [big + 2]
    assert not kernels._fits_int64(rows, rhs, lo, hi)
    assert kernels.count_points(rows, rhs, lo, hi) == 3
    assert kernels.first_point(rows, rhs, lo, hi) == [big]


def test_unknown_backend():
    if kernels.BACKEND == "cython":
        with pytest.raises(ValueError):
            kernels.count_points([[1]], [1], [0], [1], backend="fortran")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
