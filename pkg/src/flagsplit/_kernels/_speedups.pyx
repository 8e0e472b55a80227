# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting kernels: inversions, repeats, SSYT enumeration."""

from libc.stdlib cimport free, malloc


def inversion_count(v):
    """Number of pairs i < j with v[i] < v[j].  Entries need not be distinct."""
    cdef Py_ssize_t n = len(v)
    cdef long long *a = <long long *> malloc(n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long long count = 0
    try:
        for i in range(n):
            a[i] = v[i]
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] < a[j]:
                    count += 1
    finally:
        free(a)
    return count


def has_repeat(v):
    """True iff some entry of v occurs twice."""
    cdef Py_ssize_t n = len(v)
    cdef long long *a = <long long *> malloc(n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef bint found = False
    try:
        for i in range(n):
            a[i] = v[i]
        for i in range(n):
            for j in range(i + 1, n):
                if a[i] == a[j]:
                    found = True
                    break
            if found:
                break
    finally:
        free(a)
    return bool(found)


cdef long long _fill(int r, int c, int rows, int n, int *shape, int *grid,
                     int *offsets):
    cdef int nr, nc, lo, val, above
    cdef long long total = 0
    if r == rows:
        return 1
    if c + 1 < shape[r]:
        nr = r
        nc = c + 1
    else:
        nr = r + 1
        nc = 0
    lo = 1
    if c > 0:
        lo = grid[offsets[r] + c - 1]
    if r > 0:
        above = grid[offsets[r - 1] + c] + 1
        if above > lo:
            lo = above
    for val in range(lo, n + 1):
        grid[offsets[r] + c] = val
        total += _fill(nr, nc, rows, n, shape, grid, offsets)
    return total


def ssyt_count(shape, n):
    """Count semistandard tableaux of the given shape with entries in 1..n.

    Explicit backtracking enumeration: rows weakly increase, columns strictly
    increase.  Every completed filling is visited once.
    """
    shape = tuple(shape)
    if not shape or shape[0] == 0:
        return 1
    cdef int rows = len(shape)
    if rows > n:
        return 0
    cdef int total_cells = 0
    cdef int i
    cdef int *cshape = <int *> malloc(rows * sizeof(int))
    cdef int *offsets = <int *> malloc(rows * sizeof(int))
    if cshape == NULL or offsets == NULL:
        free(cshape)
        free(offsets)
        raise MemoryError()
    for i in range(rows):
        cshape[i] = shape[i]
        offsets[i] = total_cells
        total_cells += shape[i]
    cdef int *grid = <int *> malloc(total_cells * sizeof(int))
    if grid == NULL:
        free(cshape)
        free(offsets)
        raise MemoryError()
    cdef long long result
    try:
        result = _fill(0, 0, rows, n, cshape, grid, offsets)
    finally:
        free(cshape)
        free(offsets)
        free(grid)
    return result
