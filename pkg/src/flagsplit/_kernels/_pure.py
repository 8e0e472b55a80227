"""Pure-Python counting kernels.

Drop-in fallback for the compiled module; same contracts, same results.
"""


def inversion_count(v):
    """Number of pairs i < j with v[i] < v[j].  Entries need not be distinct."""
    count = 0
    n = len(v)
    for i in range(n):
        vi = v[i]
        for j in range(i + 1, n):
            if vi < v[j]:
                count += 1
    return count


def has_repeat(v):
    """True iff some entry of v occurs twice."""
    return len(set(v)) != len(v)


def ssyt_count(shape, n):
    """Count semistandard tableaux of the given shape with entries in 1..n.

    Explicit backtracking enumeration: rows weakly increase, columns strictly
    increase.  Every completed filling is visited once.
    """
    shape = tuple(shape)
    if not shape or shape[0] == 0:
        return 1
    if len(shape) > n:
        return 0
    rows = len(shape)
    grid = [[0] * r for r in shape]

    def fill(r, c):
        if r == rows:
            return 1
        if c + 1 < shape[r]:
            nr, nc = r, c + 1
        else:
            nr, nc = r + 1, 0
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0:
            above = grid[r - 1][c] + 1
            if above > lo:
                lo = above
        row = grid[r]
        total = 0
        for val in range(lo, n + 1):
            row[c] = val
            total += fill(nr, nc)
        return total

    return fill(0, 0)
