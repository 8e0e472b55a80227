"""Schur-functor combinatorics: Pieri rules, Weyl dimensions, SSYT oracle.

Partitions are plain tuples of weakly decreasing non-negative integers with
trailing zeros trimmed.  Multiplicity-weighted sums of partitions (the output
of the Pieri rules) are plain dicts ``{partition: multiplicity}``.

All dimension arithmetic is exact; Python integers never overflow.
"""

from __future__ import annotations

import math
from functools import lru_cache

from . import _kernels


class ResourceLimitError(RuntimeError):
    """Raised when a brute-force enumeration would exceed its guard."""


def as_partition(parts) -> tuple[int, ...]:
    """Validate and normalize a partition (trim trailing zeros)."""
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"partition parts must be non-negative: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


@lru_cache(maxsize=None)
def _weyl_normalized(lam: tuple[int, ...], n: int) -> int:
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    assert rem == 0, f"Weyl product not divisible for {lam}"
    return dim


def weyl_dimension(lam, n: int) -> int:
    """Dimension of the irreducible GL(n) module with highest weight lam.

    Product over i < j of (lam_i - lam_j + j - i) / (j - i), computed exactly.
    General integer vectors of length n are allowed (determinant twists);
    shorter vectors are padded with zeros, which requires all entries >= 0.
    """
    lam = tuple(int(x) for x in lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"weight must weakly decrease: {lam}")
    if len(lam) > n:
        if any(x != 0 for x in lam[n:]):
            raise ValueError(f"weight {lam} has more than {n} nonzero entries")
        lam = lam[:n]
    if len(lam) < n:
        if lam and lam[-1] < 0:
            raise ValueError(
                f"cannot zero-pad {lam} to length {n}: negative entries"
            )
        lam = lam + (0,) * (n - len(lam))
    if n == 1:
        return 1
    # Dimension is invariant under a global shift; normalize for the cache.
    base = lam[-1]
    return _weyl_normalized(tuple(x - base for x in lam), n)


def schur_rank(parts, size: int) -> int:
    """Rank of the Schur functor of a rank-`size` space; 0 if too many rows."""
    parts = as_partition(parts)
    if len(parts) > size:
        return 0
    return weyl_dimension(parts, size)


def pieri_row(lam, m: int, rows: int) -> dict[tuple[int, ...], int]:
    """Decompose S_lam tensor Sym^m: horizontal strips of size m.

    Returns all partitions mu containing lam with mu/lam a horizontal strip of
    m boxes and at most `rows` parts, each with multiplicity 1.
    """
    lam = as_partition(lam)
    if m < 0 or rows < 1:
        raise ValueError("need m >= 0 and rows >= 1")
    if len(lam) > rows:
        raise ValueError(f"partition {lam} has more than {rows} parts")
    padded = lam + (0,) * (rows - len(lam))
    out: dict[tuple[int, ...], int] = {}

    def place(i: int, remaining: int, mu: list[int]):
        if i == rows:
            if remaining == 0:
                out[as_partition(mu)] = 1
            return
        # Horizontal strip: lam_{i-1} >= mu_i >= lam_i (mu_1 unbounded above).
        hi = remaining if i == 0 else min(remaining, padded[i - 1] - padded[i])
        for add in range(0, hi + 1):
            mu.append(padded[i] + add)
            place(i + 1, remaining - add, mu)
            mu.pop()

    place(0, m, [])
    return out


def pieri_col(lam, j: int, rows: int) -> dict[tuple[int, ...], int]:
    """Decompose S_lam tensor Lambda^j: vertical strips of size j.

    Returns all partitions mu with mu/lam a vertical strip of j boxes (at most
    one box added per row) and at most `rows` parts, each with multiplicity 1.
    """
    lam = as_partition(lam)
    if j < 0 or rows < 1:
        raise ValueError("need j >= 0 and rows >= 1")
    if len(lam) > rows:
        raise ValueError(f"partition {lam} has more than {rows} parts")
    padded = lam + (0,) * (rows - len(lam))
    out: dict[tuple[int, ...], int] = {}
    for picks in _subsets(rows, j):
        mu = [padded[i] + (1 if i in picks else 0) for i in range(rows)]
        if all(mu[i] >= mu[i + 1] for i in range(rows - 1)):
            out[as_partition(mu)] = 1
    return out


def _subsets(n: int, k: int):
    from itertools import combinations

    return (frozenset(c) for c in combinations(range(n), k))


def ssyt_count(lam, n: int, *, max_size: int = 12, max_letters: int = 6) -> int:
    """Brute-force SSYT enumeration oracle.

    Counts semistandard Young tableaux of shape lam with entries in 1..n by
    explicit enumeration.  Guarded: |lam| <= max_size and n <= max_letters,
    else ResourceLimitError.  Tests may raise the limits deliberately.
    """
    lam = as_partition(lam)
    if sum(lam) > max_size or n > max_letters:
        raise ResourceLimitError(
            f"ssyt_count guard exceeded: |lam|={sum(lam)} (max {max_size}), "
            f"n={n} (max {max_letters})"
        )
    if n < 1:
        raise ValueError("need at least one letter")
    return _kernels.ssyt_count(lam, n)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, zero outside the usual range."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
