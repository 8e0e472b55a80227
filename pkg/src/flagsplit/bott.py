"""The cohomology engine: Bott's algorithm on GL partial flag varieties.

Conventions.  A Levi-dominant weight alpha of length n names a homogeneous
line/Schur bundle L_alpha.  Its cohomology is computed from v = alpha + rho:
if v has a repeated entry, everything vanishes; otherwise exactly one degree
survives, the inversion count of v, and the group is the irreducible GL(n)
module with highest weight sort_descending(v) - rho.

The normalization is fixed so that on projective space F(1; n+1) the weight
(k, 0, ..., 0) is O(k) with dim H^0 = C(n+k, n), and on a Grassmannian the
Pluecker bundle O(1) is the weight with value 1 on the first block and 0
elsewhere.  Weights differing by a global shift name the same line bundle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .schur import _weyl_normalized
from .weights import (
    FlagShape,
    LeviWeight,
    inversion_count,
    is_levi_dominant,
    is_singular,
    rho,
    sort_descending,
)


@dataclass(frozen=True)
class CohomologyResult:
    """The unique nonzero cohomology group of a homogeneous bundle.

    `cohomology` returns None when every degree vanishes.
    """

    degree: int
    dominant_weight: tuple[int, ...]
    dimension: int


def _coerce(shape: FlagShape, alpha) -> LeviWeight:
    if isinstance(alpha, LeviWeight):
        if alpha.shape != shape:
            raise ValueError("weight lives on a different shape")
        return alpha
    return LeviWeight(shape, tuple(alpha))


_rho = lru_cache(maxsize=None)(rho)


@lru_cache(maxsize=1 << 20)
def _bott(shape: FlagShape, entries: tuple[int, ...]) -> CohomologyResult | None:
    n = shape.n
    r = _rho(n)
    v = tuple(a + b for a, b in zip(entries, r))
    if is_singular(v):
        return None
    degree = inversion_count(v)
    dominant = tuple(a - b for a, b in zip(sort_descending(v), r))
    base = dominant[-1]
    dim = _weyl_normalized(tuple(x - base for x in dominant), n)
    return CohomologyResult(degree, dominant, dim)


def cohomology(shape: FlagShape, alpha) -> CohomologyResult | None:
    """Bott's algorithm.  Returns None when all cohomology vanishes.

    `alpha` may be a LeviWeight on `shape` or a raw length-n sequence, which
    must be Levi-dominant (otherwise it does not name a homogeneous bundle in
    this encoding and a ValueError is raised).
    """
    w = _coerce(shape, alpha)
    # Cache on the shift-normalized weight: a global shift changes neither the
    # degree nor the dimension, only the dominant weight by the same shift.
    base = w.entries[-1]
    res = _bott(shape, tuple(e - base for e in w.entries))
    if res is None or base == 0:
        return res
    return CohomologyResult(
        res.degree,
        tuple(x + base for x in res.dominant_weight),
        res.dimension,
    )


def canonical_weight(shape: FlagShape) -> LeviWeight:
    """Weight of the canonical bundle: block j gets d_{j-1} + d_j - n."""
    d = (0,) + shape.d
    n = shape.n
    return LeviWeight.from_block_values(
        shape, tuple(d[j - 1] + d[j] - n for j in range(1, len(d)))
    )


@lru_cache(maxsize=None)
def _canonical_entries(shape: FlagShape) -> tuple[int, ...]:
    return canonical_weight(shape).entries


def serre_check(shape: FlagShape, alpha) -> bool:
    """Serre duality as a cross-check of the algorithm.

    True iff H^i(L_alpha) and H^{dim - i}(L_{kappa - alpha}) have the same
    dimension, computed by two independent runs of the algorithm.  Degree and
    dimension are invariant under a global shift, so both sides go through
    the shift-normalized core directly.
    """
    if isinstance(alpha, LeviWeight):
        if alpha.shape != shape:
            raise ValueError("weight lives on a different shape")
        entries = alpha.entries
    else:
        entries = tuple(alpha)
        if not is_levi_dominant(entries, shape):
            raise ValueError(f"weight {entries} is not Levi-dominant")
    kappa = _canonical_entries(shape)
    dual = tuple(k - a for k, a in zip(kappa, entries))
    base = entries[-1]
    lhs = _bott(shape, tuple(e - base for e in entries))
    dual_base = dual[-1]
    rhs = _bott(shape, tuple(e - dual_base for e in dual))
    if lhs is None or rhs is None:
        return lhs is None and rhs is None
    return lhs.degree + rhs.degree == shape.dim and lhs.dimension == rhs.dimension


def has_adjacent_singleton_blocks(shape: FlagShape) -> bool:
    """True iff d_{j+1} - d_{j-1} <= 2 for some j, i.e. two adjacent blocks
    of length one each."""
    d = (0,) + shape.d
    return any(d[j + 1] - d[j - 1] <= 2 for j in range(1, len(d) - 1))


def default_box_bound(shape: FlagShape) -> int:
    """Default box half-width for the h-splitting search."""
    return shape.n * shape.t


def h_splitting(
    shape: FlagShape, h: int, bound: int | None = None
) -> tuple[bool, LeviWeight | None]:
    """Decide whether H^1(L) = ... = H^h(L) = 0 for every line bundle L.

    Searches block-constant weights with values in [-B, B], last block pinned
    to 0 (a global shift does not change the bundle).  For such a weight the
    blocks of alpha + rho are disjoint integer intervals, so the Bott degree
    depends only on their relative order: it is the sum of l_i * l_j over the
    block pairs whose intervals are flipped.  The search therefore enumerates
    block orderings and realizes each by packing the intervals; orderings
    whose packed representative does not fit in the box are unreachable
    within it.  Returns (False, witness) with 1 <= degree(witness) <= h when
    the search finds a failure, else (True, None).
    """
    if h < 1:
        raise ValueError(f"need h >= 1, got {h}")
    B = default_box_bound(shape) if bound is None else int(bound)
    if B < 1:
        raise ValueError(f"need a positive box bound, got {B}")
    lam = shape.block_lengths
    k = len(lam)
    n = shape.n
    d = (0,) + shape.d
    for order in itertools.permutations(range(k)):
        # `order` lists block indices from the highest interval downwards.
        position = {b: p for p, b in enumerate(order)}
        degree = sum(
            lam[i] * lam[j]
            for i in range(k)
            for j in range(i + 1, k)
            if position[j] < position[i]
        )
        if not 1 <= degree <= h:
            continue
        # Pack the intervals top-down into [0, n-1] and read off the offsets:
        # block b sits at [n - d_b, n - d_{b-1} - 1] when its value is 0.
        values = [0] * k
        top = n
        for b in order:
            top -= lam[b]
            values[b] = top - (n - d[b + 1])
        base = values[-1]
        values = [a - base for a in values]
        if max(abs(a) for a in values) > B:
            continue
        return False, LeviWeight.from_block_values(shape, values)
    return True, None


def claim2_weight(nu: int, n: int, k: int, m: int) -> tuple[FlagShape, LeviWeight]:
    """The flag variety F(n, nu+n-1; nu+n) and the weight
    (k+1 repeated n times, 0 repeated nu-1 times, nu+m)."""
    if nu < 1 or n < 1:
        raise ValueError("need nu >= 1 and n >= 1")
    if nu == 1:
        # Middle block empty: the variety degenerates to F(n; n+1).
        shape = FlagShape((n, n + 1))
        entries = (k + 1,) * n + (1 + m,)
    else:
        shape = FlagShape((n, nu + n - 1, nu + n))
        entries = (k + 1,) * n + (0,) * (nu - 1) + (nu + m,)
    return shape, LeviWeight(shape, entries)


def claim2_stabilization_bound(nu: int, n: int, k: int) -> int:
    """From this m on, the last entry of the weight + rho exceeds every other
    entry, so the inversion count no longer depends on m."""
    return max(k + n + nu + 2, 2)


def claim2_vanishing(nu: int, n: int, k: int) -> tuple[bool, int | None]:
    """Decide, for all m >= 1, whether H^nu of the claim2 weight vanishes.

    Checks m = 1 .. m* where m* is the stabilization bound; beyond m* the
    Bott degree is constant in m, so the finite check covers every m.
    Returns (True, None) or (False, first failing m).
    """
    m_star = claim2_stabilization_bound(nu, n, k)
    for m in range(1, m_star + 1):
        shape, w = claim2_weight(nu, n, k, m)
        res = cohomology(shape, w)
        if res is not None and res.degree == nu:
            return False, m
    return True, None
