"""Independent brute-force oracles used to cross-check the library.

Everything here is written against the definitions, not against the library
internals: inversion counting by literal bubble sort, Schur characters by
explicit tableau enumeration, ampleness of structured products by full
expansion, and h-splitting by a literal box search running the cohomology
routine on every candidate.
"""

import itertools
from collections import Counter

from flagsplit import cohomology
from flagsplit.criteria import (
    SplitBundle,
    det_split,
    dual_split,
    is_ample_split,
    sym_split,
    tensor_split,
)
from flagsplit.weights import FlagShape


def bubble_inversions(v):
    """Adjacent transpositions needed to sort v into decreasing order."""
    v = list(v)
    count = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(v) - 1):
            if v[i] < v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                count += 1
                changed = True
    return count


def has_repeat_naive(v):
    v = list(v)
    return any(v[i] == v[j] for i in range(len(v)) for j in range(i + 1, len(v)))


def ssyt_tableaux(lam, n):
    """Yield all semistandard tableaux of shape lam with entries in 1..n,
    as tuples of row tuples.  Rows weakly increase, columns strictly."""
    lam = tuple(x for x in lam if x > 0)
    if not lam:
        yield ()
        return
    if len(lam) > n:
        return

    def rows(i, above):
        if i == len(lam):
            yield ()
            return
        width = lam[i]
        for row in _weak_rows(width, i + 1, n, above):
            for rest in rows(i + 1, row):
                yield (row,) + rest

    yield from rows(0, None)


def _weak_rows(width, lo, n, above):
    """Weakly increasing rows of a given width, entry j strictly above[j]."""
    def extend(j, prev, acc):
        if j == width:
            yield tuple(acc)
            return
        floor = max(prev, (above[j] + 1) if above is not None and j < len(above) else lo)
        floor = max(floor, lo)
        for x in range(floor, n + 1):
            acc.append(x)
            yield from extend(j + 1, x, acc)
            acc.pop()

    yield from extend(0, lo, [])


def ssyt_count_naive(lam, n):
    return sum(1 for _ in ssyt_tableaux(lam, n))


def schur_character(lam, n):
    """The Schur polynomial as a Counter of content vectors."""
    out = Counter()
    for tab in ssyt_tableaux(lam, n):
        content = [0] * n
        for row in tab:
            for x in row:
                content[x - 1] += 1
        out[tuple(content)] += 1
    return out


def character_product(a, b):
    out = Counter()
    for va, ma in a.items():
        for vb, mb in b.items():
            out[tuple(x + y for x, y in zip(va, vb))] += ma * mb
    return out


def character_sum(characters):
    out = Counter()
    for c in characters:
        out.update(c)
    return out


def h_splitting_box_search(shape, h, bound):
    """Literal search: run cohomology on every block-constant weight in the
    box (last block pinned to 0) and look for a degree in 1..h."""
    t = shape.t
    for head in itertools.product(range(-bound, bound + 1), repeat=t):
        values = head + (0,)
        res = cohomology(shape, shape.expand(values))
        if res is not None and 1 <= res.degree <= h:
            return False, values
    return True, None


def threshold_product_ample_expanded(F, N, sym_f, sym_n, include_det_f):
    """Full-expansion ampleness check of
    Sym^{sym_f}(F-dual) (x) [det F] (x) Sym^{sym_n}(N) (x) det(N)^{-1}."""
    shape = F.shape
    prod = tensor_split(sym_split(dual_split(F), sym_f), sym_split(N, sym_n))
    twist = [0] * (shape.t + 1)
    if include_det_f:
        twist = [a + b for a, b in zip(twist, det_split(F))]
    twist = [a - b for a, b in zip(twist, det_split(N))]
    line = SplitBundle(shape, ((tuple(twist), 1),))
    return is_ample_split(tensor_split(prod, line))
