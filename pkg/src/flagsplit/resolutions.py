"""Formal Koszul and Buchsbaum-Eisenbud complexes and the vanishing chase.

The complexes are bookkeeping objects: positioned lists of formal direct sums
of Schur-functor terms, with exact integer ranks.  The hook term at position j
of the degree-m resolution is the Schur functor of shape (m, 1^{j-1}); for
m = 1 this reduces term-by-term to the Koszul complex of exterior powers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bott import CohomologyResult, cohomology
from .schur import schur_rank, weyl_dimension
from .weights import FlagShape, LeviWeight


@dataclass(frozen=True)
class FormalBundle:
    """A formal direct sum of per-block Schur terms on blocks of given sizes.

    Each term is ((partition per block), multiplicity).  Terms whose partition
    has more rows than its block contribute rank 0.
    """

    block_sizes: tuple[int, ...]
    terms: tuple[tuple[tuple[tuple[int, ...], ...], int], ...]

    def __post_init__(self):
        for partitions, mult in self.terms:
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            if len(partitions) != len(self.block_sizes):
                raise ValueError("one partition per block required")

    @classmethod
    def single(cls, block_sizes, partitions, multiplicity: int = 1) -> "FormalBundle":
        return cls(
            tuple(block_sizes),
            ((tuple(tuple(p) for p in partitions), multiplicity),),
        )

    @property
    def rank(self) -> int:
        total = 0
        for partitions, mult in self.terms:
            r = 1
            for part, size in zip(partitions, self.block_sizes):
                r *= schur_rank(part, size)
            total += mult * r
        return total


@dataclass(frozen=True)
class FormalComplex:
    """Positions strictly increase; `augmentation` labels the cokernel."""

    entries: tuple[tuple[int, FormalBundle], ...]
    augmentation: str

    def __post_init__(self):
        positions = [p for p, _ in self.entries]
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ValueError(f"positions must strictly increase: {positions}")

    def ranks(self) -> list[tuple[int, int]]:
        return [(pos, term.rank) for pos, term in self.entries]


def _hook(m: int, j: int) -> tuple[int, ...]:
    """The hook partition (m, 1^{j-1})."""
    return (m,) + (1,) * (j - 1)


def koszul_complex(nu: int) -> FormalComplex:
    """Exterior powers Lambda^j N-dual at positions j = 1..nu, resolving I_Y."""
    if nu < 1:
        raise ValueError(f"need nu >= 1, got {nu}")
    entries = tuple(
        (j, FormalBundle.single((nu,), ((1,) * j,))) for j in range(1, nu + 1)
    )
    return FormalComplex(entries, "I_Y")


def be_complex(nu: int, m: int) -> FormalComplex:
    """Hook terms (m, 1^{j-1}) at positions j = 1..nu, resolving I_Y^m."""
    if nu < 1 or m < 1:
        raise ValueError("need nu >= 1 and m >= 1")
    entries = tuple(
        (j, FormalBundle.single((nu,), (_hook(m, j),))) for j in range(1, nu + 1)
    )
    return FormalComplex(entries, f"I_Y^{m}")


def euler_rank_check(c: FormalComplex) -> bool:
    """Alternating rank sum must equal 1, the generic rank of I_Y^m."""
    return sum((-1) ** (pos - 1) * rank for pos, rank in c.ranks()) == 1


def split_sequence_terms(nu: int, m: int) -> list[int]:
    """Generic ranks of the kernels S_1, ..., S_nu of the short exact pieces.

    S_1 has rank 1 (the ideal power), rank L^j_m = S_j + S_{j+1}, and S_nu
    must come out as Sym^{m-1} tensor det, of rank weyl_dimension((m-1,), nu).
    """
    if nu < 2:
        raise ValueError(f"need nu >= 2, got {nu}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    hook_ranks = {j: schur_rank(_hook(m, j), nu) for j in range(1, nu + 1)}
    s = [1]
    for j in range(1, nu):
        nxt = hook_ranks[j] - s[-1]
        s.append(nxt)
    expected_top = weyl_dimension((m - 1,), nu)
    if s[-1] != expected_top or any(x < 0 for x in s):
        raise AssertionError(
            f"rank bookkeeping inconsistent for nu={nu}, m={m}: {s}"
        )
    return s


@dataclass(frozen=True)
class ChaseEntry:
    """One cohomology obligation of the chase: H^degree of one summand of
    F tensor the hook term at position j.  `result` is None when it vanishes
    in that degree."""

    j: int
    degree: int
    summand: tuple[int, ...]
    result: CohomologyResult | None


def vanishing_chase(shape: FlagShape, F, m: int, t: int):
    """Certify H^t(X, F tensor I_Y^m) = 0 on a Grassmannian.

    X is the one-step flag (e; d); N is the universal quotient Q of rank
    nu = d - e, whose zero loci are the smaller Grassmannians.  F is split
    into line weights.  For j = 1..nu the hook twist of Q-dual by a line
    weight is a single irreducible homogeneous bundle, so each obligation
    H^{t+j-1}(F tensor hook_j(Q-dual)) is a finite sum of Bott computations.

    Returns (vanishes, ledger).  True certifies the vanishing; False only
    means the chase does not certify it, never that H^t is nonzero.
    """
    if shape.t != 1:
        raise ValueError(f"the chase needs a one-step flag, got {shape}")
    if m < 1 or t < 0:
        raise ValueError("need m >= 1 and t >= 0")
    e = shape.d[0]
    nu = shape.n - e
    summands = _split_line_weights(shape, F)
    ledger: list[ChaseEntry] = []
    for j in range(1, nu + 1):
        hook = _hook(m, j) + (0,) * (nu - j)
        target = t + j - 1
        for values, mult in summands:
            alpha = shape.expand(values)
            entries = alpha[:e] + tuple(a + h for a, h in zip(alpha[e:], hook))
            res = cohomology(shape, LeviWeight(shape, entries))
            hit = res if (res is not None and res.degree == target) else None
            ledger.append(ChaseEntry(j, target, values, hit))
    return all(entry.result is None for entry in ledger), ledger


def _split_line_weights(shape: FlagShape, F):
    """Normalize F to a sorted tuple of (block values, multiplicity)."""
    from .criteria import SplitBundle

    if isinstance(F, SplitBundle):
        if F.shape != shape:
            raise ValueError("split bundle lives on a different shape")
        return F.summands
    out: dict[tuple[int, ...], int] = {}
    for values in F:
        values = tuple(int(x) for x in values)
        if len(values) != shape.t + 1:
            raise ValueError(f"expected {shape.t + 1} block values: {values}")
        out[values] = out.get(values, 0) + 1
    if not out:
        raise ValueError("F needs at least one line summand")
    return tuple(sorted(out.items()))
