"""Flag shapes, Levi weights, and elementary integer-weight arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import _kernels


def rho(n: int) -> tuple[int, ...]:
    """The staircase vector (n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError(f"rho is defined for n >= 1, got {n}")
    return tuple(range(n - 1, -1, -1))


def is_singular(v) -> bool:
    """True iff some pair of entries of v is equal."""
    return _kernels.has_repeat(tuple(v))


def inversion_count(v) -> int:
    """Number of index pairs i < j with v[i] < v[j].

    This is the inversion count for the decreasing order, i.e. the minimal
    number of adjacent transpositions sorting v into decreasing order.
    Entries must be pairwise distinct.
    """
    v = tuple(v)
    if _kernels.has_repeat(v):
        raise ValueError("inversion_count requires pairwise distinct entries")
    return _kernels.inversion_count(v)


def sort_descending(v) -> tuple[int, ...]:
    return tuple(sorted(v, reverse=True))


@dataclass(frozen=True)
class FlagShape:
    """The strictly increasing sequence d_1 < ... < d_t < d_{t+1}.

    Defines the variety of nested subspaces of dimensions d_1, ..., d_t inside
    a fixed space of dimension n = d_{t+1}.
    """

    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        object.__setattr__(self, "d", d)
        if len(d) < 2:
            raise ValueError("a flag shape needs at least one proper subspace")
        if d[0] < 1:
            raise ValueError(f"flag dimensions must be positive: {d}")
        if any(a >= b for a, b in zip(d, d[1:])):
            raise ValueError(f"flag dimensions must strictly increase: {d}")

    @property
    def n(self) -> int:
        """Ambient dimension d_{t+1}."""
        return self.d[-1]

    @property
    def t(self) -> int:
        """Number of proper steps."""
        return len(self.d) - 1

    @cached_property
    def block_lengths(self) -> tuple[int, ...]:
        """(d_1 - d_0, d_2 - d_1, ..., d_{t+1} - d_t), with d_0 = 0."""
        return tuple(b - a for a, b in zip((0,) + self.d, self.d))

    @cached_property
    def dim(self) -> int:
        """Dimension of the variety: sum of l_i * l_j over block pairs i < j."""
        lam = self.block_lengths
        k = len(lam)
        return sum(lam[i] * lam[j] for i in range(k) for j in range(i + 1, k))

    @cached_property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Half-open index ranges [start, stop) of the blocks in a weight."""
        bounds = (0,) + self.d
        return tuple(zip(bounds, bounds[1:]))

    def expand(self, block_values) -> tuple[int, ...]:
        """Expand one value per block into a full weight of length n."""
        block_values = tuple(block_values)
        if len(block_values) != self.t + 1:
            raise ValueError(
                f"expected {self.t + 1} block values, got {len(block_values)}"
            )
        out = []
        for value, length in zip(block_values, self.block_lengths):
            out.extend([value] * length)
        return tuple(out)

    @classmethod
    def staircase(cls, t: int, step: int = 2) -> "FlagShape":
        """The shape (step, 2*step, ..., (t+1)*step); step=2 gives 2_bullet."""
        return cls(tuple(step * j for j in range(1, t + 2)))

    def __str__(self) -> str:
        head = ",".join(str(x) for x in self.d[:-1])
        return f"({head};{self.d[-1]})"


def is_levi_dominant(entries, shape: FlagShape) -> bool:
    """True iff the weight is non-increasing within every block of the shape."""
    entries = tuple(entries)
    if len(entries) != shape.n:
        raise ValueError(
            f"weight length {len(entries)} does not match shape {shape}"
        )
    for start, stop in shape.blocks:
        for i in range(start + 1, stop):
            if entries[i - 1] < entries[i]:
                return False
    return True


@dataclass(frozen=True)
class LeviWeight:
    """An integer weight of length n, non-increasing within each block.

    Names a homogeneous line bundle (block-constant case) or an irreducible
    homogeneous Schur-twist bundle on the flag variety of its shape.
    """

    shape: FlagShape
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not is_levi_dominant(entries, self.shape):
            raise ValueError(
                f"weight {entries} is not Levi-dominant on shape {self.shape}"
            )

    @classmethod
    def from_block_values(cls, shape: FlagShape, block_values) -> "LeviWeight":
        return cls(shape, shape.expand(block_values))

    def shift(self, c: int) -> "LeviWeight":
        """Add c to every entry (twist by a power of the determinant)."""
        return LeviWeight(self.shape, tuple(e + c for e in self.entries))

    @property
    def is_block_constant(self) -> bool:
        return all(
            len(set(self.entries[start:stop])) == 1 for start, stop in self.shape.blocks
        )

    def block_values(self) -> tuple[int, ...]:
        """One value per block; raises for non-constant (Schur-twist) weights."""
        if not self.is_block_constant:
            raise ValueError(f"weight {self.entries} is not block-constant")
        return tuple(self.entries[start] for start, _ in self.shape.blocks)


def shift(w: LeviWeight, c: int) -> LeviWeight:
    return w.shift(c)
