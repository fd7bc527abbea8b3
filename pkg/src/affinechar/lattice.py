"""Exact arithmetic on the A_r weight and root lattices.

Weights are held in the basis of r+1 "fundamental weights" mu_1..mu_{r+1}
that satisfy sum(mu_I) = 0, so a weight is an integer coordinate vector
defined only up to adding a constant to every entry.  In this basis the
simple roots are consecutive differences mu_i - mu_{i+1}, the invariant
bilinear form is

    (a, b) = sum(a_I b_I) - sum(a_I) sum(b_I) / (r+1),

and the root lattice consists of the integer vectors with coordinate sum
zero, on which the form is just the Euclidean dot product.  Everything in
this module is exact: inner products are ``fractions.Fraction`` values and
no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Sequence

#: Largest algebra rank accepted by constructors.  Raise it if you need
#: bigger algebras; nothing below depends on the specific value.
MAX_RANK = 8


def _check_rank(rank: int) -> None:
    if not isinstance(rank, int) or not 1 <= rank <= MAX_RANK:
        raise ValueError(f"rank must be an integer in 1..{MAX_RANK}, got {rank!r}")


@dataclass(frozen=True, eq=False)
class HorizontalWeight:
    """A weight of A_r as coordinates on mu_1..mu_{r+1}.

    Two coordinate vectors describe the same weight iff they differ by a
    constant shift of every entry.  Equality and hashing therefore compare
    the canonical representative, which has minimum coordinate 0.  The
    vector passed in is kept as-is (root vectors, for instance, want their
    sum-zero coordinates preserved).
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        _check_rank(len(coords) - 1)

    @property
    def rank(self) -> int:
        return len(self.coords) - 1

    @property
    def canonical(self) -> tuple[int, ...]:
        """Coordinates shifted so the minimum entry is 0."""
        m = min(self.coords)
        return tuple(c - m for c in self.coords)

    @property
    def coord_sum(self) -> int:
        return sum(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HorizontalWeight):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __add__(self, other: "HorizontalWeight") -> "HorizontalWeight":
        self._check_same_rank(other)
        return HorizontalWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HorizontalWeight") -> "HorizontalWeight":
        self._check_same_rank(other)
        return HorizontalWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HorizontalWeight":
        return HorizontalWeight(tuple(-a for a in self.coords))

    def shifted(self, t: int) -> "HorizontalWeight":
        """The same weight, represented with ``t`` added to every coordinate."""
        return HorizontalWeight(tuple(c + t for c in self.coords))

    def _check_same_rank(self, other: "HorizontalWeight") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    @property
    def dynkin_labels(self) -> tuple[int, ...]:
        """Coefficients on the fundamental dominant weights lambda_1..lambda_r."""
        c = self.coords
        return tuple(c[i] - c[i + 1] for i in range(self.rank))

    @property
    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.dynkin_labels)

    def partition(self) -> tuple[int, ...]:
        """The positive canonical coordinates, weakly decreasing.

        Defined only for dominant weights; the empty tuple is the zero
        weight.
        """
        if not self.is_dominant:
            raise ValueError(f"no partition view: {self.canonical} is not dominant")
        return tuple(c for c in self.canonical if c > 0)

    def height(self) -> int:
        """Sum of the partition parts of a dominant weight."""
        return sum(self.partition())

    @staticmethod
    def from_dynkin(labels: Sequence[int]) -> "HorizontalWeight":
        """Weight with the given labels, in canonical coordinates."""
        labels = tuple(int(a) for a in labels)
        _check_rank(len(labels))
        coords = []
        acc = 0
        for a in reversed(labels):
            coords.append(acc)
            acc += a
        coords.append(acc)
        return HorizontalWeight(tuple(reversed(coords)))

    def to_json(self) -> list[int]:
        return list(self.canonical)

    def __repr__(self) -> str:
        return f"HorizontalWeight({self.coords})"


def inner_product(a: HorizontalWeight, b: HorizontalWeight) -> Fraction:
    """Invariant bilinear form, exact and shift-invariant in each argument."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    n = a.rank + 1
    dot = sum(x * y for x, y in zip(a.coords, b.coords))
    return Fraction(n * dot - a.coord_sum * b.coord_sum, n)


def norm(a: HorizontalWeight) -> Fraction:
    return inner_product(a, a)


def simple_root(rank: int, i: int) -> HorizontalWeight:
    """alpha_i = mu_i - mu_{i+1}, for i in 1..rank."""
    _check_rank(rank)
    if not 1 <= i <= rank:
        raise ValueError(f"simple root index must be in 1..{rank}, got {i}")
    c = [0] * (rank + 1)
    c[i - 1] = 1
    c[i] = -1
    return HorizontalWeight(tuple(c))


def fundamental_dominant(rank: int, i: int) -> HorizontalWeight:
    """lambda_i = mu_1 + ... + mu_i, for i in 1..rank; i = 0 gives zero."""
    _check_rank(rank)
    if not 0 <= i <= rank:
        raise ValueError(f"fundamental weight index must be in 0..{rank}, got {i}")
    return HorizontalWeight(tuple(1 if j < i else 0 for j in range(rank + 1)))


def weyl_vector(rank: int) -> HorizontalWeight:
    """rho, the sum of the fundamental dominant weights: (r, r-1, ..., 1, 0)."""
    _check_rank(rank)
    return HorizontalWeight(tuple(range(rank, -1, -1)))


@dataclass(frozen=True)
class RootShell:
    """All root-lattice vectors of squared length 2n, in sum-zero coordinates."""

    rank: int
    n: int
    members: tuple[HorizontalWeight, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[HorizontalWeight]:
        return iter(self.members)


@lru_cache(maxsize=None)
def _shell_coords(rank: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Integer vectors of length rank+1 with sum 0 and sum of squares 2n.

    Depth-first search over the coordinates in increasing value order, so
    the result comes out sorted lexicographically.  Pruning: each entry is
    bounded by isqrt(2n), the remaining coordinates must absorb the
    remaining sum (|s| <= m*bound) and, by Cauchy-Schwarz, s^2 <= m * R
    where R is the remaining norm budget.
    """
    target = 2 * n
    size = rank + 1
    bound = isqrt(target)
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def search(pos: int, sum_left: int, norm_left: int) -> None:
        if pos == size:
            if sum_left == 0 and norm_left == 0:
                out.append(tuple(prefix))
            return
        m = size - pos
        if abs(sum_left) > m * bound or sum_left * sum_left > m * norm_left:
            return
        vmax = isqrt(norm_left)
        for v in range(-vmax, vmax + 1):
            prefix.append(v)
            search(pos + 1, sum_left - v, norm_left - v * v)
            prefix.pop()

    search(0, 0, target)
    return tuple(out)


def root_shell(rank: int, n: int) -> RootShell:
    """Exhaustive, duplicate-free shell Gamma_n; n = 0 is just the zero vector."""
    _check_rank(rank)
    if n < 0:
        raise ValueError(f"shell index must be >= 0, got {n}")
    members = tuple(HorizontalWeight(c) for c in _shell_coords(rank, n))
    return RootShell(rank, n, members)


def shell_size(rank: int, n: int) -> int:
    _check_rank(rank)
    return len(_shell_coords(rank, n))
