"""Truncated power series in q with exact coefficients.

Coefficients are arbitrary-precision integers (or Fractions, which all
operations tolerate).  Every series carries its truncation order
explicitly and arithmetic never pretends to know more than it does: the
result of a binary operation is truncated to the shorter operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import _check_rank, shell_size

Coeff = int | Fraction


def _as_coeff(x) -> Coeff:
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


@dataclass(frozen=True)
class QSeries:
    """A power series known through q**trunc."""

    trunc: int
    coeffs: tuple[Coeff, ...]

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.trunc}")
        coeffs = tuple(_as_coeff(c) for c in self.coeffs)
        if len(coeffs) != self.trunc + 1:
            raise ValueError(
                f"need {self.trunc + 1} coefficients for truncation {self.trunc}, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Coeff], trunc: int | None = None) -> "QSeries":
        coeffs = list(coeffs)
        if trunc is None:
            trunc = len(coeffs) - 1
        if len(coeffs) < trunc + 1:
            coeffs += [0] * (trunc + 1 - len(coeffs))
        return cls(trunc, tuple(coeffs[: trunc + 1]))

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls(trunc, (0,) * (trunc + 1))

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls(trunc, (1,) + (0,) * trunc)

    def __getitem__(self, n: int) -> Coeff:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"coefficient q^{n} outside known range 0..{self.trunc}")
        return self.coeffs[n]

    def truncated(self, n: int) -> "QSeries":
        if n > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {n}")
        return QSeries(n, self.coeffs[: n + 1])

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.trunc, other.trunc)
        return QSeries(n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        n = min(self.trunc, other.trunc)
        return QSeries(n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QSeries":
        return QSeries(self.trunc, tuple(-a for a in self.coeffs))

    def scaled(self, c: Coeff) -> "QSeries":
        return QSeries(self.trunc, tuple(_as_coeff(c * a) for a in self.coeffs))

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scaled(other)
        n = min(self.trunc, other.trunc)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return QSeries(n, tuple(out))

    def __rmul__(self, other) -> "QSeries":
        return self.scaled(other)

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative powers: divide explicitly")
        result = QSeries.one(self.trunc)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other: "QSeries") -> "QSeries":
        return self.divide(other)

    def divide(self, other: "QSeries") -> "QSeries":
        """Exact quotient; the divisor needs an invertible constant term.

        Over the integers that means a constant term of +-1, which keeps
        the quotient integral; a Fraction constant term only has to be
        nonzero.
        """
        c0 = other.coeffs[0]
        if isinstance(c0, int):
            if c0 not in (1, -1):
                raise ValueError(f"division needs constant term +-1, got {c0}")
            inv = c0
        else:
            if c0 == 0:
                raise ValueError("division by a series with zero constant term")
            inv = Fraction(1) / c0
        n = min(self.trunc, other.trunc)
        out: list[Coeff] = []
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                b = other.coeffs[i]
                if b != 0:
                    acc -= b * out[k - i]
            out.append(_as_coeff(acc * inv))
        return QSeries(n, tuple(out))

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        coeffs = tuple(_as_coeff(Fraction(s)) for s in data["coeffs"])
        return cls(int(data["trunc"]), coeffs)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*q^{n}" if n > 1 else f"{c}*q")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.trunc + 1})"


def euler_product(order: int) -> QSeries:
    """prod_{n>=1} (1 - q^n), truncated."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, order + 1):
        # multiply in place by (1 - q^n)
        for k in range(order, n - 1, -1):
            coeffs[k] -= coeffs[k - n]
    return QSeries(order, tuple(coeffs))


def lattice_theta(rank: int, order: int) -> QSeries:
    """Theta series of the A_rank root lattice: coefficient of q^n is |Gamma_n|."""
    _check_rank(rank)
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return QSeries(order, tuple(shell_size(rank, n) for n in range(order + 1)))


def basic_character_series(rank: int, order: int) -> QSeries:
    """Closed-form expansion of the level-1 vacuum character: Theta(A_r) / Phi^r."""
    return lattice_theta(rank, order) / euler_product(order) ** rank
