"""Schur functions evaluated at exact rational points.

No symbolic symmetric-function algebra is built here.  A Schur function is
only ever needed as a number: either at an explicit evaluation point
u = (u_1, ..., u_{r+1}) with nonzero rational entries (the values of the
formal exponentials of the mu-basis weights), or in the all-equal limit
where it degenerates to the Weyl dimension of the corresponding highest
weight module.  The first case goes through the Jacobi-Trudi determinant
over a table of complete homogeneous values; the second through binomial
determinant and product formulas.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .lattice import HorizontalWeight, _check_rank, weyl_vector

Rational = int | Fraction


def exact_det(rows: Sequence[Sequence[Rational]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    det = Fraction(sign)
    for i in range(n):
        det *= m[i][i]
    return det


def check_point(u: Sequence[Rational]) -> tuple[Fraction, ...]:
    point = tuple(Fraction(x) for x in u)
    _check_rank(len(point) - 1)
    if any(x == 0 for x in point):
        raise ValueError("evaluation point entries must be nonzero")
    return point


def homogeneous_values(u: Sequence[Rational], order: int) -> list[Fraction]:
    """Values S_0..S_order of the complete homogeneous symmetric polynomials.

    Generated by the Newton recurrence q*S_q = sum_{i=1}^{q} p_i S_{q-i}
    with power sums p_i = sum_I u_I^i; exact in Fraction arithmetic.
    """
    point = check_point(u)
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    powers = [Fraction(1)] * len(point)
    psums: list[Fraction] = [Fraction(len(point))]  # p_0, unused by the recurrence
    table = [Fraction(1)]
    for q in range(1, order + 1):
        powers = [p * x for p, x in zip(powers, point)]
        psums.append(sum(powers, Fraction(0)))
        s = sum(psums[i] * table[q - i] for i in range(1, q + 1))
        table.append(s / q)
    return table


def schur_value(
    parts: Sequence[int],
    u: Sequence[Rational],
    values: Sequence[Fraction] | None = None,
) -> Fraction:
    """Jacobi-Trudi determinant det[S_{q_i - i + j}] at the point u.

    ``parts`` need not be a partition: the determinant itself performs the
    straightening, returning a signed partition value or 0.  An empty
    sequence gives 1.  ``values`` can pass in a precomputed homogeneous
    table for the same point.
    """
    parts = [int(q) for q in parts]
    s = len(parts)
    if s == 0:
        return Fraction(1)
    if s > len(u):
        raise ValueError(f"{s} parts exceed the {len(u)} available variables")
    top = max(parts[i] - (i + 1) + s for i in range(s))
    if values is None:
        values = homogeneous_values(u, max(top, 0))
    elif len(values) <= max(top, 0):
        raise ValueError("precomputed homogeneous table is too short")

    def entry(i: int, j: int) -> Fraction:
        q = parts[i] - (i + 1) + (j + 1)
        return values[q] if q >= 0 else Fraction(0)

    return exact_det([[entry(i, j) for j in range(s)] for i in range(s)])


def alternant(coords: Sequence[int], u: Sequence[Rational]) -> Fraction:
    """det[u_i ** c_j], the alternating sum over the finite Weyl group.

    Antisymmetric under swapping two exponents; repeated exponents give
    equal columns and therefore an exact 0.  Negative exponents are fine,
    the point entries are nonzero rationals.
    """
    point = check_point(u)
    exps = [int(c) for c in coords]
    if len(exps) != len(point):
        raise ValueError("coordinate count must match the evaluation point length")
    rows = [[x**c for c in exps] for x in point]
    return exact_det(rows)


def _partition_from_labels(labels: Sequence[int], rank: int) -> tuple[int, ...]:
    labels = tuple(int(a) for a in labels)
    if len(labels) != rank:
        raise ValueError(f"expected {rank} labels, got {len(labels)}")
    if any(a < 0 for a in labels):
        raise ValueError(f"labels must be non-negative, got {labels}")
    return HorizontalWeight.from_dynkin(labels).partition()


@lru_cache(maxsize=None)
def _dimension_product(parts: tuple[int, ...], rank: int) -> int:
    # Weyl product formula on the strictly decreasing shifted coordinates
    # l_i = c_i + (rank + 1 - i).
    c = list(parts) + [0] * (rank + 1 - len(parts))
    rho = weyl_vector(rank).coords
    l = [ci + pi for ci, pi in zip(c, rho)]
    dim = Fraction(1)
    for i in range(rank + 1):
        for j in range(i + 1, rank + 1):
            dim *= Fraction(l[i] - l[j], j - i)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def weyl_dimension(labels: Sequence[int], rank: int) -> int:
    """Dimension of the irreducible A_rank module with the given labels."""
    _check_rank(rank)
    return _dimension_product(_partition_from_labels(labels, rank), rank)


def weyl_dimension_determinant(labels: Sequence[int], rank: int) -> int:
    """Same dimension via the Jacobi-Trudi determinant at u = (1, ..., 1).

    There S_q = C(q + rank, rank), so the determinant has binomial entries.
    Kept as an independent cross-check of the product formula.
    """
    _check_rank(rank)
    parts = _partition_from_labels(labels, rank)
    s = len(parts)
    if s == 0:
        return 1

    def entry(i: int, j: int) -> int:
        q = parts[i] - (i + 1) + (j + 1)
        return comb(q + rank, rank) if q >= 0 else 0

    det = exact_det([[entry(i, j) for j in range(s)] for i in range(s)])
    assert det.denominator == 1
    return int(det)
