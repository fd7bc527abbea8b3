"""Depth-organized character series from permutation-weight records.

The headline computation: the character of an integrable highest weight
module as an exact integer q-series.  The numerator collects, depth by
depth, sign times Weyl dimension over the orbit records of the shifted
weight; the denominator does the same for the orbit of the shifted zero
weight; their quotient stabilizes coefficient by coefficient as the depth
cutoff grows.  A variant evaluates the same graded sums at an explicit
rational point via alternants instead of dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import HorizontalWeight, inner_product, weyl_vector
from .orbits import (
    AffineDominant,
    PermutationWeightSet,
    enumerate_orbit,
)
from .qseries import QSeries
from .schur import Rational, alternant, check_point, weyl_dimension


@dataclass(frozen=True)
class CharacterSeries:
    """A character expansion with its ingredients kept for inspection."""

    weight: AffineDominant
    depth_cutoff: int
    numerator: QSeries
    denominator: QSeries
    chi: QSeries
    anomaly: Fraction

    def to_json(self) -> dict:
        return {
            "algebra": f"A{self.weight.rank}(1)",
            "weight": self.weight.to_json(),
            "M": self.depth_cutoff,
            "chi": self.chi.to_json(),
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
            "anomaly": str(self.anomaly),
        }


def signed_dimension_series(pw: PermutationWeightSet, order: int) -> QSeries:
    """Sum of sign * dim(weight - rho) * q^depth over the records.

    Exact only up to the set's own depth cutoff, so deeper truncations are
    refused rather than silently zero-padded.
    """
    if order > pw.max_depth:
        raise ValueError(
            f"order {order} exceeds the enumerated depth {pw.max_depth}"
        )
    rank = pw.spec.rank
    coeffs = [0] * (order + 1)
    for rec in pw.members:
        if rec.depth <= order:
            coeffs[rec.depth] += rec.sign * weyl_dimension(rec.labels, rank)
    return QSeries(order, tuple(coeffs))


def anomaly_exponent(dom: AffineDominant) -> Fraction:
    """Exponent of the q-prefactor fixing the modular weight of the character.

    Computed from the horizontal data alone: the cross terms of the
    isotropic directions cancel, leaving
    ((lam, lam + 2 rho) - kt * dim(A_r) / 12) / (2 kt) with
    dim(A_r) = r (r + 2).  It is not folded into the series, whose
    constant term stays at the depth-0 value.
    """
    r = dom.rank
    kt = dom.level + r + 1
    lam = dom.lambda_plus
    rho = weyl_vector(r)
    val = inner_product(lam, lam + rho + rho)
    return (val - Fraction(kt * r * (r + 2), 12)) / (2 * kt)


def normalized_character(
    dom: AffineDominant, depth_cutoff: int, method: str = "translation"
) -> CharacterSeries:
    """Character series through q^depth_cutoff, exact integers.

    Both enumeration methods produce identical results; "translation" is
    the default because it is the cheaper of the two.
    """
    if depth_cutoff < 0:
        raise ValueError(f"depth cutoff must be >= 0, got {depth_cutoff}")
    num_set = enumerate_orbit(dom, depth_cutoff, method)
    den_set = enumerate_orbit(AffineDominant.zero(dom.rank), depth_cutoff, method)
    numerator = signed_dimension_series(num_set, depth_cutoff)
    denominator = signed_dimension_series(den_set, depth_cutoff)
    return CharacterSeries(
        weight=dom,
        depth_cutoff=depth_cutoff,
        numerator=numerator,
        denominator=denominator,
        chi=numerator / denominator,
        anomaly=anomaly_exponent(dom),
    )


def character_at_point(
    dom: AffineDominant,
    u: Sequence[Rational],
    depth_cutoff: int,
    method: str = "translation",
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Depth-graded numerator and denominator at an explicit rational point.

    Each depth coefficient is the signed sum of alternants of the record
    weights.  The point entries must be pairwise distinct, otherwise every
    alternant collapses to 0; the all-equal limit is what
    ``normalized_character`` computes through dimensions instead.
    """
    point = check_point(u)
    if len(point) != dom.rank + 1:
        raise ValueError(f"evaluation point must have {dom.rank + 1} entries")
    if len(set(point)) != len(point):
        raise ValueError("evaluation point entries must be pairwise distinct")
    if depth_cutoff < 0:
        raise ValueError(f"depth cutoff must be >= 0, got {depth_cutoff}")

    def graded(dominant: AffineDominant) -> tuple[Fraction, ...]:
        records = enumerate_orbit(dominant, depth_cutoff, method)
        out = [Fraction(0)] * (depth_cutoff + 1)
        for rec in records:
            out[rec.depth] += rec.sign * alternant(rec.weight.canonical, point)
        return tuple(out)

    return graded(dom), graded(AffineDominant.zero(dom.rank))
