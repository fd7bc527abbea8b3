"""Shell-organized character sums: the theta-function route.

The conventional computation groups the alternating sum over the affine
Weyl group by root-lattice shells instead of by depth.  Each shell n
contributes a q-polynomial: for every root-lattice vector a with
(a, a) = 2n, translate the shifted horizontal weight by kt * a, sort, and
add sign * dimension * q^depth.  A single shell spreads over many depths,
so a truncated shell sum is only trustworthy up to the first depth the
omitted shells could reach; ``guaranteed_order`` computes that bound.
This is the independent oracle against which the depth-organized engine
is validated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import HorizontalWeight, _shell_coords, weyl_vector
from .orbits import (
    AffineDominant,
    ShiftedOrbitSpec,
    _descending_inversions,
    _scaled_norm,
    _shell_can_reach,
    make_shifted_spec,
)
from .qseries import QSeries
from .schur import weyl_dimension


@dataclass(frozen=True)
class ShellPolynomial:
    """The q-polynomial contributed by one root-lattice shell."""

    shell: int
    series: QSeries

    def to_json(self) -> dict:
        return {"shell": self.shell, "series": self.series.to_json()}


def shell_polynomial(dom: AffineDominant, shell: int, order: int) -> ShellPolynomial:
    """Signed-dimension q-polynomial of shell ``shell``, truncated at ``order``.

    Shell 0 is the single identity term: dimension of the horizontal part
    times q^0 (just 1 when the horizontal part vanishes).  Higher shells
    have zero constant term because the depth of any nonzero translate of
    a regular weight is positive.
    """
    if shell < 0:
        raise ValueError(f"shell index must be >= 0, got {shell}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    spec = make_shifted_spec(dom)
    lam = spec.lambda_tilde.canonical
    kt = spec.level
    rank = dom.rank
    coeffs = [0] * (order + 1)
    for alpha in _shell_coords(rank, shell):
        depth = sum(l * a for l, a in zip(lam, alpha)) + kt * shell
        if depth < 0 or depth > order:
            continue
        v = [l + kt * a for l, a in zip(lam, alpha)]
        inv = _descending_inversions(v)
        if inv is None:  # tied coordinates contribute nothing
            continue
        v.sort(reverse=True)
        labels = tuple(v[i] - v[i + 1] - 1 for i in range(rank))
        term = weyl_dimension(labels, rank)
        coeffs[depth] += -term if inv % 2 else term
    return ShellPolynomial(shell, QSeries(order, tuple(coeffs)))


def _min_depth_beyond(spec: ShiftedOrbitSpec, first_shell: int) -> int:
    """Smallest depth reachable by any shell >= first_shell."""
    lam = spec.lambda_tilde.canonical
    kt = spec.level
    size = spec.rank + 1
    scaled = _scaled_norm(lam)
    best: int | None = None
    n = first_shell
    while best is None or _shell_can_reach(n, kt, best - 1, size, scaled):
        depths = [
            sum(l * a for l, a in zip(lam, alpha)) + kt * n
            for alpha in _shell_coords(spec.rank, n)
        ]
        if depths:
            low = min(depths)
            if best is None or low < best:
                best = low
        n += 1
    return best


def guaranteed_order(dom: AffineDominant, shells: int) -> int:
    """Highest q-order at which a sum over shells 0..shells is final.

    Coefficients above this order may still receive contributions from
    omitted shells of either the orbit itself or the denominator orbit.
    """
    if shells < 0:
        raise ValueError(f"shell cutoff must be >= 0, got {shells}")
    num = _min_depth_beyond(make_shifted_spec(dom), shells + 1)
    den = _min_depth_beyond(make_shifted_spec(AffineDominant.zero(dom.rank)), shells + 1)
    return min(num, den) - 1


def oracle_character(dom: AffineDominant, shells: int, order: int) -> QSeries:
    """Character series from truncated shell sums.

    Returns the ratio of the shell sums for the weight's orbit and the
    denominator orbit, truncated to min(order, guaranteed_order): beyond
    that the truncation is no longer faithful and coefficients are not
    reported at all.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    trusted = min(order, guaranteed_order(dom, shells))
    num = QSeries.zero(trusted)
    den = QSeries.zero(trusted)
    zero_dom = AffineDominant.zero(dom.rank)
    for n in range(shells + 1):
        num = num + shell_polynomial(dom, n, trusted).series
        den = den + shell_polynomial(zero_dom, n, trusted).series
    return num / den
