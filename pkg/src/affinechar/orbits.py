"""Depth-organized enumeration of affine Weyl orbits of A_r^(1).

An affine dominant weight at level k is shifted by the affine Weyl vector
and then has level kt = k + r + 1 and a strictly dominant horizontal part.
Each element of its affine Weyl orbit is determined by a dominant
horizontal weight together with a non-negative depth (the coefficient on
the imaginary grading direction) and a sign.  This module enumerates those
records up to a depth cutoff by two independent routes:

* ``enumerate_translations`` realizes the orbit directly: translate the
  horizontal part by kt times a root-lattice vector, sort the coordinates,
  and read the sign off the sorting permutation.

* ``enumerate_compositions`` assembles the orbit out of the level-1
  fundamental orbits, whose members are exactly the dominant solutions of
  the norm condition in the right root-lattice congruence class.

Both produce the same sets; the cross-check is part of the test suite.
Signs are also computable without any sorting permutation, from the
residues of the sum-aligned coordinates modulo kt (``signature``), and the
two sign routes must agree member by member.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator, Sequence

from .lattice import (
    HorizontalWeight,
    _check_rank,
    _shell_coords,
    fundamental_dominant,
    weyl_vector,
)


def _scaled_norm(coords: Sequence[int]) -> int:
    """(r+1) times the invariant norm: integer-exact on any representative."""
    n = len(coords)
    return n * sum(c * c for c in coords) - sum(coords) ** 2


@dataclass(frozen=True)
class AffineDominant:
    """An affine dominant weight: level plus horizontal Dynkin labels.

    The height of the horizontal part may not exceed the level (the level-0
    case is the zero weight, used for denominator orbits).
    """

    level: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(int(a) for a in self.labels)
        object.__setattr__(self, "labels", labels)
        _check_rank(len(labels))
        if any(a < 0 for a in labels):
            raise ValueError(f"labels must be non-negative, got {labels}")
        if self.level < 0:
            raise ValueError(f"level must be >= 0, got {self.level}")
        if self.height > self.level:
            raise ValueError(
                f"height {self.height} of labels {labels} exceeds level {self.level}"
            )

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def lambda_plus(self) -> HorizontalWeight:
        return HorizontalWeight.from_dynkin(self.labels)

    @property
    def height(self) -> int:
        return self.lambda_plus.height()

    @classmethod
    def vacuum(cls, rank: int, level: int = 1) -> "AffineDominant":
        """level * Lambda_0: zero horizontal part."""
        return cls(level, (0,) * rank)

    @classmethod
    def zero(cls, rank: int) -> "AffineDominant":
        """The formal level-0 weight used for denominator orbits."""
        return cls(0, (0,) * rank)

    def to_json(self) -> dict:
        return {"k": self.level, "labels": list(self.labels)}


@dataclass(frozen=True)
class ShiftedOrbitSpec:
    """The data of a shifted orbit: level kt, horizontal part, alignment sum.

    The horizontal part is strictly dominant and its coordinate spread is
    below kt, so its canonical coordinates are distinct residues mod kt;
    that regularity is what makes every orbit member's sorting permutation
    unambiguous.
    """

    rank: int
    level: int  # kt
    lambda_tilde: HorizontalWeight
    sum_ref: int

    def __post_init__(self) -> None:
        c = self.lambda_tilde.canonical
        if any(c[i] <= c[i + 1] for i in range(len(c) - 1)):
            raise ValueError(f"shifted weight must be strictly dominant, got {c}")
        if c[0] - c[-1] >= self.level:
            raise ValueError(
                f"coordinate spread {c[0] - c[-1]} must be below the level {self.level}"
            )
        if self.sum_ref != sum(c):
            raise ValueError("sum_ref must be the canonical coordinate sum")

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(c % self.level for c in self.lambda_tilde.canonical)


def make_shifted_spec(dom: AffineDominant) -> ShiftedOrbitSpec:
    """Shift by the affine Weyl vector: level k + r + 1, horizontal rho + lambda."""
    r = dom.rank
    lam = HorizontalWeight(
        tuple(a + b for a, b in zip(weyl_vector(r).coords, dom.lambda_plus.canonical))
    )
    return ShiftedOrbitSpec(r, dom.level + r + 1, lam, sum(lam.canonical))


@dataclass(frozen=True)
class PermutationWeight:
    """One orbit record: dominant weight, depth, sign, and its label view.

    ``labels`` are the Dynkin labels of the weight minus the Weyl vector;
    that is the form in which orbit tables are usually written.
    """

    weight: HorizontalWeight
    depth: int
    sign: int
    labels: tuple[int, ...]

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "depth": self.depth, "sign": self.sign}

    def notation(self) -> str:
        return "(" + ",".join(str(a) for a in self.labels) + f")_{self.depth}"


def _member_key(pw: PermutationWeight) -> tuple:
    # depth ascending, then labels in descending lexicographic order
    return (pw.depth, tuple(-a for a in pw.labels))


@dataclass(frozen=True)
class PermutationWeightSet:
    """All orbit records with depth <= max_depth, canonically sorted."""

    spec: ShiftedOrbitSpec
    max_depth: int
    members: tuple[PermutationWeight, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[PermutationWeight]:
        return iter(self.members)

    def at_depth(self, depth: int) -> tuple[PermutationWeight, ...]:
        return tuple(pw for pw in self.members if pw.depth == depth)

    def labels_with_depth(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        return tuple((pw.labels, pw.depth) for pw in self.members)

    def to_json(self) -> list[dict]:
        return [pw.to_json() for pw in self.members]


def signature_index(s: Sequence[int]) -> int:
    """+1/-1 parity of sorting ``s`` into strictly decreasing order; 0 on ties."""
    s = list(s)
    inversions = 0
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] == s[j]:
                return 0
            if s[i] < s[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def _aligned_coords(mu: HorizontalWeight, spec: ShiftedOrbitSpec) -> tuple[int, ...]:
    """Representative of mu whose coordinate sum equals the spec's reference.

    The alignment shift must be an all-ones multiple; a residue shift is a
    nontrivial permutation of residues mod kt, so skipping this step can
    silently flip signs.
    """
    delta = spec.sum_ref - mu.coord_sum
    size = spec.rank + 1
    if delta % size:
        raise ValueError(
            f"weight sum {mu.coord_sum} is in the wrong congruence class "
            f"mod {size} for this orbit (expected {spec.sum_ref % size})"
        )
    t = delta // size
    return tuple(c + t for c in mu.coords)


def signature(mu: HorizontalWeight, spec: ShiftedOrbitSpec) -> int:
    """Sign of an orbit member from residues of its aligned coordinates mod kt."""
    if not mu.is_dominant:
        raise ValueError(f"signature needs a dominant weight, got {mu.canonical}")
    aligned = _aligned_coords(mu, spec)
    return signature_index([c % spec.level for c in aligned])


def is_permutation_weight(mu: HorizontalWeight, spec: ShiftedOrbitSpec) -> bool:
    """Whether mu is the dominant weight of some orbit record.

    Membership is the residue test: after sum alignment the multiset of
    coordinates mod kt must equal that of the orbit's horizontal part.
    The norm condition alone does not imply this for levels above 1.
    """
    if not mu.is_dominant:
        raise ValueError(f"membership test needs a dominant weight, got {mu.canonical}")
    aligned = _aligned_coords(mu, spec)
    kt = spec.level
    return sorted(c % kt for c in aligned) == sorted(spec.residues)


def depth_of(mu: HorizontalWeight, spec: ShiftedOrbitSpec) -> int | None:
    """Depth of mu in the orbit, or None if mu is not an orbit member.

    The candidate depth comes from the norm condition
    (mu, mu) - (lam, lam) = 2 * kt * depth; it must be a non-negative
    integer and the residue membership test must also pass.
    """
    if not mu.is_dominant:
        raise ValueError(f"depth_of needs a dominant weight, got {mu.canonical}")
    size = spec.rank + 1
    if (spec.sum_ref - mu.coord_sum) % size:
        return None
    # scaled by (r+1): diff = (r+1) * [(mu,mu) - (lam,lam)]
    diff = _scaled_norm(mu.coords) - _scaled_norm(spec.lambda_tilde.coords)
    step = size * 2 * spec.level
    if diff < 0 or diff % step:
        return None
    if not is_permutation_weight(mu, spec):
        return None
    return diff // step


def _descending_inversions(v: Sequence[int]) -> int | None:
    """Inversion count against descending order; None if two entries tie."""
    inv = 0
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] == v[j]:
                return None
            if v[i] < v[j]:
                inv += 1
    return inv


def _shell_can_reach(
    n: int, kt: int, max_depth: int, size: int, scaled_norm: int
) -> bool:
    # Minimum depth on shell n is at least kt*n - sqrt(2n * (lam,lam));
    # exact integer form of "that lower bound <= max_depth".
    lhs = kt * n - max_depth
    if lhs <= 0:
        return True
    return size * lhs * lhs <= 2 * n * scaled_norm


def enumerate_translations(spec: ShiftedOrbitSpec, max_depth: int) -> PermutationWeightSet:
    """All orbit records with depth <= max_depth, by root-lattice translation.

    For each root-lattice vector a, the translated coordinates
    lam + kt * a sit at depth (lam, a) + kt * (a, a) / 2; sorting them
    descending yields the dominant weight, and the parity of the sort is
    the sign.  Because the depth is a positive-definite quadratic in a,
    scanning shells in order of (a, a) with the Cauchy-Schwarz stopping
    bound is exhaustive.
    """
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    lam = spec.lambda_tilde.canonical
    kt = spec.level
    size = spec.rank + 1
    scaled = _scaled_norm(lam)
    seen: dict[tuple[int, ...], PermutationWeight] = {}
    n = 0
    while _shell_can_reach(n, kt, max_depth, size, scaled):
        for alpha in _shell_coords(spec.rank, n):
            depth = sum(l * a for l, a in zip(lam, alpha)) + kt * n
            if depth < 0 or depth > max_depth:
                continue
            v = [l + kt * a for l, a in zip(lam, alpha)]
            inv = _descending_inversions(v)
            if inv is None:  # cannot happen for a regular orbit; kept as a guard
                continue
            v.sort(reverse=True)
            shift = v[-1]
            canon = tuple(c - shift for c in v)
            labels = tuple(canon[i] - canon[i + 1] - 1 for i in range(spec.rank))
            record = PermutationWeight(
                weight=HorizontalWeight(canon),
                depth=depth,
                sign=-1 if inv % 2 else 1,
                labels=labels,
            )
            previous = seen.setdefault(canon, record)
            assert previous.depth == record.depth and previous.sign == record.sign
        n += 1
    members = tuple(sorted(seen.values(), key=_member_key))
    return PermutationWeightSet(spec, max_depth, members)


def _dominant_candidates(rank: int, scaled_bound: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing non-negative tuples (c_1..c_r, 0) of bounded norm.

    A canonical dominant weight with largest coordinate c has norm at least
    c^2 / 2, which bounds the search box.
    """
    size = rank + 1
    top = isqrt(max(2 * scaled_bound // size, 0)) + 1
    prefix: list[int] = []

    def rec_desc(pos: int, limit: int):
        if pos == rank:
            yield tuple(prefix) + (0,)
            return
        for v in range(limit, -1, -1):
            prefix.append(v)
            yield from rec_desc(pos + 1, v)
            prefix.pop()

    yield from rec_desc(0, top)


@lru_cache(maxsize=None)
def enumerate_fundamental(
    nu: int, rank: int, max_depth: int
) -> tuple[tuple[HorizontalWeight, int], ...]:
    """Depth-tagged members of the level-1 orbit of the nu-th fundamental weight.

    At level 1 the norm condition plus the root-lattice congruence class is
    the whole membership story, so this is a direct search over dominant
    weights: keep those whose coordinate sum is nu mod r+1 and whose norm
    excess over the fundamental weight is twice a depth <= max_depth.
    Signs are not attached; these records are building blocks for
    ``enumerate_compositions``.
    """
    _check_rank(rank)
    if not 0 <= nu <= rank:
        raise ValueError(f"fundamental index must be in 0..{rank}, got {nu}")
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    size = rank + 1
    base = fundamental_dominant(rank, nu)
    base_scaled = _scaled_norm(base.coords)
    scaled_bound = base_scaled + 2 * max_depth * size
    out = []
    for cand in _dominant_candidates(rank, scaled_bound):
        if sum(cand) % size != nu % size:
            continue
        diff = _scaled_norm(cand) - base_scaled
        if diff < 0 or diff > 2 * max_depth * size:
            continue
        assert diff % (2 * size) == 0  # forced within the congruence class
        out.append((HorizontalWeight(cand), diff // (2 * size)))
    out.sort(key=lambda rec: (rec[1], tuple(-a for a in rec[0].dynkin_labels)))
    return tuple(out)


def enumerate_compositions(dom: AffineDominant, max_depth: int) -> PermutationWeightSet:
    """All orbit records with depth <= max_depth, by composing fundamental orbits.

    The shifted weight decomposes into affine fundamental weights with
    multiplicities 1 + label on each node and 1 + level - height on the
    affine node.  Candidate records are sums of one fundamental-orbit
    member per copy with depth budget max_depth; a sum is kept exactly
    when the orbit depth of the total equals the sum of the member depths.
    """
    if max_depth < 0:
        raise ValueError(f"max_depth must be >= 0, got {max_depth}")
    spec = make_shifted_spec(dom)
    rank = dom.rank
    size = rank + 1
    rho = weyl_vector(rank)
    # one affine fundamental per unit of level: 1 + label on each finite node,
    # and the balance on the affine node so the levels add up to kt
    mult = [dom.level + 1 - sum(dom.labels)] + [1 + a for a in dom.labels]
    groups = [(nu, m) for nu, m in enumerate(mult) if m > 0]
    fund = {nu: enumerate_fundamental(nu, rank, max_depth) for nu, _ in groups}

    seen: dict[tuple[int, ...], PermutationWeight] = {}

    def finalize(coords: list[int], parts_depth: int) -> None:
        total = HorizontalWeight(tuple(coords))
        # sums of dominant weights are dominant, so depth_of is applicable
        if depth_of(total, spec) != parts_depth:
            return
        canon = total.canonical
        if canon in seen:
            return
        labels = tuple(
            (canon[i] - canon[i + 1]) - (rho.coords[i] - rho.coords[i + 1])
            for i in range(rank)
        )
        seen[canon] = PermutationWeight(
            weight=HorizontalWeight(canon),
            depth=parts_depth,
            sign=signature(total, spec),
            labels=labels,
        )

    def rec(gi: int, slot: int, start: int, coords: list[int], used: int) -> None:
        if gi == len(groups):
            finalize(coords, used)
            return
        nu, m = groups[gi]
        if slot == m:
            rec(gi + 1, 0, 0, coords, used)
            return
        members = fund[nu]
        for idx in range(start, len(members)):
            w, d = members[idx]
            if used + d > max_depth:
                break  # members are sorted by depth
            nxt = [c + wc for c, wc in zip(coords, w.coords)]
            rec(gi, slot + 1, idx, nxt, used + d)

    rec(0, 0, 0, [0] * size, 0)
    members = tuple(sorted(seen.values(), key=_member_key))
    return PermutationWeightSet(spec, max_depth, members)


def enumerate_orbit(
    dom: AffineDominant, max_depth: int, method: str = "translation"
) -> PermutationWeightSet:
    """Dispatch on the enumeration method: "translation" or "lemma"."""
    if method == "translation":
        return enumerate_translations(make_shifted_spec(dom), max_depth)
    if method == "lemma":
        return enumerate_compositions(dom, max_depth)
    raise ValueError(f"unknown method {method!r}: expected 'translation' or 'lemma'")
