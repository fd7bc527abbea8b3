import random
from fractions import Fraction

import pytest

from affinechar import QSeries, basic_character_series, euler_product, lattice_theta
from golden import CHI_VACUUM_A4, THETA_A4


def geometric(trunc):
    return QSeries(trunc, (1,) * (trunc + 1))


def test_construction_validation():
    with pytest.raises(ValueError):
        QSeries(2, (1, 2))
    with pytest.raises(ValueError):
        QSeries(-1, ())


def test_basic_arithmetic():
    one_plus = QSeries.from_coeffs([1, 1], trunc=3)
    one_minus = QSeries.from_coeffs([1, -1], trunc=3)
    assert (one_plus * one_minus).coeffs == (1, 0, -1, 0)
    assert (QSeries.one(4) / one_minus.truncated(3)).coeffs == (1, 1, 1, 1)


def test_min_truncation_semantics():
    a = QSeries.one(8)
    b = QSeries.one(3)
    assert (a + b).trunc == 3
    assert (a * b).trunc == 3
    assert (a - b).trunc == 3
    assert (a / b).trunc == 3


def test_coefficient_access_is_honest():
    a = QSeries.one(3)
    with pytest.raises(IndexError):
        a[4]
    with pytest.raises(ValueError):
        a.truncated(9)


def test_division_requires_unit():
    two = QSeries.from_coeffs([2, 1], trunc=2)
    with pytest.raises(ValueError):
        QSeries.one(2) / two
    half = QSeries.from_coeffs([Fraction(1, 2), 1], trunc=2)
    assert (half / half).coeffs == (1, 0, 0)
    zero_const = QSeries.from_coeffs([Fraction(0), 1], trunc=2)
    with pytest.raises(ValueError):
        QSeries.one(2) / zero_const


def _random_series(rng, trunc, lo=-9, hi=9):
    return QSeries(trunc, tuple(rng.randint(lo, hi) for _ in range(trunc + 1)))


def test_ring_axioms_random():
    rng = random.Random(23)
    for _ in range(25):
        a = _random_series(rng, 16)
        b = _random_series(rng, 16)
        c = _random_series(rng, 16)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_divide_inverts_multiply():
    rng = random.Random(29)
    for _ in range(25):
        a = _random_series(rng, 12)
        b_coeffs = [rng.choice((1, -1))] + [rng.randint(-6, 6) for _ in range(12)]
        b = QSeries(12, tuple(b_coeffs))
        q = a / b
        assert q * b == a
        assert (a * b) / b == a


def test_euler_product_coefficients():
    # pentagonal-number expansion: 1 - q - q^2 + q^5 + q^7 - q^12 - ...
    assert euler_product(7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)
    assert euler_product(12).coeffs[8:] == (0, 0, 0, 0, -1)


def partition_counts(n_max):
    """Dynamic-programming partition counter, independent of the series ring."""
    table = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for n in range(part, n_max + 1):
            table[n] += table[n - part]
    return table


def test_inverse_euler_product_counts_partitions():
    counts = partition_counts(50)
    series = QSeries.one(50) / euler_product(50)
    assert list(series.coeffs) == counts


def test_four_colored_partitions():
    series = QSeries.one(8) / euler_product(8) ** 4
    assert series.coeffs[:5] == (1, 4, 14, 40, 105)
    # independent route: four-fold convolution of ordinary partition counts
    counts = partition_counts(8)
    conv = [0] * 9
    for a in range(9):
        for b in range(9 - a):
            for c in range(9 - a - b):
                d = 8 - a - b - c
                for dd in range(d + 1):
                    conv[a + b + c + dd] += counts[a] * counts[b] * counts[c] * counts[dd]
    assert list(series.coeffs) == conv


def test_lattice_theta():
    assert lattice_theta(4, 8).coeffs == THETA_A4
    assert lattice_theta(1, 2).coeffs == (1, 2, 0)
    for rank in range(1, 6):
        assert lattice_theta(rank, 0).coeffs == (1,)
    for rank in range(1, 6):
        series = lattice_theta(rank, 6)
        assert all(c >= 0 for c in series.coeffs)
        assert all(c % 2 == 0 for c in series.coeffs[1:])  # shells close under negation


def test_basic_character_series():
    assert basic_character_series(4, 7).coeffs == CHI_VACUUM_A4
    assert basic_character_series(4, 2).coeffs == (1, 24, 124)
    for rank in range(1, 6):
        assert basic_character_series(rank, 0).coeffs == (1,)


def test_json_round_trip():
    a = QSeries.from_coeffs([1, -24, 252], trunc=4)
    data = a.to_json()
    assert data == {"trunc": 4, "coeffs": ["1", "-24", "252", "0", "0"]}
    assert QSeries.from_json(data) == a
    b = QSeries.from_coeffs([Fraction(1, 2), 3], trunc=1)
    assert QSeries.from_json(b.to_json()) == b
