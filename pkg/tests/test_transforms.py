from fractions import Fraction

import pytest

from bincumulants.algebra import SparsePoly
from bincumulants.combinatorics import CubeSymmetry
from bincumulants.exceptions import CoordinateError, UnsupportedSizeError, ValidationError
from bincumulants.transforms import (
    BinaryTable, Coords, Inhomogeneous, act_symmetry, check_independence, convert,
    cumulant_namespace, cumulant_symbols, cumulants_to_moments, moments_to_cumulants,
    moments_to_probs, parse_symbol, probs_to_moments, relabel_values, zgrade)
from bincumulants.utils import popcount

from .conftest import random_probabilities


def test_uniform_table_has_independent_cumulants():
    k = convert(BinaryTable.uniform(2), Coords.CUMULANT)
    assert k.entries == (0, Fraction(1, 2), Fraction(1, 2), 0)


def test_two_point_table():
    t = BinaryTable.from_dict(2, Coords.PROB, {0: Fraction(1, 2), 3: Fraction(1, 2)})
    k = convert(t, Coords.CUMULANT)
    assert k[0b11] == Fraction(1, 4)
    assert k[0b01] == k[0b10] == Fraction(1, 2)
    assert BinaryTable.from_labels(2, 'prob', {'{}': Fraction(1, 2), '12': Fraction(1, 2)}) == t


def test_moments_are_superset_sums():
    t = BinaryTable(2, Coords.PROB, [Fraction(1, 10), Fraction(2, 10), Fraction(3, 10), Fraction(4, 10)])
    mu = probs_to_moments(t)
    assert mu.entries == (1, Fraction(6, 10), Fraction(7, 10), Fraction(4, 10))
    assert moments_to_probs(mu) == t


def _check_round_trip(rng, n, count):
    for _ in range(count):
        p = random_probabilities(rng, n)
        mu = probs_to_moments(p)
        k = moments_to_cumulants(mu)
        assert moments_to_probs(cumulants_to_moments(k)) == p
        assert convert(convert(p, Coords.CUMULANT), Coords.PROB) == p


@pytest.mark.parametrize('n', range(1, 7))
def test_round_trip_is_exact(rng, n):
    _check_round_trip(rng, n, 100 if n <= 4 else 20)


@pytest.mark.slow
@pytest.mark.parametrize('n', range(1, 7))
def test_round_trip_is_exact_on_many_tables(rng, n):
    _check_round_trip(rng, n, 500)


@pytest.mark.parametrize('n', range(1, 6))
def test_partition_formula_agrees_with_logarithm(rng, n):
    for _ in range(20):
        mu = probs_to_moments(random_probabilities(rng, n))
        k = moments_to_cumulants(mu, method='log')
        assert moments_to_cumulants(mu, method='partition') == k
        assert cumulants_to_moments(k, method='partition') == cumulants_to_moments(k, method='exp')


def test_symbolic_cumulants():
    k = moments_to_cumulants(BinaryTable.symbolic(3, Coords.MOMENT))
    m = SparsePoly.variable
    assert k[0b011] == m('m12') - m('m1') * m('m2')
    expected = (m('m123') - m('m12') * m('m3') - m('m13') * m('m2') - m('m23') * m('m1')
                + 2 * m('m1') * m('m2') * m('m3'))
    assert k[0b111] == expected


def test_normalizations_are_checked():
    with pytest.raises(CoordinateError):
        BinaryTable(1, Coords.PROB, [Fraction(1, 2), Fraction(1, 3)])
    with pytest.raises(CoordinateError):
        BinaryTable(1, Coords.MOMENT, [2, 1])
    with pytest.raises(CoordinateError):
        BinaryTable(1, Coords.CUMULANT, [1, 1])
    with pytest.raises(ValidationError):
        BinaryTable(2, Coords.PROB, [1])
    with pytest.raises(UnsupportedSizeError):
        BinaryTable.uniform(9)


def test_wrong_coordinates_are_refused():
    with pytest.raises(CoordinateError):
        moments_to_cumulants(BinaryTable.uniform(2))
    with pytest.raises(ValidationError):
        moments_to_cumulants(probs_to_moments(BinaryTable.uniform(2)), method='series')


def test_products_have_no_higher_cumulants():
    t = BinaryTable.product([Fraction(1, 3), Fraction(1, 5), Fraction(4, 7)])
    k = moments_to_cumulants(t)
    assert k[0b001] == Fraction(1, 3)
    assert all(k[mask] == 0 for mask in range(8) if popcount(mask) >= 2)


def test_flipping_a_coordinate(rng):
    p = random_probabilities(rng, 3)
    k = convert(p, Coords.CUMULANT)
    flipped = convert(act_symmetry(p, CubeSymmetry((1, 2, 3), 0b001)), Coords.CUMULANT)
    assert flipped[0b001] == 1 - k[0b001]
    assert flipped[0b010] == k[0b010]
    for mask in range(8):
        if popcount(mask) >= 2:
            sign = -1 if mask & 0b001 else 1
            assert flipped[mask] == sign * k[mask]


def test_permuting_coordinates(rng):
    p = random_probabilities(rng, 3)
    k = convert(p, Coords.CUMULANT)
    g = CubeSymmetry((2, 3, 1))
    moved = convert(act_symmetry(p, g), Coords.CUMULANT)
    for mask in range(8):
        assert moved[g.apply(mask)] == k[mask]


def test_relabeling_scales_higher_cumulants(rng):
    p = random_probabilities(rng, 3)
    a = [Fraction(3), Fraction(-1, 2), Fraction(5, 4)]
    b = [Fraction(1), Fraction(2), Fraction(-3)]
    k = convert(p, Coords.CUMULANT)
    k2 = moments_to_cumulants(relabel_values(probs_to_moments(p), a, b))
    for mask in range(1, 8):
        if popcount(mask) == 1:
            i = mask.bit_length() - 1
            assert k2[mask] == b[i] + (a[i] - b[i]) * k[mask]
        else:
            scale = Fraction(1)
            for i in range(3):
                if mask >> i & 1:
                    scale *= a[i] - b[i]
            assert k2[mask] == scale * k[mask]


def test_independence_check():
    product = BinaryTable.product([Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)])
    assert check_independence(product, 0b001, 0b110)
    two_point = BinaryTable.from_dict(2, Coords.PROB, {0: Fraction(1, 2), 3: Fraction(1, 2)})
    assert not check_independence(two_point, 0b01, 0b10)
    # X3 independent of (X1, X2), which are dependent on each other
    joint = BinaryTable.from_dict(3, Coords.PROB, {
        0b000: Fraction(1, 4), 0b011: Fraction(1, 4), 0b100: Fraction(1, 4), 0b111: Fraction(1, 4)})
    assert check_independence(joint, 0b011, 0b100)
    assert not check_independence(joint, 0b001, 0b010)
    with pytest.raises(ValidationError):
        check_independence(joint, 0b011, 0b010)


def test_symbols_and_grading():
    assert cumulant_symbols(3) == ('k12', 'k13', 'k23', 'k123')
    assert cumulant_symbols(2, min_order=1) == ('k1', 'k2', 'k12')
    assert parse_symbol('k134') == ('k', 0b1101)
    with pytest.raises(ValidationError):
        parse_symbol('k11')
    k = cumulant_namespace(4)
    assert zgrade(k.k12 * k.k34 - k.k14 * k.k23) == (1, 1, 1, 1)
    assert zgrade(k.k123 ** 2 + 4 * k.k12 * k.k13 * k.k23, 4) == (2, 2, 2, 0)
    assert isinstance(zgrade(k.k23 * k.k1234 - k.k234 * k.k124), Inhomogeneous)
    assert zgrade(k.k12 - k.k12) is None
