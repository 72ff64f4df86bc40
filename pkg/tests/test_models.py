from fractions import Fraction
from math import factorial
import random

import pytest

from bincumulants.algebra import SparsePoly, ml_log, poly_substitute
from bincumulants.exceptions import ModelError, UnsupportedSizeError
from bincumulants.generators import (
    SMALL_SPLIT_MODELS_N4, fixture_names, get_fixture, secant_binomials_n4, secant_cubics_n4,
    secant_generators_n4, split_pairs_generators_n4, tangential_samples_n5)
from bincumulants.hyperdet import hyperdet_cumulants
from bincumulants.models import (
    CSISplitModel, HiddenSubsetModel, csi_to_hsm, hsm_parametrization, hsm_to_csi, kappa_poly,
    model_codimension, secant_cumulants, secant_parametrization, tangential_cumulants,
    tangential_ideal_generators_n4, tangential_moment_bracket, tangential_parametrization,
    vanishing_report, verify_vanishing)
from bincumulants.transforms import (
    BinaryTable, Coords, cumulant_namespace, higher_masks, moments_to_cumulants, probs_to_moments, zgrade)
from bincumulants.utils import elements, popcount


def hsm(text, n=None):
    return HiddenSubsetModel.parse(text, n)


def test_parse_models():
    h = hsm('{},12,34,1234')
    assert h.n == 4
    assert h.subsets == (0, 0b0011, 0b1100, 0b1111)
    assert h.labels() == ['', '12', '34', '1234']
    assert hsm('1,2', n=3).n == 3
    with pytest.raises(ModelError):
        HiddenSubsetModel(2, [1, 1])
    with pytest.raises(ModelError):
        HiddenSubsetModel(2, [])
    with pytest.raises(UnsupportedSizeError):
        HiddenSubsetModel(7, [0])


def test_parse_splits():
    c = CSISplitModel.parse('1|234;2|134;3|124;4|123')
    assert (c.n, c.m) == (4, 4)
    assert c.splits == (0b0001, 0b0010, 0b0100, 0b1000)
    assert c.labels() == ['1|234', '2|134', '3|124', '4|123']
    for bad in ('1|23;2|3', '12', '1|1', '0|1'):
        with pytest.raises(ModelError):
            CSISplitModel.parse(bad)


def test_secant_model_splits():
    c = hsm_to_csi(HiddenSubsetModel(4, [0, 0b1111]))
    assert c.m == 2
    assert all(first == 0b10 for first in c.splits)
    assert c.labels() == ['2|1'] * 4


def test_split_pairs_model_splits():
    c = hsm_to_csi(hsm('{},12,34,1234'))
    assert c.splits[0] == c.splits[1]
    assert c.splits[2] == c.splits[3]
    assert c.splits[0] != c.splits[2]
    # two classes on each side of every split
    assert all(popcount(first) == 2 for first in c.splits)


def test_csi_round_trip():
    rng = random.Random(4)
    for _ in range(100):
        subsets = rng.sample(range(16), rng.randrange(1, 17))
        h = HiddenSubsetModel(4, subsets)
        assert csi_to_hsm(hsm_to_csi(h)) == h


def test_indistinguishable_classes():
    with pytest.raises(ModelError):
        csi_to_hsm(CSISplitModel.parse('12|3;12|3'))


def test_csi_table_one_first_row():
    h = csi_to_hsm(CSISplitModel.parse('1|234;2|134;3|124;4|123'))
    assert h.labels() == ['1', '2', '3', '4']


@pytest.mark.parametrize('nu, expected', [
    (1, {1: 1}),
    (2, {1: 1, 2: -1}),
    (3, {1: 1, 2: -3, 3: 2}),
    (4, {1: 1, 2: -7, 3: 12, 4: -6}),
])
def test_kappa_polynomials(nu, expected):
    t = SparsePoly.variable('t')
    assert kappa_poly(nu) == sum((c * t ** e for e, c in expected.items()), SparsePoly.constant(0))


@pytest.mark.parametrize('nu', range(2, 7))
def test_kappa_is_the_top_cumulant_of_a_two_point_mixture(nu):
    t = SparsePoly.variable('t')
    entries = [0] * (1 << nu)
    entries[0] = 1 - t
    entries[-1] = t
    mu = BinaryTable(nu, Coords.PROB, entries)
    k = moments_to_cumulants(probs_to_moments(mu))
    assert k[(1 << nu) - 1] == kappa_poly(nu)


def test_kappa_leading_coefficient():
    for nu in range(1, 9):
        assert kappa_poly(nu).coefficient({'t': nu}) == (-1) ** (nu - 1) * factorial(nu - 1)


def test_hsm_parametrization_factors_through_b():
    for text in ('{},12,34,1234', '{},1,23,124', '1,2,3,4', '{},123'):
        h = hsm(text, n=4)
        param = hsm_parametrization(h)
        for mask, poly in param.higher():
            for powers, _ in poly.items():
                for i in range(1, 5):
                    exponent = powers.get('b{}'.format(i), 0)
                    assert exponent == (1 if mask >> (i - 1) & 1 else 0)
                assert not any(name.startswith('a') for name in powers)


def test_first_order_coordinates_use_offsets():
    param = hsm_parametrization(hsm('{},1', n=2))
    a1, b1, t0 = SparsePoly.variable('a1'), SparsePoly.variable('b1'), SparsePoly.variable('t0')
    # k_1 = a_1 + b_1 * t_1 with t_1 = 1 - t_0
    assert param.coordinates[0b01] == a1 + b1 * (1 - t0)
    assert param.coordinates[0b10] == SparsePoly.variable('a2')
    assert param.params == ('t0', 'b1', 'b2')
    assert param.offsets == ('a1', 'a2')


def test_single_subset_gives_the_product_model():
    param = hsm_parametrization(hsm('13', n=3))
    assert all(poly.is_zero() for _, poly in param.higher())


@pytest.mark.parametrize('n', [2, 3, 4])
def test_singletons_give_the_toric_parametrization(n):
    h = HiddenSubsetModel(n, [1 << i for i in range(n)])
    param = hsm_parametrization(h)
    t = [SparsePoly.variable('t{}'.format(i)) for i in range(1, n)]
    t.append(1 - sum(t, SparsePoly.constant(0)))
    s = [ti * SparsePoly.variable('b{}'.format(i)) for i, ti in enumerate(t, 1)]
    expected = tangential_cumulants(n, s)
    for mask, poly in param.higher():
        assert poly == expected[mask]


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_secant_matches_the_two_point_model(n):
    full = (1 << n) - 1
    param = hsm_parametrization(HiddenSubsetModel(n, [full, 0]))
    top = 't' + ''.join(str(i) for i in range(1, n + 1))
    bindings = {'t': SparsePoly.variable(top)}
    bindings.update({'b{}'.format(i): SparsePoly.variable('b{}'.format(i)) for i in range(1, n + 1)})
    secant = secant_parametrization(n)
    for mask, poly in param.higher():
        assert poly == poly_substitute(secant.coordinates[mask], bindings)


def test_secant_endpoints_are_products():
    b = [Fraction(2), Fraction(3), Fraction(5), Fraction(7)]
    for t in (0, 1):
        assert all(v == 0 for v in secant_cumulants(4, Fraction(t), b).values())


def test_secant_generators_vanish():
    assert len(secant_binomials_n4()) == 10
    assert len(secant_cubics_n4()) == 6
    assert verify_vanishing(secant_generators_n4(), secant_parametrization(4))


def test_tangential_generators_vanish():
    generators = tangential_ideal_generators_n4()
    assert len(generators) == 21
    assert all(len(g) >= 2 for g in generators)
    assert verify_vanishing(generators, tangential_parametrization(4))


def test_tangential_zero_point():
    assert all(v == 0 for v in tangential_cumulants(4, [0, 0, 0, 0]).values())


def test_tangential_samples_for_five_variables():
    assert verify_vanishing(tangential_samples_n5(), tangential_parametrization(5))


def test_tangential_moment_bracket():
    n = 3
    log = ml_log(tangential_moment_bracket(n))
    s = [(SparsePoly.variable('b{}'.format(i)) - SparsePoly.variable('a{}'.format(i))) / n
         for i in range(1, n + 1)]
    expected = tangential_cumulants(n, s)
    for mask in higher_masks(n):
        assert log[mask] == expected[mask]


def test_split_pairs_generators_vanish():
    generators = split_pairs_generators_n4()
    assert len(generators) == 9
    assert verify_vanishing(generators, hsm_parametrization(hsm('{},12,34,1234')))
    for g in generators:
        assert isinstance(zgrade(g, 4), tuple)


def test_sampled_mode_agrees():
    param = hsm_parametrization(hsm('{},12,34,1234'))
    assert vanishing_report(split_pairs_generators_n4(), param, mode='sampled', trials=20) == [True] * 9


def test_negative_control():
    k = cumulant_namespace(4)
    assert not verify_vanishing([k.k12], secant_parametrization(4))
    assert not verify_vanishing([k.k12], secant_parametrization(4), mode='sampled', trials=5)
    assert vanishing_report([k.k12 * k.k34 - k.k14 * k.k23, k.k12], secant_parametrization(4)) == [True, False]


def test_unknown_variables_and_modes():
    k = cumulant_namespace(5)
    with pytest.raises(ModelError):
        verify_vanishing([k.k12345], secant_parametrization(4))
    with pytest.raises(ModelError):
        verify_vanishing([], secant_parametrization(4), mode='numeric')


def test_fixtures():
    assert fixture_names() == ['det4', 'example_6_4', 'gens1_gens2', 'principal_minors_n4', 'tangential_n4']
    assert len(get_fixture('gens1_gens2')) == 16
    assert get_fixture('secant_n4') == get_fixture('gens1_gens2')
    assert get_fixture('split_pairs_n4') == get_fixture('example_6_4')
    with pytest.raises(ModelError):
        get_fixture('gens3')


@pytest.mark.parametrize('text, codim', [
    ('{},12,13,14', 7),
    ('{},12,34,1234', 4),
    ('{},12,13,14,23,24,34', 1),
    ('{},1234', 6),
])
def test_codimension(text, codim):
    h = hsm(text, n=4)
    assert {model_codimension(h, seed=seed) for seed in range(5)} == {codim}


def test_codimension_of_small_split_models():
    for labels, codim in SMALL_SPLIT_MODELS_N4:
        assert model_codimension(HiddenSubsetModel.from_labels(4, labels)) == codim, labels


@pytest.mark.slow
def test_codimension_of_small_split_models_across_seeds():
    assert len(SMALL_SPLIT_MODELS_N4) == 17
    for labels, codim in SMALL_SPLIT_MODELS_N4:
        h = HiddenSubsetModel.from_labels(4, labels)
        assert {model_codimension(h, seed=seed) for seed in range(5)} == {codim}, labels


def test_codimension_is_invariant_under_flips():
    rng = random.Random(11)
    for _ in range(5):
        subsets = rng.sample(range(16), rng.randrange(2, 6))
        J = rng.randrange(16)
        h = HiddenSubsetModel(4, subsets)
        flipped = HiddenSubsetModel(4, [I ^ J for I in subsets])
        assert model_codimension(h) == model_codimension(flipped)


def test_codimension_size_limit():
    with pytest.raises(UnsupportedSizeError):
        model_codimension(HiddenSubsetModel(6, [0, 63]))


def test_parametrization_dump():
    doc = hsm_parametrization(hsm('{},12', n=2)).to_dict()
    assert doc['params'] == ['t0', 'b1', 'b2']
    assert list(doc['coordinates']) == ['k1', 'k2', 'k12']


@pytest.mark.slow
def test_four_way_hyperdeterminant_vanishes_on_the_pairs_model():
    param = hsm_parametrization(hsm('{},12,13,14,23,24,34'))
    assert verify_vanishing([hyperdet_cumulants(4)], param, mode='sampled', trials=200, seed=0)


def test_model_elements_helper():
    assert [elements(J) for J in hsm('{},12,34').subsets] == [[], [1, 2], [3, 4]]
