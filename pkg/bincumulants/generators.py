"""Published relations among binary cumulants, kept as data.

Each builder returns fresh :py:class:`~bincumulants.algebra.SparsePoly`
objects over the canonical cumulant variables. The vanishing tests are what
check the transcription.
"""
from .exceptions import ModelError
from .transforms import cumulant_namespace

__all__ = [
    'secant_binomials_n4', 'secant_cubics_n4', 'secant_generators_n4',
    'tangential_generators_n4', 'tangential_samples_n5', 'principal_minor_generators',
    'split_pairs_generators_n4', 'SMALL_SPLIT_MODELS_N4', 'fixture_names', 'get_fixture'
]


def secant_binomials_n4():
    """The ten binomial quadrics of the secant variety"""
    k = cumulant_namespace(4)
    return [
        k.k12 * k.k34 - k.k14 * k.k23,
        k.k13 * k.k24 - k.k14 * k.k23,
        k.k12 * k.k134 - k.k14 * k.k123,
        k.k13 * k.k124 - k.k14 * k.k123,
        k.k12 * k.k234 - k.k24 * k.k123,
        k.k23 * k.k124 - k.k24 * k.k123,
        k.k13 * k.k234 - k.k34 * k.k123,
        k.k23 * k.k134 - k.k34 * k.k123,
        k.k14 * k.k234 - k.k34 * k.k124,
        k.k24 * k.k134 - k.k34 * k.k124,
    ]


def _secant_brackets(k):
    # the parenthesized cubics, paired with the quadric that multiplies L
    return [
        (k.k12, k.k123 * k.k124 + 4 * k.k12 * k.k14 * k.k23),
        (k.k13, k.k123 * k.k134 + 4 * k.k13 * k.k14 * k.k23),
        (k.k14, k.k124 * k.k134 + 4 * k.k14 * k.k14 * k.k23),
        (k.k23, k.k123 * k.k234 + 4 * k.k23 * k.k14 * k.k23),
        (k.k24, k.k124 * k.k234 + 4 * k.k24 * k.k14 * k.k23),
        (k.k34, k.k134 * k.k234 + 4 * k.k34 * k.k14 * k.k23),
    ]


def _toric_quadric(k):
    return k.k1234 + 6 * k.k14 * k.k23


def secant_cubics_n4():
    """The six non-binomial cubics ``k_ij L - (...)``"""
    k = cumulant_namespace(4)
    L = _toric_quadric(k)
    return [factor * L - bracket for factor, bracket in _secant_brackets(k)]


def secant_generators_n4():
    return secant_binomials_n4() + secant_cubics_n4()


def tangential_generators_n4():
    """The 21 generators of the tangential variety in cumulants"""
    k = cumulant_namespace(4)
    hyperdets = [
        k.k234 ** 2 + 4 * k.k23 * k.k24 * k.k34,
        k.k134 ** 2 + 4 * k.k13 * k.k14 * k.k34,
        k.k124 ** 2 + 4 * k.k12 * k.k14 * k.k24,
        k.k123 ** 2 + 4 * k.k12 * k.k13 * k.k23,
    ]
    brackets = [bracket for _, bracket in _secant_brackets(k)]
    return secant_binomials_n4() + [_toric_quadric(k)] + brackets + hyperdets


def tangential_samples_n5():
    """Sample relations of the tangential variety for five binary variables"""
    k = cumulant_namespace(5)
    return [
        k.k123 * k.k45 - k.k12 * k.k345,
        k.k123 * k.k345 - k.k135 * k.k234,
        k.k1234 + 6 * k.k14 * k.k23,
        k.k12345 + 12 * k.k12 * k.k345,
        k.k123 * k.k124 + 4 * k.k12 * k.k14 * k.k23,
        k.k123 ** 2 + 4 * k.k12 * k.k13 * k.k23,
    ]


def principal_minor_generators():
    """The twenty relations among cumulants of symmetric 4x4 principal minors"""
    k = cumulant_namespace(4)
    return [
        4 * k.k12 * k.k13 * k.k23 + k.k123 ** 2,
        4 * k.k12 * k.k14 * k.k24 + k.k124 ** 2,
        4 * k.k13 * k.k14 * k.k34 + k.k134 ** 2,
        4 * k.k23 * k.k24 * k.k34 + k.k234 ** 2,
        4 * k.k12 * k.k13 * k.k14 * k.k234 + k.k123 * k.k124 * k.k134,
        4 * k.k12 * k.k23 * k.k24 * k.k134 + k.k123 * k.k124 * k.k234,
        4 * k.k13 * k.k23 * k.k34 * k.k124 + k.k123 * k.k134 * k.k234,
        4 * k.k14 * k.k24 * k.k34 * k.k123 + k.k124 * k.k134 * k.k234,
        2 * k.k12 * k.k13 * k.k234 + 2 * k.k12 * k.k23 * k.k134 + 2 * k.k13 * k.k23 * k.k124
        + k.k123 * k.k1234,
        2 * k.k12 * k.k14 * k.k234 + 2 * k.k12 * k.k24 * k.k134 + 2 * k.k14 * k.k24 * k.k123
        + k.k124 * k.k1234,
        2 * k.k13 * k.k14 * k.k234 + 2 * k.k13 * k.k34 * k.k124 + 2 * k.k14 * k.k34 * k.k123
        + k.k134 * k.k1234,
        2 * k.k23 * k.k24 * k.k134 + 2 * k.k23 * k.k34 * k.k124 + 2 * k.k24 * k.k34 * k.k123
        + k.k234 * k.k1234,
        -2 * k.k12 * k.k13 * k.k14 * k.k1234 + k.k12 * k.k13 * k.k124 * k.k134
        + k.k12 * k.k14 * k.k123 * k.k134 + k.k13 * k.k14 * k.k123 * k.k124,
        -2 * k.k12 * k.k23 * k.k24 * k.k1234 + k.k12 * k.k23 * k.k124 * k.k234
        + k.k12 * k.k24 * k.k123 * k.k234 + k.k23 * k.k24 * k.k123 * k.k124,
        -2 * k.k13 * k.k23 * k.k34 * k.k1234 + k.k13 * k.k23 * k.k134 * k.k234
        + k.k13 * k.k34 * k.k123 * k.k234 + k.k23 * k.k34 * k.k123 * k.k134,
        -2 * k.k14 * k.k24 * k.k34 * k.k1234 + k.k14 * k.k24 * k.k134 * k.k234
        + k.k14 * k.k34 * k.k124 * k.k234 + k.k24 * k.k34 * k.k124 * k.k134,
        k.k14 * k.k123 * k.k234 - k.k23 * k.k124 * k.k134,
        k.k13 * k.k124 * k.k234 - k.k24 * k.k123 * k.k134,
        k.k12 * k.k134 * k.k234 - k.k34 * k.k123 * k.k124,
        4 * (k.k12 * k.k13 * k.k24 * k.k34 + k.k12 * k.k14 * k.k23 * k.k34
             + k.k13 * k.k14 * k.k23 * k.k24)
        - 2 * (k.k14 * k.k123 * k.k234 + k.k24 * k.k123 * k.k134 + k.k34 * k.k123 * k.k124)
        - k.k1234 ** 2,
    ]


def split_pairs_generators_n4():
    """Relations of the hidden subset model ``{0, 12, 34, 1234}``.

    The eighth relation is printed with ``k23 k1234`` in its source; that
    form is not homogeneous in the Z^4 grading, and ``k24 k1234`` is the
    homogeneous relation that the model satisfies.
    """
    k = cumulant_namespace(4)
    return [
        k.k13 * k.k24 - k.k14 * k.k23,
        k.k13 * k.k124 - k.k14 * k.k123,
        k.k13 * k.k234 - k.k23 * k.k134,
        k.k14 * k.k234 - k.k24 * k.k134,
        k.k23 * k.k124 - k.k24 * k.k123,
        k.k23 * k.k1234 - k.k234 * k.k123 + 2 * k.k14 * k.k23 ** 2,
        k.k13 * k.k1234 - k.k134 * k.k123 + 2 * k.k14 * k.k13 * k.k23,
        k.k24 * k.k1234 - k.k234 * k.k124 + 2 * k.k14 * k.k24 * k.k23,
        k.k14 * k.k1234 - k.k134 * k.k124 + 2 * k.k14 ** 2 * k.k23,
    ]


#: The seventeen non-degenerate split models with at most four hidden
#: classes for n = 4: (hidden subsets, codimension).
SMALL_SPLIT_MODELS_N4 = [
    (('', '12', '13', '14'), 7),
    (('', '12', '13', '4'), 6),
    (('', '1', '2', '34'), 6),
    (('', '1', '23', '234'), 6),
    (('', '1', '234', '1234'), 6),
    (('', '1', '2', '134'), 5),
    (('', '1', '12', '234'), 5),
    (('', '1', '123', '234'), 5),
    (('', '1', '23', '124'), 5),
    (('', '12', '134', '234'), 5),
    (('', '12', '13', '24'), 4),
    (('', '13', '23', '124'), 4),
    (('', '12', '34', '1234'), 4),
    (('', '1', '234'), 6),
    (('', '12', '134'), 6),
    (('', '12', '34'), 5),
    (('', '1234'), 6),
]


def _hyperdet_n4():
    from .hyperdet import hyperdet_cumulants
    return [hyperdet_cumulants(4)]


_FIXTURES = {
    'gens1_gens2': secant_generators_n4,
    'tangential_n4': tangential_generators_n4,
    'principal_minors_n4': principal_minor_generators,
    'example_6_4': split_pairs_generators_n4,
    'det4': _hyperdet_n4,
}

# older names, still accepted by get_fixture
_ALIASES = {
    'secant_n4': 'gens1_gens2',
    'split_pairs_n4': 'example_6_4',
}


def fixture_names():
    return sorted(_FIXTURES)


def get_fixture(name):
    """Generator list by name.

    :raises ModelError: for unknown names
    """
    try:
        builder = _FIXTURES[_ALIASES.get(name, name)]
    except KeyError:
        raise ModelError('Unknown generator fixture {!r}; expected one of {}'.format(
            name, ', '.join(fixture_names())))
    return builder()
