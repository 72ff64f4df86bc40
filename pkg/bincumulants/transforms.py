"""Probability, moment and cumulant coordinates of binary tables"""
from collections import namedtuple
from enum import Enum
from fractions import Fraction
from math import factorial
from types import SimpleNamespace
import logging
import re

from .algebra import MultilinearPoly, SparsePoly, ml_exp, ml_log, POLYNOMIAL, RATIONAL
from .combinatorics import by_size, partitions_of, subsets_of
from .exceptions import CoordinateError, UnsupportedSizeError, ValidationError
from .utils import elements, parse_subset, popcount, subset_label

__all__ = [
    'Coords', 'BinaryTable', 'Inhomogeneous',
    'probs_to_moments', 'moments_to_probs', 'moments_to_cumulants', 'cumulants_to_moments',
    'convert', 'act_symmetry', 'relabel_values', 'check_independence', 'zgrade',
    'cumulant_symbol', 'cumulant_symbols', 'cumulant_namespace', 'higher_masks', 'parse_symbol'
]

logger = logging.getLogger(__name__)

MAX_N = 8

_SYMBOL = re.compile(r'^([kmp])(\d+)$')


class Coords(Enum):
    PROB = 'prob'
    MOMENT = 'moment'
    CUMULANT = 'cumulant'


def higher_masks(n):
    """Subsets of size at least two, by size then lexicographically"""
    return by_size(m for m in range(1 << n) if popcount(m) >= 2)


def cumulant_symbol(mask):
    return 'k' + subset_label(mask)


def cumulant_symbols(n, min_order=2):
    """Canonical cumulant variable names ``k12 < k13 < ... < k12..n``"""
    return tuple(cumulant_symbol(m) for m in by_size(range(1, 1 << n)) if popcount(m) >= min_order)


def cumulant_namespace(n, min_order=1):
    """Attribute access to cumulant variables: ``ns.k123``"""
    names = cumulant_symbols(n, min_order)
    return SimpleNamespace(**{name: SparsePoly.variable(name, names) for name in names})


def parse_symbol(name):
    """``"k134"`` -> ``("k", mask)``"""
    match = _SYMBOL.match(name)
    if not match:
        raise ValidationError('{} is not a coordinate symbol'.format(name))
    digits = [int(c) for c in match.group(2)]
    if 0 in digits or len(set(digits)) != len(digits):
        raise ValidationError('{} is not a coordinate symbol'.format(name))
    mask = 0
    for d in digits:
        mask |= 1 << (d - 1)
    return match.group(1), mask


def _is_one(value):
    return value == 1


def _is_nil(value):
    return value == 0


class BinaryTable(object):
    """A ``2 x ... x 2`` table in one of three coordinate systems.

    Entries are indexed by subset masks. They are rationals, or
    :py:class:`~bincumulants.algebra.SparsePoly` for symbolic tables.

    The normalization of the coordinate system is checked on construction:
    probabilities sum to 1, ``mu_0 = 1``, ``k_0 = 0``.
    """
    def __init__(self, n, coords, entries, check=True):
        if not 1 <= n <= MAX_N:
            raise UnsupportedSizeError(n, 1, MAX_N, 'BinaryTable')
        self.n = n
        self.coords = Coords(coords)
        entries = list(entries)
        if len(entries) != 1 << n:
            raise ValidationError('expected {} entries, got {}'.format(1 << n, len(entries)))
        self.entries = tuple(Fraction(e) if isinstance(e, int) else e for e in entries)
        if check:
            self._check()

    def _check(self):
        if self.coords is Coords.PROB:
            total = 0
            for e in self.entries:
                total = total + e
            if not _is_one(total):
                raise CoordinateError('probabilities sum to {}, not 1'.format(total))
        elif self.coords is Coords.MOMENT:
            if not _is_one(self.entries[0]):
                raise CoordinateError('moment tables need mu_0 = 1, got {}'.format(self.entries[0]))
        elif not _is_nil(self.entries[0]):
            raise CoordinateError('cumulant tables need k_0 = 0, got {}'.format(self.entries[0]))

    @classmethod
    def from_dict(cls, n, coords, mapping):
        """Build from ``{mask: value}``; missing masks are 0"""
        entries = [0] * (1 << n)
        for mask, value in mapping.items():
            if not 0 <= mask < 1 << n:
                raise ValidationError('subset {} out of range for n={}'.format(mask, n))
            entries[mask] = value
        return cls(n, coords, entries)

    @classmethod
    def from_labels(cls, n, coords, mapping):
        """Build from ``{"12": value}``; labels follow :func:`~bincumulants.utils.parse_subset`"""
        return cls.from_dict(n, coords, {parse_subset(label, n): value for label, value in mapping.items()})

    @classmethod
    def uniform(cls, n):
        return cls(n, Coords.PROB, [Fraction(1, 1 << n)] * (1 << n))

    @classmethod
    def point_mass(cls, n, mask):
        return cls.from_dict(n, Coords.PROB, {mask: 1})

    @classmethod
    def product(cls, marginals):
        """Independent binary variables with ``P(X_i = 1) = marginals[i - 1]``"""
        n = len(marginals)
        moments = []
        for mask in range(1 << n):
            value = Fraction(1)
            for i in elements(mask):
                value *= Fraction(marginals[i - 1])
            moments.append(value)
        return cls(n, Coords.MOMENT, moments)

    @classmethod
    def symbolic(cls, n, coords):
        """Moment or cumulant table of free symbols ``m_I`` / ``k_I``"""
        coords = Coords(coords)
        if coords is Coords.PROB:
            raise ValidationError('symbolic probability tables cannot be normalized')
        prefix = 'm' if coords is Coords.MOMENT else 'k'
        masks = by_size(range(1, 1 << n))
        names = tuple(prefix + subset_label(m) for m in masks)
        entries = [1 if coords is Coords.MOMENT else 0] * (1 << n)
        for m, name in zip(masks, names):
            entries[m] = SparsePoly.variable(name, names)
        return cls(n, coords, entries)

    def __getitem__(self, mask):
        return self.entries[mask]

    def items(self):
        return enumerate(self.entries)

    def is_symbolic(self):
        return any(isinstance(e, SparsePoly) for e in self.entries)

    def _require(self, coords):
        if self.coords is not coords:
            raise CoordinateError('', expected=coords.value, got=self.coords.value)

    def __eq__(self, other):
        if not isinstance(other, BinaryTable):
            return NotImplemented
        return (self.n, self.coords) == (other.n, other.coords) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        body = ', '.join('{}: {}'.format(subset_label(m) or '{}', e) for m, e in self.items())
        return 'BinaryTable(n={}, {}, {{{}}})'.format(self.n, self.coords.value, body)


def _zeta(values, n):
    a = list(values)
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if not mask & bit:
                a[mask] = a[mask] + a[mask | bit]
    return a


def _moebius(values, n):
    a = list(values)
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if not mask & bit:
                a[mask] = a[mask] - a[mask | bit]
    return a


def probs_to_moments(t):
    """Superset sums ``mu_I = sum_{J >= I} p_J``"""
    t._require(Coords.PROB)
    return BinaryTable(t.n, Coords.MOMENT, _zeta(t.entries, t.n), check=False)


def moments_to_probs(t):
    """Moebius inversion of :func:`probs_to_moments`.

    The result sums to 1 but may have negative entries.
    """
    t._require(Coords.MOMENT)
    t._check()
    return BinaryTable(t.n, Coords.PROB, _moebius(t.entries, t.n), check=False)


def _ring(t):
    return POLYNOMIAL if t.is_symbolic() else RATIONAL


def _partition_sum(values, ground, weighted):
    total = 0
    for partition in partitions_of(ground):
        term = 1
        for block in partition:
            term = values[block] * term
        if weighted:
            b = len(partition)
            term = term * ((-1) ** (b - 1) * factorial(b - 1))
        total = term + total
    return total


def moments_to_cumulants(t, method='log'):
    """Cumulants from moments.

    :param method: ``"log"`` takes the truncated logarithm of the moment
        generating polynomial; ``"partition"`` sums over set partitions
        with weights ``(-1)^(|pi|-1) (|pi|-1)!``. Both are exact and agree.
    """
    t._require(Coords.MOMENT)
    t._check()
    if method == 'log':
        k = ml_log(MultilinearPoly(t.n, dict(t.items()), _ring(t)))
        entries = [k[m] for m in range(1 << t.n)]
    elif method == 'partition':
        entries = [0] + [_partition_sum(t.entries, m, True) for m in range(1, 1 << t.n)]
    else:
        raise ValidationError('unknown method {}'.format(method))
    return BinaryTable(t.n, Coords.CUMULANT, entries, check=False)


def cumulants_to_moments(t, method='exp'):
    """Moments ``mu_I = sum_{pi} prod_{B in pi} k_B``; inverse of :func:`moments_to_cumulants`"""
    t._require(Coords.CUMULANT)
    t._check()
    if method == 'exp':
        m = ml_exp(MultilinearPoly(t.n, dict(t.items()), _ring(t)))
        entries = [m[mask] for mask in range(1 << t.n)]
    elif method == 'partition':
        entries = [1] + [_partition_sum(t.entries, mask, False) for mask in range(1, 1 << t.n)]
    else:
        raise ValidationError('unknown method {}'.format(method))
    return BinaryTable(t.n, Coords.MOMENT, entries, check=False)


_STEPS = {
    (Coords.PROB, Coords.MOMENT): probs_to_moments,
    (Coords.MOMENT, Coords.PROB): moments_to_probs,
    (Coords.MOMENT, Coords.CUMULANT): moments_to_cumulants,
    (Coords.CUMULANT, Coords.MOMENT): cumulants_to_moments,
}


def convert(t, coords):
    """Convert ``t`` to any coordinate system, going through moments"""
    coords = Coords(coords)
    while t.coords is not coords:
        via = coords if (t.coords, coords) in _STEPS else Coords.MOMENT
        logger.debug('n=%d: %s -> %s', t.n, t.coords.value, via.value)
        t = _STEPS[(t.coords, via)](t)
    return t


def act_symmetry(t, g):
    """Move probability mass along a cube symmetry: ``g(p)_{g(I)} = p_I``"""
    t._require(Coords.PROB)
    if g.n != t.n:
        raise ValidationError('symmetry of a {}-cube applied to n={}'.format(g.n, t.n))
    entries = [0] * (1 << t.n)
    for mask, value in t.items():
        entries[g.apply(mask)] = value
    return BinaryTable(t.n, Coords.PROB, entries, check=False)


def relabel_values(t, a, b):
    """Moments after variable ``i`` takes the values ``(b_i, a_i)`` instead of ``(0, 1)``.

    Applies ``mu'_I = sum_{J <= I} prod_{I - J} b_i prod_J (a_i - b_i) mu_J``
    one coordinate at a time.
    """
    t._require(Coords.MOMENT)
    if len(a) != t.n or len(b) != t.n:
        raise ValidationError('need {} values in a and b'.format(t.n))
    values = list(t.entries)
    for i in range(t.n):
        bit = 1 << i
        ai, bi = Fraction(a[i]), Fraction(b[i])
        for mask in range(1 << t.n):
            if mask & bit:
                values[mask] = values[mask ^ bit] * bi + values[mask] * (ai - bi)
    return BinaryTable(t.n, Coords.MOMENT, values)


def check_independence(t, A, B):
    """True iff ``k_I = 0`` for every ``I`` inside ``A | B`` meeting both blocks"""
    if A & B:
        raise ValidationError('index sets {} and {} overlap'.format(subset_label(A), subset_label(B)))
    if (A | B) >> t.n:
        raise ValidationError('index sets exceed n={}'.format(t.n))
    k = convert(t, Coords.CUMULANT)
    return all(k[I] == 0 for I in subsets_of(A | B) if I & A and I & B)


Inhomogeneous = namedtuple('Inhomogeneous', ['first', 'second'])
Inhomogeneous.__doc__ = """Two monomials of different multidegree"""


def zgrade(p, n=None):
    """Common ``Z^n`` degree of the monomials of ``p``, with ``deg(k_I) = sum_{i in I} e_i``.

    Returns a tuple, an :py:class:`Inhomogeneous` witness pair, or ``None``
    for the zero polynomial.
    """
    masks = []
    for name in p.vars:
        prefix, mask = parse_symbol(name)
        if prefix != 'k':
            raise ValidationError('{} is not a cumulant variable'.format(name))
        masks.append(mask)
    if n is None:
        n = max((m.bit_length() for m in masks), default=0)

    seen = None
    for powers, coeff in p.items():
        grade = [0] * n
        for name, e in powers.items():
            for i in elements(masks[p.vars.index(name)]):
                if i > n:
                    raise ValidationError('{} exceeds n={}'.format(name, n))
                grade[i - 1] += e
        grade = tuple(grade)
        if seen is None:
            seen = (grade, powers)
        elif grade != seen[0]:
            return Inhomogeneous(seen[1], powers)
    return seen[0] if seen else None
