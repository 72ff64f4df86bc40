"""Hidden subset models, CSI split models and their cumulant parametrizations"""
from fractions import Fraction
from math import factorial
import logging
import random

from .algebra import MultilinearPoly, SparsePoly, POLYNOMIAL, is_scalar, jacobian_rank, poly_substitute
from .combinatorics import necklace_count
from .exceptions import ModelError, UnsupportedSizeError
from .generators import tangential_generators_n4
from .transforms import BinaryTable, Coords, cumulant_symbol, higher_masks, moments_to_cumulants, probs_to_moments
from .utils import elements, mask_of, parse_subset, popcount, subset_label

__all__ = [
    'HiddenSubsetModel', 'CSISplitModel', 'ModelParametrization',
    'hsm_to_csi', 'csi_to_hsm', 'hsm_parametrization', 'mixing_symbol',
    'kappa_poly', 'tangential_cumulants', 'tangential_parametrization', 'tangential_moment_bracket',
    'secant_cumulants', 'secant_parametrization', 'model_codimension',
    'verify_vanishing', 'vanishing_report', 'tangential_ideal_generators_n4'
]

logger = logging.getLogger(__name__)

MAX_N = 6


class HiddenSubsetModel(object):
    """Mixture of product distributions indexed by the hidden subsets ``A``.

    :param int n: number of observed binary variables
    :param subsets: ordered, distinct subset masks
    """
    def __init__(self, n, subsets):
        if not 1 <= n <= MAX_N:
            raise UnsupportedSizeError(n, 1, MAX_N, 'HiddenSubsetModel')
        subsets = tuple(subsets)
        if not subsets:
            raise ModelError('a hidden subset model needs at least one subset')
        if len(set(subsets)) != len(subsets):
            raise ModelError('hidden subsets must be distinct: {}'.format(
                [subset_label(s) for s in subsets]))
        for s in subsets:
            if not 0 <= s < 1 << n:
                raise ModelError('subset {} out of range for n={}'.format(s, n))
        self.n = n
        self.subsets = subsets

    @classmethod
    def from_labels(cls, n, labels):
        return cls(n, [parse_subset(label, n) for label in labels])

    @classmethod
    def parse(cls, text, n=None):
        """Read ``"{},12,34,1234"``; ``n`` defaults to the largest element"""
        labels = [part.strip() for part in text.strip().strip('[]').split(',')]
        if n is None:
            digits = [int(c) for label in labels for c in label if c.isdigit() and c != '0']
            n = max(digits, default=1)
        return cls.from_labels(n, labels)

    @property
    def m(self):
        return len(self.subsets)

    def labels(self):
        return [subset_label(s) for s in self.subsets]

    def __len__(self):
        return len(self.subsets)

    def __eq__(self, other):
        return isinstance(other, HiddenSubsetModel) and (self.n, self.subsets) == (other.n, other.subsets)

    def __hash__(self):
        return hash((self.n, self.subsets))

    def __repr__(self):
        return 'HiddenSubsetModel(n={}, {{{}}})'.format(
            self.n, ', '.join(label or '{}' for label in self.labels()))


class CSISplitModel(object):
    """Context specific independence model whose class partitions all have two blocks.

    :param int m: number of hidden classes
    :param splits: one mask over ``[m]`` per observed variable, naming the first block
    """
    def __init__(self, m, splits):
        splits = tuple(splits)
        if not splits:
            raise ModelError('a split model needs at least one variable')
        if m < 1:
            raise ModelError('a split model needs at least one hidden class')
        for s in splits:
            if not 0 <= s < 1 << m:
                raise ModelError('split {} out of range for m={}'.format(s, m))
        self.m = m
        self.splits = splits

    @property
    def n(self):
        return len(self.splits)

    @classmethod
    def parse(cls, text):
        """Read ``"1|234;2|134;3|124;4|123"``"""
        blocks = []
        for part in text.strip().split(';'):
            if part.count('|') != 1:
                raise ModelError('split {!r} needs exactly one "|"'.format(part))
            first, second = (side.strip() for side in part.split('|'))
            for side in (first, second):
                if side and not side.isdigit():
                    raise ModelError('split {!r} has non-digit classes'.format(part))
            blocks.append(([int(c) for c in first], [int(c) for c in second]))

        m = max((c for pair in blocks for side in pair for c in side), default=0)
        full = set(range(1, m + 1))
        splits = []
        for first, second in blocks:
            if 0 in first or 0 in second:
                raise ModelError('hidden classes are numbered from 1')
            if set(first) & set(second) or set(first) | set(second) != full:
                raise ModelError('blocks {}|{} do not split 1..{}'.format(
                    ''.join(map(str, first)), ''.join(map(str, second)), m))
            splits.append(mask_of(first))
        return cls(m, splits)

    def blocks(self, i):
        """The two blocks of the split of variable ``i`` (1-based)"""
        first = self.splits[i - 1]
        return first, ((1 << self.m) - 1) ^ first

    def labels(self):
        return ['{}|{}'.format(subset_label(a), subset_label(b)) for a, b in
                (self.blocks(i) for i in range(1, self.n + 1))]

    def __eq__(self, other):
        return isinstance(other, CSISplitModel) and (self.m, self.splits) == (other.m, other.splits)

    def __hash__(self):
        return hash((self.m, self.splits))

    def __repr__(self):
        return 'CSISplitModel(m={}, {})'.format(self.m, ';'.join(self.labels()))


def hsm_to_csi(h):
    """Split ``i`` puts class ``l`` in its first block iff ``i`` lies in the ``l``-th hidden subset"""
    splits = []
    for i in range(h.n):
        first = 0
        for l, J in enumerate(h.subsets):
            if J >> i & 1:
                first |= 1 << l
        splits.append(first)
    return CSISplitModel(h.m, splits)


def csi_to_hsm(c):
    """Inverse of :func:`hsm_to_csi`.

    :raises ModelError: if two classes lie in the same block of every split
    """
    subsets = []
    for l in range(c.m):
        J = 0
        for i, first in enumerate(c.splits):
            if first >> l & 1:
                J |= 1 << i
        subsets.append(J)
    if len(set(subsets)) != len(subsets):
        raise ModelError('hidden classes {} cannot be told apart'.format(
            [subset_label(J) or '{}' for J in subsets]))
    return HiddenSubsetModel(c.n, subsets)


class ModelParametrization(object):
    """Cumulant coordinates of a model as polynomials in its parameters.

    :param params: free parameter names, in Jacobian column order
    :param coordinates: ``{mask: SparsePoly}`` for the coordinates ``k_I``
    :param offsets: parameters that may occur only in first order coordinates
    """
    def __init__(self, n, params, coordinates, offsets=()):
        self.n = n
        self.params = tuple(params)
        self.offsets = tuple(offsets)
        self.coordinates = dict(coordinates)
        for mask, poly in self.coordinates.items():
            if popcount(mask) < 2:
                continue
            leaked = [v for v in poly.variables() if v in self.offsets]
            if leaked:
                raise ModelError('higher cumulant {} depends on offsets {}'.format(
                    cumulant_symbol(mask), leaked))

    def higher(self):
        return [(mask, self.coordinates[mask]) for mask in higher_masks(self.n) if mask in self.coordinates]

    def bindings(self):
        return {cumulant_symbol(mask): poly for mask, poly in self.coordinates.items()}

    def evaluate(self, point):
        return {cumulant_symbol(mask): poly.evaluate(point) for mask, poly in self.coordinates.items()}

    def to_dict(self):
        return {
            'n': self.n,
            'params': list(self.params),
            'offsets': list(self.offsets),
            'coordinates': {
                cumulant_symbol(mask): str(self.coordinates[mask])
                for mask in sorted(self.coordinates, key=lambda m: (popcount(m), elements(m)))
            },
        }


def _as_poly(value, vars):
    if isinstance(value, SparsePoly):
        return value.reorder(vars)
    return SparsePoly.constant(value, vars)


def mixing_symbol(mask):
    return 't' + (subset_label(mask) or '0')


def hsm_parametrization(h):
    """Cumulants of the hidden subset model ``h``.

    The mixing weight of the last subset is eliminated as ``1 - sum(others)``.
    Higher cumulants are ``k_I = k^(t)_I prod_{i in I} b_i``, first order ones
    ``k_i = a_i + b_i k^(t)_i``.
    """
    n = h.n
    t_names = [mixing_symbol(J) for J in h.subsets]
    free = t_names[:-1]
    b_names = ['b{}'.format(i) for i in range(1, n + 1)]
    a_names = ['a{}'.format(i) for i in range(1, n + 1)]
    vars = tuple(free + b_names + a_names)
    var = {name: SparsePoly.variable(name, vars) for name in vars}

    last = SparsePoly.constant(1, vars)
    for name in free:
        last = last - var[name]

    entries = [0] * (1 << n)
    for J, name in zip(h.subsets, t_names):
        entries[J] = var[name] if name in var else last
    mixing = BinaryTable(n, Coords.PROB, entries)
    kt = moments_to_cumulants(probs_to_moments(mixing), method='partition')

    coordinates = {}
    for mask in range(1, 1 << n):
        value = _as_poly(kt[mask], vars)
        if popcount(mask) == 1:
            i = elements(mask)[0]
            value = var[a_names[i - 1]] + var[b_names[i - 1]] * value
        else:
            for i in elements(mask):
                value = value * var[b_names[i - 1]]
        coordinates[mask] = value
    logger.debug('parametrized %r with %d free parameters', h, len(free) + n)
    return ModelParametrization(n, free + b_names, coordinates, offsets=a_names)


def kappa_poly(nu):
    """Cumulant ``k_[nu]`` of the two point mixture with weight ``t`` on the full set"""
    if nu < 1:
        raise ModelError('kappa_poly needs nu >= 1')
    return SparsePoly(('t',), {(i,): (-1) ** (i - 1) * necklace_count(nu, i) for i in range(1, nu + 1)})


def _product(values):
    out = 1
    for v in values:
        out = v * out
    return out


def tangential_cumulants(n, s):
    """``k_I = (-1)^(|I|-1) (|I|-1)! prod_{i in I} s_i`` for ``|I| >= 2``"""
    if len(s) != n:
        raise ModelError('need {} values of s, got {}'.format(n, len(s)))
    out = {}
    for mask in higher_masks(n):
        size = popcount(mask)
        weight = (-1) ** (size - 1) * factorial(size - 1)
        out[mask] = _product(s[i - 1] for i in elements(mask)) * weight
    return out


def tangential_parametrization(n):
    names = tuple('s{}'.format(i) for i in range(1, n + 1))
    s = [SparsePoly.variable(name, names) for name in names]
    coords = {mask: _as_poly(v, names) for mask, v in tangential_cumulants(n, s).items()}
    return ModelParametrization(n, names, coords)


def tangential_moment_bracket(n):
    """``(1/n) sum_i (1 + b_i x_i) / (1 + a_i x_i)`` modulo squares.

    Its logarithm carries the higher cumulants of the tangential model with
    ``s_i = (b_i - a_i) / n``.
    """
    names = tuple(['a{}'.format(i) for i in range(1, n + 1)] + ['b{}'.format(i) for i in range(1, n + 1)])
    total = MultilinearPoly(n, {}, POLYNOMIAL)
    for i in range(1, n + 1):
        a = SparsePoly.variable('a{}'.format(i), names)
        b = SparsePoly.variable('b{}'.format(i), names)
        bit = 1 << (i - 1)
        numerator = MultilinearPoly(n, {0: 1, bit: b}, POLYNOMIAL)
        inverse = MultilinearPoly(n, {0: 1, bit: -a}, POLYNOMIAL)
        total = total + numerator * inverse
    return total.scale(n)


def secant_cumulants(n, t, b):
    """``k_I = kappa_|I|(t) prod_{i in I} b_i`` for ``|I| >= 2``"""
    if len(b) != n:
        raise ModelError('need {} values of b, got {}'.format(n, len(b)))
    kappas = {}
    out = {}
    for mask in higher_masks(n):
        size = popcount(mask)
        if size not in kappas:
            poly = kappa_poly(size)
            kappas[size] = poly.evaluate({'t': t}) if is_scalar(t) else poly_substitute(poly, {'t': t})
        out[mask] = _product(b[i - 1] for i in elements(mask)) * kappas[size]
    return out


def secant_parametrization(n):
    names = ('t',) + tuple('b{}'.format(i) for i in range(1, n + 1))
    t, *b = [SparsePoly.variable(name, names) for name in names]
    coords = {mask: _as_poly(v, names) for mask, v in secant_cumulants(n, t, b).items()}
    return ModelParametrization(n, names, coords)


def model_codimension(h, seed=0, trials=3):
    """Codimension of the model in the ``2^n - n - 1`` higher cumulants.

    Estimated as the ambient dimension minus the Jacobian rank at random points.
    """
    if h.n > 5:
        raise UnsupportedSizeError(h.n, 1, 5, 'model_codimension')
    param = hsm_parametrization(h)
    polys = [poly for _, poly in param.higher()]
    rank = jacobian_rank(polys, param.params, seed=seed, trials=trials)
    return len(polys) - rank


def _check_variables(generators, param):
    known = set(param.bindings())
    for g in generators:
        stray = [v for v in g.variables() if v not in known]
        if stray:
            raise ModelError('generator uses {} which the parametrization does not provide'.format(stray))


def vanishing_report(generators, param, mode='symbolic', trials=200, seed=0):
    """Per generator verdict: does it vanish on the parametrization?

    :param mode: ``"symbolic"`` substitutes and expands; ``"sampled"`` checks
        exact zeros at ``trials`` random rational parameter points
    """
    _check_variables(generators, param)
    if mode == 'symbolic':
        bindings = param.bindings()
        verdicts = []
        for g in generators:
            image = poly_substitute(g, {v: bindings[v] for v in g.variables()})
            verdicts.append(image == 0)
        return verdicts

    if mode != 'sampled':
        raise ModelError('unknown verification mode {!r}'.format(mode))

    rng = random.Random(seed)
    names = param.params + param.offsets
    verdicts = [True] * len(generators)
    for trial in range(trials):
        point = {name: Fraction(rng.randrange(1, 1000), 1000) for name in names}
        values = param.evaluate(point)
        for index, g in enumerate(generators):
            if verdicts[index] and g.evaluate(values) != 0:
                logger.info('generator %d is nonzero at sample %d', index, trial)
                verdicts[index] = False
    return verdicts


def verify_vanishing(generators, param, mode='symbolic', trials=200, seed=0):
    return all(vanishing_report(generators, param, mode, trials, seed))


def tangential_ideal_generators_n4():
    """The 21 generators of the tangential ideal for n = 4"""
    return tangential_generators_n4()
