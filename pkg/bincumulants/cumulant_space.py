"""The space of binary cumulants: membership, defining inequalities and the top cumulant optimum"""
from collections import namedtuple
from fractions import Fraction
from math import factorial
import logging

import numpy as np
from scipy import optimize

from .algebra import SparsePoly
from .combinatorics import partitions_of
from .config import Settings
from .exceptions import OptimizationError, UnsupportedSizeError, ValidationError
from .models import kappa_poly
from .transforms import BinaryTable, Coords, convert, cumulant_symbol, cumulant_symbols
from .utils import MAX_DENOMINATOR, popcount, subset_label

__all__ = [
    'CumulantPoint', 'Membership', 'OptimizationResult',
    'knspace_inequalities', 'knspace_membership', 'membership_by_inequalities',
    'flip_cumulants', 'kappa_at_half', 'top_cumulant', 'maximize_top_cumulant',
    'unit_simplex_projection'
]

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12
GRADIENT_TOLERANCE = 1e-6
POLISHED = 5


class CumulantPoint(object):
    """A point ``(k_I)_{I != 0}``; values are rationals or floats.

    :param int n: number of binary variables
    :param values: ``{mask: value}``; masks that are missing are 0
    """
    def __init__(self, n, values):
        if not 1 <= n <= 6:
            raise UnsupportedSizeError(n, 1, 6, 'CumulantPoint')
        self.n = n
        self.values = {}
        for mask, value in values.items():
            if not 0 < mask < 1 << n:
                raise ValidationError('subset {} out of range for n={}'.format(mask, n))
            if isinstance(value, float) and not np.isfinite(value):
                raise ValidationError('k{} is not finite'.format(subset_label(mask)))
            self.values[mask] = value

    @classmethod
    def from_table(cls, t):
        k = convert(t, Coords.CUMULANT)
        return cls(t.n, {mask: k[mask] for mask in range(1, 1 << t.n)})

    def __getitem__(self, mask):
        return self.values.get(mask, 0)

    def rational(self, max_denominator=MAX_DENOMINATOR):
        """Exact copy; floats are rationalized with bounded denominators"""
        out = {}
        for mask, value in self.values.items():
            if isinstance(value, float):
                out[mask] = Fraction(value).limit_denominator(max_denominator)
            else:
                out[mask] = Fraction(value)
        return out

    def table(self, max_denominator=MAX_DENOMINATOR):
        """Cumulant :py:class:`~bincumulants.transforms.BinaryTable` in exact arithmetic"""
        exact = self.rational(max_denominator)
        return BinaryTable(self.n, Coords.CUMULANT, [0] + [exact.get(m, 0) for m in range(1, 1 << self.n)])

    def bindings(self, max_denominator=MAX_DENOMINATOR):
        exact = self.rational(max_denominator)
        return {cumulant_symbol(m): exact.get(m, Fraction(0)) for m in range(1, 1 << self.n)}

    def __eq__(self, other):
        if not isinstance(other, CumulantPoint):
            return NotImplemented
        return self.n == other.n and all(self[m] == other[m] for m in range(1, 1 << self.n))

    def __repr__(self):
        body = ', '.join('k{}: {}'.format(subset_label(m), self[m]) for m in range(1, 1 << self.n))
        return 'CumulantPoint(n={}, {{{}}})'.format(self.n, body)


Membership = namedtuple('Membership', ['member', 'violated', 'witness', 'probabilities'])
Membership.__doc__ = """Outcome of a membership test.

``violated`` lists the masks ``I`` with ``p_I < 0``; ``witness`` is the first
of them, or ``None``.
"""


def _rho(J, B, names, var):
    k = var[names[B]]
    if popcount(B) == 1:
        return 1 - k if B & J else k
    return -k if popcount(J & B) % 2 else k


def knspace_inequalities(n):
    """The ``2^n`` polynomials whose nonnegativity cuts out the space of cumulants.

    Entry ``J`` is the sum over set partitions of ``[n]`` of the products of
    flipped cumulants, and equals ``p`` of the complement of ``J``.
    """
    if not 1 <= n <= 5:
        raise UnsupportedSizeError(n, 1, 5, 'knspace_inequalities')
    vars = cumulant_symbols(n, min_order=1)
    var = {name: SparsePoly.variable(name, vars) for name in vars}
    names = {mask: cumulant_symbol(mask) for mask in range(1, 1 << n)}
    full = (1 << n) - 1

    out = []
    for J in range(1 << n):
        total = SparsePoly.constant(0, vars)
        for partition in partitions_of(full):
            term = SparsePoly.constant(1, vars)
            for B in partition:
                term = term * _rho(J, B, names, var)
            total = total + term
        out.append(total)
    return out


def knspace_membership(pt, max_denominator=MAX_DENOMINATOR):
    """Decide whether ``pt`` is the cumulant vector of a probability distribution.

    Float input is rationalized first; the check itself is exact.
    """
    p = convert(pt.table(max_denominator), Coords.PROB)
    violated = [mask for mask in range(1 << pt.n) if p[mask] < 0]
    return Membership(not violated, violated, violated[0] if violated else None, p)


def membership_by_inequalities(pt, max_denominator=MAX_DENOMINATOR):
    """Same verdict as :func:`knspace_membership`, by evaluating the inequalities"""
    if pt.n > 5:
        raise UnsupportedSizeError(pt.n, 1, 5, 'membership_by_inequalities')
    full = (1 << pt.n) - 1
    point = pt.bindings(max_denominator)
    values = [0] * (1 << pt.n)
    for J, poly in enumerate(knspace_inequalities(pt.n)):
        values[full ^ J] = poly.evaluate(point)
    violated = [mask for mask in range(1 << pt.n) if values[mask] < 0]
    p = BinaryTable(pt.n, Coords.PROB, values, check=False)
    return Membership(not violated, violated, violated[0] if violated else None, p)


def flip_cumulants(pt, J):
    """Cumulants after swapping the values 0 and 1 of every coordinate in ``J``"""
    if J >> pt.n:
        raise ValidationError('flip {} out of range for n={}'.format(J, pt.n))
    values = {}
    for mask in range(1, 1 << pt.n):
        k = pt[mask]
        if popcount(mask) == 1:
            values[mask] = 1 - k if mask & J else k
        else:
            values[mask] = -k if popcount(mask & J) % 2 else k
    return CumulantPoint(pt.n, values)


def kappa_at_half(n):
    """``(kappa_n(1/2), n is even)``.

    Every odd ``n`` reports ``(0, False)``, ``n = 1`` included.
    """
    if n < 1:
        raise ValidationError('kappa_at_half needs n >= 1')
    if n % 2:
        return Fraction(0), False
    return kappa_poly(n).evaluate({'t': Fraction(1, 2)}), True


def top_cumulant(t):
    """Exact ``k_{12..n}`` of a table"""
    return convert(t, Coords.CUMULANT)[(1 << t.n) - 1]


def unit_simplex_projection(c):
    """Euclidean projection of ``c`` onto the probability simplex"""
    a = -np.sort(-c)
    lambdas = (np.cumsum(a) - 1) / np.arange(1, len(c) + 1)
    for k in range(len(c) - 1, -1, -1):
        if a[k] > lambdas[k]:
            return np.maximum(c - lambdas[k], 0)
    return np.full(len(c), 1.0 / len(c))


class _TopCumulant(object):
    """``k_{12..n}`` as a polynomial function of the probabilities, with its gradient.

    Moments are ``mu = Z p``; the partition formula gives the value and the
    gradient in moments, and ``Z^T`` carries it back to probabilities.
    """
    def __init__(self, n):
        size = 1 << n
        self.n = n
        self.zeta = np.array([[1.0 if J & B == B else 0.0 for J in range(size)] for B in range(size)])
        self.partitions = [
            (partition, float((-1) ** (len(partition) - 1) * factorial(len(partition) - 1)))
            for partition in partitions_of(size - 1)
        ]

    def __call__(self, p):
        return self.value_and_grad(p)[0]

    def value_and_grad(self, p):
        mu = (self.zeta @ p).tolist()
        grad_mu = [0.0] * len(mu)
        value = 0.0
        for blocks, c in self.partitions:
            vals = [mu[B] for B in blocks]
            prod = c
            for v in vals:
                prod *= v
            value += prod
            for j, B in enumerate(blocks):
                rest = c
                for i, v in enumerate(vals):
                    if i != j:
                        rest *= v
                grad_mu[B] += rest
        return value, self.zeta.T @ np.array(grad_mu)

    def check_gradient(self, rng, points=10, step=1e-6):
        size = 1 << self.n
        for _ in range(points):
            p = rng.dirichlet(np.ones(size))
            _, grad = self.value_and_grad(p)
            for i in range(size):
                e = np.zeros(size)
                e[i] = step
                fd = (self(p + e) - self(p - e)) / (2 * step)
                if abs(fd - grad[i]) > GRADIENT_TOLERANCE * max(1.0, abs(grad[i])):
                    raise OptimizationError(
                        'gradient mismatch at coordinate {}: analytic {}, finite differences {}'.format(
                            subset_label(i) or '{}', grad[i], fd))


def _softmax(theta):
    w = np.exp(theta - theta.max())
    return w / w.sum()


def _ascend(f, start):
    """Local ascent of ``f`` over the simplex in softmax coordinates"""
    def negative(theta):
        p = _softmax(theta)
        value, g = f.value_and_grad(p)
        return -value, -(p * (g - p @ g))

    res = optimize.minimize(negative, np.log(start), jac=True, method='BFGS')
    return _softmax(res.x)


def _polish(f, p):
    """Local ascent directly on the simplex, from a projected start"""
    size = len(p)
    res = optimize.minimize(
        lambda x: tuple(-v for v in f.value_and_grad(x)),
        unit_simplex_projection(p),
        jac=True,
        method='SLSQP',
        bounds=[(0.0, 1.0)] * size,
        constraints=[{'type': 'eq', 'fun': lambda x: x.sum() - 1.0, 'jac': lambda x: np.ones(size)}],
        options={'ftol': 1e-15, 'maxiter': 500})
    return unit_simplex_projection(res.x)


def _orient(p, n):
    """Relabel by the flip that puts the most mass on the empty set.

    Ties go to the smallest flip. Returns the flip and the relabeled vector;
    an odd flip changes the sign of ``k_{12..n}`` but not its magnitude.
    """
    best = max(range(1 << n), key=lambda J: (p[J], -J))
    return best, np.array([p[I ^ best] for I in range(1 << n)])


def _rationalize(p, max_denominator):
    q = [Fraction(float(max(x, 0.0))).limit_denominator(max_denominator) for x in p]
    total = sum(q)
    return [x / total for x in q]


OptimizationResult = namedtuple('OptimizationResult', [
    'n', 'best_value', 'argmax', 'exact_value', 'certified', 'start_index', 'starts', 'seed', 'tolerance',
    'flip',
])


def maximize_top_cumulant(n, starts=None, seed=None, settings=None):
    """Multi-start maximization of ``k_{12..n}`` over the probability simplex.

    Each start is a Dirichlet sample ascended in softmax coordinates; the
    best few are polished on the simplex itself. Ties within ``1e-12`` go to
    the lowest start index. The argmax is relabeled by the flip that puts the
    most mass on the empty set, rationalized and renormalized, then certified by
    :func:`knspace_membership`. ``exact_value`` is ``|k_{12..n}|`` of the
    reported argmax; ``flip`` is the mask of the relabeling applied.

    :param starts: number of starts, defaults to ``settings.optimizer_starts``
    :param seed: seed of the start sequence, defaults to ``settings.seed``
    :raises OptimizationError: if the analytic gradient fails the finite difference check
    """
    if not 1 <= n <= 5:
        raise UnsupportedSizeError(n, 1, 5, 'maximize_top_cumulant')
    settings = settings or Settings()
    starts = settings.optimizer_starts if starts is None else starts
    seed = settings.seed if seed is None else seed
    if starts < 1:
        raise ValidationError('need at least one start')

    f = _TopCumulant(n)
    rng = np.random.default_rng(seed)
    f.check_gradient(rng)

    size = 1 << n
    candidates = []
    for index in range(starts):
        p = _ascend(f, rng.dirichlet(np.ones(size)))
        candidates.append((f(p), index, p))
    candidates.sort(key=lambda c: (-c[0], c[1]))
    logger.info('n=%d: best of %d starts before polishing %.12g', n, starts, candidates[0][0])

    best_value, best_index, best_p = None, None, None
    for value, index, p in candidates[:POLISHED]:
        polished = _polish(f, p)
        v = f(polished)
        if v < value:
            polished, v = p, value
        if best_value is None or v > best_value + TIE_TOLERANCE or (
                abs(v - best_value) <= TIE_TOLERANCE and index < best_index):
            best_value, best_index, best_p = v, index, polished

    flip, oriented = _orient(best_p, n)
    probs = _rationalize(oriented, settings.max_denominator)
    argmax = BinaryTable(n, Coords.PROB, probs)
    certified = knspace_membership(CumulantPoint.from_table(argmax)).member
    return OptimizationResult(
        n=n,
        best_value=best_value,
        argmax=argmax,
        exact_value=abs(top_cumulant(argmax)),
        certified=certified,
        start_index=best_index,
        starts=starts,
        seed=seed,
        tolerance=TIE_TOLERANCE,
        flip=flip,
    )
