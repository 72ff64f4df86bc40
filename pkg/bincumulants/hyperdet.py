"""Hyperdeterminants of 2x2, 2x2x2 and 2x2x2x2 tables in moment and cumulant coordinates"""
from fractions import Fraction
from functools import lru_cache
import logging
import random

from .algebra import (
    MultilinearPoly, SparsePoly, binary_quartic_discriminant, determinant, ml_exp,
    poly_substitute, POLYNOMIAL)
from .exceptions import AlgebraError, UnsupportedSizeError, ValidationError
from .generators import principal_minor_generators
from .transforms import (
    BinaryTable, Coords, convert, cumulant_symbol, cumulant_symbols, cumulants_to_moments,
    higher_masks, moments_to_cumulants)
from .utils import subset_label

__all__ = [
    'cayley_hyperdet', 'hyperdet3_moments', 'hyperdet_cumulants', 'schlafli_det4',
    'hyperdet_eval', 'cayley_degree', 'principal_minor_cumulants',
    'verify_principal_minor_ideal', 'DET4_ANCHOR'
]

logger = logging.getLogger(__name__)

PENCIL = 'u'

DET4_ANCHOR = {'k123': 3, 'k124': 3, 'k134': 3, 'k234': 3, 'k1234': 3}


def cayley_hyperdet(c):
    """The 2x2x2 hyperdeterminant of the entries ``c[mask]``, ``mask < 8``.

    Works over any ring; ``c[0]`` is not assumed to be 1.
    """
    c0, c1, c2, c3 = c[0], c[1], c[2], c[4]
    c12, c13, c23, c123 = c[3], c[5], c[6], c[7]
    squares = c0 * c0 * c123 * c123 + c1 * c1 * c23 * c23 + c2 * c2 * c13 * c13 + c3 * c3 * c12 * c12
    quads = c1 * c2 * c3 * c123 + c0 * c12 * c13 * c23
    mixed = (c1 * c2 * c13 * c23 + c1 * c3 * c12 * c23 + c2 * c3 * c12 * c13
             + c0 * c1 * c23 * c123 + c0 * c2 * c13 * c123 + c0 * c3 * c12 * c123)
    return squares + 4 * quads - 2 * mixed


def hyperdet3_moments():
    """The quartic 2x2x2 hyperdeterminant in moments, with ``mu_0 = 1``"""
    table = BinaryTable.symbolic(3, Coords.MOMENT)
    return cayley_hyperdet(table.entries)


def _det2_moments():
    table = BinaryTable.symbolic(2, Coords.MOMENT)
    m = table.entries
    return m[0] * m[3] - m[1] * m[2]


def _in_cumulants(moment_poly, n):
    """Rewrite a polynomial in ``m_I`` through the exponential of the cumulant polynomial"""
    k = BinaryTable.symbolic(n, Coords.CUMULANT)
    mu = cumulants_to_moments(k)
    bindings = {'m' + subset_label(mask): mu[mask] for mask in range(1, 1 << n)}
    result = poly_substitute(moment_poly, bindings)
    return result.reorder(cumulant_symbols(n))


def _moment_tensor_det4():
    """``M(x)`` for ``n = 4`` with every first order cumulant set to zero"""
    names = cumulant_symbols(4)
    coeffs = {mask: SparsePoly.variable(cumulant_symbol(mask), names) for mask in higher_masks(4)}
    return ml_exp(MultilinearPoly(4, coeffs, POLYNOMIAL))


def _normalize(poly):
    if poly.is_zero():
        return poly
    return poly.primitive()


def schlafli_det4(T, slice_on=4):
    """Hyperdeterminant of a 2x2x2x2 tensor through the binary quartic discriminant.

    ``T = F + x_s G`` is sliced on ``x_s``; the 2x2x2 hyperdeterminant of the
    pencil ``u F + G`` is a quartic in ``u`` whose discriminant is returned,
    divided by its content with a positive grevlex-leading coefficient.

    :param T: :py:class:`~bincumulants.algebra.MultilinearPoly` in four variables
    """
    if not isinstance(T, MultilinearPoly) or T.n != 4:
        raise AlgebraError('schlafli_det4 needs a multilinear polynomial in x1..x4')
    if not 1 <= slice_on <= 4:
        raise ValidationError('cannot slice on x{}'.format(slice_on))

    bit = 1 << (slice_on - 1)
    rest = [i for i in range(4) if i != slice_on - 1]
    u = SparsePoly.variable(PENCIL)

    pencil = {}
    for local in range(8):
        mask = 0
        for j in range(3):
            if local >> j & 1:
                mask |= 1 << rest[j]
        pencil[local] = u * T[mask] + T[mask | bit]

    quartic = cayley_hyperdet(pencil)
    parts = quartic.coefficients_in(PENCIL)
    logger.info('pencil quartic: %s terms by degree in u',
                {d: len(p) for d, p in sorted(parts.items())})
    a, b, c, d, e = (parts.get(deg, 0) for deg in (4, 3, 2, 1, 0))

    disc = binary_quartic_discriminant(a, b, c, d, e)
    if isinstance(disc, SparsePoly):
        disc = disc.reorder([v for v in disc.vars if v != PENCIL])
    else:
        disc = SparsePoly.constant(disc)
    logger.info('discriminant has %d terms before normalization', len(disc))
    return _normalize(disc)


@lru_cache(maxsize=None)
def _hyperdet_cumulants(n, slice_on):
    if n == 2:
        return _in_cumulants(_det2_moments(), 2)
    if n == 3:
        return _in_cumulants(hyperdet3_moments(), 3)

    det = schlafli_det4(_moment_tensor_det4(), slice_on)
    det = det.reorder(cumulant_symbols(4))
    anchor = det.coefficient(DET4_ANCHOR)
    if not anchor:
        raise AlgebraError('normalizing monomial missing from the 2x2x2x2 expansion')
    return det / anchor


def hyperdet_cumulants(n, slice_on=4):
    """Hyperdeterminant as a polynomial in the higher cumulants.

    ``n = 2`` gives ``k12``; ``n = 3`` gives ``k123^2 + 4 k12 k13 k23``;
    ``n = 4`` gives the Schlaefli expansion scaled so that
    ``k123^3 k124^3 k134^3 k234^3 k1234^3`` has coefficient 1.
    The result is cached; treat it as read only.
    """
    if n not in (2, 3, 4):
        raise UnsupportedSizeError(n, 2, 4, 'hyperdet_cumulants')
    return _hyperdet_cumulants(n, slice_on if n == 4 else 4)


def hyperdet_eval(t, n):
    """Evaluate the hyperdeterminant of a table of dimension ``n``"""
    if t.n != n:
        raise ValidationError('table has n={} but n={} was requested'.format(t.n, n))
    poly = hyperdet_cumulants(n)
    k = convert(t, Coords.CUMULANT)
    return poly.evaluate({cumulant_symbol(mask): k[mask] for mask in higher_masks(n)})


def cayley_degree(n):
    """Degree ``C_n`` of the hyperdeterminant of format ``2^n``.

    The generating function ``exp(-2x) / (1 - x)^2`` satisfies
    ``(1 - x) f' = 2 x f``, hence ``C_{m+1} = m C_m + 2 m C_{m-1}``.
    """
    if n < 0:
        raise ValidationError('cayley_degree needs n >= 0')
    prev, cur = 1, 0
    if n == 0:
        return prev
    for m in range(1, n):
        prev, cur = cur, m * cur + 2 * m * prev
    return cur


def _check_symmetric(A, n):
    if len(A) != n or any(len(row) != n for row in A):
        raise ValidationError('expected a {0}x{0} matrix'.format(n))
    for i in range(n):
        for j in range(i + 1, n):
            if Fraction(A[i][j]) != Fraction(A[j][i]):
                raise ValidationError('matrix is not symmetric at ({}, {})'.format(i + 1, j + 1))


def principal_minor_cumulants(A, n):
    """Cumulants of ``det(I + A X)``, whose moments are the principal minors of ``A``"""
    _check_symmetric(A, n)
    moments = [Fraction(1)]
    for mask in range(1, 1 << n):
        rows = [i for i in range(n) if mask >> i & 1]
        moments.append(determinant([[A[i][j] for j in rows] for i in rows]))
    return moments_to_cumulants(BinaryTable(n, Coords.MOMENT, moments))


def _random_symmetric(rng, n):
    A = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A[i][j] = A[j][i] = Fraction(rng.randrange(-999, 1000), 1000)
    return A


def verify_principal_minor_ideal(trials=100, seed=0, generators=None):
    """Check that the principal-minor relations vanish on random symmetric 4x4 matrices"""
    if generators is None:
        generators = principal_minor_generators()
    rng = random.Random(seed)
    for trial in range(trials):
        k = principal_minor_cumulants(_random_symmetric(rng, 4), 4)
        point = {cumulant_symbol(mask): k[mask] for mask in range(1, 1 << 4)}
        for index, g in enumerate(generators):
            if g.evaluate(point) != 0:
                logger.info('generator %d does not vanish at trial %d', index, trial)
                return False
    return True