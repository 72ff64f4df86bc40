from fractions import Fraction
from functools import reduce
from math import gcd
import numbers

from .exceptions import SchemaError


__all__ = [
    'is_empty', 'drop_none', 'popcount', 'elements', 'mask_of',
    'subset_label', 'parse_subset', 'parse_rational', 'format_rational',
    'lcm', 'MAX_DENOMINATOR'
]

MAX_DENOMINATOR = 10 ** 6


def is_empty(value):
    """Determine if a value is empty.

    A value is considered empty if it is ``None`` or empty string ``""``
    """
    if value is None:
        return True

    if isinstance(value, str):
        return len(value) == 0

    return False


def drop_none(d):
    """Return a dict with ``None`` values removed recursively.

    Empty strings are kept: ``""`` is the label of the empty subset.
    """
    clean = {}
    for k, v in d.items():
        if isinstance(v, dict):
            v = drop_none(v)
        elif isinstance(v, list):
            v = [drop_none(x) if isinstance(x, dict) else x for x in v]
        if v is not None:
            clean[k] = v
    return clean


def popcount(mask):
    return bin(mask).count('1')


def elements(mask):
    """Return the elements of a subset mask, ascending.

    Element ``i`` lives in bit ``i - 1``.
    """
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(items):
    """Inverse of :func:`elements`"""
    mask = 0
    for i in items:
        mask |= 1 << (i - 1)
    return mask


def subset_label(mask):
    """``{1, 3}`` -> ``"13"``; the empty set is ``""``"""
    return ''.join(str(i) for i in elements(mask))


def parse_subset(label, n):
    """Parse a subset label of strictly increasing digits in ``1..n``.

    ``"{}"`` and ``"0"`` are accepted as spellings of the empty set.

    :raises SchemaError: on anything else
    """
    if not isinstance(label, str):
        raise SchemaError('subset labels are strings', name='subset', value=label)

    text = label.strip()
    if text in ('', '{}', '0'):
        return 0

    if not text.isdigit():
        raise SchemaError('expected element digits', name='subset', value=label)

    digits = [int(c) for c in text]
    if any(d < 1 or d > n for d in digits):
        raise SchemaError('elements must lie in 1..{}'.format(n), name='subset', value=label)
    if any(a >= b for a, b in zip(digits, digits[1:])):
        raise SchemaError('elements must be strictly increasing', name='subset', value=label)

    return mask_of(digits)


def parse_rational(value, max_denominator=MAX_DENOMINATOR):
    """Read an exact rational.

    Strings (``"p/q"``, integers, decimals) and ints are exact.
    Floats are rationalized to a denominator of at most ``max_denominator``.
    """
    if isinstance(value, bool):
        raise SchemaError('booleans are not rationals', name='rational', value=value)

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if isinstance(value, float):
        return Fraction(value).limit_denominator(max_denominator)

    if isinstance(value, numbers.Real):
        return Fraction(float(value)).limit_denominator(max_denominator)

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError('not a rational', name='rational', value=value)

    raise SchemaError('not a rational', name='rational', value=value)


def format_rational(q):
    """Canonical ``"p/q"`` text; integers print without a denominator"""
    return str(Fraction(q))


def lcm(values):
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)
