"""Exact algebra: sparse polynomials, the square-free ring and exact linear algebra.

Nothing here touches floating point. Coefficients are ``int`` when
integral and :py:class:`fractions.Fraction` otherwise.
"""
from fractions import Fraction
from functools import reduce
from math import factorial, gcd
from operator import add
import logging
import random

from .exceptions import AlgebraError
from .utils import lcm

__all__ = [
    'SparsePoly', 'MultilinearPoly', 'symbols', 'ml_mul', 'ml_log', 'ml_exp',
    'poly_substitute', 'binary_quartic_discriminant', 'jacobian_rank',
    'integer_rank', 'rational_rank', 'determinant', 'is_scalar',
    'RATIONAL', 'POLYNOMIAL'
]

logger = logging.getLogger(__name__)

RATIONAL = 'rational'
POLYNOMIAL = 'polynomial'


def is_scalar(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _coeff(value):
    if isinstance(value, bool):
        raise AlgebraError('booleans are not coefficients')
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise AlgebraError('coefficients must be exact rationals, got {!r}'.format(value))


def _is_zero(value):
    if isinstance(value, SparsePoly):
        return not value.terms
    return value == 0


class SparsePoly(object):
    """Multivariate polynomial with exact rational coefficients.

    :param vars: ordered variable names
    :param terms: mapping from exponent tuples (aligned with ``vars``) to coefficients

    Instances are treated as immutable. Operands over different variable
    lists are merged: the left operand's variables come first.
    """
    __slots__ = ('vars', 'terms')

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise AlgebraError('duplicate variables in {}'.format(self.vars))

        width = len(self.vars)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != width or any(e < 0 for e in exp):
                raise AlgebraError('bad exponent {} for variables {}'.format(exp, self.vars))
            c = _coeff(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, vars, terms):
        poly = cls.__new__(cls)
        poly.vars = vars
        poly.terms = terms
        return poly

    @classmethod
    def constant(cls, value, vars=()):
        vars = tuple(vars)
        value = _coeff(value)
        return cls._raw(vars, {(0,) * len(vars): value} if value else {})

    @classmethod
    def variable(cls, name, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise AlgebraError('{} is not among {}'.format(name, vars))
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {exp: 1})

    @classmethod
    def monomial(cls, powers, coefficient=1, vars=None):
        """Build ``coefficient * prod(v ** e)`` from a ``{name: exponent}`` mapping"""
        vars = tuple(vars) if vars is not None else tuple(powers)
        return cls(vars, {tuple(powers.get(v, 0) for v in vars): coefficient})

    # alignment

    def lift(self, vars):
        """Return the exponent map re-expressed over the wider ``vars``"""
        vars = tuple(vars)
        if vars == self.vars:
            return self.terms
        try:
            index = [vars.index(v) for v in self.vars]
        except ValueError:
            raise AlgebraError('{} does not contain {}'.format(vars, self.vars))
        width = len(vars)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * width
            for pos, e in zip(index, exp):
                new[pos] = e
            out[tuple(new)] = c
        return out

    def reorder(self, vars):
        """Same polynomial over ``vars``, which must contain every variable in use"""
        vars = tuple(vars)
        keep = [i for i, v in enumerate(self.vars) if v in vars]
        dropped = [i for i in range(len(self.vars)) if i not in keep]
        for exp in self.terms:
            if any(exp[i] for i in dropped):
                raise AlgebraError('cannot drop variables in use: {}'.format(
                    [self.vars[i] for i in dropped if exp[i]]))
        narrowed = SparsePoly._raw(
            tuple(self.vars[i] for i in keep),
            {tuple(exp[i] for i in keep): c for exp, c in self.terms.items()})
        return SparsePoly._raw(vars, narrowed.lift(vars))

    def _aligned(self, other):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return vars, self.lift(vars), other.lift(vars)

    def _promote(self, other):
        if isinstance(other, SparsePoly):
            return other
        if is_scalar(other):
            return SparsePoly.constant(other, self.vars)
        return None

    # arithmetic

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        vars, a, b = self._aligned(other)
        out = dict(a)
        for exp, c in b.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return SparsePoly._raw(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            if not other:
                return SparsePoly._raw(self.vars, {})
            return SparsePoly._raw(self.vars, {e: _coeff(c * other) for e, c in self.terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented

        vars, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                exp = tuple(map(add, ea, eb))
                out[exp] = get(exp, 0) + ca * cb
        return SparsePoly._raw(vars, {e: _coeff(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        return SparsePoly._raw(self.vars, {e: _coeff(Fraction(c) / other) for e, c in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise AlgebraError('only non-negative integer powers are supported')
        result = SparsePoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison

    def _canonical(self):
        return {
            tuple(sorted((v, e) for v, e in zip(self.vars, exp) if e)): c
            for exp, c in self.terms.items()
        }

    def __eq__(self, other):
        if is_scalar(other):
            other = SparsePoly.constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._canonical().items()))

    # inspection

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(exp) for exp in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def variables(self):
        """Names of the variables that actually occur, in declared order"""
        used = [False] * len(self.vars)
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used[i] = True
        return [v for v, u in zip(self.vars, used) if u]

    def degree(self):
        """Total degree; ``-1`` for the zero polynomial"""
        return max((sum(exp) for exp in self.terms), default=-1)

    def degrees(self):
        return sorted({sum(exp) for exp in self.terms})

    def items(self):
        """Yield ``({name: exponent}, coefficient)`` pairs"""
        for exp, c in self.terms.items():
            yield {v: e for v, e in zip(self.vars, exp) if e}, c

    def coefficient(self, powers):
        """Coefficient of the monomial given as ``{name: exponent}``"""
        if any(v not in self.vars for v, e in powers.items() if e):
            return 0
        return self.terms.get(tuple(powers.get(v, 0) for v in self.vars), 0)

    def coefficients_in(self, var):
        """Split into ``{degree in var: coefficient polynomial}``.

        The coefficients keep the variable list, with ``var`` at exponent 0.
        """
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        parts = {}
        for exp, c in self.terms.items():
            d = exp[i]
            parts.setdefault(d, {})[exp[:i] + (0,) + exp[i + 1:]] = c
        return {d: SparsePoly._raw(self.vars, t) for d, t in parts.items()}

    def diff(self, var):
        """Partial derivative"""
        if var not in self.vars:
            return SparsePoly._raw(self.vars, {})
        i = self.vars.index(var)
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                out[exp[:i] + (e - 1,) + exp[i + 1:]] = c * e
        return SparsePoly._raw(self.vars, out)

    def content(self):
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients"""
        if not self.terms:
            return Fraction(0)
        coeffs = [Fraction(c) for c in self.terms.values()]
        num = reduce(gcd, (c.numerator for c in coeffs), 0)
        den = lcm(c.denominator for c in coeffs)
        return Fraction(num, den)

    def primitive(self):
        """Content-free associate whose grevlex-leading coefficient is positive"""
        if not self.terms:
            return self
        result = self / self.content()
        lead = result.sorted_terms()[0][1]
        return -result if lead < 0 else result

    def sorted_terms(self):
        """``(exponent, coefficient)`` pairs in descending grevlex order on ``vars``"""
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), tuple(-e for e in reversed(item[0]))),
            reverse=True)

    def monomial_strings(self):
        """``(coefficient, monomial text)`` pairs in grevlex order"""
        out = []
        for exp, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e:
                    factors.append('{}^{}'.format(v, e))
            out.append((c, '*'.join(factors)))
        return out

    def __str__(self):
        if not self.terms:
            return '0'
        chunks = []
        for c, mono in self.monomial_strings():
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = '{}*{}'.format(mag, mono)
            chunks.append((sign, body))
        first_sign, first = chunks[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in chunks[1:]:
            text += ' {} {}'.format(sign, body)
        return text

    def __repr__(self):
        return 'SparsePoly({})'.format(self)

    # evaluation

    def evaluate(self, bindings):
        """Exact value at a rational point.

        Denominators are cleared once so the sum runs over Python ints.
        Only variables that occur need a binding.
        """
        if not self.terms:
            return Fraction(0)

        index = {}
        for i, v in enumerate(self.vars):
            if v in bindings:
                index[i] = Fraction(_coeff(bindings[v]))
        for name in self.variables():
            if name not in bindings:
                raise AlgebraError('unbound variable {}'.format(name))

        den = lcm(q.denominator for q in index.values())
        ints = {i: (q * den).numerator for i, q in index.items()}
        scale = lcm(Fraction(c).denominator for c in self.terms.values())
        top = self.degree()

        den_powers = [den ** k for k in range(top + 1)]
        cache = {}
        acc = 0
        for exp, c in self.terms.items():
            value = (Fraction(c) * scale).numerator * den_powers[top - sum(exp)]
            for i, e in enumerate(exp):
                if e:
                    key = (i, e)
                    p = cache.get(key)
                    if p is None:
                        p = cache[key] = ints[i] ** e
                    value *= p
            acc += value
        return Fraction(acc, scale * den_powers[top])

    def substitute(self, bindings):
        return poly_substitute(self, bindings)


def symbols(*names):
    """Return one variable polynomial per name, all over the same variable list"""
    return tuple(SparsePoly.variable(name, names) for name in names)


def poly_substitute(p, bindings):
    """Substitute polynomials or rationals for the variables of ``p``.

    Returns a :py:class:`~fractions.Fraction` when every binding in use is
    a rational, a :py:class:`SparsePoly` otherwise.

    :raises AlgebraError: if a variable of ``p`` has no binding
    """
    used = p.variables()
    missing = [v for v in used if v not in bindings]
    if missing:
        raise AlgebraError('unbound variables {}'.format(missing))

    if all(is_scalar(bindings[v]) for v in used):
        return p.evaluate(bindings)

    vars = ()
    for v in used:
        target = bindings[v]
        if isinstance(target, SparsePoly):
            vars += tuple(w for w in target.vars if w not in vars)
    images = {}
    for v in used:
        target = bindings[v]
        if isinstance(target, SparsePoly):
            images[v] = SparsePoly._raw(vars, target.lift(vars))
        elif is_scalar(target):
            images[v] = SparsePoly.constant(target, vars)
        else:
            raise AlgebraError('cannot substitute {!r} for {}'.format(target, v))

    positions = [(p.vars.index(v), v) for v in used]
    powers = {}
    acc = {}
    for exp, c in p.terms.items():
        term = SparsePoly.constant(c, vars)
        for i, v in positions:
            e = exp[i]
            if e:
                key = (v, e)
                if key not in powers:
                    powers[key] = images[v] ** e
                term = term * powers[key]
        for e, coef in term.terms.items():
            s = acc.get(e, 0) + coef
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
    return SparsePoly._raw(vars, acc)


class MultilinearPoly(object):
    """Element of ``R[x_1..x_n] / <x_1^2, ..., x_n^2>``.

    :param int n: number of variables
    :param coeffs: mapping from subset mask to coefficient
    :param ring: :data:`RATIONAL` or :data:`POLYNOMIAL`; inferred when omitted
    """
    def __init__(self, n, coeffs=None, ring=None):
        self.n = n
        coeffs = dict(coeffs or {})
        for mask in coeffs:
            if not 0 <= mask < (1 << n):
                raise AlgebraError('monomial mask {} out of range for n={}'.format(mask, n))
        self.coeffs = {m: c for m, c in coeffs.items() if not _is_zero(c)}
        if ring is None:
            ring = POLYNOMIAL if any(isinstance(c, SparsePoly) for c in self.coeffs.values()) else RATIONAL
        if ring not in (RATIONAL, POLYNOMIAL):
            raise AlgebraError('unknown coefficient ring {}'.format(ring))
        if ring == RATIONAL and any(isinstance(c, SparsePoly) for c in self.coeffs.values()):
            raise AlgebraError('polynomial coefficient in a rational MultilinearPoly')
        self.ring = ring

    @classmethod
    def one(cls, n, ring=RATIONAL):
        return cls(n, {0: 1}, ring)

    def __getitem__(self, mask):
        return self.coeffs.get(mask, 0)

    def constant(self):
        return self[0]

    def _check(self, other):
        if not isinstance(other, MultilinearPoly):
            raise AlgebraError('expected a MultilinearPoly, got {!r}'.format(other))
        if other.n != self.n:
            raise AlgebraError('size mismatch: n={} and n={}'.format(self.n, other.n))
        if other.ring != self.ring:
            raise AlgebraError('ring mismatch: {} and {}'.format(self.ring, other.ring))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return MultilinearPoly(self.n, out, self.ring)

    def __neg__(self):
        return MultilinearPoly(self.n, {m: -c for m, c in self.coeffs.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultilinearPoly):
            return ml_mul(self, other)
        if is_scalar(other) or isinstance(other, SparsePoly):
            return MultilinearPoly(self.n, {m: c * other for m, c in self.coeffs.items()}, self.ring)
        return NotImplemented

    def scale(self, q):
        """Divide every coefficient by the rational ``q``"""
        return MultilinearPoly(self.n, {m: _divide(c, q) for m, c in self.coeffs.items()}, self.ring)

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self[m] == other[m] for m in keys)

    def __repr__(self):
        return 'MultilinearPoly(n={}, {})'.format(self.n, self.coeffs)


def _divide(c, q):
    if isinstance(c, SparsePoly):
        return c / q
    return Fraction(c) / q


def ml_mul(f, g):
    """Product modulo squares: only disjoint monomials combine"""
    f._check(g)
    out = {}
    for i, a in f.coeffs.items():
        for j, b in g.coeffs.items():
            if i & j:
                continue
            out[i | j] = out.get(i | j, 0) + a * b
    return MultilinearPoly(f.n, out, f.ring)


def ml_log(f):
    """Truncated logarithm ``sum_{i=1..n} (-1)^(i-1) (f - 1)^i / i``.

    :raises AlgebraError: if the constant term is not 1
    """
    if f.constant() != 1:
        raise AlgebraError('log needs constant term 1, got {}'.format(f.constant()))
    g = f - MultilinearPoly.one(f.n, f.ring)
    result = MultilinearPoly(f.n, {}, f.ring)
    power = g
    for i in range(1, f.n + 1):
        if not power.coeffs:
            break
        term = power.scale(i)
        result = result + term if i % 2 else result - term
        power = ml_mul(power, g)
    return result


def ml_exp(f):
    """Truncated exponential ``sum_{i=0..n} f^i / i!``.

    :raises AlgebraError: if the constant term is not 0
    """
    if f.constant() != 0:
        raise AlgebraError('exp needs constant term 0, got {}'.format(f.constant()))
    result = MultilinearPoly.one(f.n, f.ring)
    power = MultilinearPoly.one(f.n, f.ring)
    for i in range(1, f.n + 1):
        power = ml_mul(power, f)
        if not power.coeffs:
            break
        result = result + power.scale(factorial(i))
    return result


def binary_quartic_discriminant(a, b, c, d, e):
    """Discriminant of ``a x^4 + b x^3 + c x^2 + d x + e``.

    Works on any ring whose elements support ``+``, ``-`` and ``*``.
    """
    a2, b2, c2, d2, e2 = a * a, b * b, c * c, d * d, e * e
    a3, b3, c3, d3, e3 = a2 * a, b2 * b, c2 * c, d2 * d, e2 * e
    bd = b * d

    # grouped by powers of a and e
    part_a3 = 256 * a3 * e3
    part_a2 = a2 * (-192 * bd * e2 - 128 * c2 * e2 + 144 * c * d2 * e - 27 * d2 * d2)
    part_a1 = a * (144 * b2 * c * e2 - 6 * b2 * d2 * e - 80 * bd * c2 * e
                   + 18 * bd * c * d2 + 16 * c2 * c2 * e - 4 * c3 * d2)
    part_a0 = (-27 * b2 * b2 * e2 + 18 * b3 * c * d * e - 4 * b3 * d3
               - 4 * b2 * c3 * e + b2 * c2 * d2)
    return part_a3 + part_a2 + part_a1 + part_a0


def integer_rank(rows):
    """Rank of an integer matrix by fraction-free elimination"""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if not f:
                continue
            row = [p[col] * x - f * y for x, y in zip(m[r], p)]
            g = reduce(gcd, row, 0)
            if g > 1:
                row = [x // g for x in row]
            m[r] = row
        rank += 1
        if rank == len(m):
            break
    return rank


def _clear_row(row):
    den = lcm(Fraction(x).denominator for x in row)
    return [(Fraction(x) * den).numerator for x in row]


def rational_rank(rows):
    return integer_rank([_clear_row(r) for r in rows])


def determinant(matrix):
    """Exact determinant of a square rational matrix (Bareiss on cleared rows)"""
    size = len(matrix)
    if any(len(r) != size for r in matrix):
        raise AlgebraError('determinant needs a square matrix')
    if size == 0:
        return Fraction(1)

    dens = [lcm(Fraction(x).denominator for x in r) for r in matrix]
    m = [[(Fraction(x) * d).numerator for x in r] for r, d in zip(matrix, dens)]
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k]), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[size - 1][size - 1], reduce(lambda x, y: x * y, dens, 1))


def jacobian_rank(polys, params, seed=0, trials=3):
    """Generic rank of the Jacobian of ``polys`` with respect to ``params``.

    Partial derivatives are taken symbolically and evaluated at ``trials``
    random points with coordinates ``q / 1000``, ``1 <= q < 1000``. The rank
    at a random point never exceeds the generic rank, so the maximum over
    the trials is returned.
    """
    params = list(params)
    for p in polys:
        stray = [v for v in p.variables() if v not in params]
        if stray:
            raise AlgebraError('variables {} are not parameters'.format(stray))

    derivatives = [[p.diff(v) for v in params] for p in polys]
    rng = random.Random(seed)
    best = 0
    for trial in range(trials):
        point = {v: Fraction(rng.randrange(1, 1000), 1000) for v in params}
        rows = [[d.evaluate(point) for d in row] for row in derivatives]
        rank = rational_rank(rows)
        logger.debug('jacobian trial %d: rank %d', trial, rank)
        best = max(best, rank)
    return best
