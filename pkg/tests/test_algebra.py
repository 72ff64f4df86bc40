from fractions import Fraction
import random

import pytest

from bincumulants.algebra import (
    MultilinearPoly, SparsePoly, binary_quartic_discriminant, determinant, integer_rank,
    jacobian_rank, ml_exp, ml_log, ml_mul, poly_substitute, rational_rank, symbols, POLYNOMIAL, RATIONAL)
from bincumulants.exceptions import AlgebraError


def test_arithmetic():
    x, y = symbols('x', 'y')
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2
    assert len((x + y) ** 2) == 3
    assert (x - x).is_zero()
    assert 1 - x == -(x - 1)
    assert (x * y) / 2 == SparsePoly.monomial({'x': 1, 'y': 1}, Fraction(1, 2))


def test_variable_lists_are_merged():
    x = SparsePoly.variable('x')
    y = SparsePoly.variable('y')
    s = x + y
    assert s.vars == ('x', 'y')
    assert s == SparsePoly(('y', 'x'), {(1, 0): 1, (0, 1): 1})


def test_integral_coefficients_stay_int():
    x, = symbols('x')
    p = (x / 2) * 4
    assert all(type(c) is int for c in p.terms.values())


def test_floats_are_rejected():
    with pytest.raises(AlgebraError):
        SparsePoly(('x',), {(1,): 0.5})
    with pytest.raises(AlgebraError):
        SparsePoly.constant(1.0)


def test_evaluate_is_exact():
    x, y = symbols('x', 'y')
    p = x ** 2 / 3 + y
    assert p.evaluate({'x': Fraction(1, 2), 'y': 2}) == Fraction(1, 12) + 2
    with pytest.raises(AlgebraError):
        p.evaluate({'x': 1})


def test_substitute():
    x, y, t = symbols('x', 'y', 't')
    p = x * y + 1
    assert poly_substitute(p, {'x': 2, 'y': Fraction(1, 4)}) == Fraction(3, 2)
    q = poly_substitute(p, {'x': t + 1, 'y': t})
    assert isinstance(q, SparsePoly)
    assert q == t ** 2 + t + 1
    with pytest.raises(AlgebraError):
        poly_substitute(p, {'x': 1})


def test_inspection():
    x, y = symbols('x', 'y')
    p = 3 * x ** 2 * y - y + 5
    assert p.degree() == 3
    assert p.degrees() == [0, 1, 3]
    assert p.constant_term() == 5
    assert p.coefficient({'x': 2, 'y': 1}) == 3
    assert p.coefficient({'z': 1}) == 0
    assert p.diff('x') == 6 * x * y
    parts = p.coefficients_in('x')
    assert parts[2] == 3 * y
    assert parts[0] == 5 - y
    assert SparsePoly.constant(0).degree() == -1


def test_variables_reports_only_used_names():
    x, y, z = symbols('x', 'y', 'z')
    assert (x * z).variables() == ['x', 'z']
    assert (x * z).reorder(['z', 'x']).vars == ('z', 'x')
    with pytest.raises(AlgebraError):
        (x * z).reorder(['x'])


def test_content_and_primitive():
    x, y = symbols('x', 'y')
    assert (6 * x - 4 * y).content() == 2
    assert (x / 2 + y / 3).content() == Fraction(1, 6)
    assert (6 * x - 4 * y).primitive() == 3 * x - 2 * y
    assert (-6 * x + 4 * y).primitive() == 3 * x - 2 * y


def test_str():
    x, y = symbols('x', 'y')
    assert str(x ** 2 - 2 * x * y) == 'x^2 - 2*x*y'
    assert str(SparsePoly.constant(0)) == '0'
    assert str(-x + 1) == '-x + 1'


def test_multilinear_products_drop_squares():
    f = MultilinearPoly(2, {0: 1, 1: 2, 2: 3})
    g = ml_mul(f, f)
    assert g[0] == 1
    assert g[1] == 4
    assert g[3] == 12


def _random_unit(rng, n):
    coeffs = {mask: Fraction(rng.randrange(-9, 10), rng.randrange(1, 10)) for mask in range(1, 1 << n)}
    coeffs[0] = 1
    return MultilinearPoly(n, coeffs)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_log_and_exp_are_inverse(n):
    rng = random.Random(n)
    for _ in range(10):
        f = _random_unit(rng, n)
        assert ml_exp(ml_log(f)) == f
        g = ml_log(f)
        assert ml_log(ml_exp(g)) == g


def test_log_needs_unit_constant():
    with pytest.raises(AlgebraError):
        ml_log(MultilinearPoly(2, {0: 2}))
    with pytest.raises(AlgebraError):
        ml_exp(MultilinearPoly(2, {0: 1}))


def test_ring_mismatch():
    x, = symbols('x')
    rational = MultilinearPoly(1, {0: 1}, RATIONAL)
    poly = MultilinearPoly(1, {0: 1, 1: x}, POLYNOMIAL)
    with pytest.raises(AlgebraError):
        rational + poly
    with pytest.raises(AlgebraError):
        MultilinearPoly(1, {1: x}, RATIONAL)
    with pytest.raises(AlgebraError):
        MultilinearPoly(1, {2: 1})


def test_quartic_discriminant():
    # (x^2 - 1)(x^2 - 4) has roots -2, -1, 1, 2
    assert binary_quartic_discriminant(1, 0, -5, 0, 4) == 5184
    # (x^2 - 1)^2 has double roots
    assert binary_quartic_discriminant(1, 0, -2, 0, 1) == 0


def test_quartic_discriminant_symbolic():
    a, b, c, d, e = symbols('a', 'b', 'c', 'd', 'e')
    disc = binary_quartic_discriminant(a, b, c, d, e)
    assert len(disc) == 16
    assert disc.coefficient({'a': 3, 'e': 3}) == 256
    assert disc.coefficient({'b': 2, 'c': 2, 'd': 2}) == 1


def test_rank_and_determinant():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert rational_rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    assert determinant([[2, 0], [0, 3]]) == 6
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), 1]]) == Fraction(5, 12)
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([]) == 1
    with pytest.raises(AlgebraError):
        determinant([[1, 2]])


def test_determinant_of_larger_matrix():
    m = [[2, -1, 0, 3], [1, 4, 2, 0], [0, 1, 5, 1], [3, 0, 1, 2]]
    # cofactor expansion along the first row
    def minor(a, i, j):
        return [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]

    def slow(a):
        if len(a) == 1:
            return a[0][0]
        return sum((-1) ** j * a[0][j] * slow(minor(a, 0, j)) for j in range(len(a)))

    assert determinant(m) == slow(m)


def test_jacobian_rank():
    x, y = symbols('x', 'y')
    assert jacobian_rank([x * y, 2 * x * y], ['x', 'y']) == 1
    assert jacobian_rank([x, y, x + y], ['x', 'y']) == 2
    with pytest.raises(AlgebraError):
        jacobian_rank([x * y], ['x'])


def test_equality_ignores_variable_order():
    xy = SparsePoly.variable('x', ('x', 'y')) * SparsePoly.variable('y', ('x', 'y'))
    yx = SparsePoly.variable('y', ('y', 'x')) * SparsePoly.variable('x', ('y', 'x'))
    assert xy.vars != yx.vars
    assert xy == yx
    assert hash(xy) == hash(yx)
    assert len({xy, yx}) == 1
    assert (xy - yx).is_zero()


def test_multilinear_equality_ignores_variable_order():
    xy = SparsePoly(('x', 'y'), {(1, 1): 1})
    yx = SparsePoly(('y', 'x'), {(1, 1): 1})
    f = MultilinearPoly(1, {0: 1, 1: xy}, POLYNOMIAL)
    g = MultilinearPoly(1, {0: 1, 1: yx}, POLYNOMIAL)
    assert f == g


def _random_multilinear(rng, n):
    return MultilinearPoly(n, {mask: Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)) for mask in range(1 << n)})


def _as_sparse(f):
    names = ['x{}'.format(i + 1) for i in range(f.n)]
    out = SparsePoly.constant(0, names)
    for mask, c in f.coeffs.items():
        powers = {names[i]: 1 for i in range(f.n) if mask >> i & 1}
        out = out + SparsePoly.monomial(powers, c, names)
    return out


def _naive_product(f, g):
    # ordinary product, then drop every monomial with a squared variable
    coeffs = {}
    for powers, c in (_as_sparse(f) * _as_sparse(g)).items():
        if any(e > 1 for e in powers.values()):
            continue
        coeffs[sum(1 << (int(name[1:]) - 1) for name in powers)] = c
    return MultilinearPoly(f.n, coeffs)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_multilinear_product_laws(n):
    rng = random.Random(100 + n)
    for _ in range(25):
        f, g, h = (_random_multilinear(rng, n) for _ in range(3))
        assert ml_mul(f, g) == _naive_product(f, g)
        assert ml_mul(f, g) == ml_mul(g, f)
        assert ml_mul(ml_mul(f, g), h) == ml_mul(f, ml_mul(g, h))
        assert ml_mul(f, g + h) == ml_mul(f, g) + ml_mul(f, h)
        assert ml_mul(f, MultilinearPoly.one(n)) == f


def _poly_product(p, q):
    # coefficient lists, highest degree first
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _sylvester(f, g):
    m, n = len(f) - 1, len(g) - 1
    rows = [[0] * i + list(f) + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * i + list(g) + [0] * (m - 1 - i) for i in range(m)]
    return rows


def test_quartic_discriminant_vanishes_on_repeated_roots():
    rng = random.Random(5)
    for _ in range(50):
        a = rng.choice([-3, -2, -1, 1, 2, 3])
        r = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        p, q = rng.randrange(-6, 7), rng.randrange(-6, 7)
        f = _poly_product([a, -2 * a * r, a * r * r], [1, p, q])
        assert binary_quartic_discriminant(*f) == 0


def test_quartic_discriminant_matches_resultant():
    rng = random.Random(9)
    for _ in range(50):
        f = [rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randrange(-6, 7) for _ in range(4)]
        derivative = [4 * f[0], 3 * f[1], 2 * f[2], f[3]]
        assert len(_sylvester(f, derivative)) == 7
        assert binary_quartic_discriminant(*f) == determinant(_sylvester(f, derivative)) / f[0]
