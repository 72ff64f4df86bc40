"""Subset lattice, partition lattice and the symmetry group of the n-cube.

Subsets of ``[n] = {1..n}`` are little-endian bit masks: element ``i``
lives in bit ``i - 1``. Every table in the package is indexed this way.
"""
from functools import lru_cache
from itertools import permutations
from math import factorial

from .exceptions import UnsupportedSizeError
from .utils import elements, popcount

__all__ = [
    'full_mask', 'subsets_of', 'set_partitions', 'partitions_of', 'bell',
    'stirling2', 'necklace_count', 'CubeSymmetry', 'cube_group', 'act_on_subset',
    'by_size'
]


def full_mask(n):
    return (1 << n) - 1


def subsets_of(mask):
    """Yield every subset of ``mask``, from ``mask`` itself down to the empty set"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def by_size(masks):
    """Sort masks by cardinality, then lexicographically by elements"""
    return sorted(masks, key=lambda m: (popcount(m), elements(m)))


@lru_cache(maxsize=None)
def partitions_of(ground):
    """All set partitions of ``ground`` as a tuple of block tuples.

    Blocks are ordered by their minimum element. The empty ground set has
    the single empty partition, so the empty product of moments is 1.
    """
    if ground == 0:
        return ((),)

    low = ground & -ground
    rest = ground ^ low
    out = []
    for sub in subsets_of(rest):
        block = low | sub
        for tail in partitions_of(rest ^ sub):
            out.append((block,) + tail)
    return tuple(out)


def set_partitions(ground):
    """Yield each partition of ``ground`` exactly once, in canonical order"""
    for partition in partitions_of(ground):
        yield partition


@lru_cache(maxsize=None)
def stirling2(nu, i):
    """Stirling number of the second kind; 0 outside ``0 <= i <= nu``"""
    if i < 0 or nu < 0 or i > nu:
        return 0
    if nu == 0:
        return 1 if i == 0 else 0
    if i == 0:
        return 0
    return i * stirling2(nu - 1, i) + stirling2(nu - 1, i - 1)


def bell(nu):
    return sum(stirling2(nu, i) for i in range(nu + 1))


def necklace_count(nu, i):
    """Number of cyclically ordered set partitions of a ``nu``-set into ``i`` blocks"""
    if i < 1:
        return 0
    return factorial(i - 1) * stirling2(nu, i)


def _permute(perm, mask):
    out = 0
    for i in elements(mask):
        out |= 1 << (perm[i - 1] - 1)
    return out


class CubeSymmetry(object):
    """An element ``g = (sigma, J)`` of the hyperoctahedral group.

    It acts on subsets by ``g(I) = sigma(I) xor J``: the permutation is
    applied first, then the coordinates in ``J`` are flipped.

    :param perm: tuple with ``perm[i - 1] = sigma(i)``
    :param flip: subset mask ``J``
    """
    __slots__ = ('perm', 'flip')

    def __init__(self, perm, flip=0):
        perm = tuple(perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError('{} is not a permutation of 1..{}'.format(perm, len(perm)))
        if flip >> len(perm):
            raise ValueError('flip {} out of range for n={}'.format(flip, len(perm)))
        self.perm = perm
        self.flip = flip

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1), 0)

    @property
    def n(self):
        return len(self.perm)

    def apply(self, mask):
        return _permute(self.perm, mask) ^ self.flip

    def compose(self, other):
        """Return ``self o other``, i.e. apply ``other`` first"""
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(self.n))
        return CubeSymmetry(perm, _permute(self.perm, other.flip) ^ self.flip)

    def inverse(self):
        inv = [0] * self.n
        for i, image in enumerate(self.perm, 1):
            inv[image - 1] = i
        return CubeSymmetry(inv, _permute(inv, self.flip))

    def __eq__(self, other):
        return isinstance(other, CubeSymmetry) and (self.perm, self.flip) == (other.perm, other.flip)

    def __hash__(self):
        return hash((self.perm, self.flip))

    def __repr__(self):
        return 'CubeSymmetry(perm={}, flip={:0{}b})'.format(self.perm, self.flip, self.n)


@lru_cache(maxsize=None)
def _group(n):
    return tuple(
        CubeSymmetry(perm, flip)
        for perm in permutations(range(1, n + 1))
        for flip in range(1 << n)
    )


def cube_group(n):
    """All ``n! * 2**n`` symmetries of the n-cube, identity first"""
    if not 1 <= n <= 6:
        raise UnsupportedSizeError(n, 1, 6, 'cube_group')
    return list(_group(n))


def act_on_subset(g, mask):
    return g.apply(mask)
